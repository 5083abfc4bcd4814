#pragma once

// Internal plumbing shared by the law suites.

#include <functional>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filcat/laws.hpp"

namespace filcat::detail {

using Visit = std::function<bool(const Instance&)>;
using Check = std::optional<Failure>;

struct LawDef {
  std::string name;
  bool randomized = false;
  /// Feeds every case to `visit` in canonical order; stops when it returns false.
  std::function<void(const LawContext&, const Visit&)> enumerate;
  std::function<Check(const LawContext&, const Instance&)> check;
};

std::vector<LawDef> finset_laws();
std::vector<LawDef> filter_laws();
std::vector<LawDef> germ_laws();
std::vector<LawDef> factorization_laws();
std::vector<LawDef> limit_laws();
std::vector<LawDef> monoidal_laws();
std::vector<LawDef> closed_laws();
std::vector<LawDef> boundary_laws();
LawDef oracle_law();

/// Filters of one universe with their hom sets computed on demand.
class World {
 public:
  explicit World(std::vector<Filter> filters) : filters_(std::move(filters)) {}
  const std::vector<Filter>& filters() const noexcept { return filters_; }
  std::size_t size() const noexcept { return filters_.size(); }
  const Filter& operator[](std::size_t i) const { return filters_[i]; }
  const std::vector<FilArrow>& hom(std::size_t i, std::size_t j);

 private:
  std::vector<Filter> filters_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FilArrow>> homs_;
};

inline Check ok() { return std::nullopt; }
Failure fail(std::string message);
Failure fail(std::string message, std::vector<std::pair<std::string, FilArrow>> evidence);

std::string show(const Filter& F);
std::string show(const FilArrow& a);
std::string show(const PartialFn& f);

/// Composition through the context, so a faulty composition reaches every suite.
FilArrow compose(const LawContext& ctx, const FilArrow& psi, const FilArrow& phi);

/// Partial functions S -> T, cached per pair of grounds.
class PfunCache {
 public:
  const std::vector<PartialFn>& get(const GroundSet& S, const GroundSet& T);

 private:
  std::deque<std::pair<std::pair<GroundSet, GroundSet>, std::vector<PartialFn>>> cache_;
};

}  // namespace filcat::detail
