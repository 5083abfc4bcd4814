#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "filcat/germcat.hpp"
#include "filcat/workspace.hpp"

namespace filcat {

/// The finite universe a law is checked over: every filter on every subset of
/// the alphabet with at most `max_ground` atoms.
struct Universe {
  std::size_t max_ground = 2;
  /// Labels to draw atoms from; empty means "0", "1", ... as needed.
  std::vector<std::string> alphabet;
  bool include_improper = true;
  /// Seed for the randomized suites.
  std::uint64_t seed = 20240611;
  /// Instances drawn by each randomized suite.
  std::size_t samples = 400;
  /// Ground bound for the test objects in the epi/monic cancellability search.
  std::size_t brute_ground = 4;
  /// Ground bound for the oracle cross-check.
  std::size_t oracle_ground = 3;
  std::size_t hom_cap = 4096;

  std::vector<std::string> letters(std::size_t n) const;
  /// All subsets of the first max(max_ground, n) letters with at most n atoms.
  std::vector<GroundSet> grounds(std::size_t n) const;
  std::vector<GroundSet> grounds() const { return grounds(max_ground); }
  /// Every filter on grounds(n), respecting include_improper.
  std::vector<Filter> filters(std::size_t n) const;
  std::vector<Filter> filters() const { return filters(max_ground); }
  std::string summary() const;
};

/// One filter per subset of S, in mask order; the improper one is first.
std::vector<Filter> all_filters_on(const GroundSet& S, bool include_improper = true);
/// Every partial function S -> T, lexicographic by table with "undefined" last.
std::vector<PartialFn> all_partial_functions(const GroundSet& S, const GroundSet& T);

using ComposeFn = std::function<FilArrow(const FilArrow&, const FilArrow&)>;

struct LawContext {
  Universe universe;
  /// Composition used by the suites; replaced only to test the harness itself.
  ComposeFn compose = compose_arrows;
  /// Name of the fault behind `compose`, if any; recorded in witnesses.
  std::string fault;
};

/// A context whose composition is faulty_compose(fault).
LawContext with_fault(LawContext ctx, std::string_view fault);

/// "compose-swap": composition that exchanges the values of the first two core
/// points of every composite. Anything else throws Errc::invalid_argument.
ComposeFn faulty_compose(std::string_view fault);

/// The objects a law case is about. Witness files name them S0.., X0.., F0..,
/// f0.. and a0..; anything else in a witness file is a helper.
struct Instance {
  std::vector<GroundSet> sets;
  std::vector<Subset> subsets;
  std::vector<Filter> filters;
  std::vector<PartialFn> pfuns;
  std::vector<FilArrow> arrows;

  Instance& add(GroundSet s) { sets.push_back(std::move(s)); return *this; }
  Instance& add(Subset x) { subsets.push_back(std::move(x)); return *this; }
  Instance& add(Filter f) { filters.push_back(std::move(f)); return *this; }
  Instance& add(PartialFn f) { pfuns.push_back(std::move(f)); return *this; }
  Instance& add(FilArrow a) { arrows.push_back(std::move(a)); return *this; }

  /// Accessors throw Errc::invalid_argument when the instance is too short.
  const GroundSet& set(std::size_t i) const;
  const Subset& subset(std::size_t i) const;
  const Filter& filter(std::size_t i) const;
  const PartialFn& pfun(std::size_t i) const;
  const FilArrow& arrow(std::size_t i) const;

  Workspace to_workspace() const;
  static Instance from_workspace(const Workspace& ws);
};

/// A failed case: what went wrong and optional arrows that show it.
struct Failure {
  std::string message;
  std::vector<std::pair<std::string, FilArrow>> evidence;
};

struct LawReport {
  std::string law;
  std::string universe;
  std::size_t cases = 0;
  bool passed = true;
  std::string message;
  /// Replayable workspace text (with a `# law:` header) when the law failed.
  std::string witness;
  bool randomized = false;
  std::uint64_t seed = 0;
  double seconds = 0;
};

std::vector<std::string> law_names();
/// Throws Errc::unknown_law.
LawReport run_law(std::string_view name, const LawContext& ctx);
/// Every law, ordered by name.
std::vector<LawReport> run_all(const LawContext& ctx);
/// Every dual-path operation against its literal definition.
LawReport oracle_cross_check(const LawContext& ctx);
/// Re-checks the single instance stored in a witness file.
LawReport replay_witness(std::string_view text, const LawContext& ctx);

}  // namespace filcat
