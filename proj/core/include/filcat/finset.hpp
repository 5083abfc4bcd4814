#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filcat/atom.hpp"

namespace filcat {

/// A finite set of distinct atoms held in canonical (sorted) order.
/// Copies share the atom storage.
class GroundSet {
 public:
  GroundSet();
  /// Sorts `atoms`; a repeated atom throws Errc::duplicate_atom.
  explicit GroundSet(std::vector<Atom> atoms);
  static GroundSet of_labels(std::initializer_list<std::string_view> labels);

  std::size_t size() const noexcept { return atoms_->size(); }
  bool empty() const noexcept { return atoms_->empty(); }
  const std::vector<Atom>& atoms() const noexcept { return *atoms_; }
  const Atom& operator[](std::size_t i) const { return (*atoms_)[i]; }

  std::optional<std::size_t> index_of(const Atom& a) const;
  /// Like index_of, but throws Errc::unknown_atom.
  std::size_t require_index(const Atom& a) const;
  bool contains(const Atom& a) const { return index_of(a).has_value(); }

  friend bool operator==(const GroundSet& a, const GroundSet& b);
  std::string to_string() const;

 private:
  std::shared_ptr<const std::vector<Atom>> atoms_;
};

/// S x T with Pair atoms. Index of (i, j) is i * |T| + j.
GroundSet product_ground(const GroundSet& s, const GroundSet& t);
/// Disjoint union with Tag(i, -) atoms, i the position in `parts`.
GroundSet coproduct_ground(std::span<const GroundSet> parts);

/// A subset of a ground set as a bit-vector over ground positions.
class Subset {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  explicit Subset(GroundSet ground);
  Subset(GroundSet ground, Bits bits);

  static Subset full(GroundSet ground);
  static Subset of(GroundSet ground, std::span<const Atom> members);
  static Subset of_labels(GroundSet ground, std::initializer_list<std::string_view> labels);
  static Subset from_indices(GroundSet ground, std::span<const std::size_t> indices);
  /// Bit i of `mask` selects ground position i. Requires |ground| <= 64.
  static Subset from_mask(GroundSet ground, std::uint64_t mask);

  const GroundSet& ground() const noexcept { return ground_; }
  const Bits& bits() const noexcept { return bits_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t i) const { return bits_.test(i); }
  bool contains(const Atom& a) const;
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }

  std::vector<std::size_t> indices() const;
  std::vector<Atom> atoms() const;
  std::uint64_t mask() const;

  bool is_subset_of(const Subset& other) const;
  Subset complement() const;

  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b);
  friend bool operator<(const Subset& a, const Subset& b);

  std::string to_string() const;

 private:
  GroundSet ground_;
  Bits bits_;
};

/// The members of `s` as a ground set of their own.
GroundSet sub_ground(const Subset& s);

/// All 2^|S| subsets in mask order. |S| must be small (<= 24).
std::vector<Subset> all_subsets(const GroundSet& s);

/// Explicit finite partial function. `table()[i]` is the cod position of
/// dom atom i, or `undefined`.
class PartialFn {
 public:
  static constexpr std::size_t undefined = static_cast<std::size_t>(-1);

  PartialFn(GroundSet dom, GroundSet cod);
  /// Validates that every defined entry is a cod position.
  PartialFn(GroundSet dom, GroundSet cod, std::vector<std::size_t> table);

  static PartialFn from_pairs(GroundSet dom, GroundSet cod, std::span<const Atom::Entry> graph);
  static PartialFn identity(GroundSet s);

  const GroundSet& dom() const noexcept { return dom_; }
  const GroundSet& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  bool defined_at(std::size_t i) const { return table_[i] != undefined; }
  std::optional<std::size_t> at(std::size_t i) const;
  std::optional<Atom> operator()(const Atom& a) const;

  void set(std::size_t i, std::size_t j);
  void unset(std::size_t i) { table_[i] = undefined; }

  bool is_total() const;
  bool injective_on(const Subset& d) const;
  std::vector<Atom::Entry> graph() const;

  friend bool operator==(const PartialFn& a, const PartialFn& b);
  std::string to_string() const;

 private:
  GroundSet dom_, cod_;
  std::vector<std::size_t> table_;
};

Subset dd_of(const PartialFn& f);
Subset range_of(const PartialFn& f);
/// g o f; requires cod(f) == dom(g), else Errc::incompatible_composition.
PartialFn compose_partial(const PartialFn& g, const PartialFn& f);
PartialFn restrict_partial(const PartialFn& f, const Subset& d);
Subset image_subset(const PartialFn& f, const Subset& d);
Subset preimage_subset(const PartialFn& f, const Subset& d);

/// Visits every tuple in {0..m-1}^n in lexicographic order; stops early if
/// `visit` returns false. Returns false iff stopped early.
bool for_each_tuple(std::size_t n, std::size_t m,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit);

/// m^n with 0^0 = 1; saturates at SIZE_MAX.
std::size_t checked_power(std::size_t m, std::size_t n);

}  // namespace filcat
