#pragma once

#include <span>
#include <string>
#include <vector>

#include "filcat/finset.hpp"

namespace filcat {

/// A family of subsets of one ground set, meant to generate a filter.
struct FilterBase {
  GroundSet ground;
  std::vector<Subset> sets;
};

/// A filter on a finite ground set.
///
/// Every filter on a finite set is principal, so it is stored as its core:
/// X is a member iff core <= X <= ground. The improper filter (every subset,
/// including the empty one) is the filter with an empty core.
class Filter {
 public:
  /// `core` must be a subset of `ground`, else Errc::ground_mismatch.
  Filter(GroundSet ground, Subset core);
  explicit Filter(Subset core);

  /// The filter {S} on S.
  static Filter top(GroundSet ground);
  static Filter improper(GroundSet ground);

  const GroundSet& ground() const noexcept { return ground_; }
  const Subset& core() const noexcept { return core_; }
  bool is_proper() const { return !core_.empty(); }

  friend bool operator==(const Filter& a, const Filter& b) { return a.core_ == b.core_; }
  /// `{ground}/{core}`, used in diagnostics.
  std::string to_string() const;

 private:
  GroundSet ground_;
  Subset core_;
};

/// The filter {{0}} on the one-atom set {0}: the terminal object u.
Filter unit_filter();

/// Least filter containing every base set; the empty base generates {S}.
Filter fg_filter(const FilterBase& base);
bool member_filter(const Filter& f, const Subset& x);
/// F <= G in the reverse-inclusion order, i.e. core F <= core G.
/// Different grounds throw Errc::ground_mismatch.
bool leq_filter(const Filter& f, const Filter& g);
/// Both throw Errc::empty_join on an empty list and Errc::ground_mismatch on
/// mixed grounds.
Filter join_filters(std::span<const Filter> fs);
Filter meet_filters(std::span<const Filter> fs);
/// All F' <= F, one per subset of core F, in mask order of the core.
std::vector<Filter> subfilters_of(const Filter& f);
/// f(F), the filter generated by the images of members of F.
Filter pushforward_filter(const PartialFn& f, const Filter& F);
/// f^-1(G), the filter generated by the preimages of members of G.
Filter pullback_filter(const PartialFn& f, const Filter& G);

}  // namespace filcat
