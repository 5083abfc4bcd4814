#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "filcat/closedcat.hpp"
#include "filcat/germcat.hpp"

// Literal, definition-level versions of the fast core-based operations.
// Families of subsets are bitsets indexed by subset mask, so they need
// |S| <= 16; most routines are only practical far below that.
namespace filcat::oracles {

using Mask = std::uint32_t;
using Family = boost::dynamic_bitset<std::uint64_t>;

Family empty_family(std::size_t n);
std::vector<Mask> members(const Family& fam);

/// {X | some member of `base` is inside X}.
Family up_closure(std::size_t n, const std::vector<Mask>& base);
/// Upward closure of all finite intersections of `base`; {S} for an empty base.
Family fg_family(std::size_t n, const std::vector<Mask>& base);
/// The least element of the closure of `base` under finite intersection,
/// which exists because the closure is finite and closed under meets.
/// Works for n <= 32 where families cannot be materialized.
Mask fg_least(std::size_t n, const std::vector<Mask>& base);

/// Contains S, closed upward and under pairwise intersection.
bool is_filter_family(std::size_t n, const Family& fam);
/// Every filter family on an n-set, found by scanning all 2^(2^n) families.
/// Requires n <= 4.
std::vector<Family> all_filter_families(std::size_t n);

/// {X subset of S | member_filter(F, X)}.
Family family_of(const Filter& F);
/// The reverse-inclusion order on families: F <= G iff every member of G is in F.
bool family_leq(const Family& f, const Family& g);
/// Fg{ f(X) | X in F }.
Family push_family(const PartialFn& f, const Family& F);
/// Fg{ f^-1(Y) | Y in G }.
Family pull_family(const PartialFn& f, const Family& G);

/// For every member Y of G, f^-1(Y) is a member of F.
bool local_quantified(const PartialFn& f, const Family& F, const Family& G);
/// Some member X of F has dd(f) & X == dd(g) & X with f == g on dd(f) & dd(g) & X.
bool germ_equiv_quantified(const PartialFn& f, const PartialFn& g, const Family& F);

/// The sets F' box g = {(s,t) | s in F', t in g(s)} for every member F' of F
/// and every choice g(s) in G, as masks over S x T.
std::vector<Mask> box_base(const Filter& F, const Filter& G);
/// For each member G' of G, the codes of the germs of admissible partial
/// functions H -> T that carry some member of H into G', as masks over the
/// ground of `hom`.
std::vector<Mask> internal_hom_base(const HomObject& hom);

Mask mask_of(const Subset& x);
Subset subset_of(const GroundSet& s, Mask m);

}  // namespace filcat::oracles
