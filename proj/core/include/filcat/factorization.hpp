#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filcat/germcat.hpp"

namespace filcat {

/// phi = mono_part o epi_part through mid_filter = phi(F).
struct FactorPair {
  FilArrow epi_part;
  Filter mid_filter;
  FilArrow mono_part;
};

/// phi(F) = G, i.e. the rep maps core F onto core G.
bool is_e(const FilArrow& phi);
/// The rep is one-one on core F.
bool is_m(const FilArrow& phi);
FactorPair factor(const FilArrow& phi);

/// Epimorphisms of Fil are exactly the E-arrows and monomorphisms exactly the
/// M-arrows; brute-force cancellability checks live in the law harness.
bool is_epi(const FilArrow& phi);
bool is_monic(const FilArrow& phi);
bool is_iso(const FilArrow& phi);
/// The two-sided inverse when phi is an isomorphism.
std::optional<FilArrow> inverse_arrow(const FilArrow& phi);

/// The unique delta with delta o e = a and m o delta = b, for a commuting
/// square b o e = m o a with e in E and m in M. Searches Fil(target e, target a).
/// Throws Errc::class_violation, Errc::non_commuting or Errc::no_diagonal.
FilArrow diagonal_fill(const FilArrow& e, const FilArrow& a, const FilArrow& b, const FilArrow& m);

/// mu(G) for mu: G -> F. Constant on ~-classes of M-arrows.
Filter subobject_image(const FilArrow& mu);
/// 1_S / F' as an M-arrow F' -> F, for F' <= F.
FilArrow subobject_of(const Filter& F, const Filter& sub);
/// Some f with m2 o f = m, when m <= m2 in the subobject preorder.
std::optional<FilArrow> subobject_factor(const FilArrow& m, const FilArrow& m2);

/// The poset F / M of M-subobjects of F and its comparison with Fil F.
struct SubobjectPoset {
  Filter object;
  /// One canonical representative 1_S / F' per class, ordered like subfilters_of(object).
  std::vector<FilArrow> representatives;
  /// images[i] = subobject_image(representatives[i]).
  std::vector<Filter> images;
  /// leq[i][j]: representatives[i] <= representatives[j] by diagram search.
  std::vector<std::vector<bool>> leq;
  /// Number of M-arrows into `object` that were sorted into classes.
  std::size_t arrows_examined = 0;
  /// Number of ~-classes found among the examined arrows.
  std::size_t classes_found = 0;
  /// Empty when the image map was certified an order isomorphism onto Fil F.
  std::string certificate_failure;
};

/// Enumerates every M-arrow into F from every filter on every subset of F's
/// ground set, sorts them into ~-classes by diagram search, and certifies that
/// subobject_image is an order isomorphism onto subfilters_of(F) with
/// subobject_of as its inverse.
SubobjectPoset m_subobject_poset(const Filter& F);

}  // namespace filcat
