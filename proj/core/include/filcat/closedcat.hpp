#pragma once

#include <cstddef>

#include "filcat/germcat.hpp"

namespace filcat {

inline constexpr std::size_t default_hom_cap = 4096;

/// The internal hom G^H. Its ground has one GermCode atom per map
/// core H -> T (T the set of G); its core holds the germs landing in core G,
/// i.e. Fil(H, G).
struct HomObject {
  Filter filter;
  Filter source_h;
  Filter target_g;
};

/// Throws Errc::size_cap when |T|^|core H| exceeds `cap`.
HomObject internal_hom(const Filter& G, const Filter& H, std::size_t cap = default_hom_cap);

/// The GermCode atom of a germ: its filter's ground and core plus the table
/// on the core.
Atom encode_germ(const Germ& g);
/// Inverse of encode_germ; values are resolved in T. Throws Errc::invalid_argument
/// for atoms that are not germ codes and Errc::unknown_atom for values outside T.
Germ decode_germ(const Atom& code, const GroundSet& T);

/// gamma^H : G^H -> G'^H, kappa -> gamma o kappa.
FilArrow hom_action_left(const FilArrow& gamma, const Filter& H, std::size_t cap = default_hom_cap);
/// G^rho : G^H -> G^H', kappa -> kappa o rho, for rho : H' -> H.
FilArrow hom_action_right(const FilArrow& rho, const Filter& G, std::size_t cap = default_hom_cap);

/// chi(kappa) : F -> G^H for kappa : F box H -> G; s -> [w -> kappa(s, w)].
FilArrow curry(const Filter& F, const Filter& H, const FilArrow& kappa, std::size_t cap = default_hom_cap);
/// The same, into an already built G^H.
FilArrow curry(const HomObject& hom, const Filter& F, const FilArrow& kappa);
/// The inverse of curry: (s, w) -> rho(s)(w), an arrow F box H -> G.
FilArrow uncurry(const HomObject& hom, const FilArrow& rho);

/// eta_F : F -> (F box H)^H, s -> [w -> (s, w)].
FilArrow eta_unit(const Filter& F, const Filter& H, std::size_t cap = default_hom_cap);
/// epsilon_G : G^H box H -> G, (kappa, w) -> kappa(w).
FilArrow epsilon_counit(const Filter& G, const Filter& H, std::size_t cap = default_hom_cap);

}  // namespace filcat
