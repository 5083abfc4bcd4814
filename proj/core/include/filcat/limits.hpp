#pragma once

#include <span>
#include <vector>

#include "filcat/germcat.hpp"

namespace filcat {

/// An apex with legs out of it (a cone) or into it (a cocone).
struct Cone {
  Filter apex;
  std::vector<FilArrow> legs;
};

/// H <= F on which the representatives of alpha and beta agree, with the
/// inclusion 1_S/H : H -> F. Throws Errc::not_parallel.
struct Equalizer {
  Filter object;
  FilArrow inclusion;
};
Equalizer equalizer(const FilArrow& alpha, const FilArrow& beta);
/// The unique h : K -> H with inclusion o h = gamma, for gamma equalizing
/// alpha and beta. Throws Errc::non_commuting when gamma does not equalize.
FilArrow equalizer_mediator(const Equalizer& eq, const FilArrow& alpha, const FilArrow& beta,
                            const FilArrow& gamma);

/// The product filter with its projections. One factor gives that factor with
/// its identity; none gives the unit filter u. Pairs nest to the left.
Cone product_fil(std::span<const Filter> fs);
/// The unique arrow K -> u.
FilArrow terminal_arrow(const Filter& K);
/// The unique tupling K -> P of legs_i : K -> F_i.
FilArrow product_mediator(const Cone& product, std::span<const FilArrow> legs);

/// Meet of the images of M-arrows into F, with legs phi_i into each source so
/// that m_i o phi_i is the inclusion. An empty list gives F itself.
/// Throws Errc::class_violation for non-M input.
Cone pullback_monos(const Filter& F, std::span<const FilArrow> ms);

/// Pullback of phi : A -> C and psi : B -> C, built as an equalizer inside A x B.
/// legs[0] goes to A and legs[1] to B. Throws Errc::incompatible_composition.
Cone pullback_cospan(const FilArrow& phi, const FilArrow& psi);
/// The unique K -> P with legs p : K -> A and q : K -> B.
FilArrow pullback_mediator(const Cone& pullback, const FilArrow& p, const FilArrow& q);

/// The disjoint union filter with its injections (Tag atoms).
Cone coproduct_fil(std::span<const Filter> fs);
/// The unique lambda : C -> K with lambda o iota_i = xi_i, each xi_i : F_i -> K.
FilArrow coproduct_mediator(const Cone& coproduct, std::span<const FilArrow> xi, const Filter& K);

/// core F as a subset of its ground.
Subset core_of(const Filter& F);
/// The representative as a total function core F -> core G between the
/// sub-ground sets of the two cores.
PartialFn core_of_arrow(const FilArrow& phi);
/// The principal filter {S}.
Filter unit_L(const GroundSet& S);

/// The bijection Fil(L(S), G) = Set(S, core G) in both directions.
/// Total maps S -> core G are PartialFn from S into sub_ground(core G).
struct CoreAdjunction {
  GroundSet S;
  Filter G;
  PartialFn transpose(const FilArrow& phi) const;
  FilArrow untranspose(const PartialFn& f) const;
  /// Every arrow L(S) -> G, lexicographic by table.
  std::vector<FilArrow> arrows() const;
  /// Every total S -> core G, lexicographic by table.
  std::vector<PartialFn> functions() const;
};
CoreAdjunction core_adjunction_witness(const GroundSet& S, const Filter& G);

}  // namespace filcat
