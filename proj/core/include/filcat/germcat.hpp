#pragma once

#include <string>
#include <vector>

#include "filcat/filters.hpp"

namespace filcat {

/// An equivalence class f/F of partial functions admissible for F.
///
/// Stored by its canonical representative: the restriction of any member to
/// core F, which is defined on all of core F.
class Germ {
 public:
  /// `rep` must be defined exactly on core(source) (Errc::invariant otherwise).
  Germ(Filter source, PartialFn rep);

  const Filter& source() const noexcept { return source_; }
  const GroundSet& target_ground() const noexcept { return rep_.cod(); }
  const PartialFn& rep() const noexcept { return rep_; }

  friend bool operator==(const Germ& a, const Germ& b) {
    return a.source_ == b.source_ && a.rep_ == b.rep_;
  }

 private:
  Filter source_;
  PartialFn rep_;
};

/// An arrow F -> G of Fil: a germ admissible for F and local for G.
/// Locality (image of the core inside core G) is checked on construction.
class FilArrow {
 public:
  FilArrow(Germ germ, Filter target);

  const Germ& germ() const noexcept { return germ_; }
  const Filter& source() const noexcept { return germ_.source(); }
  const Filter& target() const noexcept { return target_; }
  const PartialFn& rep() const noexcept { return germ_.rep(); }

  friend bool operator==(const FilArrow& a, const FilArrow& b) {
    return a.germ_ == b.germ_ && a.target_ == b.target_;
  }

 private:
  Germ germ_;
  Filter target_;
};

/// dd(f) belongs to F.
bool is_admissible(const PartialFn& f, const Filter& F);
/// Every member of G pulls back into F; decided by core F <= f^-1(core G).
bool is_local(const PartialFn& f, const Filter& F, const Filter& G);
/// f and g agree on some member of F (decided on core F).
bool germ_equiv(const PartialFn& f, const PartialFn& g, const Filter& F);

/// Throws Errc::not_admissible when dd(f) is not in F.
Germ germ_of(const PartialFn& f, const Filter& F);
/// Throws Errc::not_admissible or Errc::not_local.
FilArrow make_arrow(const Filter& F, const Filter& G, const PartialFn& f);
FilArrow identity_arrow(const Filter& F);
/// psi o phi; throws Errc::incompatible_composition unless target(phi) == source(psi).
FilArrow compose_arrows(const FilArrow& psi, const FilArrow& phi);

/// phi(F') for F' <= source(phi); Errc::not_subfilter otherwise.
Filter germ_push(const Germ& phi, const Filter& sub);
/// phi^-1(G) = f^-1(G) meet source(phi).
Filter germ_pull(const Germ& phi, const Filter& G);
/// (f/F)/F' for F' <= F.
Germ germ_restrict(const Germ& phi, const Filter& sub);

/// Fil(F, G), one arrow per map core F -> core G, in lexicographic order of
/// the value table.
std::vector<FilArrow> hom_set(const Filter& F, const Filter& G);
std::size_t hom_set_size(const Filter& F, const Filter& G);
/// Germs of all admissible partial functions H -> T: one per map core H -> T.
std::vector<Germ> enum_admissible_germs(const Filter& H, const GroundSet& T);

/// The germ's canonical rep extended to a total function when T is non-empty
/// (off-core points go to the first atom of core G when G is proper, else of T).
PartialFn total_representative(const FilArrow& phi);

}  // namespace filcat
