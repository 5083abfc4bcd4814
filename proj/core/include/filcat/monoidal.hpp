#pragma once

#include <map>
#include <vector>

#include "filcat/germcat.hpp"

namespace filcat {

/// F box G on S x T; its core is core F x core G.
Filter box_filter(const Filter& F, const Filter& G);
/// The slice test {s | {t | (s,t) in X} in G} in F. X must be over S x T.
bool box_member(const Filter& F, const Filter& G, const Subset& X);

/// The slice data of X over S x T: which s have their slice in G, and that
/// slice for each of them.
class BoxWitness {
 public:
  BoxWitness(Subset big_f, std::map<std::size_t, Subset> slices);

  /// {s in S | {t | (s,t) in X} in G}.
  const Subset& big_f() const noexcept { return big_f_; }
  /// The slice at S-position s; throws Errc::outside_domain unless s is in big_f.
  const Subset& small_h(std::size_t s) const;
  const Subset& small_h(const Atom& s) const;

 private:
  Subset big_f_;
  std::map<std::size_t, Subset> slices_;
};

BoxWitness box_witness(const Filter& F, const Filter& G, const Subset& X);
Subset big_f(const Filter& F, const Filter& G, const Subset& X);

/// (s, t) -> (f(s), g(t)), defined on dd(f) x dd(g).
PartialFn box_partial(const PartialFn& f, const PartialFn& g);
/// phi box psi : F box G -> F' box G'.
FilArrow box_arrow(const FilArrow& phi, const FilArrow& psi);

/// alpha : D box (D' box D'') -> (D box D') box D''.
FilArrow associator(const Filter& D, const Filter& D1, const Filter& D2);
/// lambda : u box D -> D.
FilArrow left_unitor(const Filter& D);
/// rho : D box u -> D.
FilArrow right_unitor(const Filter& D);

}  // namespace filcat
