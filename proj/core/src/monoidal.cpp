#include "filcat/monoidal.hpp"

#include "filcat/errors.hpp"

namespace filcat {

namespace {

Subset slice(const Subset& X, std::size_t s, const GroundSet& T) {
  Subset out(T);
  for (std::size_t t = 0; t < T.size(); ++t)
    if (X.contains(s * T.size() + t)) out.insert(t);
  return out;
}

void require_over_product(const Filter& F, const Filter& G, const Subset& X) {
  if (X.ground().size() != F.ground().size() * G.ground().size() ||
      !(X.ground() == product_ground(F.ground(), G.ground())))
    throw Error(Errc::ground_mismatch, "subset is not over the product of the two sets");
}

}  // namespace

Filter box_filter(const Filter& F, const Filter& G) {
  auto P = product_ground(F.ground(), G.ground());
  Subset core(P);
  for (auto s : F.core().indices())
    for (auto t : G.core().indices()) core.insert(s * G.ground().size() + t);
  return Filter(std::move(core));
}

BoxWitness::BoxWitness(Subset big_f, std::map<std::size_t, Subset> slices)
    : big_f_(std::move(big_f)), slices_(std::move(slices)) {}

const Subset& BoxWitness::small_h(std::size_t s) const {
  auto it = slices_.find(s);
  if (it == slices_.end())
    throw Error(Errc::outside_domain, "h is only defined on F_{F,G,X} = " + big_f_.to_string());
  return it->second;
}

const Subset& BoxWitness::small_h(const Atom& s) const { return small_h(big_f_.ground().require_index(s)); }

BoxWitness box_witness(const Filter& F, const Filter& G, const Subset& X) {
  require_over_product(F, G, X);
  Subset bf(F.ground());
  std::map<std::size_t, Subset> slices;
  for (std::size_t s = 0; s < F.ground().size(); ++s) {
    auto h = slice(X, s, G.ground());
    if (member_filter(G, h)) {
      bf.insert(s);
      slices.emplace(s, std::move(h));
    }
  }
  return BoxWitness(std::move(bf), std::move(slices));
}

Subset big_f(const Filter& F, const Filter& G, const Subset& X) { return box_witness(F, G, X).big_f(); }

bool box_member(const Filter& F, const Filter& G, const Subset& X) {
  return member_filter(F, big_f(F, G, X));
}

PartialFn box_partial(const PartialFn& f, const PartialFn& g) {
  PartialFn out(product_ground(f.dom(), g.dom()), product_ground(f.cod(), g.cod()));
  const auto m = g.dom().size();
  const auto m2 = g.cod().size();
  for (std::size_t s = 0; s < f.dom().size(); ++s) {
    if (!f.defined_at(s)) continue;
    for (std::size_t t = 0; t < m; ++t)
      if (g.defined_at(t)) out.set(s * m + t, *f.at(s) * m2 + *g.at(t));
  }
  return out;
}

FilArrow box_arrow(const FilArrow& phi, const FilArrow& psi) {
  return FilArrow(Germ(box_filter(phi.source(), psi.source()), box_partial(phi.rep(), psi.rep())),
                  box_filter(phi.target(), psi.target()));
}

FilArrow associator(const Filter& D, const Filter& D1, const Filter& D2) {
  auto src = box_filter(D, box_filter(D1, D2));
  auto dst = box_filter(box_filter(D, D1), D2);
  PartialFn rep(src.ground(), dst.ground());
  for (auto i : src.core().indices()) {
    const auto& a = src.ground()[i];
    rep.set(i, dst.ground().require_index(Atom::pair(Atom::pair(a.first(), a.second().first()), a.second().second())));
  }
  return FilArrow(Germ(src, std::move(rep)), dst);
}

FilArrow left_unitor(const Filter& D) {
  auto src = box_filter(unit_filter(), D);
  PartialFn rep(src.ground(), D.ground());
  for (auto i : src.core().indices()) rep.set(i, D.ground().require_index(src.ground()[i].second()));
  return FilArrow(Germ(src, std::move(rep)), D);
}

FilArrow right_unitor(const Filter& D) {
  auto src = box_filter(D, unit_filter());
  PartialFn rep(src.ground(), D.ground());
  for (auto i : src.core().indices()) rep.set(i, D.ground().require_index(src.ground()[i].first()));
  return FilArrow(Germ(src, std::move(rep)), D);
}

}  // namespace filcat
