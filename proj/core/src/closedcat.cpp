#include "filcat/closedcat.hpp"

#include "filcat/errors.hpp"
#include "filcat/monoidal.hpp"

namespace filcat {

HomObject internal_hom(const Filter& G, const Filter& H, std::size_t cap) {
  const auto& T = G.ground();
  auto n = checked_power(T.size(), H.core().size());
  if (n > cap)
    throw Error(Errc::size_cap, "internal hom needs " + std::to_string(T.size()) + "^" +
                                    std::to_string(H.core().size()) + " atoms, over the cap of " +
                                    std::to_string(cap));
  std::vector<Atom> atoms;
  std::vector<Atom> core_atoms;
  for (const auto& g : enum_admissible_germs(H, T)) {
    auto code = encode_germ(g);
    if (image_subset(g.rep(), H.core()).is_subset_of(G.core())) core_atoms.push_back(code);
    atoms.push_back(std::move(code));
  }
  GroundSet ground(std::move(atoms));
  return {Filter(Subset::of(ground, core_atoms)), H, G};
}

Atom encode_germ(const Germ& g) {
  const auto& H = g.source();
  std::vector<Atom::Entry> entries;
  for (auto i : H.core().indices()) entries.emplace_back(H.ground()[i], g.target_ground()[*g.rep().at(i)]);
  return Atom::germ_code(H.ground().atoms(), H.core().atoms(), std::move(entries));
}

Germ decode_germ(const Atom& code, const GroundSet& T) {
  if (code.kind() != Atom::Kind::germ_code)
    throw Error(Errc::invalid_argument, "atom " + code.to_string() + " does not encode a germ");
  GroundSet ground(code.germ_ground());
  Filter H(Subset::of(ground, code.germ_core()));
  PartialFn rep(ground, T);
  for (const auto& [k, v] : code.germ_entries()) rep.set(ground.require_index(k), T.require_index(v));
  return Germ(H, std::move(rep));
}

FilArrow hom_action_left(const FilArrow& gamma, const Filter& H, std::size_t cap) {
  auto src = internal_hom(gamma.source(), H, cap);
  auto dst = internal_hom(gamma.target(), H, cap);
  const auto& ground = src.filter.ground();
  PartialFn rep(ground, dst.filter.ground());
  for (auto i : src.filter.core().indices()) {
    auto kappa = decode_germ(ground[i], gamma.source().ground());
    Germ moved(H, compose_partial(gamma.rep(), kappa.rep()));
    rep.set(i, dst.filter.ground().require_index(encode_germ(moved)));
  }
  return FilArrow(Germ(src.filter, std::move(rep)), dst.filter);
}

FilArrow hom_action_right(const FilArrow& rho, const Filter& G, std::size_t cap) {
  auto src = internal_hom(G, rho.target(), cap);
  auto dst = internal_hom(G, rho.source(), cap);
  const auto& ground = src.filter.ground();
  PartialFn rep(ground, dst.filter.ground());
  for (auto i : src.filter.core().indices()) {
    auto kappa = decode_germ(ground[i], G.ground());
    Germ moved(rho.source(), compose_partial(kappa.rep(), rho.rep()));
    rep.set(i, dst.filter.ground().require_index(encode_germ(moved)));
  }
  return FilArrow(Germ(src.filter, std::move(rep)), dst.filter);
}

FilArrow curry(const Filter& F, const Filter& H, const FilArrow& kappa, std::size_t cap) {
  if (!(kappa.source() == box_filter(F, H)))
    throw Error(Errc::incompatible_composition, "curry: arrow does not start at F box H");
  return curry(internal_hom(kappa.target(), H, cap), F, kappa);
}

FilArrow curry(const HomObject& hom, const Filter& F, const FilArrow& kappa) {
  const auto& H = hom.source_h;
  const auto& G = kappa.target();
  if (!(G == hom.target_g) || !(kappa.source() == box_filter(F, H)))
    throw Error(Errc::incompatible_composition, "curry: arrow does not fit the hom object");
  const auto m = H.ground().size();
  PartialFn rep(F.ground(), hom.filter.ground());
  for (auto s : F.core().indices()) {
    PartialFn column(H.ground(), G.ground());
    for (auto w : H.core().indices()) column.set(w, *kappa.rep().at(s * m + w));
    rep.set(s, hom.filter.ground().require_index(encode_germ(Germ(H, std::move(column)))));
  }
  return FilArrow(Germ(F, std::move(rep)), hom.filter);
}

FilArrow uncurry(const HomObject& hom, const FilArrow& rho) {
  if (!(rho.target() == hom.filter))
    throw Error(Errc::incompatible_composition, "uncurry: arrow does not land in the hom object");
  const auto& F = rho.source();
  const auto& H = hom.source_h;
  const auto& G = hom.target_g;
  auto src = box_filter(F, H);
  const auto m = H.ground().size();
  PartialFn rep(src.ground(), G.ground());
  for (auto s : F.core().indices()) {
    auto column = decode_germ(hom.filter.ground()[*rho.rep().at(s)], G.ground());
    for (auto w : H.core().indices()) rep.set(s * m + w, *column.rep().at(w));
  }
  return FilArrow(Germ(src, std::move(rep)), G);
}

FilArrow eta_unit(const Filter& F, const Filter& H, std::size_t cap) {
  auto box = box_filter(F, H);
  auto hom = internal_hom(box, H, cap);
  const auto m = H.ground().size();
  PartialFn rep(F.ground(), hom.filter.ground());
  for (auto s : F.core().indices()) {
    PartialFn pairing(H.ground(), box.ground());
    for (auto w : H.core().indices()) pairing.set(w, s * m + w);
    rep.set(s, hom.filter.ground().require_index(encode_germ(Germ(H, std::move(pairing)))));
  }
  return FilArrow(Germ(F, std::move(rep)), hom.filter);
}

FilArrow epsilon_counit(const Filter& G, const Filter& H, std::size_t cap) {
  auto hom = internal_hom(G, H, cap);
  auto src = box_filter(hom.filter, H);
  const auto m = H.ground().size();
  PartialFn rep(src.ground(), G.ground());
  for (auto k : hom.filter.core().indices()) {
    auto kappa = decode_germ(hom.filter.ground()[k], G.ground());
    for (auto w : H.core().indices()) rep.set(k * m + w, *kappa.rep().at(w));
  }
  return FilArrow(Germ(src, std::move(rep)), G);
}

}  // namespace filcat
