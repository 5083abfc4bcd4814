#include "filcat/limits.hpp"

#include "filcat/errors.hpp"

namespace filcat {

namespace {

FilArrow inclusion(const Filter& sub, const Filter& F) {
  return FilArrow(Germ(sub, restrict_partial(PartialFn::identity(sub.ground()), sub.core())), F);
}

// Mixed-radix weights of a left-nested product: factor 0 is most significant.
std::vector<std::size_t> radix_weights(std::span<const GroundSet> grounds) {
  std::vector<std::size_t> w(grounds.size(), 1);
  for (std::size_t k = grounds.size(); k-- > 1;) w[k - 1] = w[k] * grounds[k].size();
  return w;
}

std::vector<GroundSet> grounds_of(std::span<const Filter> fs) {
  std::vector<GroundSet> out;
  for (const auto& f : fs) out.push_back(f.ground());
  return out;
}

}  // namespace

Equalizer equalizer(const FilArrow& alpha, const FilArrow& beta) {
  if (!(alpha.source() == beta.source()) || !(alpha.target() == beta.target()))
    throw Error(Errc::not_parallel, "equalizer: arrows are not parallel");
  const auto& F = alpha.source();
  Subset core(F.ground());
  for (auto i : F.core().indices())
    if (alpha.rep().table()[i] == beta.rep().table()[i]) core.insert(i);
  Filter H(core);
  return {H, inclusion(H, F)};
}

FilArrow equalizer_mediator(const Equalizer& eq, const FilArrow& alpha, const FilArrow& beta,
                            const FilArrow& gamma) {
  if (!(compose_arrows(alpha, gamma) == compose_arrows(beta, gamma)))
    throw Error(Errc::non_commuting, "equalizer: the arrow does not equalize the pair");
  return FilArrow(gamma.germ(), eq.object);
}

Cone product_fil(std::span<const Filter> fs) {
  if (fs.empty()) return {unit_filter(), {}};
  if (fs.size() == 1) return {fs.front(), {identity_arrow(fs.front())}};
  GroundSet P = fs.front().ground();
  for (const auto& f : fs.subspan(1)) P = product_ground(P, f.ground());
  auto grounds = grounds_of(fs);
  auto w = radix_weights(grounds);

  Subset core(P);
  for (std::size_t idx = 0; idx < P.size(); ++idx) {
    bool in = true;
    for (std::size_t k = 0; k < fs.size() && in; ++k) in = fs[k].core().contains(idx / w[k] % grounds[k].size());
    if (in) core.insert(idx);
  }
  Filter apex(core);
  std::vector<FilArrow> legs;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    PartialFn rep(P, grounds[k]);
    for (auto idx : core.indices()) rep.set(idx, idx / w[k] % grounds[k].size());
    legs.emplace_back(Germ(apex, std::move(rep)), fs[k]);
  }
  return {apex, std::move(legs)};
}

FilArrow terminal_arrow(const Filter& K) {
  auto u = unit_filter();
  PartialFn rep(K.ground(), u.ground());
  for (auto x : K.core().indices()) rep.set(x, 0);
  return FilArrow(Germ(K, std::move(rep)), u);
}

FilArrow product_mediator(const Cone& product, std::span<const FilArrow> legs) {
  if (legs.size() != product.legs.size())
    throw Error(Errc::invalid_argument, "product: wrong number of legs");
  if (legs.empty())
    throw Error(Errc::invalid_argument, "product: the empty tupling needs a source, use the terminal arrow");
  const auto& K = legs.front().source();
  for (std::size_t k = 0; k < legs.size(); ++k)
    if (!(legs[k].source() == K) || !(legs[k].target() == product.legs[k].target()))
      throw Error(Errc::incompatible_composition, "product: leg " + std::to_string(k) + " has the wrong shape");
  if (legs.size() == 1) return FilArrow(legs.front().germ(), product.apex);

  std::vector<GroundSet> grounds;
  for (const auto& l : product.legs) grounds.push_back(l.target().ground());
  auto w = radix_weights(grounds);
  PartialFn rep(K.ground(), product.apex.ground());
  for (auto x : K.core().indices()) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < legs.size(); ++k) idx += *legs[k].rep().at(x) * w[k];
    rep.set(x, idx);
  }
  return FilArrow(Germ(K, std::move(rep)), product.apex);
}

Cone pullback_monos(const Filter& F, std::span<const FilArrow> ms) {
  Subset core = F.core();
  for (const auto& m : ms) {
    if (!(m.target() == F)) throw Error(Errc::incompatible_composition, "pullback: arrow does not land in F");
    if (!m.rep().injective_on(m.source().core()))
      throw Error(Errc::class_violation, "pullback: arrow is not in M");
    core = core & image_subset(m.rep(), m.source().core());
  }
  Filter H(core);
  std::vector<FilArrow> legs;
  for (const auto& m : ms) {
    PartialFn rep(H.ground(), m.source().ground());
    for (auto y : m.source().core().indices()) {
      auto x = *m.rep().at(y);
      if (core.contains(x)) rep.set(x, y);
    }
    legs.emplace_back(Germ(H, std::move(rep)), m.source());
  }
  return {H, std::move(legs)};
}

Cone pullback_cospan(const FilArrow& phi, const FilArrow& psi) {
  if (!(phi.target() == psi.target()))
    throw Error(Errc::incompatible_composition, "pullback: arrows have different targets");
  const Filter factors[] = {phi.source(), psi.source()};
  auto prod = product_fil(factors);
  auto eq = equalizer(compose_arrows(phi, prod.legs[0]), compose_arrows(psi, prod.legs[1]));
  return {eq.object,
          {compose_arrows(prod.legs[0], eq.inclusion), compose_arrows(prod.legs[1], eq.inclusion)}};
}

FilArrow pullback_mediator(const Cone& pullback, const FilArrow& p, const FilArrow& q) {
  if (pullback.legs.size() != 2) throw Error(Errc::invalid_argument, "pullback: expected two legs");
  const auto& A = pullback.legs[0].target();
  const auto& B = pullback.legs[1].target();
  if (!(p.source() == q.source()) || !(p.target() == A) || !(q.target() == B))
    throw Error(Errc::incompatible_composition, "pullback: legs have the wrong shape");
  const auto& K = p.source();
  PartialFn rep(K.ground(), pullback.apex.ground());
  for (auto x : K.core().indices()) {
    auto idx = *p.rep().at(x) * B.ground().size() + *q.rep().at(x);
    if (!pullback.apex.core().contains(idx))
      throw Error(Errc::non_commuting, "pullback: the legs do not commute over the cospan");
    rep.set(x, idx);
  }
  return FilArrow(Germ(K, std::move(rep)), pullback.apex);
}

Cone coproduct_fil(std::span<const Filter> fs) {
  auto grounds = grounds_of(fs);
  auto C = coproduct_ground(grounds);
  Subset core(C);
  std::vector<std::size_t> offset;
  std::size_t at = 0;
  for (const auto& f : fs) {
    offset.push_back(at);
    for (auto i : f.core().indices()) core.insert(at + i);
    at += f.ground().size();
  }
  Filter apex(core);
  std::vector<FilArrow> legs;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    PartialFn rep(fs[k].ground(), C);
    for (auto i : fs[k].core().indices()) rep.set(i, offset[k] + i);
    legs.emplace_back(Germ(fs[k], std::move(rep)), apex);
  }
  return {apex, std::move(legs)};
}

FilArrow coproduct_mediator(const Cone& coproduct, std::span<const FilArrow> xi, const Filter& K) {
  if (xi.size() != coproduct.legs.size())
    throw Error(Errc::invalid_argument, "coproduct: wrong number of arrows");
  PartialFn rep(coproduct.apex.ground(), K.ground());
  std::size_t at = 0;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const auto& Fk = coproduct.legs[k].source();
    if (!(xi[k].source() == Fk) || !(xi[k].target() == K))
      throw Error(Errc::incompatible_composition, "coproduct: arrow " + std::to_string(k) + " has the wrong shape");
    for (auto i : Fk.core().indices()) rep.set(at + i, *xi[k].rep().at(i));
    at += Fk.ground().size();
  }
  return FilArrow(Germ(coproduct.apex, std::move(rep)), K);
}

Subset core_of(const Filter& F) { return F.core(); }

PartialFn core_of_arrow(const FilArrow& phi) {
  auto from = sub_ground(phi.source().core());
  auto to = sub_ground(phi.target().core());
  PartialFn out(from, to);
  for (std::size_t k = 0; k < from.size(); ++k) {
    auto i = phi.source().ground().require_index(from[k]);
    out.set(k, to.require_index(phi.target().ground()[*phi.rep().at(i)]));
  }
  return out;
}

Filter unit_L(const GroundSet& S) { return Filter::top(S); }

PartialFn CoreAdjunction::transpose(const FilArrow& phi) const {
  if (!(phi.source() == unit_L(S)) || !(phi.target() == G))
    throw Error(Errc::incompatible_composition, "core adjunction: arrow is not L(S) -> G");
  auto to = sub_ground(G.core());
  PartialFn out(S, to);
  for (std::size_t s = 0; s < S.size(); ++s) out.set(s, to.require_index(G.ground()[*phi.rep().at(s)]));
  return out;
}

FilArrow CoreAdjunction::untranspose(const PartialFn& f) const {
  auto to = sub_ground(G.core());
  if (!(f.dom() == S) || !(f.cod() == to) || !f.is_total())
    throw Error(Errc::invalid_argument, "core adjunction: expected a total map S -> core G");
  PartialFn rep(S, G.ground());
  for (std::size_t s = 0; s < S.size(); ++s) rep.set(s, G.ground().require_index(to[*f.at(s)]));
  return FilArrow(Germ(unit_L(S), std::move(rep)), G);
}

std::vector<FilArrow> CoreAdjunction::arrows() const { return hom_set(unit_L(S), G); }

std::vector<PartialFn> CoreAdjunction::functions() const {
  auto to = sub_ground(G.core());
  std::vector<PartialFn> out;
  for_each_tuple(S.size(), to.size(), [&](const std::vector<std::size_t>& t) {
    out.emplace_back(S, to, t);
    return true;
  });
  return out;
}

CoreAdjunction core_adjunction_witness(const GroundSet& S, const Filter& G) { return {S, G}; }

}  // namespace filcat
