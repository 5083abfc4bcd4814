#include <algorithm>

#include "filcat/factorization.hpp"
#include "filcat/limits.hpp"
#include "registry.hpp"

namespace filcat::detail {

namespace {

void every_arrow(const LawContext& ctx, const Visit& visit) {
  World w(ctx.universe.filters());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      for (const auto& phi : w.hom(i, j))
        if (!visit(Instance{}.add(phi))) return;
}

// Pairs a : F -> G, b : G -> H.
void composable_arrows(const LawContext& ctx, const Visit& visit) {
  World w(ctx.universe.filters());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      for (const auto& a : w.hom(i, j))
        for (std::size_t k = 0; k < w.size(); ++k)
          for (const auto& b : w.hom(j, k))
            if (!visit(Instance{}.add(a).add(b))) return;
}

// Pairs of parallel arrows F -> G.
void parallel_pairs(const LawContext& ctx, const Visit& visit) {
  World w(ctx.universe.filters());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      for (const auto& a : w.hom(i, j))
        for (const auto& b : w.hom(i, j))
          if (!visit(Instance{}.add(a).add(b))) return;
}

// Cospans A -> C <- B.
void cospans(const LawContext& ctx, const Visit& visit, bool monos_only) {
  World w(ctx.universe.filters());
  for (std::size_t c = 0; c < w.size(); ++c) {
    std::vector<FilArrow> into;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (const auto& phi : w.hom(a, c))
        if (!monos_only || is_m(phi)) into.push_back(phi);
    for (const auto& phi : into)
      for (const auto& psi : into)
        if (!visit(Instance{}.add(phi).add(psi))) return;
  }
}

std::size_t count_equal(const std::vector<FilArrow>& xs, const FilArrow& x) {
  return static_cast<std::size_t>(std::count(xs.begin(), xs.end(), x));
}

LawDef factorization_axioms() {
  LawDef law{"factorization-axioms", false, composable_arrows, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& a = inst.arrow(0);
    const auto& b = inst.arrow(1);
    auto fp = factor(a);
    if (!is_e(fp.epi_part)) return fail("epi part is not in E", {{"epi", fp.epi_part}});
    if (!is_m(fp.mono_part)) return fail("mono part is not in M", {{"mono", fp.mono_part}});
    if (!(fp.mid_filter == germ_push(a.germ(), a.source()))) return fail("middle filter is not phi(F)");
    auto back = compose(ctx, fp.mono_part, fp.epi_part);
    if (!(back == a)) return fail("mono o epi differs from phi", {{"composite", back}});
    auto ba = compose(ctx, b, a);
    if (is_e(a) && is_e(b) && !is_e(ba)) return fail("E is not closed under composition", {{"composite", ba}});
    if (is_m(a) && is_m(b) && !is_m(ba)) return fail("M is not closed under composition", {{"composite", ba}});
    if (is_iso(a) != (is_e(a) && is_m(a))) return fail("iso differs from E and M");
    return ok();
  };
  return law;
}

LawDef diagonal_uniqueness() {
  LawDef law{"diagonal-uniqueness", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    World w(ctx.universe.filters());
    const auto n = w.size();
    for (std::size_t A = 0; A < n; ++A)
      for (std::size_t B = 0; B < n; ++B)
        for (const auto& e : w.hom(A, B)) {
          if (!is_e(e)) continue;
          for (std::size_t C = 0; C < n; ++C)
            for (std::size_t D = 0; D < n; ++D)
              for (const auto& m : w.hom(C, D)) {
                if (!is_m(m)) continue;
                for (const auto& a : w.hom(A, C)) {
                  auto ma = compose(ctx, m, a);
                  for (const auto& b : w.hom(B, D))
                    if (compose(ctx, b, e) == ma)
                      if (!visit(Instance{}.add(e).add(a).add(b).add(m))) return;
                }
              }
        }
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& e = inst.arrow(0);
    const auto& a = inst.arrow(1);
    const auto& b = inst.arrow(2);
    const auto& m = inst.arrow(3);
    auto d = diagonal_fill(e, a, b, m);
    if (!(compose(ctx, d, e) == a) || !(compose(ctx, m, d) == b))
      return fail("diagonal does not make both triangles commute", {{"diagonal", d}});
    std::size_t fills = 0;
    for (const auto& cand : hom_set(e.target(), a.target()))
      if (compose(ctx, cand, e) == a && compose(ctx, m, cand) == b) ++fills;
    if (fills != 1) return fail(std::to_string(fills) + " diagonals fill the square", {{"diagonal", d}});
    return ok();
  };
  return law;
}

// Distinct arrows in `xs` give distinct composites.
bool injective(const std::vector<FilArrow>& composites) {
  std::vector<std::vector<std::size_t>> tables;
  for (const auto& c : composites) tables.push_back(c.rep().table());
  std::sort(tables.begin(), tables.end());
  return std::adjacent_find(tables.begin(), tables.end()) == tables.end();
}

Check non_epi_witness(const LawContext& ctx, const FilArrow& phi) {
  const auto& G = phi.target();
  auto image = image_subset(phi.rep(), phi.source().core());
  auto missing = (G.core() - image).indices();
  if (missing.empty()) return fail("phi is not in E but maps core F onto core G");
  auto W = GroundSet::of_labels({"0", "1"});
  auto top = Filter::top(W);
  PartialFn a(G.ground(), W, std::vector<std::size_t>(G.ground().size(), 0));
  auto b = a;
  b.set(missing.front(), 1);
  auto alpha = make_arrow(G, top, a), beta = make_arrow(G, top, b);
  if (alpha == beta) return fail("the two test arrows out of G coincide");
  if (!(compose(ctx, alpha, phi) == compose(ctx, beta, phi)))
    return fail("the test arrows out of G are not equalized by phi", {{"alpha", alpha}, {"beta", beta}});
  return ok();
}

Check non_monic_witness(const LawContext& ctx, const FilArrow& phi) {
  const auto& F = phi.source();
  auto f = total_representative(phi);
  auto core = F.core().indices();
  std::optional<std::pair<std::size_t, std::size_t>> clash;
  for (std::size_t i = 0; i < core.size() && !clash; ++i)
    for (std::size_t j = i + 1; j < core.size() && !clash; ++j)
      if (f.at(core[i]) == f.at(core[j])) clash = std::make_pair(core[i], core[j]);
  if (!clash) return fail("phi is not in M but is one-one on core F");
  // W: the members of F inside dd f, each sent to a colliding pair it contains.
  std::vector<Atom> names;
  for (const auto& X : all_subsets(F.ground()))
    if (member_filter(F, X) && X.is_subset_of(dd_of(f))) names.push_back(Atom::label("m" + std::to_string(X.mask())));
  GroundSet W(names);
  PartialFn a(W, F.ground(), std::vector<std::size_t>(W.size(), clash->first));
  PartialFn b(W, F.ground(), std::vector<std::size_t>(W.size(), clash->second));
  const Filter parts[] = {pullback_filter(a, F), pullback_filter(b, F)};
  auto H = meet_filters(parts);
  auto alpha = make_arrow(H, F, a), beta = make_arrow(H, F, b);
  if (alpha == beta) return fail("the two test arrows into F coincide");
  if (!(compose(ctx, phi, alpha) == compose(ctx, phi, beta)))
    return fail("phi does not identify the test arrows into F", {{"alpha", alpha}, {"beta", beta}});
  return ok();
}

LawDef epi_monic_exactness() {
  LawDef law{"epi-monic-exactness", false, every_arrow, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& phi = inst.arrow(0);
    bool epi = true, monic = true;
    for (const auto& W : ctx.universe.filters(ctx.universe.brute_ground)) {
      if (epi) {
        std::vector<FilArrow> comps;
        for (const auto& a : hom_set(phi.target(), W)) comps.push_back(compose(ctx, a, phi));
        epi = injective(comps);
      }
      if (monic) {
        std::vector<FilArrow> comps;
        for (const auto& b : hom_set(W, phi.source())) comps.push_back(compose(ctx, phi, b));
        monic = injective(comps);
      }
      if (!epi && !monic) break;
    }
    if (epi != is_e(phi) || epi != is_epi(phi))
      return fail("cancellability says epi = " + std::to_string(epi) + ", E membership says " +
                  std::to_string(is_e(phi)));
    if (monic != is_m(phi) || monic != is_monic(phi))
      return fail("cancellability says monic = " + std::to_string(monic) + ", M membership says " +
                  std::to_string(is_m(phi)));
    if (!epi)
      if (auto f = non_epi_witness(ctx, phi)) return f;
    if (!monic)
      if (auto f = non_monic_witness(ctx, phi)) return f;
    return ok();
  };
  return law;
}

LawDef iso_characterization() {
  LawDef law{"iso-characterization", false, every_arrow, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& phi = inst.arrow(0);
    const auto& F = phi.source();
    const auto& G = phi.target();
    std::optional<FilArrow> found;
    for (const auto& psi : hom_set(G, F))
      if (compose(ctx, psi, phi) == identity_arrow(F) && compose(ctx, phi, psi) == identity_arrow(G)) found = psi;
    bool by_rep = false;
    for (const auto& f : all_partial_functions(F.ground(), G.ground()))
      if (is_admissible(f, F) && germ_equiv(f, phi.rep(), F) && f.injective_on(dd_of(f)) &&
          pushforward_filter(f, F) == G)
        by_rep = true;
    const bool iso = found.has_value();
    if (iso != is_iso(phi) || iso != by_rep || iso != (is_e(phi) && is_m(phi)))
      return fail("two-sided inverse exists = " + std::to_string(iso) + ", is_iso = " + std::to_string(is_iso(phi)) +
                  ", one-one representative onto G = " + std::to_string(by_rep));
    auto inv = inverse_arrow(phi);
    if (inv.has_value() != iso || (inv && !(*inv == *found)))
      return fail("inverse_arrow disagrees with the search");
    return ok();
  };
  return law;
}

LawDef m_subobject_lattice() {
  LawDef law{"m-subobject-lattice", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    for (const auto& F : ctx.universe.filters(std::max<std::size_t>(ctx.universe.max_ground, 3)))
      if (!visit(Instance{}.add(F))) return;
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    auto poset = m_subobject_poset(F);
    if (!poset.certificate_failure.empty()) return fail(poset.certificate_failure);
    const std::size_t expect = std::size_t{1} << F.core().size();
    if (poset.classes_found != expect || poset.representatives.size() != expect)
      return fail(std::to_string(poset.classes_found) + " classes, expected " + std::to_string(expect));
    for (std::size_t i = 0; i < expect; ++i)
      for (std::size_t j = 0; j < expect; ++j)
        if (poset.leq[i][j] != leq_filter(poset.images[i], poset.images[j]))
          return fail("subobject order disagrees with the filter order");
    return ok();
  };
  return law;
}

LawDef equalizer_universal() {
  LawDef law{"equalizer-universal", false, parallel_pairs, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& alpha = inst.arrow(0);
    const auto& beta = inst.arrow(1);
    auto eq = equalizer(alpha, beta);
    if (!(compose(ctx, alpha, eq.inclusion) == compose(ctx, beta, eq.inclusion)))
      return fail("the inclusion does not equalize", {{"inclusion", eq.inclusion}});
    for (const auto& K : ctx.universe.filters()) {
      std::vector<FilArrow> images;
      for (const auto& h : hom_set(K, eq.object)) images.push_back(compose(ctx, eq.inclusion, h));
      for (const auto& gamma : hom_set(K, alpha.source())) {
        const bool equalizes = compose(ctx, alpha, gamma) == compose(ctx, beta, gamma);
        const auto n = count_equal(images, gamma);
        if (n != (equalizes ? 1U : 0U))
          return fail(std::to_string(n) + " arrows factor gamma through the equalizer", {{"gamma", gamma}});
        if (equalizes && !(compose(ctx, eq.inclusion, equalizer_mediator(eq, alpha, beta, gamma)) == gamma))
          return fail("the mediator does not factor gamma", {{"gamma", gamma}});
      }
    }
    return ok();
  };
  return law;
}

// Checks the universal property of a product cone against every K.
Check product_property(const LawContext& ctx, std::span<const Filter> fs) {
  auto P = product_fil(fs);
  for (const auto& K : ctx.universe.filters()) {
    auto into = hom_set(K, P.apex);
    if (fs.empty()) {
      if (into.size() != 1 || !(into.front() == terminal_arrow(K)))
        return fail(std::to_string(into.size()) + " arrows into the empty product from " + show(K));
      continue;
    }
    std::size_t tuples = 1;
    for (const auto& F : fs) tuples *= hom_set_size(K, F);
    if (into.size() != tuples)
      return fail(std::to_string(into.size()) + " arrows into the product but " + std::to_string(tuples) +
                  " leg tuples from " + show(K));
    std::vector<std::vector<FilArrow>> seen;
    for (const auto& h : into) {
      std::vector<FilArrow> legs;
      for (const auto& p : P.legs) legs.push_back(compose(ctx, p, h));
      if (std::find(seen.begin(), seen.end(), legs) != seen.end())
        return fail("two arrows into the product have the same legs", {{"h", h}});
      if (!(product_mediator(P, legs) == h)) return fail("mediator differs from the arrow it tuples", {{"h", h}});
      seen.push_back(std::move(legs));
    }
  }
  return ok();
}

LawDef product_universal() {
  LawDef law{"product-universal", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    auto fs = ctx.universe.filters();
    if (!visit(Instance{})) return;
    for (const auto& a : fs)
      if (!visit(Instance{}.add(a))) return;
    for (const auto& a : fs)
      for (const auto& b : fs)
        if (!visit(Instance{}.add(a).add(b))) return;
    for (const auto& a : fs)
      for (const auto& b : fs)
        for (const auto& c : fs)
          if (!visit(Instance{}.add(a).add(b).add(c))) return;
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    return product_property(ctx, inst.filters);
  };
  return law;
}

LawDef coproduct_universal() {
  LawDef law{"coproduct-universal", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    auto fs = ctx.universe.filters();
    if (!visit(Instance{})) return;
    for (const auto& a : fs)
      for (const auto& b : fs)
        if (!visit(Instance{}.add(a).add(b))) return;
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    auto C = coproduct_fil(inst.filters);
    for (const auto& K : ctx.universe.filters()) {
      auto out = hom_set(C.apex, K);
      std::size_t tuples = 1;
      for (const auto& F : inst.filters) tuples *= hom_set_size(F, K);
      if (out.size() != tuples)
        return fail(std::to_string(out.size()) + " arrows out of the coproduct but " + std::to_string(tuples) +
                    " cocone tuples into " + show(K));
      std::vector<std::vector<FilArrow>> seen;
      for (const auto& h : out) {
        std::vector<FilArrow> legs;
        for (const auto& i : C.legs) legs.push_back(compose(ctx, h, i));
        if (std::find(seen.begin(), seen.end(), legs) != seen.end())
          return fail("two arrows out of the coproduct have the same legs", {{"h", h}});
        if (!(coproduct_mediator(C, legs, K) == h))
          return fail("mediator differs from the arrow it cotuples", {{"h", h}});
        seen.push_back(std::move(legs));
      }
    }
    return ok();
  };
  return law;
}

LawDef pullback_universal() {
  LawDef law{"pullback-universal", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) { cospans(ctx, visit, false); };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& phi = inst.arrow(0);
    const auto& psi = inst.arrow(1);
    auto pb = pullback_cospan(phi, psi);
    if (!(compose(ctx, phi, pb.legs[0]) == compose(ctx, psi, pb.legs[1])))
      return fail("the pullback square does not commute", {{"p", pb.legs[0]}, {"q", pb.legs[1]}});
    for (const auto& K : ctx.universe.filters()) {
      auto into = hom_set(K, pb.apex);
      std::vector<std::pair<FilArrow, FilArrow>> legs;
      for (const auto& h : into) legs.emplace_back(compose(ctx, pb.legs[0], h), compose(ctx, pb.legs[1], h));
      std::size_t commuting = 0;
      for (const auto& p : hom_set(K, phi.source()))
        for (const auto& q : hom_set(K, psi.source())) {
          if (!(compose(ctx, phi, p) == compose(ctx, psi, q))) continue;
          ++commuting;
          auto n = std::count(legs.begin(), legs.end(), std::make_pair(p, q));
          if (n != 1) return fail(std::to_string(n) + " arrows mediate a commuting pair", {{"p", p}, {"q", q}});
          auto h = pullback_mediator(pb, p, q);
          if (!(compose(ctx, pb.legs[0], h) == p) || !(compose(ctx, pb.legs[1], h) == q))
            return fail("the mediator has the wrong legs", {{"p", p}, {"q", q}, {"h", h}});
        }
      if (commuting != into.size())
        return fail(std::to_string(into.size()) + " arrows into the pullback but " + std::to_string(commuting) +
                    " commuting pairs from " + show(K));
    }
    return ok();
  };
  return law;
}

LawDef pullback_agreement() {
  LawDef law{"pullback-agreement", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) { cospans(ctx, visit, true); };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& m0 = inst.arrow(0);
    const auto& m1 = inst.arrow(1);
    const FilArrow ms[] = {m0, m1};
    auto monos = pullback_monos(m0.target(), ms);
    auto cospan = pullback_cospan(m0, m1);
    auto med = pullback_mediator(cospan, monos.legs[0], monos.legs[1]);
    if (!is_iso(med)) return fail("the two pullbacks are not isomorphic", {{"mediator", med}});
    for (std::size_t i = 0; i < 2; ++i)
      if (!(compose(ctx, cospan.legs[i], med) == monos.legs[i]))
        return fail("the comparison does not respect the legs", {{"mediator", med}});
    for (std::size_t i = 0; i < 2; ++i)
      if (!(compose(ctx, ms[i], monos.legs[i]) == subobject_of(m0.target(), monos.apex)))
        return fail("m_i o phi_i is not the inclusion of the meet");
    return ok();
  };
  return law;
}

LawDef e_stability() {
  LawDef law{"e-stability", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    cospans(ctx, [&](const Instance& inst) { return !is_e(inst.arrow(0)) || visit(inst); }, false);
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& eps = inst.arrow(0);
    const auto& phi = inst.arrow(1);
    if (!is_e(eps)) return fail("the arrow being pulled back is not in E");
    auto pb = pullback_cospan(eps, phi);
    if (!is_e(pb.legs[1])) return fail("the pulled-back arrow is not in E", {{"pulled", pb.legs[1]}});
    return ok();
  };
  return law;
}

LawDef core_adjunction() {
  LawDef law{"core-adjunction", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    for (const auto& S : ctx.universe.grounds())
      for (const auto& G : ctx.universe.filters())
        if (!visit(Instance{}.add(S).add(G))) return;
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& S = inst.set(0);
    const auto& G = inst.filter(0);
    auto adj = core_adjunction_witness(S, G);
    auto arrows = adj.arrows();
    auto fns = adj.functions();
    const auto expect = checked_power(G.core().size(), S.size());
    if (arrows.size() != expect || fns.size() != expect)
      return fail("|Fil(L S, G)| = " + std::to_string(arrows.size()) + ", |Set(S, core G)| = " +
                  std::to_string(fns.size()) + ", expected " + std::to_string(expect));
    std::size_t lpartial = 0;
    for (const auto& f : all_partial_functions(S, G.ground()))
      if (is_admissible(f, unit_L(S)) && is_local(f, unit_L(S), G)) ++lpartial;
    if (lpartial != expect) return fail("|LPartial(L S, G)| = " + std::to_string(lpartial));
    for (const auto& phi : arrows)
      if (!(adj.untranspose(adj.transpose(phi)) == phi)) return fail("untranspose o transpose is not 1", {{"phi", phi}});
    for (const auto& f : fns)
      if (!(adj.transpose(adj.untranspose(f)) == f)) return fail("transpose o untranspose is not 1 at " + show(f));

    // Naturality in S along total sigma : S' -> S.
    for (const auto& S2 : ctx.universe.grounds()) {
      auto adj2 = core_adjunction_witness(S2, G);
      for (const auto& sigma : all_partial_functions(S2, S)) {
        if (!sigma.is_total()) continue;
        auto L_sigma = make_arrow(unit_L(S2), unit_L(S), sigma);
        for (const auto& phi : arrows)
          if (!(adj2.transpose(compose(ctx, phi, L_sigma)) == compose_partial(adj.transpose(phi), sigma)))
            return fail("transpose is not natural in S along " + show(sigma), {{"phi", phi}});
      }
    }
    // Naturality in G along gamma : G -> G'.
    for (const auto& G2 : ctx.universe.filters()) {
      auto adj2 = core_adjunction_witness(S, G2);
      for (const auto& gamma : hom_set(G, G2))
        for (const auto& phi : arrows)
          if (!(adj2.transpose(compose(ctx, gamma, phi)) == compose_partial(core_of_arrow(gamma), adj.transpose(phi))))
            return fail("transpose is not natural in G", {{"phi", phi}, {"gamma", gamma}});
    }
    // Triangles: core(eps_G) o eta_(core G) = 1 and eps_(L S) o L(eta_S) = 1.
    auto cg = sub_ground(G.core());
    auto counit = core_adjunction_witness(cg, G).untranspose(PartialFn::identity(cg));
    if (!(core_of_arrow(counit) == PartialFn::identity(cg))) return fail("core(eps_G) is not 1", {{"counit", counit}});
    auto ls = core_adjunction_witness(S, unit_L(S));
    auto eta = ls.transpose(identity_arrow(unit_L(S)));
    if (!(eta == PartialFn::identity(S))) return fail("eta_S is not the identity of S");
    if (!(ls.untranspose(eta) == identity_arrow(unit_L(S)))) return fail("eps_(L S) o L(eta_S) is not 1");
    return ok();
  };
  return law;
}

LawDef core_preserves_limits() {
  LawDef law{"core-preserves-limits", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    auto fs = ctx.universe.filters();
    for (const auto& a : fs)
      for (const auto& b : fs)
        if (!visit(Instance{}.add(a).add(b))) return;
    parallel_pairs(ctx, visit);
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    if (inst.arrows.empty()) {
      auto P = product_fil(inst.filters);
      auto c0 = sub_ground(inst.filter(0).core()), c1 = sub_ground(inst.filter(1).core());
      if (!(sub_ground(P.apex.core()) == product_ground(c0, c1))) return fail("core(F x G) differs from core F x core G");
      for (std::size_t k = 0; k < 2; ++k) {
        auto proj = core_of_arrow(P.legs[k]);
        for (std::size_t i = 0; i < proj.dom().size(); ++i) {
          const auto& pt = proj.dom()[i];
          if (proj(pt) != (k == 0 ? pt.first() : pt.second())) return fail("core of a projection is not a projection");
        }
      }
      return ok();
    }
    const auto& alpha = inst.arrow(0);
    const auto& beta = inst.arrow(1);
    auto eq = equalizer(alpha, beta);
    auto ca = core_of_arrow(alpha), cb = core_of_arrow(beta);
    std::vector<Atom> agree;
    for (std::size_t i = 0; i < ca.dom().size(); ++i)
      if (ca.at(i) == cb.at(i)) agree.push_back(ca.dom()[i]);
    if (!(sub_ground(eq.object.core()) == GroundSet(agree))) return fail("core of the equalizer is not the set equalizer");
    return ok();
  };
  return law;
}

LawDef equalizer_boundary() {
  LawDef law{"equalizer-boundary", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    parallel_pairs(ctx, [&](const Instance& inst) { return inst.arrow(0).target().is_proper() || visit(inst); });
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& alpha = inst.arrow(0);
    const auto& beta = inst.arrow(1);
    if (alpha.target().is_proper()) return fail("the target contains no empty set");
    if (!alpha.source().core().empty()) return fail("an arrow into an improper filter has a proper source");
    auto eq = equalizer(alpha, beta);
    if (!is_iso(eq.inclusion)) return fail("the equalizer inclusion is not an iso", {{"inclusion", eq.inclusion}});
    return ok();
  };
  return law;
}

}  // namespace

std::vector<LawDef> factorization_laws() {
  return {factorization_axioms(), diagonal_uniqueness(), epi_monic_exactness(), iso_characterization(),
          m_subobject_lattice()};
}

std::vector<LawDef> limit_laws() {
  return {equalizer_universal(), product_universal(), coproduct_universal(), pullback_universal(),
          pullback_agreement(),  e_stability(),       core_adjunction(),     core_preserves_limits(),
          equalizer_boundary()};
}

}  // namespace filcat::detail
