#include "registry.hpp"

namespace filcat::detail {

namespace {

std::vector<PartialFn> representatives(const Germ& g) {
  std::vector<PartialFn> out;
  for (auto& f : all_partial_functions(g.source().ground(), g.target_ground()))
    if (is_admissible(f, g.source()) && germ_equiv(f, g.rep(), g.source())) out.push_back(std::move(f));
  return out;
}

// Every (F, G, f, g) with F on S, G on T and f, g : S -> T.
LawDef germ_equivalence() {
  LawDef law{"germ-equivalence", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    PfunCache cache;
    auto grounds = ctx.universe.grounds();
    const bool improper = ctx.universe.include_improper;
    for (const auto& S : grounds)
      for (const auto& T : grounds) {
        const auto& fns = cache.get(S, T);
        for (const auto& F : all_filters_on(S, improper))
          for (const auto& G : all_filters_on(T, improper))
            for (const auto& f : fns)
              for (const auto& g : fns)
                if (!visit(Instance{}.add(F).add(G).add(f).add(g))) return;
      }
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    const auto& f = inst.pfun(0);
    const auto& g = inst.pfun(1);
    if (!germ_equiv(f, f, F)) return fail("f is not equivalent to itself");
    const bool fg = germ_equiv(f, g, F);
    if (fg != germ_equiv(g, f, F)) return fail("germ equivalence is not symmetric");
    if (fg) {
      for (const auto& h : all_partial_functions(f.dom(), f.cod()))
        if (germ_equiv(g, h, F) && !germ_equiv(f, h, F))
          return fail("germ equivalence is not transitive through h = " + show(h));
      if (is_admissible(f, F) != is_admissible(g, F)) return fail("equivalent functions differ in admissibility");
      if (is_local(f, F, G) != is_local(g, F, G)) return fail("equivalent functions differ in locality");
      if (is_admissible(f, F)) {
        const auto& core = F.core();
        if (!core.is_subset_of(dd_of(f) & dd_of(g)))
          return fail("no member of F lies inside dd f & dd g");
        if (!(restrict_partial(f, core) == restrict_partial(g, core)))
          return fail("f and g differ on the least member of F");
      }
    }
    return ok();
  };
  return law;
}

// Arrows in LPartial(F, G): admissible for F and local for G.
std::vector<PartialFn> lpartial(const Filter& F, const Filter& G, PfunCache& cache) {
  std::vector<PartialFn> out;
  for (const auto& f : cache.get(F.ground(), G.ground()))
    if (is_admissible(f, F) && is_local(f, F, G)) out.push_back(f);
  return out;
}

LawDef germ_composition() {
  LawDef law{"germ-composition", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    PfunCache cache;
    auto filters = ctx.universe.filters();
    for (const auto& F : filters)
      for (const auto& G : filters) {
        auto fs = lpartial(F, G, cache);
        if (fs.empty()) continue;
        for (const auto& H : filters) {
          auto gs = lpartial(G, H, cache);
          for (const auto& f : fs)
            for (const auto& g : gs)
              if (!visit(Instance{}.add(F).add(G).add(H).add(f).add(g))) return;
        }
      }
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    const auto& H = inst.filter(2);
    const auto& f = inst.pfun(0);
    const auto& g = inst.pfun(1);
    auto gf = compose_partial(g, f);
    if (!is_admissible(gf, F) || !is_local(gf, F, H)) return fail("g o f is not in LPartial(F, H)");
    PfunCache cache;
    for (const auto& f2 : lpartial(F, G, cache)) {
      if (!germ_equiv(f, f2, F)) continue;
      if (!germ_equiv(gf, compose_partial(g, f2), F))
        return fail("g o f and g o f' are not equivalent for f' = " + show(f2));
      // The identity the composition proof relies on, with the least members of F and G.
      auto probe = dd_of(g) & G.core();
      if (!((preimage_subset(f, probe) & F.core()) == (preimage_subset(f2, probe) & F.core())))
        return fail("f^-1(dd g & G0) & F0 differs from f'^-1(dd g & G0) & F0 for f' = " + show(f2));
    }
    for (const auto& g2 : lpartial(G, H, cache)) {
      if (!germ_equiv(g, g2, G)) continue;
      if (!germ_equiv(gf, compose_partial(g2, f), F))
        return fail("g o f and g' o f are not equivalent for g' = " + show(g2));
    }
    return ok();
  };
  return law;
}

LawDef category_axioms() {
  LawDef law{"category-axioms", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    World w(ctx.universe.filters());
    const auto n = w.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& a : w.hom(i, j))
          for (std::size_t k = 0; k < n; ++k)
            for (const auto& b : w.hom(j, k))
              for (std::size_t l = 0; l < n; ++l)
                for (const auto& c : w.hom(k, l))
                  if (!visit(Instance{}.add(a).add(b).add(c))) return;
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& a = inst.arrow(0);
    const auto& b = inst.arrow(1);
    const auto& c = inst.arrow(2);
    auto left = compose(ctx, c, compose(ctx, b, a));
    auto right = compose(ctx, compose(ctx, c, b), a);
    if (!(left == right))
      return fail("c o (b o a) differs from (c o b) o a", {{"left", left}, {"right", right}});
    for (const auto* x : {&a, &b, &c}) {
      auto after = compose(ctx, identity_arrow(x->target()), *x);
      if (!(after == *x)) return fail("1 o x differs from x for x = " + show(*x), {{"composite", after}});
      auto before = compose(ctx, *x, identity_arrow(x->source()));
      if (!(before == *x)) return fail("x o 1 differs from x for x = " + show(*x), {{"composite", before}});
    }
    return ok();
  };
  return law;
}

// (phi, F') with phi : F -> G and F' <= F.
void arrows_with_subfilters(const LawContext& ctx, const Visit& visit) {
  World w(ctx.universe.filters());
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto subs = subfilters_of(w[i]);
    for (std::size_t j = 0; j < w.size(); ++j)
      for (const auto& phi : w.hom(i, j))
        for (const auto& sub : subs)
          if (!visit(Instance{}.add(sub).add(phi))) return;
  }
}

LawDef germ_galois() {
  LawDef law{"germ-galois", false, arrows_with_subfilters, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& sub = inst.filter(0);
    const auto& phi = inst.arrow(0);
    const auto& F = phi.source();
    if (!leq_filter(germ_push(phi.germ(), F), phi.target())) return fail("phi(F) is not <= G");
    auto pushed = germ_push(phi.germ(), sub);
    auto reps = representatives(phi.germ());
    auto targets = all_filters_on(phi.target().ground(), ctx.universe.include_improper);
    for (const auto& f : reps)
      if (!(pushforward_filter(f, sub) == pushed))
        return fail("phi(F') depends on the representative: " + show(f));
    for (const auto& G2 : targets) {
      auto pulled = germ_pull(phi.germ(), G2);
      for (const auto& f : reps) {
        const Filter parts[] = {pullback_filter(f, G2), F};
        if (!(meet_filters(parts) == pulled))
          return fail("phi^-1(G') depends on the representative " + show(f) + " for G' = " + show(G2));
      }
      if (leq_filter(pushed, G2) != leq_filter(sub, pulled))
        return fail("phi(F') <= G' and F' <= phi^-1(G') disagree for G' = " + show(G2));
    }
    return ok();
  };
  return law;
}

LawDef locality_conditions() {
  LawDef law{"locality-conditions", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    PfunCache cache;
    auto filters = ctx.universe.filters();
    for (const auto& F : filters)
      for (const auto& G : filters)
        for (const auto& f : cache.get(F.ground(), G.ground()))
          if (is_admissible(f, F))
            if (!visit(Instance{}.add(F).add(G).add(f))) return;
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    const auto& f = inst.pfun(0);
    auto reps = representatives(germ_of(f, F));
    bool some = false, every = true;
    for (const auto& r : reps) {
      bool local = is_local(r, F, G);
      some = some || local;
      every = every && local;
    }
    bool order = leq_filter(pushforward_filter(f, F), G);
    if (some != every || every != order)
      return fail("some rep local = " + std::to_string(some) + ", every rep local = " + std::to_string(every) +
                  ", phi(F) <= G = " + std::to_string(order));
    return ok();
  };
  return law;
}

LawDef germ_restriction() {
  LawDef law{"germ-restriction", false, arrows_with_subfilters, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& sub = inst.filter(0);
    const auto& phi = inst.arrow(0);
    auto restricted = germ_restrict(phi.germ(), sub);
    for (const auto& f : representatives(phi.germ()))
      if (!(germ_of(f, sub) == restricted)) return fail("(f/F)/F' differs from f/F' for f = " + show(f));
    // The restriction is an arrow F' -> phi(F'), and into G as well.
    FilArrow onto(restricted, germ_push(phi.germ(), sub));
    FilArrow into(restricted, phi.target());
    auto incl = FilArrow(germ_of(PartialFn::identity(sub.ground()), sub), phi.source());
    if (!(compose_arrows(phi, incl) == into)) return fail("phi o (1/F') differs from phi restricted to F'");
    return ok();
  };
  return law;
}

LawDef total_rep() {
  LawDef law{"total-representative", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    World w(ctx.universe.filters());
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j)
        for (const auto& phi : w.hom(i, j))
          if (!visit(Instance{}.add(phi))) return;
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& phi = inst.arrow(0);
    auto t = total_representative(phi);
    if (!phi.target().ground().empty() && !t.is_total()) return fail("total representative is not total");
    if (!(make_arrow(phi.source(), phi.target(), t) == phi)) return fail("total representative has another germ");
    return ok();
  };
  return law;
}

}  // namespace

std::vector<LawDef> germ_laws() {
  return {germ_equivalence(), germ_composition(), category_axioms(), germ_galois(), locality_conditions(),
          germ_restriction(), total_rep()};
}

}  // namespace filcat::detail
