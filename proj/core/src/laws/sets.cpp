#include "filcat/oracles.hpp"
#include "registry.hpp"

namespace filcat::detail {

namespace {

// Every (f, g) with f : S -> T and g : T -> W over the universe grounds.
void composable_pfuns(const LawContext& ctx, const Visit& visit) {
  PfunCache cache;
  auto grounds = ctx.universe.grounds();
  for (const auto& S : grounds)
    for (const auto& T : grounds)
      for (const auto& W : grounds)
        for (const auto& f : cache.get(S, T))
          for (const auto& g : cache.get(T, W))
            if (!visit(Instance{}.add(f).add(g))) return;
}

void single_pfuns(const LawContext& ctx, const Visit& visit) {
  PfunCache cache;
  auto grounds = ctx.universe.grounds();
  for (const auto& S : grounds)
    for (const auto& T : grounds)
      for (const auto& f : cache.get(S, T))
        if (!visit(Instance{}.add(f))) return;
}

LawDef finset_galois() {
  LawDef law{"finset-galois", false, single_pfuns, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    const auto outside = dd_of(f).complement();
    for (const auto& D : all_subsets(f.dom()))
      for (const auto& D2 : all_subsets(f.cod())) {
        bool lhs = image_subset(f, D).is_subset_of(D2);
        bool rhs = D.is_subset_of(outside | preimage_subset(f, D2));
        if (lhs != rhs)
          return fail("f(D) <= D' is " + std::to_string(lhs) + " but D <= (S - dd f) | f^-1(D') is " +
                      std::to_string(rhs) + " for D = " + D.to_string() + ", D' = " + D2.to_string());
      }
    return ok();
  };
  return law;
}

LawDef finset_dd_composition() {
  LawDef law{"finset-dd-composition", false, composable_pfuns, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    const auto& g = inst.pfun(1);
    auto gf = compose_partial(g, f);
    if (!(dd_of(gf) == (dd_of(f) & preimage_subset(f, dd_of(g)))))
      return fail("dd(g o f) = " + dd_of(gf).to_string() + " differs from dd f & f^-1(dd g)");
    for (std::size_t i = 0; i < f.dom().size(); ++i) {
      std::optional<std::size_t> expect;
      if (f.defined_at(i)) expect = g.at(*f.at(i));
      if (gf.at(i) != expect) return fail("(g o f)(" + f.dom()[i].to_string() + ") differs from g(f(s))");
    }
    return ok();
  };
  return law;
}

LawDef lpartial_composition() {
  LawDef law{"lpartial-composition", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    PfunCache cache;
    auto grounds = ctx.universe.grounds();
    for (const auto& S : grounds)
      for (const auto& T : grounds)
        for (const auto& W : grounds)
          for (const auto& V : grounds)
            for (const auto& f : cache.get(S, T))
              for (const auto& g : cache.get(T, W))
                for (const auto& h : cache.get(W, V))
                  if (!visit(Instance{}.add(f).add(g).add(h))) return;
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    const auto& g = inst.pfun(1);
    const auto& h = inst.pfun(2);
    if (!(compose_partial(h, compose_partial(g, f)) == compose_partial(compose_partial(h, g), f)))
      return fail("h o (g o f) differs from (h o g) o f");
    if (!(compose_partial(PartialFn::identity(f.cod()), f) == f) ||
        !(compose_partial(f, PartialFn::identity(f.dom())) == f))
      return fail("identity partial function is not a unit for f");
    return ok();
  };
  return law;
}

LawDef finset_functoriality() {
  LawDef law{"finset-functoriality", false, composable_pfuns, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    const auto& g = inst.pfun(1);
    auto gf = compose_partial(g, f);
    for (const auto& D : all_subsets(f.dom()))
      if (!(image_subset(g, image_subset(f, D)) == image_subset(gf, D)))
        return fail("g(f(D)) differs from (g o f)(D) for D = " + D.to_string());
    for (const auto& D : all_subsets(g.cod()))
      if (!(preimage_subset(f, preimage_subset(g, D)) == preimage_subset(gf, D)))
        return fail("f^-1(g^-1(D'')) differs from (g o f)^-1(D'') for D'' = " + D.to_string());
    return ok();
  };
  return law;
}

LawDef finset_restriction() {
  LawDef law{"finset-restriction", false, single_pfuns, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    auto subsets = all_subsets(f.dom());
    for (const auto& D : subsets) {
      auto r = restrict_partial(f, D);
      if (!(dd_of(r) == (dd_of(f) & D))) return fail("dd(f|D) differs from dd f & D for D = " + D.to_string());
      for (auto i : dd_of(r).indices())
        if (r.at(i) != f.at(i)) return fail("f|D disagrees with f for D = " + D.to_string());
      for (const auto& D2 : subsets)
        if (!(restrict_partial(r, D2) == restrict_partial(f, D & D2)))
          return fail("(f|D)|D' differs from f|(D & D') for D = " + D.to_string() + ", D' = " + D2.to_string());
    }
    return ok();
  };
  return law;
}

// (f, F) with f : S -> T and F on S, admissible or not as requested.
void pfun_filter_pairs(const LawContext& ctx, bool admissible, const Visit& visit) {
  PfunCache cache;
  auto grounds = ctx.universe.grounds();
  for (const auto& S : grounds) {
    auto filters = all_filters_on(S, ctx.universe.include_improper);
    for (const auto& T : grounds)
      for (const auto& f : cache.get(S, T))
        for (const auto& F : filters)
          if (is_admissible(f, F) == admissible)
            if (!visit(Instance{}.add(f).add(F))) return;
  }
}

LawDef filter_galois() {
  LawDef law{"filter-galois", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) { pfun_filter_pairs(ctx, true, visit); };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    const auto& F = inst.filter(0);
    if (!is_admissible(f, F)) return fail("f is not admissible for F, outside the hypothesis");
    auto pushed = pushforward_filter(f, F);
    for (const auto& G : all_filters_on(f.cod(), ctx.universe.include_improper)) {
      bool lhs = leq_filter(pushed, G);
      bool rhs = leq_filter(F, pullback_filter(f, G));
      if (lhs != rhs)
        return fail("f(F) <= G is " + std::to_string(lhs) + " but F <= f^-1(G) is " + std::to_string(rhs) +
                    " for G = " + show(G));
    }
    return ok();
  };
  return law;
}

// Without dd f in F the connection must break for some G.
LawDef filter_galois_hypothesis() {
  LawDef law{"filter-galois-hypothesis", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) { pfun_filter_pairs(ctx, false, visit); };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    const auto& F = inst.filter(0);
    if (is_admissible(f, F)) return fail("f is admissible for F, so the hypothesis holds");
    auto pushed = pushforward_filter(f, F);
    for (const auto& G : all_filters_on(f.cod(), true))
      if (leq_filter(pushed, G) != leq_filter(F, pullback_filter(f, G))) return ok();
    return fail("the connection holds for every G although dd f is not in F");
  };
  return law;
}

LawDef filter_functoriality() {
  LawDef law{"filter-functoriality", false, composable_pfuns, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& f = inst.pfun(0);
    const auto& g = inst.pfun(1);
    auto gf = compose_partial(g, f);
    const bool improper = ctx.universe.include_improper;
    for (const auto& F : all_filters_on(f.dom(), improper))
      if (!(pushforward_filter(g, pushforward_filter(f, F)) == pushforward_filter(gf, F)))
        return fail("g(f(F)) differs from (g o f)(F) for F = " + show(F));
    for (const auto& H : all_filters_on(g.cod(), improper))
      if (!(pullback_filter(f, pullback_filter(g, H)) == pullback_filter(gf, H)))
        return fail("f^-1(g^-1(H)) differs from (g o f)^-1(H) for H = " + show(H));
    return ok();
  };
  return law;
}

LawDef filter_lattice() {
  LawDef law{"filter-lattice", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    for (const auto& S : ctx.universe.grounds()) {
      auto filters = all_filters_on(S, ctx.universe.include_improper);
      for (const auto& F : filters)
        for (const auto& G : filters)
          if (!visit(Instance{}.add(F).add(G))) return;
    }
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    namespace o = oracles;
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    const Filter pair[] = {F, G};
    const auto n = F.ground().size();
    auto fam_f = o::family_of(F), fam_g = o::family_of(G);
    if (!(o::family_of(join_filters(pair)) == (fam_f & fam_g))) return fail("join differs from the family intersection");
    auto both = o::members(fam_f);
    for (auto m : o::members(fam_g)) both.push_back(m);
    if (!(o::family_of(meet_filters(pair)) == o::fg_family(n, both)))
      return fail("meet differs from Fg of the family union");
    if (leq_filter(F, G) != o::family_leq(fam_f, fam_g)) return fail("leq differs from reverse inclusion");

    auto subs = subfilters_of(F);
    if (subs.size() != (std::size_t{1} << F.core().size()))
      return fail("F has " + std::to_string(subs.size()) + " subfilters, expected 2^|core F|");
    const auto bottom = Filter::improper(F.ground());
    for (const auto& a : subs) {
      if (!leq_filter(a, F)) return fail(show(a) + " is listed as a subfilter but is not <= F");
      bool complemented = false;
      for (const auto& b : subs) {
        const Filter ab[] = {a, b};
        auto j = join_filters(ab), m = meet_filters(ab);
        if (!leq_filter(j, F)) return fail("subfilters are not closed under join");
        if (j == F && m == bottom) complemented = true;
        for (const auto& c : subs) {
          const Filter bc[] = {b, c};
          const Filter a_bc[] = {a, meet_filters(bc)};
          const Filter ac[] = {a, c};
          const Filter distributed[] = {join_filters(ab), join_filters(ac)};
          if (!(join_filters(a_bc) == meet_filters(distributed))) return fail("subfilter lattice is not distributive");
        }
      }
      if (!complemented) return fail(show(a) + " has no complement among the subfilters of F");
    }
    return ok();
  };
  return law;
}

}  // namespace

std::vector<LawDef> finset_laws() {
  return {finset_galois(), finset_dd_composition(), lpartial_composition(), finset_functoriality(),
          finset_restriction()};
}

std::vector<LawDef> filter_laws() {
  return {filter_galois(), filter_galois_hypothesis(), filter_functoriality(), filter_lattice()};
}

}  // namespace filcat::detail
