#include <algorithm>

#include "filcat/closedcat.hpp"
#include "filcat/monoidal.hpp"
#include "filcat/oracles.hpp"
#include "registry.hpp"

namespace filcat::detail {

namespace {

void filter_pairs(const LawContext& ctx, const Visit& visit) {
  auto fs = ctx.universe.filters();
  for (const auto& a : fs)
    for (const auto& b : fs)
      if (!visit(Instance{}.add(a).add(b))) return;
}

LawDef improper_boundary() {
  LawDef law{"improper-boundary", false, filter_pairs, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    auto homs = hom_set(F, G);
    if (!F.is_proper() && homs.size() != 1)
      return fail(std::to_string(homs.size()) + " arrows out of the improper filter " + show(F));
    if (F.is_proper() && !G.is_proper() && !homs.empty())
      return fail("an arrow from a proper filter into an improper one");
    if (!F.is_proper()) {
      const auto& phi = homs.front();
      if (!dd_of(phi.rep()).empty()) return fail("the arrow out of an improper filter has a nonempty representative");
      for (const auto& f : {PartialFn(F.ground(), G.ground()), total_representative(phi)})
        if (!(germ_of(f, F) == phi.germ())) return fail("two partial functions differ as germs on an improper filter");
    }
    return ok();
  };
  return law;
}

LawDef filter_count() {
  LawDef law{"filter-count", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    const auto letters = ctx.universe.letters(4);
    for (std::size_t n = 0; n <= 4; ++n) {
      std::vector<Atom> atoms;
      for (std::size_t i = 0; i < n; ++i) atoms.push_back(Atom::label(letters[i]));
      if (!visit(Instance{}.add(GroundSet(std::move(atoms))))) return;
    }
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& S = inst.set(0);
    const auto n = S.size();
    if (n > 4) return ok();
    auto families = oracles::all_filter_families(n);
    auto filters = all_filters_on(S, true);
    if (families.size() != (std::size_t{1} << n) || filters.size() != families.size())
      return fail(std::to_string(families.size()) + " filter families and " + std::to_string(filters.size()) +
                  " filters on a " + std::to_string(n) + "-set, expected " + std::to_string(1U << n));
    for (const auto& F : filters)
      if (std::find(families.begin(), families.end(), oracles::family_of(F)) == families.end())
        return fail("filter " + show(F) + " is not among the scanned families");
    return ok();
  };
  return law;
}

LawDef hom_count() {
  LawDef law{"hom-count", false, filter_pairs, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    auto homs = hom_set(F, G);
    const auto expect = checked_power(G.core().size(), F.core().size());
    if (homs.size() != expect || hom_set_size(F, G) != expect)
      return fail("|Fil(F, G)| = " + std::to_string(homs.size()) + ", expected |core G|^|core F| = " +
                  std::to_string(expect));
    // Distinct germs among all admissible, local partial functions.
    std::vector<Germ> germs;
    for (const auto& f : all_partial_functions(F.ground(), G.ground())) {
      if (!is_admissible(f, F) || !is_local(f, F, G)) continue;
      auto g = germ_of(f, F);
      if (std::find(germs.begin(), germs.end(), g) == germs.end()) germs.push_back(g);
    }
    if (germs.size() != expect) return fail(std::to_string(germs.size()) + " germ classes by brute force");
    for (const auto& a : homs)
      if (std::find(germs.begin(), germs.end(), a.germ()) == germs.end()) return fail("hom_set lists a stray germ");
    return ok();
  };
  return law;
}

// Cases: (F, f) for f : S -> T, plus (F, G) on product-sized grounds for the tensor
// and (G, H) for the internal hom.
LawDef oracle_cross_check_law() {
  LawDef law{"oracle-cross-check", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    PfunCache cache;
    auto grounds = ctx.universe.grounds(ctx.universe.oracle_ground);
    for (const auto& S : grounds) {
      auto fs = all_filters_on(S, ctx.universe.include_improper);
      for (const auto& T : grounds)
        for (const auto& f : cache.get(S, T))
          for (const auto& F : fs)
            if (!visit(Instance{}.add(F).add(f))) return;
    }
    auto small = ctx.universe.filters(ctx.universe.oracle_ground);
    for (const auto& F : small)
      for (const auto& G : small)
        if (!visit(Instance{}.add(F).add(G))) return;
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    namespace o = oracles;
    const auto& F = inst.filter(0);
    const auto& S = F.ground();
    auto fam = o::family_of(F);
    if (!inst.pfuns.empty()) {
      const auto& f = inst.pfun(0);
      const auto& T = f.cod();
      if (!o::is_filter_family(S.size(), fam)) return fail("the members of " + show(F) + " do not form a filter");
      if (o::fg_least(S.size(), o::members(fam)) != o::mask_of(F.core())) return fail("core differs from the least member");
      for (const auto& F2 : all_filters_on(S, true))
        if (leq_filter(F, F2) != o::family_leq(fam, o::family_of(F2))) return fail("leq disagrees with " + show(F2));
      auto push = pushforward_filter(f, F);
      if (!(o::family_of(push) == o::push_family(f, fam))) return fail("f(F) differs from Fg of images");
      for (const auto& G : all_filters_on(T, true)) {
        auto gfam = o::family_of(G);
        if (!(o::family_of(pullback_filter(f, G)) == o::pull_family(f, gfam))) return fail("f^-1 differs on " + show(G));
        if (is_admissible(f, F) && is_local(f, F, G) != o::local_quantified(f, fam, gfam))
          return fail("locality differs on " + show(G));
      }
      if (is_admissible(f, F) && S.size() * T.size() <= 4) {
        for (const auto& g : all_partial_functions(S, T)) {
          if (!is_admissible(g, F)) continue;
          if (germ_equiv(f, g, F) != o::germ_equiv_quantified(f, g, fam))
            return fail("germ equivalence differs for " + show(f) + " and " + show(g));
        }
      }
      // Fg of an arbitrary pair of subsets against its literal closure.
      auto subs = all_subsets(S);
      for (const auto& X : subs) {
        Subset Y = X.complement() | dd_of(f);
        auto fg = fg_filter(FilterBase{S, {X, Y}});
        if (!(o::family_of(fg) == o::fg_family(S.size(), {o::mask_of(X), o::mask_of(Y)})))
          return fail("Fg differs for base {" + X.to_string() + " " + Y.to_string() + "}");
      }
      return ok();
    }
    const auto& G = inst.filter(1);
    auto B = box_filter(F, G);
    auto bfam = o::family_of(B);
    if (!(o::fg_family(B.ground().size(), o::box_base(F, G)) == bfam)) return fail("F box G differs from Fg of its base");
    for (auto x = std::size_t{0}; x < bfam.size(); ++x)
      if (box_member(F, G, o::subset_of(B.ground(), static_cast<o::Mask>(x))) != bfam.test(x))
        return fail("the slice test disagrees with F box G");
    // G plays the role of H: the internal hom F^G.
    if (checked_power(S.size(), G.core().size()) <= 32) {
      auto hom = internal_hom(F, G, ctx.universe.hom_cap);
      auto least = o::fg_least(hom.filter.ground().size(), o::internal_hom_base(hom));
      if (least != o::mask_of(hom.filter.core())) return fail("core of the internal hom differs from its base");
    }
    return ok();
  };
  return law;
}

}  // namespace

std::vector<LawDef> boundary_laws() { return {improper_boundary(), filter_count(), hom_count()}; }

LawDef oracle_law() { return oracle_cross_check_law(); }

}  // namespace filcat::detail
