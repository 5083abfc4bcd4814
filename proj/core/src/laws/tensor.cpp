#include <random>

#include "filcat/closedcat.hpp"
#include "filcat/factorization.hpp"
#include "filcat/limits.hpp"
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

void filter_triples(const LawContext& ctx, const Visit& visit) {
  auto fs = ctx.universe.filters();
  for (const auto& a : fs)
    for (const auto& b : fs)
      for (const auto& c : fs)
        if (!visit(Instance{}.add(a).add(b).add(c))) return;
}

void arrow_pairs(const LawContext& ctx, const Visit& visit) {
  World w(ctx.universe.filters());
  std::vector<FilArrow> all;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      for (const auto& a : w.hom(i, j)) all.push_back(a);
  for (const auto& a : all)
    for (const auto& b : all)
      if (!visit(Instance{}.add(a).add(b))) return;
}

FilArrow box(const FilArrow& a, const FilArrow& b) { return box_arrow(a, b); }
FilArrow id(const Filter& F) { return identity_arrow(F); }

LawDef box_membership() {
  LawDef law{"box-membership", false, filter_pairs, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    auto B = box_filter(F, G);
    const auto m = G.ground().size();
    for (const auto& X : all_subsets(B.ground())) {
      const bool member = box_member(F, G, X);
      if (member != member_filter(B, X)) return fail("slice test and F box G disagree on " + X.to_string());
      if (!member) continue;
      auto w = box_witness(F, G, X);
      if (!member_filter(F, w.big_f())) return fail("F_X is not in F for X = " + X.to_string());
      // X = S box h with h the slices, and F_X box h lies inside X.
      for (std::size_t s = 0; s < F.ground().size(); ++s) {
        if (!w.big_f().contains(s)) continue;
        const auto& h = w.small_h(s);
        if (!member_filter(G, h)) return fail("a slice of X is not in G for X = " + X.to_string());
        for (auto t : h.indices())
          if (!X.contains(s * m + t)) return fail("F_X box h is not inside X = " + X.to_string());
      }
    }
    return ok();
  };
  return law;
}

LawDef box_base() {
  LawDef law{"box-base", false, filter_pairs, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    auto B = box_filter(F, G);
    const auto n = B.ground().size();
    if (n > 16) return ok();
    auto base = oracles::box_base(F, G);
    if (!(oracles::fg_family(n, base) == oracles::family_of(B))) return fail("Fg of the sets F' box g is not F box G");
    // Any two base sets contain a third.
    for (auto x : base)
      for (auto y : base) {
        bool found = false;
        for (auto z : base)
          if ((z & ~(x & y)) == 0) {
            found = true;
            break;
          }
        if (!found) return fail("the sets F' box g are not a filter base");
      }
    return ok();
  };
  return law;
}

// phi : F -> F', psi : G -> G'. Covers (phi box psi) for LPartial representatives,
// independence of representatives and compatibility with composition on each side.
LawDef monoidal_functoriality() {
  LawDef law{"monoidal-functoriality", false, arrow_pairs, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& phi = inst.arrow(0);
    const auto& psi = inst.arrow(1);
    auto b = box(phi, psi);
    const auto& src = b.source();
    auto ft = total_representative(phi), gt = total_representative(psi);
    for (const auto& f : {phi.rep(), ft})
      for (const auto& g : {psi.rep(), gt}) {
        auto fg = box_partial(f, g);
        if (!is_admissible(fg, src) || !is_local(fg, src, b.target()))
          return fail("f box g is not in LPartial for f = " + show(f) + ", g = " + show(g));
        if (!(germ_of(fg, src) == b.germ())) return fail("the germ of f box g depends on the representatives");
      }
    if (!(box(id(phi.source()), id(psi.source())) == id(src))) return fail("1 box 1 is not the identity");
    // Composition in each variable with the identity on the other side.
    auto left = compose(ctx, box(phi, id(psi.target())), box(id(phi.source()), psi));
    auto right = compose(ctx, box(id(phi.target()), psi), box(phi, id(psi.source())));
    if (!(left == b) || !(right == b))
      return fail("phi box psi does not factor through one-sided boxes", {{"left", left}, {"right", right}});
    for (const auto& K : ctx.universe.filters())
      for (const auto& chi : hom_set(phi.target(), K)) {
        auto lhs = box(compose(ctx, chi, phi), psi);
        auto rhs = compose(ctx, box(chi, id(psi.target())), b);
        if (!(lhs == rhs)) return fail("(chi o phi) box psi differs", {{"chi", chi}, {"lhs", lhs}, {"rhs", rhs}});
      }
    return ok();
  };
  return law;
}

// Naturality of alpha in each variable, and of lambda and rho.
LawDef monoidal_naturality() {
  LawDef law{"monoidal-naturality", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    World w(ctx.universe.filters());
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < w.size(); ++j)
        for (const auto& phi : w.hom(i, j))
          for (const auto& D1 : w.filters())
            for (const auto& D2 : w.filters())
              if (!visit(Instance{}.add(D1).add(D2).add(phi))) return;
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& D1 = inst.filter(0);
    const auto& D2 = inst.filter(1);
    const auto& phi = inst.arrow(0);
    const auto& A = phi.source();
    const auto& B = phi.target();
    auto natural = [&](const FilArrow& top, const FilArrow& bottom, const FilArrow& a0, const FilArrow& a1,
                       const std::string& where) -> Check {
      auto lhs = compose(ctx, a1, top);
      auto rhs = compose(ctx, bottom, a0);
      if (!(lhs == rhs)) return fail(where, {{"lhs", lhs}, {"rhs", rhs}});
      return ok();
    };
    if (auto f = natural(box(phi, box(id(D1), id(D2))), box(box(phi, id(D1)), id(D2)), associator(A, D1, D2),
                         associator(B, D1, D2), "alpha is not natural in its first variable"))
      return f;
    if (auto f = natural(box(id(D1), box(phi, id(D2))), box(box(id(D1), phi), id(D2)), associator(D1, A, D2),
                         associator(D1, B, D2), "alpha is not natural in its second variable"))
      return f;
    if (auto f = natural(box(id(D1), box(id(D2), phi)), box(box(id(D1), id(D2)), phi), associator(D1, D2, A),
                         associator(D1, D2, B), "alpha is not natural in its third variable"))
      return f;
    const auto u = unit_filter();
    if (auto f = natural(box(id(u), phi), phi, left_unitor(A), left_unitor(B), "lambda is not natural")) return f;
    if (auto f = natural(box(phi, id(u)), phi, right_unitor(A), right_unitor(B), "rho is not natural")) return f;
    return ok();
  };
  return law;
}

LawDef monoidal_coherence() {
  LawDef law{"monoidal-coherence", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    auto fs = ctx.universe.filters();
    for (const auto& a : fs)
      for (const auto& b : fs) {
        if (!visit(Instance{}.add(a).add(b))) return;
        for (const auto& c : fs)
          for (const auto& d : fs)
            if (!visit(Instance{}.add(a).add(b).add(c).add(d))) return;
      }
  };
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto u = unit_filter();
    if (inst.filters.size() == 2) {
      const auto& A = inst.filter(0);
      const auto& B = inst.filter(1);
      auto lam = left_unitor(A), rho = right_unitor(A), alpha = associator(A, u, B);
      if (!is_iso(lam) || !is_iso(rho)) return fail("a unitor is not an iso", {{"lambda", lam}, {"rho", rho}});
      auto lhs = compose(ctx, box(right_unitor(A), id(B)), alpha);
      auto rhs = box(id(A), left_unitor(B));
      if (!(lhs == rhs)) return fail("the triangle does not commute", {{"lhs", lhs}, {"rhs", rhs}});
      return ok();
    }
    const auto& A = inst.filter(0);
    const auto& B = inst.filter(1);
    const auto& C = inst.filter(2);
    const auto& D = inst.filter(3);
    auto abc = associator(A, B, C);
    if (!is_iso(abc)) return fail("alpha is not an iso", {{"alpha", abc}});
    auto lhs = compose(ctx, associator(box_filter(A, B), C, D), associator(A, B, box_filter(C, D)));
    auto rhs = compose(ctx, box(abc, id(D)),
                       compose(ctx, associator(A, box_filter(B, C), D), box(id(A), associator(B, C, D))));
    if (!(lhs == rhs)) return fail("the pentagon does not commute", {{"lhs", lhs}, {"rhs", rhs}});
    return ok();
  };
  return law;
}

LawDef core_strict_monoidal() {
  LawDef law{"core-strict-monoidal", false, arrow_pairs, {}};
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& phi = inst.arrow(0);
    const auto& psi = inst.arrow(1);
    auto b = box(phi, psi);
    auto cp = sub_ground(phi.source().core()), cq = sub_ground(psi.source().core());
    if (!(sub_ground(b.source().core()) == product_ground(cp, cq))) return fail("core(F box G) is not core F x core G");
    auto cb = core_of_arrow(b), cf = core_of_arrow(phi), cg = core_of_arrow(psi);
    for (const auto& p : cb.dom().atoms())
      if (cb(p) != Atom::pair(*cf(p.first()), *cg(p.second())))
        return fail("core(phi box psi) differs from core phi x core psi at " + p.to_string());
    if (sub_ground(unit_filter().core()).size() != 1) return fail("core u is not a point");
    auto alpha = core_of_arrow(associator(phi.source(), psi.source(), phi.target()));
    for (const auto& p : alpha.dom().atoms()) {
      auto expect = Atom::pair(Atom::pair(p.first(), p.second().first()), p.second().second());
      if (alpha(p) != expect) return fail("core alpha is not the set associator at " + p.to_string());
    }
    return ok();
  };
  return law;
}

LawDef unit_terminal() {
  LawDef law{"unit-terminal", false, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    for (const auto& F : ctx.universe.filters())
      if (!visit(Instance{}.add(F))) return;
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto u = unit_filter();
    auto to_u = hom_set(F, u);
    if (to_u.size() != 1 || !(to_u.front() == terminal_arrow(F)))
      return fail(std::to_string(to_u.size()) + " arrows into u");
    auto from_u = hom_set(u, F);
    if (from_u.size() != F.core().size()) return fail("|Fil(u, F)| differs from |core F|");
    Subset hit(F.ground());
    for (const auto& x : from_u) hit.insert(*x.rep().at(0));
    if (!(hit == F.core())) return fail("Fil(u, F) does not pick out core F");
    return ok();
  };
  return law;
}

// Random element of LPartial(F, G): core points into core G, anything elsewhere.
PartialFn random_lpartial(const Filter& F, const Filter& G, std::mt19937_64& rng) {
  PartialFn f(F.ground(), G.ground());
  auto core_g = G.core().indices();
  for (std::size_t i = 0; i < F.ground().size(); ++i) {
    if (F.core().contains(i)) {
      f.set(i, core_g[std::uniform_int_distribution<std::size_t>(0, core_g.size() - 1)(rng)]);
    } else {
      auto v = std::uniform_int_distribution<std::size_t>(0, G.ground().size())(rng);
      if (v < G.ground().size()) f.set(i, v);
    }
  }
  return f;
}

bool lpartial_nonempty(const Filter& F, const Filter& G) { return F.core().empty() || !G.core().empty(); }

LawDef box_slices() {
  LawDef law{"box-slices", true, {}, {}};
  law.enumerate = [](const LawContext& ctx, const Visit& visit) {
    std::mt19937_64 rng(ctx.universe.seed);
    auto filters = ctx.universe.filters(std::max<std::size_t>(ctx.universe.max_ground, 3));
    auto pick = [&] { return filters[std::uniform_int_distribution<std::size_t>(0, filters.size() - 1)(rng)]; };
    for (std::size_t n = 0; n < ctx.universe.samples; ++n) {
      // F, Fbar, G, Gtilde, H; q : F box H -> G, qbar : Fbar -> F, qtilde : G -> Gtilde.
      std::vector<Filter> fs;
      do {
        fs = {pick(), pick(), pick(), pick(), pick()};
      } while (!lpartial_nonempty(box_filter(fs[0], fs[4]), fs[2]) || !lpartial_nonempty(fs[1], fs[0]) ||
               !lpartial_nonempty(fs[2], fs[3]));
      Instance inst;
      for (const auto& f : fs) inst.add(f);
      inst.add(random_lpartial(box_filter(fs[0], fs[4]), fs[2], rng));
      inst.add(random_lpartial(fs[1], fs[0], rng));
      inst.add(random_lpartial(fs[2], fs[3], rng));
      if (!visit(inst)) return;
    }
  };
  law.check = [](const LawContext&, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& Fbar = inst.filter(1);
    const auto& G = inst.filter(2);
    const auto& Gt = inst.filter(3);
    const auto& H = inst.filter(4);
    const auto& q = inst.pfun(0);
    const auto& qbar = inst.pfun(1);
    const auto& qt = inst.pfun(2);
    const auto FH = box_filter(F, H);
    if (!is_admissible(q, FH) || !is_local(q, FH, G) || !is_admissible(qbar, Fbar) || !is_local(qbar, Fbar, F) ||
        !is_admissible(qt, G) || !is_local(qt, G, Gt))
      return fail("the sampled partial functions are not in LPartial");
    auto qhat = compose_partial(q, box_partial(qbar, PartialFn::identity(H.ground())));
    auto dq = dd_of(q), dhat = dd_of(qhat), dqt = dd_of(compose_partial(qt, q));
    auto Fq = big_f(F, H, dq), Fhat = big_f(Fbar, H, dhat), Ft = big_f(F, H, dqt);
    // With H improper the empty slice is in H, so points outside dd qbar land in
    // F for q-hat; equality then only holds on dd qbar.
    const auto pre = preimage_subset(qbar, Fq);
    const auto ddbar = dd_of(qbar);
    if (!((Fhat & ddbar) == pre)) return fail("(1) F for q-hat meets dd qbar outside qbar^-1 of F for q");
    if ((H.is_proper() || qbar.is_total()) && !(Fhat == pre))
      return fail("(1) F for q-hat is not qbar^-1 of F for q");
    auto wq = box_witness(F, H, dq), what = box_witness(Fbar, H, dhat), wt = box_witness(F, H, dqt);
    for (auto s : (Fhat & ddbar).indices())
      if (!(what.small_h(s) == wq.small_h(*qbar.at(s)))) return fail("(2) h for q-hat differs at " + Fbar.ground()[s].to_string());
    if (!Ft.is_subset_of(Fq)) return fail("(3) F for qtilde o q is not inside F for q");
    for (auto s : Ft.indices())
      if (!wt.small_h(s).is_subset_of(wq.small_h(s))) return fail("(4) h for qtilde o q is not inside h for q");
    return ok();
  };
  return law;
}

// Every (G, H) whose internal hom fits under the cap.
void hom_pairs(const LawContext& ctx, const Visit& visit) {
  auto fs = ctx.universe.filters();
  for (const auto& G : fs)
    for (const auto& H : fs)
      if (checked_power(G.ground().size(), H.core().size()) <= ctx.universe.hom_cap)
        if (!visit(Instance{}.add(G).add(H))) return;
}

LawDef internal_hom_law() {
  LawDef law{"internal-hom", false, hom_pairs, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& G = inst.filter(0);
    const auto& H = inst.filter(1);
    auto hom = internal_hom(G, H, ctx.universe.hom_cap);
    const auto& T = G.ground();
    if (hom.filter.ground().size() != checked_power(T.size(), H.core().size()))
      return fail("|ground G^H| = " + std::to_string(hom.filter.ground().size()) + ", expected |T|^|core H|");
    for (const auto& g : enum_admissible_germs(H, T))
      if (!hom.filter.ground().contains(encode_germ(g))) return fail("a germ H -> T is missing from the ground");
    auto arrows = hom_set(H, G);
    if (arrows.size() != hom.filter.core().size()) return fail("|core G^H| differs from |Fil(H, G)|");
    for (const auto& code : hom.filter.core().atoms()) {
      FilArrow a(decode_germ(code, T), G);
      if (std::find(arrows.begin(), arrows.end(), a) == arrows.end())
        return fail("core element " + code.to_string() + " is not in Fil(H, G)");
    }
    if (hom.filter.ground().size() <= 32) {
      auto least = oracles::fg_least(hom.filter.ground().size(), oracles::internal_hom_base(hom));
      if (least != oracles::mask_of(hom.filter.core())) return fail("the base Gamma(Partial(H, G, G')) has another core");
    }
    return ok();
  };
  return law;
}

bool fits(const LawContext& ctx, const Filter& G, const Filter& H) {
  return checked_power(G.ground().size(), H.core().size()) <= ctx.universe.hom_cap;
}

LawDef chi_bijection() {
  LawDef law{"chi-bijection", false, filter_triples, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    const auto& H = inst.filter(2);
    if (!fits(ctx, G, H)) return ok();
    auto hom = internal_hom(G, H, ctx.universe.hom_cap);
    auto left = hom_set(box_filter(F, H), G);
    auto right = hom_set(F, hom.filter);
    const auto expect = checked_power(G.core().size(), F.core().size() * H.core().size());
    if (left.size() != expect || right.size() != expect)
      return fail("|Fil(F box H, G)| = " + std::to_string(left.size()) + ", |Fil(F, G^H)| = " +
                  std::to_string(right.size()) + ", expected " + std::to_string(expect));
    for (const auto& kappa : left) {
      auto c = curry(hom, F, kappa);
      if (!(uncurry(hom, c) == kappa)) return fail("uncurry o curry is not 1", {{"kappa", kappa}, {"curried", c}});
    }
    for (const auto& rho : right) {
      auto u = uncurry(hom, rho);
      if (!(curry(hom, F, u) == rho)) return fail("curry o uncurry is not 1", {{"rho", rho}, {"uncurried", u}});
    }
    return ok();
  };
  return law;
}

LawDef chi_naturality() {
  LawDef law{"chi-naturality", false, filter_triples, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& F = inst.filter(0);
    const auto& G = inst.filter(1);
    const auto& H = inst.filter(2);
    if (!fits(ctx, G, H)) return ok();
    const auto cap = ctx.universe.hom_cap;
    auto hom = internal_hom(G, H, cap);
    auto kappas = hom_set(box_filter(F, H), G);
    if (kappas.empty()) return ok();
    const auto filters = ctx.universe.filters();
    for (const auto& Fbar : filters) {
      auto bars = hom_set(Fbar, F);
      for (const auto& kappa : kappas) {
        auto ck = curry(hom, F, kappa);
        for (const auto& kbar : bars) {
          auto lhs = curry(hom, Fbar, compose(ctx, kappa, box_arrow(kbar, identity_arrow(H))));
          auto rhs = compose(ctx, ck, kbar);
          if (!(lhs == rhs))
            return fail("chi is not natural in F", {{"kappa", kappa}, {"kappa_bar", kbar}, {"lhs", lhs}, {"rhs", rhs}});
        }
      }
    }
    for (const auto& Gt : filters) {
      if (!fits(ctx, Gt, H)) continue;
      auto tildes = hom_set(G, Gt);
      if (tildes.empty()) continue;
      auto hom_t = internal_hom(Gt, H, cap);
      for (const auto& kt : tildes) {
        auto action = hom_action_left(kt, H, cap);
        for (const auto& kappa : kappas) {
          auto lhs = curry(hom_t, F, compose(ctx, kt, kappa));
          auto rhs = compose(ctx, action, curry(hom, F, kappa));
          if (!(lhs == rhs))
            return fail("chi is not natural in G", {{"kappa", kappa}, {"kappa_tilde", kt}, {"lhs", lhs}, {"rhs", rhs}});
        }
      }
    }
    return ok();
  };
  return law;
}

LawDef adjunction_triangles() {
  LawDef law{"adjunction-triangles", false, filter_pairs, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& X = inst.filter(0);
    const auto& H = inst.filter(1);
    const auto cap = ctx.universe.hom_cap;
    auto XH = box_filter(X, H);
    if (fits(ctx, XH, H) && fits(ctx, box_filter(internal_hom(XH, H, cap).filter, H), H)) {
      // epsilon_(X box H) o (eta_X box 1_H) = 1.
      auto eta = eta_unit(X, H, cap);
      auto lhs = compose(ctx, epsilon_counit(XH, H, cap), box_arrow(eta, identity_arrow(H)));
      if (!(lhs == identity_arrow(XH))) return fail("epsilon o (eta box 1) is not 1", {{"lhs", lhs}});
      // chi(kappa) = kappa^H o eta for every kappa : X box H -> G, G = X box H here.
      auto hom = internal_hom(XH, H, cap);
      for (const auto& kappa : hom_set(XH, XH)) {
        auto via_eta = compose(ctx, hom_action_left(kappa, H, cap), eta);
        if (!(curry(hom, X, kappa) == via_eta)) return fail("chi(kappa) differs from kappa^H o eta", {{"kappa", kappa}});
      }
    }
    if (fits(ctx, X, H)) {
      auto XtoH = internal_hom(X, H, cap).filter;
      if (fits(ctx, box_filter(XtoH, H), H)) {
        // epsilon_X^H o eta_(X^H) = 1.
        auto lhs = compose(ctx, hom_action_left(epsilon_counit(X, H, cap), H, cap), eta_unit(XtoH, H, cap));
        if (!(lhs == identity_arrow(XtoH))) return fail("epsilon^H o eta is not 1", {{"lhs", lhs}});
        // uncurry(rho) = epsilon o (rho box 1) for rho : F -> X^H, F = X^H here.
        auto hom = internal_hom(X, H, cap);
        auto eps = epsilon_counit(X, H, cap);
        for (const auto& rho : hom_set(XtoH, XtoH)) {
          auto via_eps = compose(ctx, eps, box_arrow(rho, identity_arrow(H)));
          if (!(uncurry(hom, rho) == via_eps)) return fail("uncurry(rho) differs from epsilon o (rho box 1)", {{"rho", rho}});
        }
      }
    }
    return ok();
  };
  return law;
}

LawDef hom_functoriality() {
  LawDef law{"hom-functoriality", false, arrow_pairs, {}};
  law.check = [](const LawContext& ctx, const Instance& inst) -> Check {
    const auto& gamma = inst.arrow(0);
    const auto& rho = inst.arrow(1);
    const auto cap = ctx.universe.hom_cap;
    const auto& G = gamma.source();
    const auto& G2 = gamma.target();
    const auto& H2 = rho.source();
    const auto& H = rho.target();
    for (const auto& pair : {std::pair{G, H}, std::pair{G2, H}, std::pair{G, H2}, std::pair{G2, H2}})
      if (!fits(ctx, pair.first, pair.second)) return ok();
    // gamma^H' o G^rho = G'^rho o gamma^H.
    auto lhs = compose(ctx, hom_action_left(gamma, H2, cap), hom_action_right(rho, G, cap));
    auto rhs = compose(ctx, hom_action_right(rho, G2, cap), hom_action_left(gamma, H, cap));
    if (!(lhs == rhs)) return fail("the two actions do not commute", {{"lhs", lhs}, {"rhs", rhs}});
    auto GH = internal_hom(G, H, cap).filter;
    if (!(hom_action_left(identity_arrow(G), H, cap) == identity_arrow(GH)) ||
        !(hom_action_right(identity_arrow(H), G, cap) == identity_arrow(GH)))
      return fail("identities do not act as identities");
    for (const auto& K : ctx.universe.filters()) {
      if (!fits(ctx, K, H)) continue;
      for (const auto& delta : hom_set(G2, K)) {
        auto composite = hom_action_left(compose(ctx, delta, gamma), H, cap);
        auto stepwise = compose(ctx, hom_action_left(delta, H, cap), hom_action_left(gamma, H, cap));
        if (!(composite == stepwise)) return fail("(delta o gamma)^H differs", {{"delta", delta}});
      }
      if (!fits(ctx, G, K)) continue;
      for (const auto& sigma : hom_set(K, H2)) {
        auto composite = hom_action_right(compose(ctx, rho, sigma), G, cap);
        auto stepwise = compose(ctx, hom_action_right(sigma, G, cap), hom_action_right(rho, G, cap));
        if (!(composite == stepwise)) return fail("G^(rho o sigma) differs", {{"sigma", sigma}});
      }
    }
    return ok();
  };
  return law;
}

}  // namespace

std::vector<LawDef> monoidal_laws() {
  return {box_membership(),      box_base(),           monoidal_functoriality(), monoidal_naturality(),
          monoidal_coherence(), core_strict_monoidal(), unit_terminal()};
}

std::vector<LawDef> closed_laws() {
  return {box_slices(), internal_hom_law(), chi_bijection(), chi_naturality(), adjunction_triangles(),
          hom_functoriality()};
}

}  // namespace filcat::detail
