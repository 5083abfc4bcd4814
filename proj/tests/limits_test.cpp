#include "filcat/limits.hpp"

#include "filcat/factorization.hpp"
#include "filcat/laws.hpp"
#include "support.hpp"

namespace filcat::test {
namespace {

const GroundSet S = set({"0", "1", "2"});
const GroundSet D = set({"0", "1"});
const GroundSet T = set({"x", "y"});

TEST(Equalizer, AgreementSet) {
  auto F = filt(D, {"0", "1"});
  auto a = make_arrow(F, Filter::top(T), pf(D, T, {{"0", "x"}, {"1", "x"}}));
  auto b = make_arrow(F, Filter::top(T), pf(D, T, {{"0", "x"}, {"1", "y"}}));
  auto eq = equalizer(a, b);
  EXPECT_EQ(eq.object.core(), sub(D, {"0"}));
  EXPECT_EQ(compose_arrows(a, eq.inclusion), compose_arrows(b, eq.inclusion));
  // Fg over all representative pairs: each agreement set of total representatives.
  FilterBase base{D, {}};
  for (const auto& f : all_partial_functions(D, T))
    for (const auto& g : all_partial_functions(D, T)) {
      if (!is_admissible(f, F) || !germ_equiv(f, a.rep(), F) || !germ_equiv(g, b.rep(), F)) continue;
      Subset agree(D);
      for (std::size_t i = 0; i < D.size(); ++i)
        if (f.defined_at(i) && f.at(i) == g.at(i)) agree.insert(i);
      base.sets.push_back(agree);
    }
  EXPECT_EQ(fg_filter(base), eq.object);
}

TEST(Equalizer, Degenerate) {
  auto F = filt(D, {"0", "1"});
  auto a = make_arrow(F, Filter::top(T), pf(D, T, {{"0", "x"}, {"1", "x"}}));
  auto same = equalizer(a, a);
  EXPECT_EQ(same.object, F);
  EXPECT_TRUE(is_iso(same.inclusion));
  auto c = make_arrow(F, Filter::top(T), pf(D, T, {{"0", "y"}, {"1", "y"}}));
  EXPECT_TRUE(equalizer(a, c).object.core().empty());
  EXPECT_ERRC(equalizer(a, identity_arrow(F)), Errc::not_parallel);
}

TEST(Equalizer, Mediator) {
  auto F = filt(D, {"0", "1"});
  auto a = make_arrow(F, Filter::top(T), pf(D, T, {{"0", "x"}, {"1", "x"}}));
  auto b = make_arrow(F, Filter::top(T), pf(D, T, {{"0", "x"}, {"1", "y"}}));
  auto eq = equalizer(a, b);
  auto K = filt(set({"k"}), {"k"});
  auto gamma = make_arrow(K, F, pf(set({"k"}), D, {{"k", "0"}}));
  auto h = equalizer_mediator(eq, a, b, gamma);
  EXPECT_EQ(compose_arrows(eq.inclusion, h), gamma);
  auto bad = make_arrow(K, F, pf(set({"k"}), D, {{"k", "1"}}));
  EXPECT_ERRC(equalizer_mediator(eq, a, b, bad), Errc::non_commuting);
}

TEST(Product, Cores) {
  auto A = set({"a", "b"});
  std::vector<Filter> fs{filt(A, {"a"}), filt(T, {"x"})};
  auto p = product_fil(fs);
  EXPECT_EQ(p.apex.core().atoms(), std::vector<Atom>{Atom::pair(lab("a"), lab("x"))});
  // It is the meet of the pullbacks of the factors along the projections.
  const auto& P = p.apex.ground();
  PartialFn first(P, A), second(P, T);
  for (std::size_t i = 0; i < P.size(); ++i) {
    first.set(i, A.require_index(P[i].first()));
    second.set(i, T.require_index(P[i].second()));
  }
  std::vector<Filter> pulls{pullback_filter(first, fs[0]), pullback_filter(second, fs[1])};
  EXPECT_EQ(meet_filters(pulls), p.apex);
  auto empty = product_fil(std::vector<Filter>{});
  EXPECT_EQ(empty.apex, unit_filter());
  EXPECT_TRUE(empty.legs.empty());
  std::vector<Filter> with_improper{filt(A, {"a"}), Filter::improper(T)};
  EXPECT_TRUE(product_fil(with_improper).apex.core().empty());
}

TEST(Product, MediatorAndTerminal) {
  std::vector<Filter> fs{filt(D, {"0", "1"}), filt(T, {"x", "y"})};
  auto p = product_fil(fs);
  auto K = Filter::top(set({"k"}));
  std::vector<FilArrow> legs{make_arrow(K, fs[0], pf(set({"k"}), D, {{"k", "1"}})),
                             make_arrow(K, fs[1], pf(set({"k"}), T, {{"k", "x"}}))};
  auto m = product_mediator(p, legs);
  EXPECT_EQ(compose_arrows(p.legs[0], m), legs[0]);
  EXPECT_EQ(compose_arrows(p.legs[1], m), legs[1]);
  EXPECT_EQ(terminal_arrow(K).target(), unit_filter());
}

TEST(PullbackMonos, MeetOfImages) {
  auto F = Filter::top(S);
  std::vector<FilArrow> ms{subobject_of(F, filt(S, {"0", "1"})), subobject_of(F, filt(S, {"1", "2"}))};
  auto pb = pullback_monos(F, ms);
  EXPECT_EQ(pb.apex.core(), sub(S, {"1"}));
  std::vector<FilArrow> one{ms[0]};
  auto single = pullback_monos(F, one);
  ASSERT_EQ(single.legs.size(), 1U);
  EXPECT_TRUE(is_iso(single.legs[0]));
  std::vector<FilArrow> disjoint{subobject_of(F, filt(S, {"0"})), subobject_of(F, filt(S, {"2"}))};
  EXPECT_TRUE(pullback_monos(F, disjoint).apex.core().empty());
  auto collapse = make_arrow(Filter::top(D), F, pf(D, S, {{"0", "0"}, {"1", "0"}}));
  EXPECT_ERRC(pullback_monos(F, std::vector<FilArrow>{collapse}), Errc::class_violation);
}

TEST(PullbackCospan, Cases) {
  auto X = set({"x"});
  auto A = set({"a"});
  auto phi = make_arrow(filt(D, {"0", "1"}), Filter::top(X), pf(D, X, {{"0", "x"}, {"1", "x"}}));
  auto psi = make_arrow(Filter::top(A), Filter::top(X), pf(A, X, {{"a", "x"}}));
  auto pb = pullback_cospan(phi, psi);
  EXPECT_EQ(pb.apex.core().size(), 2U);
  EXPECT_EQ(compose_arrows(phi, pb.legs[0]), compose_arrows(psi, pb.legs[1]));
  // Along an identity the pullback is the source.
  auto along_id = pullback_cospan(phi, identity_arrow(phi.target()));
  EXPECT_TRUE(is_iso(along_id.legs[0]));
  // E-arrows are stable.
  ASSERT_TRUE(is_e(phi));
  EXPECT_TRUE(is_e(pullback_cospan(phi, psi).legs[1]));
  EXPECT_ERRC(pullback_cospan(phi, identity_arrow(Filter::top(A))), Errc::incompatible_composition);
}

TEST(PullbackCospan, Mediator) {
  auto X = set({"x"});
  auto phi = make_arrow(filt(D, {"0", "1"}), Filter::top(X), pf(D, X, {{"0", "x"}, {"1", "x"}}));
  auto pb = pullback_cospan(phi, phi);
  auto K = Filter::top(set({"k"}));
  auto p = make_arrow(K, phi.source(), pf(set({"k"}), D, {{"k", "0"}}));
  auto q = make_arrow(K, phi.source(), pf(set({"k"}), D, {{"k", "1"}}));
  auto m = pullback_mediator(pb, p, q);
  EXPECT_EQ(compose_arrows(pb.legs[0], m), p);
  EXPECT_EQ(compose_arrows(pb.legs[1], m), q);
}

TEST(Coproduct, TaggedCores) {
  std::vector<Filter> fs{filt(D, {"0"}), filt(T, {"x"})};
  auto c = coproduct_fil(fs);
  EXPECT_EQ(c.apex.core().atoms(), (std::vector<Atom>{Atom::tag(0, lab("0")), Atom::tag(1, lab("x"))}));
  std::vector<Filter> one{filt(D, {"0"})};
  EXPECT_TRUE(is_iso(coproduct_fil(one).legs[0]));
  std::vector<Filter> improper{Filter::improper(D), Filter::improper(T)};
  EXPECT_TRUE(coproduct_fil(improper).apex.core().empty());
}

TEST(Coproduct, Mediator) {
  std::vector<Filter> fs{filt(D, {"0"}), filt(T, {"x"})};
  auto c = coproduct_fil(fs);
  auto K = Filter::top(set({"k", "l"}));
  std::vector<FilArrow> xi{make_arrow(fs[0], K, pf(D, K.ground(), {{"0", "k"}})),
                           make_arrow(fs[1], K, pf(T, K.ground(), {{"x", "l"}}))};
  auto lambda = coproduct_mediator(c, xi, K);
  EXPECT_EQ(compose_arrows(lambda, c.legs[0]), xi[0]);
  EXPECT_EQ(compose_arrows(lambda, c.legs[1]), xi[1]);
}

TEST(Core, FilterAndArrow) {
  auto F = filt(S, {"0", "1"});
  EXPECT_EQ(core_of(F), F.core());
  auto c = core_of_arrow(identity_arrow(F));
  EXPECT_EQ(c, PartialFn::identity(sub_ground(F.core())));
  auto phi = make_arrow(Filter::top(D), Filter::top(T), pf(D, T, {{"0", "x"}, {"1", "x"}}));
  EXPECT_EQ(core_of_arrow(phi), pf(D, T, {{"0", "x"}, {"1", "x"}}));
}

TEST(CoreAdjunction, LeftAdjoint) {
  EXPECT_EQ(unit_L(set({"0"})), unit_filter());
  EXPECT_TRUE(unit_L(GroundSet()).core().empty());
  EXPECT_EQ(unit_L(S).core().size(), 3U);
}

TEST(CoreAdjunction, Bijection) {
  auto w = core_adjunction_witness(set({"0"}), filt(T, {"x", "y"}));
  EXPECT_EQ(w.arrows().size(), 2U);
  EXPECT_EQ(w.functions().size(), 2U);
  for (const auto& a : w.arrows()) EXPECT_EQ(w.untranspose(w.transpose(a)), a);
  auto empty_core = core_adjunction_witness(D, Filter::improper(T));
  EXPECT_TRUE(empty_core.arrows().empty());
  EXPECT_TRUE(empty_core.functions().empty());
  auto empty_set = core_adjunction_witness(GroundSet(), Filter::improper(T));
  EXPECT_EQ(empty_set.arrows().size(), 1U);
  EXPECT_EQ(empty_set.functions().size(), 1U);
  // Fil(u, F) matches core F.
  EXPECT_EQ(hom_set(unit_filter(), filt(S, {"0", "2"})).size(), 2U);
}

}  // namespace
}  // namespace filcat::test
