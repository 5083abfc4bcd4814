#include "filcat/closedcat.hpp"

#include "filcat/monoidal.hpp"
#include "filcat/oracles.hpp"
#include "support.hpp"

namespace filcat::test {
namespace {

namespace o = oracles;

const GroundSet D = set({"0", "1"});
const GroundSet T = set({"x", "y"});

TEST(InternalHom, Sizes) {
  auto H = Filter::top(D), G = filt(T, {"x"});
  auto hom = internal_hom(G, H);
  EXPECT_EQ(hom.filter.ground().size(), 4U);
  EXPECT_EQ(hom.filter.core().size(), 1U);
  EXPECT_EQ(o::fg_least(4, o::internal_hom_base(hom)), o::mask_of(hom.filter.core()));
  auto code = hom.filter.core().atoms().front();
  EXPECT_EQ(decode_germ(code, T).rep(), pf(D, T, {{"0", "x"}, {"1", "x"}}));

  auto from_improper = internal_hom(G, Filter::improper(D));
  EXPECT_EQ(from_improper.filter.ground().size(), 1U);
  EXPECT_EQ(from_improper.filter.core().size(), 1U);
  auto into_improper = internal_hom(Filter::improper(T), H);
  EXPECT_TRUE(into_improper.filter.core().empty());
  EXPECT_EQ(o::fg_least(4, o::internal_hom_base(into_improper)), 0U);
}

TEST(InternalHom, SizeCap) {
  EXPECT_ERRC(internal_hom(Filter::top(T), Filter::top(D), 3), Errc::size_cap);
  EXPECT_NO_THROW(internal_hom(Filter::top(T), Filter::top(D), 4));
}

TEST(InternalHom, GermCodes) {
  auto g = germ_of(pf(D, T, {{"0", "y"}}), filt(D, {"0"}));
  EXPECT_EQ(decode_germ(encode_germ(g), T), g);
  EXPECT_ERRC(decode_germ(lab("x"), T), Errc::invalid_argument);
  EXPECT_ERRC(decode_germ(encode_germ(g), set({"z"})), Errc::unknown_atom);
}

TEST(HomAction, Left) {
  auto H = filt(set({"0"}), {"0"});
  auto G = Filter::top(T);
  auto left = hom_action_left(identity_arrow(G), H);
  EXPECT_EQ(left, identity_arrow(internal_hom(G, H).filter));
  auto X = filt(T, {"x"});
  auto collapse = make_arrow(G, X, pf(T, T, {{"x", "x"}, {"y", "x"}}));
  auto action = hom_action_left(collapse, H);
  EXPECT_EQ(action.source().core().size(), 2U);
  EXPECT_EQ(image_subset(action.rep(), action.source().core()).size(), 1U);
  auto back = make_arrow(X, G, pf(T, T, {{"x", "y"}}));
  EXPECT_EQ(hom_action_left(compose_arrows(back, collapse), H),
            compose_arrows(hom_action_left(back, H), hom_action_left(collapse, H)));
}

TEST(HomAction, Right) {
  auto G = Filter::top(T);
  auto H = Filter::top(D);
  EXPECT_EQ(hom_action_right(identity_arrow(H), G), identity_arrow(internal_hom(G, H).filter));
  auto one = set({"0"});
  auto rho = make_arrow(Filter::top(one), H, pf(one, D, {{"0", "1"}}));
  auto proj = hom_action_right(rho, G);
  // Each table on {0 1} projects to its value at 1.
  for (const auto& code : proj.source().core().atoms()) {
    auto kappa = decode_germ(code, T);
    auto image = decode_germ(*proj.rep()(code), T);
    EXPECT_EQ(image.rep().at(0), kappa.rep().at(1));
  }
  auto gamma = make_arrow(G, filt(T, {"x"}), pf(T, T, {{"x", "x"}, {"y", "x"}}));
  auto lhs = compose_arrows(hom_action_left(gamma, Filter::top(one)), proj);
  auto rhs = compose_arrows(hom_action_right(rho, filt(T, {"x"})), hom_action_left(gamma, H));
  EXPECT_EQ(lhs, rhs);
}

TEST(Currying, RoundTrips) {
  auto F = Filter::top(D), H = filt(D, {"0"}), G = Filter::top(T);
  auto hom = internal_hom(G, H);
  auto FH = box_filter(F, H);
  std::size_t n = 0;
  for (const auto& kappa : hom_set(FH, G)) {
    EXPECT_EQ(uncurry(hom, curry(F, H, kappa)), kappa);
    ++n;
  }
  EXPECT_EQ(n, 4U);
  for (const auto& rho : hom_set(F, hom.filter)) EXPECT_EQ(curry(hom, F, uncurry(hom, rho)), rho);
  EXPECT_ERRC(curry(hom, Filter::top(T), identity_arrow(G)), Errc::incompatible_composition);
}

TEST(Currying, ConstantAndSingletons) {
  auto F = Filter::top(D), H = Filter::top(D), G = Filter::top(T);
  auto FH = box_filter(F, H);
  PartialFn constant(FH.ground(), T);
  for (std::size_t i = 0; i < FH.ground().size(); ++i) constant.set(i, 0);
  auto c = curry(F, H, make_arrow(FH, G, constant));
  const auto values = image_subset(c.rep(), F.core());
  ASSERT_EQ(values.size(), 1U);
  EXPECT_EQ(decode_germ(values.atoms().front(), T).rep(), pf(D, T, {{"0", "x"}, {"1", "x"}}));

  auto one = Filter::top(set({"0"}));
  EXPECT_EQ(hom_set(box_filter(one, one), G).size(), hom_set(one, internal_hom(G, one).filter).size());
}

TEST(Currying, ImproperSource) {
  auto F = Filter::improper(D), H = Filter::top(D), G = Filter::improper(T);
  auto hom = internal_hom(G, H);
  auto rhos = hom_set(F, hom.filter);
  ASSERT_EQ(rhos.size(), 1U);
  EXPECT_EQ(curry(hom, F, uncurry(hom, rhos[0])), rhos[0]);
}

TEST(Adjunction, UnitAndCounit) {
  auto F = filt(set({"s"}), {"s"}), H = filt(set({"w"}), {"w"});
  auto eta = eta_unit(F, H);
  auto code = *eta.rep()(lab("s"));
  auto pairing = decode_germ(code, box_filter(F, H).ground());
  EXPECT_EQ(pairing.rep()(lab("w")), Atom::pair(lab("s"), lab("w")));

  auto G = Filter::top(T);
  auto eps = epsilon_counit(G, filt(D, {"0"}));
  for (const auto& p : eps.source().core().atoms())
    EXPECT_EQ(eps.rep()(p), decode_germ(p.first(), T).rep()(p.second()));
}

TEST(Adjunction, Triangles) {
  auto X = filt(D, {"0"}), H = Filter::top(set({"w"}));
  auto XH = box_filter(X, H);
  EXPECT_EQ(compose_arrows(epsilon_counit(XH, H), box_arrow(eta_unit(X, H), identity_arrow(H))), identity_arrow(XH));
  auto G = Filter::top(T);
  auto GH = internal_hom(G, H).filter;
  EXPECT_EQ(compose_arrows(hom_action_left(epsilon_counit(G, H), H), eta_unit(GH, H)), identity_arrow(GH));
}

}  // namespace
}  // namespace filcat::test
