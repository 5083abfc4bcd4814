#include "filcat/monoidal.hpp"

#include "filcat/factorization.hpp"
#include "filcat/oracles.hpp"
#include "support.hpp"

namespace filcat::test {
namespace {

namespace o = oracles;

const GroundSet D = set({"0", "1"});
const GroundSet T = set({"x", "y"});
const GroundSet A = set({"a", "b"});

Subset pairs(const GroundSet& ground, std::initializer_list<std::pair<std::string_view, std::string_view>> ps) {
  Subset out(ground);
  for (const auto& [s, t] : ps) out.insert(ground.require_index(Atom::pair(lab(s), lab(t))));
  return out;
}

TEST(BoxFilter, Cores) {
  auto B = box_filter(filt(A, {"a"}), filt(T, {"x"}));
  EXPECT_EQ(B.core().atoms(), std::vector<Atom>{Atom::pair(lab("a"), lab("x"))});
  EXPECT_EQ(o::fg_family(4, o::box_base(filt(A, {"a"}), filt(T, {"x"}))), o::family_of(B));
  EXPECT_TRUE(box_filter(Filter::improper(A), filt(T, {"x"})).core().empty());
  auto full = box_filter(Filter::top(D), Filter::top(T));
  EXPECT_EQ(full.core().size(), 4U);
  EXPECT_EQ(o::fg_family(4, o::box_base(Filter::top(D), Filter::top(T))), o::family_of(full));
}

TEST(BoxMember, SliceTest) {
  auto F = Filter::top(D), G = filt(T, {"x"});
  auto ground = product_ground(D, T);
  auto minimal = pairs(ground, {{"0", "x"}, {"1", "x"}});
  EXPECT_TRUE(box_member(F, G, minimal));
  EXPECT_FALSE(box_member(F, G, pairs(ground, {{"0", "x"}})));
  // S box g with g(0) = {x}, g(1) = {x, y}.
  EXPECT_TRUE(box_member(F, G, pairs(ground, {{"0", "x"}, {"1", "x"}, {"1", "y"}})));
  auto fam = o::family_of(box_filter(F, G));
  for (const auto& X : all_subsets(ground)) EXPECT_EQ(box_member(F, G, X), fam.test(o::mask_of(X)));
}

TEST(BoxMember, BigF) {
  auto F = filt(D, {"0"}), G = filt(T, {"x"});
  auto ground = product_ground(D, T);
  auto minimal = pairs(ground, {{"0", "x"}});
  EXPECT_EQ(big_f(F, G, minimal), F.core());
  EXPECT_EQ(big_f(F, G, Subset::full(ground)), Subset::full(D));
  for (const auto& X : all_subsets(ground)) EXPECT_EQ(big_f(F, Filter::improper(T), X), Subset::full(D));
  auto w = box_witness(F, G, minimal);
  EXPECT_EQ(w.small_h(lab("0")), sub(T, {"x"}));
  EXPECT_ERRC(w.small_h(lab("1")), Errc::outside_domain);
}

TEST(BoxPartial, Componentwise) {
  EXPECT_EQ(box_partial(PartialFn::identity(D), PartialFn::identity(T)), PartialFn::identity(product_ground(D, T)));
  auto X = set({"x"});
  auto P = set({"p"});
  auto f = pf(set({"0"}), X, {{"0", "x"}});
  auto g = pf(set({"a"}), P, {{"a", "p"}});
  auto fg = box_partial(f, g);
  EXPECT_EQ(fg(Atom::pair(lab("0"), lab("a"))), Atom::pair(lab("x"), lab("p")));
  auto f2 = pf(X, T, {{"x", "y"}});
  auto g2 = pf(P, A, {{"p", "b"}});
  EXPECT_EQ(compose_partial(box_partial(f2, g2), fg), box_partial(compose_partial(f2, f), compose_partial(g2, g)));
}

TEST(BoxArrow, FunctorOnGerms) {
  auto F = filt(D, {"0"}), G = Filter::top(T);
  EXPECT_EQ(box_arrow(identity_arrow(F), identity_arrow(G)), identity_arrow(box_filter(F, G)));
  auto phi = make_arrow(F, filt(A, {"a"}), pf(D, A, {{"0", "a"}}));
  auto phi2 = make_arrow(F, filt(A, {"a"}), pf(D, A, {{"0", "a"}, {"1", "b"}}));
  auto psi = identity_arrow(G);
  EXPECT_EQ(box_arrow(phi, psi), box_arrow(phi2, psi));
  EXPECT_EQ(box_arrow(phi, psi).rep()(Atom::pair(lab("0"), lab("y"))), Atom::pair(lab("a"), lab("y")));
}

TEST(Coherence, UnitorsAndAssociator) {
  auto u = unit_filter();
  auto Dt = Filter::top(D);
  auto lam = left_unitor(Dt);
  EXPECT_EQ(lam.source(), box_filter(u, Dt));
  EXPECT_EQ(lam.rep()(Atom::pair(lab("0"), lab("1"))), lab("1"));
  EXPECT_TRUE(is_iso(lam));
  EXPECT_TRUE(is_iso(right_unitor(Dt)));
  auto one = filt(set({"p"}), {"p"});
  auto alpha = associator(one, one, one);
  auto p = lab("p");
  EXPECT_EQ(alpha.rep()(Atom::pair(p, Atom::pair(p, p))), Atom::pair(Atom::pair(p, p), p));
  EXPECT_TRUE(is_iso(alpha));
}

TEST(Coherence, Pentagon) {
  auto a = filt(D, {"0"}), b = Filter::top(T), c = Filter::improper(A), d = Filter::top(set({"p"}));
  auto lhs = compose_arrows(associator(box_filter(a, b), c, d), associator(a, b, box_filter(c, d)));
  auto rhs = compose_arrows(box_arrow(associator(a, b, c), identity_arrow(d)),
                            compose_arrows(associator(a, box_filter(b, c), d),
                                           box_arrow(identity_arrow(a), associator(b, c, d))));
  EXPECT_EQ(lhs, rhs);
}

}  // namespace
}  // namespace filcat::test
