#include "filcat/filters.hpp"

#include "filcat/laws.hpp"
#include "filcat/oracles.hpp"
#include "support.hpp"

namespace filcat::test {
namespace {

namespace o = oracles;

const GroundSet S = set({"0", "1", "2"});
const GroundSet T = set({"x", "y"});

TEST(Fg, PairwiseBaseHasIntersectionCore) {
  FilterBase base{S, {sub(S, {"0", "1"}), sub(S, {"1", "2"})}};
  auto F = fg_filter(base);
  EXPECT_EQ(F.core(), sub(S, {"1"}));
  // The smallest up-closed, intersection-closed family containing S and the base.
  std::vector<o::Mask> masks{o::mask_of(base.sets[0]), o::mask_of(base.sets[1])};
  const o::Family* least = nullptr;
  auto families = o::all_filter_families(3);
  for (const auto& fam : families) {
    if (!fam.test(masks[0]) || !fam.test(masks[1])) continue;
    if (!least || fam.count() < least->count()) least = &fam;
  }
  ASSERT_NE(least, nullptr);
  EXPECT_EQ(*least, o::family_of(F));
}

TEST(Fg, EmptyBaseAndEmptyMember) {
  EXPECT_EQ(fg_filter(FilterBase{S, {}}).core(), Subset::full(S));
  EXPECT_TRUE(fg_filter(FilterBase{S, {Subset(S), Subset::full(S)}}).core().empty());
}

TEST(Membership, CoreInclusion) {
  auto F = filt(S, {"1"});
  EXPECT_TRUE(member_filter(F, sub(S, {"1", "2"})));
  EXPECT_FALSE(member_filter(F, sub(S, {"2"})));
  EXPECT_TRUE(member_filter(Filter::improper(S), Subset(S)));
  EXPECT_ERRC(member_filter(F, Subset(T)), Errc::ground_mismatch);
}

TEST(Order, ReverseInclusionOfFamilies) {
  auto a = filt(S, {"1"}), b = filt(S, {"0", "1"});
  EXPECT_TRUE(leq_filter(a, b));
  EXPECT_TRUE(o::family_leq(o::family_of(a), o::family_of(b)));
  EXPECT_TRUE(leq_filter(a, a));
  auto c = filt(S, {"0"});
  EXPECT_FALSE(leq_filter(c, a));
  EXPECT_FALSE(o::family_leq(o::family_of(c), o::family_of(a)));
  EXPECT_ERRC(leq_filter(a, filt(T, {"x"})), Errc::ground_mismatch);
}

TEST(Lattice, JoinAndMeet) {
  std::vector<Filter> fs{filt(S, {"0"}), filt(S, {"1"})};
  auto join = join_filters(fs);
  EXPECT_EQ(join.core(), sub(S, {"0", "1"}));
  EXPECT_EQ(o::family_of(join), o::family_of(fs[0]) & o::family_of(fs[1]));
  auto meet = meet_filters(fs);
  EXPECT_TRUE(meet.core().empty());
  auto joined_members = o::members(o::family_of(fs[0]) | o::family_of(fs[1]));
  EXPECT_EQ(o::family_of(meet), o::fg_family(3, joined_members));
  std::vector<Filter> same{fs[0], fs[0]};
  EXPECT_EQ(join_filters(same), fs[0]);
  EXPECT_ERRC(join_filters(std::vector<Filter>{}), Errc::empty_join);
  EXPECT_ERRC(meet_filters(std::vector<Filter>{fs[0], filt(T, {"x"})}), Errc::ground_mismatch);
}

TEST(Lattice, Subfilters) {
  auto subs = subfilters_of(filt(S, {"0", "1"}));
  ASSERT_EQ(subs.size(), 4U);
  EXPECT_TRUE(subs[0].core().empty());
  EXPECT_EQ(subs[1].core(), sub(S, {"0"}));
  EXPECT_EQ(subs[2].core(), sub(S, {"1"}));
  EXPECT_EQ(subs[3].core(), sub(S, {"0", "1"}));
  EXPECT_EQ(subfilters_of(Filter::improper(S)).size(), 1U);
  auto all = subfilters_of(Filter::top(S));
  EXPECT_EQ(all.size(), 8U);
  EXPECT_EQ(o::all_filter_families(3).size(), all.size());
}

TEST(Pushforward, ImageFilter) {
  auto f = pf(S, T, {{"0", "x"}, {"1", "x"}, {"2", "y"}});
  auto F = filt(S, {"0", "1"});
  auto push = pushforward_filter(f, F);
  EXPECT_EQ(push.core(), sub(T, {"x"}));
  EXPECT_EQ(o::family_of(push), o::push_family(f, o::family_of(F)));
  EXPECT_EQ(pushforward_filter(PartialFn::identity(S), F), F);
  EXPECT_TRUE(pushforward_filter(f, Filter::improper(S)).core().empty());
}

TEST(Pullback, PreimageFilter) {
  auto f = pf(S, T, {{"0", "x"}, {"1", "y"}});
  auto G = filt(T, {"x"});
  auto pull = pullback_filter(f, G);
  EXPECT_EQ(pull.core(), sub(S, {"0"}));
  EXPECT_EQ(o::family_of(pull), o::pull_family(f, o::family_of(G)));
  auto bij = pf(set({"a", "b"}), T, {{"a", "x"}, {"b", "y"}});
  EXPECT_TRUE(pullback_filter(bij, Filter::improper(T)).core().empty());
  auto empty = pullback_filter(PartialFn(S, T), Filter::top(T));
  EXPECT_TRUE(empty.core().empty());
  EXPECT_EQ(o::family_of(empty), o::pull_family(PartialFn(S, T), o::family_of(Filter::top(T))));
}

TEST(Universe, FilterCounts) {
  EXPECT_EQ(all_filters_on(S).size(), 8U);
  EXPECT_EQ(o::all_filter_families(3).size(), 8U);
  EXPECT_EQ(all_filters_on(GroundSet()).size(), 1U);
  EXPECT_EQ(all_filters_on(set({"0", "1"}), false).size(), 3U);
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(o::all_filter_families(n).size(), std::size_t{1} << n);
}

TEST(Unit, UnitFilterIsPointOnZero) {
  auto u = unit_filter();
  EXPECT_EQ(u.ground(), set({"0"}));
  EXPECT_EQ(u.core(), Subset::full(u.ground()));
}

}  // namespace
}  // namespace filcat::test
