#include "filcat/oracles.hpp"

#include "support.hpp"

namespace filcat::test {
namespace {

namespace o = oracles;

TEST(Oracles, FilterFamiliesArePrincipal) {
  // Every filter family on a 3-set is the up-set of its least member.
  for (const auto& fam : o::all_filter_families(3)) {
    auto ms = o::members(fam);
    auto least = o::fg_least(3, ms);
    EXPECT_EQ(fam, o::up_closure(3, {least}));
  }
}

TEST(Oracles, IsFilterFamily) {
  auto up = o::up_closure(2, {0b01});
  EXPECT_TRUE(o::is_filter_family(2, up));
  auto broken = o::empty_family(2);
  broken.set(0b01);
  broken.set(0b10);
  broken.set(0b11);
  EXPECT_FALSE(o::is_filter_family(2, broken));
  EXPECT_FALSE(o::is_filter_family(2, o::empty_family(2)));
}

TEST(Oracles, FgConventions) {
  EXPECT_EQ(o::members(o::fg_family(2, {})), std::vector<o::Mask>{0b11});
  EXPECT_EQ(o::fg_least(3, {0b011, 0b110}), 0b010U);
  EXPECT_ERRC(o::all_filter_families(5), Errc::size_cap);
}

}  // namespace
}  // namespace filcat::test
