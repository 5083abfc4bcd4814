#include "filcat/filters.hpp"

#include "filcat/errors.hpp"

namespace filcat {

Filter::Filter(GroundSet ground, Subset core) : ground_(std::move(ground)), core_(std::move(core)) {
  if (!(core_.ground() == ground_))
    throw Error(Errc::ground_mismatch, "filter core " + core_.to_string() + " is not over " + ground_.to_string());
}

Filter::Filter(Subset core) : ground_(core.ground()), core_(std::move(core)) {}

Filter Filter::top(GroundSet ground) { return Filter(Subset::full(std::move(ground))); }

Filter Filter::improper(GroundSet ground) { return Filter(Subset(std::move(ground))); }

std::string Filter::to_string() const { return ground_.to_string() + "/" + core_.to_string(); }

Filter unit_filter() { return Filter::top(GroundSet::of_labels({"0"})); }

Filter fg_filter(const FilterBase& base) {
  auto core = Subset::full(base.ground);
  for (const auto& b : base.sets) core = core & b;
  return Filter(std::move(core));
}

bool member_filter(const Filter& f, const Subset& x) { return f.core().is_subset_of(x); }

bool leq_filter(const Filter& f, const Filter& g) {
  if (!(f.ground() == g.ground()))
    throw Error(Errc::ground_mismatch, "filters " + f.to_string() + " and " + g.to_string() +
                                           " live on different sets");
  return f.core().is_subset_of(g.core());
}

Filter join_filters(std::span<const Filter> fs) {
  if (fs.empty()) throw Error(Errc::empty_join, "join of an empty list of filters");
  auto core = fs.front().core();
  for (const auto& f : fs.subspan(1)) core = core | f.core();
  return Filter(std::move(core));
}

Filter meet_filters(std::span<const Filter> fs) {
  if (fs.empty()) throw Error(Errc::empty_join, "meet of an empty list of filters");
  auto core = fs.front().core();
  for (const auto& f : fs.subspan(1)) core = core & f.core();
  return Filter(std::move(core));
}

std::vector<Filter> subfilters_of(const Filter& f) {
  auto members = f.core().indices();
  if (members.size() > 24) throw Error(Errc::size_cap, "core too large to enumerate subfilters");
  std::vector<Filter> out;
  out.reserve(std::size_t{1} << members.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << members.size()); ++m) {
    Subset core(f.ground());
    for (std::size_t k = 0; k < members.size(); ++k)
      if (m >> k & 1U) core.insert(members[k]);
    out.emplace_back(std::move(core));
  }
  return out;
}

Filter pushforward_filter(const PartialFn& f, const Filter& F) {
  if (!(f.dom() == F.ground()))
    throw Error(Errc::ground_mismatch, "pushforward: filter is not on dom(f)");
  return Filter(image_subset(f, F.core()));
}

Filter pullback_filter(const PartialFn& f, const Filter& G) {
  if (!(f.cod() == G.ground()))
    throw Error(Errc::ground_mismatch, "pullback: filter is not on cod(f)");
  return Filter(preimage_subset(f, G.core()));
}

}  // namespace filcat
