#include "filcat/oracles.hpp"

#include <unordered_set>

#include "filcat/errors.hpp"

namespace filcat::oracles {

namespace {

void require_small(std::size_t n, std::size_t cap) {
  if (n > cap) throw Error(Errc::size_cap, "oracle family over " + std::to_string(n) + " atoms is too large");
}

Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// All supersets of `core` inside an n-set.
std::vector<Mask> supersets(std::size_t n, Mask core) {
  std::vector<Mask> out;
  Mask rest = full_mask(n) & ~core;
  Mask sub = rest;
  while (true) {
    out.push_back(core | sub);
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return out;
}

std::vector<Mask> intersection_closure(const std::vector<Mask>& base) {
  std::unordered_set<Mask> seen(base.begin(), base.end());
  std::vector<Mask> closure(seen.begin(), seen.end());
  for (std::size_t i = 0; i < closure.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Mask m = closure[i] & closure[j];
      if (seen.insert(m).second) closure.push_back(m);
    }
  return closure;
}

Mask image_mask(const PartialFn& f, Mask x) {
  Mask out = 0;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if ((x >> i & 1U) && f.defined_at(i)) out |= Mask{1} << *f.at(i);
  return out;
}

Mask preimage_mask(const PartialFn& f, Mask y) {
  Mask out = 0;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if (f.defined_at(i) && (y >> *f.at(i) & 1U)) out |= Mask{1} << i;
  return out;
}

Mask dd_mask(const PartialFn& f) {
  Mask out = 0;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if (f.defined_at(i)) out |= Mask{1} << i;
  return out;
}

}  // namespace

Family empty_family(std::size_t n) {
  require_small(n, 16);
  return Family(std::size_t{1} << n);
}

std::vector<Mask> members(const Family& fam) {
  std::vector<Mask> out;
  for (auto i = fam.find_first(); i != Family::npos; i = fam.find_next(i)) out.push_back(static_cast<Mask>(i));
  return out;
}

Family up_closure(std::size_t n, const std::vector<Mask>& base) {
  auto fam = empty_family(n);
  for (Mask x = 0; x <= full_mask(n); ++x) {
    for (auto b : base)
      if ((b & ~x) == 0) {
        fam.set(x);
        break;
      }
    if (x == full_mask(n)) break;
  }
  return fam;
}

Family fg_family(std::size_t n, const std::vector<Mask>& base) {
  if (base.empty()) return up_closure(n, {full_mask(n)});
  return up_closure(n, intersection_closure(base));
}

Mask fg_least(std::size_t n, const std::vector<Mask>& base) {
  require_small(n, 32);
  if (base.empty()) return full_mask(n);
  auto closure = intersection_closure(base);
  for (auto c : closure) {
    bool least = true;
    for (auto d : closure)
      if ((c & ~d) != 0) {
        least = false;
        break;
      }
    if (least) return c;
  }
  throw Error(Errc::invariant, "intersection closure has no least element");
}

bool is_filter_family(std::size_t n, const Family& fam) {
  if (!fam.test(full_mask(n))) return false;
  auto ms = members(fam);
  for (auto x : ms) {
    for (std::size_t i = 0; i < n; ++i)
      if (!fam.test(x | Mask{1} << i)) return false;
    for (auto y : ms)
      if (!fam.test(x & y)) return false;
  }
  return true;
}

std::vector<Family> all_filter_families(std::size_t n) {
  require_small(n, 4);
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Family> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << subsets); ++bits) {
    Family fam(subsets, bits);
    if (is_filter_family(n, fam)) out.push_back(std::move(fam));
  }
  return out;
}

Family family_of(const Filter& F) {
  const auto n = F.ground().size();
  auto fam = empty_family(n);
  for (Mask x = 0; x <= full_mask(n); ++x) {
    if (member_filter(F, subset_of(F.ground(), x))) fam.set(x);
    if (x == full_mask(n)) break;
  }
  return fam;
}

bool family_leq(const Family& f, const Family& g) { return g.is_subset_of(f); }

Family push_family(const PartialFn& f, const Family& F) {
  std::vector<Mask> base;
  for (auto x : members(F)) base.push_back(image_mask(f, x));
  return fg_family(f.cod().size(), base);
}

Family pull_family(const PartialFn& f, const Family& G) {
  std::vector<Mask> base;
  for (auto y : members(G)) base.push_back(preimage_mask(f, y));
  return fg_family(f.dom().size(), base);
}

bool local_quantified(const PartialFn& f, const Family& F, const Family& G) {
  for (auto y : members(G))
    if (!F.test(preimage_mask(f, y))) return false;
  return true;
}

bool germ_equiv_quantified(const PartialFn& f, const PartialFn& g, const Family& F) {
  const Mask df = dd_mask(f), dg = dd_mask(g);
  for (auto x : members(F)) {
    if ((df & x) != (dg & x)) continue;
    bool agree = true;
    for (std::size_t i = 0; i < f.dom().size() && agree; ++i)
      if ((df & dg & x) >> i & 1U) agree = f.at(i) == g.at(i);
    if (agree) return true;
  }
  return false;
}

std::vector<Mask> box_base(const Filter& F, const Filter& G) {
  const auto ns = F.ground().size(), nt = G.ground().size();
  require_small(ns * nt, 32);
  auto fs = supersets(ns, mask_of(F.core()));
  auto gs = supersets(nt, mask_of(G.core()));
  std::vector<Mask> out;
  for (auto fp : fs) {
    std::vector<std::size_t> points;
    for (std::size_t s = 0; s < ns; ++s)
      if (fp >> s & 1U) points.push_back(s);
    for_each_tuple(points.size(), gs.size(), [&](const std::vector<std::size_t>& choice) {
      Mask box = 0;
      for (std::size_t k = 0; k < points.size(); ++k)
        for (std::size_t t = 0; t < nt; ++t)
          if (gs[choice[k]] >> t & 1U) box |= Mask{1} << (points[k] * nt + t);
      out.push_back(box);
      return true;
    });
  }
  return out;
}

std::vector<Mask> internal_hom_base(const HomObject& hom) {
  const auto& H = hom.source_h;
  const auto& T = hom.target_g.ground();
  const auto& ground = hom.filter.ground();
  require_small(ground.size(), 32);
  const auto nh = H.ground().size();
  auto h_members = supersets(nh, mask_of(H.core()));
  auto g_members = supersets(T.size(), mask_of(hom.target_g.core()));

  // Every partial function H -> T, as (dd, code) for the admissible ones.
  std::vector<std::pair<PartialFn, std::size_t>> admissible;
  for_each_tuple(nh, T.size() + 1, [&](const std::vector<std::size_t>& t) {
    PartialFn f(H.ground(), T);
    for (std::size_t i = 0; i < nh; ++i)
      if (t[i] < T.size()) f.set(i, t[i]);
    if (!is_admissible(f, H)) return true;
    auto pos = ground.require_index(encode_germ(germ_of(f, H)));
    admissible.emplace_back(std::move(f), pos);
    return true;
  });

  std::vector<Mask> out;
  for (auto gp : g_members) {
    Mask codes = 0;
    for (const auto& [f, pos] : admissible)
      for (auto x : h_members)
        if ((image_mask(f, x) & ~gp) == 0) {
          codes |= Mask{1} << pos;
          break;
        }
    out.push_back(codes);
  }
  return out;
}

Mask mask_of(const Subset& x) {
  require_small(x.ground().size(), 32);
  return static_cast<Mask>(x.mask());
}

Subset subset_of(const GroundSet& s, Mask m) { return Subset::from_mask(s, m); }

}  // namespace filcat::oracles
