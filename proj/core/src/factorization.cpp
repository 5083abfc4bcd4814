#include "filcat/factorization.hpp"

#include <algorithm>

#include "filcat/errors.hpp"

namespace filcat {

bool is_e(const FilArrow& phi) {
  return image_subset(phi.rep(), phi.source().core()) == phi.target().core();
}

bool is_m(const FilArrow& phi) { return phi.rep().injective_on(phi.source().core()); }

FactorPair factor(const FilArrow& phi) {
  Filter mid = pushforward_filter(phi.rep(), phi.source());
  FilArrow epi(phi.germ(), mid);
  FilArrow mono(Germ(mid, restrict_partial(PartialFn::identity(mid.ground()), mid.core())), phi.target());
  return {std::move(epi), std::move(mid), std::move(mono)};
}

bool is_epi(const FilArrow& phi) { return is_e(phi); }
bool is_monic(const FilArrow& phi) { return is_m(phi); }
bool is_iso(const FilArrow& phi) { return is_e(phi) && is_m(phi); }

std::optional<FilArrow> inverse_arrow(const FilArrow& phi) {
  if (!is_iso(phi)) return std::nullopt;
  PartialFn inv(phi.target().ground(), phi.source().ground());
  for (auto i : phi.source().core().indices()) inv.set(*phi.rep().at(i), i);
  return FilArrow(Germ(phi.target(), std::move(inv)), phi.source());
}

FilArrow diagonal_fill(const FilArrow& e, const FilArrow& a, const FilArrow& b, const FilArrow& m) {
  if (!is_e(e)) throw Error(Errc::class_violation, "diagonal fill: top arrow is not in E");
  if (!is_m(m)) throw Error(Errc::class_violation, "diagonal fill: bottom arrow is not in M");
  if (!(e.source() == a.source()) || !(e.target() == b.source()) || !(a.target() == m.source()) ||
      !(b.target() == m.target()))
    throw Error(Errc::incompatible_composition, "diagonal fill: the four arrows do not form a square");
  if (!(compose_arrows(b, e) == compose_arrows(m, a)))
    throw Error(Errc::non_commuting, "diagonal fill: the square does not commute");
  for (const auto& d : hom_set(e.target(), a.target()))
    if (compose_arrows(d, e) == a && compose_arrows(m, d) == b) return d;
  throw Error(Errc::no_diagonal, "diagonal fill: no diagonal exists");
}

Filter subobject_image(const FilArrow& mu) { return pushforward_filter(mu.rep(), mu.source()); }

FilArrow subobject_of(const Filter& F, const Filter& sub) {
  if (!leq_filter(sub, F))
    throw Error(Errc::not_subfilter, sub.to_string() + " is not a subfilter of " + F.to_string());
  return FilArrow(Germ(sub, restrict_partial(PartialFn::identity(sub.ground()), sub.core())), F);
}

std::optional<FilArrow> subobject_factor(const FilArrow& m, const FilArrow& m2) {
  if (!(m.target() == m2.target()))
    throw Error(Errc::incompatible_composition, "subobjects of different filters");
  for (const auto& f : hom_set(m.source(), m2.source()))
    if (compose_arrows(m2, f) == m) return f;
  return std::nullopt;
}

namespace {

bool equivalent(const FilArrow& m, const FilArrow& m2) {
  return subobject_factor(m, m2).has_value() && subobject_factor(m2, m).has_value();
}

std::vector<FilArrow> m_arrows_into(const Filter& F) {
  std::vector<FilArrow> out;
  for (const auto& part : all_subsets(F.ground())) {
    auto ground = sub_ground(part);
    for (const auto& c : all_subsets(ground)) {
      Filter K(ground, c);
      for (auto& phi : hom_set(K, F))
        if (is_m(phi)) out.push_back(std::move(phi));
    }
  }
  return out;
}

}  // namespace

SubobjectPoset m_subobject_poset(const Filter& F) {
  if (F.ground().size() > 5) throw Error(Errc::size_cap, "subobject enumeration is capped at 5 atoms");
  SubobjectPoset out{F, {}, {}, {}, 0, 0, {}};
  auto fail = [&](std::string why) {
    if (out.certificate_failure.empty()) out.certificate_failure = std::move(why);
  };

  std::vector<std::vector<FilArrow>> classes;
  for (auto& m : m_arrows_into(F)) {
    ++out.arrows_examined;
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& cls) { return equivalent(m, cls.front()); });
    if (it == classes.end())
      classes.push_back({std::move(m)});
    else
      it->push_back(std::move(m));
  }
  out.classes_found = classes.size();

  auto subs = subfilters_of(F);
  std::vector<Filter> class_image;
  for (const auto& cls : classes) {
    auto z = subobject_image(cls.front());
    for (const auto& m : cls)
      if (!(subobject_image(m) == z)) fail("image differs inside the class of " + z.to_string());
    class_image.push_back(z);
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (class_image[i] == class_image[j]) fail("two classes share image " + class_image[i].to_string());
  if (classes.size() != subs.size())
    fail(std::to_string(classes.size()) + " classes against " + std::to_string(subs.size()) + " subfilters");
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j) {
      bool diagram = subobject_factor(classes[i].front(), classes[j].front()).has_value();
      if (diagram != leq_filter(class_image[i], class_image[j]))
        fail("order disagrees between " + class_image[i].to_string() + " and " + class_image[j].to_string());
    }

  for (const auto& sub : subs) {
    auto rep = subobject_of(F, sub);
    if (!(subobject_image(rep) == sub)) fail("image of 1/" + sub.to_string() + " is not itself");
    auto it = std::find(class_image.begin(), class_image.end(), sub);
    if (it == class_image.end()) {
      fail("no class has image " + sub.to_string());
    } else if (!equivalent(rep, classes[static_cast<std::size_t>(it - class_image.begin())].front())) {
      fail("1/" + sub.to_string() + " is not in the class with that image");
    }
    out.representatives.push_back(std::move(rep));
    out.images.push_back(sub);
  }
  for (const auto& r : out.representatives) {
    std::vector<bool> row;
    for (const auto& r2 : out.representatives) row.push_back(subobject_factor(r, r2).has_value());
    out.leq.push_back(std::move(row));
  }
  return out;
}

}  // namespace filcat
