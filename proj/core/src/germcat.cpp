#include "filcat/germcat.hpp"

#include "filcat/errors.hpp"

namespace filcat {

Germ::Germ(Filter source, PartialFn rep) : source_(std::move(source)), rep_(std::move(rep)) {
  if (!(rep_.dom() == source_.ground()))
    throw Error(Errc::ground_mismatch, "germ representative is not defined on the filter's set");
  if (!(dd_of(rep_) == source_.core()))
    throw Error(Errc::invariant, "canonical germ representative must be defined exactly on the core");
}

FilArrow::FilArrow(Germ germ, Filter target) : germ_(std::move(germ)), target_(std::move(target)) {
  if (!(target_.ground() == germ_.target_ground()))
    throw Error(Errc::ground_mismatch, "arrow target filter is not on the germ's target set");
  if (!image_subset(germ_.rep(), germ_.source().core()).is_subset_of(target_.core()))
    throw Error(Errc::not_local, "germ is not local for target " + target_.to_string());
}

bool is_admissible(const PartialFn& f, const Filter& F) {
  return member_filter(F, dd_of(f));
}

bool is_local(const PartialFn& f, const Filter& F, const Filter& G) {
  return F.core().is_subset_of(preimage_subset(f, G.core()));
}

bool germ_equiv(const PartialFn& f, const PartialFn& g, const Filter& F) {
  if (!(f.dom() == F.ground()) || !(g.dom() == F.ground()) || !(f.cod() == g.cod()))
    throw Error(Errc::ground_mismatch, "germ_equiv: partial functions are not both from the filter's set to one set");
  for (auto i : F.core().indices())
    if (f.table()[i] != g.table()[i]) return false;
  return true;
}

Germ germ_of(const PartialFn& f, const Filter& F) {
  if (!is_admissible(f, F))
    throw Error(Errc::not_admissible, "dd(f) = " + dd_of(f).to_string() + " is not a member of " + F.to_string());
  return Germ(F, restrict_partial(f, F.core()));
}

FilArrow make_arrow(const Filter& F, const Filter& G, const PartialFn& f) {
  if (!(f.cod() == G.ground()))
    throw Error(Errc::ground_mismatch, "partial function codomain is not the target filter's set");
  auto germ = germ_of(f, F);
  if (!is_local(f, F, G))
    throw Error(Errc::not_local, "member " + G.core().to_string() + " of the target pulls back to " +
                                     preimage_subset(f, G.core()).to_string() + ", which is not in " + F.to_string());
  return FilArrow(std::move(germ), G);
}

FilArrow identity_arrow(const Filter& F) {
  return FilArrow(Germ(F, restrict_partial(PartialFn::identity(F.ground()), F.core())), F);
}

FilArrow compose_arrows(const FilArrow& psi, const FilArrow& phi) {
  if (!(phi.target() == psi.source()))
    throw Error(Errc::incompatible_composition,
                "target " + phi.target().to_string() + " differs from source " + psi.source().to_string());
  return FilArrow(Germ(phi.source(), compose_partial(psi.rep(), phi.rep())), psi.target());
}

Filter germ_push(const Germ& phi, const Filter& sub) {
  if (!leq_filter(sub, phi.source()))
    throw Error(Errc::not_subfilter, sub.to_string() + " is not a subfilter of " + phi.source().to_string());
  return pushforward_filter(phi.rep(), sub);
}

Filter germ_pull(const Germ& phi, const Filter& G) {
  const Filter parts[] = {pullback_filter(phi.rep(), G), phi.source()};
  return meet_filters(parts);
}

Germ germ_restrict(const Germ& phi, const Filter& sub) {
  if (!leq_filter(sub, phi.source()))
    throw Error(Errc::not_subfilter, sub.to_string() + " is not a subfilter of " + phi.source().to_string());
  return germ_of(phi.rep(), sub);
}

std::vector<FilArrow> hom_set(const Filter& F, const Filter& G) {
  std::vector<FilArrow> out;
  auto from = F.core().indices();
  auto to = G.core().indices();
  for_each_tuple(from.size(), to.size(), [&](const std::vector<std::size_t>& t) {
    PartialFn rep(F.ground(), G.ground());
    for (std::size_t k = 0; k < from.size(); ++k) rep.set(from[k], to[t[k]]);
    out.emplace_back(Germ(F, std::move(rep)), G);
    return true;
  });
  return out;
}

std::size_t hom_set_size(const Filter& F, const Filter& G) {
  return checked_power(G.core().size(), F.core().size());
}

std::vector<Germ> enum_admissible_germs(const Filter& H, const GroundSet& T) {
  std::vector<Germ> out;
  auto from = H.core().indices();
  for_each_tuple(from.size(), T.size(), [&](const std::vector<std::size_t>& t) {
    PartialFn rep(H.ground(), T);
    for (std::size_t k = 0; k < from.size(); ++k) rep.set(from[k], t[k]);
    out.emplace_back(H, std::move(rep));
    return true;
  });
  return out;
}

PartialFn total_representative(const FilArrow& phi) {
  auto rep = phi.rep();
  const auto& T = phi.target().ground();
  if (T.empty()) return rep;
  std::size_t fill = phi.target().is_proper() ? phi.target().core().indices().front() : 0;
  for (std::size_t i = 0; i < rep.dom().size(); ++i)
    if (!rep.defined_at(i)) rep.set(i, fill);
  return rep;
}

}  // namespace filcat
