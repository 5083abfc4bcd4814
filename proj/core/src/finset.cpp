#include "filcat/finset.hpp"

#include <algorithm>

#include "filcat/errors.hpp"

namespace filcat {

namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b, const char* op) {
  if (!(a == b))
    throw Error(Errc::ground_mismatch, std::string(op) + ": subsets of different ground sets " +
                                          a.to_string() + " and " + b.to_string());
}

const std::shared_ptr<const std::vector<Atom>>& empty_atoms() {
  static const auto empty = std::make_shared<const std::vector<Atom>>();
  return empty;
}

}  // namespace

// GroundSet

GroundSet::GroundSet() : atoms_(empty_atoms()) {}

GroundSet::GroundSet(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  auto dup = std::adjacent_find(atoms.begin(), atoms.end());
  if (dup != atoms.end())
    throw Error(Errc::duplicate_atom, "ground set repeats atom " + dup->to_string());
  atoms_ = std::make_shared<const std::vector<Atom>>(std::move(atoms));
}

GroundSet GroundSet::of_labels(std::initializer_list<std::string_view> labels) {
  std::vector<Atom> atoms;
  for (auto l : labels) atoms.push_back(Atom::label(std::string(l)));
  return GroundSet(std::move(atoms));
}

std::optional<std::size_t> GroundSet::index_of(const Atom& a) const {
  auto it = std::lower_bound(atoms_->begin(), atoms_->end(), a);
  if (it == atoms_->end() || !(*it == a)) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_->begin());
}

std::size_t GroundSet::require_index(const Atom& a) const {
  if (auto i = index_of(a)) return *i;
  throw Error(Errc::unknown_atom, "atom " + a.to_string() + " is not in " + to_string());
}

bool operator==(const GroundSet& a, const GroundSet& b) {
  return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
}

std::string GroundSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += (*atoms_)[i].to_string();
  }
  return out + "}";
}

GroundSet product_ground(const GroundSet& s, const GroundSet& t) {
  std::vector<Atom> atoms;
  atoms.reserve(s.size() * t.size());
  for (const auto& a : s.atoms())
    for (const auto& b : t.atoms()) atoms.push_back(Atom::pair(a, b));
  return GroundSet(std::move(atoms));
}

GroundSet coproduct_ground(std::span<const GroundSet> parts) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& a : parts[i].atoms()) atoms.push_back(Atom::tag(i, a));
  return GroundSet(std::move(atoms));
}

// Subset

Subset::Subset(GroundSet ground) : ground_(std::move(ground)), bits_(ground_.size()) {}

Subset::Subset(GroundSet ground, Bits bits) : ground_(std::move(ground)), bits_(std::move(bits)) {
  if (bits_.size() != ground_.size())
    throw Error(Errc::invariant, "subset bit-vector length differs from ground size");
}

Subset Subset::full(GroundSet ground) {
  Subset s(std::move(ground));
  s.bits_.set();
  return s;
}

Subset Subset::of(GroundSet ground, std::span<const Atom> members) {
  Subset s(std::move(ground));
  for (const auto& a : members) s.insert(s.ground_.require_index(a));
  return s;
}

Subset Subset::of_labels(GroundSet ground, std::initializer_list<std::string_view> labels) {
  std::vector<Atom> atoms;
  for (auto l : labels) atoms.push_back(Atom::label(std::string(l)));
  return of(std::move(ground), atoms);
}

Subset Subset::from_indices(GroundSet ground, std::span<const std::size_t> indices) {
  Subset s(std::move(ground));
  for (auto i : indices) {
    if (i >= s.ground_.size()) throw Error(Errc::unknown_atom, "subset index out of range");
    s.insert(i);
  }
  return s;
}

Subset Subset::from_mask(GroundSet ground, std::uint64_t mask) {
  if (ground.size() > 64) throw Error(Errc::invalid_argument, "mask subsets need |S| <= 64");
  Subset s(std::move(ground));
  for (std::size_t i = 0; i < s.ground_.size(); ++i)
    if (mask >> i & 1U) s.insert(i);
  return s;
}

bool Subset::contains(const Atom& a) const {
  auto i = ground_.index_of(a);
  return i && bits_.test(*i);
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(i);
  return out;
}

std::vector<Atom> Subset::atoms() const {
  std::vector<Atom> out;
  for (auto i : indices()) out.push_back(ground_[i]);
  return out;
}

std::uint64_t Subset::mask() const {
  if (ground_.size() > 64) throw Error(Errc::invalid_argument, "mask of a subset with |S| > 64");
  std::uint64_t m = 0;
  for (auto i : indices()) m |= std::uint64_t{1} << i;
  return m;
}

bool Subset::is_subset_of(const Subset& other) const {
  require_same_ground(ground_, other.ground_, "is_subset_of");
  return bits_.is_subset_of(other.bits_);
}

Subset Subset::complement() const { return Subset(ground_, ~bits_); }

Subset operator&(const Subset& a, const Subset& b) {
  require_same_ground(a.ground_, b.ground_, "intersection");
  return Subset(a.ground_, a.bits_ & b.bits_);
}

Subset operator|(const Subset& a, const Subset& b) {
  require_same_ground(a.ground_, b.ground_, "union");
  return Subset(a.ground_, a.bits_ | b.bits_);
}

Subset operator-(const Subset& a, const Subset& b) {
  require_same_ground(a.ground_, b.ground_, "difference");
  return Subset(a.ground_, a.bits_ - b.bits_);
}

bool operator==(const Subset& a, const Subset& b) {
  return a.bits_ == b.bits_ && a.ground_ == b.ground_;
}

bool operator<(const Subset& a, const Subset& b) {
  if (a.bits_.size() != b.bits_.size()) return a.bits_.size() < b.bits_.size();
  return a.indices() < b.indices();
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto i : indices()) {
    if (!first) out += ' ';
    first = false;
    out += ground_[i].to_string();
  }
  return out + "}";
}

GroundSet sub_ground(const Subset& s) { return GroundSet(s.atoms()); }

std::vector<Subset> all_subsets(const GroundSet& s) {
  if (s.size() > 24) throw Error(Errc::size_cap, "refusing to enumerate 2^" + std::to_string(s.size()) + " subsets");
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << s.size());
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << s.size()); ++m) out.push_back(Subset::from_mask(s, m));
  return out;
}

// PartialFn

PartialFn::PartialFn(GroundSet dom, GroundSet cod)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(dom_.size(), undefined) {}

PartialFn::PartialFn(GroundSet dom, GroundSet cod, std::vector<std::size_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size())
    throw Error(Errc::invariant, "partial function table length differs from |dom|");
  for (auto j : table_)
    if (j != undefined && j >= cod_.size())
      throw Error(Errc::unknown_atom, "partial function value outside the codomain");
}

PartialFn PartialFn::from_pairs(GroundSet dom, GroundSet cod, std::span<const Atom::Entry> graph) {
  PartialFn f(std::move(dom), std::move(cod));
  for (const auto& [k, v] : graph) {
    auto i = f.dom_.require_index(k);
    if (f.table_[i] != undefined)
      throw Error(Errc::duplicate_atom, "partial function maps " + k.to_string() + " twice");
    f.table_[i] = f.cod_.require_index(v);
  }
  return f;
}

PartialFn PartialFn::identity(GroundSet s) {
  std::vector<std::size_t> table(s.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return PartialFn(s, s, std::move(table));
}

std::optional<std::size_t> PartialFn::at(std::size_t i) const {
  if (table_[i] == undefined) return std::nullopt;
  return table_[i];
}

std::optional<Atom> PartialFn::operator()(const Atom& a) const {
  auto i = dom_.index_of(a);
  if (!i || table_[*i] == undefined) return std::nullopt;
  return cod_[table_[*i]];
}

void PartialFn::set(std::size_t i, std::size_t j) {
  if (j >= cod_.size()) throw Error(Errc::unknown_atom, "partial function value outside the codomain");
  table_[i] = j;
}

bool PartialFn::is_total() const {
  return std::none_of(table_.begin(), table_.end(), [](auto j) { return j == undefined; });
}

bool PartialFn::injective_on(const Subset& d) const {
  std::vector<bool> seen(cod_.size());
  for (auto i : d.indices()) {
    if (table_[i] == undefined) continue;
    if (seen[table_[i]]) return false;
    seen[table_[i]] = true;
  }
  return true;
}

std::vector<Atom::Entry> PartialFn::graph() const {
  std::vector<Atom::Entry> out;
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] != undefined) out.emplace_back(dom_[i], cod_[table_[i]]);
  return out;
}

bool operator==(const PartialFn& a, const PartialFn& b) {
  return a.table_ == b.table_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
}

std::string PartialFn::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : graph()) {
    if (!first) out += ' ';
    first = false;
    out += k.to_string() + ":" + v.to_string();
  }
  return out + "}";
}

Subset dd_of(const PartialFn& f) {
  Subset s(f.dom());
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if (f.defined_at(i)) s.insert(i);
  return s;
}

Subset range_of(const PartialFn& f) {
  Subset s(f.cod());
  for (auto j : f.table())
    if (j != PartialFn::undefined) s.insert(j);
  return s;
}

PartialFn compose_partial(const PartialFn& g, const PartialFn& f) {
  if (!(f.cod() == g.dom()))
    throw Error(Errc::incompatible_composition,
                "cannot compose: cod(f) = " + f.cod().to_string() + " but dom(g) = " + g.dom().to_string());
  std::vector<std::size_t> table(f.dom().size(), PartialFn::undefined);
  for (std::size_t i = 0; i < table.size(); ++i)
    if (auto j = f.table()[i]; j != PartialFn::undefined) table[i] = g.table()[j];
  return PartialFn(f.dom(), g.cod(), std::move(table));
}

PartialFn restrict_partial(const PartialFn& f, const Subset& d) {
  require_same_ground(f.dom(), d.ground(), "restrict_partial");
  auto table = f.table();
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!d.contains(i)) table[i] = PartialFn::undefined;
  return PartialFn(f.dom(), f.cod(), std::move(table));
}

Subset image_subset(const PartialFn& f, const Subset& d) {
  require_same_ground(f.dom(), d.ground(), "image_subset");
  Subset out(f.cod());
  for (auto i : d.indices())
    if (f.defined_at(i)) out.insert(f.table()[i]);
  return out;
}

Subset preimage_subset(const PartialFn& f, const Subset& d) {
  require_same_ground(f.cod(), d.ground(), "preimage_subset");
  Subset out(f.dom());
  for (std::size_t i = 0; i < f.table().size(); ++i)
    if (f.defined_at(i) && d.contains(f.table()[i])) out.insert(i);
  return out;
}

bool for_each_tuple(std::size_t n, std::size_t m,
                    const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> t(n, 0);
  if (n > 0 && m == 0) return true;
  while (true) {
    if (!visit(t)) return false;
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++t[k] < m) break;
      t[k] = 0;
      if (k == 0) return true;
    }
    if (n == 0) return true;
  }
}

std::size_t checked_power(std::size_t m, std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m != 0 && r > static_cast<std::size_t>(-1) / m) return static_cast<std::size_t>(-1);
    r *= m;
  }
  return r;
}

}  // namespace filcat
