#include "filcat/atom.hpp"

#include <algorithm>
#include <variant>

#include "filcat/errors.hpp"

namespace filcat {

namespace {

struct LabelData {
  std::string text;
};
struct PairData {
  Atom first, second;
};
struct TagData {
  std::size_t index;
  Atom inner;
};
struct GermData {
  std::vector<Atom> ground;
  std::vector<Atom> core;
  std::vector<Atom::Entry> entries;
};

template <class T>
std::strong_ordering compare_vectors(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::string join_atoms(const std::vector<Atom>& atoms) {
  std::string out = "{";
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ' ';
    out += atoms[i].to_string();
  }
  return out + "}";
}

}  // namespace

struct Atom::Node {
  std::variant<LabelData, PairData, TagData, GermData> data;
};

Atom::Atom() : node_(std::make_shared<const Node>(Node{LabelData{}})) {}

Atom Atom::label(std::string text) {
  return Atom(std::make_shared<const Node>(Node{LabelData{std::move(text)}}));
}

Atom Atom::pair(Atom first, Atom second) {
  return Atom(std::make_shared<const Node>(Node{PairData{std::move(first), std::move(second)}}));
}

Atom Atom::tag(std::size_t index, Atom inner) {
  return Atom(std::make_shared<const Node>(Node{TagData{index, std::move(inner)}}));
}

Atom Atom::germ_code(std::vector<Atom> domain_ground, std::vector<Atom> domain_core,
                     std::vector<Entry> entries) {
  std::sort(domain_ground.begin(), domain_ground.end());
  std::sort(domain_core.begin(), domain_core.end());
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].first == entries[i].first)
      throw Error(Errc::duplicate_atom,
                  "germ code has duplicate key " + entries[i].first.to_string());
  }
  return Atom(std::make_shared<const Node>(
      Node{GermData{std::move(domain_ground), std::move(domain_core), std::move(entries)}}));
}

Atom::Kind Atom::kind() const noexcept { return static_cast<Kind>(node_->data.index()); }

const std::string& Atom::label_text() const { return std::get<LabelData>(node_->data).text; }
const Atom& Atom::first() const { return std::get<PairData>(node_->data).first; }
const Atom& Atom::second() const { return std::get<PairData>(node_->data).second; }
std::size_t Atom::tag_index() const { return std::get<TagData>(node_->data).index; }
const Atom& Atom::tagged() const { return std::get<TagData>(node_->data).inner; }
const std::vector<Atom>& Atom::germ_ground() const { return std::get<GermData>(node_->data).ground; }
const std::vector<Atom>& Atom::germ_core() const { return std::get<GermData>(node_->data).core; }
const std::vector<Atom::Entry>& Atom::germ_entries() const {
  return std::get<GermData>(node_->data).entries;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_->data.index() <=> b.node_->data.index(); c != 0) return c;
  switch (a.kind()) {
    case Atom::Kind::label:
      return a.label_text().compare(b.label_text()) <=> 0;
    case Atom::Kind::pair:
      if (auto c = a.first() <=> b.first(); c != 0) return c;
      return a.second() <=> b.second();
    case Atom::Kind::tag:
      if (auto c = a.tag_index() <=> b.tag_index(); c != 0) return c;
      return a.tagged() <=> b.tagged();
    case Atom::Kind::germ_code:
      if (auto c = compare_vectors(a.germ_ground(), b.germ_ground()); c != 0) return c;
      if (auto c = compare_vectors(a.germ_core(), b.germ_core()); c != 0) return c;
      return compare_vectors(a.germ_entries(), b.germ_entries());
  }
  return std::strong_ordering::equal;
}

bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }

std::string Atom::to_string() const {
  switch (kind()) {
    case Kind::label:
      return label_text();
    case Kind::pair:
      return "(" + first().to_string() + "," + second().to_string() + ")";
    case Kind::tag:
      return "#" + std::to_string(tag_index()) + ":" + tagged().to_string();
    case Kind::germ_code: {
      std::string map = "{";
      const auto& entries = germ_entries();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) map += ' ';
        map += entries[i].first.to_string() + ":" + entries[i].second.to_string();
      }
      map += "}";
      return "germ(" + join_atoms(germ_ground()) + "," + join_atoms(germ_core()) + "," + map + ")";
    }
  }
  return {};
}

}  // namespace filcat
