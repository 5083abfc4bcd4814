#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace filcat {

/// An element of a ground set.
///
/// Atoms are immutable trees with four shapes: a text label, an ordered pair
/// (elements of product grounds), a tagged atom (elements of disjoint unions),
/// and an encoded germ (elements of internal-hom grounds). Copies share
/// structure. Equality and the total order are structural; kinds compare in
/// declaration order, then by content.
class Atom {
 public:
  enum class Kind { label, pair, tag, germ_code };

  using Entry = std::pair<Atom, Atom>;

  /// Default-constructed atom is the empty label.
  Atom();

  static Atom label(std::string text);
  static Atom pair(Atom first, Atom second);
  static Atom tag(std::size_t index, Atom inner);
  /// `entries` is sorted by key; duplicate keys throw Errc::duplicate_atom.
  /// The fingerprint (domain ground and domain core, both sorted) identifies
  /// the filter the encoded germ lives over.
  static Atom germ_code(std::vector<Atom> domain_ground, std::vector<Atom> domain_core,
                        std::vector<Entry> entries);

  Kind kind() const noexcept;

  const std::string& label_text() const;
  const Atom& first() const;
  const Atom& second() const;
  std::size_t tag_index() const;
  const Atom& tagged() const;
  const std::vector<Atom>& germ_ground() const;
  const std::vector<Atom>& germ_core() const;
  const std::vector<Entry>& germ_entries() const;

  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
  friend bool operator==(const Atom& a, const Atom& b);

  /// Workspace-syntax rendering, e.g. `x`, `(a,b)`, `#1:x`, `germ({0 1},{0},{0:x})`.
  std::string to_string() const;

 private:
  struct Node;
  explicit Atom(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace filcat
