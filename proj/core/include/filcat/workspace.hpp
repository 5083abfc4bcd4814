#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "filcat/germcat.hpp"

namespace filcat {

/// Named sets, subsets, filters, partial functions and arrows, in declaration
/// order. This is what the text format describes:
///
///   set S = {0 1 2}
///   subset X of S = {0 1}
///   filter F on S core {0 1}
///   filter F2 on S base {{0 1} {1 2}}
///   pfun f : S -> T = {0:x 1:y}
///   arrow phi : F -> G via f
///
/// Atoms are labels, pairs `(a,b)`, tags `#1:a` and germ codes
/// `germ({ground},{core},{k:v ...})`. Lines starting with `#` are comments.
class Workspace {
 public:
  enum class Kind { set, subset, filter, pfun, arrow };

  struct Entry {
    Kind kind;
    std::string name;
  };

  /// Parses and validates a document. Errors carry Errc::syntax (with
  /// line:column), unknown_reference, duplicate_name, unknown_atom,
  /// duplicate_atom, not_admissible or not_local.
  static Workspace parse(std::string_view text);
  /// Canonical text; parse(render()) == *this.
  std::string render() const;

  /// Adders name any set, filter or partial function they depend on that is
  /// not already present under some name (helpers get `_S0`, `_F0`, `_f0`...).
  /// A taken name throws Errc::duplicate_name.
  void add_set(const std::string& name, const GroundSet& s);
  void add_subset(const std::string& name, const Subset& x);
  void add_filter(const std::string& name, const Filter& f);
  void add_pfun(const std::string& name, const PartialFn& f);
  void add_arrow(const std::string& name, const FilArrow& a);

  /// Lookups throw Errc::unknown_reference.
  const GroundSet& set(const std::string& name) const;
  const Subset& subset(const std::string& name) const;
  const Filter& filter(const std::string& name) const;
  const PartialFn& pfun(const std::string& name) const;
  const FilArrow& arrow(const std::string& name) const;
  bool has(Kind kind, const std::string& name) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const Workspace& a, const Workspace& b);

 private:
  struct SubsetEntry {
    Subset value;
    std::string set;
  };
  struct FilterEntry {
    Filter value;
    std::string set;
  };
  struct PfunEntry {
    PartialFn value;
    std::string dom, cod;
  };
  struct ArrowEntry {
    FilArrow value;
    std::string source, target, via;
  };

  void claim(Kind kind, const std::string& name);
  std::string name_set(const GroundSet& s);
  std::string name_filter(const Filter& f);
  std::string name_pfun(const PartialFn& f);
  std::string fresh(const std::string& prefix, Kind kind);

  std::vector<Entry> entries_;
  std::map<std::string, GroundSet> sets_;
  std::map<std::string, SubsetEntry> subsets_;
  std::map<std::string, FilterEntry> filters_;
  std::map<std::string, PfunEntry> pfuns_;
  std::map<std::string, ArrowEntry> arrows_;
  std::size_t helper_counter_ = 0;
};

/// Parses one atom in workspace syntax; throws Errc::syntax.
Atom parse_atom(std::string_view text);

}  // namespace filcat
