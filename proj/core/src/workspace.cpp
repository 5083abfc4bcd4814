#include "filcat/workspace.hpp"

#include <cctype>
#include <optional>

#include "filcat/errors.hpp"

namespace filcat {

namespace {

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '+' ||
         c == '*' || c == '-';
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

// Cursor over one statement line.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::syntax, "line " + std::to_string(line_) + ":" + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string name() {
    skip_ws();
    if (pos_ >= text_.size() || !is_name_start(text_[pos_])) fail("expected a name");
    auto start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  void keyword(std::string_view kw) {
    skip_ws();
    auto start = pos_;
    std::string got = (pos_ < text_.size() && is_name_start(text_[pos_])) ? name() : std::string{};
    if (got != kw) {
      pos_ = start;
      fail("expected '" + std::string(kw) + "'");
    }
  }

  Atom atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an atom");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto a = atom();
      expect(",");
      auto b = atom();
      expect(")");
      return Atom::pair(std::move(a), std::move(b));
    }
    if (c == '#') {
      ++pos_;
      auto start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a tag index");
      auto index = std::stoull(std::string(text_.substr(start, pos_ - start)));
      expect(":");
      return Atom::tag(index, atom());
    }
    if (!is_label_char(c)) fail("expected an atom");
    auto start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) {
      if (text_[pos_] == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
      ++pos_;
    }
    if (start == pos_) fail("expected an atom");
    std::string label(text_.substr(start, pos_ - start));
    if (label == "germ" && pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      auto ground = atom_list();
      expect(",");
      auto core = atom_list();
      expect(",");
      auto entries = entry_list();
      expect(")");
      return Atom::germ_code(std::move(ground), std::move(core), std::move(entries));
    }
    return Atom::label(std::move(label));
  }

  std::vector<Atom> atom_list() {
    expect("{");
    std::vector<Atom> out;
    while (!accept("}")) {
      if (at_end()) fail("unterminated '{'");
      out.push_back(atom());
    }
    return out;
  }

  std::vector<Atom::Entry> entry_list() {
    expect("{");
    std::vector<Atom::Entry> out;
    while (!accept("}")) {
      if (at_end()) fail("unterminated '{'");
      auto k = atom();
      expect(":");
      auto v = atom();
      out.emplace_back(std::move(k), std::move(v));
    }
    return out;
  }

  std::vector<std::vector<Atom>> list_of_lists() {
    expect("{");
    std::vector<std::vector<Atom>> out;
    while (!accept("}")) {
      if (at_end()) fail("unterminated '{'");
      out.push_back(atom_list());
    }
    return out;
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing text");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

const char* kind_word(Workspace::Kind k) {
  switch (k) {
    case Workspace::Kind::set: return "set";
    case Workspace::Kind::subset: return "subset";
    case Workspace::Kind::filter: return "filter";
    case Workspace::Kind::pfun: return "pfun";
    case Workspace::Kind::arrow: return "arrow";
  }
  return "";
}

template <class Map>
const auto& lookup(const Map& m, const std::string& name, Workspace::Kind kind) {
  auto it = m.find(name);
  if (it == m.end())
    throw Error(Errc::unknown_reference, std::string("no ") + kind_word(kind) + " named '" + name + "'");
  return it->second;
}

}  // namespace

Atom parse_atom(std::string_view text) {
  Cursor c(text, 1);
  auto a = c.atom();
  c.finish();
  return a;
}

bool Workspace::has(Kind kind, const std::string& name) const {
  switch (kind) {
    case Kind::set: return sets_.count(name) != 0;
    case Kind::subset: return subsets_.count(name) != 0;
    case Kind::filter: return filters_.count(name) != 0;
    case Kind::pfun: return pfuns_.count(name) != 0;
    case Kind::arrow: return arrows_.count(name) != 0;
  }
  return false;
}

void Workspace::claim(Kind kind, const std::string& name) {
  if (has(kind, name))
    throw Error(Errc::duplicate_name, std::string(kind_word(kind)) + " '" + name + "' is declared twice");
  entries_.push_back({kind, name});
}

std::string Workspace::fresh(const std::string& prefix, Kind kind) {
  std::string name;
  do name = prefix + std::to_string(helper_counter_++);
  while (has(kind, name));
  return name;
}

std::string Workspace::name_set(const GroundSet& s) {
  for (const auto& e : entries_)
    if (e.kind == Kind::set && sets_.at(e.name) == s) return e.name;
  auto name = fresh("_S", Kind::set);
  add_set(name, s);
  return name;
}

std::string Workspace::name_filter(const Filter& f) {
  for (const auto& e : entries_)
    if (e.kind == Kind::filter && filters_.at(e.name).value == f) return e.name;
  auto name = fresh("_F", Kind::filter);
  add_filter(name, f);
  return name;
}

std::string Workspace::name_pfun(const PartialFn& f) {
  for (const auto& e : entries_)
    if (e.kind == Kind::pfun && pfuns_.at(e.name).value == f) return e.name;
  auto name = fresh("_f", Kind::pfun);
  add_pfun(name, f);
  return name;
}

void Workspace::add_set(const std::string& name, const GroundSet& s) {
  claim(Kind::set, name);
  sets_.emplace(name, s);
}

void Workspace::add_subset(const std::string& name, const Subset& x) {
  auto set = name_set(x.ground());
  claim(Kind::subset, name);
  subsets_.emplace(name, SubsetEntry{x, set});
}

void Workspace::add_filter(const std::string& name, const Filter& f) {
  auto set = name_set(f.ground());
  claim(Kind::filter, name);
  filters_.emplace(name, FilterEntry{f, set});
}

void Workspace::add_pfun(const std::string& name, const PartialFn& f) {
  auto dom = name_set(f.dom());
  auto cod = name_set(f.cod());
  claim(Kind::pfun, name);
  pfuns_.emplace(name, PfunEntry{f, dom, cod});
}

void Workspace::add_arrow(const std::string& name, const FilArrow& a) {
  auto source = name_filter(a.source());
  auto target = name_filter(a.target());
  auto via = name_pfun(a.rep());
  claim(Kind::arrow, name);
  arrows_.emplace(name, ArrowEntry{a, source, target, via});
}

const GroundSet& Workspace::set(const std::string& name) const { return lookup(sets_, name, Kind::set); }
const Subset& Workspace::subset(const std::string& name) const {
  return lookup(subsets_, name, Kind::subset).value;
}
const Filter& Workspace::filter(const std::string& name) const {
  return lookup(filters_, name, Kind::filter).value;
}
const PartialFn& Workspace::pfun(const std::string& name) const { return lookup(pfuns_, name, Kind::pfun).value; }
const FilArrow& Workspace::arrow(const std::string& name) const {
  return lookup(arrows_, name, Kind::arrow).value;
}

Workspace Workspace::parse(std::string_view text) {
  Workspace ws;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    Cursor c(line, line_no);
    if (c.at_end() || c.peek() == '#') continue;

    auto prefix = "line " + std::to_string(line_no) + ": ";
    auto word = c.name();
    try {
      if (word == "set") {
        auto name = c.name();
        c.expect("=");
        auto atoms = c.atom_list();
        c.finish();
        ws.add_set(name, GroundSet(std::move(atoms)));
      } else if (word == "subset") {
        auto name = c.name();
        c.keyword("of");
        auto set = c.name();
        c.expect("=");
        auto atoms = c.atom_list();
        c.finish();
        const auto& S = ws.set(set);
        ws.claim(Kind::subset, name);
        ws.subsets_.emplace(name, SubsetEntry{Subset::of(S, atoms), set});
      } else if (word == "filter") {
        auto name = c.name();
        c.keyword("on");
        auto set = c.name();
        const auto& S = ws.set(set);
        std::optional<Filter> f;
        if (c.accept("core")) {
          auto atoms = c.atom_list();
          f.emplace(S, Subset::of(S, atoms));
        } else if (c.accept("base")) {
          FilterBase base{S, {}};
          for (const auto& members : c.list_of_lists()) base.sets.push_back(Subset::of(S, members));
          f.emplace(fg_filter(base));
        } else {
          c.fail("expected 'core' or 'base'");
        }
        c.finish();
        ws.claim(Kind::filter, name);
        ws.filters_.emplace(name, FilterEntry{*f, set});
      } else if (word == "pfun") {
        auto name = c.name();
        c.expect(":");
        auto dom = c.name();
        c.expect("->");
        auto cod = c.name();
        c.expect("=");
        auto entries = c.entry_list();
        c.finish();
        auto f = PartialFn::from_pairs(ws.set(dom), ws.set(cod), entries);
        ws.claim(Kind::pfun, name);
        ws.pfuns_.emplace(name, PfunEntry{std::move(f), dom, cod});
      } else if (word == "arrow") {
        auto name = c.name();
        c.expect(":");
        auto source = c.name();
        c.expect("->");
        auto target = c.name();
        c.keyword("via");
        auto via = c.name();
        c.finish();
        auto a = make_arrow(ws.filter(source), ws.filter(target), ws.pfun(via));
        ws.claim(Kind::arrow, name);
        ws.arrows_.emplace(name, ArrowEntry{std::move(a), source, target, via});
      } else {
        c.fail("unknown statement '" + word + "'");
      }
    } catch (const Error& e) {
      if (e.code() == Errc::syntax) throw;
      throw Error(e.code(), prefix + e.what());
    }
  }
  return ws;
}

std::string Workspace::render() const {
  std::string out;
  for (const auto& e : entries_) {
    switch (e.kind) {
      case Kind::set:
        out += "set " + e.name + " = " + sets_.at(e.name).to_string();
        break;
      case Kind::subset: {
        const auto& s = subsets_.at(e.name);
        out += "subset " + e.name + " of " + s.set + " = " + s.value.to_string();
        break;
      }
      case Kind::filter: {
        const auto& f = filters_.at(e.name);
        out += "filter " + e.name + " on " + f.set + " core " + f.value.core().to_string();
        break;
      }
      case Kind::pfun: {
        const auto& f = pfuns_.at(e.name);
        out += "pfun " + e.name + " : " + f.dom + " -> " + f.cod + " = " + f.value.to_string();
        break;
      }
      case Kind::arrow: {
        const auto& a = arrows_.at(e.name);
        out += "arrow " + e.name + " : " + a.source + " -> " + a.target + " via " + a.via;
        break;
      }
    }
    out += '\n';
  }
  return out;
}

bool operator==(const Workspace& a, const Workspace& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.kind != y.kind || x.name != y.name) return false;
    using K = Workspace::Kind;
    switch (x.kind) {
      case K::set:
        if (!(a.sets_.at(x.name) == b.sets_.at(y.name))) return false;
        break;
      case K::subset: {
        const auto &p = a.subsets_.at(x.name), &q = b.subsets_.at(y.name);
        if (!(p.value == q.value) || p.set != q.set) return false;
        break;
      }
      case K::filter: {
        const auto &p = a.filters_.at(x.name), &q = b.filters_.at(y.name);
        if (!(p.value == q.value) || p.set != q.set) return false;
        break;
      }
      case K::pfun: {
        const auto &p = a.pfuns_.at(x.name), &q = b.pfuns_.at(y.name);
        if (!(p.value == q.value) || p.dom != q.dom || p.cod != q.cod) return false;
        break;
      }
      case K::arrow: {
        const auto &p = a.arrows_.at(x.name), &q = b.arrows_.at(y.name);
        if (!(p.value == q.value) || p.source != q.source || p.target != q.target || p.via != q.via) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace filcat
