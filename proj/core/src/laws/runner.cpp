#include <algorithm>
#include <chrono>
#include <charconv>
#include <sstream>

#include "filcat/errors.hpp"
#include "registry.hpp"

namespace filcat {

namespace {

const std::vector<detail::LawDef>& registry() {
  static const std::vector<detail::LawDef> laws = [] {
    std::vector<detail::LawDef> all;
    for (auto part : {detail::finset_laws(), detail::filter_laws(), detail::germ_laws(),
                      detail::factorization_laws(), detail::limit_laws(), detail::monoidal_laws(),
                      detail::closed_laws(), detail::boundary_laws()})
      for (auto& law : part) all.push_back(std::move(law));
    all.push_back(detail::oracle_law());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return all;
  }();
  return laws;
}

const detail::LawDef& find_law(std::string_view name) {
  for (const auto& law : registry())
    if (law.name == name) return law;
  throw Error(Errc::unknown_law, "unknown law '" + std::string(name) + "'");
}

// Indexed entries named <prefix><digits>, in index order.
template <class Get>
auto indexed(const Workspace& ws, Workspace::Kind kind, char prefix, Get get) {
  std::vector<std::pair<std::size_t, std::decay_t<decltype(get(std::string{}))>>> found;
  for (const auto& e : ws.entries()) {
    if (e.kind != kind || e.name.size() < 2 || e.name[0] != prefix) continue;
    std::size_t idx = 0;
    auto [ptr, ec] = std::from_chars(e.name.data() + 1, e.name.data() + e.name.size(), idx);
    if (ec != std::errc{} || ptr != e.name.data() + e.name.size()) continue;
    found.emplace_back(idx, get(e.name));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::decay_t<decltype(get(std::string{}))>> out;
  for (auto& [i, v] : found) out.push_back(std::move(v));
  return out;
}

std::string render_witness(const detail::LawDef& law, const LawContext& ctx, const Instance& inst,
                           const Failure& failure) {
  std::ostringstream out;
  out << "# law: " << law.name << "\n";
  if (!ctx.fault.empty()) out << "# fault: " << ctx.fault << "\n";
  std::istringstream lines(failure.message);
  for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  auto ws = inst.to_workspace();
  for (const auto& [name, arrow] : failure.evidence) ws.add_arrow("_" + name, arrow);
  out << ws.render();
  return out.str();
}

detail::Check guarded_check(const detail::LawDef& law, const LawContext& ctx, const Instance& inst) {
  try {
    return law.check(ctx, inst);
  } catch (const Error& e) {
    return Failure{"unexpected " + std::string(errc_code(e.code())) + ": " + e.what(), {}};
  }
}

}  // namespace

std::vector<std::string> Universe::letters(std::size_t n) const {
  if (alphabet.empty()) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
  }
  if (alphabet.size() < n)
    throw Error(Errc::invalid_argument, "alphabet has " + std::to_string(alphabet.size()) + " letters, need " +
                                            std::to_string(n));
  return {alphabet.begin(), alphabet.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::vector<GroundSet> Universe::grounds(std::size_t n) const {
  const auto names = letters(std::max(max_ground, n));
  if (names.size() > 20) throw Error(Errc::size_cap, "universe alphabet too large");
  std::vector<GroundSet> out;
  for (std::size_t size = 0; size <= std::min(n, names.size()); ++size)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << names.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size) continue;
      std::vector<Atom> atoms;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (mask >> i & 1U) atoms.push_back(Atom::label(names[i]));
      out.emplace_back(std::move(atoms));
    }
  return out;
}

std::vector<Filter> Universe::filters(std::size_t n) const {
  std::vector<Filter> out;
  for (const auto& g : grounds(n))
    for (auto& f : all_filters_on(g, include_improper)) out.push_back(std::move(f));
  return out;
}

std::string Universe::summary() const {
  std::ostringstream out;
  out << "grounds<=" << max_ground << " alphabet={";
  auto names = letters(max_ground);
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
  out << "} improper=" << (include_improper ? "yes" : "no");
  return out.str();
}

std::vector<Filter> all_filters_on(const GroundSet& S, bool include_improper) {
  std::vector<Filter> out;
  for (auto& core : all_subsets(S)) {
    if (!include_improper && core.empty()) continue;
    out.emplace_back(S, std::move(core));
  }
  return out;
}

std::vector<PartialFn> all_partial_functions(const GroundSet& S, const GroundSet& T) {
  std::vector<PartialFn> out;
  out.reserve(checked_power(T.size() + 1, S.size()));
  for_each_tuple(S.size(), T.size() + 1, [&](const std::vector<std::size_t>& t) {
    std::vector<std::size_t> table(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) table[i] = t[i] == T.size() ? PartialFn::undefined : t[i];
    out.emplace_back(S, T, std::move(table));
    return true;
  });
  return out;
}

ComposeFn faulty_compose(std::string_view fault) {
  if (fault != "compose-swap") throw Error(Errc::invalid_argument, "unknown fault '" + std::string(fault) + "'");
  return [](const FilArrow& psi, const FilArrow& phi) {
    auto c = compose_arrows(psi, phi);
    auto core = c.source().core().indices();
    if (core.size() < 2) return c;
    auto table = c.rep().table();
    std::swap(table[core[0]], table[core[1]]);
    PartialFn rep(c.rep().dom(), c.rep().cod(), std::move(table));
    return FilArrow(Germ(c.source(), std::move(rep)), c.target());
  };
}

LawContext with_fault(LawContext ctx, std::string_view fault) {
  ctx.compose = faulty_compose(fault);
  ctx.fault = std::string(fault);
  return ctx;
}

namespace {
template <class T>
const T& at_or_throw(const std::vector<T>& v, std::size_t i, const char* what) {
  if (i >= v.size())
    throw Error(Errc::invalid_argument, std::string("instance has no ") + what + " #" + std::to_string(i));
  return v[i];
}
}  // namespace

const GroundSet& Instance::set(std::size_t i) const { return at_or_throw(sets, i, "set"); }
const Subset& Instance::subset(std::size_t i) const { return at_or_throw(subsets, i, "subset"); }
const Filter& Instance::filter(std::size_t i) const { return at_or_throw(filters, i, "filter"); }
const PartialFn& Instance::pfun(std::size_t i) const { return at_or_throw(pfuns, i, "partial function"); }
const FilArrow& Instance::arrow(std::size_t i) const { return at_or_throw(arrows, i, "arrow"); }

Workspace Instance::to_workspace() const {
  Workspace ws;
  for (std::size_t i = 0; i < sets.size(); ++i) ws.add_set("S" + std::to_string(i), sets[i]);
  for (std::size_t i = 0; i < subsets.size(); ++i) ws.add_subset("X" + std::to_string(i), subsets[i]);
  for (std::size_t i = 0; i < filters.size(); ++i) ws.add_filter("F" + std::to_string(i), filters[i]);
  for (std::size_t i = 0; i < pfuns.size(); ++i) ws.add_pfun("f" + std::to_string(i), pfuns[i]);
  for (std::size_t i = 0; i < arrows.size(); ++i) ws.add_arrow("a" + std::to_string(i), arrows[i]);
  return ws;
}

Instance Instance::from_workspace(const Workspace& ws) {
  using K = Workspace::Kind;
  Instance inst;
  inst.sets = indexed(ws, K::set, 'S', [&](const std::string& n) { return ws.set(n); });
  inst.subsets = indexed(ws, K::subset, 'X', [&](const std::string& n) { return ws.subset(n); });
  inst.filters = indexed(ws, K::filter, 'F', [&](const std::string& n) { return ws.filter(n); });
  inst.pfuns = indexed(ws, K::pfun, 'f', [&](const std::string& n) { return ws.pfun(n); });
  inst.arrows = indexed(ws, K::arrow, 'a', [&](const std::string& n) { return ws.arrow(n); });
  return inst;
}

std::vector<std::string> law_names() {
  std::vector<std::string> out;
  for (const auto& law : registry()) out.push_back(law.name);
  return out;
}

LawReport run_law(std::string_view name, const LawContext& ctx) {
  const auto& law = find_law(name);
  LawReport report;
  report.law = law.name;
  report.universe = ctx.universe.summary();
  report.randomized = law.randomized;
  report.seed = law.randomized ? ctx.universe.seed : 0;
  const auto start = std::chrono::steady_clock::now();
  law.enumerate(ctx, [&](const Instance& inst) {
    ++report.cases;
    auto failure = guarded_check(law, ctx, inst);
    if (!failure) return true;
    report.passed = false;
    report.message = failure->message;
    report.witness = render_witness(law, ctx, inst, *failure);
    return false;
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<LawReport> run_all(const LawContext& ctx) {
  std::vector<LawReport> out;
  for (const auto& law : registry()) out.push_back(run_law(law.name, ctx));
  return out;
}

LawReport oracle_cross_check(const LawContext& ctx) { return run_law("oracle-cross-check", ctx); }

LawReport replay_witness(std::string_view text, const LawContext& ctx) {
  std::string law_name, fault;
  std::istringstream lines{std::string(text)};
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("# law:", 0) == 0) law_name = line.substr(6);
    if (line.rfind("# fault:", 0) == 0) fault = line.substr(8);
  }
  auto trim = [](std::string& s) {
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(" \r") + 1);
  };
  trim(law_name);
  trim(fault);
  if (law_name.empty()) throw Error(Errc::invalid_argument, "witness has no '# law:' header");
  const auto& law = find_law(law_name);
  auto run_ctx = fault.empty() ? ctx : with_fault(ctx, fault);
  auto inst = Instance::from_workspace(Workspace::parse(text));

  LawReport report;
  report.law = law.name;
  report.universe = "replay";
  report.randomized = law.randomized;
  const auto start = std::chrono::steady_clock::now();
  report.cases = 1;
  auto failure = guarded_check(law, run_ctx, inst);
  if (failure) {
    report.passed = false;
    report.message = failure->message;
    report.witness = render_witness(law, run_ctx, inst, *failure);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace detail {

const std::vector<FilArrow>& World::hom(std::size_t i, std::size_t j) {
  auto key = std::make_pair(i, j);
  auto it = homs_.find(key);
  if (it == homs_.end()) it = homs_.emplace(key, hom_set(filters_[i], filters_[j])).first;
  return it->second;
}

const std::vector<PartialFn>& PfunCache::get(const GroundSet& S, const GroundSet& T) {
  for (const auto& [key, fns] : cache_)
    if (key.first == S && key.second == T) return fns;
  cache_.emplace_back(std::make_pair(S, T), all_partial_functions(S, T));
  return cache_.back().second;
}

Failure fail(std::string message) { return Failure{std::move(message), {}}; }
Failure fail(std::string message, std::vector<std::pair<std::string, FilArrow>> evidence) {
  return Failure{std::move(message), std::move(evidence)};
}

std::string show(const Filter& F) { return F.to_string(); }
std::string show(const FilArrow& a) {
  return a.rep().to_string() + " : " + a.source().to_string() + " -> " + a.target().to_string();
}
std::string show(const PartialFn& f) { return f.to_string(); }

FilArrow compose(const LawContext& ctx, const FilArrow& psi, const FilArrow& phi) { return ctx.compose(psi, phi); }

}  // namespace detail

}  // namespace filcat
