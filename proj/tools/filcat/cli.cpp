#include "filcat/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "filcat/errors.hpp"
#include "filcat/factorization.hpp"
#include "filcat/json_out.hpp"
#include "filcat/limits.hpp"
#include "filcat/monoidal.hpp"
#include "filcat/workspace.hpp"

namespace filcat::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string format = "json";
  std::size_t max_ground = 2;
  std::uint64_t seed = Universe{}.seed;
  bool include_improper = true;
  std::size_t size_cap = default_hom_cap;
  bool timings = false;
  std::vector<std::string> names;
  std::vector<std::string> laws;
  std::string fault;
  std::string replay;
  std::string witness_out;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw IoError("cannot read " + path);
  buf << file.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file || !(file << text)) throw IoError("cannot write " + path);
}

bool taken(const Workspace& ws, const std::string& name) {
  using K = Workspace::Kind;
  for (auto k : {K::set, K::subset, K::filter, K::pfun, K::arrow})
    if (ws.has(k, name)) return true;
  return false;
}

std::string fresh(const Workspace& ws, const std::string& base) {
  if (!taken(ws, base)) return base;
  for (std::size_t i = 1;; ++i)
    if (auto name = base + "_" + std::to_string(i); !taken(ws, name)) return name;
}

// Adds `value` to `ws` under a fresh name derived from `base` and returns the name.
template <class T>
std::string publish(Workspace& ws, const std::string& base, const T& value) {
  auto name = fresh(ws, base);
  if constexpr (std::is_same_v<T, FilArrow>) ws.add_arrow(name, value);
  else if constexpr (std::is_same_v<T, Filter>) ws.add_filter(name, value);
  else if constexpr (std::is_same_v<T, PartialFn>) ws.add_pfun(name, value);
  else if constexpr (std::is_same_v<T, Subset>) ws.add_subset(name, value);
  return name;
}

class Session {
 public:
  Session(const Options& opt, std::istream& in) : opt_(opt), in_(in) {}

  // Runs a construction command; fills `result` and `out_ws`.
  void construct(const std::string& cmd, json& result, Workspace& ws) {
    ws = Workspace::parse(read_file(opt_.input, in_));
    auto need = [&](std::size_t n, bool at_least = false) {
      if (at_least ? opt_.names.size() < n : opt_.names.size() != n)
        throw Error(Errc::invalid_argument, cmd + " expects " + (at_least ? "at least " : "") + std::to_string(n) +
                                                " name(s), got " + std::to_string(opt_.names.size()));
    };
    const auto& n = opt_.names;
    auto arrow = [&](std::size_t i) { return ws.arrow(n[i]); };
    auto filter = [&](std::size_t i) { return ws.filter(n[i]); };
    auto named_arrow = [&](const std::string& base, const FilArrow& a) {
      auto name = publish(ws, base, a);
      return json{{"name", name}, {"arrow", to_json(a)}};
    };
    auto named_filter = [&](const std::string& base, const Filter& F) {
      auto name = publish(ws, base, F);
      return json{{"name", name}, {"filter", to_json(F)}};
    };
    auto cone = [&](const std::string& base, const Cone& c) {
      json legs = json::array();
      for (std::size_t k = 0; k < c.legs.size(); ++k)
        legs.push_back(named_arrow(base + "_leg" + std::to_string(k), c.legs[k]));
      return json{{"apex", named_filter(base, c.apex)}, {"legs", legs}};
    };
    auto filters_from = [&](std::size_t start) {
      std::vector<Filter> fs;
      for (std::size_t i = start; i < n.size(); ++i) fs.push_back(ws.filter(n[i]));
      return fs;
    };

    if (cmd == "render") {
      need(0);
      result = {{"entries", ws.size()}};
    } else if (cmd == "compose") {
      need(2);
      result = named_arrow("composite", compose_arrows(arrow(0), arrow(1)));
    } else if (cmd == "factor") {
      need(1);
      auto phi = arrow(0);
      auto fp = factor(phi);
      result = {{"mid_filter", named_filter(n[0] + "_mid", fp.mid_filter)},
                {"epi_part", named_arrow(n[0] + "_e", fp.epi_part)},
                {"mono_part", named_arrow(n[0] + "_m", fp.mono_part)},
                {"certificates",
                 {{"epi_part_in_E", is_e(fp.epi_part)},
                  {"mono_part_in_M", is_m(fp.mono_part)},
                  {"composite_is_input", compose_arrows(fp.mono_part, fp.epi_part) == phi}}}};
    } else if (cmd == "epi" || cmd == "monic" || cmd == "iso") {
      need(1);
      auto phi = arrow(0);
      if (cmd == "epi") {
        result = {{"epi", is_epi(phi)}, {"in_E", is_e(phi)}};
      } else if (cmd == "monic") {
        result = {{"monic", is_monic(phi)}, {"in_M", is_m(phi)}};
      } else {
        result = {{"iso", is_iso(phi)}};
        if (auto inv = inverse_arrow(phi)) result["inverse"] = named_arrow(n[0] + "_inv", *inv);
      }
    } else if (cmd == "equalizer") {
      need(2);
      auto eq = equalizer(arrow(0), arrow(1));
      result = {{"object", named_filter("eq", eq.object)}, {"inclusion", named_arrow("eq_incl", eq.inclusion)}};
    } else if (cmd == "product") {
      auto fs = filters_from(0);
      result = cone("prod", product_fil(fs));
    } else if (cmd == "coproduct") {
      auto fs = filters_from(0);
      result = cone("coprod", coproduct_fil(fs));
    } else if (cmd == "pullback") {
      need(2);
      result = cone("pb", pullback_cospan(arrow(0), arrow(1)));
    } else if (cmd == "core") {
      need(1);
      if (ws.has(Workspace::Kind::arrow, n[0])) {
        auto f = core_of_arrow(arrow(0));
        result = {{"name", publish(ws, "core_" + n[0], f)}, {"pfun", to_json(f)}};
      } else {
        auto c = core_of(filter(0));
        result = {{"name", publish(ws, "core_" + n[0], c)}, {"subset", to_json(c)}};
      }
    } else if (cmd == "box") {
      need(2);
      if (ws.has(Workspace::Kind::arrow, n[0]))
        result = named_arrow("box", box_arrow(arrow(0), arrow(1)));
      else
        result = named_filter("box", box_filter(filter(0), filter(1)));
    } else if (cmd == "hom") {
      need(2);
      auto hom = internal_hom(filter(0), filter(1), opt_.size_cap);
      result = named_filter("hom", hom.filter);
      result["ground_size"] = hom.filter.ground().size();
      result["core_size"] = hom.filter.core().size();
    } else if (cmd == "curry") {
      need(3);
      auto kappa = arrow(2);
      auto hom = internal_hom(kappa.target(), filter(1), opt_.size_cap);
      result = named_arrow("curried", curry(hom, filter(0), kappa));
    } else if (cmd == "uncurry") {
      need(3);
      auto hom = internal_hom(filter(0), filter(1), opt_.size_cap);
      result = named_arrow("uncurried", uncurry(hom, arrow(2)));
    } else if (cmd == "push") {
      need(2);
      result = named_filter("pushed", pushforward_filter(ws.pfun(n[0]), filter(1)));
    } else if (cmd == "pull") {
      need(2);
      result = named_filter("pulled", pullback_filter(ws.pfun(n[0]), filter(1)));
    } else {
      throw Error(Errc::invalid_argument, "unknown command " + cmd);
    }
  }

  LawContext context() const {
    LawContext ctx;
    ctx.universe.max_ground = opt_.max_ground;
    ctx.universe.seed = opt_.seed;
    ctx.universe.include_improper = opt_.include_improper;
    ctx.universe.hom_cap = opt_.size_cap;
    if (!opt_.fault.empty()) ctx = with_fault(std::move(ctx), opt_.fault);
    return ctx;
  }

  std::vector<LawReport> laws() {
    auto ctx = context();
    if (!opt_.replay.empty()) return {replay_witness(read_file(opt_.replay, in_), ctx)};
    if (opt_.laws.empty()) return run_all(ctx);
    std::vector<LawReport> out;
    for (const auto& name : opt_.laws) out.push_back(run_law(name, ctx));
    return out;
  }

 private:
  const Options& opt_;
  std::istream& in_;
};

json envelope(const std::string& command) { return {{"schema_version", schema_version}, {"command", command}}; }

int report_error(const Options& opt, const std::string& command, std::string_view code, const std::string& message,
                 int exit_code, std::ostream& out, std::ostream& err) {
  if (opt.format == "json") {
    auto doc = envelope(command);
    doc["error"] = {{"code", code}, {"message", message}};
    out << doc.dump(2) << '\n';
  }
  err << "filcat: " << code << ": " << message << '\n';
  return exit_code;
}

int run_laws(Session& session, const Options& opt, std::ostream& out, std::ostream& err) {
  auto reports = session.laws();
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  auto failed = std::find_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed; });
  if (failed != reports.end() && !opt.witness_out.empty()) write_file(opt.witness_out, failed->witness);

  if (opt.format == "json") {
    auto doc = envelope("laws");
    doc["universe"] = session.context().universe.summary();
    doc["passed"] = passed;
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, opt.timings));
    doc["reports"] = arr;
    if (!opt.witness_out.empty() && !passed) doc["witness_file"] = opt.witness_out;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.passed ? "PASS " : "FAIL ") << r.law << "  cases=" << r.cases;
      if (r.randomized) out << " seed=" << r.seed;
      if (opt.timings) out << " seconds=" << r.seconds;
      out << '\n';
      if (!r.passed) out << "  " << r.message << '\n';
    }
    out << (passed ? "all laws hold" : "law failure") << '\n';
  }
  if (!passed) err << "filcat: law " << failed->law << " failed: " << failed->message << '\n';
  return passed ? exit_ok : exit_law_failure;
}

const std::vector<std::pair<std::string, std::string>> construction_commands = {
    {"render", "Print the canonical form of a workspace"},
    {"compose", "psi phi: the composite psi o phi"},
    {"factor", "phi: epi/mono factorization with certificates"},
    {"epi", "phi: is phi an epimorphism"},
    {"monic", "phi: is phi a monomorphism"},
    {"iso", "phi: is phi an isomorphism, with its inverse"},
    {"equalizer", "alpha beta: equalizer of a parallel pair"},
    {"product", "F...: product cone"},
    {"coproduct", "F...: coproduct cocone"},
    {"pullback", "phi psi: pullback of a cospan"},
    {"core", "F|phi: core of a filter or an arrow"},
    {"box", "F G | phi psi: monoidal product"},
    {"hom", "G H: internal hom G^H"},
    {"curry", "F H kappa: transpose of kappa : F box H -> G"},
    {"uncurry", "G H rho: transpose of rho : F -> G^H"},
    {"push", "f F: pushforward filter"},
    {"pull", "f G: pullback filter"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Filters and germs of partial functions on finite sets", "filcat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-i,--input", opt.input, "Workspace file, '-' for stdin");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--size-cap", opt.size_cap, "Largest internal-hom ground allowed");
  std::string command;
  for (const auto& [name, help] : construction_commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("names", opt.names, "Workspace names");
    sub->callback([&command, name = name] { command = name; });
  }
  auto* laws = app.add_subcommand("laws", "Check the law suites exhaustively over a small universe");
  laws->add_option("--max-ground", opt.max_ground, "Largest ground set in the universe");
  laws->add_option("--seed", opt.seed, "Seed for randomized suites");
  laws->add_option("--include-improper", opt.include_improper, "Include improper filters (true|false)");
  laws->add_option("--law", opt.laws, "Run only these laws (repeatable)");
  laws->add_option("--fault", opt.fault, "Inject a composition fault (compose-swap)");
  laws->add_option("--replay", opt.replay, "Re-check a witness file");
  laws->add_option("--witness-out", opt.witness_out, "Write the first failing witness here");
  laws->add_flag("--timings", opt.timings, "Report per-law seconds");
  laws->callback([&command] { command = "laws"; });
  app.add_subcommand("list-laws", "Print every law name")->callback([&command] { command = "list-laws"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return exit_ok;
    }
    return report_error(opt, command.empty() ? "filcat" : command, "E_USAGE", e.what(), exit_input_error, out, err);
  }

  Session session(opt, in);
  try {
    if (command == "laws") return run_laws(session, opt, out, err);
    if (command == "list-laws") {
      for (const auto& name : law_names()) out << name << '\n';
      return exit_ok;
    }
    json result;
    Workspace ws;
    session.construct(command, result, ws);
    if (opt.format == "json") {
      auto doc = envelope(command);
      doc["result"] = result;
      doc["workspace"] = ws.render();
      out << doc.dump(2) << '\n';
    } else {
      out << ws.render();
    }
    return exit_ok;
  } catch (const Error& e) {
    return report_error(opt, command, errc_code(e.code()), e.what(),
                        e.code() == Errc::size_cap ? exit_size_cap : exit_input_error, out, err);
  } catch (const IoError& e) {
    return report_error(opt, command, "E_IO", e.what(), exit_input_error, out, err);
  }
}

}  // namespace filcat::cli
