// Acceptance run: one PASS/FAIL line per criterion with its pinned time limit.
// Usage: filcat_acceptance PATH_TO_FILCAT FIXTURE_DIR

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "filcat/laws.hpp"
#include "filcat/workspace.hpp"

namespace {

using filcat::LawContext;
using filcat::LawReport;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

// Runs the named laws; fails on the first failing report or on a case count below `min_cases`.
Outcome laws(const LawContext& ctx, const std::vector<std::string>& names, std::size_t min_cases = 1) {
  std::ostringstream detail;
  for (const auto& name : names) {
    LawReport r = filcat::run_law(name, ctx);
    detail << name << "=" << r.cases << " ";
    if (!r.passed) return {false, name + ": " + r.message};
    if (r.cases < min_cases) return {false, name + ": only " + std::to_string(r.cases) + " cases"};
  }
  return {true, detail.str()};
}

struct Process {
  int code = -1;
  std::string out;
};

Process run(const std::string& command) {
  Process p;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return p;
  char buf[4096];
  while (auto n = fread(buf, 1, sizeof buf, pipe)) p.out.append(buf, n);
  int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

Outcome cli(const std::string& bin, const std::string& fixtures) {
  namespace fs = std::filesystem;
  const std::string sample = fixtures + "/sample.ws";
  auto first = run(quote(bin) + " render --format text -i " + quote(sample));
  if (first.code != 0) return {false, "render exited " + std::to_string(first.code)};
  const auto tmp = fs::temp_directory_path() / "filcat_acceptance";
  fs::create_directories(tmp);
  const auto rendered = (tmp / "rendered.ws").string();
  std::ofstream(rendered) << first.out;
  auto second = run(quote(bin) + " render --format text -i " + quote(rendered));
  if (second.code != 0 || second.out != first.out) return {false, "render is not a fixed point"};

  auto all = run(quote(bin) + " laws --max-ground 2");
  if (all.code != 0) return {false, "laws --max-ground 2 exited " + std::to_string(all.code)};
  auto doc = nlohmann::json::parse(all.out, nullptr, false);
  if (doc.is_discarded() || !doc.value("passed", false)) return {false, "laws JSON is not all-pass"};
  for (const auto& r : doc["reports"])
    if (!r.value("passed", false)) return {false, "report " + r.value("law", std::string{}) + " failed"};

  const auto witness = (tmp / "witness.txt").string();
  fs::remove(witness);
  auto bad = run(quote(bin) + " laws --replay " + quote(fixtures + "/corrupted_composition.txt") +
                 " --witness-out " + quote(witness));
  if (bad.code != 1) return {false, "corrupted fixture exited " + std::to_string(bad.code)};
  if (!fs::exists(witness)) return {false, "no witness file written"};
  auto replay = run(quote(bin) + " laws --replay " + quote(witness));
  if (replay.code != 1) return {false, "witness replay exited " + std::to_string(replay.code)};
  return {true, std::to_string(doc["reports"].size()) + " laws pass; witness replays"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " FILCAT_BINARY FIXTURE_DIR\n";
    return 2;
  }
  const std::string bin = argv[1], fixtures = argv[2];

  LawContext base;  // grounds <= 2 from a two-letter alphabet, improper filters included
  base.universe.max_ground = 2;
  LawContext brute = base;
  brute.universe.brute_ground = 4;
  LawContext oracle = base;
  oracle.universe.oracle_ground = 3;

  const std::vector<Criterion> criteria = {
      {1, "category axioms", 5, [&] { return laws(base, {"category-axioms"}, 1000); }},
      {2, "factorization system", 10, [&] { return laws(base, {"factorization-axioms", "diagonal-uniqueness"}); }},
      {3, "epi/monic exactness", 60, [&] { return laws(brute, {"epi-monic-exactness"}); }},
      {4, "subobject lattice", 5, [&] { return laws(base, {"m-subobject-lattice"}); }},
      {5, "universal properties", 30,
       [&] {
         return laws(base, {"equalizer-universal", "product-universal", "coproduct-universal", "pullback-universal",
                            "pullback-agreement"});
       }},
      {6, "E-stability", 30, [&] { return laws(base, {"e-stability"}); }},
      {7, "monoidal coherence", 30,
       [&] { return laws(base, {"monoidal-coherence", "core-strict-monoidal", "monoidal-naturality"}); }},
      {8, "closed-structure adjunction", 120,
       [&] { return laws(base, {"chi-bijection", "chi-naturality", "adjunction-triangles", "box-slices"}); }},
      {9, "internal-hom cardinalities", 60, [&] { return laws(base, {"internal-hom"}); }},
      {10, "countable facts", 60, [&] { return laws(base, {"filter-count", "hom-count", "unit-terminal"}); }},
      {11, "improper boundary", 60,
       [&] {
         auto b = laws(base, {"improper-boundary"});
         if (!b.ok) return b;
         std::size_t n = 0;
         for (const auto& r : filcat::run_all(base)) {
           if (!r.passed) return Outcome{false, r.law + ": " + r.message};
           ++n;
         }
         return Outcome{true, std::to_string(n) + " suites pass with improper filters"};
       }},
      {12, "oracle equivalence", 60, [&] { return laws(oracle, {"oracle-cross-check"}); }},
      {13, "command line", 5, [&] { return cli(bin, fixtures); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) o = {false, "over time limit; " + o.detail};
    if (!o.ok) ++failures;
    std::printf("%s %2d %-28s %8.3fs (limit %5.0fs)  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                c.limit_seconds, o.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
