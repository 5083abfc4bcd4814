#include "filcat/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "filcat/workspace.hpp"

#ifndef FILCAT_FIXTURES
#error "FILCAT_FIXTURES must point at tests/fixtures"
#endif

namespace filcat::test {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FILCAT_FIXTURES) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("filcat_cli_test_" + name); }

TEST(Cli, RenderRoundTrip) {
  auto r = run({"render", "--format", "text", "-i", fixture("sample.ws")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto again = run({"render", "--format", "text"}, r.out);
  ASSERT_EQ(again.code, 0) << again.err;
  EXPECT_EQ(again.out, r.out);
  EXPECT_EQ(Workspace::parse(r.out), Workspace::parse(slurp(fixture("sample.ws"))));
}

TEST(Cli, FactorReportsPartsAndCertificates) {
  auto r = run({"factor", "phi", "-i", fixture("sample.ws")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = r.doc();
  EXPECT_EQ(doc["schema_version"], 1);
  EXPECT_EQ(doc["command"], "factor");
  EXPECT_EQ(doc["result"]["mid_filter"]["filter"]["core"], json::array({"x"}));
  EXPECT_TRUE(doc["result"]["certificates"]["epi_part_in_E"].get<bool>());
  EXPECT_TRUE(doc["result"]["certificates"]["mono_part_in_M"].get<bool>());
  EXPECT_TRUE(doc["result"]["certificates"]["composite_is_input"].get<bool>());
  // The workspace in the output is itself valid input.
  auto ws = Workspace::parse(doc["workspace"].get<std::string>());
  EXPECT_TRUE(ws.has(Workspace::Kind::arrow, "phi_e"));
  EXPECT_TRUE(ws.has(Workspace::Kind::arrow, "phi_m"));
}

TEST(Cli, Deterministic) {
  auto a = run({"hom", "G", "Gx", "-i", fixture("sample.ws")});
  auto b = run({"hom", "G", "Gx", "-i", fixture("sample.ws")});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Constructions) {
  const auto ws = fixture("sample.ws");
  EXPECT_EQ(run({"compose", "psi", "phi", "-i", ws}).code, 2);  // phi lands in G, psi starts at F
  auto eq = run({"equalizer", "phi", "psi", "-i", ws});
  ASSERT_EQ(eq.code, 0) << eq.err;
  EXPECT_EQ(eq.doc()["result"]["object"]["filter"]["core"], json::array({"0"}));
  auto prod = run({"product", "F", "G", "-i", ws});
  ASSERT_EQ(prod.code, 0) << prod.err;
  EXPECT_EQ(prod.doc()["result"]["legs"].size(), 2U);
  EXPECT_EQ(prod.doc()["result"]["apex"]["filter"]["core"][0], json({{"pair", {"0", "x"}}}));
  auto cop = run({"coproduct", "F", "G", "-i", ws});
  ASSERT_EQ(cop.code, 0) << cop.err;
  EXPECT_EQ(cop.doc()["result"]["apex"]["filter"]["core"][0], json({{"of", "0"}, {"tag", 0}}));
  EXPECT_EQ(run({"pullback", "phi", "psi", "-i", ws}).code, 0);
  EXPECT_EQ(run({"core", "phi", "-i", ws}).code, 0);
  EXPECT_EQ(run({"core", "F", "-i", ws}).code, 0);
  EXPECT_EQ(run({"box", "F", "G", "-i", ws}).code, 0);
  EXPECT_EQ(run({"box", "phi", "psi", "-i", ws}).code, 0);
  auto push = run({"push", "f", "F", "-i", ws});
  EXPECT_EQ(push.doc()["result"]["filter"]["core"], json::array({"x"}));
  auto pull = run({"pull", "g", "Gx", "-i", ws});
  EXPECT_EQ(pull.doc()["result"]["filter"]["core"], json::array({"0"}));
  auto epi = run({"epi", "chi", "-i", ws});
  EXPECT_TRUE(epi.doc()["result"]["epi"].get<bool>());
  auto monic = run({"monic", "chi", "-i", ws});
  EXPECT_FALSE(monic.doc()["result"]["monic"].get<bool>());
  auto iso = run({"iso", "psi", "-i", ws});
  EXPECT_TRUE(iso.doc()["result"]["iso"].get<bool>());
  EXPECT_TRUE(iso.doc()["result"].contains("inverse"));
}

TEST(Cli, CurryAndUncurry) {
  const std::string doc =
      "set S = {0}\nset W = {a b}\nset T = {x y}\nfilter F on S core {0}\nfilter H on W core {a b}\n"
      "filter G on T core {x y}\nset P = {(0,a) (0,b)}\nfilter FH on P core {(0,a) (0,b)}\n"
      "pfun k : P -> T = {(0,a):x (0,b):y}\narrow kappa : FH -> G via k\n";
  auto c = run({"curry", "F", "H", "kappa", "--format", "text"}, doc);
  ASSERT_EQ(c.code, 0) << c.err;
  auto ws = Workspace::parse(c.out);
  ASSERT_TRUE(ws.has(Workspace::Kind::arrow, "curried"));
  auto u = run({"uncurry", "G", "H", "curried", "--format", "text"}, c.out);
  ASSERT_EQ(u.code, 0) << u.err;
  auto back = Workspace::parse(u.out);
  EXPECT_EQ(back.arrow("uncurried"), back.arrow("kappa"));
}

TEST(Cli, InputErrors) {
  auto missing = run({"factor", "nope", "-i", fixture("sample.ws")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.doc()["error"]["code"], "E_UNKNOWN_REF");
  auto local = run({"render"}, "set S = {0}\nset T = {x y}\nfilter F on S core {0}\nfilter G on T core {x}\n"
                               "pfun f : S -> T = {0:y}\narrow a : F -> G via f\n");
  EXPECT_EQ(local.code, 2);
  EXPECT_EQ(local.doc()["error"]["code"], "E_LOCALITY");
  auto dup = run({"render"}, "set S = {0}\nset S = {1}\n");
  EXPECT_EQ(dup.doc()["error"]["code"], "E_DUPLICATE");
  auto syntax = run({"render"}, "set S = {0\n");
  EXPECT_EQ(syntax.doc()["error"]["code"], "E_SYNTAX");
  EXPECT_EQ(run({"render", "-i", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"factor", "-i", fixture("sample.ws")}).code, 2);
}

TEST(Cli, SizeCap) {
  auto r = run({"hom", "G", "G", "--size-cap", "3", "-i", fixture("sample.ws")});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.doc()["error"]["code"], "E_SIZE_CAP");
}

TEST(Cli, SelectedLawsPass) {
  auto r = run({"laws", "--max-ground", "1", "--law", "category-axioms", "--law", "hom-count"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = r.doc();
  EXPECT_TRUE(doc["passed"].get<bool>());
  EXPECT_EQ(doc["reports"].size(), 2U);
  EXPECT_FALSE(doc["reports"][0].contains("seconds"));
  EXPECT_EQ(run({"laws", "--law", "bogus"}).code, 2);
}

TEST(Cli, CorruptedFixtureFailsWithReplayableWitness) {
  auto witness = temp_file("witness.txt");
  fs::remove(witness);
  auto r = run({"laws", "--replay", fixture("corrupted_composition.txt"), "--witness-out", witness.string()});
  EXPECT_EQ(r.code, 1);
  ASSERT_TRUE(fs::exists(witness));
  auto doc = r.doc();
  EXPECT_FALSE(doc["passed"].get<bool>());
  auto replay = run({"laws", "--replay", witness.string()});
  EXPECT_EQ(replay.code, 1);
  EXPECT_EQ(replay.doc()["reports"][0]["message"], doc["reports"][0]["message"]);
  fs::remove(witness);
}

TEST(Cli, FaultFlagFailsTheSuite) {
  auto r = run({"laws", "--fault", "compose-swap", "--law", "category-axioms"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.doc()["reports"][0]["witness"].get<std::string>().find("# fault: compose-swap"), std::string::npos);
}

TEST(Cli, ListLaws) {
  auto r = run({"list-laws"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("category-axioms\n"), std::string::npos);
}

}  // namespace
}  // namespace filcat::test
