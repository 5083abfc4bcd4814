#include "filcat/workspace.hpp"

#include "filcat/closedcat.hpp"
#include "filcat/limits.hpp"
#include "filcat/monoidal.hpp"
#include "support.hpp"

namespace filcat::test {
namespace {

Errc parse_error(std::string_view text) {
  try {
    Workspace::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return Errc::invariant;
}

TEST(Parse, MinimalDocument) {
  auto ws = Workspace::parse("set S = {0 1}\nfilter F on S core {0}\npfun f : S -> S = {0:1}\n");
  EXPECT_EQ(ws.size(), 3U);
  EXPECT_EQ(ws.filter("F").core().size(), 1U);
  EXPECT_TRUE(ws.has(Workspace::Kind::pfun, "f"));
}

TEST(Parse, BaseFiltersAndComments) {
  auto ws = Workspace::parse("# demo\nset S = {0 1 2}\nfilter F on S base {{0 1} {1 2}}\n\n");
  EXPECT_EQ(ws.filter("F").core(), sub(ws.set("S"), {"1"}));
}

TEST(Parse, LocalityErrorNamesTheMember) {
  const char* doc =
      "set S = {0 1}\nset T = {x y}\nfilter F on S core {0}\nfilter G on T core {x}\n"
      "pfun f : S -> T = {0:y}\narrow phi : F -> G via f\n";
  try {
    Workspace::parse(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(errc_code(e.code()), "E_LOCALITY");
    EXPECT_NE(std::string(e.what()).find("{x}"), std::string::npos) << e.what();
  }
}

TEST(Parse, ErrorCodes) {
  EXPECT_EQ(parse_error("set S = {0}\nset S = {1}\n"), Errc::duplicate_name);
  EXPECT_EQ(parse_error("set S = {0 0}\n"), Errc::duplicate_atom);
  EXPECT_EQ(parse_error("filter F on S core {0}\n"), Errc::unknown_reference);
  EXPECT_EQ(parse_error("set S = {0}\nfilter F on S core {1}\n"), Errc::unknown_atom);
  EXPECT_EQ(parse_error("set S = {0\n"), Errc::syntax);
  EXPECT_EQ(parse_error("sett S = {0}\n"), Errc::syntax);
  EXPECT_EQ(parse_error("set S = {0 1}\nfilter F on S core {0 1}\npfun f : S -> S = {0:0}\narrow a : F -> F via f\n"),
            Errc::not_admissible);
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    Workspace::parse("set S = {0}\nfilter F on S cor {0}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos) << e.what();
  }
}

TEST(Render, RoundTripsStructuredAtoms) {
  auto D = set({"0", "1"});
  auto F = filt(D, {"0"});
  Workspace ws;
  ws.add_filter("F", F);
  ws.add_filter("B", box_filter(F, Filter::top(D)));
  std::vector<Filter> parts{F, Filter::top(D)};
  auto c = coproduct_fil(parts);
  ws.add_arrow("inj", c.legs[1]);
  auto hom = internal_hom(Filter::top(D), F);
  ws.add_filter("Hom", hom.filter);
  ws.add_arrow("eps", epsilon_counit(Filter::top(D), F));
  auto text = ws.render();
  auto again = Workspace::parse(text);
  EXPECT_EQ(again, ws);
  EXPECT_EQ(again.render(), text);
  EXPECT_EQ(again.filter("Hom"), hom.filter);
}

TEST(Render, HelpersAreNamed) {
  Workspace ws;
  ws.add_filter("F", Filter::top(set({"a"})));
  EXPECT_ERRC(ws.add_filter("F", Filter::top(set({"b"}))), Errc::duplicate_name);
  EXPECT_NE(ws.render().find("set _S"), std::string::npos);
  EXPECT_ERRC(ws.arrow("F"), Errc::unknown_reference);
}

TEST(Atoms, ParseEveryShape) {
  EXPECT_EQ(parse_atom("x"), lab("x"));
  EXPECT_EQ(parse_atom("(a,(b,c))"), Atom::pair(lab("a"), Atom::pair(lab("b"), lab("c"))));
  EXPECT_EQ(parse_atom("#1:x"), Atom::tag(1, lab("x")));
  auto g = parse_atom("germ({0 1},{0},{0:x})");
  EXPECT_EQ(g.kind(), Atom::Kind::germ_code);
  EXPECT_EQ(parse_atom(g.to_string()), g);
  EXPECT_ERRC(parse_atom("(a,"), Errc::syntax);
}

}  // namespace
}  // namespace filcat::test
