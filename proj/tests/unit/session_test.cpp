#include <gtest/gtest.h>

#include <fstream>

#include "session.hpp"

namespace cube::cli {
namespace {

std::string run(Session& s, std::string_view line, int status = kOk) {
  Reply r = s.execute(line);
  EXPECT_EQ(r.status, status) << line << "\n" << r.text;
  return r.text;
}

TEST(Session, TypeOfIdentityOverAnAssumption) {
  Session s(Settings{});
  run(s, ":assume B : Star");
  EXPECT_EQ(run(s, ":type \\x:B. x"), "B -> B\n");
  EXPECT_EQ(run(s, ":check \\x:B. x"), "\\x:B. x : B -> B\n");
}

TEST(Session, LambdaStar) {
  Session s(Settings{});
  EXPECT_EQ(run(s, ":check Star"), "Star : Box\n");
  run(s, ":spec lambda-star");
  EXPECT_EQ(run(s, ":check Star"), "Star : Star\n");
}

TEST(Session, Quit) {
  Session s(Settings{});
  EXPECT_TRUE(s.execute(":quit").quit);
  EXPECT_FALSE(s.execute(":defs").quit);
}

TEST(Session, EvalIsTheDefault) {
  Session s(Settings{});
  EXPECT_EQ(run(s, "(\\x. x) (\\y. y)"), "\\y. y\n");
  EXPECT_EQ(run(s, ":eval (\\x. x) (\\y. y)"), "\\y. y\n");
  EXPECT_EQ(run(s, "(\\x. x x) (\\x. x x)", kSemantic), "diverges (loop period 1) after 1 steps\n");
}

TEST(Session, StrategyFuelAndTrace) {
  Session s(Settings{});
  run(s, ":fuel 3");
  EXPECT_EQ(run(s, "(\\x. x x x) (\\x. x x x)", kSemantic), "fuel exhausted after 3 steps\n");
  run(s, ":strategy cbv");
  EXPECT_EQ(s.settings().strategy, Strategy::CallByValue);
  run(s, ":trace on");
  EXPECT_EQ(run(s, "(\\x. x) z"), "1 beta @root  z\nz\n");
  run(s, ":strategy lazy", kUsage);
  run(s, ":fuel none", kUsage);
}

TEST(Session, BadInputNeverThrows) {
  Session s(Settings{});
  run(s, ":frobnicate", kUsage);
  run(s, "(", kUsage);
  run(s, ":check", kUsage);
  run(s, ":assume x", kUsage);
  run(s, ":assume x : y", kUsage);
  run(s, ":spec nope", kUsage);
  run(s, ":check q", kSemantic);
  run(s, ":load /nonexistent/file", kUsage);
  EXPECT_EQ(run(s, ""), "");
  EXPECT_EQ(run(s, "-- comment"), "");
}

TEST(Session, DefinitionsAreCheckedAndInlined) {
  Session s(Settings{});
  run(s, "assume A : Star");
  EXPECT_EQ(run(s, "def f : A -> A := \\x:A. x"), "f : A -> A\n");
  EXPECT_EQ(run(s, "def k := \\x y. x"), "k (untyped)\n");
  run(s, "def bad : A := \\x:A. x", kSemantic);
  EXPECT_EQ(run(s, ":type f"), "A -> A\n");
  EXPECT_EQ(run(s, "k f z"), "\\x:A. x\n");
  run(s, "def A := Star", kSemantic);
  EXPECT_EQ(run(s, ":defs"), "assume A : Star\nf : A -> A\nk (untyped)\n");
}

TEST(Session, SpecChangeReportsCasualties) {
  Session s(Settings{});
  run(s, ":assume A : Star");
  run(s, ":assume P : A -> Star");
  run(s, "def id : Pi a:Star. a -> a := /\\a. \\x:a. x");
  run(s, "def idA : A -> A := \\x:A. x");
  EXPECT_EQ(run(s, ":spec two"), "spec two\ncasualties: P\n");
  EXPECT_EQ(s.context().size(), 1u);
  EXPECT_EQ(run(s, ":spec arrow"), "spec arrow\ncasualties: id\n");
  EXPECT_EQ(run(s, ":defs"), "assume A : Star\nidA : A -> A\n");
}

TEST(Session, LoadStdlib) {
  Session s(Settings{});
  EXPECT_EQ(run(s, ":load stdlib"), "loaded stdlib: 46 of 46 entries\n");
  Settings cbn;
  cbn.strategy = Strategy::CallByName;
  Session t(cbn);
  run(t, ":load stdlib");
  EXPECT_EQ(run(t, "plus 2 3"), "\\f x. f (f (f (f (f x))))\n");
  EXPECT_EQ(run(t, ":type id"), "Pi a:Star. a -> a\n");
}

TEST(Session, LoadStdlibUnderASmallCornerKeepsWhatChecks) {
  Session s(Settings{"arrow"});
  Reply r = s.load("stdlib");
  EXPECT_EQ(r.status, kSemantic);
  EXPECT_NE(r.text.find("rejected under arrow: id,"), std::string::npos) << r.text;
  EXPECT_EQ(run(s, "times 2 3"), "\\f x. f (f (f (f (f (f x)))))\n");
}

TEST(Session, CheckFileHonoursPerEntrySpecs) {
  const std::string path = ::testing::TempDir() + "/session_defs.cube";
  {
    std::ofstream out(path);
    out << "assume B : Star\n"
        << "def idB in arrow : B -> B := \\x:B. x\n"
        << "def id in two : Pi a:Star. a -> a := /\\a. \\x:a. x\n";
  }
  Session s(Settings{"arrow"});
  Reply r = s.check_file(path);
  EXPECT_EQ(r.status, kOk) << r.text;
  EXPECT_EQ(r.text, "B : Star\nidB : B -> B\nid : Pi a:Star. a -> a\n");
  {
    std::ofstream out(path);
    out << "def id in arrow : Pi a:Star. a -> a := /\\a. \\x:a. x\n";
  }
  Session t(Settings{});
  EXPECT_EQ(t.check_file(path).status, kSemantic);
}

TEST(Session, ReplayIsDeterministic) {
  const std::vector<std::string> script = {":assume A : Star", "def f : A -> A := \\x:A. x", ":check f",
                                           ":spec two", ":load stdlib", "plus 1 1", ":spec P", ":defs"};
  auto play = [&] {
    Session s(Settings{});
    std::string out;
    for (const std::string& line : script) {
      Reply r = s.execute(line);
      out += std::to_string(r.status) + ":" + r.text;
    }
    return out;
  };
  EXPECT_EQ(play(), play());
}

}  // namespace
}  // namespace cube::cli
