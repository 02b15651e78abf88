#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
  int status;
  std::string out;
};

// Runs the cube binary through the shell; stdout and stderr are merged.
Outcome cube(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + CUBE_BINARY + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

TEST(Cli, CheckPolymorphicIdentity) {
  Outcome r = cube("check --spec two '/\\a. \\x:a. x'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "/\\a. \\x:a. x : Pi a:Star. a -> a\n");
}

TEST(Cli, CheckRejectsOutsideTheCorner) {
  Outcome r = cube("check --spec arrow '/\\a. \\x:a. x'");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("not allowed in arrow"), std::string::npos) << r.out;
}

TEST(Cli, EmptyInputIsAParseError) {
  Outcome r = cube("check --spec arrow ''");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("error[PARSE]"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cube("").status, 2);
  EXPECT_EQ(cube("frobnicate").status, 2);
  EXPECT_EQ(cube("--spec nope matrix").status, 2);
  EXPECT_EQ(cube("eval --strategy lazy x").status, 2);
  EXPECT_EQ(cube("eval --fuel 0 x").status, 2);
  EXPECT_EQ(cube("ccc laws /nonexistent").status, 2);
  EXPECT_EQ(cube("--help").status, 0);
}

TEST(Cli, Eval) {
  Outcome r = cube("eval '(\\x. x) (\\x. x)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "\\x. x\n");
  r = cube("eval --fuel 10 '(\\x. x x)(\\x. x x)'");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "diverges (loop period 1) after 1 steps\n");
  r = cube("eval --strategy cbn --load stdlib 'plus 2 3'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "\\f x. f (f (f (f (f x))))\n");
}

TEST(Cli, FuelFromTheEnvironment) {
  Outcome r = cube("eval '(\\x. x x x) (\\x. x x x)'", "CUBE_FUEL=4");
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "fuel exhausted after 4 steps\n");
  r = cube("eval --fuel 2 '(\\x. x x x) (\\x. x x x)'", "CUBE_FUEL=4");
  EXPECT_EQ(r.out, "fuel exhausted after 2 steps\n");
}

TEST(Cli, Trace) {
  Outcome r = cube("eval --trace '(\\x. x) ((\\y. y) z)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 beta @root  (\\y. y) z\n2 beta @root  z\nz\n");
}

TEST(Cli, MatrixMatchesTheExpectedTable) {
  Outcome r = cube("matrix");
  EXPECT_EQ(r.status, 0);
  std::ifstream in(std::string(CUBE_TEST_DATA) + "/matrix.expected");
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(r.out, want.str());
}

TEST(Cli, CheckDefinitionFile) {
  Outcome r = cube(std::string("check ") + CUBE_TEST_DATA + "/logic.cube");
  EXPECT_EQ(r.status, 0) << r.out;
  r = cube(std::string("check ") + CUBE_TEST_DATA + "/broken.cube");
  EXPECT_EQ(r.status, 1) << r.out;
  EXPECT_NE(r.out.find("error["), std::string::npos);
}

TEST(Cli, CheckWithAssumptions) {
  Outcome r = cube("check --spec arrow --assume 'B : Star' '\\x:B. x'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "\\x:B. x : B -> B\n");
}

TEST(Cli, ReplTranscript) {
  Outcome r = cube("repl < " + std::string(CUBE_TEST_DATA) + "/session.txt");
  EXPECT_EQ(r.status, 0) << r.out;
  std::ifstream in(std::string(CUBE_TEST_DATA) + "/session.expected");
  std::stringstream want;
  want << in.rdbuf();
  EXPECT_EQ(r.out, want.str());
}

TEST(Cli, CccLaws) {
  Outcome r = cube(std::string("ccc laws --cases 50 ") + CUBE_TEST_DATA + "/presentation.ccc");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("PASS associativity (50 cases)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS round-trip"), std::string::npos);
}

}  // namespace
