#include "gtest/gtest.h"

#include "process.hpp"

using freegroup::testing::run;
using freegroup::testing::shell_quote;

namespace {

const std::string kCli = FREEGROUP_CLI;
const std::string kStates = std::string(FREEGROUP_TEST_DATA) + "/states.txt";

freegroup::testing::RunResult cli(const std::string& args, const std::string& input = {}) {
  return run(shell_quote(kCli) + " " + args, input);
}

}  // namespace

TEST(Cli, ReduceMatrixFromStdin) {
  auto r = cli("reduce", "1,2,3,3,1\n2,-3,2,3,-2\n");
  EXPECT_EQ(0, r.exit_code) << r.err;
  EXPECT_EQ("a^2.b^-3.c^5.a^-2\n", r.out);
}

TEST(Cli, ReduceSeveralMatrices) {
  auto r = cli("reduce --input matrix", "1,1\n2,-2\n\n\n3\n-1\n");
  EXPECT_EQ(0, r.exit_code) << r.err;
  EXPECT_EQ("0\n0\nc^-1\n", r.out);
}

TEST(Cli, ReduceCanonicalAndCompact) {
  EXPECT_EQ("a^2.b^2\n0\n", cli("reduce", "a.a.b^2\n\n0\n").out);
  EXPECT_EQ("a^2.b^3.c^4\n", cli("reduce --input compact aabbbcccc").out);
  EXPECT_EQ("1,2,3,1\n2,-3,5,-2\n", cli("--format matrix reduce a^2.b^-3.c^5.a^-2").out);
  EXPECT_EQ("[[[1,2],[2,-3]]]\n", cli("--format interchange reduce a^2.b^-3").out);
}

TEST(Cli, ReduceErrorsNameTheLine) {
  auto r = cli("reduce", "a\nb^0\n");
  EXPECT_EQ(3, r.exit_code);
  EXPECT_NE(std::string::npos, r.err.find("line 2")) << r.err;
  EXPECT_EQ(3, cli("reduce --input matrix", "1,2\n").exit_code);
  EXPECT_EQ(4, cli("reduce --input matrix", "1,2\n3\n").exit_code);
  EXPECT_EQ(4, cli("reduce --input matrix", "0\n3\n").exit_code);
}

TEST(Cli, Abelianize) {
  auto r = cli("abelianize", "a^2.b^-3.c^5.a^-2\na.b.a^-1.b^-1\n");
  EXPECT_EQ(0, r.exit_code) << r.err;
  EXPECT_EQ("b^-3.c^5\n0\n", r.out);
  EXPECT_EQ("[[[2,-3],[3,5]]]\n", cli("--format interchange abelianize a^2.b^-3.c^5.a^-2").out);
}

TEST(Cli, EvalTranscript) {
  EXPECT_EQ("a^2.b^-3.c^5.b^3.c^4\n", cli("eval 'a^2.b^-3.c^5.a^-2 + a^2.b^3.c^4'").out);
  EXPECT_EQ("y^-1.z^-1.y.z\n", cli("eval '[y,z]'").out);
  EXPECT_EQ("0\n", cli("eval 'a - a'").out);
}

TEST(Cli, LetBindsVectors) {
  auto r = cli("eval --let 'u=a^-2.b^7,c^-2.a^3.c^2' -- '-u'");
  EXPECT_EQ(0, r.exit_code) << r.err;
  EXPECT_EQ("b^-7.a^2\nc^-2.a^-3.c^2\n", r.out);
  EXPECT_EQ(3, cli("eval --let u=a^0 u").exit_code);
  EXPECT_EQ(3, cli("eval --let =a u").exit_code);
}

TEST(Cli, ErrorsHaveDistinctCodes) {
  auto parse = cli("eval 'a +'");
  EXPECT_EQ(3, parse.exit_code);
  EXPECT_NE(std::string::npos, parse.err.find("parse error")) << parse.err;
  auto unbound = cli("eval 'q1'");
  EXPECT_EQ(3, unbound.exit_code);
  auto recycle = cli("eval --let p=a,b --let q=a,b,c 'p+q'");
  EXPECT_EQ(4, recycle.exit_code);
  EXPECT_NE(std::string::npos, recycle.err.find("recycling")) << recycle.err;
  auto overflow = cli("eval 'a^9223372036854775807 + a'");
  EXPECT_EQ(4, overflow.exit_code);
  EXPECT_NE(std::string::npos, overflow.err.find("overflow")) << overflow.err;
  EXPECT_EQ(5, cli("random --count -1").exit_code);
  EXPECT_EQ(6, cli("--symbols /nonexistent/symbols eval a").exit_code);
  EXPECT_EQ(2, cli("frobnicate").exit_code);
  EXPECT_EQ(2, cli("eval").exit_code);
  EXPECT_EQ(2, cli("--format yaml eval a").exit_code);
}

TEST(Cli, StrictAlphabet) {
  EXPECT_EQ("NA\n", cli("eval 'alpha(27)'").out);
  auto strict = cli("--strict eval 'alpha(27)'");
  EXPECT_EQ(4, strict.exit_code);
  EXPECT_EQ("", strict.out);
  EXPECT_EQ("NE\n", cli("--symbols " + shell_quote(kStates) + " --strict eval 'alpha(27)'").out);
  EXPECT_EQ("AK^-1.AL.AK\n", cli("--symbols " + shell_quote(kStates) + " eval 'AL^AK'").out);
}

TEST(Cli, BadAlphabetFile) {
  auto r = run("printf 'a\\na\\n' > /tmp/fg_dup_symbols && " + shell_quote(kCli) +
               " --symbols /tmp/fg_dup_symbols eval 0");
  EXPECT_EQ(5, r.exit_code);
}

TEST(Cli, RandomIsSeededAndLineOriented) {
  auto a = cli("random --count 10 --syllables 4 --seed 3");
  auto b = cli("random --count 10 --syllables 4 --seed 3");
  EXPECT_EQ(0, a.exit_code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(10, std::count(a.out.begin(), a.out.end(), '\n'));
  EXPECT_NE(a.out, cli("random --count 10 --syllables 4 --seed 4").out);
  EXPECT_EQ(std::string::npos, a.out.find_first_of("efghijklmnopqrstuvwxyz"));
  auto empty = cli("random --count 0");
  EXPECT_EQ(0, empty.exit_code);
  EXPECT_EQ("", empty.out);
  EXPECT_EQ("[]\n", cli("--format interchange random --count 0").out);
}

TEST(Cli, RandomSpecFile) {
  auto r = run("printf 'count=2\\nsyllables=3\\nmax_symbol=2\\nseed=5\\n' > /tmp/fg_spec && " +
               shell_quote(kCli) + " random --spec /tmp/fg_spec");
  EXPECT_EQ(0, r.exit_code) << r.err;
  EXPECT_EQ(r.out, cli("random --count 2 --syllables 3 --max-symbol 2 --seed 5").out);
  auto overridden = run(shell_quote(kCli) + " random --spec /tmp/fg_spec --count 3");
  EXPECT_EQ(3, std::count(overridden.out.begin(), overridden.out.end(), '\n'));
}

TEST(Cli, CheckIdentity) {
  const std::string hall_witt = "'[[x,-y],z]^y + [[y,-z],x]^z + [[z,-x],y]^x'";
  auto hw = cli("check-identity --assert --random x --random y --random z --seed 11 " + hall_witt);
  EXPECT_EQ(0, hw.exit_code) << hw.err;
  EXPECT_EQ("true\ntrue\ntrue\ntrue\ntrue\ntrue\ntrue\n", hw.out);

  const std::string jacobi = "'[x,[y,z]] + [y,[z,x]] + [z,[x,y]]'";
  auto jac = cli("check-identity --assert --random x --random y --random z --seed 11 " + jacobi);
  EXPECT_EQ(1, jac.exit_code);
  EXPECT_NE(std::string::npos, jac.out.find("false"));
  EXPECT_EQ(0, cli("check-identity --random x --random y --random z " + jacobi).exit_code);
  EXPECT_EQ("[true,false]\n", cli("--format interchange check-identity --let p=0,a p").out);
}

TEST(Cli, HelpDocumentsPrecedence) {
  auto r = cli("--help");
  EXPECT_EQ(0, r.exit_code);
  EXPECT_NE(std::string::npos, r.out.find("conjugation"));
}
