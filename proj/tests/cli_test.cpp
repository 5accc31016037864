#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lamdist/cli.hpp"
#include "lamdist/syntax.hpp"

using namespace lamdist;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, CanonExample) {
  Outcome r = run({"canon", "(\\y. \\x. v) s t"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "(\\y. (\\x. v) t) s\n");
}

TEST(Cli, EquivExitCodes) {
  Outcome t = run({"equiv", "--rel", "sigma", "(\\y. (\\x. v) t) s", "(\\x. (\\y. v) s) t"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_EQ(t.out, "true\n");
  Outcome f = run({"equiv", "--rel", "deep-e", "(\\y. (\\x. v) t) s", "(\\x. (\\y. v) s) t"});
  EXPECT_EQ(f.code, kExitNo);
  EXPECT_EQ(f.out, "false\n");
  Outcome u = run({"equiv", "--rel", "beta", "--fuel", "20", "(\\x. x x) (\\x. x x)", "z"});
  EXPECT_EQ(u.code, kExitUnknown);
  EXPECT_EQ(u.out, "unknown\n");
  EXPECT_EQ(run({"equiv", "--rel", "nope", "x", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"equiv", "x"}).code, kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"reduce"}).code, kExitUsage);
  EXPECT_EQ(run({"reduce", "--rule", "beta"}).code, kExitUsage);
  EXPECT_EQ(run({"canon", "--bogus", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  Outcome p = run({"parse", "(\\x. x"});
  EXPECT_EQ(p.code, kExitUsage);
  EXPECT_FALSE(p.err.empty());
  EXPECT_TRUE(p.out.empty());
}

TEST(Cli, HelpAndVersionOnEverySubcommand) {
  for (const char* sub : {"parse", "spine", "canon", "equiv", "reduce", "typecheck", "measure", "check"}) {
    Outcome h = run({sub, "--help"});
    EXPECT_EQ(h.code, kExitOk) << sub;
    EXPECT_FALSE(h.out.empty()) << sub;
    Outcome v = run({sub, "--version"});
    EXPECT_EQ(v.code, kExitOk) << sub;
    EXPECT_EQ(v.out, "lamdist 0.1.0\n") << sub;
  }
  EXPECT_EQ(run({"--version"}).out, "lamdist 0.1.0\n");
}

TEST(Cli, Parse) {
  EXPECT_EQ(run({"parse", "((f a) b)"}).out, "f a b\n");
  Outcome d = run({"parse", "--distinct", "(\\x. x) (\\x. x)"});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_TRUE(has_distinct_names(parse(lines(d.out).at(0))));
  EXPECT_EQ(run({"parse", "(\\x. x) (\\x. x)"}).out, "(\\x. x) (\\x. x)\n");
}

TEST(Cli, Spine) {
  Outcome r = run({"spine", "(\\y. \\x. z) s u"});
  EXPECT_EQ(r.code, kExitOk);
  std::vector<std::string> l = lines(r.out);
  std::vector<std::string> expect{"head z",    "arg u",    "arg s",       "abs y",         "abs x",
                                  "pair 0 3",  "pair 1 2", "n_lambda 0",  "n_app 0",       "n_pairs 2",
                                  "e-context yes"};
  ASSERT_GE(l.size(), expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(l[i], expect[i]);
  EXPECT_EQ(l.size(), expect.size() + 2);
  Outcome n = run({"spine", "\\a. z w"});
  EXPECT_NE(n.out.find("e-context no"), std::string::npos);
  EXPECT_EQ(n.out.find("eta"), std::string::npos);
}

TEST(Cli, ReduceTraceReparses) {
  Outcome r = run({"reduce", "--rule", "affine", "--trace", "(\\x. x x) y"});
  EXPECT_EQ(r.code, kExitOk);
  std::vector<std::string> l = lines(r.out);
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[0], "start: (\\x. x x) y");
  EXPECT_EQ(l[1].rfind("step 1 linear @ ", 0), 0u) << l[1];
  EXPECT_EQ(l[3].rfind("step 3 garbage @ ", 0), 0u) << l[3];
  EXPECT_EQ(l[4], "y y");
  for (std::size_t i = 1; i < 4; ++i) {
    std::string term = l[i].substr(l[i].find(": ") + 2);
    EXPECT_EQ(print(parse(term)), term);
  }
}

TEST(Cli, ReduceExamples) {
  EXPECT_EQ(run({"reduce", "--rule", "linear-head", "(\\y. \\x. x) u s"}).out, "(\\y. \\x. s) u s\n");
  EXPECT_EQ(run({"reduce", "--rule", "beta", "(\\x. x x) y"}).out, "y y\n");
  EXPECT_EQ(run({"reduce", "--rule", "beta", "--fuel", "20", "(\\x. x x) (\\x. x x)"}).code, kExitUnknown);
  EXPECT_EQ(run({"reduce", "--rule", "gamma", "x"}).code, kExitUsage);
}

TEST(Cli, Typecheck) {
  Outcome r = run({"typecheck", "--ctx", "x:o->o,y:o", "x y"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "o\n");
  EXPECT_EQ(run({"typecheck", "\\x:o. x"}).out, "o->o\n");
  Outcome bad = run({"typecheck", "\\x:o. x x"});
  EXPECT_EQ(bad.code, kExitNo);
  EXPECT_EQ(run({"typecheck", "--ctx", "x:", "x"}).code, kExitUsage);
}

TEST(Cli, Measure) {
  Outcome r = run({"measure", "--ctx", "y:o", "(\\x:o. x) y"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "4\n");
  Outcome t = run({"measure", "--ctx", "y:o", "--trace", "--rule", "affine", "(\\x:o. x) y"});
  EXPECT_EQ(t.code, kExitOk);
  std::vector<std::string> l = lines(t.out);
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[0], "start mu 4: (\\x:o. x) y");
  EXPECT_EQ(l[1].rfind("step 1 linear mu 3: ", 0), 0u) << l[1];
  EXPECT_EQ(l[2], "step 2 garbage mu 1: y");
  EXPECT_EQ(run({"measure", "y"}).code, kExitUsage);
}

TEST(Cli, Check) {
  Outcome r = run({"check", "--suite", "canonical-uniqueness", "--count", "20", "--seed", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("canonical-uniqueness: 20 passed, 0 failed"), std::string::npos) << r.out;
  EXPECT_EQ(run({"check", "--suite", "no-such-suite"}).code, kExitUsage);
  Outcome again = run({"check", "--suite", "canonical-uniqueness", "--count", "20", "--seed", "5"});
  EXPECT_EQ(again.out, r.out);
}

TEST(Cli, FileInput) {
  std::string path = ::testing::TempDir() + "lamdist_cli_terms.txt";
  {
    std::ofstream f(path);
    f << "(\\y. (\\x. v) t) s\n\n(\\x. (\\y. v) s) t\n";
  }
  Outcome r = run({"equiv", "--rel", "sigma", "--file", path});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "true\n");
  std::remove(path.c_str());
  EXPECT_EQ(run({"canon", "--file", "/nonexistent/terms.txt"}).code, kExitUsage);
}
