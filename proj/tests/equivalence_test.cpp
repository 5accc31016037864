#include <gtest/gtest.h>

#include "lamdist/equivalence.hpp"
#include "lamdist/generators.hpp"
#include "lamdist/reduction.hpp"
#include "oracle.hpp"

using namespace lamdist;

namespace {

Term distinct(const char* src) {
  NameSupply supply;
  Term t = parse(src);
  supply.observe(t);
  return ensure_distinct_names(t, supply);
}

std::vector<Term> sample_terms(std::size_t n, std::size_t max_size) {
  std::vector<Term> out;
  for (std::uint64_t s = 1; s <= n; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = max_size;
    out.push_back(s % 2 ? gen_spine_term(cfg) : gen_term(cfg));
  }
  return out;
}

}  // namespace

TEST(CanonicalEContext, Examples) {
  Term t = distinct("(\\y. \\x. h) s t");
  EContext c = canonical_e_context(EContext::from(head_context(t)));
  EXPECT_EQ(print(c.plug(parse("h"))), "(\\y. (\\x. h) t) s");
  EXPECT_TRUE(canonical_e_context(EContext()).empty());
  Term u = distinct("(\\x. h) t");
  EXPECT_EQ(canonical_e_context(EContext::from(head_context(u))).plug(parse("h")), u);
}

TEST(HeadCanonical, Examples) {
  CanonicalForm c = head_canonical(distinct("(\\y. \\x. v) s t"));
  EXPECT_TRUE(c.head_abs.empty());
  ASSERT_EQ(c.canonical_env.size(), 2u);
  EXPECT_EQ(c.canonical_env[0].variable.name, Name("x"));
  EXPECT_EQ(c.canonical_env[1].variable.name, Name("y"));
  EXPECT_EQ(print(c.render()), "(\\y. (\\x. v) t) s");

  c = head_canonical(distinct("\\a. z w"));
  ASSERT_EQ(c.head_abs.size(), 1u);
  EXPECT_EQ(c.head_abs[0].name, Name("a"));
  EXPECT_TRUE(c.canonical_env.empty());
  EXPECT_EQ(c.head_var, Name("z"));
  ASSERT_EQ(c.head_args.size(), 1u);
  EXPECT_EQ(c.head_args[0], parse("w"));
  EXPECT_TRUE(is_head_canonical(distinct("\\a. z w")));

  c = head_canonical(parse("x"));
  EXPECT_EQ(c.head_var, Name("x"));
  EXPECT_EQ(c.n_lambda() + c.n_app() + c.n_pairs(), 0u);
}

TEST(HeadCanonical, PreservesCounts) {
  for (const Term& t : sample_terms(300, 30)) {
    CanonicalForm c = head_canonical(t);
    SpineAnalysis a = analyze_spine(t);
    EXPECT_EQ(c.n_lambda(), a.n_lambda());
    EXPECT_EQ(c.n_app(), a.n_app());
    EXPECT_EQ(c.n_pairs(), a.n_pairs());
    Term r = c.render();
    EXPECT_TRUE(is_head_canonical(r)) << print(t);
    EXPECT_EQ(head_canonical(r).render(), r);
  }
}

TEST(RewriteE, Examples) {
  ESelector sel = ESelector::leftmost();
  auto r = rewrite_e_step(distinct("(\\y. \\x. v) s t"), sel);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(print(*r), "(\\y. (\\x. v) t) s");
  EXPECT_FALSE(rewrite_e_step(distinct("(\\y. (\\x. v) t) s"), sel).has_value());
  r = rewrite_e_step(distinct("(\\x. \\a. z) s"), sel);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(print(*r), "\\a. (\\x. z) s");
  EXPECT_EQ(print(normalize_e(distinct("(\\x. \\a. z w) s"), sel)), "\\a. (\\x. z w) s");
}

TEST(RewriteE, NestedArgumentWithoutContextInstance) {
  // The argument u2 sinks past the redex (λy.z) s.
  ESelector sel = ESelector::leftmost();
  Term t = distinct("(\\y. z) s u2 u1");
  EXPECT_EQ(print(normalize_e(t, sel)), "(\\y. z u2 u1) s");
}

TEST(RewriteE, SideConditionsBlockCapture) {
  // The argument mentions the binder it would cross.
  ESelector sel = ESelector::leftmost();
  Term t = distinct("(\\a. (\\y. h) a) s");
  EXPECT_TRUE(is_head_canonical(t));
  EXPECT_FALSE(rewrite_e_step(t, sel).has_value());
}

TEST(RewriteE, StepsPreserveBetaNormalForm) {
  std::size_t checked = 0;
  for (const Term& t : sample_terms(300, 25)) {
    auto before = oracle::normal_form(oracle::from_term(t), 5000);
    if (!before) continue;
    for (const ERewrite& r : e_rewrites(t)) {
      Term u = apply_e_rewrite(t, r);
      EXPECT_TRUE(has_distinct_names(u));
      auto after = oracle::normal_form(oracle::from_term(u), 5000);
      ASSERT_TRUE(after.has_value());
      EXPECT_EQ(oracle::show(*before), oracle::show(*after)) << print(t) << " -> " << print(u);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(NormalizeE, SelectorIndependent) {
  for (const Term& t : sample_terms(500, 40)) {
    ESelector l = ESelector::leftmost(), r = ESelector::rightmost(), x = ESelector::random(7);
    Term a = normalize_e(t, l), b = normalize_e(t, r), c = normalize_e(t, x);
    Term canon = head_canonical(t).render();
    EXPECT_TRUE(alpha_eq(a, canon)) << print(t);
    EXPECT_TRUE(alpha_eq(b, canon)) << print(t);
    EXPECT_TRUE(alpha_eq(c, canon)) << print(t);
  }
}

TEST(SpineArg, Indexing) {
  Term t = distinct("(\\y. \\x. z) s t");
  EXPECT_EQ(spine_arg(t, -1), parse("t"));
  EXPECT_EQ(spine_arg(t, -2), parse("s"));
  EXPECT_THROW(spine_arg(t, -3), std::out_of_range);
  EXPECT_EQ(spine_arg(distinct("\\a. z w"), 1), parse("w"));
  EXPECT_THROW(spine_arg(parse("x"), 1), std::out_of_range);
  EXPECT_THROW(spine_arg(parse("x"), 0), std::out_of_range);
}

TEST(Equivalent, Examples) {
  Term a = distinct("(\\y. (\\x. v) t) s");
  Term b = distinct("(\\x. (\\y. v) s) t");
  EXPECT_EQ(equivalent(a, b, Relation::Sigma), Verdict::True);
  EXPECT_EQ(equivalent(a, b, Relation::DeepE), Verdict::False);
  EXPECT_EQ(equivalent(a, b, Relation::SurfaceE), Verdict::False);
  EXPECT_EQ(equivalent(a, b, Relation::Beta, 100), Verdict::True);
  for (Relation r : {Relation::Alpha, Relation::SurfaceE, Relation::DeepE, Relation::Sigma, Relation::Beta})
    EXPECT_EQ(equivalent(a, a, r, 100), Verdict::True) << relation_name(r);
}

TEST(Equivalent, DeepSeesInsideArguments) {
  Term a = distinct("f ((\\y. \\x. v) s t)");
  Term b = distinct("f ((\\y. (\\x. v) t) s)");
  EXPECT_EQ(equivalent(a, b, Relation::SurfaceE), Verdict::False);
  EXPECT_EQ(equivalent(a, b, Relation::DeepE), Verdict::True);
  EXPECT_EQ(equivalent(a, b, Relation::Sigma), Verdict::True);
}

TEST(Equivalent, SigmaRespectsDependencies) {
  // The inner argument mentions y, so the pairs do not commute.
  Term a = distinct("(\\y. (\\x. v) y) s");
  Term b = distinct("(\\x. (\\y. v) s) y");
  EXPECT_EQ(equivalent(a, b, Relation::Sigma), Verdict::False);
}

TEST(Equivalent, BetaUnknownOnExhaustion) {
  Term omega = distinct("(\\x. x x) (\\y. y y)");
  EXPECT_EQ(equivalent(omega, omega, Relation::Beta, 50), Verdict::Unknown);
  EXPECT_EQ(equivalent(omega, parse("z"), Relation::Beta, 50), Verdict::Unknown);
}

TEST(Equivalent, BetaAgreesWithOracle) {
  auto terms = sample_terms(60, 12);
  for (const Term& a : terms)
    for (const Term& b : terms) {
      auto na = oracle::normal_form(oracle::from_term(a), 2000);
      auto nb = oracle::normal_form(oracle::from_term(b), 2000);
      if (!na || !nb) continue;
      Verdict v = equivalent(a, b, Relation::Beta, 100000);
      EXPECT_EQ(v, oracle::show(*na) == oracle::show(*nb) ? Verdict::True : Verdict::False)
          << print(a) << " vs " << print(b);
    }
}

TEST(Equivalent, ChainOfContainments) {
  auto terms = sample_terms(80, 14);
  for (const Term& a : terms)
    for (const Term& b : terms) {
      bool al = equivalent(a, b, Relation::Alpha) == Verdict::True;
      bool su = equivalent(a, b, Relation::SurfaceE) == Verdict::True;
      bool de = equivalent(a, b, Relation::DeepE) == Verdict::True;
      bool si = equivalent(a, b, Relation::Sigma) == Verdict::True;
      EXPECT_TRUE(!al || su);
      EXPECT_TRUE(!su || de);
      EXPECT_TRUE(!de || si);
      EXPECT_EQ(al, oracle::alpha(a, b));
    }
}

TEST(Permute, SwapsIndependentPairs) {
  Term a = distinct("(\\y. (\\x. v) t) s");
  auto p = permute_primary_redexes(a, 0);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(equivalent(a, *p, Relation::Sigma), Verdict::True);
  EXPECT_EQ(equivalent(a, *p, Relation::DeepE), Verdict::False);
  EXPECT_FALSE(permute_primary_redexes(distinct("(\\y. (\\x. v) y) s"), 0).has_value());
}

TEST(Relations, NamesRoundTrip) {
  for (Relation r : {Relation::Alpha, Relation::SurfaceE, Relation::DeepE, Relation::Sigma, Relation::Beta})
    EXPECT_EQ(parse_relation(relation_name(r)), r);
  EXPECT_THROW(parse_relation("nope"), std::invalid_argument);
  EXPECT_EQ(verdict_name(Verdict::Unknown), "unknown");
}
