#include <gtest/gtest.h>

#include <optional>

#include "lamdist/generators.hpp"
#include "lamdist/reduction.hpp"
#include "lamdist/typing.hpp"

using namespace lamdist;

namespace {

Type o() { return Type::base(); }
Type arr(Type a, Type b) { return Type::arrow(std::move(a), std::move(b)); }

// Reference checker: environment as an association list searched from the back.
std::optional<Type> check(const Term& t, std::vector<std::pair<Name, Type>>& env) {
  if (t.is_var()) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == t.name()) return it->second;
    return std::nullopt;
  }
  if (t.is_abs()) {
    if (!t.annotation()) return std::nullopt;
    env.emplace_back(t.name(), *t.annotation());
    auto body = check(t.body(), env);
    env.pop_back();
    if (!body) return std::nullopt;
    return arr(*t.annotation(), *body);
  }
  auto f = check(t.fun(), env);
  auto x = check(t.arg(), env);
  if (!f || !x || !f->is_arrow() || !(f->domain() == *x)) return std::nullopt;
  return f->codomain();
}

std::optional<Type> check(const Term& t, const TypeContext& ctx) {
  std::vector<std::pair<Name, Type>> env(ctx.begin(), ctx.end());
  return check(t, env);
}

}  // namespace

TEST(Infer, Examples) {
  EXPECT_EQ(infer(parse("\\x:o. x"), {}), arr(o(), o()));
  EXPECT_EQ(infer(parse("x y"), parse_context("x:o->o,y:o")), o());
  EXPECT_THROW(infer(parse("\\x:o. x x"), {}), TypeError);
}

TEST(Infer, ErrorsAreLocated) {
  try {
    infer(parse("\\x:o. f (x x)"), parse_context("f:o->o"));
    FAIL();
  } catch (const TypeError& e) {
    EXPECT_EQ(path_str(e.where()), "ba");
  }
  EXPECT_THROW(infer(parse("\\x. x"), {}), TypeError);
  EXPECT_THROW(infer(parse("q"), {}), TypeError);
  EXPECT_FALSE(typeable(parse("y y"), parse_context("y:o")));
}

TEST(Infer, AgreesWithReferenceChecker) {
  TypeContext pool = default_pool();
  std::size_t ok = 0;
  for (std::uint64_t s = 1; s <= 400; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = 25;
    Type target = gen_type(cfg);
    Term t = gen_typed_term(cfg, target);
    auto ref = check(t, pool);
    ASSERT_TRUE(ref.has_value()) << print(t);
    EXPECT_EQ(*ref, target);
    EXPECT_EQ(infer(t, pool), target) << print(t);
    ++ok;
    // Swapping a leaf's annotation usually breaks the term; both checkers must agree.
    if (t.is_abs()) {
      Term bad = Term::abs(t.name(), arr(o(), *t.annotation()), t.body());
      EXPECT_EQ(typeable(bad, pool), check(bad, pool).has_value()) << print(bad);
    }
  }
  EXPECT_EQ(ok, 400u);
}

TEST(Context, ParseAndPrint) {
  TypeContext ctx = parse_context("x:o, f:o->o");
  EXPECT_EQ(ctx.size(), 2u);
  EXPECT_EQ(ctx.at(Name("f")), arr(o(), o()));
  EXPECT_EQ(parse_context(print(ctx)), ctx);
  EXPECT_TRUE(parse_context("").empty());
  EXPECT_ANY_THROW(parse_context("x:"));
  EXPECT_ANY_THROW(parse_context("x:o,x:o->o"));
}

TEST(SubjectReduction, Examples) {
  TypeContext ctx = parse_context("y:o");
  NameSupply supply;
  Term t = parse("(\\x:o. x) y");
  supply.observe(t);
  Normalization n = normalize(t, Rule::Beta, 10, supply);
  EXPECT_TRUE(check_subject_reduction(n.trace, ctx));
  EXPECT_TRUE(check_subject_reduction(Trace{parse("y"), {}}, ctx));
}

TEST(SubjectReduction, EveryRule) {
  TypeContext pool = default_pool();
  for (std::uint64_t s = 1; s <= 100; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = 25;
    Term t = gen_typed_term(cfg, o());
    for (Rule r : {Rule::Beta, Rule::BetaDistance, Rule::Head, Rule::Linear, Rule::Garbage, Rule::Affine,
                   Rule::LinearHead}) {
      NameSupply supply;
      supply.observe(t);
      Normalization n = normalize(t, r, kTypedFuel, supply);
      EXPECT_TRUE(check_subject_reduction(n.trace, pool)) << rule_name(r) << ": " << print(t);
      for (const TraceStep& st : n.trace.steps) EXPECT_EQ(check(st.result, pool), o());
    }
  }
}
