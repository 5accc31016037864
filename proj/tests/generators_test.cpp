#include <gtest/gtest.h>

#include <set>

#include "lamdist/generators.hpp"
#include "lamdist/spine.hpp"
#include "oracle.hpp"

using namespace lamdist;

namespace {

// Binders are unique and never clash with free names.
bool binders_unique(const Term& t) {
  std::vector<Name> seen;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (u.is_abs()) {
      seen.push_back(u.name());
      walk(u.body());
    } else if (u.is_app()) {
      walk(u.fun());
      walk(u.arg());
    }
  };
  walk(t);
  std::set<Name> uniq(seen.begin(), seen.end());
  if (uniq.size() != seen.size()) return false;
  for (const Name& n : free_vars(t))
    if (uniq.count(n)) return false;
  return true;
}

// Number of α-classes of terms of size exactly n with k variables in scope,
// counted by the recurrence T(1)=k, T(n)=T_{k+1}(n-1) + Σ T(i)T(n-1-i).
std::uint64_t count_terms(std::size_t n, std::size_t k, std::map<std::pair<std::size_t, std::size_t>, std::uint64_t>& memo) {
  if (n == 0) return 0;
  if (n == 1) return k;
  auto key = std::make_pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = count_terms(n - 1, k + 1, memo);
  for (std::size_t i = 1; i + 1 < n; ++i) total += count_terms(i, k, memo) * count_terms(n - 1 - i, k, memo);
  memo[key] = total;
  return total;
}

}  // namespace

TEST(GenTerm, ContractHolds) {
  for (std::uint64_t s = 1; s <= 500; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = 1 + s % 40;
    Term t = gen_term(cfg);
    EXPECT_LE(t.size(), cfg.max_size);
    EXPECT_TRUE(has_distinct_names(t));
    EXPECT_TRUE(binders_unique(t));
    for (const Name& n : free_vars(t)) EXPECT_TRUE(cfg.free_var_pool.count(n)) << print(t);
  }
}

TEST(GenTerm, Deterministic) {
  GenConfig cfg;
  cfg.seed = 99;
  cfg.max_size = 35;
  EXPECT_EQ(gen_term(cfg), gen_term(cfg));
  EXPECT_EQ(gen_typed_term(cfg, Type::base()), gen_typed_term(cfg, Type::base()));
  EXPECT_EQ(gen_e_instance(cfg).plugged(), gen_e_instance(cfg).plugged());
  EXPECT_EQ(gen_spine_term(cfg), gen_spine_term(cfg));
}

TEST(GenTypedTerm, ContractHolds) {
  TypeContext pool = default_pool();
  Type oo = Type::arrow(Type::base(), Type::base());
  std::set<std::string> distinct;
  for (std::uint64_t s = 1; s <= 100; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = 20;
    Term t = gen_typed_term(cfg, oo);
    EXPECT_EQ(infer(t, pool), oo) << print(t);
    EXPECT_TRUE(has_distinct_names(t));
    EXPECT_LE(t.size(), cfg.max_size);
    distinct.insert(oracle::key(t));
  }
  EXPECT_GE(distinct.size(), 50u);
}

TEST(GenTypedTerm, DistinctOutputsAtBaseType) {
  std::set<std::string> distinct;
  for (std::uint64_t s = 1; s <= 100; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = 20;
    distinct.insert(oracle::key(gen_typed_term(cfg, Type::base())));
  }
  EXPECT_GE(distinct.size(), 50u);
}

TEST(GenTypedTerm, UninhabitedFails) {
  GenConfig cfg;
  cfg.free_var_pool = {};
  cfg.max_size = 1;
  EXPECT_THROW(gen_typed_term(cfg, Type::base()), GenFailure);
}

TEST(GenType, DepthBound) {
  for (std::uint64_t s = 1; s <= 200; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_type_depth = s % 4;
    EXPECT_LE(gen_type(cfg).depth(), cfg.max_type_depth);
  }
}

TEST(GenEInstance, Shape) {
  for (std::uint64_t s = 1; s <= 300; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = 30;
    EInstance inst = gen_e_instance(cfg, 1 + s % 4);
    EXPECT_EQ(inst.context.n_pairs(), 1 + s % 4);
    EXPECT_TRUE(is_balanced(inst.context.word()));
    EXPECT_TRUE(has_distinct_names(inst.plugged())) << print(inst.plugged());
  }
}

TEST(GenSpineTerm, Shape) {
  std::size_t non_canonical = 0;
  for (std::uint64_t s = 1; s <= 300; ++s) {
    GenConfig cfg;
    cfg.seed = s;
    cfg.max_size = 40;
    Term t = gen_spine_term(cfg);
    EXPECT_LE(t.size(), cfg.max_size);
    EXPECT_TRUE(has_distinct_names(t));
    SpineAnalysis a = analyze_spine(t);
    if (a.n_pairs() > 0 && (a.n_lambda() > 0 || a.n_app() > 0)) ++non_canonical;
  }
  EXPECT_GT(non_canonical, 30u);
}

TEST(RenameBinders, PreorderNames) {
  Term t = rename_binders(parse("\\a. (\\b. b) (\\c. a c)"));
  EXPECT_EQ(print(t), "\\x1. (\\x2. x2) (\\x3. x1 x3)");
  EXPECT_EQ(print(rename_binders(parse("\\a. a"), "e")), "\\e1. e1");
}

TEST(Enumerate, CountMatchesRecurrence) {
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> memo;
  for (std::size_t max = 1; max <= 8; ++max) {
    std::uint64_t expect = 0;
    for (std::size_t n = 1; n <= max; ++n) expect += count_terms(n, 1, memo);
    std::vector<Term> terms = enumerate_terms(max, {Name("y")});
    EXPECT_EQ(terms.size(), expect) << max;
    std::set<std::string> keys;
    for (const Term& t : terms) keys.insert(oracle::key(t));
    EXPECT_EQ(keys.size(), terms.size());
  }
  EXPECT_EQ(enumerate_terms(8, {Name("y")}).size(), 2411u);
}

TEST(CaseSeed, FirstCaseKeepsSeed) {
  EXPECT_EQ(case_seed(42, 0), 42u);
  EXPECT_NE(case_seed(42, 1), case_seed(42, 2));
  EXPECT_NE(case_seed(42, 1), case_seed(43, 1));
}
