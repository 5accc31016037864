#include "lamdist/generators.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "lamdist/syntax.hpp"

namespace lamdist {

TypeContext default_pool() {
  Type o = Type::base();
  return {{Name("f"), Type::arrow(o, o)},
          {Name("g"), Type::arrow(o, Type::arrow(o, o))},
          {Name("y"), o},
          {Name("z"), o}};
}

std::uint64_t case_seed(std::uint64_t seed, std::size_t index) {
  if (index == 0) return seed;
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform(rng, 0, 1) == 1; }

// 0 = abstraction, 1 = application, 2 = variable; weights 3/3/4.
int pick_shape(Rng& rng) {
  std::size_t r = uniform(rng, 0, 9);
  return r < 3 ? 0 : r < 6 ? 1 : 2;
}

struct Untyped {
  Rng& rng;
  std::string base;
  const TypeContext& avoid;
  std::size_t counter = 0;

  Name fresh() {
    Name x;
    do x = Name(base + std::to_string(++counter));
    while (avoid.contains(x));
    return x;
  }

  Term leaf(const std::vector<Name>& scope) { return Term::var(scope[uniform(rng, 0, scope.size() - 1)]); }

  // Exactly `budget` nodes whenever some variable is in scope.
  Term gen(std::size_t budget, std::vector<Name>& scope) {
    if (budget <= 1) {
      if (!scope.empty()) return leaf(scope);
      // Nothing to refer to at size 1: the smallest closed term is \x.x.
      Name x = fresh();
      return Term::abs(x, Term::var(x));
    }
    int shape = pick_shape(rng);
    if (shape != 0 && budget < 3) shape = 0;
    if (shape == 2 && scope.empty()) shape = 1;
    switch (shape) {
      case 0:
        return gen_abs(budget, scope);
      case 1: {
        std::size_t a = uniform(rng, 1, budget - 2);
        // Half of the applications are redexes, so that spines carry pairs.
        Term f = a >= 2 && coin(rng) ? gen_abs(a, scope) : gen(a, scope);
        Term s = gen(budget - 1 - a, scope);
        return Term::app(f, s);
      }
      default: {
        // x t_1 ... t_k: one node for x, k applications, the rest for arguments.
        std::size_t k = uniform(rng, 1, (budget - 1) / 2);
        std::vector<std::size_t> sizes = split(budget - 1 - k, k);
        Term t = leaf(scope);
        for (std::size_t n : sizes) t = Term::app(t, gen(n, scope));
        return t;
      }
    }
  }

  Term gen_abs(std::size_t budget, std::vector<Name>& scope) {
    Name x = fresh();
    scope.push_back(x);
    Term body = gen(budget - 1, scope);
    scope.pop_back();
    return Term::abs(x, body);
  }

  // `total` into k positive parts, pre: total >= k >= 1.
  std::vector<std::size_t> split(std::size_t total, std::size_t k) {
    std::vector<std::size_t> out(k, 1);
    for (std::size_t r = total - k; r > 0; --r) ++out[uniform(rng, 0, k - 1)];
    return out;
  }
};

std::vector<Name> pool_names(const TypeContext& pool) {
  std::vector<Name> out;
  for (const auto& [x, ty] : pool) out.push_back(x);
  return out;
}

Type random_type(Rng& rng, std::size_t depth) {
  if (depth == 0 || uniform(rng, 0, 2) == 0) return Type::base();
  Type dom = random_type(rng, depth - 1);
  Type cod = random_type(rng, depth - 1);
  return Type::arrow(dom, cod);
}

bool ends_in(const Type& t, const Type& target) {
  for (Type cur = t;; cur = cur.codomain()) {
    if (cur == target) return true;
    if (!cur.is_arrow()) return false;
  }
}

struct Typed {
  Rng& rng;
  std::size_t max_type_depth;
  const TypeContext& avoid;
  std::size_t counter = 0;
  std::size_t calls = 0;
  static constexpr std::size_t kCallBudget = 4000;

  using Scope = std::vector<std::pair<Name, Type>>;

  std::optional<Term> gen(const Type& target, std::size_t budget, Scope& scope) {
    if (++calls > kCallBudget || budget == 0) return std::nullopt;
    if (budget >= 2) {
      // Shapes in weighted random order, tried until one succeeds; a bare
      // variable is the fallback.
      std::vector<int> bag{0, 0, 0, 1, 1, 1, 2, 2, 2, 2};
      while (!bag.empty()) {
        int shape = bag[uniform(rng, 0, bag.size() - 1)];
        bag.erase(std::remove(bag.begin(), bag.end(), shape), bag.end());
        std::optional<Term> t;
        if (shape == 0) t = gen_abs(target, budget, scope);
        if (shape == 1) t = gen_app(target, budget, scope);
        if (shape == 2) t = gen_head(target, budget, scope);
        if (t) return t;
      }
    }
    return gen_var(target, scope);
  }

  // x t_1 ... t_k with x : τ_1 → ... → τ_k → target.
  std::optional<Term> gen_head(const Type& target, std::size_t budget, Scope& scope) {
    std::vector<std::pair<Name, Type>> heads;
    for (const auto& [x, ty] : scope)
      if (!(ty == target) && ends_in(ty, target)) heads.emplace_back(x, ty);
    if (heads.empty()) return std::nullopt;
    auto [x, ty] = heads[uniform(rng, 0, heads.size() - 1)];
    std::vector<Type> doms;
    for (Type cur = ty; !(cur == target); cur = cur.codomain()) doms.push_back(cur.domain());
    std::size_t k = doms.size();
    if (budget < 1 + 2 * k) return std::nullopt;
    std::vector<std::size_t> sizes(k, 1);
    for (std::size_t r = budget - 1 - 2 * k; r > 0; --r) ++sizes[uniform(rng, 0, k - 1)];
    Term t = Term::var(x);
    for (std::size_t i = 0; i < k; ++i) {
      std::optional<Term> a = gen(doms[i], sizes[i], scope);
      if (!a) return std::nullopt;
      t = Term::app(t, *a);
    }
    return t;
  }

  std::optional<Term> gen_var(const Type& target, const Scope& scope) {
    std::vector<Name> hits;
    for (const auto& [x, ty] : scope)
      if (ty == target) hits.push_back(x);
    if (hits.empty()) return std::nullopt;
    return Term::var(hits[uniform(rng, 0, hits.size() - 1)]);
  }

  std::optional<Term> gen_abs(const Type& target, std::size_t budget, Scope& scope) {
    if (!target.is_arrow() || budget < 2) return std::nullopt;
    Name x;
    do x = Name("x" + std::to_string(++counter));
    while (avoid.contains(x));
    scope.emplace_back(x, target.domain());
    std::optional<Term> body = gen(target.codomain(), budget - 1, scope);
    scope.pop_back();
    if (!body) return std::nullopt;
    return Term::abs(x, target.domain(), *body);
  }

  std::optional<Term> gen_app(const Type& target, std::size_t budget, Scope& scope) {
    if (budget < 3) return std::nullopt;
    Type dom = random_type(rng, max_type_depth);
    std::size_t a = uniform(rng, 1, budget - 2);
    Type fun = Type::arrow(dom, target);
    std::optional<Term> f = coin(rng) ? gen_abs(fun, a, scope) : std::nullopt;
    if (!f) f = gen(fun, a, scope);
    if (!f) return std::nullopt;
    std::optional<Term> s = gen(dom, budget - 1 - f->size(), scope);
    if (!s) return std::nullopt;
    return Term::app(*f, *s);
  }
};

// Size budget in the upper half of [1, max]: smaller terms still occur as
// subterms, and a uniform draw over the whole range wastes half the cases.
std::size_t draw_budget(Rng& rng, std::size_t max_size) {
  std::size_t hi = std::max<std::size_t>(max_size, 1);
  return uniform(rng, (hi + 1) / 2, hi);
}

}  // namespace

Term gen_term(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  Untyped g{rng, "x", cfg.free_var_pool};
  std::vector<Name> scope = pool_names(cfg.free_var_pool);
  return g.gen(draw_budget(rng, cfg.max_size), scope);
}

Type gen_type(const GenConfig& cfg) {
  Rng rng(cfg.seed ^ 0x7f4a7c15ULL);
  return random_type(rng, cfg.max_type_depth);
}

Term gen_typed_term(const GenConfig& cfg, const Type& target) {
  Rng rng(cfg.seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Typed g{rng, cfg.max_type_depth, cfg.free_var_pool};
    Typed::Scope scope(cfg.free_var_pool.begin(), cfg.free_var_pool.end());
    std::size_t budget = draw_budget(rng, cfg.max_size);
    std::optional<Term> t = g.gen(target, budget, scope);
    // Early attempts must use half the budget; later ones take anything.
    if (t && (attempt >= 50 || 2 * t->size() >= budget)) return *t;
  }
  throw GenFailure("no term of type " + target.str() + " within size " + std::to_string(cfg.max_size) +
                   " after 100 attempts");
}

EInstance gen_e_instance(const GenConfig& cfg, std::size_t pairs) {
  Rng rng(cfg.seed);
  if (pairs == 0) pairs = uniform(rng, 1, 4);
  Untyped args{rng, "x", cfg.free_var_pool};
  Untyped binders{rng, "e", cfg.free_var_pool};
  std::vector<Name> scope = pool_names(cfg.free_var_pool);
  std::size_t piece = std::max<std::size_t>(cfg.max_size / (pairs + 1), 1);
  SpineWord word;
  std::size_t opened = 0, closed = 0, depth = 0;
  while (closed < pairs) {
    if (opened < pairs && (depth == 0 || coin(rng))) {
      word.push_back(SpineArg{args.gen(uniform(rng, 1, piece), scope)});
      ++opened;
      ++depth;
    } else {
      ++closed;
      Name e = binders.fresh();
      word.push_back(SpineAbs{Binder{e, std::nullopt}});
      scope.push_back(e);
      --depth;
    }
  }
  Term body = args.gen(uniform(rng, 1, piece), scope);
  return EInstance{EContext(std::move(word)), body};
}

HeadContext gen_head_context(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  Untyped args{rng, "x", cfg.free_var_pool};
  Untyped binders{rng, "h", cfg.free_var_pool};
  std::vector<Name> scope = pool_names(cfg.free_var_pool);
  // One node per item plus the head leave max_size - 1 - items for arguments.
  std::size_t items = uniform(rng, 0, std::min<std::size_t>(10, (std::max<std::size_t>(cfg.max_size, 1) - 1) / 2));
  std::size_t piece = std::max<std::size_t>((cfg.max_size - 1 - items) / std::max<std::size_t>(items, 1), 1);
  HeadContext h;
  for (std::size_t i = 0; i < items; ++i) {
    if (coin(rng)) {
      Name b = binders.fresh();
      h.word.push_back(SpineAbs{Binder{b, std::nullopt}});
      scope.push_back(b);
    } else {
      h.word.push_back(SpineArg{args.gen(uniform(rng, 1, piece), scope)});
    }
  }
  return h;
}

Term gen_spine_term(const GenConfig& cfg) {
  HeadContext h = gen_head_context(cfg);
  std::vector<Name> scope = pool_names(cfg.free_var_pool);
  for (const SpineItem& i : h.word)
    if (is_abs(i)) scope.push_back(binder_of(i).name);
  Rng rng(cfg.seed ^ 0x2545f4914f6cdd1dULL);
  return plug(h, Term::var(scope[uniform(rng, 0, scope.size() - 1)]));
}

namespace {

Term rename_rec(const Term& t, std::map<Name, Name>& scope, const std::string& base, std::size_t& counter) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = scope.find(t.name());
      return it == scope.end() ? t : Term::var(it->second);
    }
    case Term::Kind::Abs: {
      Name fresh(base + std::to_string(++counter));
      auto saved = scope.find(t.name()) == scope.end() ? std::nullopt : std::optional<Name>(scope[t.name()]);
      scope[t.name()] = fresh;
      Term body = rename_rec(t.body(), scope, base, counter);
      if (saved) scope[t.name()] = *saved;
      else scope.erase(t.name());
      return Term::abs(fresh, t.annotation(), body);
    }
    case Term::Kind::App: {
      Term f = rename_rec(t.fun(), scope, base, counter);
      Term a = rename_rec(t.arg(), scope, base, counter);
      return Term::app(f, a);
    }
  }
  return t;
}

// Terms of size exactly n with binders named b1..bk by depth.
struct Enumerator {
  std::vector<Name> free;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Term>> memo;

  const std::vector<Term>& terms(std::size_t n, std::size_t k) {
    auto key = std::make_pair(n, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Term> out;
    if (n == 1) {
      for (std::size_t i = 1; i <= k; ++i) out.push_back(Term::var(Name("b" + std::to_string(i))));
      for (const Name& x : free) out.push_back(Term::var(x));
    } else {
      Name b("b" + std::to_string(k + 1));
      for (const Term& body : terms(n - 1, k + 1)) out.push_back(Term::abs(b, body));
      for (std::size_t a = 1; a + 1 < n; ++a) {
        const std::vector<Term>& fs = terms(a, k);
        const std::vector<Term>& ss = terms(n - 1 - a, k);
        for (const Term& f : fs)
          for (const Term& s : ss) out.push_back(Term::app(f, s));
      }
    }
    return memo[key] = std::move(out);
  }
};

}  // namespace

Term rename_binders(const Term& t, const std::string& base) {
  std::map<Name, Name> scope;
  std::size_t counter = 0;
  return rename_rec(t, scope, base, counter);
}

std::vector<Term> enumerate_terms(std::size_t max_size, const std::vector<Name>& free) {
  Enumerator e{free, {}};
  std::vector<Term> out;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const Term& t : e.terms(n, 0)) out.push_back(rename_binders(t));
  return out;
}

}  // namespace lamdist
