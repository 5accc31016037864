#include "lamdist/equivalence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "lamdist/reduction.hpp"

namespace lamdist {

Term CanonicalForm::render() const {
  SpineWord word;
  for (const Binder& x : head_abs) word.push_back(SpineAbs{x});
  const EContext ec = context_of_env(canonical_env);
  word.insert(word.end(), ec.word().begin(), ec.word().end());
  for (auto it = head_args.rbegin(); it != head_args.rend(); ++it) word.push_back(SpineArg{*it});
  return plug(word, Term::var(head_var));
}

EContext canonical_e_context(const EContext& e) { return context_of_env(eta(e)); }

CanonicalForm head_canonical(const Term& t) {
  Decomposition d = decompose(t);
  CanonicalForm c;
  c.head_abs = std::move(d.head_abs);
  c.head_var = std::move(d.head_var);
  c.head_args = std::move(d.head_args);
  // E_c = Ẽ_0[Ẽ_1[...[Ẽ_{n+m}]]]: the innermost block contributes first.
  for (auto it = d.e_blocks.rbegin(); it != d.e_blocks.rend(); ++it) {
    Environment part = eta(*it);
    c.canonical_env.insert(c.canonical_env.end(), part.begin(), part.end());
  }
  return c;
}

bool is_head_canonical(const Term& t) { return head_canonical(t).render() == t; }

std::string e_rule_name(ERule r) {
  switch (r) {
    case ERule::ContextBeta: return "context-beta";
    case ERule::SinkArg: return "sink-arg";
    case ERule::LiftAbs: return "lift-abs";
  }
  return "?";
}

namespace {

bool disjoint(const std::set<Name>& a, const std::set<Name>& b) {
  for (const Name& x : a)
    if (b.contains(x)) return false;
  return true;
}

}  // namespace

std::vector<ERewrite> e_rewrites(const Term& t) {
  SpineAnalysis a = analyze_spine(t);
  const SpineWord& w = a.word;
  std::map<std::size_t, std::size_t> match_of_arg;
  for (const SpinePair& p : a.matching) match_of_arg[p.arg] = p.abs;
  std::vector<bool> unmatched_abs(w.size(), false);
  for (std::size_t c : a.unmatched_abs) unmatched_abs[c] = true;

  std::vector<ERewrite> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_arg(w[i])) {
      std::set<Name> fv = free_vars(argument_of(w[i]));
      auto m = match_of_arg.find(i);
      std::size_t depth = 0;
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (is_arg(w[j])) {
          ++depth;
        } else {
          if (depth == 0) break;
          --depth;
        }
        if (depth != 0) continue;
        // [i+1, j+1) is balanced and non-empty: hop over it.
        if (!disjoint(fv, segment_binders(w, i + 1, j + 1))) continue;
        bool onto_binder = m != match_of_arg.end() && m->second == j + 1;
        out.push_back({onto_binder ? ERule::ContextBeta : ERule::SinkArg, i, j + 1});
      }
    } else if (unmatched_abs[i]) {
      const Name& x = binder_of(w[i]).name;
      std::vector<ERewrite> lifts;
      std::size_t depth = 0;
      for (std::size_t j = i; j-- > 0;) {
        if (is_abs(w[j])) {
          ++depth;
        } else {
          if (depth == 0) break;
          --depth;
        }
        if (depth != 0) continue;
        if (segment_free_vars(w, j, i).contains(x)) continue;
        lifts.push_back({ERule::LiftAbs, i, j});
      }
      std::reverse(lifts.begin(), lifts.end());
      out.insert(out.end(), lifts.begin(), lifts.end());
    }
  }
  return out;
}

Term apply_e_rewrite(const Term& t, const ERewrite& r) {
  SpineAnalysis a = analyze_spine(t);
  SpineWord w = a.word;
  if (r.from >= w.size() || r.to > w.size()) throw std::out_of_range("E-rewrite outside the spine");
  SpineItem item = w[r.from];
  w.erase(w.begin() + static_cast<std::ptrdiff_t>(r.from));
  std::size_t at = r.rule == ERule::LiftAbs ? r.to : r.to - 1;
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(at), std::move(item));
  return plug(w, Term::var(a.head_var));
}

std::size_t ESelector::pick(std::size_t n) {
  switch (mode_) {
    case Mode::Leftmost: return 0;
    case Mode::Rightmost: return n - 1;
    case Mode::Random: return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  return 0;
}

std::optional<Term> rewrite_e_step(const Term& t, ESelector& selector) {
  std::vector<ERewrite> rs = e_rewrites(t);
  if (rs.empty()) return std::nullopt;
  return apply_e_rewrite(t, rs[selector.pick(rs.size())]);
}

Term normalize_e(const Term& t, ESelector& selector) {
  std::size_t len = head_context(t).word.size();
  std::size_t fuel = len * len + 1;
  Term cur = t;
  while (auto next = rewrite_e_step(cur, selector)) {
    if (fuel-- == 0) throw std::logic_error("E-rewriting did not terminate on " + print(t));
    cur = *next;
  }
  return cur;
}

Term spine_arg(const Term& t, int i) {
  CanonicalForm c = head_canonical(t);
  if (i > 0 && static_cast<std::size_t>(i) <= c.head_args.size()) return c.head_args[static_cast<std::size_t>(i) - 1];
  if (i < 0 && static_cast<std::size_t>(-i) <= c.canonical_env.size())
    return c.canonical_env[static_cast<std::size_t>(-i) - 1].term;
  throw std::out_of_range("ar(t, " + std::to_string(i) + ") out of range: n_@ = " +
                          std::to_string(c.head_args.size()) + ", n_p = " + std::to_string(c.canonical_env.size()));
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Alpha: return "alpha";
    case Relation::SurfaceE: return "surface-e";
    case Relation::DeepE: return "deep-e";
    case Relation::Sigma: return "sigma";
    case Relation::Beta: return "beta";
  }
  return "?";
}

Relation parse_relation(std::string_view name) {
  for (Relation r : {Relation::Alpha, Relation::SurfaceE, Relation::DeepE, Relation::Sigma, Relation::Beta})
    if (relation_name(r) == name) return r;
  throw std::invalid_argument("unknown relation '" + std::string(name) + "'");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

// Bijection between the bound names of the two sides.
struct Correspondence {
  std::map<Name, Name> left, right;

  bool bind(const Binder& a, const Binder& b) {
    if (a.annotation != b.annotation) return false;
    if (left.contains(a.name) || right.contains(b.name)) return false;
    left.emplace(a.name, b.name);
    right.emplace(b.name, a.name);
    return true;
  }

  bool same_var(const Name& x, const Name& y) const {
    auto l = left.find(x);
    if (l != left.end()) return l->second == y;
    if (right.contains(y)) return false;
    return x == y;
  }
};

bool deep_equiv(const Term& t, const Term& s, Correspondence corr, bool sigma);

bool independent(const Substitution& a, const Substitution& b) {
  return !occurs_free(a.variable.name, b.term) && !occurs_free(b.variable.name, a.term);
}

bool tail_equiv(const CanonicalForm& ct, const CanonicalForm& cs, const Correspondence& corr, bool sigma) {
  if (!corr.same_var(ct.head_var, cs.head_var)) return false;
  for (std::size_t i = 0; i < ct.head_args.size(); ++i)
    if (!deep_equiv(ct.head_args[i], cs.head_args[i], corr, sigma)) return false;
  return true;
}

// Peels the root-most pair of the right environment and looks for a pair of
// the left one that can be permuted to the root end and matches it.
bool env_perm_equiv(const CanonicalForm& ct, const CanonicalForm& cs, std::vector<std::size_t> left,
                    std::size_t right_len, const Correspondence& corr) {
  if (right_len == 0) return tail_equiv(ct, cs, corr, true);
  const Substitution& b = cs.canonical_env[right_len - 1];
  for (std::size_t k = left.size(); k-- > 0;) {
    const Substitution& a = ct.canonical_env[left[k]];
    bool movable = true;
    for (std::size_t j = k + 1; j < left.size() && movable; ++j)
      movable = independent(a, ct.canonical_env[left[j]]);
    if (!movable) continue;
    if (!deep_equiv(a.term, b.term, corr, true)) continue;
    Correspondence next = corr;
    if (!next.bind(a.variable, b.variable)) continue;
    std::vector<std::size_t> rest = left;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    if (env_perm_equiv(ct, cs, std::move(rest), right_len - 1, next)) return true;
  }
  return false;
}

bool deep_equiv(const Term& t, const Term& s, Correspondence corr, bool sigma) {
  CanonicalForm ct = head_canonical(t);
  CanonicalForm cs = head_canonical(s);
  if (ct.n_lambda() != cs.n_lambda() || ct.n_app() != cs.n_app() || ct.n_pairs() != cs.n_pairs()) return false;
  for (std::size_t i = 0; i < ct.n_lambda(); ++i)
    if (!corr.bind(ct.head_abs[i], cs.head_abs[i])) return false;
  if (sigma) {
    std::vector<std::size_t> left(ct.n_pairs());
    for (std::size_t i = 0; i < left.size(); ++i) left[i] = i;
    return env_perm_equiv(ct, cs, std::move(left), cs.n_pairs(), corr);
  }
  for (std::size_t i = 0; i < ct.n_pairs(); ++i)
    if (!corr.bind(ct.canonical_env[i].variable, cs.canonical_env[i].variable)) return false;
  for (std::size_t i = 0; i < ct.n_pairs(); ++i)
    if (!deep_equiv(ct.canonical_env[i].term, cs.canonical_env[i].term, corr, false)) return false;
  return tail_equiv(ct, cs, corr, false);
}

}  // namespace

Verdict equivalent(const Term& t, const Term& s, Relation rel, std::size_t fuel) {
  auto verdict = [](bool b) { return b ? Verdict::True : Verdict::False; };
  switch (rel) {
    case Relation::Alpha:
      return verdict(alpha_eq(t, s));
    case Relation::SurfaceE:
      return verdict(alpha_eq(head_canonical(t).render(), head_canonical(s).render()));
    case Relation::DeepE:
      return verdict(deep_equiv(t, s, {}, false));
    case Relation::Sigma:
      return verdict(deep_equiv(t, s, {}, true));
    case Relation::Beta: {
      NameSupply supply;
      supply.observe(t);
      supply.observe(s);
      Normalization nt = normalize(t, Rule::Beta, fuel ? fuel : default_fuel(t), supply);
      if (nt.exhausted) return Verdict::Unknown;
      Normalization ns = normalize(s, Rule::Beta, fuel ? fuel : default_fuel(s), supply);
      if (ns.exhausted) return Verdict::Unknown;
      return verdict(alpha_eq(nt.term, ns.term));
    }
  }
  return Verdict::Unknown;
}

std::optional<Term> permute_primary_redexes(const Term& t, std::size_t i) {
  CanonicalForm c = head_canonical(t);
  if (i + 1 >= c.canonical_env.size()) throw std::out_of_range("no adjacent pair at " + std::to_string(i));
  if (!independent(c.canonical_env[i], c.canonical_env[i + 1])) return std::nullopt;
  std::swap(c.canonical_env[i], c.canonical_env[i + 1]);
  return c.render();
}

}  // namespace lamdist
