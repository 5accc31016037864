#include "lamdist/properties.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lamdist/equivalence.hpp"
#include "lamdist/gandy.hpp"
#include "lamdist/reduction.hpp"
#include "lamdist/spine.hpp"
#include "lamdist/syntax.hpp"
#include "lamdist/typing.hpp"

namespace lamdist {

std::string Report::str() const {
  std::ostringstream out;
  for (const Counterexample& c : failures) out << "FAIL " << suite << ' ' << c.seed << ' ' << print(c.term) << '\n';
  out << suite << ": " << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return out.str();
}

namespace {

using Rng = std::mt19937_64;
using Failure = std::optional<std::string>;

enum class Input { Untyped, Spine, Typed, EInstance };

struct Suite {
  Input input;
  std::function<Failure(const Term&, const GenConfig&)> check;
};

const std::vector<Rule> kAllRules{Rule::Beta,    Rule::BetaDistance, Rule::Head,      Rule::Linear,
                                  Rule::Garbage, Rule::Affine,       Rule::LinearHead};

NameSupply supply_for(const Term& t) {
  NameSupply s;
  s.observe(t);
  return s;
}

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

Rng case_rng(const GenConfig& cfg, std::uint64_t salt) { return Rng(cfg.seed ^ (0x5851f42d4c957f2dULL * (salt + 1))); }

Failure replay(const Trace& tr) {
  NameSupply supply = supply_for(tr.start);
  for (const TraceStep& s : tr.steps) supply.observe(s.result);
  Term cur = tr.start;
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    Term next = apply_step(cur, tr.steps[i].redex, supply);
    if (!alpha_eq(next, tr.steps[i].result)) return "step " + std::to_string(i) + " does not replay";
    cur = tr.steps[i].result;
  }
  return std::nullopt;
}

std::optional<Term> beta_nf(const Term& t) {
  NameSupply supply = supply_for(t);
  Normalization n = normalize(t, Rule::Beta, kTypedFuel, supply);
  if (n.exhausted) return std::nullopt;
  return n.term;
}

Trace random_affine_trace(const Term& t, Rng& rng, std::size_t max_steps, NameSupply& supply) {
  Trace tr{t, {}};
  for (std::size_t i = 0; i < max_steps; ++i) {
    std::vector<Redex> rs = find_redexes(tr.last(), Rule::Affine);
    if (rs.empty()) break;
    const Redex& r = rs[pick(rng, rs.size())];
    Term next = apply_step(tr.last(), r, supply);
    tr.steps.push_back({r, next});
  }
  return tr;
}

// Binders renamed by nesting depth: α-equivalent, but sibling binders collide.
Term depth_named(const Term& t, std::map<Name, Name>& scope, std::size_t depth) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = scope.find(t.name());
      return it == scope.end() ? t : Term::var(it->second);
    }
    case Term::Kind::Abs: {
      Name x("d" + std::to_string(depth));
      std::map<Name, Name> inner = scope;
      inner[t.name()] = x;
      return Term::abs(x, t.annotation(), depth_named(t.body(), inner, depth + 1));
    }
    case Term::Kind::App:
      return Term::app(depth_named(t.fun(), scope, depth), depth_named(t.arg(), scope, depth));
  }
  return t;
}

// λy_1 ... λy_k. x u_1 ... u_h, checked on the tree.
bool hnf_shape(Term t) {
  while (t.is_abs()) t = t.body();
  while (t.is_app()) t = t.fun();
  return t.is_var();
}

std::string show(const Term& t) { return print(t); }

Failure all_rule_traces(const Term& t, const std::function<Failure(Rule, const Normalization&)>& each) {
  for (Rule r : kAllRules) {
    NameSupply supply = supply_for(t);
    Normalization n = normalize(t, r, kTypedFuel, supply);
    if (Failure f = each(r, n)) return rule_name(r) + ": " + *f;
  }
  return std::nullopt;
}

// Longest prefix of the spine word that is an E-context.
std::size_t e_prefix(const SpineWord& w) {
  std::size_t depth = 0, best = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_arg(w[i])) {
      ++depth;
    } else {
      if (depth == 0) break;
      --depth;
    }
    if (depth == 0) best = i + 1;
  }
  return best;
}

Failure check_e_context_beta(const Term& t) {
  HeadContext h = head_context(t);
  std::size_t len = e_prefix(h.word);
  SpineWord prefix(h.word.begin(), h.word.begin() + static_cast<std::ptrdiff_t>(len));
  SpineWord rest(h.word.begin() + static_cast<std::ptrdiff_t>(len), h.word.end());
  SpineAnalysis full = analyze_spine(t);
  EContext e(prefix);
  Term u = plug(rest, Term::var(full.head_var));
  if (eta(e).size() != e.n_pairs()) return "eta length differs from the pair count";

  NameSupply supply = supply_for(t);
  Term cur = t;
  for (std::size_t k = e.n_pairs(); k > 0; --k, len -= 2) {
    SpineAnalysis a = analyze_spine(cur);
    const SpinePair* inner = nullptr;
    for (const SpinePair& p : a.matching)
      if (p.abs < len && (!inner || p.abs > inner->abs)) inner = &p;
    if (!inner) return "lost a pair of the context";
    Path at = spine_paths(a.word)[inner->arg];
    std::optional<Redex> r = redex_at(cur, Rule::BetaDistance, at);
    if (!r) return "primary pair is not a distant redex at " + path_str(at);
    cur = apply_step(cur, *r, supply);
  }
  Term expected = apply_env(u, eta(e), supply);
  if (!alpha_eq(cur, expected)) return "reached " + show(cur) + ", expected " + show(expected);
  return std::nullopt;
}

Failure check_canonical_uniqueness(const Term& t, const GenConfig& cfg) {
  Term direct = head_canonical(t).render();
  ESelector left = ESelector::leftmost(), right = ESelector::rightmost(), rnd = ESelector::random(cfg.seed);
  for (ESelector* s : {&left, &right, &rnd}) {
    Term n = normalize_e(t, *s);
    if (!alpha_eq(n, direct)) return "normal form " + show(n) + " differs from canonical " + show(direct);
  }
  return std::nullopt;
}

Failure check_containment(const Term& t, const GenConfig& cfg) {
  Rng rng = case_rng(cfg, 1);
  ESelector sel = ESelector::random(cfg.seed);
  Term v = t;
  std::size_t steps = pick(rng, 8);
  for (std::size_t i = 0; i < steps; ++i) {
    std::optional<Term> next = rewrite_e_step(v, sel);
    if (!next) break;
    v = *next;
  }
  for (Relation r : {Relation::SurfaceE, Relation::DeepE, Relation::Sigma, Relation::Beta})
    if (equivalent(t, v, r, kTypedFuel) != Verdict::True) return relation_name(r) + " fails on E-variant " + show(v);

  std::size_t pairs = head_canonical(v).n_pairs();
  if (pairs < 2) return std::nullopt;
  std::optional<Term> p = permute_primary_redexes(v, pick(rng, pairs - 1));
  if (!p) return std::nullopt;
  // A permutation of independent pairs is σ- but not necessarily E-equivalent;
  // each relation must still imply the next.
  Verdict prev = Verdict::False;
  for (Relation r : {Relation::SurfaceE, Relation::DeepE, Relation::Sigma, Relation::Beta}) {
    Verdict now = equivalent(t, *p, r, kTypedFuel);
    if (prev == Verdict::True && now != Verdict::True)
      return relation_name(r) + " does not follow from the previous relation on " + show(*p);
    if ((r == Relation::Sigma || r == Relation::Beta) && now != Verdict::True)
      return relation_name(r) + " fails on permuted variant " + show(*p);
    prev = now;
  }
  return std::nullopt;
}

Failure check_affine_simulation(const Term& t) {
  for (const Redex& r : find_redexes(t, Rule::BetaDistance)) {
    NameSupply supply = supply_for(t);
    Trace tr = simulate_beta_by_affine(t, r, supply);
    if (tr.steps.empty() || tr.steps.back().redex.rule != Rule::Garbage) return "simulation does not end in garbage";
    for (std::size_t i = 0; i + 1 < tr.steps.size(); ++i)
      if (tr.steps[i].redex.rule != Rule::Linear) return "simulation has a non-linear step before the end";
    if (Failure f = replay(tr)) return "simulation: " + *f;
    if (!trace_hygienic(tr)) return "simulation trace loses distinct names";
    Term expected = apply_step(t, r, supply);
    if (!alpha_eq(tr.last(), expected))
      return "simulation of redex at " + path_str(r.position) + " ends in " + show(tr.last());
  }
  return std::nullopt;
}

Failure check_postponement(const Term& t, const GenConfig& cfg) {
  Rng rng = case_rng(cfg, 2);
  NameSupply supply = supply_for(t);
  Trace tr = random_affine_trace(t, rng, 12, supply);
  Trace p = postpone_garbage(tr, supply);
  bool in_garbage = false;
  for (const TraceStep& s : p.steps) {
    if (s.redex.rule == Rule::Garbage) in_garbage = true;
    else if (in_garbage) return "linear step after a garbage step";
  }
  if (Failure f = replay(p)) return "postponed trace: " + *f;
  if (!alpha_eq(p.last(), tr.last())) return "postponed trace ends in " + show(p.last());
  if (!trace_hygienic(tr) || !trace_hygienic(p)) return "trace loses distinct names";
  return std::nullopt;
}

Failure check_lhnf_hnf(const Term& t) {
  NameSupply supply = supply_for(t);
  Normalization lin = normalize(t, Rule::LinearHead, kTypedFuel, supply);
  if (lin.exhausted) return "linear head reduction ran out of fuel";
  PrimaryReduction pr = reduce_primary_redexes(lin.term, supply, kTypedFuel);
  if (pr.exhausted) return "primary redex reduction ran out of fuel";
  Normalization via = normalize(pr.term, Rule::Head, kTypedFuel, supply);
  Normalization direct = normalize(t, Rule::Head, kTypedFuel, supply);
  if (via.exhausted || direct.exhausted) return "head reduction ran out of fuel";
  if (!alpha_eq(via.term, direct.term)) return "got " + show(via.term) + ", head normal form is " + show(direct.term);
  return std::nullopt;
}

Failure check_measure_decrease(const Term& t, const GenConfig& cfg) {
  Valuation phi = default_valuation(cfg.free_var_pool);
  Nat start = measure(t, phi);
  return all_rule_traces(t, [&](Rule, const Normalization& n) -> Failure {
    if (n.exhausted) return "ran out of fuel";
    Nat prev = start;
    for (std::size_t i = 0; i < n.trace.steps.size(); ++i) {
      Nat m = measure(n.trace.steps[i].result, phi);
      if (!(m < prev)) return "measure " + m.str() + " after step " + std::to_string(i) + " is not below " + prev.str();
      prev = m;
    }
    return std::nullopt;
  });
}

// Paths of subterms whose free variables are all free in t.
void closed_positions(const Term& t, const Term& node, Path& cur, std::vector<Path>& out) {
  std::set<Name> fv = free_vars(node), top = free_vars(t);
  if (std::includes(top.begin(), top.end(), fv.begin(), fv.end())) out.push_back(cur);
  auto down = [&](Step s, const Term& child) {
    cur.push_back(s);
    closed_positions(t, child, cur, out);
    cur.pop_back();
  };
  if (node.is_abs()) down(Step::Body, node.body());
  if (node.is_app()) {
    down(Step::Fun, node.fun());
    down(Step::Arg, node.arg());
  }
}

Failure check_substitution_bound(const Term& t, const GenConfig& cfg) {
  Rng rng = case_rng(cfg, 3);
  std::vector<Path> spots;
  Path cur;
  closed_positions(t, t, cur, spots);
  const Path& p = spots[pick(rng, spots.size())];
  Term sub = subterm_at(t, p);
  Valuation phi = default_valuation(cfg.free_var_pool);
  Name x("hole");
  Term with_var = replace_at(t, p, Term::var(x));
  Valuation ext = phi;
  ext.insert_or_assign(x, interpret(sub, phi));
  Nat filled = measure(t, phi), open = measure(with_var, ext);
  if (!(filled < open)) return "mu(C[t]) = " + filled.str() + " is not below mu(C[x]) = " + open.str();
  return std::nullopt;
}

Failure check_bump_laws(const Term& t, const GenConfig& cfg) {
  Rng rng = case_rng(cfg, 4);
  Valuation phi = default_valuation(cfg.free_var_pool);
  SemValue v = interpret(t, phi);
  const Type& ty = v.type();
  Nat k = pick(rng, 6), h = pick(rng, 6);
  if (!agrees(ty, bump(ty, v, 0), v)) return "v + 0 differs from v";
  if (collapse(ty, bump(ty, v, k)) != collapse(ty, v) + k) return "collapse is not additive over bump";
  if (!agrees(ty, bump(ty, bump(ty, v, k), h), bump(ty, v, k + h))) return "(v + k) + h differs from v + (k + h)";
  Nat lo = k < h ? k : h, hi = k < h ? h : k;
  if (lo < hi) {
    if (!precedes(ty, bump(ty, v, lo), bump(ty, v, hi))) return "v + k does not precede v + h";
    if (!(collapse(ty, bump(ty, v, lo)) < collapse(ty, bump(ty, v, hi)))) return "collapse does not separate bumps";
  }
  return std::nullopt;
}

Failure check_increasing(const Term& t, const GenConfig& cfg) {
  Valuation phi = default_valuation(cfg.free_var_pool);
  SemValue v = interpret(t, phi);
  const Type& ty = v.type();
  std::vector<SemValue> values = probe_set(ty);
  values.push_back(v);
  if (!collapse_increasing_on(ty, values)) return "collapse is not increasing at " + ty.str();
  if (!ty.is_arrow()) return std::nullopt;
  std::vector<SemValue> args = probe_set(ty.domain());
  GenConfig closed = cfg;
  closed.free_var_pool = {};
  for (std::uint64_t i = 0; i < 3; ++i) {
    closed.seed = case_seed(cfg.seed, i + 1);
    try {
      args.push_back(interpret(gen_typed_term(closed, ty.domain()), {}));
    } catch (const GenFailure&) {
    }
  }
  if (!increasing_on(ty, v, args)) return "interpretation is not increasing on the probe set";
  return std::nullopt;
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> suites{
      {"roundtrip", {Input::Untyped, [](const Term& t, const GenConfig&) -> Failure {
                       Term back = parse(print(t));
                       if (!(back == t)) return "reparsed as " + show(back);
                       return std::nullopt;
                     }}},
      {"roundtrip-typed", {Input::Typed, [](const Term& t, const GenConfig&) -> Failure {
                             Term back = parse(print(t));
                             if (!(back == t)) return "reparsed as " + show(back);
                             return std::nullopt;
                           }}},
      {"distinct-names", {Input::Untyped, [](const Term& t, const GenConfig&) -> Failure {
                            std::map<Name, Name> scope;
                            Term clash = depth_named(t, scope, 1);
                            NameSupply supply = supply_for(clash);
                            Term r = ensure_distinct_names(clash, supply);
                            if (!alpha_eq(r, clash)) return "renaming changed the term: " + show(r);
                            if (!has_distinct_names(r)) return "names still clash in " + show(r);
                            return std::nullopt;
                          }}},
      {"substitution", {Input::Untyped, [](const Term& t, const GenConfig& cfg) -> Failure {
                          GenConfig other = cfg;
                          other.seed = case_seed(cfg.seed, 7);
                          Term s = gen_term(other);
                          std::set<Name> fv = free_vars(t);
                          Name x = fv.empty() ? Name("y") : *fv.begin();
                          NameSupply supply = supply_for(t);
                          supply.observe(s);
                          Term r = substitute(t, x, s, supply);
                          if (!has_distinct_names(r)) return "substitution result " + show(r) + " has clashing names";
                          if (!(substitute(t, Name("unused"), s, supply) == t)) return "vacuous substitution changed t";
                          return std::nullopt;
                        }}},
      {"env-composition", {Input::Untyped, [](const Term& t, const GenConfig& cfg) -> Failure {
                             GenConfig a = cfg, b = cfg;
                             a.seed = case_seed(cfg.seed, 11);
                             b.seed = case_seed(cfg.seed, 13);
                             Environment e1 = eta(gen_e_instance(a).context), e2 = eta(gen_e_instance(b).context);
                             Environment both = e1;
                             both.insert(both.end(), e2.begin(), e2.end());
                             NameSupply supply = supply_for(t);
                             for (const Environment* e : {&e1, &e2})
                               for (const Substitution& s : *e) supply.observe(s.term);
                             Term lhs = apply_env(t, both, supply);
                             Term rhs = apply_env(apply_env(t, e1, supply), e2, supply);
                             if (!alpha_eq(lhs, rhs)) return "composed " + show(lhs) + " vs sequential " + show(rhs);
                             return std::nullopt;
                           }}},
      {"decomposition", {Input::Spine, [](const Term& t, const GenConfig&) -> Failure {
                           if (!(decompose(t).reassemble() == t)) return "decomposition does not reassemble";
                           SpineAnalysis a = analyze_spine(t);
                           if (!(plug(a.word, Term::var(a.head_var)) == t)) return "spine does not replug";
                           return std::nullopt;
                         }}},
      {"unmatched-order", {Input::Spine, [](const Term& t, const GenConfig&) -> Failure {
                             SpineAnalysis a = analyze_spine(t);
                             for (std::size_t c : a.unmatched_abs)
                               for (std::size_t g : a.unmatched_args)
                                 if (c > g) return "unmatched abstraction after an unmatched argument";
                             return std::nullopt;
                           }}},
      {"e-context-beta", {Input::EInstance, [](const Term& t, const GenConfig&) { return check_e_context_beta(t); }}},
      {"canonical-uniqueness", {Input::Spine, check_canonical_uniqueness}},
      {"eta-invariance", {Input::Spine, [](const Term& t, const GenConfig&) -> Failure {
                            ESelector sel = ESelector::leftmost();
                            Environment after = head_canonical(normalize_e(t, sel)).canonical_env;
                            std::vector<PrimaryRedex> before = primary_redexes(t);
                            if (before.size() != after.size()) return "pair count changes under E-rewriting";
                            for (std::size_t i = 0; i < before.size(); ++i)
                              if (!(before[i].binder.name == after[i].variable.name) ||
                                  !alpha_eq(before[i].argument, after[i].term))
                                return "pair " + std::to_string(i) + " changes under E-rewriting";
                            return std::nullopt;
                          }}},
      {"order-preservation", {Input::Spine, [](const Term& t, const GenConfig& cfg) -> Failure {
                                ESelector sel = ESelector::random(cfg.seed);
                                Term n = normalize_e(t, sel);
                                auto key = [](const Term& u) {
                                  std::vector<std::pair<Name, std::string>> out;
                                  for (const PrimaryRedex& p : primary_redexes(u))
                                    out.emplace_back(p.binder.name, alpha_fingerprint(p.argument));
                                  return out;
                                };
                                if (key(t) != key(n)) return "primary redex order differs in " + show(n);
                                return std::nullopt;
                              }}},
      {"containment", {Input::Typed, check_containment}},
      {"e-step-beta", {Input::Typed, [](const Term& t, const GenConfig& cfg) -> Failure {
                         std::optional<Term> nf = beta_nf(t);
                         if (!nf) return "beta ran out of fuel";
                         ESelector sel = ESelector::random(cfg.seed);
                         Term cur = t;
                         while (std::optional<Term> next = rewrite_e_step(cur, sel)) {
                           cur = *next;
                           std::optional<Term> m = beta_nf(cur);
                           if (!m || !alpha_eq(*m, *nf)) return "E-step to " + show(cur) + " changes the beta normal form";
                         }
                         return std::nullopt;
                       }}},
      {"betad-beta", {Input::Typed, [](const Term& t, const GenConfig&) -> Failure {
                        NameSupply supply = supply_for(t);
                        Normalization b = normalize(t, Rule::Beta, kTypedFuel, supply);
                        Normalization d = normalize(t, Rule::BetaDistance, kTypedFuel, supply);
                        if (b.exhausted || d.exhausted) return "ran out of fuel";
                        if (!alpha_eq(b.term, d.term)) return "beta_d normal form " + show(d.term) + " differs";
                        std::vector<Term> seen{t};
                        for (const TraceStep& s : b.trace.steps) seen.push_back(s.result);
                        for (const Term& u : seen)
                          if (first_redex(u, Rule::Beta).has_value() != first_redex(u, Rule::BetaDistance).has_value())
                            return "redex emptiness differs on " + show(u);
                        return std::nullopt;
                      }}},
      {"affine-beta", {Input::Typed, [](const Term& t, const GenConfig&) -> Failure {
                         std::optional<Term> nf = beta_nf(t);
                         NameSupply supply = supply_for(t);
                         Normalization a = normalize(t, Rule::Affine, kTypedFuel, supply);
                         if (!nf || a.exhausted) return "ran out of fuel";
                         for (const TraceStep& s : a.trace.steps) {
                           std::optional<Term> m = beta_nf(s.result);
                           if (!m || !alpha_eq(*m, *nf)) return "affine step to " + show(s.result) + " changes the beta normal form";
                         }
                         return std::nullopt;
                       }}},
      {"affine-simulation", {Input::Typed, [](const Term& t, const GenConfig&) { return check_affine_simulation(t); }}},
      {"garbage-postponement", {Input::Typed, check_postponement}},
      {"lhnf-hnf", {Input::Typed, [](const Term& t, const GenConfig&) { return check_lhnf_hnf(t); }}},
      {"hnf-shape", {Input::Typed, [](const Term& t, const GenConfig&) -> Failure {
                       NameSupply supply = supply_for(t);
                       Normalization h = normalize(t, Rule::Head, kTypedFuel, supply);
                       if (h.exhausted) return "ran out of fuel";
                       if (!hnf_shape(h.term) || !is_head_normal(h.term)) return "not head normal: " + show(h.term);
                       return std::nullopt;
                     }}},
      {"size-change", {Input::Typed, [](const Term& t, const GenConfig& cfg) -> Failure {
                         Rng rng = case_rng(cfg, 5);
                         NameSupply supply = supply_for(t);
                         Trace tr = random_affine_trace(t, rng, 12, supply);
                         Term prev = t;
                         for (const TraceStep& s : tr.steps) {
                           std::size_t before = prev.size(), after = s.result.size();
                           if (s.redex.rule == Rule::Linear) {
                             std::size_t arg = subterm_at(prev, s.redex.position).arg().size();
                             if (after != before + arg - 1) return "linear step changes size by the wrong amount";
                           } else if (!(after < before)) {
                             return "garbage step does not shrink the term";
                           }
                           prev = s.result;
                         }
                         return std::nullopt;
                       }}},
      {"hygiene", {Input::Typed, [](const Term& t, const GenConfig&) -> Failure {
                     return all_rule_traces(t, [](Rule, const Normalization& n) -> Failure {
                       if (!trace_hygienic(n.trace)) return "trace loses distinct names";
                       return std::nullopt;
                     });
                   }}},
      {"typed-termination", {Input::Typed, [](const Term& t, const GenConfig&) -> Failure {
                               return all_rule_traces(t, [](Rule, const Normalization& n) -> Failure {
                                 if (n.exhausted) return "ran out of fuel";
                                 return std::nullopt;
                               });
                             }}},
      {"subject-reduction", {Input::Typed, [](const Term& t, const GenConfig& cfg) -> Failure {
                               return all_rule_traces(t, [&](Rule, const Normalization& n) -> Failure {
                                 if (!check_subject_reduction(n.trace, cfg.free_var_pool)) return "type changes along the trace";
                                 return std::nullopt;
                               });
                             }}},
      {"infer-deterministic", {Input::Typed, [](const Term& t, const GenConfig& cfg) -> Failure {
                                 NameSupply supply = supply_for(t);
                                 Type a = infer(t, cfg.free_var_pool), b = infer(t, cfg.free_var_pool);
                                 Type c = infer(fresh_copy(t, supply), cfg.free_var_pool);
                                 if (!(a == b) || !(a == c)) return "inferred types differ";
                                 return std::nullopt;
                               }}},
      {"measure-decrease", {Input::Typed, check_measure_decrease}},
      {"substitution-bound", {Input::Typed, check_substitution_bound}},
      {"bump-laws", {Input::Typed, check_bump_laws}},
      {"increasing", {Input::Typed, check_increasing}},
      {"measure-alpha", {Input::Typed, [](const Term& t, const GenConfig& cfg) -> Failure {
                           NameSupply supply = supply_for(t);
                           Valuation phi = default_valuation(cfg.free_var_pool);
                           if (measure(t, phi) != measure(fresh_copy(t, supply), phi)) return "measure changes under renaming";
                           return std::nullopt;
                         }}},
      {"gen-determinism", {Input::Untyped, [](const Term&, const GenConfig& cfg) -> Failure {
                             Term a = gen_term(cfg), b = gen_term(cfg);
                             if (!(a == b)) return "two runs on one config differ";
                             if (a.size() > cfg.max_size) return "term exceeds max_size";
                             if (!has_distinct_names(a)) return "generated names clash";
                             Type ty = gen_type(cfg);
                             std::optional<Term> x, y;
                             try {
                               x = gen_typed_term(cfg, ty);
                               y = gen_typed_term(cfg, ty);
                             } catch (const GenFailure&) {
                               return std::nullopt;
                             }
                             if (!(*x == *y)) return "typed generation is not deterministic";
                             if (!(infer(*x, cfg.free_var_pool) == ty)) return "typed term has the wrong type";
                             return std::nullopt;
                           }}},
  };
  return suites;
}

Failure guarded(const Suite& s, const Term& t, const GenConfig& cfg) {
  try {
    return s.check(t, cfg);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, s] : registry()) out.push_back(name);
  return out;
}

bool has_suite(const std::string& name) { return registry().contains(name); }

Report run_property_suite(const std::string& name, const GenConfig& cfg, std::size_t count) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  const Suite& suite = it->second;
  Report rep;
  rep.suite = name;
  for (std::size_t i = 0; i < count; ++i) {
    GenConfig c = cfg;
    c.seed = case_seed(cfg.seed, i);
    std::optional<Term> input;
    try {
      switch (suite.input) {
        case Input::Untyped: input = gen_term(c); break;
        case Input::Spine: input = i % 2 ? gen_term(c) : gen_spine_term(c); break;
        case Input::Typed: input = gen_typed_term(c, gen_type(c)); break;
        case Input::EInstance: input = gen_e_instance(c).plugged(); break;
      }
    } catch (const GenFailure&) {
      ++rep.skipped;
      continue;
    }
    Failure f = guarded(suite, *input, c);
    if (!f) {
      ++rep.passed;
      continue;
    }
    ++rep.failed;
    auto pre = [&](const Term& s) { return suite.input != Input::Typed || typeable(s, c.free_var_pool); };
    auto fails = [&](const Term& s) { return guarded(suite, s, c).has_value(); };
    Term small = shrink(*input, pre, fails);
    rep.failures.push_back({c.seed, small, *guarded(suite, small, c)});
  }
  return rep;
}

Report run_exhaustive_betad_beta(std::size_t max_size, const std::vector<Name>& free) {
  Report rep;
  rep.suite = "betad-beta";
  std::uint64_t index = 0;
  for (const Term& t : enumerate_terms(max_size, free)) {
    ++index;
    NameSupply supply = supply_for(t);
    Normalization b = normalize(t, Rule::Beta, default_fuel(t), supply);
    Normalization d = normalize(t, Rule::BetaDistance, default_fuel(t), supply);
    std::string message;
    if (b.exhausted && d.exhausted) {
      ++rep.skipped;
      continue;
    }
    if (b.exhausted != d.exhausted) message = "only one strategy ran out of fuel";
    else if (!alpha_eq(b.term, d.term)) message = "normal forms differ";
    else if (first_redex(t, Rule::Beta).has_value() != first_redex(t, Rule::BetaDistance).has_value())
      message = "redex emptiness differs";
    if (message.empty()) {
      ++rep.passed;
    } else {
      ++rep.failed;
      rep.failures.push_back({index, t, message});
    }
  }
  return rep;
}

}  // namespace lamdist
