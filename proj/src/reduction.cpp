#include "lamdist/reduction.hpp"

#include <algorithm>

#include "lamdist/spine.hpp"

namespace lamdist {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::Beta: return "beta";
    case Rule::BetaDistance: return "beta-d";
    case Rule::Head: return "head";
    case Rule::Linear: return "linear";
    case Rule::Garbage: return "garbage";
    case Rule::Affine: return "affine";
    case Rule::LinearHead: return "linear-head";
  }
  return "?";
}

Rule parse_rule(std::string_view name) {
  for (Rule r : {Rule::Beta, Rule::BetaDistance, Rule::Head, Rule::Linear, Rule::Garbage, Rule::Affine,
                 Rule::LinearHead})
    if (rule_name(r) == name) return r;
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

namespace {

Path concat(const Path& a, const Path& b) {
  Path out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Relative path from an application to the spine abstraction matched with
// its argument: E[λx.t]s.
std::optional<Path> distance_abs(const Term& app) {
  if (!app.is_app()) return std::nullopt;
  std::size_t depth = 1;
  Path rel{Step::Fun};
  const Term* cur = &app.fun();
  while (true) {
    if (cur->is_abs()) {
      if (--depth == 0) return rel;
      rel.push_back(Step::Body);
      cur = &cur->body();
    } else if (cur->is_app()) {
      ++depth;
      rel.push_back(Step::Fun);
      cur = &cur->fun();
    } else {
      return std::nullopt;
    }
  }
}

void occurrences(const Term& t, const Name& x, Path& cur, std::vector<Path>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.name() == x) out.push_back(cur);
      return;
    case Term::Kind::Abs:
      if (t.name() == x) return;
      cur.push_back(Step::Body);
      occurrences(t.body(), x, cur, out);
      cur.pop_back();
      return;
    case Term::Kind::App:
      cur.push_back(Step::Fun);
      occurrences(t.fun(), x, cur, out);
      cur.back() = Step::Arg;
      occurrences(t.arg(), x, cur, out);
      cur.pop_back();
      return;
  }
}

std::vector<Path> occurrences_in_body(const Term& t, const Path& abs_path) {
  const Term& abs = subterm_at(t, abs_path);
  Path cur = abs_path;
  cur.push_back(Step::Body);
  std::vector<Path> out;
  occurrences(abs.body(), abs.name(), cur, out);
  return out;
}

void collect(const Term& node, Path& path, Rule rule, std::vector<Redex>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  switch (node.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Abs:
      path.push_back(Step::Body);
      collect(node.body(), path, rule, out, limit);
      path.pop_back();
      return;
    case Term::Kind::App:
      break;
  }
  if (rule == Rule::Beta) {
    if (node.fun().is_abs()) out.push_back({Rule::Beta, path, concat(path, {Step::Fun}), node.fun().name(), {}});
  } else if (auto rel = distance_abs(node)) {
    const Term& abs = subterm_at(node, *rel);
    Path abs_path = concat(path, *rel);
    if (rule == Rule::BetaDistance) {
      out.push_back({Rule::BetaDistance, path, abs_path, abs.name(), {}});
    } else {
      std::vector<Path> occ;
      if (rule != Rule::Garbage) {
        Path cur = abs_path;
        cur.push_back(Step::Body);
        occurrences(abs.body(), abs.name(), cur, occ);
        for (Path& o : occ) {
          if (out.size() >= limit) return;
          out.push_back({Rule::Linear, path, abs_path, abs.name(), std::move(o)});
        }
      } else {
        occ = occurrences_in_body(node, *rel);
      }
      if (occ.empty() && rule != Rule::Linear) out.push_back({Rule::Garbage, path, abs_path, abs.name(), {}});
    }
  }
  path.push_back(Step::Fun);
  collect(node.fun(), path, rule, out, limit);
  path.back() = Step::Arg;
  collect(node.arg(), path, rule, out, limit);
  path.pop_back();
}

std::optional<Redex> head_redex(const Term& t) {
  HeadContext h = head_context(t);
  std::size_t i = 0;
  while (i < h.word.size() && is_abs(h.word[i])) ++i;
  while (i < h.word.size() && is_arg(h.word[i])) ++i;
  if (i == h.word.size()) return std::nullopt;
  std::vector<Path> paths = spine_paths(h.word);
  return Redex{Rule::Head, paths[i - 1], paths[i], binder_of(h.word[i]).name, {}};
}

std::optional<Redex> linear_head_redex(const Term& t) {
  SpineAnalysis a = analyze_spine(t);
  for (const SpinePair& p : a.matching) {
    if (binder_of(a.word[p.abs]).name != a.head_var) continue;
    std::vector<Path> paths = spine_paths(a.word);
    // The head variable must not be rebound between its binder and the hole.
    for (std::size_t j = p.abs + 1; j < a.word.size(); ++j)
      if (is_abs(a.word[j]) && binder_of(a.word[j]).name == a.head_var) return std::nullopt;
    return Redex{Rule::LinearHead, paths[p.arg], paths[p.abs], a.head_var, paths.back()};
  }
  return std::nullopt;
}

std::vector<Redex> find_limited(const Term& t, Rule rule, std::size_t limit) {
  std::vector<Redex> out;
  if (rule == Rule::Head) {
    if (auto r = head_redex(t)) out.push_back(*r);
    return out;
  }
  if (rule == Rule::LinearHead) {
    if (auto r = linear_head_redex(t)) out.push_back(*r);
    return out;
  }
  Path path;
  collect(t, path, rule, out, limit);
  return out;
}

bool same_redex(const Redex& a, const Redex& b) {
  return a.position == b.position && a.abstraction == b.abstraction && a.binder == b.binder &&
         a.occurrence == b.occurrence;
}

}  // namespace

std::vector<Redex> find_redexes(const Term& t, Rule rule) {
  return find_limited(t, rule, static_cast<std::size_t>(-1));
}

std::optional<Redex> first_redex(const Term& t, Rule rule) {
  std::vector<Redex> out = find_limited(t, rule, 1);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::optional<Redex> redex_at(const Term& t, Rule rule, const Path& position, const std::optional<Path>& occurrence) {
  const Term* node;
  try {
    node = &subterm_at(t, position);
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
  if (!node->is_app()) return std::nullopt;
  switch (rule) {
    case Rule::Head: {
      auto r = head_redex(t);
      if (r && r->position == position) return r;
      return std::nullopt;
    }
    case Rule::LinearHead: {
      auto r = linear_head_redex(t);
      if (r && r->position == position && (!occurrence || r->occurrence == occurrence)) return r;
      return std::nullopt;
    }
    case Rule::Beta:
      if (!node->fun().is_abs()) return std::nullopt;
      return Redex{Rule::Beta, position, concat(position, {Step::Fun}), node->fun().name(), {}};
    case Rule::Affine:
      return redex_at(t, occurrence ? Rule::Linear : Rule::Garbage, position, occurrence);
    case Rule::BetaDistance:
    case Rule::Linear:
    case Rule::Garbage:
      break;
  }
  auto rel = distance_abs(*node);
  if (!rel) return std::nullopt;
  const Term& abs = subterm_at(*node, *rel);
  Redex r{rule, position, concat(position, *rel), abs.name(), {}};
  if (rule == Rule::BetaDistance) return r;
  if (rule == Rule::Garbage) {
    if (occurs_free(abs.name(), abs.body())) return std::nullopt;
    return r;
  }
  if (!occurrence) return std::nullopt;
  std::vector<Path> occ = occurrences_in_body(t, r.abstraction);
  if (std::find(occ.begin(), occ.end(), *occurrence) == occ.end()) return std::nullopt;
  r.occurrence = occurrence;
  return r;
}

Term apply_step(const Term& t, const Redex& r, NameSupply& supply) {
  auto current = redex_at(t, r.rule, r.position, r.occurrence);
  if (!current || !same_redex(*current, r))
    throw StaleRedex(rule_name(r.rule) + " redex at " + path_str(r.position) + " does not match " + print(t));
  supply.observe(t);
  const Term& node = subterm_at(t, r.position);
  const Term& arg = node.arg();
  switch (r.rule) {
    case Rule::Beta:
    case Rule::Head:
      return replace_at(t, r.position, substitute(node.fun().body(), r.binder, arg, supply));
    case Rule::Linear:
    case Rule::LinearHead:
      return replace_at(t, *r.occurrence, fresh_copy(arg, supply));
    case Rule::BetaDistance:
    case Rule::Garbage: {
      // E[λx.t]s: the abstraction sits |rel| items down the spine of the redex.
      std::size_t c = r.abstraction.size() - r.position.size();
      SpineWord word = head_context(node).word;
      SpineWord e(word.begin() + 1, word.begin() + static_cast<std::ptrdiff_t>(c));
      const Term& body = subterm_at(t, r.abstraction).body();
      Term filler = r.rule == Rule::Garbage ? body : substitute(body, r.binder, arg, supply);
      return replace_at(t, r.position, plug(e, filler));
    }
    case Rule::Affine:
      break;
  }
  throw StaleRedex("affine is not a step rule");
}

std::size_t default_fuel(const Term& t) { return 10 * t.size() * t.size(); }

Normalization normalize(const Term& t, Rule rule, std::size_t fuel, NameSupply& supply) {
  Normalization n{t, Trace{t, {}}, false};
  supply.observe(t);
  while (auto r = first_redex(n.term, rule)) {
    if (n.trace.steps.size() >= fuel) {
      n.exhausted = true;
      break;
    }
    n.term = apply_step(n.term, *r, supply);
    n.trace.steps.push_back({*r, n.term});
  }
  return n;
}

Trace simulate_beta_by_affine(const Term& t, const Redex& r, NameSupply& supply) {
  if (r.rule != Rule::Beta && r.rule != Rule::BetaDistance && r.rule != Rule::Head)
    throw std::invalid_argument("simulation needs a beta or beta-d redex");
  auto redex = redex_at(t, Rule::BetaDistance, r.position);
  if (!redex || redex->abstraction != r.abstraction) throw StaleRedex("beta redex does not match");
  Trace tr{t, {}};
  Term cur = t;
  while (true) {
    std::vector<Path> occ = occurrences_in_body(cur, redex->abstraction);
    if (occ.empty()) break;
    Redex lin{Rule::Linear, redex->position, redex->abstraction, redex->binder, occ.front()};
    cur = apply_step(cur, lin, supply);
    tr.steps.push_back({lin, cur});
  }
  Redex g{Rule::Garbage, redex->position, redex->abstraction, redex->binder, {}};
  cur = apply_step(cur, g, supply);
  tr.steps.push_back({g, cur});
  return tr;
}

namespace {

// Where a path of E[t] lives in E[λx.t]s, the redex being at `pos` with
// the abstraction at `abs`.
Path unerase(const Path& p, const Path& pos, const Path& abs) {
  if (!is_prefix(pos, p)) return p;
  // Path from the function part of the redex down to λx.
  Path e_path(abs.begin() + static_cast<std::ptrdiff_t>(pos.size()) + 1, abs.end());
  Path rest(p.begin() + static_cast<std::ptrdiff_t>(pos.size()), p.end());
  Path out = pos;
  out.push_back(Step::Fun);
  if (is_prefix(e_path, rest)) {
    out.insert(out.end(), e_path.begin(), e_path.end());
    out.push_back(Step::Body);
    out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(e_path.size()), rest.end());
  } else {
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

Term step_by_position(const Term& t, const Redex& r, NameSupply& supply, Redex& rebuilt) {
  auto cur = redex_at(t, r.rule, r.position, r.occurrence);
  if (!cur) throw PostponementError(rule_name(r.rule) + " step at " + path_str(r.position) + " cannot be re-addressed", t);
  rebuilt = *cur;
  return apply_step(t, *cur, supply);
}

}  // namespace

Trace postpone_garbage(const Trace& tr, NameSupply& supply) {
  for (const TraceStep& s : tr.steps)
    if (s.redex.rule != Rule::Linear && s.redex.rule != Rule::Garbage)
      throw std::invalid_argument("postponement needs a linear/garbage trace");
  supply.observe(tr.start);
  std::vector<Redex> steps;
  for (const TraceStep& s : tr.steps) steps.push_back(s.redex);

  std::size_t budget = 64 + 16 * steps.size() * steps.size();
  while (true) {
    std::size_t i = 0;
    while (i + 1 < steps.size() && !(steps[i].rule == Rule::Garbage && steps[i + 1].rule == Rule::Linear)) ++i;
    if (i + 1 >= steps.size()) break;
    if (budget-- == 0) throw PostponementError("postponement does not terminate", tr.start);

    // Replay up to the garbage step.
    Term before = tr.start;
    for (std::size_t j = 0; j < i; ++j) {
      Redex rebuilt;
      before = step_by_position(before, steps[j], supply, rebuilt);
      steps[j] = rebuilt;
    }
    auto g = redex_at(before, Rule::Garbage, steps[i].position);
    if (!g) throw PostponementError("garbage step cannot be re-addressed", before);
    const Redex& lin = steps[i + 1];
    Redex moved{Rule::Linear, unerase(lin.position, g->position, g->abstraction),
                unerase(lin.abstraction, g->position, g->abstraction), lin.binder,
                unerase(*lin.occurrence, g->position, g->abstraction)};
    auto lin_pre = redex_at(before, Rule::Linear, moved.position, moved.occurrence);
    if (!lin_pre) throw PostponementError("linear step cannot be moved before garbage", before);

    std::vector<Redex> replacement{*lin_pre, *g};
    Path arg_path = lin_pre->position;
    arg_path.push_back(Step::Arg);
    if (is_prefix(arg_path, g->position)) {
      // The erased redex sits in the copied argument: its copy must go too.
      Path copy = *lin_pre->occurrence;
      copy.insert(copy.end(), g->position.begin() + static_cast<std::ptrdiff_t>(arg_path.size()), g->position.end());
      Redex gc = *g;
      gc.position = copy;
      replacement.push_back(gc);
    }
    steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(i), steps.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(), replacement.end());
  }

  // Replay everything; positions of the copied garbage are re-derived here.
  Trace out{tr.start, {}};
  Term cur = tr.start;
  for (const Redex& r : steps) {
    Redex rebuilt;
    cur = step_by_position(cur, r, supply, rebuilt);
    out.steps.push_back({rebuilt, cur});
  }
  if (!alpha_eq(cur, tr.last())) throw PostponementError("postponed trace ends elsewhere", cur);
  return out;
}

PrimaryReduction reduce_primary_redexes(const Term& t, NameSupply& supply, std::optional<std::size_t> fuel) {
  std::size_t limit = fuel.value_or(default_fuel(t));
  PrimaryReduction out{t, 0, false};
  supply.observe(t);
  while (true) {
    SpineAnalysis a = analyze_spine(out.term);
    if (a.matching.empty()) break;
    if (out.steps >= limit) {
      out.exhausted = true;
      break;
    }
    std::vector<Path> paths = spine_paths(a.word);
    const SpinePair& p = a.matching.front();
    Redex r{Rule::BetaDistance, paths[p.arg], paths[p.abs], binder_of(a.word[p.abs]).name, {}};
    out.term = apply_step(out.term, r, supply);
    ++out.steps;
  }
  return out;
}

bool is_head_normal(const Term& t) { return !head_redex(t).has_value(); }

bool trace_hygienic(const Trace& tr) {
  if (!has_distinct_names(tr.start)) return false;
  for (const TraceStep& s : tr.steps)
    if (!has_distinct_names(s.result)) return false;
  return true;
}

}  // namespace lamdist
