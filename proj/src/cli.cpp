#include "lamdist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lamdist/equivalence.hpp"
#include "lamdist/gandy.hpp"
#include "lamdist/properties.hpp"
#include "lamdist/reduction.hpp"
#include "lamdist/spine.hpp"
#include "lamdist/syntax.hpp"
#include "lamdist/typing.hpp"

namespace lamdist {

namespace {

constexpr const char* kVersion = "lamdist 0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::vector<std::string> terms;
  std::string file;
};

void add_inputs(CLI::App* sub, Inputs& in, const std::string& what) {
  sub->add_option("terms", in.terms, what);
  sub->add_option("--file", in.file, "read terms from a file, one per non-empty line");
}

std::vector<Term> read_terms(const Inputs& in, std::size_t expected, NameSupply& supply, bool distinct = true) {
  std::vector<std::string> texts = in.terms;
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot read " + in.file);
    std::string line;
    while (std::getline(f, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) texts.push_back(line);
  }
  if (texts.size() != expected)
    throw UsageError("expected " + std::to_string(expected) + " term(s), got " + std::to_string(texts.size()));
  std::vector<Term> out;
  for (const std::string& s : texts) {
    Term t = parse(s);
    supply.observe(t);
    out.push_back(t);
  }
  if (distinct)
    for (Term& t : out) t = ensure_distinct_names(t, supply);
  return out;
}

void print_trace_line(std::ostream& out, std::size_t i, const TraceStep& s) {
  out << "step " << i + 1 << ' ' << rule_name(s.redex.rule) << " @ " << path_str(s.redex.position) << ": "
      << print(s.result) << '\n';
}

int cmd_parse(const Inputs& in, bool distinct, std::ostream& out) {
  NameSupply supply;
  out << print(read_terms(in, 1, supply, distinct).front()) << '\n';
  return kExitOk;
}

int cmd_spine(const Inputs& in, std::ostream& out) {
  NameSupply supply;
  Term t = read_terms(in, 1, supply).front();
  SpineAnalysis a = analyze_spine(t);
  out << "head " << a.head_var.str() << '\n';
  for (const SpineItem& i : a.word) {
    if (is_abs(i)) out << "abs " << binder_of(i).name.str() << '\n';
    else out << "arg " << print(argument_of(i)) << '\n';
  }
  for (const SpinePair& p : a.matching) out << "pair " << p.arg << ' ' << p.abs << '\n';
  out << "n_lambda " << a.n_lambda() << "\nn_app " << a.n_app() << "\nn_pairs " << a.n_pairs() << '\n';
  bool e = is_e_context(a);
  out << "e-context " << (e ? "yes" : "no") << '\n';
  if (e)
    for (const Substitution& s : eta(EContext(a.word))) out << "eta " << print(Environment{s}) << '\n';
  return kExitOk;
}

int cmd_canon(const Inputs& in, std::ostream& out) {
  NameSupply supply;
  out << print(head_canonical(read_terms(in, 1, supply).front()).render()) << '\n';
  return kExitOk;
}

int cmd_equiv(const Inputs& in, const std::string& rel, std::size_t fuel, std::ostream& out) {
  Relation r = parse_relation(rel);
  NameSupply supply;
  std::vector<Term> ts = read_terms(in, 2, supply);
  Verdict v = equivalent(ts[0], ts[1], r, fuel);
  out << verdict_name(v) << '\n';
  return v == Verdict::True ? kExitOk : v == Verdict::False ? kExitNo : kExitUnknown;
}

int cmd_reduce(const Inputs& in, const std::string& rule, std::optional<std::size_t> fuel, bool trace,
               std::ostream& out, std::ostream& err) {
  Rule r = parse_rule(rule);
  NameSupply supply;
  Term t = read_terms(in, 1, supply).front();
  Normalization n = normalize(t, r, fuel.value_or(default_fuel(t)), supply);
  if (trace) {
    out << "start: " << print(t) << '\n';
    for (std::size_t i = 0; i < n.trace.steps.size(); ++i) print_trace_line(out, i, n.trace.steps[i]);
  }
  out << print(n.term) << '\n';
  if (n.exhausted) {
    err << "fuel exhausted after " << n.trace.steps.size() << " steps\n";
    return kExitUnknown;
  }
  return kExitOk;
}

int cmd_typecheck(const Inputs& in, const std::string& ctx_text, std::ostream& out, std::ostream& err) {
  TypeContext ctx = parse_context(ctx_text);
  NameSupply supply;
  for (const auto& [x, ty] : ctx) supply.observe(x);
  Term t = read_terms(in, 1, supply).front();
  try {
    out << infer(t, ctx).str() << '\n';
    return kExitOk;
  } catch (const TypeError& e) {
    out << "untypeable\n";
    err << "type error: " << e.what() << '\n';
    return kExitNo;
  }
}

int cmd_measure(const Inputs& in, const std::string& ctx_text, bool trace, const std::string& rule,
                std::optional<std::size_t> fuel, std::ostream& out, std::ostream& err) {
  TypeContext ctx = parse_context(ctx_text);
  NameSupply supply;
  for (const auto& [x, ty] : ctx) supply.observe(x);
  Term t = read_terms(in, 1, supply).front();
  Valuation phi = default_valuation(ctx);
  Nat start = measure(t, phi);
  if (!trace) {
    out << start << '\n';
    return kExitOk;
  }
  Rule r = parse_rule(rule);
  Normalization n = normalize(t, r, fuel.value_or(kTypedFuel), supply);
  out << "start mu " << start << ": " << print(t) << '\n';
  for (std::size_t i = 0; i < n.trace.steps.size(); ++i) {
    const TraceStep& s = n.trace.steps[i];
    out << "step " << i + 1 << ' ' << rule_name(s.redex.rule) << " mu " << measure(s.result, phi) << ": "
        << print(s.result) << '\n';
  }
  if (n.exhausted) {
    err << "fuel exhausted after " << n.trace.steps.size() << " steps\n";
    return kExitUnknown;
  }
  return kExitOk;
}

struct CheckOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t max_size = 20;
  std::optional<std::size_t> exhaustive;
  std::string ctx;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.max_size = o.max_size;
  if (!o.ctx.empty()) cfg.free_var_pool = parse_context(o.ctx);
  std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  if (o.suite != "all" && !has_suite(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
  bool ok = true;
  for (const std::string& name : names) {
    Report r = run_property_suite(name, cfg, o.count);
    out << r.str();
    ok = ok && r.ok();
  }
  if (o.exhaustive && (o.suite == "all" || o.suite == "betad-beta")) {
    Report r = run_exhaustive_betad_beta(*o.exhaustive);
    out << r.str();
    ok = ok && r.ok();
  }
  return ok ? kExitOk : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lambda-calculus reduction laboratory", "lamdist"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);

  auto versioned = [&](CLI::App* sub) {
    sub->set_version_flag("--version", kVersion);
    return sub;
  };

  Inputs parse_in, spine_in, canon_in, equiv_in, reduce_in, type_in, measure_in;
  bool distinct = false, reduce_trace = false, measure_trace = false;
  std::string rel = "alpha", reduce_rule, measure_rule = "beta", type_ctx, measure_ctx;
  std::size_t equiv_fuel = 0;
  std::optional<std::size_t> reduce_fuel, measure_fuel;
  CheckOptions check;

  CLI::App* p = versioned(app.add_subcommand("parse", "parse and print a term"));
  add_inputs(p, parse_in, "term");
  p->add_flag("--distinct", distinct, "rename binders to satisfy the distinct-names property");

  CLI::App* sp = versioned(app.add_subcommand("spine", "spine word, matching and counts"));
  add_inputs(sp, spine_in, "term");

  CLI::App* cn = versioned(app.add_subcommand("canon", "head canonical form"));
  add_inputs(cn, canon_in, "term");

  CLI::App* eq = versioned(app.add_subcommand("equiv", "decide an equivalence between two terms"));
  add_inputs(eq, equiv_in, "two terms");
  eq->add_option("--rel", rel, "alpha, surface-e, deep-e, sigma or beta")->capture_default_str();
  eq->add_option("--fuel", equiv_fuel, "step bound for beta (0: 10 * size^2)");

  CLI::App* rd = versioned(app.add_subcommand("reduce", "normalize with a reduction rule"));
  add_inputs(rd, reduce_in, "term");
  rd->add_option("--rule", reduce_rule, "beta, beta-d, head, linear, garbage, affine or linear-head")->required();
  rd->add_option("--fuel", reduce_fuel, "step bound (default 10 * size^2)");
  rd->add_flag("--trace", reduce_trace, "print every step");

  CLI::App* tc = versioned(app.add_subcommand("typecheck", "infer the simple type of a Church-annotated term"));
  add_inputs(tc, type_in, "term");
  tc->add_option("--ctx", type_ctx, "types of free variables, e.g. \"x:o,f:o->o\"");

  CLI::App* ms = versioned(app.add_subcommand("measure", "Gandy measure under the bottom valuation"));
  add_inputs(ms, measure_in, "term");
  ms->add_option("--ctx", measure_ctx, "types of free variables");
  ms->add_flag("--trace", measure_trace, "measure after every step of --rule");
  ms->add_option("--rule", measure_rule, "rule for --trace")->capture_default_str();
  ms->add_option("--fuel", measure_fuel, "step bound for --trace");

  CLI::App* ck = versioned(app.add_subcommand("check", "run property suites"));
  ck->add_option("--suite", check.suite, "suite name or all")->capture_default_str();
  ck->add_option("--seed", check.seed, "base seed")->capture_default_str();
  ck->add_option("--count", check.count, "cases per suite")->capture_default_str();
  ck->add_option("--max-size", check.max_size, "term size bound")->capture_default_str();
  ck->add_option("--exhaustive", check.exhaustive, "also enumerate all terms up to this size for betad-beta");
  ck->add_option("--ctx", check.ctx, "free variable pool (default f:o->o,g:o->o->o,y:o,z:o)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (CLI::App* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "run 'lamdist --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (p->parsed()) return cmd_parse(parse_in, distinct, out);
    if (sp->parsed()) return cmd_spine(spine_in, out);
    if (cn->parsed()) return cmd_canon(canon_in, out);
    if (eq->parsed()) return cmd_equiv(equiv_in, rel, equiv_fuel, out);
    if (rd->parsed()) return cmd_reduce(reduce_in, reduce_rule, reduce_fuel, reduce_trace, out, err);
    if (tc->parsed()) return cmd_typecheck(type_in, type_ctx, out, err);
    if (ms->parsed()) return cmd_measure(measure_in, measure_ctx, measure_trace, measure_rule, measure_fuel, out, err);
    if (ck->parsed()) return cmd_check(check, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lamdist
