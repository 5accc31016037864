#ifndef LAMDIST_REDUCTION_HPP
#define LAMDIST_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamdist/syntax.hpp"
#include "lamdist/term.hpp"

namespace lamdist {

// Affine is the union of Linear and Garbage; its redexes carry the
// component rule.
enum class Rule { Beta, BetaDistance, Head, Linear, Garbage, Affine, LinearHead };

std::string rule_name(Rule r);
// Accepts beta, beta-d, head, linear, garbage, affine, linear-head.
Rule parse_rule(std::string_view name);

// Every redex is a (possibly distant) pair: the application at `position`
// whose argument is matched with the abstraction at `abstraction`.
struct Redex {
  Rule rule;
  Path position;
  Path abstraction;
  Name binder;
  // Linear and LinearHead: the variable occurrence being replaced.
  std::optional<Path> occurrence;
};

struct TraceStep {
  Redex redex;
  Term result;
};

struct Trace {
  Term start;
  std::vector<TraceStep> steps;

  const Term& last() const { return steps.empty() ? start : steps.back().result; }
};

class StaleRedex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Redexes in left-to-right, outside-in order. Head and LinearHead give at most one.
std::vector<Redex> find_redexes(const Term& t, Rule rule);
std::optional<Redex> first_redex(const Term& t, Rule rule);

// Rebuilds the redex of `rule` at `position` (and `occurrence`), if it exists.
std::optional<Redex> redex_at(const Term& t, Rule rule, const Path& position,
                              const std::optional<Path>& occurrence = std::nullopt);

// Throws StaleRedex when the redex no longer matches.
Term apply_step(const Term& t, const Redex& r, NameSupply& supply);

struct Normalization {
  Term term;
  Trace trace;
  bool exhausted = false;
};

// 10 * size(t)^2.
std::size_t default_fuel(const Term& t);
// Generous bound for simply typed inputs, which always terminate.
inline constexpr std::size_t kTypedFuel = 1'000'000;

// Contracts the first redex of find_redexes until none is left or fuel runs out.
Normalization normalize(const Term& t, Rule rule, std::size_t fuel, NameSupply& supply);

// k Linear steps on the redex (then-leftmost occurrence each time), then one Garbage step.
Trace simulate_beta_by_affine(const Term& t, const Redex& r, NameSupply& supply);

class PostponementError : public std::runtime_error {
 public:
  PostponementError(const std::string& what, Term state)
      : std::runtime_error(what + ": " + print(state)), state_(std::move(state)) {}
  const Term& state() const { return state_; }

 private:
  Term state_;
};

// Reorders a Linear/Garbage trace into Linear* Garbage* with an alpha-equal
// endpoint by commuting garbage steps past later linear steps.
Trace postpone_garbage(const Trace& tr, NameSupply& supply);

struct PrimaryReduction {
  Term term;
  std::size_t steps = 0;
  bool exhausted = false;
};

// β_d on the hole-nearest primary redex until none is left.
PrimaryReduction reduce_primary_redexes(const Term& t, NameSupply& supply,
                                        std::optional<std::size_t> fuel = std::nullopt);

// λy_1 ... λy_k. x u_1 ... u_h
bool is_head_normal(const Term& t);

// True iff every term of the trace has distinct names.
bool trace_hygienic(const Trace& tr);

}  // namespace lamdist

#endif  // LAMDIST_REDUCTION_HPP
