#ifndef LAMDIST_EQUIVALENCE_HPP
#define LAMDIST_EQUIVALENCE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lamdist/spine.hpp"
#include "lamdist/syntax.hpp"

namespace lamdist {

// λx_1 ... λx_n. E_c[z t_1 ... t_m] with E_c = 𝓔(canonical_env).
struct CanonicalForm {
  std::vector<Binder> head_abs;
  Environment canonical_env;
  Name head_var;
  std::vector<Term> head_args;  // t_1 is innermost

  Term render() const;
  std::size_t n_lambda() const { return head_abs.size(); }
  std::size_t n_app() const { return head_args.size(); }
  std::size_t n_pairs() const { return canonical_env.size(); }
};

// 𝓔(η(E)).
EContext canonical_e_context(const EContext& e);

// Built from decompose(t): each block's η, blocks taken from the hole outwards.
CanonicalForm head_canonical(const Term& t);
bool is_head_canonical(const Term& t);

// One →_E instance on the spine word of a term. Every instance moves a
// single spine item over a non-empty balanced segment:
//   ContextBeta  E1[λx.E2]t → E1[(λx.E2)t]     argument `from` lands right before its binder
//   SinkArg      H[E[s] t] → H[E[s t]]          argument `from` lands before item `to`
//   LiftAbs      H[E[λx.s]] → H[λx.E[s]]        unmatched binder `from` lands at `to`
enum class ERule { ContextBeta, SinkArg, LiftAbs };

struct ERewrite {
  ERule rule;
  std::size_t from;
  std::size_t to;
};

std::string e_rule_name(ERule r);

// Instances ordered by the position of the moving item, then by target.
std::vector<ERewrite> e_rewrites(const Term& t);
Term apply_e_rewrite(const Term& t, const ERewrite& r);

class ESelector {
 public:
  enum class Mode { Leftmost, Rightmost, Random };

  static ESelector leftmost() { return ESelector(Mode::Leftmost, 0); }
  static ESelector rightmost() { return ESelector(Mode::Rightmost, 0); }
  static ESelector random(std::uint64_t seed) { return ESelector(Mode::Random, seed); }

  Mode mode() const { return mode_; }
  // Pre: n > 0.
  std::size_t pick(std::size_t n);

 private:
  ESelector(Mode m, std::uint64_t seed) : mode_(m), rng_(seed) {}
  Mode mode_;
  std::mt19937_64 rng_;
};

std::optional<Term> rewrite_e_step(const Term& t, ESelector& selector);
// Iterates rewrite_e_step to its normal form; throws std::logic_error if the
// step bound is exceeded, which would mean →_E failed to terminate.
Term normalize_e(const Term& t, ESelector& selector);

// ar(t, i): i > 0 picks head argument t_i, i < 0 the argument of the
// (-i)-th primary redex in environment order. Throws std::out_of_range.
Term spine_arg(const Term& t, int i);

enum class Relation { Alpha, SurfaceE, DeepE, Sigma, Beta };
enum class Verdict { False, True, Unknown };

std::string relation_name(Relation r);
// alpha, surface-e, deep-e, sigma, beta
Relation parse_relation(std::string_view name);
std::string verdict_name(Verdict v);

// Beta is a semi-decision: fuel exhaustion on either side gives Unknown.
// fuel = 0 selects default_fuel of each term.
Verdict equivalent(const Term& t, const Term& s, Relation rel, std::size_t fuel = 0);

// Swaps two adjacent independent pairs of the canonical environment;
// returns nullopt when the pairs at i, i+1 are not independent.
std::optional<Term> permute_primary_redexes(const Term& t, std::size_t i);

}  // namespace lamdist

#endif  // LAMDIST_EQUIVALENCE_HPP
