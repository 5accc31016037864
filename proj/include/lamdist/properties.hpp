#ifndef LAMDIST_PROPERTIES_HPP
#define LAMDIST_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lamdist/generators.hpp"
#include "lamdist/term.hpp"

namespace lamdist {

struct Counterexample {
  std::uint64_t seed;
  Term term;  // after shrinking
  std::string message;
};

struct Report {
  std::string suite;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Cases whose input could not be generated (typed generation failure).
  std::size_t skipped = 0;
  std::vector<Counterexample> failures;

  bool ok() const { return failed == 0; }
  // One `FAIL <suite> <seed> <term>` line per counterexample, then a summary.
  std::string str() const;
};

std::vector<std::string> suite_names();
bool has_suite(const std::string& name);

// Case i runs on case_seed(cfg.seed, i). Throws std::invalid_argument on an
// unknown suite.
Report run_property_suite(const std::string& name, const GenConfig& cfg, std::size_t count = 100);

// β and β_d agreement on every term of enumerate_terms(max_size, free).
Report run_exhaustive_betad_beta(std::size_t max_size, const std::vector<Name>& free = {Name("y")});

// Greedy subterm shrinking: repeatedly replaces t by its smallest proper
// subterm that satisfies `pre` and still fails `fails`.
template <class Pre, class Fails>
Term shrink(Term t, Pre pre, Fails fails);

}  // namespace lamdist

#include "lamdist/detail/shrink.hpp"

#endif  // LAMDIST_PROPERTIES_HPP
