#ifndef LAMDIST_GENERATORS_HPP
#define LAMDIST_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lamdist/spine.hpp"
#include "lamdist/term.hpp"
#include "lamdist/typing.hpp"

namespace lamdist {

// f:o->o, g:o->o->o, y:o, z:o
TypeContext default_pool();

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t max_size = 20;
  std::size_t max_type_depth = 2;
  TypeContext free_var_pool = default_pool();
};

// Seed of case i of a run; case 0 keeps the run's seed so that a reported
// case can be replayed alone.
std::uint64_t case_seed(std::uint64_t seed, std::size_t index);

class GenFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unannotated, size <= max_size, distinct names; binders are x1, x2, ...
// in creation order and leaves come from binders in scope or the pool.
Term gen_term(const GenConfig& cfg);

Type gen_type(const GenConfig& cfg);

// Church-annotated term of type `target` under the pool. Retries up to 100
// times, then throws GenFailure.
Term gen_typed_term(const GenConfig& cfg, const Type& target);

struct EInstance {
  EContext context;
  Term body;
  Term plugged() const { return context.plug(body); }
};

// Balanced word with `pairs` matched pairs (0 picks between 1 and 4) whose
// arguments are untyped generated terms that may mention enclosing binders
// e1, e2, ...; the body may mention all of them. E[u] has distinct names.
EInstance gen_e_instance(const GenConfig& cfg, std::size_t pairs = 0);
HeadContext gen_head_context(const GenConfig& cfg);
// gen_head_context plugged with a variable in scope: long spines with both
// matched and unmatched items.
Term gen_spine_term(const GenConfig& cfg);

// Renames the binders of t to <base>1, <base>2, ... in preorder.
Term rename_binders(const Term& t, const std::string& base = "x");

// All unannotated terms of size <= max_size over the given free names, up
// to α, binders named as by rename_binders.
std::vector<Term> enumerate_terms(std::size_t max_size, const std::vector<Name>& free);

}  // namespace lamdist

#endif  // LAMDIST_GENERATORS_HPP
