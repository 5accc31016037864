#ifndef LAMDIST_SYNTAX_HPP
#define LAMDIST_SYNTAX_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lamdist/term.hpp"

namespace lamdist {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   term ::= '\' name (':' type)? '.' term | atom+
//   atom ::= name | '(' term ')'
//   name ::= [A-Za-z][A-Za-z0-9_]* ('#' [0-9]+)?
//   type ::= 'o' | type '->' type | '(' type ')'
Term parse(std::string_view text);
Type parse_type(std::string_view text);
Name parse_name(std::string_view text);

// Inverse of parse: parse(print(t)) == t structurally.
std::string print(const Term& t);

std::set<Name> free_vars(const Term& t);
std::set<Name> bound_names(const Term& t);
bool occurs_free(const Name& x, const Term& t);

// Hands out names whose index is larger than every index seen so far.
// Not thread-safe: each concurrent task owns its supply.
class NameSupply {
 public:
  NameSupply() = default;
  explicit NameSupply(std::uint64_t start) : counter_(start) {}

  // Raise the counter above every index occurring in t.
  void observe(const Term& t);
  void observe(const Name& n);

  Name fresh(const std::string& base) { return Name{base, ++counter_}; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t counter_ = 0;
};

// Bound names pairwise distinct and disjoint from the free names.
bool has_distinct_names(const Term& t);
// Renames only the binders that violate the property.
Term ensure_distinct_names(const Term& t, NameSupply& supply);

bool alpha_eq(const Term& t, const Term& s);
// Printed form with binders renamed by traversal order; equal iff alpha_eq.
std::string alpha_fingerprint(const Term& t);

// Copy of t with every bound variable renamed to a fresh name.
Term fresh_copy(const Term& t, NameSupply& supply);

// t{s/x}: every free occurrence of x replaced by its own fresh copy of s.
Term substitute(const Term& t, const Name& x, const Term& s, NameSupply& supply);

struct Binder {
  Name name;
  std::optional<Type> annotation;

  friend bool operator==(const Binder&, const Binder&) = default;
};

// One pair t/x of an environment.
struct Substitution {
  Term term;
  Binder variable;
};

// Ordered: t1/x1, ..., tk/xk applies t1/x1 first.
using Environment = std::vector<Substitution>;

std::string print(const Environment& env);
Term apply_env(const Term& t, const Environment& env, NameSupply& supply);

}  // namespace lamdist

#endif  // LAMDIST_SYNTAX_HPP
