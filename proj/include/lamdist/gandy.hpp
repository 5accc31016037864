#ifndef LAMDIST_GANDY_HPP
#define LAMDIST_GANDY_HPP

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lamdist/term.hpp"
#include "lamdist/typing.hpp"

namespace lamdist {

using Nat = boost::multiprecision::cpp_int;

// An element of ⟨τ⟩: a natural at o, an increasing function at τ→σ.
class SemValue {
 public:
  using Fn = std::function<SemValue(const SemValue&)>;

  static SemValue nat(Nat n);
  static SemValue fun(Type at, Fn f);

  bool is_nat() const { return !fn_; }
  const Type& type() const { return type_; }
  // Throw std::invalid_argument on the wrong kind.
  const Nat& as_nat() const;
  SemValue operator()(const SemValue& v) const;

 private:
  SemValue(Type t, Nat n, std::shared_ptr<const Fn> f) : type_(std::move(t)), n_(std::move(n)), fn_(std::move(f)) {}
  Type type_;
  Nat n_;
  std::shared_ptr<const Fn> fn_;
};

using Valuation = std::map<Name, SemValue>;

// τ_*
SemValue bottom(const Type& t);
// τ*(v); throws std::invalid_argument if v does not inhabit ⟨τ⟩.
Nat collapse(const Type& t, const SemValue& v);
// v +_τ k
SemValue bump(const Type& t, const SemValue& v, const Nat& k);

// ⟦t⟧_φ with ⟦x⟧ = φ(x) +_τ 1. Throws TypeError if t does not typecheck
// under the types of φ, std::invalid_argument on a free variable without entry.
SemValue interpret(const Term& t, const Valuation& phi);
// μ_φ(t) = τ*⟦t⟧_φ
Nat measure(const Term& t, const Valuation& phi);

// φ0(x:τ) = τ_*
Valuation default_valuation(const TypeContext& ctx);

// Fixed probes for ⟨τ⟩: τ_* and τ_* +_τ k for k = 1, 2, 3.
std::vector<SemValue> probe_set(const Type& t);

// v ≺_τ w, with the universal quantifier at arrow types restricted to
// probe_set of the domain. Sound as a falsifier only.
bool precedes(const Type& t, const SemValue& v, const SemValue& w);

// Equality of v and w at every probe point.
bool agrees(const Type& t, const SemValue& v, const SemValue& w);

// f(v) ≺ f(v +_τ k) for v in `points` and k = 1, 2, 3. The pairs are
// ordered by construction; deciding v ≺ w on probes would over-approximate
// the premise.
bool increasing_on(const Type& arrow, const SemValue& f, const std::vector<SemValue>& points);
// τ*(v) < τ*(v +_τ k) likewise.
bool collapse_increasing_on(const Type& t, const std::vector<SemValue>& points);

}  // namespace lamdist

#endif  // LAMDIST_GANDY_HPP
