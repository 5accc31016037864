#include "lamdist/gandy.hpp"

#include <stdexcept>

#include "lamdist/syntax.hpp"

namespace lamdist {

SemValue SemValue::nat(Nat n) {
  if (n < 0) throw std::invalid_argument("negative natural");
  return SemValue(Type::base(), std::move(n), nullptr);
}

SemValue SemValue::fun(Type at, Fn f) {
  if (!at.is_arrow()) throw std::invalid_argument("function value at base type");
  return SemValue(std::move(at), 0, std::make_shared<const Fn>(std::move(f)));
}

const Nat& SemValue::as_nat() const {
  if (!is_nat()) throw std::invalid_argument("expected a natural, found a value of type " + type_.str());
  return n_;
}

SemValue SemValue::operator()(const SemValue& v) const {
  if (is_nat()) throw std::invalid_argument("a natural is applied to an argument");
  if (!(v.type() == type_.domain()))
    throw std::invalid_argument("argument of type " + v.type().str() + " given to a value of type " + type_.str());
  return (*fn_)(v);
}

namespace {

void expect(const Type& t, const SemValue& v) {
  if (!(v.type() == t)) throw std::invalid_argument("value of type " + v.type().str() + " where " + t.str() + " was expected");
}

}  // namespace

SemValue bottom(const Type& t) {
  if (t.is_base()) return SemValue::nat(0);
  Type dom = t.domain(), cod = t.codomain();
  return SemValue::fun(t, [dom, cod](const SemValue& v) { return bump(cod, bottom(cod), collapse(dom, v)); });
}

Nat collapse(const Type& t, const SemValue& v) {
  expect(t, v);
  if (t.is_base()) return v.as_nat();
  return collapse(t.codomain(), v(bottom(t.domain())));
}

SemValue bump(const Type& t, const SemValue& v, const Nat& k) {
  expect(t, v);
  if (k == 0) return v;
  if (t.is_base()) return SemValue::nat(v.as_nat() + k);
  Type cod = t.codomain();
  return SemValue::fun(t, [v, cod, k](const SemValue& w) { return bump(cod, v(w), k); });
}

namespace {

SemValue eval(const Term& t, const Valuation& phi) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      const SemValue& v = phi.at(t.name());
      return bump(v.type(), v, 1);
    }
    case Term::Kind::Abs: {
      const Type& dom = *t.annotation();
      Term body = t.body();
      Name x = t.name();
      TypeContext ctx;
      for (const auto& [y, v] : phi) ctx.emplace(y, v.type());
      Type cod = infer(t, ctx).codomain();
      return SemValue::fun(Type::arrow(dom, cod), [phi, x, body, dom, cod](const SemValue& v) {
        Valuation ext = phi;
        ext.insert_or_assign(x, v);
        return bump(cod, eval(body, ext), collapse(dom, v) + 1);
      });
    }
    case Term::Kind::App:
      return eval(t.fun(), phi)(eval(t.arg(), phi));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SemValue interpret(const Term& t, const Valuation& phi) {
  TypeContext ctx;
  for (const Name& x : free_vars(t)) {
    auto it = phi.find(x);
    if (it == phi.end()) throw std::invalid_argument("valuation has no entry for " + x.str());
    ctx.emplace(x, it->second.type());
  }
  infer(t, ctx);
  return eval(t, phi);
}

Nat measure(const Term& t, const Valuation& phi) {
  SemValue v = interpret(t, phi);
  return collapse(v.type(), v);
}

Valuation default_valuation(const TypeContext& ctx) {
  Valuation phi;
  for (const auto& [x, ty] : ctx) phi.emplace(x, bottom(ty));
  return phi;
}

std::vector<SemValue> probe_set(const Type& t) {
  std::vector<SemValue> out{bottom(t)};
  for (int k = 1; k <= 3; ++k) out.push_back(bump(t, out.front(), k));
  return out;
}

bool precedes(const Type& t, const SemValue& v, const SemValue& w) {
  expect(t, v);
  expect(t, w);
  if (t.is_base()) return v.as_nat() < w.as_nat();
  for (const SemValue& p : probe_set(t.domain()))
    if (!precedes(t.codomain(), v(p), w(p))) return false;
  return true;
}

bool agrees(const Type& t, const SemValue& v, const SemValue& w) {
  expect(t, v);
  expect(t, w);
  if (t.is_base()) return v.as_nat() == w.as_nat();
  for (const SemValue& p : probe_set(t.domain()))
    if (!agrees(t.codomain(), v(p), w(p))) return false;
  return true;
}

bool increasing_on(const Type& arrow, const SemValue& f, const std::vector<SemValue>& points) {
  for (const SemValue& v : points)
    for (int k = 1; k <= 3; ++k)
      if (!precedes(arrow.codomain(), f(v), f(bump(arrow.domain(), v, k)))) return false;
  return true;
}

bool collapse_increasing_on(const Type& t, const std::vector<SemValue>& points) {
  for (const SemValue& v : points)
    for (int k = 1; k <= 3; ++k)
      if (!(collapse(t, v) < collapse(t, bump(t, v, k)))) return false;
  return true;
}

}  // namespace lamdist
