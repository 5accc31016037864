#include "lamdist/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamdist {

std::string Name::str() const {
  if (index == 0) return base;
  return base + "#" + std::to_string(index);
}

Type Type::base() {
  static const Type o{std::make_shared<const Node>(Node{Kind::Base, {}})};
  return o;
}

Type Type::arrow(Type domain, Type codomain) {
  return Type{std::make_shared<const Node>(Node{Kind::Arrow, {std::move(domain), std::move(codomain)}})};
}

const Type& Type::domain() const {
  if (!is_arrow()) throw std::logic_error("domain of base type");
  return node_->children[0];
}

const Type& Type::codomain() const {
  if (!is_arrow()) throw std::logic_error("codomain of base type");
  return node_->children[1];
}

std::size_t Type::depth() const {
  if (is_base()) return 0;
  return 1 + std::max(domain().depth(), codomain().depth());
}

std::string Type::str() const {
  if (is_base()) return "o";
  std::string d = domain().str();
  if (domain().is_arrow()) d = "(" + d + ")";
  return d + "->" + codomain().str();
}

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is_base()) return true;
  return a.domain() == b.domain() && a.codomain() == b.codomain();
}

Term Term::var(Name name) {
  return Term{std::make_shared<const Node>(Node{Kind::Var, std::move(name), std::nullopt, {}, 1})};
}

Term Term::abs(Name binder, std::optional<Type> annotation, Term body) {
  std::size_t size = body.size() + 1;
  return Term{std::make_shared<const Node>(
      Node{Kind::Abs, std::move(binder), std::move(annotation), {std::move(body)}, size})};
}

Term Term::app(Term fun, Term arg) {
  std::size_t size = fun.size() + arg.size() + 1;
  return Term{std::make_shared<const Node>(Node{Kind::App, {}, std::nullopt, {std::move(fun), std::move(arg)}, size})};
}

const Term& Term::body() const {
  if (!is_abs()) throw std::logic_error("body of non-abstraction");
  return node_->children[0];
}

const Term& Term::fun() const {
  if (!is_app()) throw std::logic_error("function of non-application");
  return node_->children[0];
}

const Term& Term::arg() const {
  if (!is_app()) throw std::logic_error("argument of non-application");
  return node_->children[1];
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case Term::Kind::Var:
      return a.name() == b.name();
    case Term::Kind::Abs:
      return a.name() == b.name() && a.annotation() == b.annotation() && a.body() == b.body();
    case Term::Kind::App:
      return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

std::string path_str(const Path& p) {
  if (p.empty()) return "root";
  std::string out;
  for (Step s : p) {
    switch (s) {
      case Step::Fun: out += 'f'; break;
      case Step::Arg: out += 'a'; break;
      case Step::Body: out += 'b'; break;
    }
  }
  return out;
}

bool is_prefix(const Path& prefix, const Path& p) {
  return prefix.size() <= p.size() && std::equal(prefix.begin(), prefix.end(), p.begin());
}

namespace {

const Term& child(const Term& t, Step s) {
  switch (s) {
    case Step::Fun:
      if (t.is_app()) return t.fun();
      break;
    case Step::Arg:
      if (t.is_app()) return t.arg();
      break;
    case Step::Body:
      if (t.is_abs()) return t.body();
      break;
  }
  throw std::out_of_range("path leaves the term");
}

Term replace_from(const Term& t, const Path& p, std::size_t i, const Term& replacement) {
  if (i == p.size()) return replacement;
  const Term& c = child(t, p[i]);
  Term r = replace_from(c, p, i + 1, replacement);
  switch (p[i]) {
    case Step::Fun: return Term::app(r, t.arg());
    case Step::Arg: return Term::app(t.fun(), r);
    case Step::Body: return Term::abs(t.name(), t.annotation(), r);
  }
  return t;
}

}  // namespace

const Term& subterm_at(const Term& t, const Path& p) {
  const Term* cur = &t;
  for (Step s : p) cur = &child(*cur, s);
  return *cur;
}

Term replace_at(const Term& t, const Path& p, const Term& replacement) {
  return replace_from(t, p, 0, replacement);
}

}  // namespace lamdist
