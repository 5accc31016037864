#ifndef LAMDIST_TERM_HPP
#define LAMDIST_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lamdist {

// A variable name. Index 0 is a user-written name, anything else was drawn
// from a NameSupply and prints as `base#index`.
struct Name {
  std::string base;
  std::uint64_t index = 0;

  Name() = default;
  Name(std::string b, std::uint64_t i = 0) : base(std::move(b)), index(i) {}
  Name(const char* b) : base(b) {}

  std::string str() const;

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;
};

// Simple types over the single base type `o`.
class Type {
 public:
  enum class Kind : std::uint8_t { Base, Arrow };

  static Type base();
  static Type arrow(Type domain, Type codomain);

  Kind kind() const { return node_->kind; }
  bool is_base() const { return node_->kind == Kind::Base; }
  bool is_arrow() const { return node_->kind == Kind::Arrow; }
  // Pre: is_arrow().
  const Type& domain() const;
  const Type& codomain() const;

  // Nesting depth of arrows: depth(o) = 0.
  std::size_t depth() const;
  std::string str() const;

  friend bool operator==(const Type& a, const Type& b);

 private:
  struct Node {
    Kind kind;
    std::vector<Type> children;
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// λ-terms. Immutable, cheap to copy (shared subtrees).
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Abs, App };

  static Term var(Name name);
  static Term abs(Name binder, std::optional<Type> annotation, Term body);
  static Term abs(Name binder, Term body) { return abs(std::move(binder), std::nullopt, std::move(body)); }
  static Term app(Term fun, Term arg);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::Var; }
  bool is_abs() const { return node_->kind == Kind::Abs; }
  bool is_app() const { return node_->kind == Kind::App; }

  // Var: the variable. Abs: the binder.
  const Name& name() const { return node_->name; }
  const std::optional<Type>& annotation() const { return node_->annotation; }
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  // Node count.
  std::size_t size() const { return node_->size; }

  // Structural identity (names, indices and annotations included).
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    Name name;
    std::optional<Type> annotation;
    std::vector<Term> children;
    std::size_t size;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// One step from a node to a child: function or argument of an application,
// body of an abstraction.
enum class Step : std::uint8_t { Fun, Arg, Body };
using Path = std::vector<Step>;

std::string path_str(const Path& p);
bool is_prefix(const Path& prefix, const Path& p);

// Throws std::out_of_range when the path leaves the term.
const Term& subterm_at(const Term& t, const Path& p);
Term replace_at(const Term& t, const Path& p, const Term& replacement);

}  // namespace lamdist

#endif  // LAMDIST_TERM_HPP
