#include "lamdist/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace lamdist {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_term_eof() {
    Term t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

  Type parse_type_eof() {
    Type t = parse_type();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

  Name parse_name_eof() {
    skip_ws();
    Name n = parse_name();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after name");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool at_name_start() {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  Name parse_name() {
    if (!at_name_start()) fail("expected a name");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string base(text_.substr(start, pos_ - start));
    std::uint64_t index = 0;
    if (pos_ < text_.size() && text_[pos_] == '#') {
      ++pos_;
      std::size_t digits = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (digits == pos_) fail("malformed name index after '#'");
      auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, index);
      if (ec != std::errc{}) fail("name index out of range");
    }
    return Name{std::move(base), index};
  }

  Term parse_term() {
    if (peek('\\')) {
      ++pos_;
      Name binder = parse_name();
      std::optional<Type> annotation;
      if (peek(':')) {
        ++pos_;
        annotation = parse_type();
      }
      expect('.');
      return Term::abs(std::move(binder), std::move(annotation), parse_term());
    }
    Term head = parse_atom();
    while (true) {
      if (peek('(') || at_name_start()) {
        head = Term::app(std::move(head), parse_atom());
      } else if (peek('\\')) {
        // A trailing abstraction extends to the right as the last argument.
        head = Term::app(std::move(head), parse_term());
        break;
      } else {
        break;
      }
    }
    return head;
  }

  Term parse_atom() {
    if (peek('(')) {
      ++pos_;
      Term t = parse_term();
      expect(')');
      return t;
    }
    if (at_name_start()) return Term::var(parse_name());
    if (pos_ >= text_.size()) fail("expected a term but input ended");
    fail("expected a term");
  }

  Type parse_type() {
    Type lhs = parse_type_atom();
    skip_ws();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Type::arrow(lhs, parse_type());
    }
    return lhs;
  }

  Type parse_type_atom() {
    if (peek('(')) {
      ++pos_;
      Type t = parse_type();
      expect(')');
      return t;
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'o') {
      std::size_t next = pos_ + 1;
      if (next >= text_.size() ||
          !(std::isalnum(static_cast<unsigned char>(text_[next])) || text_[next] == '_')) {
        pos_ = next;
        return Type::base();
      }
    }
    fail("expected a type");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_to(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out += t.name().str();
      return;
    case Term::Kind::Abs:
      out += '\\';
      out += t.name().str();
      if (t.annotation()) {
        out += ':';
        out += t.annotation()->str();
      }
      out += ". ";
      print_to(t.body(), out);
      return;
    case Term::Kind::App: {
      const Term& f = t.fun();
      if (f.is_abs()) {
        out += '(';
        print_to(f, out);
        out += ')';
      } else {
        print_to(f, out);
      }
      out += ' ';
      const Term& a = t.arg();
      if (a.is_var()) {
        print_to(a, out);
      } else {
        out += '(';
        print_to(a, out);
        out += ')';
      }
      return;
    }
  }
}

void collect_free(const Term& t, std::set<Name>& bound, std::set<Name>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (!bound.contains(t.name())) out.insert(t.name());
      return;
    case Term::Kind::Abs: {
      bool inserted = bound.insert(t.name()).second;
      collect_free(t.body(), bound, out);
      if (inserted) bound.erase(t.name());
      return;
    }
    case Term::Kind::App:
      collect_free(t.fun(), bound, out);
      collect_free(t.arg(), bound, out);
      return;
  }
}

bool distinct_binders(const Term& t, std::set<Name>& seen) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return true;
    case Term::Kind::Abs:
      if (!seen.insert(t.name()).second) return false;
      return distinct_binders(t.body(), seen);
    case Term::Kind::App:
      return distinct_binders(t.fun(), seen) && distinct_binders(t.arg(), seen);
  }
  return true;
}

Term rename_binders(const Term& t, std::map<Name, Name>& renaming, std::set<Name>& used,
                    NameSupply& supply, bool rename_all) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = renaming.find(t.name());
      if (it == renaming.end() || it->second == t.name()) return t;
      return Term::var(it->second);
    }
    case Term::Kind::Abs: {
      Name binder = t.name();
      if (rename_all || used.contains(binder)) binder = supply.fresh(t.name().base);
      used.insert(binder);
      auto prev = renaming.find(t.name());
      std::optional<Name> saved;
      if (prev != renaming.end()) saved = prev->second;
      renaming[t.name()] = binder;
      Term body = rename_binders(t.body(), renaming, used, supply, rename_all);
      if (saved) renaming[t.name()] = *saved;
      else renaming.erase(t.name());
      if (binder == t.name() && body == t.body()) return t;
      return Term::abs(binder, t.annotation(), body);
    }
    case Term::Kind::App: {
      Term f = rename_binders(t.fun(), renaming, used, supply, rename_all);
      Term a = rename_binders(t.arg(), renaming, used, supply, rename_all);
      if (f == t.fun() && a == t.arg()) return t;
      return Term::app(f, a);
    }
  }
  return t;
}

// Maps bound names to binding depth on each side.
bool alpha_eq_rec(const Term& t, const Term& s, std::map<Name, std::size_t>& left,
                  std::map<Name, std::size_t>& right, std::size_t depth) {
  if (t.kind() != s.kind()) return false;
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto l = left.find(t.name());
      auto r = right.find(s.name());
      if (l == left.end() && r == right.end()) return t.name() == s.name();
      if (l == left.end() || r == right.end()) return false;
      return l->second == r->second;
    }
    case Term::Kind::Abs: {
      if (t.annotation() != s.annotation()) return false;
      auto save = [](std::map<Name, std::size_t>& m, const Name& n) {
        auto it = m.find(n);
        return it == m.end() ? std::optional<std::size_t>{} : std::optional<std::size_t>{it->second};
      };
      auto restore = [](std::map<Name, std::size_t>& m, const Name& n, std::optional<std::size_t> v) {
        if (v) m[n] = *v;
        else m.erase(n);
      };
      auto sl = save(left, t.name());
      auto sr = save(right, s.name());
      left[t.name()] = depth;
      right[s.name()] = depth;
      bool ok = alpha_eq_rec(t.body(), s.body(), left, right, depth + 1);
      restore(left, t.name(), sl);
      restore(right, s.name(), sr);
      return ok;
    }
    case Term::Kind::App:
      return alpha_eq_rec(t.fun(), s.fun(), left, right, depth) &&
             alpha_eq_rec(t.arg(), s.arg(), left, right, depth);
  }
  return false;
}

void fingerprint_to(const Term& t, std::map<Name, std::size_t>& bound, std::size_t& counter, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = bound.find(t.name());
      if (it == bound.end()) out += t.name().str();
      else out += "%" + std::to_string(it->second);
      return;
    }
    case Term::Kind::Abs: {
      std::size_t id = counter++;
      auto prev = bound.find(t.name());
      std::optional<std::size_t> saved;
      if (prev != bound.end()) saved = prev->second;
      bound[t.name()] = id;
      out += "\\%" + std::to_string(id);
      if (t.annotation()) out += ":" + t.annotation()->str();
      out += ".";
      fingerprint_to(t.body(), bound, counter, out);
      if (saved) bound[t.name()] = *saved;
      else bound.erase(t.name());
      return;
    }
    case Term::Kind::App:
      out += "(";
      fingerprint_to(t.fun(), bound, counter, out);
      out += " ";
      fingerprint_to(t.arg(), bound, counter, out);
      out += ")";
      return;
  }
}

Term substitute_rec(const Term& t, const Name& x, const Term& s, const std::set<Name>& fv_s,
                    NameSupply& supply) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (t.name() == x) return fresh_copy(s, supply);
      return t;
    case Term::Kind::Abs: {
      if (t.name() == x || !occurs_free(x, t.body())) return t;
      if (fv_s.contains(t.name())) {
        // Would capture: rename the binder first.
        Name y = supply.fresh(t.name().base);
        std::set<Name> fv_y{y};
        Term body = substitute_rec(t.body(), t.name(), Term::var(y), fv_y, supply);
        return Term::abs(y, t.annotation(), substitute_rec(body, x, s, fv_s, supply));
      }
      return Term::abs(t.name(), t.annotation(), substitute_rec(t.body(), x, s, fv_s, supply));
    }
    case Term::Kind::App: {
      Term f = substitute_rec(t.fun(), x, s, fv_s, supply);
      Term a = substitute_rec(t.arg(), x, s, fv_s, supply);
      if (f == t.fun() && a == t.arg()) return t;
      return Term::app(f, a);
    }
  }
  return t;
}

std::uint64_t max_index(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name().index;
    case Term::Kind::Abs:
      return std::max(t.name().index, max_index(t.body()));
    case Term::Kind::App:
      return std::max(max_index(t.fun()), max_index(t.arg()));
  }
  return 0;
}

}  // namespace

Term parse(std::string_view text) { return Parser(text).parse_term_eof(); }
Type parse_type(std::string_view text) { return Parser(text).parse_type_eof(); }
Name parse_name(std::string_view text) { return Parser(text).parse_name_eof(); }

std::string print(const Term& t) {
  std::string out;
  print_to(t, out);
  return out;
}

std::set<Name> free_vars(const Term& t) {
  std::set<Name> bound, out;
  collect_free(t, bound, out);
  return out;
}

std::set<Name> bound_names(const Term& t) {
  std::set<Name> out;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->is_abs()) {
      out.insert(cur->name());
      stack.push_back(&cur->body());
    } else if (cur->is_app()) {
      stack.push_back(&cur->fun());
      stack.push_back(&cur->arg());
    }
  }
  return out;
}

bool occurs_free(const Name& x, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.name() == x;
    case Term::Kind::Abs:
      return t.name() != x && occurs_free(x, t.body());
    case Term::Kind::App:
      return occurs_free(x, t.fun()) || occurs_free(x, t.arg());
  }
  return false;
}

void NameSupply::observe(const Term& t) { counter_ = std::max(counter_, max_index(t)); }
void NameSupply::observe(const Name& n) { counter_ = std::max(counter_, n.index); }

bool has_distinct_names(const Term& t) {
  std::set<Name> seen;
  if (!distinct_binders(t, seen)) return false;
  for (const Name& x : free_vars(t))
    if (seen.contains(x)) return false;
  return true;
}

Term ensure_distinct_names(const Term& t, NameSupply& supply) {
  supply.observe(t);
  std::set<Name> used = free_vars(t);
  std::map<Name, Name> renaming;
  return rename_binders(t, renaming, used, supply, false);
}

bool alpha_eq(const Term& t, const Term& s) {
  if (t.size() != s.size()) return false;
  std::map<Name, std::size_t> left, right;
  return alpha_eq_rec(t, s, left, right, 0);
}

std::string alpha_fingerprint(const Term& t) {
  std::map<Name, std::size_t> bound;
  std::size_t counter = 0;
  std::string out;
  fingerprint_to(t, bound, counter, out);
  return out;
}

Term fresh_copy(const Term& t, NameSupply& supply) {
  std::map<Name, Name> renaming;
  std::set<Name> used;
  return rename_binders(t, renaming, used, supply, true);
}

Term substitute(const Term& t, const Name& x, const Term& s, NameSupply& supply) {
  supply.observe(t);
  supply.observe(s);
  return substitute_rec(t, x, s, free_vars(s), supply);
}

std::string print(const Environment& env) {
  std::string out;
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (i) out += ", ";
    const Term& t = env[i].term;
    out += t.is_var() ? print(t) : "(" + print(t) + ")";
    out += "/" + env[i].variable.name.str();
  }
  return out;
}

Term apply_env(const Term& t, const Environment& env, NameSupply& supply) {
  Term out = t;
  for (const Substitution& sub : env) out = substitute(out, sub.variable.name, sub.term, supply);
  return out;
}

}  // namespace lamdist
