#include "lamdist/typing.hpp"

#include "lamdist/reduction.hpp"
#include "lamdist/syntax.hpp"

namespace lamdist {

namespace {

Type infer_at(const Term& t, TypeContext& ctx, Path& where) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = ctx.find(t.name());
      if (it == ctx.end()) throw TypeError("unbound variable " + t.name().str(), where);
      return it->second;
    }
    case Term::Kind::Abs: {
      if (!t.annotation()) throw TypeError("binder " + t.name().str() + " has no type annotation", where);
      auto prev = ctx.find(t.name());
      std::optional<Type> saved;
      if (prev != ctx.end()) saved = prev->second;
      ctx.insert_or_assign(t.name(), *t.annotation());
      where.push_back(Step::Body);
      Type body = infer_at(t.body(), ctx, where);
      where.pop_back();
      if (saved) ctx.insert_or_assign(t.name(), *saved);
      else ctx.erase(t.name());
      return Type::arrow(*t.annotation(), body);
    }
    case Term::Kind::App: {
      where.push_back(Step::Fun);
      Type f = infer_at(t.fun(), ctx, where);
      where.back() = Step::Arg;
      Type a = infer_at(t.arg(), ctx, where);
      where.pop_back();
      if (!f.is_arrow())
        throw TypeError(print(t.fun()) + " : " + f.str() + " is applied to an argument", where);
      if (!(f.domain() == a))
        throw TypeError("argument type mismatch: expected " + f.domain().str() + ", found " + a.str(), where);
      return f.codomain();
    }
  }
  throw TypeError("unreachable", where);
}

}  // namespace

TypeContext parse_context(std::string_view text) {
  TypeContext ctx;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view entry = text.substr(start, comma - start);
    bool blank = entry.find_first_not_of(" \t\n") == std::string_view::npos;
    if (!blank) {
      std::size_t colon = entry.find(':');
      if (colon == std::string_view::npos) throw ParseError("context entry without ':'", start);
      Name x = parse_name(entry.substr(0, colon));
      Type ty = parse_type(entry.substr(colon + 1));
      if (!ctx.emplace(x, ty).second) throw ParseError("duplicate context entry " + x.str(), start);
    }
    start = comma + 1;
  }
  return ctx;
}

std::string print(const TypeContext& ctx) {
  std::string out;
  for (const auto& [x, ty] : ctx) {
    if (!out.empty()) out += ",";
    out += x.str() + ":" + ty.str();
  }
  return out;
}

Type infer(const Term& t, const TypeContext& ctx) {
  TypeContext scope = ctx;
  Path where;
  return infer_at(t, scope, where);
}

bool typeable(const Term& t, const TypeContext& ctx) {
  try {
    infer(t, ctx);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

bool check_subject_reduction(const Trace& tr, const TypeContext& ctx) {
  Type start = infer(tr.start, ctx);
  for (const TraceStep& step : tr.steps) {
    try {
      if (!(infer(step.result, ctx) == start)) return false;
    } catch (const TypeError&) {
      return false;
    }
  }
  return true;
}

}  // namespace lamdist
