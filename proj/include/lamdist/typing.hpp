#ifndef LAMDIST_TYPING_HPP
#define LAMDIST_TYPING_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lamdist/term.hpp"

namespace lamdist {

struct Trace;

// Types of the free variables.
using TypeContext = std::map<Name, Type>;

class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& what, Path where)
      : std::runtime_error(what + " at " + path_str(where)), where_(std::move(where)) {}
  const Path& where() const { return where_; }

 private:
  Path where_;
};

// "x:o,f:o->o"; empty text gives the empty context.
TypeContext parse_context(std::string_view text);
std::string print(const TypeContext& ctx);

// Church-style: every binder must carry an annotation.
Type infer(const Term& t, const TypeContext& ctx);
bool typeable(const Term& t, const TypeContext& ctx);

// True iff every term of the trace has the type of its start.
bool check_subject_reduction(const Trace& tr, const TypeContext& ctx);

}  // namespace lamdist

#endif  // LAMDIST_TYPING_HPP
