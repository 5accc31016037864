#ifndef LAMDIST_DETAIL_SHRINK_HPP
#define LAMDIST_DETAIL_SHRINK_HPP

#include <algorithm>
#include <vector>

#include "lamdist/term.hpp"

namespace lamdist {

namespace detail {

inline void proper_subterms(const Term& t, std::vector<Term>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Abs:
      out.push_back(t.body());
      proper_subterms(t.body(), out);
      return;
    case Term::Kind::App:
      out.push_back(t.fun());
      out.push_back(t.arg());
      proper_subterms(t.fun(), out);
      proper_subterms(t.arg(), out);
      return;
  }
}

}  // namespace detail

template <class Pre, class Fails>
Term shrink(Term t, Pre pre, Fails fails) {
  for (;;) {
    std::vector<Term> subs;
    detail::proper_subterms(t, subs);
    std::stable_sort(subs.begin(), subs.end(), [](const Term& a, const Term& b) { return a.size() < b.size(); });
    auto smaller = std::find_if(subs.begin(), subs.end(), [&](const Term& s) { return pre(s) && fails(s); });
    if (smaller == subs.end()) return t;
    t = *smaller;
  }
}

}  // namespace lamdist

#endif  // LAMDIST_DETAIL_SHRINK_HPP
