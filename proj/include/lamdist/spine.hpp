#ifndef LAMDIST_SPINE_HPP
#define LAMDIST_SPINE_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "lamdist/syntax.hpp"
#include "lamdist/term.hpp"

namespace lamdist {

// A spine abstraction λx or a spine application □ t.
struct SpineAbs {
  Binder binder;
};
struct SpineArg {
  Term argument;
};
using SpineItem = std::variant<SpineAbs, SpineArg>;

inline bool is_abs(const SpineItem& i) { return std::holds_alternative<SpineAbs>(i); }
inline bool is_arg(const SpineItem& i) { return std::holds_alternative<SpineArg>(i); }
inline const Binder& binder_of(const SpineItem& i) { return std::get<SpineAbs>(i).binder; }
inline const Term& argument_of(const SpineItem& i) { return std::get<SpineArg>(i).argument; }

// Spine word read from the root towards the hole.
using SpineWord = std::vector<SpineItem>;

// H ::= □ | λx.H | H t, stored as its spine word.
struct HeadContext {
  SpineWord word;
};

// Fills the hole; plugging never renames, so the hole content may be captured.
Term plug(const SpineWord& word, const Term& filler);
inline Term plug(const HeadContext& h, const Term& filler) { return plug(h.word, filler); }

// (arg position, abs position) into the word.
struct SpinePair {
  std::size_t arg;
  std::size_t abs;
};

struct SpineAnalysis {
  SpineWord word;
  Name head_var;
  // Matched pairs in environment order: binder position from the hole to the root.
  std::vector<SpinePair> matching;
  std::vector<std::size_t> unmatched_abs;
  std::vector<std::size_t> unmatched_args;

  std::size_t n_lambda() const { return unmatched_abs.size(); }
  std::size_t n_app() const { return unmatched_args.size(); }
  std::size_t n_pairs() const { return matching.size(); }
};

// Bracket matching with spine arguments opening and spine abstractions
// closing, read root to hole. Linear in the spine length.
SpineAnalysis analyze_spine(const Term& t);
SpineAnalysis analyze_word(SpineWord word, Name head_var);
HeadContext head_context(const Term& t);

// Position of each word item's node in the term, plus the head variable at the end.
std::vector<Path> spine_paths(const SpineWord& word);

bool is_e_context(const SpineAnalysis& a);
bool is_e_context(const HeadContext& h);
bool is_balanced(const SpineWord& word);

// A head context whose spine word is a complete Dyck word.
class EContext {
 public:
  EContext() = default;
  // Throws std::invalid_argument on an unbalanced word.
  explicit EContext(SpineWord word);
  static EContext from(const HeadContext& h) { return EContext(h.word); }

  const SpineWord& word() const { return word_; }
  bool empty() const { return word_.empty(); }
  std::size_t n_pairs() const { return word_.size() / 2; }
  Term plug(const Term& filler) const { return lamdist::plug(word_, filler); }

 private:
  SpineWord word_;
};

// η(E): one pair per matched (argument, binder), hole-nearest binder first.
Environment eta(const EContext& e);
Environment eta(const SpineWord& balanced_word);

// 𝓔(η) = (λx_n. ... (λx_1. □) t_1 ... ) t_n.
EContext context_of_env(const Environment& env);

// H = E_0[λx_1.E_1[... λx_n.E_n[E_{n+1}[...[E_{n+m} t_1] ...] t_m]]].
struct Decomposition {
  std::vector<EContext> e_blocks;  // E_0 .. E_{n+m}
  std::vector<Binder> head_abs;    // x_1 (outermost) .. x_n
  std::vector<Term> head_args;     // t_1 (hole-nearest) .. t_m
  Name head_var;

  Term reassemble() const;
};

Decomposition decompose(const Term& t);

struct PrimaryRedex {
  Binder binder;
  Term argument;
};

// Matched spine pairs of t, hole-nearest binder first.
std::vector<PrimaryRedex> primary_redexes(const Term& t);

// Free variables of the arguments in word[from, to), minus binders of the
// segment that scope over them.
std::set<Name> segment_free_vars(const SpineWord& word, std::size_t from, std::size_t to);
std::set<Name> segment_binders(const SpineWord& word, std::size_t from, std::size_t to);

}  // namespace lamdist

#endif  // LAMDIST_SPINE_HPP
