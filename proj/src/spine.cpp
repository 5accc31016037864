#include "lamdist/spine.hpp"

#include <algorithm>
#include <stdexcept>

namespace lamdist {

Term plug(const SpineWord& word, const Term& filler) {
  Term cur = filler;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (is_abs(*it)) {
      const Binder& b = binder_of(*it);
      cur = Term::abs(b.name, b.annotation, cur);
    } else {
      cur = Term::app(cur, argument_of(*it));
    }
  }
  return cur;
}

HeadContext head_context(const Term& t) {
  HeadContext h;
  const Term* cur = &t;
  while (!cur->is_var()) {
    if (cur->is_abs()) {
      h.word.push_back(SpineAbs{Binder{cur->name(), cur->annotation()}});
      cur = &cur->body();
    } else {
      h.word.push_back(SpineArg{cur->arg()});
      cur = &cur->fun();
    }
  }
  return h;
}

SpineAnalysis analyze_word(SpineWord word, Name head_var) {
  SpineAnalysis a;
  a.word = std::move(word);
  a.head_var = std::move(head_var);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < a.word.size(); ++i) {
    if (is_arg(a.word[i])) {
      open.push_back(i);
    } else if (open.empty()) {
      a.unmatched_abs.push_back(i);
    } else {
      a.matching.push_back({open.back(), i});
      open.pop_back();
    }
  }
  a.unmatched_args = std::move(open);
  std::sort(a.matching.begin(), a.matching.end(),
            [](const SpinePair& x, const SpinePair& y) { return x.abs > y.abs; });
  return a;
}

SpineAnalysis analyze_spine(const Term& t) {
  HeadContext h = head_context(t);
  Name head = subterm_at(t, spine_paths(h.word).back()).name();
  return analyze_word(std::move(h.word), std::move(head));
}

std::vector<Path> spine_paths(const SpineWord& word) {
  std::vector<Path> out;
  out.reserve(word.size() + 1);
  Path cur;
  for (const SpineItem& item : word) {
    out.push_back(cur);
    cur.push_back(is_abs(item) ? Step::Body : Step::Fun);
  }
  out.push_back(std::move(cur));
  return out;
}

bool is_balanced(const SpineWord& word) {
  std::size_t depth = 0;
  for (const SpineItem& item : word) {
    if (is_arg(item)) {
      ++depth;
    } else {
      if (depth == 0) return false;
      --depth;
    }
  }
  return depth == 0;
}

bool is_e_context(const SpineAnalysis& a) { return a.unmatched_abs.empty() && a.unmatched_args.empty(); }
bool is_e_context(const HeadContext& h) { return is_balanced(h.word); }

EContext::EContext(SpineWord word) : word_(std::move(word)) {
  if (!is_balanced(word_)) throw std::invalid_argument("not an E-context: spine is unbalanced");
}

Environment eta(const SpineWord& balanced_word) {
  SpineAnalysis a = analyze_word(balanced_word, Name{});
  if (!is_e_context(a)) throw std::invalid_argument("not an E-context: spine is unbalanced");
  Environment env;
  env.reserve(a.matching.size());
  for (const SpinePair& p : a.matching)
    env.push_back({argument_of(a.word[p.arg]), binder_of(a.word[p.abs])});
  return env;
}

Environment eta(const EContext& e) { return eta(e.word()); }

EContext context_of_env(const Environment& env) {
  SpineWord word;
  word.reserve(2 * env.size());
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    word.push_back(SpineArg{it->term});
    word.push_back(SpineAbs{it->variable});
  }
  return EContext(std::move(word));
}

Term Decomposition::reassemble() const {
  const std::size_t n = head_abs.size();
  const std::size_t m = head_args.size();
  if (e_blocks.size() != n + m + 1) throw std::logic_error("malformed decomposition");
  SpineWord word;
  auto append = [&word](const EContext& e) { word.insert(word.end(), e.word().begin(), e.word().end()); };
  append(e_blocks[0]);
  for (std::size_t i = 0; i < n; ++i) {
    word.push_back(SpineAbs{head_abs[i]});
    append(e_blocks[i + 1]);
  }
  for (std::size_t j = 1; j <= m; ++j) {
    word.push_back(SpineArg{head_args[m - j]});
    append(e_blocks[n + j]);
  }
  return plug(word, Term::var(head_var));
}

Decomposition decompose(const Term& t) {
  SpineAnalysis a = analyze_spine(t);
  std::vector<std::size_t> cuts;
  cuts.insert(cuts.end(), a.unmatched_abs.begin(), a.unmatched_abs.end());
  cuts.insert(cuts.end(), a.unmatched_args.begin(), a.unmatched_args.end());
  std::sort(cuts.begin(), cuts.end());

  Decomposition d;
  d.head_var = a.head_var;
  std::size_t from = 0;
  auto block = [&](std::size_t to) {
    d.e_blocks.emplace_back(SpineWord(a.word.begin() + static_cast<std::ptrdiff_t>(from),
                                      a.word.begin() + static_cast<std::ptrdiff_t>(to)));
  };
  for (std::size_t c : cuts) {
    block(c);
    if (is_abs(a.word[c])) d.head_abs.push_back(binder_of(a.word[c]));
    from = c + 1;
  }
  block(a.word.size());
  // Unmatched arguments read root to hole are t_m .. t_1.
  for (auto it = a.unmatched_args.rbegin(); it != a.unmatched_args.rend(); ++it)
    d.head_args.push_back(argument_of(a.word[*it]));
  return d;
}

std::vector<PrimaryRedex> primary_redexes(const Term& t) {
  SpineAnalysis a = analyze_spine(t);
  std::vector<PrimaryRedex> out;
  out.reserve(a.matching.size());
  for (const SpinePair& p : a.matching)
    out.push_back({binder_of(a.word[p.abs]), argument_of(a.word[p.arg])});
  return out;
}

std::set<Name> segment_free_vars(const SpineWord& word, std::size_t from, std::size_t to) {
  std::set<Name> bound, out;
  for (std::size_t i = from; i < to; ++i) {
    if (is_abs(word[i])) {
      bound.insert(binder_of(word[i]).name);
    } else {
      for (const Name& x : free_vars(argument_of(word[i])))
        if (!bound.contains(x)) out.insert(x);
    }
  }
  return out;
}

std::set<Name> segment_binders(const SpineWord& word, std::size_t from, std::size_t to) {
  std::set<Name> out;
  for (std::size_t i = from; i < to; ++i)
    if (is_abs(word[i])) out.insert(binder_of(word[i]).name);
  return out;
}

}  // namespace lamdist
