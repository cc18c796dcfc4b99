// specmon - analysis of finitely presented special monoids
//
// The language {w : w ->* 1} of erasable words of a special system, as a
// context-free grammar. For a confluent system this is exactly the word
// problem {w : w = 1 in M}; otherwise it may be a proper subset.

#ifndef SPECMON_WP_LANGUAGE_HPP_
#define SPECMON_WP_LANGUAGE_HPP_

#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "error.hpp"         // for Limits
#include "grammar.hpp"       // for Grammar, CykRecognizer
#include "presentation.hpp"  // for SpecialSystem, Word

namespace specmon {

  // S -> epsilon | S S | a_1 S a_2 S ... S a_k for each relator a_1 ... a_k.
  inline Grammar wp_grammar(SpecialSystem const& sys) {
    Grammar g;
    g.terminals = sys.alphabet();
    g.start     = g.add_nonterminal("S");
    auto S      = Symbol::nt(g.start);
    g.add(g.start, {});
    g.add(g.start, {S, S});
    for (auto const& u : sys.relators()) {
      std::vector<Symbol> body;
      for (size_t i = 0; i < u.size(); ++i) {
        if (i != 0) {
          body.push_back(S);
        }
        body.push_back(Symbol::t(u[i]));
      }
      g.add(g.start, std::move(body));
    }
    return g;
  }

  // Does w rewrite to the empty word? Exhaustive search by naive factor
  // matching, memoizing the words already known not to be erasable. Shares
  // no code with the grammar or the occurrence automaton.
  inline bool erasable_oracle(SpecialSystem const& sys,
                              Word const&          w,
                              Limits const&        limits = {}) {
    std::unordered_set<Word, WordHash> dead;
    auto search = [&](auto&& self, Word const& x) -> bool {
      if (x.empty()) {
        return true;
      }
      if (dead.count(x) != 0) {
        return false;
      }
      for (auto const& u : sys.relators()) {
        for (size_t pos = 0; pos + u.size() <= x.size(); ++pos) {
          if (!is_factor_at(x, u, pos)) {
            continue;
          }
          Word y(x.begin(), x.begin() + pos);
          y.insert(y.end(), x.begin() + pos + u.size(), x.end());
          if (self(self, y)) {
            return true;
          }
        }
      }
      dead.insert(x);
      if (dead.size() > limits.descendants) {
        budget_exceeded("erasability search", limits.descendants);
      }
      return false;
    };
    return search(search, w);
  }

  // The word-problem grammar with its closures, converted and indexed once.
  class WordProblemLanguage {
   public:
    explicit WordProblemLanguage(SpecialSystem const& sys)
        : _grammar(wp_grammar(sys)),
          _words(_grammar),
          _prefixes(prefix_closure(_grammar)),
          _suffixes(suffix_closure(_grammar)) {}

    Grammar const& grammar() const noexcept { return _grammar; }
    Grammar const& cnf() const noexcept { return _words.grammar(); }
    Grammar const& prefix_cnf() const noexcept { return _prefixes.grammar(); }
    Grammar const& suffix_cnf() const noexcept { return _suffixes.grammar(); }

    bool contains(Word const& w) const { return _words.accepts(w); }
    bool is_prefix(Word const& w) const { return _prefixes.accepts(w); }
    bool is_suffix(Word const& w) const { return _suffixes.accepts(w); }

   private:
    Grammar       _grammar;
    CykRecognizer _words;
    CykRecognizer _prefixes;
    CykRecognizer _suffixes;
  };

}  // namespace specmon

#endif  // SPECMON_WP_LANGUAGE_HPP_
