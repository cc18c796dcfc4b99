// specmon - analysis of finitely presented special monoids
//
// Brute-force reference implementations used only by the tests. None of
// these use the occurrence automaton, the grammar machinery, or the
// rewriting strategy they are checked against.

#ifndef SPECMON_TESTS_ORACLES_HPP_
#define SPECMON_TESTS_ORACLES_HPP_

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <vector>

#include "specmon/specmon.hpp"

namespace specmon::oracle {

  // Every word over {0, ..., n-1} of length <= max_length, in shortlex order.
  inline std::vector<Word> all_words(size_t n, size_t max_length) {
    std::vector<Word> result{Word{}};
    size_t            begin = 0;
    for (size_t len = 1; len <= max_length; ++len) {
      size_t end = result.size();
      for (size_t i = begin; i < end; ++i) {
        for (Letter x = 0; x < n; ++x) {
          Word w = result[i];
          w.push_back(x);
          result.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return result;
  }

  // (position, rule) of every relator occurrence, by direct comparison.
  inline std::vector<std::pair<size_t, size_t>>
  naive_occurrences(SpecialSystem const& sys, Word const& w) {
    std::vector<std::pair<size_t, size_t>> result;
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (size_t r = 0; r < sys.number_of_relators(); ++r) {
        auto const& u = sys.relator(r);
        if (pos + u.size() <= w.size()
            && std::equal(u.begin(), u.end(), w.begin() + pos)) {
          result.emplace_back(pos, r);
        }
      }
    }
    return result;
  }

  inline Word delete_at(Word const& w, size_t pos, size_t len) {
    Word v(w.begin(), w.begin() + pos);
    v.insert(v.end(), w.begin() + pos + len, w.end());
    return v;
  }

  // BFS over every rewriting sequence from w.
  inline std::set<Word> reachable(SpecialSystem const& sys, Word const& w) {
    std::set<Word>   seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
      Word x = queue.front();
      queue.pop_front();
      for (auto [pos, r] : naive_occurrences(sys, x)) {
        Word y = delete_at(x, pos, sys.relator(r).size());
        if (seen.insert(y).second) {
          queue.push_back(std::move(y));
        }
      }
    }
    return seen;
  }

  inline bool erasable(SpecialSystem const& sys, Word const& w) {
    return reachable(sys, w).count(Word{}) != 0;
  }

  inline std::vector<Word> irreducible_reachable(SpecialSystem const& sys,
                                                 Word const&          w) {
    std::vector<Word> result;
    for (auto const& v : reachable(sys, w)) {
      if (naive_occurrences(sys, v).empty()) {
        result.push_back(v);
      }
    }
    return result;
  }

  // Slides relator j along relator i and records every position where the
  // letters agree on the common part.
  inline std::vector<Overlap> overlaps(SpecialSystem const& sys) {
    std::vector<Overlap> result;
    for (size_t i = 0; i < sys.number_of_relators(); ++i) {
      Word const& u = sys.relator(i);
      for (size_t j = 0; j < sys.number_of_relators(); ++j) {
        Word const& v = sys.relator(j);
        for (size_t o = 0; o < u.size(); ++o) {
          bool agree = true;
          for (size_t t = 0; t < v.size() && o + t < u.size(); ++t) {
            agree = agree && u[o + t] == v[t];
          }
          if (!agree) {
            continue;
          }
          if (o + v.size() <= u.size()) {
            if (i != j) {
              result.push_back({OverlapKind::inclusion, i, j, o, u});
            }
          } else if (o > 0) {
            Word w(u.begin(), u.begin() + o);
            w.insert(w.end(), v.begin(), v.end());
            result.push_back({OverlapKind::suffix_prefix, i, j, o, w});
          }
        }
      }
    }
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return std::tie(a.left_rule, a.right_rule, a.offset)
             < std::tie(b.left_rule, b.right_rule, b.offset);
    });
    return result;
  }

  // Words of length <= max_length that rewrite to 1.
  inline std::vector<Word> erasable_words(SpecialSystem const& sys,
                                          size_t               max_length) {
    std::vector<Word> result;
    for (auto const& w : all_words(sys.alphabet().size(), max_length)) {
      if (erasable(sys, w)) {
        result.push_back(w);
      }
    }
    return result;
  }

  // A random set of distinct relators over n letters, not necessarily
  // overlap-free.
  template <typename Rng>
  SpecialSystem random_system(Rng& rng, size_t n, size_t max_rules,
                              size_t max_length) {
    std::uniform_int_distribution<size_t> rules(1, max_rules);
    std::uniform_int_distribution<size_t> length(1, max_length);
    std::vector<std::string>              names;
    for (size_t i = 0; i < n; ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    std::set<Word>    seen;
    std::vector<Word> relators;
    size_t const      k = rules(rng);
    for (size_t attempt = 0; relators.size() < k && attempt < 100; ++attempt) {
      Word u = random_word(rng, n, length(rng));
      if (seen.insert(u).second) {
        relators.push_back(u);
      }
    }
    return SpecialSystem(Alphabet(names), relators);
  }

}  // namespace specmon::oracle

#endif  // SPECMON_TESTS_ORACLES_HPP_
