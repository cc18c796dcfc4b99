// specmon - analysis of finitely presented special monoids
//
// The special rewriting system {(u_i, 1)}: one-step rewriting, normal forms,
// overlaps between relators, critical pairs and the exact confluence test.
//
// Every rule deletes a nonempty factor, so every rewriting sequence is
// strictly length-decreasing and the system is terminating. Confluence is
// therefore equivalent to local confluence, which is decided by joining the
// critical pairs.

#ifndef SPECMON_REWRITE_HPP_
#define SPECMON_REWRITE_HPP_

#include <algorithm>      // for min, sort
#include <optional>       // for optional
#include <string>         // for string
#include <unordered_set>  // for unordered_set
#include <utility>        // for move
#include <vector>         // for vector

#include "json.hpp"

#include "aho-corasick.hpp"  // for AhoCorasick
#include "error.hpp"         // for Error, Limits
#include "presentation.hpp"  // for SpecialSystem, Word

namespace specmon {

  // A SpecialSystem together with its occurrence automaton. Immutable after
  // construction, so it can be shared between threads.
  class RewritingSystem {
   public:
    explicit RewritingSystem(SpecialSystem sys)
        : _sys(std::move(sys)),
          _ac(_sys.alphabet().size(), _sys.relators()),
          _max_len(_sys.max_relator_length()) {}

    SpecialSystem const& system() const noexcept { return _sys; }
    AhoCorasick const&   automaton() const noexcept { return _ac; }
    Alphabet const& alphabet() const noexcept { return _sys.alphabet(); }
    std::vector<Word> const& relators() const noexcept {
      return _sys.relators();
    }
    size_t max_relator_length() const noexcept { return _max_len; }

   private:
    SpecialSystem _sys;
    AhoCorasick   _ac;
    size_t        _max_len;
  };

  struct Occurrence {
    size_t position;  // index of the first deleted letter
    size_t rule;

    bool operator==(Occurrence const&) const = default;
  };

  struct RewriteStep {
    Word   result;
    size_t position;
    size_t rule;
  };

  namespace detail {
    // The occurrence chosen by the rewriting strategy among those starting at
    // or after `from`: leftmost start, then longest relator, then lowest
    // index.
    inline std::optional<Occurrence>
    leftmost_occurrence(RewritingSystem const& rws, Word const& w,
                        size_t from) {
      auto const&               ac = rws.automaton();
      std::optional<Occurrence> best;
      size_t                    horizon = w.size();
      auto better = [&rws](Occurrence const& a, Occurrence const& b) {
        if (a.position != b.position) {
          return a.position < b.position;
        }
        size_t la = rws.relators()[a.rule].size();
        size_t lb = rws.relators()[b.rule].size();
        if (la != lb) {
          return la > lb;
        }
        return a.rule < b.rule;
      };
      AhoCorasick::state_type s = AhoCorasick::root;
      for (size_t i = from; i < horizon; ++i) {
        s = ac.next(s, w[i]);
        for (auto p : ac.matches(s)) {
          Occurrence occ{i + 1 - ac.pattern_length(p), p};
          if (!best) {
            // any occurrence starting at or before this one's start ends at
            // most max_relator_length - 1 letters further on
            horizon = std::min(w.size(), i + rws.max_relator_length());
          }
          if (!best || better(occ, *best)) {
            best = occ;
          }
        }
      }
      return best;
    }

    inline void erase_occurrence(RewritingSystem const& rws, Word& w,
                                 Occurrence const& occ) {
      auto first = w.begin() + occ.position;
      w.erase(first, first + rws.relators()[occ.rule].size());
    }
  }  // namespace detail

  // Every occurrence of every relator in w, ordered by (position, rule).
  inline std::vector<Occurrence> occurrences(RewritingSystem const& rws,
                                             Word const&            w) {
    std::vector<Occurrence> result;
    auto const&             ac = rws.automaton();
    ac.scan(w, 0, [&](size_t end, size_t p) {
      result.push_back({end - ac.pattern_length(p), p});
      return true;
    });
    std::sort(result.begin(), result.end(), [](auto const& a, auto const& b) {
      return a.position != b.position ? a.position < b.position
                                      : a.rule < b.rule;
    });
    return result;
  }

  inline bool is_irreducible(RewritingSystem const& rws, Word const& w) {
    bool found = false;
    rws.automaton().scan(w, 0, [&found](size_t, size_t) {
      found = true;
      return false;
    });
    return !found;
  }

  inline std::optional<RewriteStep> rewrite_step(RewritingSystem const& rws,
                                                 Word const&            w) {
    auto occ = detail::leftmost_occurrence(rws, w, 0);
    if (!occ) {
      return std::nullopt;
    }
    Word v = w;
    detail::erase_occurrence(rws, v, *occ);
    return RewriteStep{std::move(v), occ->position, occ->rule};
  }

  // Applies rewrite_step until the word is irreducible. If `trace` is given,
  // the deleted occurrences are appended to it in order.
  //
  // Before each deletion no occurrence starts left of the chosen one, so
  // afterwards any occurrence must straddle the splice point and scanning
  // can resume max_relator_length - 1 letters to its left.
  inline Word normal_form(RewritingSystem const&   rws,
                          Word                     w,
                          std::vector<Occurrence>* trace = nullptr) {
    size_t const back   = rws.max_relator_length() == 0
                              ? 0
                              : rws.max_relator_length() - 1;
    size_t       resume = 0;
    while (auto occ = detail::leftmost_occurrence(rws, w, resume)) {
      detail::erase_occurrence(rws, w, *occ);
      if (trace != nullptr) {
        trace->push_back(*occ);
      }
      resume = occ->position > back ? occ->position - back : 0;
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Overlaps and critical pairs
  ////////////////////////////////////////////////////////////////////////

  enum class OverlapKind { inclusion, suffix_prefix };

  inline char const* to_string(OverlapKind k) noexcept {
    return k == OverlapKind::inclusion ? "inclusion" : "suffix_prefix";
  }

  struct Overlap {
    OverlapKind kind;
    size_t      left_rule;
    size_t      right_rule;
    size_t      offset;  // where the right rule starts inside `word`
    Word        word;

    bool operator==(Overlap const&) const = default;
  };

  struct CriticalPair {
    Overlap source;
    Word    left_reduct;   // `word` with the left rule's occurrence deleted
    Word    right_reduct;  // `word` with the right rule's occurrence deleted
  };

  // All overlaps, ordered by (left_rule, right_rule, offset). For a fixed
  // pair of rules the inclusion offsets (right rule ends inside the left
  // one) are all smaller than the suffix-prefix offsets, so the two kinds
  // never share a key.
  inline std::vector<Overlap> overlaps(SpecialSystem const& sys) {
    std::vector<Overlap> result;
    auto const&          R = sys.relators();
    for (size_t i = 0; i < R.size(); ++i) {
      Word const& u = R[i];
      for (size_t j = 0; j < R.size(); ++j) {
        Word const& v = R[j];
        if (i != j && v.size() <= u.size()) {
          for (size_t o = 0; o + v.size() <= u.size(); ++o) {
            if (is_factor_at(u, v, o)) {
              result.push_back({OverlapKind::inclusion, i, j, o, u});
            }
          }
        }
        // suffix of u of length s equals prefix of v of length s, with s
        // proper in both
        size_t const max_s = std::min(u.size(), v.size());
        for (size_t o = u.size() - max_s + 1; o < u.size(); ++o) {
          if (std::equal(u.begin() + o, u.end(), v.begin())) {
            Word w(u.begin(), u.begin() + o);
            w.insert(w.end(), v.begin(), v.end());
            result.push_back({OverlapKind::suffix_prefix, i, j, o, std::move(w)});
          }
        }
      }
    }
    return result;
  }

  inline std::vector<Overlap> overlaps(RewritingSystem const& rws) {
    return overlaps(rws.system());
  }

  inline CriticalPair critical_pair(SpecialSystem const& sys,
                                    Overlap const&       ov) {
    Word const& u = sys.relator(ov.left_rule);
    Word const& v = sys.relator(ov.right_rule);
    Word        left(ov.word.begin() + u.size(), ov.word.end());
    Word        right(ov.word.begin(), ov.word.begin() + ov.offset);
    right.insert(right.end(), ov.word.begin() + ov.offset + v.size(),
                 ov.word.end());
    if (ov.kind == OverlapKind::inclusion) {
      // the left rule is the whole overlap word
      left.clear();
    }
    return {ov, std::move(left), std::move(right)};
  }

  inline std::vector<CriticalPair> critical_pairs(SpecialSystem const& sys) {
    std::vector<CriticalPair> result;
    for (auto const& ov : overlaps(sys)) {
      result.push_back(critical_pair(sys, ov));
    }
    return result;
  }

  inline std::vector<CriticalPair> critical_pairs(RewritingSystem const& rws) {
    return critical_pairs(rws.system());
  }

  inline bool is_overlap_free(SpecialSystem const& sys) {
    return overlaps(sys).empty();
  }

  inline bool is_overlap_free(RewritingSystem const& rws) {
    return is_overlap_free(rws.system());
  }

  ////////////////////////////////////////////////////////////////////////
  // Descendants and confluence
  ////////////////////////////////////////////////////////////////////////

  using WordSet = std::unordered_set<Word, WordHash>;

  // {v : w ->* v}, including w itself.
  inline WordSet descendants(RewritingSystem const& rws,
                             Word const&            w,
                             Limits const&          limits = {}) {
    WordSet           seen{w};
    std::vector<Word> stack{w};
    while (!stack.empty()) {
      Word x = std::move(stack.back());
      stack.pop_back();
      for (auto const& occ : occurrences(rws, x)) {
        Word y = x;
        detail::erase_occurrence(rws, y, occ);
        if (seen.insert(y).second) {
          if (seen.size() > limits.descendants) {
            budget_exceeded("descendant set", limits.descendants);
          }
          stack.push_back(std::move(y));
        }
      }
    }
    return seen;
  }

  inline bool joinable(RewritingSystem const& rws,
                       Word const&            p,
                       Word const&            q,
                       Limits const&          limits = {}) {
    // a common deterministic normal form is a common descendant; only the
    // negative answer needs the full sets
    if (p == q || normal_form(rws, p) == normal_form(rws, q)) {
      return true;
    }
    WordSet dp = descendants(rws, p, limits);
    WordSet dq = descendants(rws, q, limits);
    if (dp.size() > dq.size()) {
      std::swap(dp, dq);
    }
    for (auto const& x : dp) {
      if (dq.count(x) != 0) {
        return true;
      }
    }
    return false;
  }

  // Pairs that do not join, in the order of critical_pairs().
  inline std::vector<CriticalPair>
  non_joinable_pairs(RewritingSystem const& rws, Limits const& limits = {}) {
    std::vector<CriticalPair> result;
    for (auto& cp : critical_pairs(rws)) {
      if (!joinable(rws, cp.left_reduct, cp.right_reduct, limits)) {
        result.push_back(std::move(cp));
      }
    }
    return result;
  }

  inline bool is_confluent(RewritingSystem const& rws,
                           Limits const&          limits = {}) {
    for (auto const& cp : critical_pairs(rws)) {
      if (!joinable(rws, cp.left_reduct, cp.right_reduct, limits)) {
        return false;
      }
    }
    return true;
  }

  // The irreducible words of length at most max_length in shortlex order,
  // obtained by walking the automaton and never entering a match state.
  inline std::vector<Word> irreducible_words(RewritingSystem const& rws,
                                             size_t                 max_length,
                                             size_t cap = 1'000'000) {
    auto const&       ac = rws.automaton();
    size_t const      n  = rws.alphabet().size();
    std::vector<Word> result;
    for (size_t len = 0; len <= max_length; ++len) {
      Word                                 w;
      std::vector<AhoCorasick::state_type> states{AhoCorasick::root};
      // iterative DFS in lexicographic order over words of length `len`
      std::vector<Letter> next_letter{0};
      while (!next_letter.empty()) {
        if (w.size() == len) {
          result.push_back(w);
          if (result.size() > cap) {
            budget_exceeded("irreducible word enumeration", cap);
          }
          next_letter.pop_back();
          states.pop_back();
          if (!w.empty()) {
            w.pop_back();
          }
          continue;
        }
        Letter& x = next_letter.back();
        bool    descended = false;
        while (x < n) {
          auto t = ac.next(states.back(), x);
          ++x;
          if (!ac.is_match(t)) {
            w.push_back(x - 1);
            states.push_back(t);
            next_letter.push_back(0);
            descended = true;
            break;
          }
        }
        if (!descended) {
          next_letter.pop_back();
          states.pop_back();
          if (!w.empty()) {
            w.pop_back();
          }
        }
      }
    }
    return result;
  }

  inline nlohmann::ordered_json to_json(CriticalPair const& cp) {
    nlohmann::ordered_json j;
    j["kind"]       = to_string(cp.source.kind);
    j["left_rule"]  = cp.source.left_rule;
    j["right_rule"] = cp.source.right_rule;
    j["offset"]     = cp.source.offset;
    j["word"]       = word_json(cp.source.word);
    j["reducts"]    = {word_json(cp.left_reduct), word_json(cp.right_reduct)};
    return j;
  }

}  // namespace specmon

#endif  // SPECMON_REWRITE_HPP_
