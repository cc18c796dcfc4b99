// specmon - analysis of finitely presented special monoids
//
// Invertible words, minimal invertible factorizations, the sets Lambda and
// Delta, and the decision whether the group of units U(M) is trivial.
//
// A word is right (left) invertible if it has a right (left) inverse in M,
// and invertible if both. An invertible word is minimal if no proper
// nonempty prefix of it is invertible. The minimal words form a biprefix
// code, so every relator factors uniquely into minimal words; Lambda is the
// set of all factors that occur, and it generates U(M).

#ifndef SPECMON_UNITS_HPP_
#define SPECMON_UNITS_HPP_

#include <algorithm>      // for sort, unique, any_of
#include <optional>       // for optional
#include <queue>          // for queue
#include <stdexcept>      // for logic_error
#include <string>         // for string
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "json.hpp"

#include "error.hpp"   // for Error, Limits
#include "monoid.hpp"  // for SpecialMonoid

#ifndef SPECMON_CROSS_CHECK_DEFAULT
#define SPECMON_CROSS_CHECK_DEFAULT false
#endif

namespace specmon {

  enum class Answer { yes, no, unknown };

  enum class InvertibilityMethod { grammar, bounded_search, relator_prefix };

  inline char const* to_string(Answer a) noexcept {
    switch (a) {
      case Answer::yes: return "yes";
      case Answer::no: return "no";
      case Answer::unknown: return "unknown";
    }
    return "unknown";
  }

  inline char const* to_string(InvertibilityMethod m) noexcept {
    switch (m) {
      case InvertibilityMethod::grammar: return "grammar";
      case InvertibilityMethod::bounded_search: return "bounded_search";
      case InvertibilityMethod::relator_prefix: return "relator_prefix";
    }
    return "grammar";
  }

  struct Invertibility {
    Answer              right;
    Answer              left;
    InvertibilityMethod method;

    // A left and a right inverse of the same element coincide.
    Answer two_sided() const noexcept {
      if (right == Answer::yes && left == Answer::yes) {
        return Answer::yes;
      }
      if (right == Answer::no || left == Answer::no) {
        return Answer::no;
      }
      return Answer::unknown;
    }
  };

  constexpr size_t default_invertibility_bound = 4;

  // Searches the Thue congruence class of the empty word, restricted to words
  // of length at most |w| + bound, for a word with prefix w (a right inverse)
  // or suffix w (a left inverse). Positive answers are sound for any system;
  // a failed search only yields Unknown. Prefixes (suffixes) of relators are
  // answered directly.
  inline Invertibility invertibility_bounded(RewritingSystem const& rws,
                                             Word const&            w,
                                             size_t                 bound,
                                             Limits const& limits = {}) {
    auto const& R = rws.relators();
    auto        is_prefix_of_relator = std::any_of(
        R.begin(), R.end(), [&w](Word const& u) {
          return w.size() <= u.size()
                 && std::equal(w.begin(), w.end(), u.begin());
        });
    auto is_suffix_of_relator
        = std::any_of(R.begin(), R.end(), [&w](Word const& u) {
            return w.size() <= u.size()
                   && std::equal(w.rbegin(), w.rend(), u.rbegin());
          });
    if (w.empty() || (is_prefix_of_relator && is_suffix_of_relator)) {
      return {Answer::yes, Answer::yes, InvertibilityMethod::relator_prefix};
    }
    Answer right = is_prefix_of_relator ? Answer::yes : Answer::unknown;
    Answer left  = is_suffix_of_relator ? Answer::yes : Answer::unknown;

    size_t const      max_len = w.size() + bound;
    WordSet           seen{Word{}};
    std::queue<Word>  queue;
    queue.push(Word{});
    auto visit = [&](Word&& y) {
      if (seen.insert(y).second) {
        if (seen.size() > limits.enumeration) {
          budget_exceeded("invertibility search", limits.enumeration);
        }
        queue.push(std::move(y));
      }
    };
    while (!queue.empty() && (right != Answer::yes || left != Answer::yes)) {
      Word x = std::move(queue.front());
      queue.pop();
      if (x.size() >= w.size()) {
        if (std::equal(w.begin(), w.end(), x.begin())) {
          right = Answer::yes;
        }
        if (std::equal(w.rbegin(), w.rend(), x.rbegin())) {
          left = Answer::yes;
        }
      }
      for (auto const& occ : occurrences(rws, x)) {
        Word y = x;
        detail::erase_occurrence(rws, y, occ);
        visit(std::move(y));
      }
      for (auto const& u : R) {
        if (x.size() + u.size() > max_len) {
          continue;
        }
        for (size_t pos = 0; pos <= x.size(); ++pos) {
          Word y(x.begin(), x.begin() + pos);
          y.insert(y.end(), u.begin(), u.end());
          y.insert(y.end(), x.begin() + pos, x.end());
          visit(std::move(y));
        }
      }
    }
    return {right, left, InvertibilityMethod::bounded_search};
  }

  // On a confluent system w is right invertible iff w x ->* 1 for some x,
  // i.e. iff w is a prefix of the word problem; dually for left. Otherwise
  // falls back to invertibility_bounded.
  inline Invertibility invertibility(SpecialMonoid const&  m,
                                     Word const&           w,
                                     std::optional<size_t> bound = {}) {
    if (m.is_confluent()) {
      auto const& wp = m.language();
      return {wp.is_prefix(w) ? Answer::yes : Answer::no,
              wp.is_suffix(w) ? Answer::yes : Answer::no,
              InvertibilityMethod::grammar};
    }
    return invertibility_bounded(m.rewriting(), w,
                                 bound.value_or(default_invertibility_bound),
                                 m.limits());
  }

  inline bool is_invertible(SpecialMonoid const& m, Word const& w) {
    return invertibility(m, w).two_sided() == Answer::yes;
  }

  // Cuts the shortest nonempty invertible prefix until nothing is left. The
  // remainder after each cut is invertible again, being the product of the
  // inverse of the cut piece and an invertible word.
  inline std::vector<Word> minimal_factorization(SpecialMonoid const& m,
                                                 Word const&          w) {
    m.require_confluent("minimal factorization");
    if (!is_invertible(m, w)) {
      throw Error(ErrorKind::not_invertible,
                  "'" + render_word(m.alphabet(), w) + "' is not invertible");
    }
    std::vector<Word> factors;
    size_t            start = 0;
    while (start < w.size()) {
      size_t end = start + 1;
      for (; end <= w.size(); ++end) {
        if (is_invertible(m, Word(w.begin() + start, w.begin() + end))) {
          break;
        }
      }
      if (end > w.size()) {
        // unreachable for an invertible w on a confluent system
        throw std::logic_error("minimal factorization: invertible remainder "
                               "without invertible prefix");
      }
      factors.emplace_back(w.begin() + start, w.begin() + end);
      start = end;
    }
    return factors;
  }

  namespace detail {
    inline void sort_unique(std::vector<Word>& words) {
      std::sort(words.begin(), words.end(), ShortlexLess{});
      words.erase(std::unique(words.begin(), words.end()), words.end());
    }

    inline std::vector<Word>
    lambda_from(std::vector<std::vector<Word>> const& factorizations) {
      std::vector<Word> result;
      for (auto const& f : factorizations) {
        result.insert(result.end(), f.begin(), f.end());
      }
      sort_unique(result);
      return result;
    }

    // sum_{l=1..L} n^l, saturating at cap + 1
    inline size_t candidate_count(size_t n, size_t L, size_t cap) {
      size_t total = 0, power = 1;
      for (size_t l = 1; l <= L; ++l) {
        if (n != 0 && power > (cap + 1) / n) {
          return cap + 1;
        }
        power *= n;
        total += power;
        if (total > cap) {
          return cap + 1;
        }
      }
      return total;
    }

    // All minimal words d in A^+ with |d| <= |l| and d = l in M for some l
    // in `lambda`. Candidates range over all of A^+, not only irreducible
    // words.
    inline std::vector<Word> delta_from(SpecialMonoid const&     m,
                                        std::vector<Word> const& lambda) {
      size_t L = 0;
      for (auto const& l : lambda) {
        L = std::max(L, l.size());
      }
      size_t const n   = m.alphabet().size();
      size_t const cap = m.limits().enumeration;
      if (candidate_count(n, L, cap) > cap) {
        budget_exceeded("Delta candidate enumeration", cap);
      }
      std::vector<std::pair<Word, size_t>> targets;  // (normal form, |l|)
      for (auto const& l : lambda) {
        targets.emplace_back(m.normal_form(l), l.size());
      }
      std::vector<Word> result;
      for (size_t len = 1; len <= L && n > 0; ++len) {
        Word d(len, 0);
        while (true) {
          Word nf      = m.normal_form(d);
          bool matches = std::any_of(
              targets.begin(), targets.end(),
              [&](auto const& t) { return len <= t.second && nf == t.first; });
          if (matches) {
            bool minimal = true;
            for (size_t k = 1; k < len && minimal; ++k) {
              minimal = !is_invertible(m, Word(d.begin(), d.begin() + k));
            }
            if (minimal) {
              result.push_back(d);
            }
          }
          // next word of this length in lexicographic order
          size_t i = len;
          while (i > 0 && d[i - 1] + 1 == n) {
            d[--i] = 0;
          }
          if (i == 0) {
            break;
          }
          ++d[i - 1];
        }
      }
      return result;
    }
  }  // namespace detail

  inline std::vector<Word> lambda_set(SpecialMonoid const& m) {
    m.require_confluent("computing Lambda");
    std::vector<std::vector<Word>> factorizations;
    for (auto const& u : m.system().relators()) {
      factorizations.push_back(minimal_factorization(m, u));
    }
    return detail::lambda_from(factorizations);
  }

  inline std::vector<Word> delta_set(SpecialMonoid const& m) {
    m.require_confluent("computing Delta");
    return detail::delta_from(m, lambda_set(m));
  }

  ////////////////////////////////////////////////////////////////////////
  // The group of units
  ////////////////////////////////////////////////////////////////////////

  enum class UnitsVerdict { trivial, nontrivial, unknown };

  enum class UnitsCertificate { overlap_free_lemma, generator_check, none };

  inline char const* to_string(UnitsVerdict v) noexcept {
    switch (v) {
      case UnitsVerdict::trivial: return "trivial";
      case UnitsVerdict::nontrivial: return "nontrivial";
      case UnitsVerdict::unknown: return "unknown";
    }
    return "unknown";
  }

  inline char const* to_string(UnitsCertificate c) noexcept {
    switch (c) {
      case UnitsCertificate::overlap_free_lemma: return "overlap_free_lemma";
      case UnitsCertificate::generator_check: return "generator_check";
      case UnitsCertificate::none: return "none";
    }
    return "none";
  }

  struct UnitsReport {
    std::vector<Word>                lambda;
    std::optional<std::vector<Word>> delta;  // absent if not computed
    std::string                      delta_note;
    std::vector<std::vector<Word>>   factorizations;  // one per relator
    UnitsVerdict                     verdict     = UnitsVerdict::unknown;
    UnitsCertificate                 certificate = UnitsCertificate::none;
    std::optional<Word>              witness;
  };

  struct UnitsOptions {
    bool compute_delta = true;
    // Also run the generator check when the overlap-free shortcut applies,
    // and fail loudly if the two disagree.
    bool cross_check = SPECMON_CROSS_CHECK_DEFAULT;
  };

  namespace detail {
    inline void fill_delta(SpecialMonoid const& m,
                           UnitsReport&         report,
                           UnitsOptions const&  opts) {
      if (!opts.compute_delta) {
        report.delta_note = "not requested";
        return;
      }
      try {
        report.delta = delta_from(m, report.lambda);
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::budget_exceeded) {
          throw;
        }
        report.delta_note = std::string("not computed: ") + e.what();
      }
    }
  }  // namespace detail

  // Lambda generates U(M), so U(M) is trivial iff every element of Lambda
  // equals 1.
  inline UnitsReport units_via_generators(SpecialMonoid const& m,
                                          UnitsOptions const&  opts = {}) {
    m.require_confluent("the generator check");
    UnitsReport report;
    for (auto const& u : m.system().relators()) {
      report.factorizations.push_back(minimal_factorization(m, u));
    }
    report.lambda      = detail::lambda_from(report.factorizations);
    report.certificate = UnitsCertificate::generator_check;
    report.verdict     = UnitsVerdict::trivial;
    // lambda is in shortlex order, so the first witness is the least one
    for (auto const& l : report.lambda) {
      if (!m.normal_form(l).empty()) {
        report.verdict = UnitsVerdict::nontrivial;
        report.witness = l;
        break;
      }
    }
    detail::fill_delta(m, report, opts);
    return report;
  }

  // If the relators have no overlaps at all, the system is confluent, each
  // relator is its own minimal factorization, and U(M) = 1.
  inline UnitsReport units_via_lemma(SpecialMonoid const& m,
                                     UnitsOptions const&  opts = {}) {
    if (!m.is_overlap_free()) {
      throw std::logic_error("units_via_lemma requires an overlap-free system");
    }
    UnitsReport report;
    for (auto const& u : m.system().relators()) {
      report.factorizations.push_back({u});
    }
    report.lambda      = detail::lambda_from(report.factorizations);
    report.verdict     = UnitsVerdict::trivial;
    report.certificate = UnitsCertificate::overlap_free_lemma;
    detail::fill_delta(m, report, opts);
    return report;
  }

  inline UnitsReport units_trivial(SpecialMonoid const& m,
                                   UnitsOptions const&  opts = {}) {
    if (m.is_overlap_free()) {
      UnitsReport report = units_via_lemma(m, opts);
      if (opts.cross_check) {
        UnitsOptions no_delta = opts;
        no_delta.compute_delta = false;
        auto check = units_via_generators(m, no_delta);
        if (check.verdict != report.verdict
            || check.factorizations != report.factorizations) {
          throw std::logic_error(
              "overlap-free shortcut disagrees with the generator check");
        }
      }
      return report;
    }
    if (m.is_confluent()) {
      return units_via_generators(m, opts);
    }
    UnitsReport report;
    report.delta_note = "not computed: system is not confluent";
    return report;
  }

  inline nlohmann::ordered_json to_json(UnitsReport const& r) {
    auto words = [](std::vector<Word> const& ws) {
      auto j = nlohmann::ordered_json::array();
      for (auto const& w : ws) {
        j.push_back(word_json(w));
      }
      return j;
    };
    nlohmann::ordered_json j;
    j["verdict"]     = to_string(r.verdict);
    j["certificate"] = to_string(r.certificate);
    j["lambda"]      = words(r.lambda);
    j["delta"] = r.delta ? words(*r.delta) : nlohmann::ordered_json(nullptr);
    j["witness"] = r.witness ? word_json(*r.witness)
                             : nlohmann::ordered_json(nullptr);
    j["factorizations"] = nlohmann::ordered_json::array();
    for (auto const& f : r.factorizations) {
      j["factorizations"].push_back(words(f));
    }
    return j;
  }

}  // namespace specmon

#endif  // SPECMON_UNITS_HPP_
