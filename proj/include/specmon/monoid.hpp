// specmon - analysis of finitely presented special monoids

#ifndef SPECMON_MONOID_HPP_
#define SPECMON_MONOID_HPP_

#include <utility>  // for move

#include "error.hpp"        // for Error, Limits
#include "rewrite.hpp"      // for RewritingSystem, is_confluent
#include "wp-language.hpp"  // for WordProblemLanguage

namespace specmon {

  // The monoid presented by a special system, bundled with everything the
  // invertibility and equation machinery queries repeatedly: the occurrence
  // automaton, the confluence verdict, and the word-problem recognizers.
  // Construction runs the confluence test and may throw BudgetExceeded.
  class SpecialMonoid {
   public:
    explicit SpecialMonoid(SpecialSystem sys, Limits limits = {})
        : _rws(std::move(sys)),
          _limits(limits),
          _overlap_free(specmon::is_overlap_free(_rws)),
          _confluent(_overlap_free || specmon::is_confluent(_rws, _limits)),
          _wp(_rws.system()) {}

    RewritingSystem const&     rewriting() const noexcept { return _rws; }
    SpecialSystem const&       system() const noexcept { return _rws.system(); }
    Alphabet const&            alphabet() const noexcept { return _rws.alphabet(); }
    WordProblemLanguage const& language() const noexcept { return _wp; }
    Limits const&              limits() const noexcept { return _limits; }

    bool is_overlap_free() const noexcept { return _overlap_free; }
    bool is_confluent() const noexcept { return _confluent; }

    Word normal_form(Word const& w) const {
      return specmon::normal_form(_rws, w);
    }

    // Equality in M, decided by normal forms.
    bool equal(Word const& u, Word const& v) const {
      require_confluent("deciding equality");
      return normal_form(u) == normal_form(v);
    }

    void require_confluent(char const* what) const {
      if (!_confluent) {
        throw Error(ErrorKind::not_confluent,
                    std::string(what) + " requires a confluent system");
      }
    }

   private:
    RewritingSystem     _rws;
    Limits              _limits;
    bool                _overlap_free;
    bool                _confluent;
    WordProblemLanguage _wp;
  };

}  // namespace specmon

#endif  // SPECMON_MONOID_HPP_
