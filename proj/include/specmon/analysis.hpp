// specmon - analysis of finitely presented special monoids
//
// The full report produced by `specmon analyze`.

#ifndef SPECMON_ANALYSIS_HPP_
#define SPECMON_ANALYSIS_HPP_

#include <chrono>   // for steady_clock
#include <memory>   // for unique_ptr
#include <ostream>  // for ostream
#include <string>   // for string
#include <utility>  // for pair
#include <vector>   // for vector

#include "json.hpp"

#include "monoid.hpp"   // for SpecialMonoid
#include "rewrite.hpp"  // for critical_pairs
#include "units.hpp"    // for UnitsReport

namespace specmon {

  struct AnalysisReport {
    SpecialSystem system;
    size_t        alphabet_size      = 0;
    size_t        rule_count         = 0;
    size_t        max_relator_length = 0;

    size_t                    overlap_count = 0;
    std::vector<CriticalPair> critical_pairs;
    bool                      overlap_free = false;
    bool                      confluent    = false;

    UnitsReport units;

    size_t grammar_productions = 0;
    size_t cnf_productions     = 0;
    size_t cnf_nonterminals    = 0;

    std::vector<std::pair<std::string, double>> timings_ms;
  };

  struct AnalyzeOptions {
    Limits       limits;
    UnitsOptions units;
  };

  namespace detail {
    class PhaseTimer {
     public:
      explicit PhaseTimer(std::vector<std::pair<std::string, double>>& out)
          : _out(out), _last(std::chrono::steady_clock::now()) {}

      void lap(std::string name) {
        auto now = std::chrono::steady_clock::now();
        _out.emplace_back(
            std::move(name),
            std::chrono::duration<double, std::milli>(now - _last).count());
        _last = now;
      }

     private:
      std::vector<std::pair<std::string, double>>& _out;
      std::chrono::steady_clock::time_point        _last;
    };
  }  // namespace detail

  inline AnalysisReport analyze(SpecialSystem const&  sys,
                                AnalyzeOptions const& opts = {}) {
    AnalysisReport r;
    r.system             = sys;
    r.alphabet_size      = sys.alphabet().size();
    r.rule_count         = sys.number_of_relators();
    r.max_relator_length = sys.max_relator_length();

    detail::PhaseTimer timer(r.timings_ms);
    r.critical_pairs = critical_pairs(sys);
    r.overlap_count  = r.critical_pairs.size();
    r.overlap_free   = r.critical_pairs.empty();
    timer.lap("overlaps");

    SpecialMonoid m(sys, opts.limits);
    r.confluent = m.is_confluent();
    timer.lap("confluence_and_grammar");

    r.units = units_trivial(m, opts.units);
    timer.lap("units");

    r.grammar_productions = m.language().grammar().productions.size();
    r.cnf_productions     = m.language().cnf().productions.size();
    r.cnf_nonterminals    = m.language().cnf().nonterminals.size();
    timer.lap("grammar_stats");
    return r;
  }

  inline nlohmann::ordered_json to_json(AnalysisReport const& r,
                                        bool include_timings = true) {
    nlohmann::ordered_json j;
    j["system"] = to_json(r.system);
    j["summary"]
        = {{"alphabet_size", r.alphabet_size},
           {"rule_count", r.rule_count},
           {"max_relator_length", r.max_relator_length}};
    j["overlap_count"]  = r.overlap_count;
    j["critical_pairs"] = nlohmann::ordered_json::array();
    for (auto const& cp : r.critical_pairs) {
      j["critical_pairs"].push_back(to_json(cp));
    }
    j["overlap_free"] = r.overlap_free;
    j["confluent"]    = r.confluent;
    j["units"]        = to_json(r.units);
    j["grammar"]      = {{"productions", r.grammar_productions},
                    {"cnf_productions", r.cnf_productions},
                    {"cnf_nonterminals", r.cnf_nonterminals},
                    {"exact", r.confluent}};
    if (include_timings) {
      nlohmann::ordered_json t = nlohmann::ordered_json::object();
      for (auto const& [name, ms] : r.timings_ms) {
        t[name] = ms;
      }
      j["timings_ms"] = t;
    }
    return j;
  }

}  // namespace specmon

#endif  // SPECMON_ANALYSIS_HPP_
