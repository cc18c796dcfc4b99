// specmon - analysis of finitely presented special monoids
//
// Systems of word equations over a special monoid and a bounded search for
// solutions. Solvability is undecidable in general for these monoids, so
// the search is a semi-decision procedure: it either finds a solution,
// proves unsatisfiability for the patterns w x = 1 and x w = 1, or reports
// that nothing was found within the bound.

#ifndef SPECMON_DIOPHANTINE_HPP_
#define SPECMON_DIOPHANTINE_HPP_

#include <algorithm>    // for find
#include <istream>      // for istream
#include <map>          // for map
#include <optional>     // for optional
#include <sstream>      // for istringstream
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "json.hpp"

#include "error.hpp"   // for Error, Limits
#include "monoid.hpp"  // for SpecialMonoid

namespace specmon {

  struct Term {
    enum class Kind { constant, variable };
    Kind   kind;
    Letter index;  // a letter, or an index into EquationSystem::variables

    static Term constant(Letter x) { return {Kind::constant, x}; }
    static Term variable(Letter v) { return {Kind::variable, v}; }

    bool is_variable() const noexcept { return kind == Kind::variable; }
    bool operator==(Term const&) const = default;
  };

  using Side = std::vector<Term>;

  struct Equation {
    Side lhs;
    Side rhs;
  };

  struct EquationSystem {
    std::vector<std::string> variables;
    std::vector<Equation>    equations;
  };

  using Assignment = std::map<std::string, Word>;

  // Format:
  //
  //   vars: x y
  //   eq: x a y = .
  //
  // Tokens naming a declared variable are variables; every other token must
  // be an alphabet symbol. "." is the empty side.
  inline EquationSystem parse_equations(Alphabet const& A, std::istream& in) {
    EquationSystem eqs;
    bool           have_vars = false;
    std::string    raw;
    size_t         line_no = 0;

    auto parse_side = [&](std::vector<detail::Token> const& toks,
                          size_t                            offset) {
      Side side;
      for (auto const& t : toks) {
        if (t.text == ".") {
          if (toks.size() != 1) {
            throw Error(ErrorKind::syntax_error,
                        "'.' denotes the empty word and must stand alone",
                        line_no, offset + t.column);
          }
          continue;
        }
        auto v = std::find(eqs.variables.begin(), eqs.variables.end(), t.text);
        if (v != eqs.variables.end()) {
          side.push_back(Term::variable(
              static_cast<Letter>(v - eqs.variables.begin())));
        } else if (auto x = A.find(t.text)) {
          side.push_back(Term::constant(*x));
        } else {
          throw Error(ErrorKind::unknown_symbol,
                      "'" + t.text
                          + "' is neither a declared variable nor an alphabet "
                            "symbol",
                      line_no, offset + t.column);
        }
      }
      if (toks.empty()) {
        throw Error(ErrorKind::syntax_error,
                    "empty side; write '.' for the empty word", line_no,
                    offset + 1);
      }
      return side;
    };

    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line(raw);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        continue;
      }
      auto colon = line.find(':', first);
      if (colon == std::string_view::npos) {
        throw Error(ErrorKind::syntax_error, "expected 'vars:' or 'eq:'",
                    line_no, first + 1);
      }
      auto key  = line.substr(first, colon - first);
      auto rest = line.substr(colon + 1);
      if (key == "vars") {
        if (have_vars) {
          throw Error(ErrorKind::syntax_error, "second 'vars:' line", line_no,
                      first + 1);
        }
        if (!eqs.equations.empty()) {
          throw Error(ErrorKind::syntax_error,
                      "'vars:' must precede the equations", line_no,
                      first + 1);
        }
        have_vars = true;
        for (auto const& t : detail::tokenize(rest)) {
          if (!detail::is_valid_symbol_name(t.text)
              || std::find(eqs.variables.begin(), eqs.variables.end(), t.text)
                     != eqs.variables.end()) {
            throw Error(ErrorKind::syntax_error,
                        "invalid or repeated variable name '" + t.text + "'",
                        line_no, colon + 1 + t.column);
          }
          eqs.variables.push_back(t.text);
        }
      } else if (key == "eq") {
        auto eq = rest.find('=');
        if (eq == std::string_view::npos
            || rest.find('=', eq + 1) != std::string_view::npos) {
          throw Error(ErrorKind::syntax_error,
                      "an equation needs exactly one '='", line_no, first + 1);
        }
        size_t const lhs_offset = colon + 1;
        size_t const rhs_offset = colon + 1 + eq + 1;
        Equation     e;
        e.lhs = parse_side(detail::tokenize(rest.substr(0, eq)), lhs_offset);
        e.rhs = parse_side(detail::tokenize(rest.substr(eq + 1)), rhs_offset);
        eqs.equations.push_back(std::move(e));
      } else {
        throw Error(ErrorKind::syntax_error,
                    "unknown key '" + std::string(key) + "'", line_no,
                    first + 1);
      }
    }
    if (eqs.equations.empty()) {
      throw Error(ErrorKind::syntax_error, "no equations", line_no + 1, 1);
    }
    return eqs;
  }

  inline EquationSystem parse_equations(Alphabet const&    A,
                                        std::string const& text) {
    std::istringstream in(text);
    return parse_equations(A, in);
  }

  inline std::string render_side(Alphabet const&       A,
                                 EquationSystem const& eqs,
                                 Side const&           side) {
    if (side.empty()) {
      return ".";
    }
    std::string result;
    for (auto const& t : side) {
      if (!result.empty()) {
        result += ' ';
      }
      result += t.is_variable() ? eqs.variables.at(t.index) : A.name(t.index);
    }
    return result;
  }

  inline Word substitute(EquationSystem const& eqs,
                         Side const&           side,
                         Assignment const&     asg) {
    Word w;
    for (auto const& t : side) {
      if (!t.is_variable()) {
        w.push_back(t.index);
        continue;
      }
      if (t.index >= eqs.variables.size()) {
        throw Error(ErrorKind::undeclared_variable,
                    "variable index " + std::to_string(t.index)
                        + " is not declared");
      }
      auto it = asg.find(eqs.variables[t.index]);
      if (it == asg.end()) {
        throw Error(ErrorKind::undeclared_variable,
                    "variable '" + eqs.variables[t.index]
                        + "' has no assigned value");
      }
      w.insert(w.end(), it->second.begin(), it->second.end());
    }
    return w;
  }

  inline bool check(SpecialMonoid const&  m,
                    EquationSystem const& eqs,
                    Assignment const&     asg) {
    m.require_confluent("checking a solution");
    for (auto const& e : eqs.equations) {
      if (m.normal_form(substitute(eqs, e.lhs, asg))
          != m.normal_form(substitute(eqs, e.rhs, asg))) {
        return false;
      }
    }
    return true;
  }

  enum class SolveStatus { solution, no_solution_within_bound, unsatisfiable };

  inline char const* to_string(SolveStatus s) noexcept {
    switch (s) {
      case SolveStatus::solution: return "solution";
      case SolveStatus::no_solution_within_bound:
        return "no_solution_within_bound";
      case SolveStatus::unsatisfiable: return "unsatisfiable";
    }
    return "no_solution_within_bound";
  }

  struct SolveResult {
    SolveStatus               status;
    std::optional<Assignment> assignment;
    size_t                    checked = 0;  // assignments examined
    std::string               certificate;  // set iff unsatisfiable
  };

  struct SolveOptions {
    bool use_certificates = true;
  };

  namespace detail {
    // w x = 1 (or x w = 1) with w constant and x a single variable: solvable
    // iff w is a prefix (suffix) of the word problem.
    inline std::optional<std::string>
    unit_pattern_certificate(SpecialMonoid const&  m,
                             EquationSystem const& eqs,
                             Equation const&       e) {
      Side const* side = nullptr;
      if (e.rhs.empty()) {
        side = &e.lhs;
      } else if (e.lhs.empty()) {
        side = &e.rhs;
      } else {
        return std::nullopt;
      }
      if (side->empty()) {
        return std::nullopt;
      }
      size_t const n_vars
          = std::count_if(side->begin(), side->end(),
                          [](Term const& t) { return t.is_variable(); });
      if (n_vars != 1) {
        return std::nullopt;
      }
      auto const& A = m.alphabet();
      auto        constants = [&](auto first, auto last) {
        Word w;
        for (; first != last; ++first) {
          w.push_back(first->index);
        }
        return w;
      };
      if (side->back().is_variable()) {
        Word w = constants(side->begin(), side->end() - 1);
        if (!m.language().is_prefix(w)) {
          return render_word(A, w) + " ∉ Prefix(WP): no word x with "
                 + render_side(A, eqs, *side) + " = 1";
        }
      } else if (side->front().is_variable()) {
        Word w = constants(side->begin() + 1, side->end());
        if (!m.language().is_suffix(w)) {
          return render_word(A, w) + " ∉ Suffix(WP): no word x with "
                 + render_side(A, eqs, *side) + " = 1";
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Tries assignments of irreducible words of length at most max_length,
  // ordered lexicographically by variable (first declared variable most
  // significant) and shortlex within each variable, and returns the first
  // that satisfies every equation. Every element of M has exactly one
  // irreducible representative, so no solution within the bound is missed.
  inline SolveResult solve_bounded(SpecialMonoid const&  m,
                                   EquationSystem const& eqs,
                                   size_t                max_length,
                                   SolveOptions const&   opts = {}) {
    m.require_confluent("solving equations");
    if (opts.use_certificates) {
      for (auto const& e : eqs.equations) {
        if (auto cert = detail::unit_pattern_certificate(m, eqs, e)) {
          return {SolveStatus::unsatisfiable, std::nullopt, 0, *cert};
        }
      }
    }
    size_t const cap = m.limits().assignments;
    auto const   candidates
        = irreducible_words(m.rewriting(), max_length, cap);
    size_t const k     = eqs.variables.size();
    size_t       total = 1;
    for (size_t i = 0; i < k; ++i) {
      if (total > cap / candidates.size()) {
        budget_exceeded("assignment space", cap);
      }
      total *= candidates.size();
    }

    std::vector<size_t> choice(k, 0);
    SolveResult         result{SolveStatus::no_solution_within_bound,
                       std::nullopt, 0, {}};
    Assignment          asg;
    for (size_t i = 0; i < k; ++i) {
      asg[eqs.variables[i]] = candidates[0];
    }
    while (true) {
      ++result.checked;
      if (check(m, eqs, asg)) {
        result.status     = SolveStatus::solution;
        result.assignment = asg;
        return result;
      }
      size_t i = k;
      while (i > 0 && choice[i - 1] + 1 == candidates.size()) {
        --i;
        choice[i]             = 0;
        asg[eqs.variables[i]] = candidates[0];
      }
      if (i == 0) {
        break;
      }
      ++choice[i - 1];
      asg[eqs.variables[i - 1]] = candidates[choice[i - 1]];
    }
    return result;
  }

  inline nlohmann::ordered_json to_json(SolveResult const& r) {
    nlohmann::ordered_json j;
    j["status"] = to_string(r.status);
    if (r.assignment) {
      nlohmann::ordered_json a = nlohmann::ordered_json::object();
      for (auto const& [name, w] : *r.assignment) {
        a[name] = word_json(w);
      }
      j["assignment"] = a;
    } else {
      j["assignment"] = nullptr;
    }
    j["checked"]     = r.checked;
    j["certificate"] = r.certificate.empty()
                           ? nlohmann::ordered_json(nullptr)
                           : nlohmann::ordered_json(r.certificate);
    return j;
  }

}  // namespace specmon

#endif  // SPECMON_DIOPHANTINE_HPP_
