// specmon - analysis of finitely presented special monoids
//
// Context-free grammars over an Alphabet of terminals: Chomsky normal form,
// CYK membership, prefix and suffix closures, and bounded enumeration.

#ifndef SPECMON_GRAMMAR_HPP_
#define SPECMON_GRAMMAR_HPP_

#include <algorithm>      // for sort, unique, find
#include <cstdint>        // for uint32_t, uint64_t
#include <map>            // for map
#include <set>            // for set
#include <sstream>        // for ostringstream
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for move, pair
#include <vector>         // for vector

#include "json.hpp"

#include "error.hpp"         // for Error, Limits
#include "presentation.hpp"  // for Alphabet, Word

namespace specmon {

  struct Symbol {
    bool          terminal;
    std::uint32_t index;

    static Symbol t(std::uint32_t i) { return {true, i}; }
    static Symbol nt(std::uint32_t i) { return {false, i}; }

    auto operator<=>(Symbol const&) const = default;
  };

  struct Production {
    std::uint32_t       lhs;
    std::vector<Symbol> body;  // empty body is an epsilon production

    auto operator<=>(Production const&) const = default;
  };

  struct Grammar {
    Alphabet                 terminals;
    std::vector<std::string> nonterminals;
    std::uint32_t            start = 0;
    std::vector<Production>  productions;

    // Adds a nonterminal named `hint`, or `hint_k` for the least k that
    // keeps names distinct from each other and from the terminals, so that
    // the text rendering is unambiguous.
    std::uint32_t add_nonterminal(std::string const& hint) {
      if (_names.size() != nonterminals.size()) {
        _names = {nonterminals.begin(), nonterminals.end()};
      }
      std::string name = hint;
      size_t&     k    = _next_suffix[hint];
      while (has_name(name)) {
        name = hint + "_" + std::to_string(++k);
      }
      nonterminals.push_back(name);
      _names.insert(name);
      return static_cast<std::uint32_t>(nonterminals.size() - 1);
    }


    void add(std::uint32_t lhs, std::vector<Symbol> body) {
      productions.push_back({lhs, std::move(body)});
    }

   private:
    bool has_name(std::string const& name) const {
      return terminals.find(name).has_value() || _names.count(name) != 0;
    }

    std::unordered_set<std::string> _names;
    // last suffix tried per hint, so repeated hints stay linear
    std::unordered_map<std::string, size_t> _next_suffix;
  };

  inline void validate(Grammar const& g) {
    if (g.start >= g.nonterminals.size()) {
      throw Error(ErrorKind::syntax_error, "undeclared start symbol");
    }
    for (auto const& p : g.productions) {
      if (p.lhs >= g.nonterminals.size()) {
        throw Error(ErrorKind::syntax_error, "undeclared nonterminal");
      }
      for (auto const& s : p.body) {
        if (s.index >= (s.terminal ? g.terminals.size()
                                   : g.nonterminals.size())) {
          throw Error(ErrorKind::syntax_error, "undeclared symbol in body");
        }
      }
    }
  }

  // One production per line, "S -> a S b", "S -> ." for epsilon.
  inline std::string render(Grammar const& g) {
    std::ostringstream out;
    auto               name = [&g](Symbol s) -> std::string const& {
      return s.terminal ? g.terminals.name(s.index) : g.nonterminals[s.index];
    };
    for (auto const& p : g.productions) {
      out << g.nonterminals[p.lhs] << " ->";
      if (p.body.empty()) {
        out << " .";
      }
      for (auto s : p.body) {
        out << ' ' << name(s);
      }
      out << '\n';
    }
    return out.str();
  }

  inline nlohmann::ordered_json to_json(Grammar const& g) {
    nlohmann::ordered_json j;
    j["terminals"]    = g.terminals.symbols();
    j["nonterminals"] = g.nonterminals;
    j["start"]        = g.nonterminals[g.start];
    auto prods        = nlohmann::ordered_json::array();
    for (auto const& p : g.productions) {
      auto body = nlohmann::ordered_json::array();
      for (auto s : p.body) {
        body.push_back(s.terminal ? g.terminals.name(s.index)
                                  : g.nonterminals[s.index]);
      }
      prods.push_back({{"lhs", g.nonterminals[p.lhs]}, {"body", body}});
    }
    j["productions"] = prods;
    return j;
  }

  namespace detail {
    inline void dedupe_productions(Grammar& g) {
      std::sort(g.productions.begin(), g.productions.end());
      g.productions.erase(
          std::unique(g.productions.begin(), g.productions.end()),
          g.productions.end());
    }

    inline std::vector<bool> nullable_nonterminals(Grammar const& g) {
      std::vector<bool> nullable(g.nonterminals.size(), false);
      for (bool changed = true; changed;) {
        changed = false;
        for (auto const& p : g.productions) {
          if (nullable[p.lhs]) {
            continue;
          }
          if (std::all_of(p.body.begin(), p.body.end(), [&](Symbol s) {
                return !s.terminal && nullable[s.index];
              })) {
            nullable[p.lhs] = true;
            changed         = true;
          }
        }
      }
      return nullable;
    }

    inline std::vector<bool> productive_nonterminals(Grammar const& g) {
      std::vector<bool> productive(g.nonterminals.size(), false);
      for (bool changed = true; changed;) {
        changed = false;
        for (auto const& p : g.productions) {
          if (productive[p.lhs]) {
            continue;
          }
          if (std::all_of(p.body.begin(), p.body.end(), [&](Symbol s) {
                return s.terminal || productive[s.index];
              })) {
            productive[p.lhs] = true;
            changed           = true;
          }
        }
      }
      return productive;
    }

    // Drops non-productive and unreachable nonterminals and renumbers; the
    // start symbol is always kept.
    inline Grammar reduce(Grammar const& g) {
      auto const productive = productive_nonterminals(g);
      auto       usable     = [&](Production const& p) {
        return productive[p.lhs]
               && std::all_of(p.body.begin(), p.body.end(), [&](Symbol s) {
                    return s.terminal || productive[s.index];
                  });
      };
      std::vector<bool>          reachable(g.nonterminals.size(), false);
      std::vector<std::uint32_t> stack{g.start};
      reachable[g.start] = true;
      std::vector<std::vector<size_t>> by_lhs(g.nonterminals.size());
      for (size_t i = 0; i < g.productions.size(); ++i) {
        by_lhs[g.productions[i].lhs].push_back(i);
      }
      while (!stack.empty()) {
        auto A = stack.back();
        stack.pop_back();
        for (size_t i : by_lhs[A]) {
          auto const& p = g.productions[i];
          if (!usable(p)) {
            continue;
          }
          for (auto s : p.body) {
            if (!s.terminal && !reachable[s.index]) {
              reachable[s.index] = true;
              stack.push_back(s.index);
            }
          }
        }
      }
      Grammar r;
      r.terminals = g.terminals;
      std::vector<std::uint32_t> renumber(g.nonterminals.size(), UINT32_MAX);
      for (std::uint32_t A = 0; A < g.nonterminals.size(); ++A) {
        if (reachable[A]) {
          renumber[A] = static_cast<std::uint32_t>(r.nonterminals.size());
          r.nonterminals.push_back(g.nonterminals[A]);
        }
      }
      r.start = renumber[g.start];
      for (auto const& p : g.productions) {
        if (!reachable[p.lhs] || !usable(p)) {
          continue;
        }
        Production q{renumber[p.lhs], p.body};
        for (auto& s : q.body) {
          if (!s.terminal) {
            s.index = renumber[s.index];
          }
        }
        r.productions.push_back(std::move(q));
      }
      return r;
    }
  }  // namespace detail

  inline bool is_cnf(Grammar const& g) {
    for (auto const& p : g.productions) {
      if (p.body.empty()) {
        if (p.lhs != g.start) {
          return false;
        }
      } else if (p.body.size() == 1) {
        if (!p.body[0].terminal) {
          return false;
        }
      } else if (p.body.size() == 2) {
        for (auto s : p.body) {
          if (s.terminal || s.index == g.start) {
            return false;
          }
        }
      } else {
        return false;
      }
    }
    return true;
  }

  // Chomsky normal form: every production is A -> B C, A -> a, or start ->
  // epsilon, and the start symbol never occurs in a body.
  inline Grammar to_cnf(Grammar const& input) {
    validate(input);
    Grammar g = input;

    // fresh start symbol
    auto start = g.add_nonterminal(g.nonterminals[g.start] + "0");
    g.add(start, {Symbol::nt(g.start)});
    g.start = start;

    // terminals inside long bodies
    std::map<std::uint32_t, std::uint32_t> term_nt;
    for (size_t i = 0; i < g.productions.size(); ++i) {
      if (g.productions[i].body.size() < 2) {
        continue;
      }
      for (size_t k = 0; k < g.productions[i].body.size(); ++k) {
        Symbol s = g.productions[i].body[k];
        if (!s.terminal) {
          continue;
        }
        auto it = term_nt.find(s.index);
        if (it == term_nt.end()) {
          auto T = g.add_nonterminal("T_" + g.terminals.name(s.index));
          it     = term_nt.emplace(s.index, T).first;
          g.add(T, {s});
        }
        g.productions[i].body[k] = Symbol::nt(it->second);
      }
    }

    // binarize
    std::vector<Production> binary;
    for (auto& p : g.productions) {
      if (p.body.size() <= 2) {
        binary.push_back(std::move(p));
        continue;
      }
      auto lhs = p.lhs;
      for (size_t k = 0; k + 2 < p.body.size(); ++k) {
        auto rest = g.add_nonterminal(g.nonterminals[p.lhs] + "_b");
        binary.push_back({lhs, {p.body[k], Symbol::nt(rest)}});
        lhs = rest;
      }
      binary.push_back({lhs, {p.body[p.body.size() - 2], p.body.back()}});
    }
    g.productions = std::move(binary);

    // remove epsilon productions
    auto const nullable = detail::nullable_nonterminals(g);
    {
      std::vector<Production> result;
      for (auto const& p : g.productions) {
        if (p.body.empty()) {
          continue;
        }
        result.push_back(p);
        if (p.body.size() == 2) {
          auto X = p.body[0], Y = p.body[1];
          if (!X.terminal && nullable[X.index]) {
            result.push_back({p.lhs, {Y}});
          }
          if (!Y.terminal && nullable[Y.index]) {
            result.push_back({p.lhs, {X}});
          }
        }
      }
      g.productions = std::move(result);
    }

    // remove unit productions A -> B
    size_t const                            N = g.nonterminals.size();
    std::vector<std::vector<std::uint32_t>> unit_edges(N);
    for (auto const& p : g.productions) {
      if (p.body.size() == 1 && !p.body[0].terminal) {
        unit_edges[p.lhs].push_back(p.body[0].index);
      }
    }
    // unit_from[B] = every A with A =>* B by unit productions, A != B
    std::vector<std::vector<std::uint32_t>> unit_from(N);
    for (std::uint32_t A = 0; A < N; ++A) {
      if (unit_edges[A].empty()) {
        continue;
      }
      std::vector<bool>          seen(N, false);
      std::vector<std::uint32_t> stack{A};
      seen[A] = true;
      while (!stack.empty()) {
        auto X = stack.back();
        stack.pop_back();
        for (auto B : unit_edges[X]) {
          if (!seen[B]) {
            seen[B] = true;
            unit_from[B].push_back(A);
            stack.push_back(B);
          }
        }
      }
    }
    {
      std::vector<Production> result;
      for (auto const& p : g.productions) {
        if (p.body.size() == 1 && !p.body[0].terminal) {
          continue;
        }
        result.push_back(p);
        for (auto A : unit_from[p.lhs]) {
          result.push_back({A, p.body});
        }
      }
      g.productions = std::move(result);
    }
    if (nullable[g.start]) {
      g.add(g.start, {});
    }
    detail::dedupe_productions(g);
    return detail::reduce(g);
  }

  ////////////////////////////////////////////////////////////////////////
  // CYK
  ////////////////////////////////////////////////////////////////////////

  // Membership test for a grammar in Chomsky normal form, preprocessed once
  // for repeated queries.
  class CykRecognizer {
   public:
    explicit CykRecognizer(Grammar const& g)
        : _cnf(is_cnf(g) ? g : to_cnf(g)),
          _n(_cnf.nonterminals.size()),
          _blocks((_n + 63) / 64),
          _by_terminal(_cnf.terminals.size()),
          _by_left(_n) {
      for (auto const& p : _cnf.productions) {
        if (p.body.empty()) {
          _accepts_empty = true;
        } else if (p.body.size() == 1) {
          _by_terminal[p.body[0].index].push_back(p.lhs);
        } else {
          _by_left[p.body[0].index].push_back({p.body[1].index, p.lhs});
        }
      }
    }

    Grammar const& grammar() const noexcept { return _cnf; }

    bool accepts(Word const& w) const {
      size_t const n = w.size();
      if (n == 0) {
        return _accepts_empty;
      }
      // cell(i, len) = nonterminals deriving w[i, i + len)
      std::vector<std::uint64_t> table(n * (n + 1) * _blocks, 0);
      auto cell = [&](size_t i, size_t len) {
        return table.data() + (i * (n + 1) + len) * _blocks;
      };
      auto test = [](std::uint64_t const* c, size_t A) {
        return (c[A / 64] >> (A % 64)) & 1u;
      };
      for (size_t i = 0; i < n; ++i) {
        if (w[i] >= _by_terminal.size()) {
          return false;
        }
        for (auto A : _by_terminal[w[i]]) {
          cell(i, 1)[A / 64] |= std::uint64_t(1) << (A % 64);
        }
      }
      for (size_t len = 2; len <= n; ++len) {
        for (size_t i = 0; i + len <= n; ++i) {
          auto* target = cell(i, len);
          for (size_t k = 1; k < len; ++k) {
            auto const* left  = cell(i, k);
            auto const* right = cell(i + k, len - k);
            for (size_t b = 0; b < _blocks; ++b) {
              for (std::uint64_t bits = left[b]; bits != 0; bits &= bits - 1) {
                size_t B = b * 64 + static_cast<size_t>(__builtin_ctzll(bits));
                for (auto [C, A] : _by_left[B]) {
                  if (test(right, C)) {
                    target[A / 64] |= std::uint64_t(1) << (A % 64);
                  }
                }
              }
            }
          }
        }
      }
      return test(cell(0, n), _cnf.start);
    }

   private:
    Grammar _cnf;
    size_t  _n;
    size_t  _blocks;
    bool    _accepts_empty = false;
    // terminal -> nonterminals A with A -> terminal
    std::vector<std::vector<std::uint32_t>> _by_terminal;
    // B -> pairs (C, A) with A -> B C
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> _by_left;
  };

  inline bool member(Grammar const& g, Word const& w) {
    return CykRecognizer(g).accepts(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Prefix and suffix closures
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // For each nonterminal A a copy A' deriving the prefixes (suffixes) of
    // L(A): A' -> epsilon, and for every A -> X_1 ... X_n and every i,
    // A' -> X_1 ... X_{i-1} X_i' (mirror image for suffixes), where t' = t
    // for a terminal. Requires every symbol to be productive, hence the
    // reduction first.
    inline Grammar closure(Grammar const& input, bool prefixes) {
      validate(input);
      Grammar g = reduce(input);
      Grammar r;
      r.terminals    = g.terminals;
      r.nonterminals = g.nonterminals;
      auto const productive = productive_nonterminals(g);
      if (!productive[g.start]) {
        // L(g) is empty and so is its closure
        r.start = r.add_nonterminal(g.nonterminals[g.start] + "'");
        return r;
      }
      size_t const               N = g.nonterminals.size();
      std::vector<std::uint32_t> primed(N);
      for (std::uint32_t A = 0; A < N; ++A) {
        primed[A] = r.add_nonterminal(g.nonterminals[A] + "'");
      }
      r.productions = g.productions;
      auto prime    = [&](Symbol s) {
        return s.terminal ? s : Symbol::nt(primed[s.index]);
      };
      for (std::uint32_t A = 0; A < N; ++A) {
        r.add(primed[A], {});
      }
      for (auto const& p : g.productions) {
        size_t const n = p.body.size();
        for (size_t i = 0; i < n; ++i) {
          std::vector<Symbol> body;
          if (prefixes) {
            body.assign(p.body.begin(), p.body.begin() + i);
            body.push_back(prime(p.body[i]));
          } else {
            body.push_back(prime(p.body[i]));
            body.insert(body.end(), p.body.begin() + i + 1, p.body.end());
          }
          r.add(primed[p.lhs], std::move(body));
        }
      }
      r.start = primed[g.start];
      dedupe_productions(r);
      return reduce(r);
    }
  }  // namespace detail

  // {p : p x in L(g) for some x}
  inline Grammar prefix_closure(Grammar const& g) {
    return detail::closure(g, true);
  }

  // {s : x s in L(g) for some x}
  inline Grammar suffix_closure(Grammar const& g) {
    return detail::closure(g, false);
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  // All words of L(g) of length at most max_length, in shortlex order. The
  // words of each length are built bottom-up per nonterminal from the CNF.
  inline std::vector<Word> enumerate(Grammar const& g,
                                     size_t         max_length,
                                     size_t         cap = 1'000'000) {
    Grammar const cnf = is_cnf(g) ? g : to_cnf(g);
    size_t const  N   = cnf.nonterminals.size();
    using Layer       = std::set<Word>;
    // words[A][len]
    std::vector<std::vector<Layer>> words(N,
                                          std::vector<Layer>(max_length + 1));
    size_t total = 0;
    auto   note  = [&](bool inserted) {
      if (inserted && ++total > cap) {
        budget_exceeded("grammar enumeration", cap);
      }
    };
    bool accepts_empty = false;
    for (auto const& p : cnf.productions) {
      if (p.body.empty()) {
        accepts_empty = true;
      } else if (p.body.size() == 1 && max_length >= 1) {
        note(words[p.lhs][1].insert(Word{p.body[0].index}).second);
      }
    }
    for (size_t len = 2; len <= max_length; ++len) {
      for (auto const& p : cnf.productions) {
        if (p.body.size() != 2) {
          continue;
        }
        auto B = p.body[0].index, C = p.body[1].index;
        for (size_t k = 1; k < len; ++k) {
          for (auto const& x : words[B][k]) {
            for (auto const& y : words[C][len - k]) {
              note(words[p.lhs][len].insert(concat(x, y)).second);
            }
          }
        }
      }
    }
    std::vector<Word> result;
    if (accepts_empty) {
      result.emplace_back();
    }
    for (size_t len = 1; len <= max_length; ++len) {
      auto const& layer = words[cnf.start][len];
      result.insert(result.end(), layer.begin(), layer.end());
    }
    return result;
  }

}  // namespace specmon

#endif  // SPECMON_GRAMMAR_HPP_
