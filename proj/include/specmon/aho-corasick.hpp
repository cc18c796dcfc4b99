// specmon - analysis of finitely presented special monoids
//
// Aho-Corasick automaton over a dense integer alphabet. The goto function is
// completed into a DFA at construction, so scanning is one table lookup per
// letter.

#ifndef SPECMON_AHO_CORASICK_HPP_
#define SPECMON_AHO_CORASICK_HPP_

#include <cstdint>  // for uint32_t
#include <queue>    // for queue
#include <vector>   // for vector

#include "presentation.hpp"  // for Word, Letter

namespace specmon {

  class AhoCorasick {
   public:
    using state_type = std::uint32_t;

    static constexpr state_type root = 0;

    AhoCorasick() : AhoCorasick(0, {}) {}

    AhoCorasick(size_t alphabet_size, std::vector<Word> const& patterns)
        : _n(alphabet_size), _pattern_lengths() {
      new_state(0);
      for (size_t p = 0; p < patterns.size(); ++p) {
        state_type s = root;
        for (Letter x : patterns[p]) {
          if (_goto[s * _n + x] == missing) {
            auto t             = new_state(_depth[s] + 1);
            _goto[s * _n + x] = t;
          }
          s = _goto[s * _n + x];
        }
        _own[s].push_back(static_cast<std::uint32_t>(p));
        _pattern_lengths.push_back(patterns[p].size());
      }
      build_failure_links();
    }

    size_t alphabet_size() const noexcept { return _n; }
    size_t number_of_states() const noexcept { return _depth.size(); }
    size_t number_of_patterns() const noexcept {
      return _pattern_lengths.size();
    }
    size_t pattern_length(size_t p) const { return _pattern_lengths[p]; }

    state_type next(state_type s, Letter x) const noexcept {
      return _goto[s * _n + x];
    }

    // Indices of every pattern that is a suffix of the path to s.
    std::vector<std::uint32_t> const& matches(state_type s) const noexcept {
      return _out[s];
    }

    // True if the path to s has a pattern as a suffix, i.e. the automaton
    // has just seen an occurrence.
    bool is_match(state_type s) const noexcept { return !_out[s].empty(); }

    // Calls f(end, pattern) for every occurrence, `end` being one past the
    // last letter. Stops early if f returns false.
    template <typename Func>
    void scan(Word const& w, size_t from, Func&& f) const {
      state_type s = root;
      for (size_t i = from; i < w.size(); ++i) {
        s = next(s, w[i]);
        for (auto p : _out[s]) {
          if (!f(i + 1, p)) {
            return;
          }
        }
      }
    }

   private:
    static constexpr state_type missing = static_cast<state_type>(-1);

    state_type new_state(size_t depth) {
      _goto.resize(_goto.size() + _n, missing);
      _depth.push_back(depth);
      _own.emplace_back();
      return static_cast<state_type>(_depth.size() - 1);
    }

    void build_failure_links() {
      size_t const N = _depth.size();
      _fail.assign(N, root);
      _out.assign(N, {});
      std::queue<state_type> queue;
      for (Letter x = 0; x < _n; ++x) {
        state_type& t = _goto[root * _n + x];
        if (t == missing) {
          t = root;
        } else {
          _fail[t] = root;
          queue.push(t);
        }
      }
      _out[root] = _own[root];
      while (!queue.empty()) {
        state_type s = queue.front();
        queue.pop();
        // BFS order guarantees _out[_fail[s]] is final
        _out[s] = _own[s];
        auto const& inherited = _out[_fail[s]];
        _out[s].insert(_out[s].end(), inherited.begin(), inherited.end());
        for (Letter x = 0; x < _n; ++x) {
          state_type& t = _goto[s * _n + x];
          if (t == missing) {
            t = _goto[_fail[s] * _n + x];
          } else {
            _fail[t] = _goto[_fail[s] * _n + x];
            queue.push(t);
          }
        }
      }
    }

    size_t                                  _n;
    std::vector<state_type>                 _goto;
    std::vector<size_t>                     _depth;
    std::vector<state_type>                 _fail;
    std::vector<std::vector<std::uint32_t>> _own;
    std::vector<std::vector<std::uint32_t>> _out;
    std::vector<size_t>                     _pattern_lengths;
  };

}  // namespace specmon

#endif  // SPECMON_AHO_CORASICK_HPP_
