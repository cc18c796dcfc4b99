// specmon - analysis of finitely presented special monoids
//
// Alphabets, words and special presentations <A | u_1 = 1, ..., u_k = 1>,
// together with the text file format and canonical JSON rendering.

#ifndef SPECMON_PRESENTATION_HPP_
#define SPECMON_PRESENTATION_HPP_

#include <algorithm>      // for all_of, equal, lexicographical_compare
#include <cctype>         // for isspace
#include <cstdint>        // for uint32_t
#include <istream>        // for istream, getline
#include <optional>       // for optional
#include <sstream>        // for ostringstream, istringstream
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <utility>        // for move
#include <vector>         // for vector

#include "json.hpp"

#include "error.hpp"

namespace specmon {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  struct WordHash {
    size_t operator()(Word const& w) const noexcept {
      // FNV-1a over the letters
      size_t h = 14695981039346656037ull;
      for (Letter x : w) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  // Length-lexicographic (shortlex) order; letters compare by index.
  inline bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  struct ShortlexLess {
    bool operator()(Word const& u, Word const& v) const {
      return shortlex_less(u, v);
    }
  };

  inline Word concat(Word u, Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  inline bool is_factor_at(Word const& w, Word const& f, size_t pos) {
    return pos + f.size() <= w.size()
           && std::equal(f.begin(), f.end(), w.begin() + pos);
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool is_valid_symbol_name(std::string_view s) {
      if (s.empty() || s == ".") {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return c > ' ' && c < 127 && c != '#' && c != ':';
      });
    }

    struct Token {
      std::string text;
      size_t      column;  // 1-based, relative to the parsed string
    };

    inline std::vector<Token> tokenize(std::string_view s) {
      std::vector<Token> result;
      size_t             i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
          ++j;
        }
        if (j > i) {
          result.push_back({std::string(s.substr(i, j - i)), i + 1});
        }
        i = j;
      }
      return result;
    }
  }  // namespace detail

  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> symbols)
        : _symbols(std::move(symbols)) {
      for (size_t i = 0; i < _symbols.size(); ++i) {
        if (!detail::is_valid_symbol_name(_symbols[i])) {
          throw Error(ErrorKind::syntax_error,
                      "invalid symbol name '" + _symbols[i] + "'");
        }
        if (!_index.emplace(_symbols[i], static_cast<Letter>(i)).second) {
          throw Error(ErrorKind::syntax_error,
                      "duplicate symbol name '" + _symbols[i] + "'");
        }
      }
    }

    size_t size() const noexcept { return _symbols.size(); }

    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }

    std::string const& name(Letter x) const { return _symbols.at(x); }

    std::optional<Letter> find(std::string_view name) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    bool single_character_names() const noexcept {
      return std::all_of(_symbols.begin(), _symbols.end(),
                         [](auto const& s) { return s.size() == 1; });
    }

    bool operator==(Alphabet const& that) const {
      return _symbols == that._symbols;
    }

   private:
    std::vector<std::string>                _symbols;
    std::unordered_map<std::string, Letter> _index;
  };

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Can `s` be cut into a sequence of symbol names?
    inline bool segments_into_symbols(Alphabet const& A, std::string_view s) {
      std::vector<bool> reach(s.size() + 1, false);
      reach[0] = true;
      for (size_t i = 0; i < s.size(); ++i) {
        if (!reach[i]) {
          continue;
        }
        for (auto const& name : A.symbols()) {
          if (s.substr(i, name.size()) == name) {
            reach[i + name.size()] = true;
          }
        }
      }
      return reach[s.size()];
    }

    // Parse the tokens of a word; `line` and `column_offset` only decorate
    // error positions.
    inline Word parse_word_tokens(Alphabet const&           A,
                                  std::vector<Token> const& tokens,
                                  size_t                    line          = 0,
                                  size_t                    column_offset = 0) {
      Word w;
      for (auto const& tok : tokens) {
        size_t col = tok.column + column_offset;
        if (tok.text == ".") {
          if (tokens.size() != 1) {
            throw Error(ErrorKind::syntax_error,
                        "'.' denotes the empty word and must stand alone",
                        line, col);
          }
          continue;
        }
        if (auto x = A.find(tok.text)) {
          w.push_back(*x);
          continue;
        }
        if (A.single_character_names()) {
          for (size_t i = 0; i < tok.text.size(); ++i) {
            auto x = A.find(tok.text.substr(i, 1));
            if (!x) {
              throw Error(ErrorKind::unknown_symbol,
                          "unknown symbol '" + tok.text.substr(i, 1) + "'",
                          line, col + i);
            }
            w.push_back(*x);
          }
          continue;
        }
        if (segments_into_symbols(A, tok.text)) {
          throw Error(ErrorKind::ambiguous_compact_form,
                      "unspaced word '" + tok.text
                          + "' is not allowed with multi-character symbol "
                            "names; separate symbols by whitespace",
                      line, col);
        }
        throw Error(ErrorKind::unknown_symbol,
                    "unknown symbol '" + tok.text + "'", line, col);
      }
      return w;
    }
  }  // namespace detail

  inline Word parse_word(Alphabet const& A, std::string_view text) {
    return detail::parse_word_tokens(A, detail::tokenize(text));
  }

  inline std::string render_word(Alphabet const& A, Word const& w) {
    if (w.empty()) {
      return ".";
    }
    bool        compact = A.single_character_names();
    std::string result;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i != 0 && !compact) {
        result += ' ';
      }
      result += A.name(w[i]);
    }
    return result;
  }

  inline nlohmann::ordered_json word_json(Word const& w) {
    return nlohmann::ordered_json(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // SpecialSystem
  ////////////////////////////////////////////////////////////////////////

  class SpecialSystem {
   public:
    SpecialSystem() = default;

    SpecialSystem(Alphabet alphabet, std::vector<Word> relators)
        : _alphabet(std::move(alphabet)), _relators(std::move(relators)) {
      for (size_t i = 0; i < _relators.size(); ++i) {
        if (_relators[i].empty()) {
          throw Error(ErrorKind::empty_relator,
                      "relator " + std::to_string(i) + " is empty");
        }
        for (Letter x : _relators[i]) {
          if (x >= _alphabet.size()) {
            throw Error(ErrorKind::unknown_symbol,
                        "relator " + std::to_string(i)
                            + " uses a letter outside the alphabet");
          }
        }
        for (size_t j = 0; j < i; ++j) {
          if (_relators[i] == _relators[j]) {
            throw Error(ErrorKind::duplicate_relator,
                        "relator " + std::to_string(i)
                            + " duplicates relator " + std::to_string(j));
          }
        }
      }
    }

    Alphabet const&          alphabet() const noexcept { return _alphabet; }
    std::vector<Word> const& relators() const noexcept { return _relators; }
    Word const&              relator(size_t i) const { return _relators.at(i); }
    size_t number_of_relators() const noexcept { return _relators.size(); }

    size_t max_relator_length() const noexcept {
      size_t m = 0;
      for (auto const& u : _relators) {
        m = std::max(m, u.size());
      }
      return m;
    }

    bool operator==(SpecialSystem const& that) const {
      return _alphabet == that._alphabet && _relators == that._relators;
    }

   private:
    Alphabet          _alphabet;
    std::vector<Word> _relators;
  };

  inline std::string render_word(SpecialSystem const& sys, Word const& w) {
    return render_word(sys.alphabet(), w);
  }

  // File format:
  //
  //   # comment
  //   alphabet: a b c
  //   relator: a b
  //   relator: a c b
  inline SpecialSystem parse_presentation(std::istream& in) {
    std::optional<Alphabet> alphabet;
    std::vector<Word>       relators;
    std::vector<size_t>     relator_lines;
    std::string             raw;
    size_t                  line_no = 0;

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
        throw Error(ErrorKind::syntax_error,
                    "expected 'alphabet:' or 'relator:'", line_no, first + 1);
      }
      auto key  = line.substr(first, colon - first);
      auto rest = line.substr(colon + 1);
      auto toks = detail::tokenize(rest);
      if (key == "alphabet") {
        if (alphabet) {
          throw Error(ErrorKind::syntax_error, "second 'alphabet:' line",
                      line_no, first + 1);
        }
        if (toks.empty()) {
          throw Error(ErrorKind::syntax_error, "empty alphabet", line_no,
                      colon + 2);
        }
        std::vector<std::string> names;
        for (auto const& t : toks) {
          if (!detail::is_valid_symbol_name(t.text)) {
            throw Error(ErrorKind::syntax_error,
                        "invalid symbol name '" + t.text + "'", line_no,
                        colon + 1 + t.column);
          }
          if (std::find(names.begin(), names.end(), t.text) != names.end()) {
            throw Error(ErrorKind::syntax_error,
                        "duplicate symbol name '" + t.text + "'", line_no,
                        colon + 1 + t.column);
          }
          names.push_back(t.text);
        }
        alphabet.emplace(std::move(names));
      } else if (key == "relator") {
        if (!alphabet) {
          throw Error(ErrorKind::syntax_error,
                      "'relator:' before the 'alphabet:' line", line_no,
                      first + 1);
        }
        Word u
            = detail::parse_word_tokens(*alphabet, toks, line_no, colon + 1);
        if (u.empty()) {
          throw Error(ErrorKind::empty_relator, "empty relator", line_no,
                      first + 1);
        }
        for (size_t j = 0; j < relators.size(); ++j) {
          if (relators[j] == u) {
            throw Error(ErrorKind::duplicate_relator,
                        "relator duplicates the one on line "
                            + std::to_string(relator_lines[j]),
                        line_no, first + 1);
          }
        }
        relators.push_back(std::move(u));
        relator_lines.push_back(line_no);
      } else {
        throw Error(ErrorKind::syntax_error,
                    "unknown key '" + std::string(key) + "'", line_no,
                    first + 1);
      }
    }
    if (!alphabet) {
      throw Error(ErrorKind::syntax_error, "missing 'alphabet:' line",
                  line_no + 1, 1);
    }
    return SpecialSystem(std::move(*alphabet), std::move(relators));
  }

  inline SpecialSystem parse_presentation(std::string const& text) {
    std::istringstream in(text);
    return parse_presentation(in);
  }

  // Relators are always written with spaces so that the output parses under
  // any alphabet.
  inline std::string render_presentation(SpecialSystem const& sys) {
    std::ostringstream out;
    out << "alphabet:";
    for (auto const& s : sys.alphabet().symbols()) {
      out << ' ' << s;
    }
    out << '\n';
    for (auto const& u : sys.relators()) {
      out << "relator:";
      for (Letter x : u) {
        out << ' ' << sys.alphabet().name(x);
      }
      out << '\n';
    }
    return out.str();
  }

  inline nlohmann::ordered_json to_json(SpecialSystem const& sys) {
    nlohmann::ordered_json j;
    j["alphabet"] = sys.alphabet().symbols();
    j["relators"] = nlohmann::ordered_json::array();
    for (auto const& u : sys.relators()) {
      j["relators"].push_back(word_json(u));
    }
    return j;
  }

}  // namespace specmon

#endif  // SPECMON_PRESENTATION_HPP_
