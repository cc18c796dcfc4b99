// specmon - analysis of finitely presented special monoids

#include <random>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "specmon/presentation.hpp"

using namespace specmon;

namespace {
  ErrorKind kind_of(auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::syntax_error;
  }
}  // namespace

TEST_CASE("parse_presentation: examples", "[presentation]") {
  auto sys = parse_presentation("alphabet: a b\nrelator: a b");
  REQUIRE(sys.alphabet().symbols() == std::vector<std::string>{"a", "b"});
  REQUIRE(sys.relators() == std::vector<Word>{{0, 1}});

  auto z2 = parse_presentation("alphabet: a\nrelator: a a");
  REQUIRE(z2.alphabet().symbols() == std::vector<std::string>{"a"});
  REQUIRE(z2.relators() == std::vector<Word>{{0, 0}});

  REQUIRE(kind_of([] { parse_presentation("alphabet: a\nrelator:"); })
          == ErrorKind::empty_relator);
  REQUIRE(kind_of([] { parse_presentation("alphabet: a\nrelator: ."); })
          == ErrorKind::empty_relator);
}

TEST_CASE("parse_presentation: comments, order, compact relators",
          "[presentation]") {
  auto sys = parse_presentation("# header\n"
                                "alphabet: a b c   # three letters\n"
                                "\n"
                                "relator: acb\n"
                                "relator: b a\n");
  REQUIRE(sys.relators() == std::vector<Word>{{0, 2, 1}, {1, 0}});
}

TEST_CASE("parse_presentation: errors carry positions", "[presentation]") {
  try {
    parse_presentation("alphabet: a b\nrelator: a x b\n");
    FAIL("expected an error");
  } catch (Error const& e) {
    REQUIRE(e.kind() == ErrorKind::unknown_symbol);
    REQUIRE(e.line() == 2);
    REQUIRE(e.column() == 12);
  }
  REQUIRE(kind_of([] {
            parse_presentation("alphabet: a b\nrelator: a b\nrelator: ab");
          })
          == ErrorKind::duplicate_relator);
  REQUIRE(kind_of([] { parse_presentation("relator: a\nalphabet: a"); })
          == ErrorKind::syntax_error);
  REQUIRE(kind_of([] { parse_presentation("alphabet: a a"); })
          == ErrorKind::syntax_error);
  REQUIRE(kind_of([] { parse_presentation("alphabet: a\nrule: a"); })
          == ErrorKind::syntax_error);
  REQUIRE(kind_of([] { parse_presentation("# nothing"); })
          == ErrorKind::syntax_error);
  REQUIRE(kind_of([] { parse_presentation("alphabet: a\nalphabet: b"); })
          == ErrorKind::syntax_error);
}

TEST_CASE("SpecialSystem: invariants enforced on construction",
          "[presentation]") {
  Alphabet A({"a", "b"});
  REQUIRE(kind_of([&] { SpecialSystem(A, {{}}); })
          == ErrorKind::empty_relator);
  REQUIRE(kind_of([&] { SpecialSystem(A, {{0, 1}, {0, 1}}); })
          == ErrorKind::duplicate_relator);
  REQUIRE(kind_of([&] { SpecialSystem(A, {{0, 2}}); })
          == ErrorKind::unknown_symbol);
}

TEST_CASE("parse_word: examples", "[presentation]") {
  Alphabet ab({"a", "b"});
  REQUIRE(parse_word(ab, "ab") == Word{0, 1});
  REQUIRE(parse_word(ab, "a b") == Word{0, 1});
  REQUIRE(parse_word(ab, ".").empty());
  REQUIRE(parse_word(ab, "").empty());

  Alphabet multi({"ab", "cd"});
  REQUIRE(kind_of([&] { parse_word(multi, "abcd"); })
          == ErrorKind::ambiguous_compact_form);
  REQUIRE(parse_word(multi, "ab cd ab") == Word{0, 1, 0});
  REQUIRE(kind_of([&] { parse_word(multi, "xy"); })
          == ErrorKind::unknown_symbol);
  REQUIRE(kind_of([&] { parse_word(ab, "abx"); })
          == ErrorKind::unknown_symbol);
  REQUIRE(kind_of([&] { parse_word(ab, "a . b"); })
          == ErrorKind::syntax_error);
}

TEST_CASE("render then parse is the identity", "[presentation][property]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    // alternate between single-letter and multi-letter names
    std::vector<std::string> names;
    size_t const             n = 1 + rng() % 4;
    for (size_t i = 0; i < n; ++i) {
      names.push_back(trial % 2 == 0 ? std::string(1, 'a' + i)
                                     : "g" + std::to_string(i) + "x");
    }
    Alphabet A(names);
    for (int k = 0; k < 10; ++k) {
      Word w = random_word(rng, n, rng() % 8);
      REQUIRE(parse_word(A, render_word(A, w)) == w);
    }
    auto sys = oracle::random_system(rng, n, 5, 6);
    SpecialSystem renamed(A, sys.relators());
    REQUIRE(parse_presentation(render_presentation(renamed)) == renamed);
  }
}

TEST_CASE("canonical JSON", "[presentation]") {
  auto sys = parse_presentation("alphabet: a b\nrelator: a b\nrelator: b a");
  REQUIRE(to_json(sys).dump()
          == R"({"alphabet":["a","b"],"relators":[[0,1],[1,0]]})");
}

TEST_CASE("shortlex order", "[presentation]") {
  REQUIRE(shortlex_less({1}, {0, 0}));
  REQUIRE(shortlex_less({0, 1}, {1, 0}));
  REQUIRE_FALSE(shortlex_less({0, 1}, {0, 1}));
  REQUIRE(shortlex_less({}, {0}));
}
