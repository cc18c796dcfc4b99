// specmon - analysis of finitely presented special monoids
//
// Seeded random systems and words for tests, benchmarks and `specmon sample`.

#ifndef SPECMON_GENERATORS_HPP_
#define SPECMON_GENERATORS_HPP_

#include <cmath>     // for ldexp
#include <cstdint>   // for uint64_t
#include <random>    // for mt19937_64, uniform_int_distribution
#include <set>       // for set
#include <stdexcept> // for invalid_argument
#include <vector>    // for vector

#include "presentation.hpp"  // for SpecialSystem, Word

namespace specmon {

  struct OverlapFreeParams {
    size_t min_rules    = 2;
    size_t max_rules    = 8;
    size_t min_interior = 1;
    size_t max_interior = 6;
  };

  // Relators a x_1 ... x_m b over {a, b, c, d} with x_i in {c, d}. The letter
  // a occurs only first and b only last in every relator, so no relator
  // occurs inside another and no proper suffix of one is a prefix of
  // another: the system is overlap-free by construction.
  inline SpecialSystem random_overlap_free_system(std::uint64_t            seed,
                                                  OverlapFreeParams const& p
                                                  = {}) {
    if (p.min_rules > p.max_rules || p.min_interior > p.max_interior
        || p.min_interior == 0) {
      throw std::invalid_argument("random_overlap_free_system: bad ranges");
    }
    // 2^min + ... + 2^max distinct relators exist
    double available = 0;
    for (size_t m = p.min_interior; m <= p.max_interior; ++m) {
      available += std::ldexp(1.0, static_cast<int>(m));
    }
    if (available < static_cast<double>(p.max_rules)) {
      throw std::invalid_argument(
          "random_overlap_free_system: not enough distinct relators");
    }
    std::mt19937_64                       rng(seed);
    std::uniform_int_distribution<size_t> rules(p.min_rules, p.max_rules);
    std::uniform_int_distribution<size_t> interior(p.min_interior,
                                                   p.max_interior);
    std::uniform_int_distribution<Letter> c_or_d(2, 3);
    size_t const                          k = rules(rng);
    std::set<Word>                        seen;
    std::vector<Word>                     relators;
    while (relators.size() < k) {
      Word u{0};
      for (size_t m = interior(rng); m > 0; --m) {
        u.push_back(c_or_d(rng));
      }
      u.push_back(1);
      if (seen.insert(u).second) {
        relators.push_back(std::move(u));
      }
    }
    return SpecialSystem(Alphabet({"a", "b", "c", "d"}), std::move(relators));
  }

  template <typename Rng>
  Word random_word(Rng& rng, size_t alphabet_size, size_t length) {
    std::uniform_int_distribution<Letter> letter(
        0, static_cast<Letter>(alphabet_size - 1));
    Word w(length);
    for (auto& x : w) {
      x = letter(rng);
    }
    return w;
  }

  // A word that rewrites to 1: relators inserted at random positions into a
  // growing word, up to the length bound.
  template <typename Rng>
  Word random_erasable_word(Rng& rng, SpecialSystem const& sys,
                            size_t max_length) {
    Word                                  w;
    auto const&                           R = sys.relators();
    std::uniform_int_distribution<size_t> pick(0, R.size() - 1);
    for (size_t attempts = 0; attempts < 4 * max_length + 4; ++attempts) {
      Word const& u = R[pick(rng)];
      if (w.size() + u.size() > max_length) {
        continue;
      }
      std::uniform_int_distribution<size_t> where(0, w.size());
      w.insert(w.begin() + where(rng), u.begin(), u.end());
    }
    return w;
  }

  // The systems used throughout the documentation and tests.
  namespace samples {
    // <a, b | ab = 1>, the bicyclic monoid
    inline SpecialSystem bicyclic() {
      return SpecialSystem(Alphabet({"a", "b"}), {{0, 1}});
    }
    // <a | aa = 1>, the group of order two
    inline SpecialSystem z2() {
      return SpecialSystem(Alphabet({"a"}), {{0, 0}});
    }
    // <a, b | ab = 1, ba = 1>, the infinite cyclic group
    inline SpecialSystem integers() {
      return SpecialSystem(Alphabet({"a", "b"}), {{0, 1}, {1, 0}});
    }
  }  // namespace samples

}  // namespace specmon

#endif  // SPECMON_GENERATORS_HPP_
