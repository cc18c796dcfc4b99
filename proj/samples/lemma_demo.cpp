// specmon - analysis of finitely presented special monoids
//
// Generates a few overlap-free systems and shows that the overlap-free
// shortcut and the generator check both find U(M) trivial, while the two
// smallest systems with overlaps have non-trivial units.

#include <iostream>

#include "specmon/specmon.hpp"

using namespace specmon;

namespace {
  void show(char const* name, SpecialSystem const& sys) {
    SpecialMonoid m(sys);
    std::cout << name << ": " << sys.number_of_relators() << " relators, "
              << (m.is_overlap_free() ? "overlap-free" : "has overlaps")
              << ", " << (m.is_confluent() ? "confluent" : "not confluent");
    auto report = units_trivial(m);
    std::cout << ", U(M) " << to_string(report.verdict) << " via "
              << to_string(report.certificate);
    if (m.is_overlap_free()) {
      auto check = units_via_generators(m);
      std::cout << " (generator check: " << to_string(check.verdict) << ")";
    }
    if (report.witness) {
      std::cout << ", witness " << render_word(sys, *report.witness);
    }
    std::cout << '\n';
  }
}  // namespace

int main() {
  show("bicyclic", samples::bicyclic());
  show("z2", samples::z2());
  show("integers", samples::integers());
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto sys = random_overlap_free_system(seed);
    std::cout << render_presentation(sys);
    show("random", sys);
  }
}
