// specmon - analysis of finitely presented special monoids
//
// Umbrella header.

#ifndef SPECMON_SPECMON_HPP_
#define SPECMON_SPECMON_HPP_

#include "aho-corasick.hpp"
#include "analysis.hpp"
#include "diophantine.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "grammar.hpp"
#include "monoid.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "units.hpp"
#include "wp-language.hpp"

#endif  // SPECMON_SPECMON_HPP_
