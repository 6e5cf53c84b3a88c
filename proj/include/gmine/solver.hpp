#pragma once

#include <optional>
#include <span>

#include "gmine/alphabet.hpp"
#include "gmine/constraint.hpp"

namespace gmine {

// Finds a character that violates `c` while satisfying every constraint in
// `accumulated`, by exhaustive scan over the alphabet. All recorded
// constraints are single-character comparisons, so the scan is exact.
// Ties break to the lowest code point; no solution yields nullopt.
inline std::optional<char> solve_negation(const Constraint& c,
                                          std::span<const Constraint> accumulated,
                                          const Alphabet& alphabet = Alphabet::standard()) {
  for (char x : alphabet.chars()) {
    if (satisfies(x, c)) continue;
    bool ok = true;
    for (const Constraint& a : accumulated) {
      if (!satisfies(x, a)) {
        ok = false;
        break;
      }
    }
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace gmine
