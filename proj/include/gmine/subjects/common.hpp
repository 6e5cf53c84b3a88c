#pragma once

#include "gmine/stream.hpp"

namespace gmine::subjects {

// Character tests written as individual comparisons so every rejected
// branch leaves a solvable constraint behind.
inline bool digit09(const Sym& c) {
  return c.eq('0') || c.eq('1') || c.eq('2') || c.eq('3') || c.eq('4') || c.eq('5') ||
         c.eq('6') || c.eq('7') || c.eq('8') || c.eq('9');
}

inline bool letter_az(const Sym& c) {
  return c.eq('a') || c.eq('b') || c.eq('c') || c.eq('d') || c.eq('e') || c.eq('f') ||
         c.eq('g') || c.eq('h') || c.eq('i') || c.eq('j') || c.eq('k') || c.eq('l') ||
         c.eq('m') || c.eq('n') || c.eq('o') || c.eq('p') || c.eq('q') || c.eq('r') ||
         c.eq('s') || c.eq('t') || c.eq('u') || c.eq('v') || c.eq('w') || c.eq('x') ||
         c.eq('y') || c.eq('z');
}

inline void expect_word(Stm& stm, std::string_view rest) {
  for (char c : rest) stm.expect(c);
}

// Element-by-element membership test, one recorded comparison per candidate
// character (the way interpreted `in` checks execute).
inline bool in_chars(const Sym& c, std::string_view set) {
  for (char x : set) {
    if (c.eq(x)) return true;
  }
  return false;
}

}  // namespace gmine::subjects
