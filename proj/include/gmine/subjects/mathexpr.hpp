#pragma once

#include <string>

#include "gmine/subjects/common.hpp"

// Math expression parser with named constants and functions. Names are read
// as whole words and validated against the known vocabulary; arity is fixed
// per function name.
namespace gmine::subjects {

inline void math_expr(Stm& stm);

inline void math_digit(Stm& stm) {
  FnScope fn(stm, "mathdigit");
  Sym c = stm.next();
  if (c.is_eof() || !digit09(c)) throw stm.error("digit expected");
}

inline void math_fraction(Stm& stm) {
  FnScope fn(stm, "fraction");
  math_digit(stm);
  while (true) {
    LoopScope it(stm, "fraction.L1");
    Sym d = stm.peek();
    if (d.is_eof() || !digit09(d)) return;
    math_digit(stm);
  }
}

inline void math_number(Stm& stm) {
  FnScope fn(stm, "number");
  math_digit(stm);
  while (true) {
    LoopScope it(stm, "number.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (digit09(c)) {
      math_digit(stm);
      continue;
    }
    if (c.eq('.')) {
      stm.next();
      math_fraction(stm);
    }
    return;
  }
}

// Reads a whole name; the vocabulary is finite, so the word is one atomic
// scope rather than a per-letter repetition.
inline std::string math_word(Stm& stm) {
  FnScope fn(stm, "word");
  std::string name;
  while (true) {
    Sym d = stm.peek();
    if (d.is_eof()) break;
    if (!letter_az(d)) break;
    name.push_back(d.ch());
    stm.next();
  }
  if (name.empty()) throw stm.error("name expected");
  return name;
}

inline void math_args(Stm& stm, int arity) {
  FnScope fn(stm, "args");
  stm.expect('(');
  math_expr(stm);
  if (arity == 2) {
    stm.expect(',');
    math_expr(stm);
  }
  stm.expect(')');
}

inline bool math_is_fun1(const std::string& w) {
  return w == "sin" || w == "cos" || w == "tan" || w == "log" || w == "sqrt";
}

inline bool math_is_fun2(const std::string& w) { return w == "min" || w == "max"; }

inline bool math_is_const(const std::string& w) {
  return w == "pi" || w == "e" || w == "x" || w == "y";
}

inline void math_factor(Stm& stm) {
  FnScope fn(stm, "factor");
  Sym c = stm.peek();
  if (c.eq('(')) {
    stm.next();
    math_expr(stm);
    stm.expect(')');
    return;
  }
  if (c.eq('-')) {
    stm.next();
    math_factor(stm);
    return;
  }
  if (letter_az(c)) {
    std::string w = math_word(stm);
    if (math_is_fun1(w)) return math_args(stm, 1);
    if (math_is_fun2(w)) return math_args(stm, 2);
    if (math_is_const(w)) return;
    throw stm.error("unknown name: " + w);
  }
  math_number(stm);
}

inline void math_term(Stm& stm) {
  FnScope fn(stm, "term");
  math_factor(stm);
  while (true) {
    LoopScope it(stm, "term.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('*') || c.eq('/') || c.eq('%')) {
      stm.next();
      math_factor(stm);
      continue;
    }
    return;
  }
}

inline void math_expr(Stm& stm) {
  FnScope fn(stm, "expr");
  math_term(stm);
  while (true) {
    LoopScope it(stm, "expr.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('+') || c.eq('-')) {
      stm.next();
      math_term(stm);
      continue;
    }
    return;
  }
}

inline void mathexpr(Stm& stm) {
  FnScope fn(stm, "mathexpr");
  math_expr(stm);
}

}  // namespace gmine::subjects
