#pragma once

#include "gmine/subjects/common.hpp"

// Six-method expression parser with unary minus and right-associative
// exponentiation, digits 1-3.
namespace gmine::subjects {

inline void advexpr_expr(Stm& stm);

inline void advexpr_digit(Stm& stm) {
  FnScope fn(stm, "digit");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("digit expected");
  if (c.eq('1') || c.eq('2') || c.eq('3')) return;
  throw stm.error("digit expected");
}

inline void advexpr_factor(Stm& stm) {
  FnScope fn(stm, "factor");
  Sym c = stm.peek();
  if (c.eq('(')) {
    stm.next();
    advexpr_expr(stm);
    stm.expect(')');
    return;
  }
  advexpr_digit(stm);
}

inline void advexpr_power(Stm& stm) {
  FnScope fn(stm, "power");
  advexpr_factor(stm);
  Sym c = stm.peek();
  if (c.is_eof()) return;
  if (c.eq('^')) {
    stm.next();
    advexpr_power(stm);
  }
}

inline void advexpr_unary(Stm& stm) {
  FnScope fn(stm, "unary");
  Sym c = stm.peek();
  if (c.eq('-')) {
    stm.next();
    advexpr_unary(stm);
    return;
  }
  advexpr_power(stm);
}

inline void advexpr_term(Stm& stm) {
  FnScope fn(stm, "term");
  advexpr_unary(stm);
  while (true) {
    LoopScope it(stm, "term.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('*') || c.eq('/')) {
      stm.next();
      advexpr_unary(stm);
      continue;
    }
    return;
  }
}

inline void advexpr_expr(Stm& stm) {
  FnScope fn(stm, "expr");
  advexpr_term(stm);
  while (true) {
    LoopScope it(stm, "expr.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('+') || c.eq('-')) {
      stm.next();
      advexpr_term(stm);
      continue;
    }
    return;
  }
}

}  // namespace gmine::subjects
