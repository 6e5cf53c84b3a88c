#pragma once

#include "gmine/subjects/common.hpp"

// Four-method infix expression parser over the digits 1-3.
namespace gmine::subjects {

inline void expr_expr(Stm& stm);

inline void expr_digit(Stm& stm) {
  FnScope fn(stm, "digit");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("digit expected");
  if (c.eq('1') || c.eq('2') || c.eq('3')) return;
  throw stm.error("digit expected");
}

inline void expr_factor(Stm& stm) {
  FnScope fn(stm, "factor");
  Sym c = stm.peek();
  if (c.eq('(')) {
    stm.next();
    expr_expr(stm);
    stm.expect(')');
    return;
  }
  expr_digit(stm);
}

inline void expr_term(Stm& stm) {
  FnScope fn(stm, "term");
  expr_factor(stm);
  while (true) {
    LoopScope it(stm, "term.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('*') || c.eq('/')) {
      stm.next();
      expr_factor(stm);
      continue;
    }
    return;
  }
}

inline void expr_expr(Stm& stm) {
  FnScope fn(stm, "expr");
  expr_term(stm);
  while (true) {
    LoopScope it(stm, "expr.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('+') || c.eq('-')) {
      stm.next();
      expr_term(stm);
      continue;
    }
    return;
  }
}

}  // namespace gmine::subjects
