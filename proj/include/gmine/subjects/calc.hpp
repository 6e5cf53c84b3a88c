#pragma once

#include "gmine/subjects/common.hpp"

// Three-method calculator. The leading operand is always a plain number;
// parenthesized groups are only legal on the right-hand side of an operator,
// tracked by the dispatch in calc_factor.
namespace gmine::subjects {

inline void calc_expr(Stm& stm);

inline void calc_num(Stm& stm) {
  FnScope fn(stm, "calc_num");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("number expected");
  if (!digit09(c)) throw stm.error("number expected");
  while (true) {
    LoopScope it(stm, "calc_num.L1");
    Sym d = stm.peek();
    if (d.is_eof()) return;
    if (!digit09(d)) return;
    stm.next();
  }
}

inline void calc_factor(Stm& stm) {
  FnScope fn(stm, "calc_factor");
  Sym c = stm.peek();
  if (c.eq('(')) {
    stm.next();
    calc_expr(stm);
    stm.expect(')');
    return;
  }
  calc_num(stm);
}

inline void calc_expr(Stm& stm) {
  FnScope fn(stm, "calc_expr");
  calc_num(stm);
  while (true) {
    LoopScope it(stm, "calc_expr.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('+') || c.eq('-') || c.eq('*') || c.eq('/')) {
      stm.next();
      calc_factor(stm);
      continue;
    }
    return;
  }
}

}  // namespace gmine::subjects
