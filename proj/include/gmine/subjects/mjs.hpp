#pragma once

#include "gmine/subjects/common.hpp"

// Reduced JavaScript syntax parser: statements (let/if/while/for/return,
// blocks, assignment statements) over an expression grammar with ternary,
// logical, comparison and arithmetic operators, calls, indexing, and
// array/object/string/number literals. Identifiers are single letters from
// {a,b,c,x,y,z}; only syntax is checked.
namespace gmine::subjects {

inline void mjs_expression(Stm& stm);
inline void mjs_statement(Stm& stm);

inline void mjs_num_digit(Stm& stm) {
  FnScope fn(stm, "num_digit");
  Sym c = stm.next();
  if (c.is_eof() || !digit09(c)) throw stm.error("digit expected");
}

// Digits after the first, which the dispatching caller consumed.
inline void mjs_number(Stm& stm) {
  FnScope fn(stm, "number");
  while (true) {
    LoopScope it(stm, "number.L1");
    Sym c = stm.peek();
    if (c.is_eof() || !digit09(c)) return;
    mjs_num_digit(stm);
  }
}

inline void mjs_identifier(Stm& stm) {
  FnScope fn(stm, "identifier");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("identifier expected");
  if (c.eq('a') || c.eq('b') || c.eq('c') || c.eq('x') || c.eq('y') || c.eq('z')) return;
  throw stm.error("identifier expected");
}

inline void mjs_str_char(Stm& stm) {
  FnScope fn(stm, "str_char");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("unterminated string");
}

inline void mjs_string_lit(Stm& stm) {
  FnScope fn(stm, "string_lit");
  while (true) {
    LoopScope it(stm, "string_lit.L1");
    Sym c = stm.peek();
    if (c.is_eof()) throw stm.error("unterminated string");
    if (c.eq('\'')) break;
    mjs_str_char(stm);
  }
  stm.next();  // closing quote
}

inline void mjs_bool_null(Stm& stm) {
  FnScope fn(stm, "bool_null");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("literal expected");
  if (c.eq('t')) return expect_word(stm, "rue");
  if (c.eq('f')) return expect_word(stm, "alse");
  if (c.eq('n')) return expect_word(stm, "ull");
  throw stm.error("literal expected");
}

inline void mjs_elems(Stm& stm) {
  FnScope fn(stm, "elems");
  mjs_expression(stm);
  while (true) {
    LoopScope it(stm, "elems.L1");
    Sym c = stm.peek();
    if (c.is_eof() || !c.eq(',')) return;
    stm.next();
    mjs_expression(stm);
  }
}

inline void mjs_array_lit(Stm& stm) {
  FnScope fn(stm, "array_lit");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("unterminated array");
  if (c.eq(']')) {
    stm.next();
    return;
  }
  mjs_elems(stm);
  stm.expect(']');
}

inline void mjs_prop(Stm& stm) {
  FnScope fn(stm, "prop");
  mjs_identifier(stm);
  stm.expect(':');
  mjs_expression(stm);
}

inline void mjs_props(Stm& stm) {
  FnScope fn(stm, "props");
  mjs_prop(stm);
  while (true) {
    LoopScope it(stm, "props.L1");
    Sym c = stm.peek();
    if (c.is_eof() || !c.eq(',')) return;
    stm.next();
    mjs_prop(stm);
  }
}

inline void mjs_object_lit(Stm& stm) {
  FnScope fn(stm, "object_lit");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("unterminated object");
  if (c.eq('}')) {
    stm.next();
    return;
  }
  mjs_props(stm);
  stm.expect('}');
}

inline void mjs_call_args(Stm& stm) {
  FnScope fn(stm, "call_args");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("unterminated call");
  if (c.eq(')')) {
    stm.next();
    return;
  }
  mjs_expression(stm);
  while (true) {
    LoopScope it(stm, "call_args.L1");
    Sym d = stm.peek();
    if (d.is_eof() || !d.eq(',')) break;
    stm.next();
    mjs_expression(stm);
  }
  stm.expect(')');
}

inline void mjs_primary(Stm& stm) {
  FnScope fn(stm, "primary");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("expression expected");
  if (c.eq('\'')) {
    stm.next();
    return mjs_string_lit(stm);
  }
  if (c.eq('(')) {
    stm.next();
    mjs_expression(stm);
    stm.expect(')');
    return;
  }
  if (c.eq('[')) {
    stm.next();
    return mjs_array_lit(stm);
  }
  if (c.eq('{')) {
    stm.next();
    return mjs_object_lit(stm);
  }
  if (c.eq('t') || c.eq('f') || c.eq('n')) return mjs_bool_null(stm);
  if (digit09(c)) {
    stm.next();
    return mjs_number(stm);
  }
  mjs_identifier(stm);
}

inline void mjs_postfix(Stm& stm) {
  FnScope fn(stm, "postfix");
  mjs_primary(stm);
  while (true) {
    LoopScope it(stm, "postfix.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('(')) {
      stm.next();
      mjs_call_args(stm);
      continue;
    }
    if (c.eq('[')) {
      stm.next();
      mjs_expression(stm);
      stm.expect(']');
      continue;
    }
    return;
  }
}

inline void mjs_unary(Stm& stm) {
  FnScope fn(stm, "unary");
  Sym c = stm.peek();
  if (!c.is_eof() && (c.eq('!') || c.eq('-'))) {
    stm.next();
    mjs_unary(stm);
    return;
  }
  mjs_postfix(stm);
}

inline void mjs_multiplicative(Stm& stm) {
  FnScope fn(stm, "multiplicative");
  mjs_unary(stm);
  while (true) {
    LoopScope it(stm, "multiplicative.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('*') || c.eq('/') || c.eq('%')) {
      stm.next();
      mjs_unary(stm);
      continue;
    }
    return;
  }
}

inline void mjs_additive(Stm& stm) {
  FnScope fn(stm, "additive");
  mjs_multiplicative(stm);
  while (true) {
    LoopScope it(stm, "additive.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('+') || c.eq('-')) {
      stm.next();
      mjs_multiplicative(stm);
      continue;
    }
    return;
  }
}

inline void mjs_relational(Stm& stm) {
  FnScope fn(stm, "relational");
  mjs_additive(stm);
  while (true) {
    LoopScope it(stm, "relational.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('<') || c.eq('>')) {
      stm.next();
      Sym d = stm.peek();
      if (!d.is_eof() && d.eq('=')) stm.next();
      mjs_additive(stm);
      continue;
    }
    return;
  }
}

inline void mjs_equality(Stm& stm) {
  FnScope fn(stm, "equality");
  mjs_relational(stm);
  while (true) {
    LoopScope it(stm, "equality.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (c.eq('=') || c.eq('!')) {
      stm.next();
      stm.expect('=');
      mjs_relational(stm);
      continue;
    }
    return;
  }
}

inline void mjs_logical_and(Stm& stm) {
  FnScope fn(stm, "logical_and");
  mjs_equality(stm);
  while (true) {
    LoopScope it(stm, "logical_and.L1");
    Sym c = stm.peek();
    if (c.is_eof() || !c.eq('&')) return;
    stm.next();
    stm.expect('&');
    mjs_equality(stm);
  }
}

inline void mjs_logical_or(Stm& stm) {
  FnScope fn(stm, "logical_or");
  mjs_logical_and(stm);
  while (true) {
    LoopScope it(stm, "logical_or.L1");
    Sym c = stm.peek();
    if (c.is_eof() || !c.eq('|')) return;
    stm.next();
    stm.expect('|');
    mjs_logical_and(stm);
  }
}

inline void mjs_ternary(Stm& stm) {
  FnScope fn(stm, "ternary");
  mjs_logical_or(stm);
  Sym c = stm.peek();
  if (!c.is_eof() && c.eq('?')) {
    stm.next();
    mjs_expression(stm);
    stm.expect(':');
    mjs_ternary(stm);
  }
}

inline void mjs_expression(Stm& stm) {
  FnScope fn(stm, "expression");
  mjs_ternary(stm);
}

inline void mjs_block(Stm& stm) {
  FnScope fn(stm, "block");
  while (true) {
    LoopScope it(stm, "block.L1");
    Sym c = stm.peek();
    if (c.is_eof()) throw stm.error("unterminated block");
    if (c.eq('}')) break;
    mjs_statement(stm);
  }
  stm.next();  // closing brace
}

inline void mjs_let_stmt(Stm& stm) {
  FnScope fn(stm, "let_stmt");
  expect_word(stm, "et ");
  mjs_identifier(stm);
  stm.expect('=');
  mjs_expression(stm);
  stm.expect(';');
}

inline void mjs_if_stmt(Stm& stm) {
  FnScope fn(stm, "if_stmt");
  expect_word(stm, "f(");
  mjs_expression(stm);
  stm.expect(')');
  stm.expect('{');
  mjs_block(stm);
  Sym c = stm.peek();
  if (!c.is_eof() && c.eq('e')) {
    stm.next();
    expect_word(stm, "lse");
    stm.expect('{');
    mjs_block(stm);
  }
}

inline void mjs_while_stmt(Stm& stm) {
  FnScope fn(stm, "while_stmt");
  expect_word(stm, "hile(");
  mjs_expression(stm);
  stm.expect(')');
  stm.expect('{');
  mjs_block(stm);
}

inline void mjs_for_stmt(Stm& stm) {
  FnScope fn(stm, "for_stmt");
  expect_word(stm, "or(");
  mjs_expression(stm);
  stm.expect(';');
  mjs_expression(stm);
  stm.expect(';');
  mjs_expression(stm);
  stm.expect(')');
  stm.expect('{');
  mjs_block(stm);
}

inline void mjs_return_stmt(Stm& stm) {
  FnScope fn(stm, "return_stmt");
  expect_word(stm, "eturn");
  Sym c = stm.peek();
  if (!c.is_eof() && c.eq(';')) {
    stm.next();
    return;
  }
  stm.expect(' ');
  mjs_expression(stm);
  stm.expect(';');
}

// Statement starting with an identifier: a call/index expression with an
// optional assignment, e.g. "x=1;", "a(2);", "b[0]=c;".
inline void mjs_expr_stmt(Stm& stm) {
  FnScope fn(stm, "expr_stmt");
  mjs_identifier(stm);
  while (true) {
    LoopScope it(stm, "expr_stmt.L1");
    Sym c = stm.peek();
    if (c.is_eof()) break;
    if (c.eq('(')) {
      stm.next();
      mjs_call_args(stm);
      continue;
    }
    if (c.eq('[')) {
      stm.next();
      mjs_expression(stm);
      stm.expect(']');
      continue;
    }
    break;
  }
  Sym c = stm.peek();
  if (!c.is_eof() && c.eq('=')) {
    stm.next();
    mjs_expression(stm);
  }
  stm.expect(';');
}

inline void mjs_statement(Stm& stm) {
  FnScope fn(stm, "statement");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("statement expected");
  if (c.eq('l')) {
    stm.next();
    return mjs_let_stmt(stm);
  }
  if (c.eq('i')) {
    stm.next();
    return mjs_if_stmt(stm);
  }
  if (c.eq('w')) {
    stm.next();
    return mjs_while_stmt(stm);
  }
  if (c.eq('f')) {
    stm.next();
    return mjs_for_stmt(stm);
  }
  if (c.eq('r')) {
    stm.next();
    return mjs_return_stmt(stm);
  }
  if (c.eq('{')) {
    stm.next();
    return mjs_block(stm);
  }
  mjs_expr_stmt(stm);
}

inline void mjs_statements(Stm& stm) {
  FnScope fn(stm, "statements");
  while (!stm.eof()) {
    LoopScope it(stm, "statements.L1");
    mjs_statement(stm);
  }
}

inline void mjs(Stm& stm) {
  FnScope fn(stm, "mjs");
  mjs_statements(stm);
}

}  // namespace gmine::subjects
