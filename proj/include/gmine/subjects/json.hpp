#pragma once

#include "gmine/subjects/common.hpp"

// Fine-grained JSON parser (no whitespace, strict comma placement, fixed
// escape set), split across many small grammar-shaped methods.
namespace gmine::subjects {

inline void jp_element(Stm& stm);

inline void jp_digit(Stm& stm) {
  FnScope fn(stm, "digit");
  Sym c = stm.next();
  if (c.is_eof() || !digit09(c)) throw stm.error("digit expected");
}

inline void jp_digits(Stm& stm) {
  FnScope fn(stm, "digits");
  jp_digit(stm);
  while (true) {
    LoopScope it(stm, "digits.L1");
    Sym c = stm.peek();
    if (c.is_eof() || !digit09(c)) return;
    jp_digit(stm);
  }
}

inline void jp_integer(Stm& stm) {
  FnScope fn(stm, "integer");
  jp_digits(stm);
}

inline void jp_fraction(Stm& stm) {
  FnScope fn(stm, "fraction");
  jp_digits(stm);
}

inline void jp_exponent(Stm& stm) {
  FnScope fn(stm, "exponent");
  Sym c = stm.peek();
  if (!c.is_eof() && (c.eq('+') || c.eq('-'))) stm.next();
  jp_digits(stm);
}

inline void jp_number(Stm& stm) {
  FnScope fn(stm, "number");
  jp_integer(stm);
  Sym d = stm.peek();
  if (!d.is_eof() && d.eq('.')) {
    stm.next();
    jp_fraction(stm);
    d = stm.peek();
  }
  if (!d.is_eof() && (d.eq('e') || d.eq('E'))) {
    stm.next();
    jp_exponent(stm);
  }
}

inline void jp_escape(Stm& stm) {
  FnScope fn(stm, "escape");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("truncated escape");
  if (in_chars(c, "\"\\/bfnrt")) return;
  throw stm.error("bad escape");
}

inline void jp_character(Stm& stm) {
  FnScope fn(stm, "character");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("truncated string");
  if (c.eq('\\')) jp_escape(stm);
}

inline void jp_characters(Stm& stm) {
  FnScope fn(stm, "characters");
  while (true) {
    LoopScope it(stm, "characters.L1");
    Sym c = stm.peek();
    if (c.is_eof()) throw stm.error("truncated string");
    if (c.eq('"')) return;
    jp_character(stm);
  }
}

inline void jp_string(Stm& stm) {
  FnScope fn(stm, "string");
  jp_characters(stm);
  stm.expect('"');
}

inline void jp_member(Stm& stm) {
  FnScope fn(stm, "member");
  stm.expect('"');
  jp_string(stm);
  stm.expect(':');
  jp_element(stm);
}

inline void jp_members(Stm& stm) {
  FnScope fn(stm, "members");
  jp_member(stm);
  while (true) {
    LoopScope it(stm, "members.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.eq(',')) return;
    stm.next();
    jp_member(stm);
  }
}

inline void jp_object(Stm& stm) {
  FnScope fn(stm, "object");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("truncated object");
  if (c.eq('}')) {
    stm.next();
    return;
  }
  jp_members(stm);
  stm.expect('}');
}

inline void jp_elements(Stm& stm) {
  FnScope fn(stm, "elements");
  jp_element(stm);
  while (true) {
    LoopScope it(stm, "elements.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.eq(',')) return;
    stm.next();
    jp_element(stm);
  }
}

inline void jp_array(Stm& stm) {
  FnScope fn(stm, "array");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("truncated array");
  if (c.eq(']')) {
    stm.next();
    return;
  }
  jp_elements(stm);
  stm.expect(']');
}

inline void jp_bool_true(Stm& stm) {
  FnScope fn(stm, "bool_true");
  expect_word(stm, "rue");
}

inline void jp_bool_false(Stm& stm) {
  FnScope fn(stm, "bool_false");
  expect_word(stm, "alse");
}

inline void jp_null(Stm& stm) {
  FnScope fn(stm, "null_lit");
  expect_word(stm, "ull");
}

inline void jp_value(Stm& stm) {
  FnScope fn(stm, "value");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("value expected");
  if (c.eq('"')) {
    stm.next();
    return jp_string(stm);
  }
  if (c.eq('{')) {
    stm.next();
    return jp_object(stm);
  }
  if (c.eq('[')) {
    stm.next();
    return jp_array(stm);
  }
  if (c.eq('t')) {
    stm.next();
    return jp_bool_true(stm);
  }
  if (c.eq('f')) {
    stm.next();
    return jp_bool_false(stm);
  }
  if (c.eq('n')) {
    stm.next();
    return jp_null(stm);
  }
  if (c.eq('-')) stm.next();
  jp_number(stm);
}

inline void jp_element(Stm& stm) {
  FnScope fn(stm, "element");
  jp_value(stm);
}

inline void jsonparser(Stm& stm) {
  FnScope fn(stm, "json");
  jp_element(stm);
}

}  // namespace gmine::subjects
