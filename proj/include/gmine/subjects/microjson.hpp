#pragma once

#include <optional>
#include <string>

#include "gmine/subjects/common.hpp"

// Minimal JSON parser. The dictionary loop tracks an expect_key state:
// a comma sets it, a closing brace rejects while it is set, so repeated
// commas between entries are legal but "{,}" is not. Escape decoding
// accepts every character except 'u'.
namespace gmine::subjects {

inline constexpr std::string_view kNumStart = "-+.0123456789";
inline constexpr std::string_view kNumChars = "+-.eE0123456789";

inline void mj_json_raw(Stm& stm);

// Reads one raw token character, or nothing when the next character does
// not belong to a number token.
inline std::optional<char> mj_getvalue(Stm& stm) {
  FnScope fn(stm, "getvalue");
  Sym c = stm.peek();
  if (c.is_eof()) return std::nullopt;
  if (!in_chars(c, kNumChars)) return std::nullopt;
  stm.next();
  return c.ch();
}

// sign? digits ('.' digits*)? ((e|E) sign? digits)? with at least one digit
// in the mantissa; token characters are pulled through getvalue
inline void mj_json_number(Stm& stm) {
  FnScope fn(stm, "json_number");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("bad number");
  if (c.eq('+') || c.eq('-')) stm.next();
  int int_digits = 0;
  while (true) {
    LoopScope it(stm, "json_number.L1");
    Sym d = stm.peek();
    if (d.is_eof() || !digit09(d)) break;
    mj_getvalue(stm);
    ++int_digits;
  }
  int frac_digits = 0;
  Sym dot = stm.peek();
  if (!dot.is_eof() && dot.eq('.')) {
    stm.next();
    while (true) {
      LoopScope it(stm, "json_number.L2");
      Sym d = stm.peek();
      if (d.is_eof() || !digit09(d)) break;
      mj_getvalue(stm);
      ++frac_digits;
    }
  }
  if (int_digits == 0 && frac_digits == 0) throw stm.error("bad number");
  Sym e = stm.peek();
  if (!e.is_eof() && (e.eq('e') || e.eq('E'))) {
    stm.next();
    Sym s2 = stm.peek();
    if (!s2.is_eof() && (s2.eq('+') || s2.eq('-'))) stm.next();
    int exp_digits = 0;
    while (true) {
      LoopScope it(stm, "json_number.L3");
      Sym d = stm.peek();
      if (d.is_eof() || !digit09(d)) break;
      mj_getvalue(stm);
      ++exp_digits;
    }
    if (exp_digits == 0) throw stm.error("bad number");
  }
}

inline void mj_decode_escape(Stm& stm) {
  FnScope fn(stm, "decode_escape");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("truncated escape");
  if (in_chars(c, "\"\\/bfnrt")) return;  // escape map
  if (c.eq('u')) throw stm.error("unicode escape not supported");
  // any other character decodes to itself
}

inline void mj_json_string(Stm& stm) {
  FnScope fn(stm, "json_string");
  while (true) {
    LoopScope it(stm, "json_string.L1");
    Sym c = stm.peek();
    if (c.is_eof()) throw stm.error("truncated string");
    if (c.eq('"')) break;
    stm.next();
    if (c.eq('\\')) mj_decode_escape(stm);
  }
  stm.next();  // closing quote
}

inline void mj_json_fixed(Stm& stm) {
  FnScope fn(stm, "json_fixed");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("value expected");
  if (c.eq('t')) return expect_word(stm, "rue");
  if (c.eq('f')) return expect_word(stm, "alse");
  if (c.eq('n')) return expect_word(stm, "ull");
  throw stm.error("value expected");
}

inline void mj_json_dict(Stm& stm) {
  FnScope fn(stm, "json_dict");
  int expect_key = 1;
  while (true) {
    LoopScope it(stm, "json_dict.L1");
    stm.skip_spaces();
    Sym c = stm.peek();
    if (c.is_eof()) throw stm.error("truncated dict");
    if (c.eq('}')) {
      if (expect_key == 2) throw stm.error("entry expected after comma");
      break;
    }
    if (c.eq(',')) {
      stm.next();
      expect_key = 2;
      continue;
    }
    if (c.eq('"')) {
      stm.next();
      mj_json_string(stm);
      stm.skip_spaces();
      stm.expect(':');
      stm.skip_spaces();
      mj_json_raw(stm);
      expect_key = 0;
      continue;
    }
    throw stm.error("dict key expected");
  }
  stm.next();  // closing brace
}

inline void mj_json_list(Stm& stm) {
  FnScope fn(stm, "json_list");
  bool first = true;
  while (true) {
    LoopScope it(stm, "json_list.L1");
    stm.skip_spaces();
    Sym c = stm.peek();
    if (c.is_eof()) throw stm.error("truncated list");
    if (c.eq(']')) break;
    if (!first) {
      if (!c.eq(',')) throw stm.error("comma expected");
      stm.next();
      stm.skip_spaces();
    }
    mj_json_raw(stm);
    first = false;
  }
  stm.next();  // closing bracket
}

inline void mj_json_raw(Stm& stm) {
  FnScope fn(stm, "json_raw");
  Sym c = stm.peek();
  if (c.is_eof()) throw stm.error("value expected");
  if (c.eq('"')) {
    stm.next();
    return mj_json_string(stm);
  }
  if (c.eq('{')) {
    stm.next();
    return mj_json_dict(stm);
  }
  if (c.eq('[')) {
    stm.next();
    return mj_json_list(stm);
  }
  if (c.eq('t') || c.eq('f') || c.eq('n')) return mj_json_fixed(stm);
  if (in_chars(c, kNumStart)) return mj_json_number(stm);
  throw stm.error("value expected");
}

inline void microjson(Stm& stm) {
  FnScope fn(stm, "from_json");
  stm.skip_spaces();
  mj_json_raw(stm);
}

}  // namespace gmine::subjects
