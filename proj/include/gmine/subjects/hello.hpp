#pragma once

#include "gmine/subjects/common.hpp"

// Greeting parser: a two-word finite language ("hi"/"yo" plus one of sixteen
// three-letter names), 32 sentences of six characters each.
namespace gmine::subjects {

inline void hello_name(Stm& stm) {
  FnScope fn(stm, "name");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("name expected");
  if (c.eq('a')) {
    Sym d = stm.next();
    if (d.eq('d')) return stm.expect('a');   // ada
    if (d.eq('m')) return stm.expect('y');   // amy
    if (d.eq('n')) return stm.expect('n');   // ann
    throw stm.error("unknown name");
  }
  if (c.eq('b')) {
    Sym d = stm.next();
    if (d.eq('e')) return stm.expect('n');   // ben
    if (d.eq('o')) return stm.expect('b');   // bob
    throw stm.error("unknown name");
  }
  if (c.eq('e')) { stm.expect('v'); return stm.expect('a'); }  // eva
  if (c.eq('i')) { stm.expect('a'); return stm.expect('n'); }  // ian
  if (c.eq('j')) { stm.expect('o'); return stm.expect('e'); }  // joe
  if (c.eq('k')) { stm.expect('i'); return stm.expect('m'); }  // kim
  if (c.eq('l')) {
    stm.expect('e');
    Sym d = stm.next();
    if (d.eq('e')) return;                   // lee
    if (d.eq('o')) return;                   // leo
    throw stm.error("unknown name");
  }
  if (c.eq('m')) {
    Sym d = stm.next();
    if (d.eq('a')) return stm.expect('x');   // max
    if (d.eq('i')) return stm.expect('a');   // mia
    throw stm.error("unknown name");
  }
  if (c.eq('s')) {
    Sym d = stm.next();
    if (d.eq('a')) return stm.expect('m');   // sam
    if (d.eq('u')) return stm.expect('e');   // sue
    throw stm.error("unknown name");
  }
  if (c.eq('t')) { stm.expect('o'); return stm.expect('m'); }  // tom
  throw stm.error("unknown name");
}

inline void hello(Stm& stm) {
  FnScope fn(stm, "hello");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("greeting expected");
  if (c.eq('h')) {
    stm.expect('i');
  } else if (c.eq('y')) {
    stm.expect('o');
  } else {
    throw stm.error("greeting expected");
  }
  stm.expect(' ');
  hello_name(stm);
}

}  // namespace gmine::subjects
