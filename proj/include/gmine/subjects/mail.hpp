#pragma once

#include "gmine/subjects/common.hpp"

// Mail address parser: lowercase local part, '@', host name, '.', and a
// two-letter top-level domain.
namespace gmine::subjects {

inline void mail_local(Stm& stm) {
  FnScope fn(stm, "local");
  Sym c = stm.next();
  if (c.is_eof() || !letter_az(c)) throw stm.error("local part expected");
  while (true) {
    LoopScope it(stm, "local.L1");
    Sym d = stm.peek();
    if (d.is_eof()) return;
    if (!letter_az(d)) return;
    stm.next();
  }
}

inline void mail_name(Stm& stm) {
  FnScope fn(stm, "name");
  Sym c = stm.next();
  if (c.is_eof() || !letter_az(c)) throw stm.error("host name expected");
  while (true) {
    LoopScope it(stm, "name.L1");
    Sym d = stm.peek();
    if (d.is_eof()) return;
    if (!letter_az(d)) return;
    stm.next();
  }
}

inline void mail_tld(Stm& stm) {
  FnScope fn(stm, "tld");
  Sym a = stm.next();
  if (a.is_eof() || !letter_az(a)) throw stm.error("tld expected");
  Sym b = stm.next();
  if (b.is_eof() || !letter_az(b)) throw stm.error("tld expected");
}

inline void mail_domain(Stm& stm) {
  FnScope fn(stm, "domain");
  mail_name(stm);
  stm.expect('.');
  mail_tld(stm);
}

inline void mail(Stm& stm) {
  FnScope fn(stm, "mail");
  mail_local(stm);
  stm.expect('@');
  mail_domain(stm);
}

}  // namespace gmine::subjects
