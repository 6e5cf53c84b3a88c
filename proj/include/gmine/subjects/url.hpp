#pragma once

#include <string>

#include "gmine/subjects/common.hpp"

// URL parser: scheme "://" host with dot-separated labels of at least two
// letters, then optional port, path, query, and fragment sections.
namespace gmine::subjects {

inline constexpr std::string_view kSegmentChars = "abcdefghijklmnopqrstuvwxyz0123456789";

inline void url_letter(Stm& stm) {
  FnScope fn(stm, "letter");
  Sym c = stm.next();
  if (c.is_eof() || !letter_az(c)) throw stm.error("letter expected");
}

inline void url_digit(Stm& stm) {
  FnScope fn(stm, "digit");
  Sym c = stm.next();
  if (c.is_eof() || !digit09(c)) throw stm.error("digit expected");
}

inline void url_scheme_http(Stm& stm) {
  FnScope fn(stm, "scheme_http");
  expect_word(stm, "ttp");
  Sym c = stm.peek();
  if (c.eq('s')) stm.next();
}

inline void url_scheme_ftp(Stm& stm) {
  FnScope fn(stm, "scheme_ftp");
  expect_word(stm, "p");
}

inline void url_scheme_file(Stm& stm) {
  FnScope fn(stm, "scheme_file");
  expect_word(stm, "le");
}

inline void url_scheme(Stm& stm) {
  FnScope fn(stm, "scheme");
  Sym c = stm.next();
  if (c.is_eof()) throw stm.error("scheme expected");
  if (c.eq('h')) return url_scheme_http(stm);
  if (c.eq('f')) {
    Sym d = stm.next();
    if (d.is_eof()) throw stm.error("scheme expected");
    if (d.eq('t')) return url_scheme_ftp(stm);
    if (d.eq('i')) return url_scheme_file(stm);
    throw stm.error("scheme expected");
  }
  throw stm.error("scheme expected");
}

inline void url_scheme_sep(Stm& stm) {
  FnScope fn(stm, "scheme_sep");
  stm.expect(':');
  stm.expect('/');
  stm.expect('/');
}

// One host label: two letters minimum, then any further letters.
inline void url_name(Stm& stm) {
  FnScope fn(stm, "name");
  url_letter(stm);
  url_letter(stm);
  while (true) {
    LoopScope it(stm, "name.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!letter_az(c)) return;
    url_letter(stm);
  }
}

inline void url_host(Stm& stm) {
  FnScope fn(stm, "host");
  url_name(stm);
  stm.expect('.');
  url_name(stm);
  while (true) {
    LoopScope it(stm, "host.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.eq('.')) return;
    stm.next();
    url_name(stm);
  }
}

inline void url_port_digits(Stm& stm) {
  FnScope fn(stm, "port_digits");
  url_digit(stm);
  while (true) {
    LoopScope it(stm, "port_digits.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!digit09(c)) return;
    url_digit(stm);
  }
}

inline void url_port(Stm& stm) {
  FnScope fn(stm, "port");
  url_port_digits(stm);
}

inline void url_segment(Stm& stm) {
  FnScope fn(stm, "segment");
  while (true) {
    LoopScope it(stm, "segment.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.in(kSegmentChars)) return;
    stm.next();
  }
}

inline void url_path(Stm& stm) {
  FnScope fn(stm, "path");
  url_segment(stm);
  while (true) {
    LoopScope it(stm, "path.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.eq('/')) return;
    stm.next();
    url_segment(stm);
  }
}

inline void url_key(Stm& stm) {
  FnScope fn(stm, "key");
  url_letter(stm);
  while (true) {
    LoopScope it(stm, "key.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!letter_az(c)) return;
    url_letter(stm);
  }
}

inline void url_value(Stm& stm) {
  FnScope fn(stm, "value");
  while (true) {
    LoopScope it(stm, "value.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.in(kSegmentChars)) return;
    stm.next();
  }
}

inline void url_query_pair(Stm& stm) {
  FnScope fn(stm, "query_pair");
  url_key(stm);
  stm.expect('=');
  url_value(stm);
}

inline void url_pairs(Stm& stm) {
  FnScope fn(stm, "pairs");
  url_query_pair(stm);
  while (true) {
    LoopScope it(stm, "pairs.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.eq('&')) return;
    stm.next();
    url_query_pair(stm);
  }
}

inline void url_query(Stm& stm) {
  FnScope fn(stm, "query");
  url_pairs(stm);
}

inline void url_fragment(Stm& stm) {
  FnScope fn(stm, "fragment");
  while (true) {
    LoopScope it(stm, "fragment.L1");
    Sym c = stm.peek();
    if (c.is_eof()) return;
    if (!c.in(kSegmentChars)) return;
    stm.next();
  }
}

inline void url(Stm& stm) {
  FnScope fn(stm, "url");
  url_scheme(stm);
  url_scheme_sep(stm);
  url_host(stm);
  Sym c = stm.peek();
  if (!c.is_eof() && c.eq(':')) {
    stm.next();
    url_port(stm);
    c = stm.peek();
  }
  if (!c.is_eof() && c.eq('/')) {
    stm.next();
    url_path(stm);
    c = stm.peek();
  }
  if (!c.is_eof() && c.eq('?')) {
    stm.next();
    url_query(stm);
    c = stm.peek();
  }
  if (!c.is_eof() && c.eq('#')) {
    stm.next();
    url_fragment(stm);
  }
}

}  // namespace gmine::subjects
