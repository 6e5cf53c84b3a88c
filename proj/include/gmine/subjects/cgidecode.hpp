#pragma once

#include "gmine/subjects/common.hpp"

// CGI percent-decoding: '+' becomes a space, '%' starts a two-digit hex
// escape, everything else passes through.
namespace gmine::subjects {

inline constexpr std::string_view kHexDigits = "0123456789abcdefABCDEF";

inline void cgi_decode(Stm& stm) {
  FnScope fn(stm, "cgi_decode");
  while (true) {
    LoopScope it(stm, "cgi_decode.L1");
    Sym c = stm.next();
    if (c.is_eof()) return;
    if (c.eq('%')) {
      Sym h1 = stm.next();
      if (h1.is_eof() || !in_chars(h1, kHexDigits)) throw stm.error("bad escape");
      Sym h2 = stm.next();
      if (h2.is_eof() || !in_chars(h2, kHexDigits)) throw stm.error("bad escape");
    } else if (c.eq('+')) {
      // decoded as a space
    }
  }
}

}  // namespace gmine::subjects
