#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmine {

// Relation between the input character at some index and a literal operand.
enum class Relation { Eq, Neq, InSet, NotInSet, Lt, Le, Gt, Ge };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Eq: return "==";
    case Relation::Neq: return "!=";
    case Relation::InSet: return "in";
    case Relation::NotInSet: return "not-in";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

// One recorded comparison of an input character against a literal.
// `operand` holds a single character for Eq/Neq and the ordered relations,
// and a character set for InSet/NotInSet. `func` is the parser function the
// comparison is attributed to; `node` the innermost control-flow node label.
struct Constraint {
  int index = 0;
  Relation rel = Relation::Eq;
  std::string operand;
  std::string_view func;
  std::string_view node;
};

inline bool satisfies(char c, const Constraint& k) {
  switch (k.rel) {
    case Relation::Eq: return c == k.operand[0];
    case Relation::Neq: return c != k.operand[0];
    case Relation::InSet: return k.operand.find(c) != std::string::npos;
    case Relation::NotInSet: return k.operand.find(c) == std::string::npos;
    case Relation::Lt: return c < k.operand[0];
    case Relation::Le: return c <= k.operand[0];
    case Relation::Gt: return c > k.operand[0];
    case Relation::Ge: return c >= k.operand[0];
  }
  return false;
}

inline bool violates(char c, const Constraint& k) { return !satisfies(c, k); }

// Comparisons in stream-access order along one execution.
using PathCondition = std::vector<Constraint>;

// Constraints on one input position, optionally restricted to those
// attributed to a single parser function.
inline std::vector<Constraint> filter_pc(const PathCondition& pc, int placeholder_index,
                                         std::optional<std::string_view> func = {}) {
  std::vector<Constraint> out;
  for (const Constraint& k : pc) {
    if (k.index != placeholder_index) continue;
    if (func && k.func != *func) continue;
    out.push_back(k);
  }
  return out;
}

}  // namespace gmine
