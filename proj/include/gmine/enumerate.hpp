#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gmine/grammar.hpp"

namespace gmine {

namespace detail {

using StrSet = std::set<std::string>;

inline StrSet concat_capped(const StrSet& a, const StrSet& b, int max_len, std::size_t cap) {
  StrSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.size() + y.size() > static_cast<std::size_t>(max_len)) continue;
      out.insert(x + y);
      if (out.size() > cap) throw GrammarError("enumeration exceeds size cap");
    }
  }
  return out;
}

}  // namespace detail

// Exact set of derivable strings of length <= max_len, computed bottom-up
// with length pruning. `allowed` (when set) restricts terminals to a reduced
// alphabet; strings requiring other characters are pruned rather than
// produced. Intended as a test oracle for small grammars.
inline std::set<std::string> enumerate_language(const Grammar& g, int max_len,
                                                std::optional<std::string> allowed = {},
                                                const Alphabet& alphabet = Alphabet::standard(),
                                                std::size_t set_cap = 2000000) {
  using detail::StrSet;
  g.validate();

  auto char_ok = [&](char c) {
    return !allowed || allowed->find(c) != std::string::npos;
  };

  // per-rule result sets, iterated to a fixpoint
  std::vector<StrSet> sets(g.rules().size());
  std::vector<const std::vector<Alternative>*> alts;
  alts.reserve(g.rules().size());
  for (const auto& [name, a] : g.rules()) alts.push_back(&a);

  auto rule_index = [&](const std::string& name) {
    int i = 0;
    for (const auto& [n, a] : g.rules()) {
      if (n == name) return i;
      ++i;
    }
    throw GrammarError("undefined nonterminal <" + name + ">");
  };

  // strings derivable from one symbol under the current approximation
  auto symbol_set = [&](const Symbol& s, auto&& self) -> StrSet {
    switch (s.kind) {
      case SymbolKind::Terminal:
        if (!char_ok(s.term)) return {};
        return {std::string(1, s.term)};
      case SymbolKind::CharClass: {
        StrSet out;
        for (char c : class_members(s.cls, s.cls_except, alphabet)) {
          if (char_ok(c)) out.insert(std::string(1, c));
        }
        return out;
      }
      case SymbolKind::Nonterminal:
        return sets[rule_index(s.ref)];
      case SymbolKind::Group: {
        // expand the group 0..max_len times (length pruning bounds it)
        StrSet body{""};
        for (const Symbol& bs : s.body) {
          body = detail::concat_capped(body, self(bs, self), max_len, set_cap);
        }
        StrSet out{""};
        StrSet frontier{""};
        while (true) {
          StrSet next = detail::concat_capped(frontier, body, max_len, set_cap);
          std::size_t before = out.size();
          out.insert(next.begin(), next.end());
          if (out.size() == before) break;
          frontier = std::move(next);
        }
        return out;
      }
    }
    return {};
  };

  bool changed = true;
  while (changed) {
    changed = false;
    int idx = 0;
    for (const auto& [name, ralts] : g.rules()) {
      StrSet mine = sets[idx];
      for (const Alternative& alt : ralts) {
        StrSet acc{""};
        for (const Symbol& s : alt) {
          acc = detail::concat_capped(acc, symbol_set(s, symbol_set), max_len, set_cap);
          if (acc.empty()) break;
        }
        mine.insert(acc.begin(), acc.end());
        if (mine.size() > set_cap) throw GrammarError("enumeration exceeds size cap");
      }
      if (mine.size() != sets[idx].size()) {
        sets[idx] = std::move(mine);
        changed = true;
      }
      ++idx;
    }
  }
  return sets[rule_index(g.start)];
}

}  // namespace gmine
