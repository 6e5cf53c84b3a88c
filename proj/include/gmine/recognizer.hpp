#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gmine/grammar.hpp"

namespace gmine {

namespace detail {

// Grammar desugared for chart parsing: starred groups become right-recursive
// rules and character classes become one-character alternatives, leaving
// plain terminal/nonterminal sequences over integer-indexed rules.
struct FlatSymbol {
  bool is_term = false;
  char term = 0;
  int nt = -1;
};

struct FlatGrammar {
  std::vector<std::vector<std::vector<FlatSymbol>>> rules;  // nt -> alts -> symbols
  std::vector<std::string> names;
  std::vector<bool> nullable;
  int start = -1;

  int add_nt(const std::string& name) {
    names.push_back(name);
    rules.emplace_back();
    return static_cast<int>(rules.size()) - 1;
  }
};

class Desugarer {
 public:
  Desugarer(const Grammar& g, const Alphabet& a) : g_(g), alphabet_(a) {}

  FlatGrammar run() {
    for (const auto& [name, alts] : g_.rules()) nt_index_[name] = fg_.add_nt(name);
    for (const auto& [name, alts] : g_.rules()) {
      int nt = nt_index_[name];
      for (const Alternative& alt : alts) {
        // flatten may synthesize rules and reallocate fg_.rules
        std::vector<FlatSymbol> flat = flatten(alt);
        fg_.rules[static_cast<std::size_t>(nt)].push_back(std::move(flat));
      }
    }
    fg_.start = nt_index_.at(g_.start);
    compute_nullable();
    return std::move(fg_);
  }

 private:
  std::vector<FlatSymbol> flatten(const Alternative& alt) {
    std::vector<FlatSymbol> out;
    for (const Symbol& s : alt) {
      switch (s.kind) {
        case SymbolKind::Terminal:
          out.push_back({true, s.term, -1});
          break;
        case SymbolKind::Nonterminal:
          out.push_back({false, 0, nt_index_.at(s.ref)});
          break;
        case SymbolKind::CharClass: {
          out.push_back({false, 0, class_nt(s)});
          break;
        }
        case SymbolKind::Group: {
          out.push_back({false, 0, group_nt(s)});
          break;
        }
      }
    }
    return out;
  }

  int class_nt(const Symbol& s) {
    std::string key = "[" + s.cls + ":" + s.cls_except + "]";
    auto it = synth_.find(key);
    if (it != synth_.end()) return it->second;
    int nt = fg_.add_nt(key);
    synth_[key] = nt;
    for (char c : class_members(s.cls, s.cls_except, alphabet_)) {
      fg_.rules[nt].push_back({FlatSymbol{true, c, -1}});
    }
    return nt;
  }

  int group_nt(const Symbol& s) {
    int nt = fg_.add_nt("(group" + std::to_string(++group_count_) + ")");
    // group -> epsilon | body group
    fg_.rules[nt].push_back({});
    std::vector<FlatSymbol> rec = flatten(s.body);
    rec.push_back({false, 0, nt});
    fg_.rules[nt].push_back(std::move(rec));
    return nt;
  }

  void compute_nullable() {
    fg_.nullable.assign(fg_.rules.size(), false);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t nt = 0; nt < fg_.rules.size(); ++nt) {
        if (fg_.nullable[nt]) continue;
        for (const auto& alt : fg_.rules[nt]) {
          bool all = true;
          for (const auto& sym : alt) {
            if (sym.is_term || !fg_.nullable[sym.nt]) {
              all = false;
              break;
            }
          }
          if (all) {
            fg_.nullable[nt] = true;
            changed = true;
            break;
          }
        }
      }
    }
  }

  const Grammar& g_;
  const Alphabet& alphabet_;
  FlatGrammar fg_;
  std::unordered_map<std::string, int> nt_index_;
  std::unordered_map<std::string, int> synth_;
  int group_count_ = 0;
};

}  // namespace detail

// Earley recognizer; handles ambiguity, left recursion, and epsilon rules.
// Build once per grammar, then test any number of strings.
class Recognizer {
 public:
  explicit Recognizer(const Grammar& g, const Alphabet& a = Alphabet::standard())
      : fg_(detail::Desugarer(g, a).run()) {}

  bool recognize(std::string_view input) const {
    int n = static_cast<int>(input.size());
    std::vector<std::vector<Item>> sets(n + 1);
    std::vector<std::unordered_set<std::uint64_t>> seen(n + 1);
    // items in set i awaiting completion of a nonterminal
    std::vector<std::unordered_map<int, std::vector<int>>> waiting(n + 1);

    auto add = [&](int i, Item it) {
      std::uint64_t key = pack(it);
      if (!seen[i].insert(key).second) return;
      sets[i].push_back(it);
    };

    for (std::size_t a = 0; a < fg_.rules[fg_.start].size(); ++a) {
      add(0, Item{fg_.start, static_cast<int>(a), 0, 0});
    }

    for (int i = 0; i <= n; ++i) {
      for (std::size_t q = 0; q < sets[i].size(); ++q) {
        Item it = sets[i][q];
        const auto& alt = fg_.rules[it.nt][it.alt];
        if (it.dot == static_cast<int>(alt.size())) {
          // complete
          auto w = waiting[it.origin].find(it.nt);
          if (w != waiting[it.origin].end()) {
            for (int idx : w->second) {
              Item parent = sets[it.origin][idx];
              ++parent.dot;
              add(i, parent);
            }
          }
          continue;
        }
        const detail::FlatSymbol& sym = alt[it.dot];
        if (sym.is_term) {
          if (i < n && input[i] == sym.term) {
            Item adv = it;
            ++adv.dot;
            add(i + 1, adv);
          }
          continue;
        }
        // predict
        waiting[i][sym.nt].push_back(static_cast<int>(q));
        for (std::size_t a = 0; a < fg_.rules[sym.nt].size(); ++a) {
          add(i, Item{sym.nt, static_cast<int>(a), 0, i});
        }
        if (fg_.nullable[sym.nt]) {
          Item adv = it;
          ++adv.dot;
          add(i, adv);
        }
      }
    }

    for (const Item& it : sets[n]) {
      if (it.nt == fg_.start && it.origin == 0 &&
          it.dot == static_cast<int>(fg_.rules[it.nt][it.alt].size())) {
        return true;
      }
    }
    return false;
  }

 private:
  struct Item {
    int nt;
    int alt;
    int dot;
    int origin;
  };

  static std::uint64_t pack(const Item& it) {
    return (static_cast<std::uint64_t>(it.nt & 0xFFFF) << 48) |
           (static_cast<std::uint64_t>(it.alt & 0xFFFF) << 32) |
           (static_cast<std::uint64_t>(it.dot & 0xFFF) << 20) |
           static_cast<std::uint64_t>(it.origin & 0xFFFFF);
  }

  detail::FlatGrammar fg_;
};

inline bool recognize(const Grammar& g, std::string_view s,
                      const Alphabet& a = Alphabet::standard()) {
  return Recognizer(g, a).recognize(s);
}

}  // namespace gmine
