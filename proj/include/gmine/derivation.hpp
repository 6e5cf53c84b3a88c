#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "gmine/grammar.hpp"

namespace gmine {

struct DerivationBudget {
  int max_depth = 10;
  int max_length = 4096;
  std::uint64_t rng_seed = 1;
};

namespace detail {

constexpr long kInf = std::numeric_limits<int>::max();

// Shortest derivable length and derivation height per nonterminal; used to
// force termination once the depth budget is exceeded.
struct MinCosts {
  std::unordered_map<std::string, long> len;
  std::unordered_map<std::string, long> height;
};

inline long sym_min_len(const Symbol& s, const MinCosts& mc) {
  switch (s.kind) {
    case SymbolKind::Terminal:
    case SymbolKind::CharClass:
      return 1;
    case SymbolKind::Group:
      return 0;
    case SymbolKind::Nonterminal: {
      auto it = mc.len.find(s.ref);
      return it == mc.len.end() ? kInf : it->second;
    }
  }
  return kInf;
}

inline long sym_min_height(const Symbol& s, const MinCosts& mc) {
  switch (s.kind) {
    case SymbolKind::Terminal:
    case SymbolKind::CharClass:
    case SymbolKind::Group:
      return 0;
    case SymbolKind::Nonterminal: {
      auto it = mc.height.find(s.ref);
      return it == mc.height.end() ? kInf : it->second;
    }
  }
  return kInf;
}

inline long alt_cost(const Alternative& alt, const MinCosts& mc, bool height) {
  long total = 0;
  for (const Symbol& s : alt) {
    long c = height ? sym_min_height(s, mc) : sym_min_len(s, mc);
    if (c >= kInf) return kInf;
    if (height) {
      total = std::max(total, c);
    } else {
      total += c;
      if (total >= kInf) return kInf;
    }
  }
  return total;
}

inline MinCosts min_costs(const Grammar& g) {
  MinCosts mc;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [name, alts] : g.rules()) {
      long best_len = kInf, best_h = kInf;
      for (const Alternative& alt : alts) {
        long l = alt_cost(alt, mc, false);
        long h = alt_cost(alt, mc, true);
        if (h < kInf) h += 1;
        best_len = std::min(best_len, l);
        best_h = std::min(best_h, h);
      }
      auto il = mc.len.find(name);
      if (best_len < kInf && (il == mc.len.end() || il->second > best_len)) {
        mc.len[name] = best_len;
        changed = true;
      }
      auto ih = mc.height.find(name);
      if (best_h < kInf && (ih == mc.height.end() || ih->second > best_h)) {
        mc.height[name] = best_h;
        changed = true;
      }
    }
  }
  return mc;
}

class Deriver {
 public:
  Deriver(const Grammar& g, const DerivationBudget& b, const Alphabet& a)
      : g_(g), budget_(b), alphabet_(a), mc_(min_costs(g)), rng_(b.rng_seed) {}

  std::string run() {
    out_.clear();
    expand_nt(g_.start, 0);
    return out_;
  }

 private:
  bool forced() const { return static_cast<int>(out_.size()) > budget_.max_length; }

  void expand_nt(const std::string& name, int depth) {
    const auto* alts = g_.find(name);
    if (!alts) throw GrammarError("undefined nonterminal <" + name + ">");
    std::size_t pick;
    if (depth > budget_.max_depth || forced()) {
      pick = cheapest_alt(*alts);
    } else {
      pick = std::uniform_int_distribution<std::size_t>(0, alts->size() - 1)(rng_);
    }
    expand_seq((*alts)[pick], depth);
  }

  std::size_t cheapest_alt(const std::vector<Alternative>& alts) const {
    std::size_t best = 0;
    long best_len = kInf, best_h = kInf;
    for (std::size_t i = 0; i < alts.size(); ++i) {
      long l = alt_cost(alts[i], mc_, false);
      long h = alt_cost(alts[i], mc_, true);
      if (l < best_len || (l == best_len && h < best_h)) {
        best = i;
        best_len = l;
        best_h = h;
      }
    }
    return best;
  }

  void expand_seq(const Alternative& seq, int depth) {
    for (const Symbol& s : seq) {
      switch (s.kind) {
        case SymbolKind::Terminal:
          out_.push_back(s.term);
          break;
        case SymbolKind::CharClass: {
          std::string members = class_members(s.cls, s.cls_except, alphabet_);
          std::size_t i = std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng_);
          out_.push_back(members[i]);
          break;
        }
        case SymbolKind::Nonterminal:
          expand_nt(s.ref, depth + 1);
          break;
        case SymbolKind::Group: {
          int reps = 0;
          if (depth <= budget_.max_depth && !forced()) {
            reps = std::uniform_int_distribution<int>(0, 3)(rng_);
          }
          for (int r = 0; r < reps; ++r) expand_seq(s.body, depth + 1);
          break;
        }
      }
    }
  }

  const Grammar& g_;
  DerivationBudget budget_;
  const Alphabet& alphabet_;
  MinCosts mc_;
  std::mt19937_64 rng_;
  std::string out_;
};

}  // namespace detail

// Draws one string from the grammar: uniform seeded choice among
// alternatives, starred groups expand 0..3 times, and once the depth budget
// is exceeded derivation is steered to the shortest completion.
inline std::string generate(const Grammar& g, const DerivationBudget& budget,
                            const Alphabet& a = Alphabet::standard()) {
  return detail::Deriver(g, budget, a).run();
}

}  // namespace gmine
