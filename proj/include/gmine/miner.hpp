#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "gmine/derivation.hpp"
#include "gmine/generator.hpp"
#include "gmine/grammar.hpp"
#include "gmine/recognizer.hpp"
#include "gmine/subjects/registry.hpp"

namespace gmine {

class MinerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MinerConfig {
  int probe_count = 16;      // substitution probes per ladder class
  int max_except_size = 64;  // widest allowed [print-except: ...] set
  std::uint64_t probe_seed = 0x9d2c5680;
  long step_budget = 100000;
};

// Parse tree recovered from one accepted execution: one node per function or
// loop scope that consumed input, terminal leaves for directly consumed
// characters.
struct ParseTree {
  struct Elem {
    bool is_char = false;
    char c = 0;
    int kid = -1;
  };

  std::string label;
  std::vector<Elem> elems;
  std::vector<ParseTree> kids;
  int begin = 0;
  int end = 0;

  void collect_terminals(std::string& out) const {
    for (const Elem& e : elems) {
      if (e.is_char) {
        out.push_back(e.c);
      } else {
        kids[e.kid].collect_terminals(out);
      }
    }
  }
  std::string terminals() const {
    std::string out;
    collect_terminals(out);
    return out;
  }
};

namespace detail {

inline int resolve_non_branch(const ExecutionTrace& t, int scope) {
  while (scope >= 0 && t.scopes[scope].kind == ScopeKind::Branch) scope = t.scopes[scope].parent;
  return scope;
}

inline void collect_kid_scopes(const ExecutionTrace& t, const ScopeNode& s, std::vector<int>& out) {
  for (int c : s.children) {
    if (t.scopes[c].kind == ScopeKind::Branch) {
      collect_kid_scopes(t, t.scopes[c], out);
    } else {
      out.push_back(c);
    }
  }
}

inline ParseTree build_tree(const ExecutionTrace& t, const std::vector<std::vector<int>>& chars_of,
                            int scope_id, std::string_view input) {
  const ScopeNode& s = t.scopes[scope_id];
  ParseTree node;
  node.label = std::string(s.label);
  node.begin = s.enter_pos;
  node.end = s.exit_pos;

  std::vector<int> kid_scopes;
  collect_kid_scopes(t, s, kid_scopes);

  const std::vector<int>& direct = chars_of[scope_id];
  std::size_t di = 0, ki = 0;
  while (di < direct.size() || ki < kid_scopes.size()) {
    bool take_char;
    if (di == direct.size()) {
      take_char = false;
    } else if (ki == kid_scopes.size()) {
      take_char = true;
    } else {
      take_char = direct[di] < t.scopes[kid_scopes[ki]].enter_pos;
    }
    if (take_char) {
      ParseTree::Elem e;
      e.is_char = true;
      e.c = input[static_cast<std::size_t>(direct[di])];
      node.elems.push_back(e);
      ++di;
    } else {
      const ScopeNode& kid = t.scopes[kid_scopes[ki]];
      if (kid.exit_pos > kid.enter_pos) {
        ParseTree sub = build_tree(t, chars_of, kid_scopes[ki], input);
        ParseTree::Elem e;
        e.kid = static_cast<int>(node.kids.size());
        node.kids.push_back(std::move(sub));
        node.elems.push_back(e);
      }
      ++ki;
    }
  }
  return node;
}

}  // namespace detail

// Parse tree from the trace of an accepted run.
inline ParseTree tree_from_trace(const ExecutionTrace& trace, std::string_view input) {
  if (trace.scopes.empty()) throw MinerError("trace has no scopes");
  for (std::size_t i = 1; i < trace.scopes.size(); ++i) {
    if (trace.scopes[i].parent < 0) throw MinerError("trace has multiple roots");
  }
  if (trace.scopes[0].parent != -1) throw MinerError("malformed trace");

  std::vector<std::vector<int>> chars_of(trace.scopes.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    int sc = trace.consumed_by.size() > i ? trace.consumed_by[i] : -1;
    if (sc < 0) throw MinerError("input index never consumed");
    int owner = detail::resolve_non_branch(trace, sc);
    if (owner < 0) throw MinerError("consumption outside any scope");
    chars_of[static_cast<std::size_t>(owner)].push_back(static_cast<int>(i));
  }
  return detail::build_tree(trace, chars_of, 0, input);
}

namespace detail {

// Character span of each alternative symbol inside the witness input; group
// symbols carry spans for their body symbols.
struct WitSpan {
  int begin = 0;
  int end = 0;
  std::vector<WitSpan> body;
};

struct AltWitness {
  std::string input;
  std::vector<WitSpan> spans;
};

struct RuleSet {
  Grammar g;
  std::map<std::string, std::vector<AltWitness>> witnesses;  // parallel to rule alternatives
};

inline void derive_node(const ParseTree& node, const std::string& input, RuleSet& rs) {
  Alternative alt;
  std::vector<WitSpan> spans;
  int cursor = node.begin;
  for (const ParseTree::Elem& e : node.elems) {
    if (e.is_char) {
      alt.push_back(Symbol::terminal(e.c));
      spans.push_back({cursor, cursor + 1, {}});
      cursor += 1;
    } else {
      const ParseTree& kid = node.kids[static_cast<std::size_t>(e.kid)];
      alt.push_back(Symbol::nonterminal(kid.label));
      spans.push_back({kid.begin, kid.end, {}});
      cursor = kid.end;
    }
  }
  auto& alts = rs.g.rule(node.label);
  auto& wits = rs.witnesses[node.label];
  bool known = false;
  for (const Alternative& existing : alts) {
    if (existing == alt) {
      known = true;
      break;
    }
  }
  if (!known) {
    alts.push_back(std::move(alt));
    wits.push_back({input, std::move(spans)});
  }
  for (const ParseTree& kid : node.kids) derive_node(kid, input, rs);
}

inline RuleSet derive_rules(const std::vector<ParseTree>& trees,
                            const std::vector<std::string>& inputs) {
  if (trees.empty()) throw MinerError("no parse trees");
  RuleSet rs;
  rs.g.start = trees[0].label;
  rs.g.rule(trees[0].label);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].label != rs.g.start) throw MinerError("trees disagree on the start symbol");
    derive_node(trees[i], inputs[i], rs);
  }
  rs.g.validate();
  return rs;
}

inline bool units_equal(const Alternative& alt, std::size_t i, std::size_t j, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) {
    if (!(alt[i + k] == alt[j + k])) return false;
  }
  return true;
}

// Folds contiguous runs of a repeated unit (>= 2 copies) into a starred
// group followed by the unit's last two observed copies, keeping the
// observed minimum of two. A fold is kept only if inserting one extra copy
// of the unit into the witness input is still accepted by the subject.
inline void fold_alternative(Alternative& alt, AltWitness& wit, const Subject& subject,
                             const MinerConfig& cfg) {
  std::size_t i = 0;
  while (i < alt.size()) {
    bool folded = false;
    for (std::size_t len = 1; !folded && i + 2 * len <= alt.size(); ++len) {
      if (!units_equal(alt, i, i + len, len)) continue;
      std::size_t k = 2;
      while (i + (k + 1) * len <= alt.size() && units_equal(alt, i, i + k * len, len)) ++k;
      int a = wit.spans[i].begin;
      int unit_end = wit.spans[i + len - 1].end;
      std::string unit_str = wit.input.substr(static_cast<std::size_t>(a),
                                              static_cast<std::size_t>(unit_end - a));
      std::string test = wit.input.substr(0, static_cast<std::size_t>(a)) + unit_str +
                         wit.input.substr(static_cast<std::size_t>(a));
      ExecutionResult res = execute(subject, test, ExecOptions{cfg.step_budget, nullptr});
      if (!res.accepted()) continue;

      std::vector<Symbol> unit(alt.begin() + static_cast<long>(i),
                               alt.begin() + static_cast<long>(i + len));
      std::vector<WitSpan> unit_spans(wit.spans.begin() + static_cast<long>(i),
                                      wit.spans.begin() + static_cast<long>(i + len));

      Alternative next(alt.begin(), alt.begin() + static_cast<long>(i));
      std::vector<WitSpan> next_spans(wit.spans.begin(), wit.spans.begin() + static_cast<long>(i));

      Symbol grp = Symbol::group(unit);
      WitSpan grp_span{a, a, unit_spans};
      next.push_back(std::move(grp));
      next_spans.push_back(std::move(grp_span));

      // the last two observed copies stay literal
      for (std::size_t copy = k - 2; copy < k; ++copy) {
        for (std::size_t s = 0; s < len; ++s) {
          next.push_back(alt[i + copy * len + s]);
          next_spans.push_back(wit.spans[i + copy * len + s]);
        }
      }
      std::size_t resume = next.size();
      next.insert(next.end(), alt.begin() + static_cast<long>(i + k * len), alt.end());
      next_spans.insert(next_spans.end(), wit.spans.begin() + static_cast<long>(i + k * len),
                        wit.spans.end());
      alt = std::move(next);
      wit.spans = std::move(next_spans);
      i = resume;
      folded = true;
    }
    if (!folded) ++i;
  }
}

inline void fold_repetitions(RuleSet& rs, const Subject& subject, const MinerConfig& cfg) {
  for (auto& [name, alts] : rs.g.rules()) {
    auto& wits = rs.witnesses[name];
    for (std::size_t i = 0; i < alts.size(); ++i) fold_alternative(alts[i], wits[i], subject, cfg);
    // folding can make alternatives collide
    std::vector<Alternative> kept;
    std::vector<AltWitness> kept_w;
    for (std::size_t i = 0; i < alts.size(); ++i) {
      bool dup = false;
      for (const Alternative& k : kept) {
        if (k == alts[i]) {
          dup = true;
          break;
        }
      }
      if (!dup) {
        kept.push_back(std::move(alts[i]));
        kept_w.push_back(std::move(wits[i]));
      }
    }
    alts = std::move(kept);
    wits = std::move(kept_w);
  }
}

// Substitution-probe generalization of terminals through the class ladder.
class Generalizer {
 public:
  Generalizer(const Subject& subject, const MinerConfig& cfg, const Alphabet& alphabet)
      : subject_(subject), cfg_(cfg), alphabet_(alphabet) {}

  void run(RuleSet& rs) {
    for (auto& [name, alts] : rs.g.rules()) {
      auto& wits = rs.witnesses[name];
      for (std::size_t i = 0; i < alts.size(); ++i) {
        visit_sequence(alts[i], wits[i].spans, wits[i].input);
      }
      // widening can make alternatives collide
      std::vector<Alternative> kept;
      for (auto& alt : alts) {
        bool dup = false;
        for (const Alternative& k : kept) {
          if (k == alt) {
            dup = true;
            break;
          }
        }
        if (!dup) kept.push_back(std::move(alt));
      }
      alts = std::move(kept);
    }
  }

 private:
  void visit_sequence(Alternative& alt, const std::vector<detail::WitSpan>& spans,
                      const std::string& input) {
    for (std::size_t i = 0; i < alt.size(); ++i) {
      Symbol& s = alt[i];
      if (s.kind == SymbolKind::Group) {
        visit_sequence(s.body, spans[i].body, input);
      } else if (s.kind == SymbolKind::Terminal && spans[i].end - spans[i].begin == 1) {
        Symbol widened = widen(input, spans[i].begin, s.term);
        s = widened;
      }
    }
  }

  // Ladder: digit, lower, alpha, alnum probed with probe_count samples each;
  // the full printable class is probed exhaustively so an exact exclusion
  // set (e.g. everything but 'u') can be kept when a few characters fail.
  Symbol widen(const std::string& input, int offset, char original) {
    auto key = std::make_pair(input, offset);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    Symbol best = Symbol::terminal(original);
    static const char* ladder[] = {"space", "digit", "lower", "alpha", "alnum"};
    for (const char* cls : ladder) {
      std::string members = class_members(cls, "", alphabet_);
      if (members.find(original) == std::string::npos) continue;
      if (probes_pass(input, offset, sample(members, input, offset))) {
        best = Symbol::char_class(cls);
      }
    }
    std::string print_members = class_members("print", "", alphabet_);
    std::string failures;
    for (char c : print_members) {
      if (c == original) continue;
      if (!probe_one(input, offset, c)) failures.push_back(c);
    }
    if (failures.empty()) {
      best = Symbol::char_class("print");
    } else if (static_cast<int>(failures.size()) <= cfg_.max_except_size) {
      best = Symbol::char_class("print-except", failures);
    }
    cache_.emplace(key, best);
    return best;
  }

  std::string sample(const std::string& members, const std::string& input, int offset) {
    if (static_cast<int>(members.size()) <= cfg_.probe_count) return members;
    std::string pool = members;
    std::mt19937_64 rng(detail::mix_seed(cfg_.probe_seed ^ static_cast<std::uint64_t>(offset), input));
    std::string out;
    for (int i = 0; i < cfg_.probe_count; ++i) {
      std::size_t j = std::uniform_int_distribution<std::size_t>(i, pool.size() - 1)(rng);
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      out.push_back(pool[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  bool probes_pass(const std::string& input, int offset, const std::string& chars) {
    for (char c : chars) {
      if (!probe_one(input, offset, c)) return false;
    }
    return true;
  }

  bool probe_one(const std::string& input, int offset, char c) {
    std::string probe = input;
    probe[static_cast<std::size_t>(offset)] = c;
    try {
      ExecutionResult res = execute(subject_, probe, ExecOptions{cfg_.step_budget, nullptr});
      return res.accepted();
    } catch (const std::exception&) {
      return false;
    }
  }

  const Subject& subject_;
  const MinerConfig& cfg_;
  const Alphabet& alphabet_;
  std::map<std::pair<std::string, int>, Symbol> cache_;
};

}  // namespace detail

// Spec-shaped stage operations.

inline Grammar derive_grammar(const std::vector<ParseTree>& trees,
                              const std::vector<std::string>& inputs) {
  return detail::derive_rules(trees, inputs).g;
}

inline Grammar detect_repetitions(const Grammar& g, const std::vector<ParseTree>& trees,
                                  const std::vector<std::string>& inputs, const Subject& subject,
                                  const MinerConfig& cfg = {}) {
  detail::RuleSet rs = detail::derive_rules(trees, inputs);
  if (!(rs.g == g)) throw MinerError("grammar does not match the given trees");
  detail::fold_repetitions(rs, subject, cfg);
  return rs.g;
}

// Widens terminals in a grammar derived (and possibly folded) from the
// given trees.
inline Grammar generalize_tokens(const Grammar& g, const Subject& subject,
                                 const std::vector<ParseTree>& trees,
                                 const std::vector<std::string>& inputs,
                                 const MinerConfig& cfg = {},
                                 const Alphabet& alphabet = Alphabet::standard()) {
  detail::RuleSet rs = detail::derive_rules(trees, inputs);
  if (!(rs.g == g)) {
    detail::fold_repetitions(rs, subject, cfg);
    if (!(rs.g == g)) throw MinerError("grammar does not match the given trees");
  }
  detail::Generalizer(subject, cfg, alphabet).run(rs);
  rs.g.validate();
  return rs.g;
}

struct MineStages {
  Grammar derived;
  Grammar folded;
  Grammar generalized;
  std::vector<ParseTree> trees;
};

inline MineStages mine_stages(const Subject& subject, const std::vector<std::string>& corpus,
                              const MinerConfig& cfg = {},
                              const Alphabet& alphabet = Alphabet::standard()) {
  if (corpus.empty()) throw MinerError("no inputs");
  std::vector<ParseTree> trees;
  trees.reserve(corpus.size());
  for (const std::string& input : corpus) {
    ExecutionResult res = execute(subject, input, ExecOptions{cfg.step_budget, nullptr});
    if (!res.accepted()) throw MinerError("corpus input rejected by subject: " + input);
    trees.push_back(tree_from_trace(res.trace, input));
  }
  MineStages out;
  detail::RuleSet rs = detail::derive_rules(trees, corpus);
  out.derived = rs.g;
  detail::fold_repetitions(rs, subject, cfg);
  out.folded = rs.g;
  detail::Generalizer(subject, cfg, alphabet).run(rs);
  rs.g.validate();
  out.generalized = rs.g;
  out.trees = std::move(trees);
  return out;
}

// Full mining pipeline: control-flow parse trees, grammar derivation,
// repetition folding, token generalization.
inline Grammar mine(const Subject& subject, const std::vector<std::string>& corpus,
                    const MinerConfig& cfg = {}) {
  return mine_stages(subject, corpus, cfg).generalized;
}

// Indented text rendering of a parse tree, for debugging dumps.
inline void dump_tree(const ParseTree& t, std::string& out, int depth = 0) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += t.label;
  out += "\n";
  for (const ParseTree::Elem& e : t.elems) {
    if (e.is_char) {
      out.append(static_cast<std::size_t>(depth + 1) * 2, ' ');
      out += "'";
      out.push_back(e.c);
      out += "'\n";
    } else {
      dump_tree(t.kids[static_cast<std::size_t>(e.kid)], out, depth + 1);
    }
  }
}

inline std::string dump_tree(const ParseTree& t) {
  std::string out;
  dump_tree(t, out);
  return out;
}

}  // namespace gmine
