#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gmine/queue.hpp"
#include "gmine/solver.hpp"
#include "gmine/subjects/registry.hpp"

namespace gmine {

// Tuning for the input generator. Each wall-clock limit has a deterministic
// execution-count companion so that seeded runs reproduce bit-identically
// whenever the count binds first.
struct GenConfig {
  char placeholder = Alphabet::kPlaceholder;
  // substituted for a placeholder that was consumed as plain content
  static constexpr char kContentProbe = 'a';
  // forced continuations only jump the queue while the candidate is short
  static constexpr int kDepthBoostLimit = 24;
  int phase1_input_count = 500;           // queue pops in phase 1
  double prefix_scanner_threshold = 0.10;
  double phase2_budget_per_function = 30.0;  // seconds
  int phase3_queue_size = 50;
  double phase3_time_limit = 10.0;        // seconds
  double global_time_limit = 3600.0;      // seconds, one-phase mode
  std::uint64_t rng_seed = 1;

  long step_budget = 100000;
  // spliced stems and queued candidates are kept short so inputs cannot
  // snowball through repeated stem insertion
  int max_stem_length = 48;
  int max_candidate_length = 256;
  long one_phase_max_execs = 1000000;
  long phase1_max_execs = 100000;
  long phase2_max_execs_per_function = 8000;
  long phase3_max_execs = 40000;
  int phase2_rounds_cap = 3;
};

// Function prefixes observed at FunctionEnter events: per function, the
// distinct consumed-input prefixes in first-recorded order (used to seed the
// per-function queues). Scanner functions are the ones consuming input
// character by character; they show up either through the prefix-count
// threshold or by being entered at three or more consecutive positions
// under one parent scope.
class PrefixTable {
 public:
  // Retention bound per function: the earliest-recorded prefixes are the
  // shortest exploration contexts and make the best phase-2 seeds.
  static constexpr std::size_t kMaxPrefixesPerFunction = 40;

  void record(std::string_view func, const std::string& prefix) {
    Entry& e = entry(func);
    e.trigger_chars.insert(prefix.empty() ? '\0' : prefix.back());
    auto it = e.index.find(prefix);
    if (it != e.index.end()) {
      ++e.counts[it->second];
      return;
    }
    if (e.prefixes.size() >= kMaxPrefixesPerFunction) return;
    e.index.emplace(prefix, e.prefixes.size());
    e.prefixes.push_back(prefix);
    e.counts.push_back(1);
  }

  void mark_per_char(std::string_view func) { entry(func).per_char = true; }

  const std::vector<std::string>& functions() const { return order_; }

  const std::vector<std::string>* prefixes(std::string_view func) const {
    auto it = map_.find(std::string(func));
    return it == map_.end() ? nullptr : &it->second.prefixes;
  }

  long distinct_count(std::string_view func) const {
    auto it = map_.find(std::string(func));
    return it == map_.end() ? 0 : static_cast<long>(it->second.prefixes.size());
  }

  bool per_char(std::string_view func) const {
    auto it = map_.find(std::string(func));
    return it != map_.end() && it->second.per_char;
  }

  // Prefix count for the scanner filter: the number of distinct triggering
  // characters (a prefix's last character is what caused the call, so the
  // same trigger never counts twice).
  long prefix_count(std::string_view func) const {
    auto it = map_.find(std::string(func));
    return it == map_.end() ? 0 : static_cast<long>(it->second.trigger_chars.size());
  }

  void classify(double threshold, long tested_inputs) {
    scanner_.clear();
    double cut = threshold * static_cast<double>(tested_inputs);
    for (const std::string& f : order_) {
      if (per_char(f) || static_cast<double>(prefix_count(f)) > cut) scanner_.insert(f);
    }
  }

  bool is_scanner(std::string_view func) const { return scanner_.count(std::string(func)) > 0; }
  bool is_parser(std::string_view func) const { return !is_scanner(func); }
  const std::unordered_set<std::string>& scanner_set() const { return scanner_; }

  std::vector<std::string> parser_functions() const {
    std::vector<std::string> out;
    for (const std::string& f : order_) {
      if (is_parser(f)) out.push_back(f);
    }
    return out;
  }

 private:
  struct Entry {
    std::vector<std::string> prefixes;
    std::vector<long> counts;
    std::unordered_map<std::string, std::size_t> index;
    std::set<char> trigger_chars;
    bool per_char = false;
  };

  Entry& entry(std::string_view func) {
    auto it = map_.find(std::string(func));
    if (it != map_.end()) return it->second;
    order_.emplace_back(func);
    return map_[order_.back()];
  }

  std::vector<std::string> order_;
  std::unordered_map<std::string, Entry> map_;
  std::unordered_set<std::string> scanner_;
};

// Function stems: distinct input fragments consumed inside a function scope
// from entry to normal exit, in first-recorded order. Spliced round-robin.
class StemTable {
 public:
  void record(std::string_view func, const std::string& stem) {
    Entry& e = entry(func);
    if (!e.index.insert(stem).second) return;
    e.stems.push_back(stem);
  }

  const std::vector<std::string>* stems(std::string_view func) const {
    auto it = map_.find(std::string(func));
    if (it == map_.end() || it->second.stems.empty()) return nullptr;
    return &it->second.stems;
  }

  std::optional<std::string> next_stem(std::string_view func) {
    auto it = map_.find(std::string(func));
    if (it == map_.end() || it->second.stems.empty()) return std::nullopt;
    Entry& e = it->second;
    const std::string& s = e.stems[e.rr % e.stems.size()];
    ++e.rr;
    return s;
  }

  const std::vector<std::string>& functions() const { return order_; }

 private:
  struct Entry {
    std::vector<std::string> stems;
    std::unordered_set<std::string> index;
    std::size_t rr = 0;
  };

  Entry& entry(std::string_view func) {
    auto it = map_.find(std::string(func));
    if (it != map_.end()) return it->second;
    order_.emplace_back(func);
    return map_[order_.back()];
  }

  std::vector<std::string> order_;
  std::unordered_map<std::string, Entry> map_;
};

// Valid inputs in discovery order with per-phase provenance.
struct InputCorpus {
  std::vector<std::string> valid;
  std::vector<int> phase;
  std::unordered_set<std::string> seen;
  bool unsolved = false;

  bool add(const std::string& s, int ph) {
    if (!seen.insert(s).second) return false;
    valid.push_back(s);
    phase.push_back(ph);
    return true;
  }
  bool contains(const std::string& s) const { return seen.count(s) > 0; }
  std::size_t size() const { return valid.size(); }
};

struct PhaseStats {
  double ms = 0;
  long pops = 0;
  long execs = 0;
  long valids = 0;
};

struct GenTelemetry {
  PhaseStats phase1, phase2, phase3;
  double total_ms = 0;
};

struct ThreePhaseResult {
  InputCorpus corpus;
  PrefixTable prefixes;
  StemTable stems;
  GenTelemetry telemetry;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

}  // namespace detail

// Placeholder-driven input generation: Algorithm-1 exploration plus the
// three-phase prefix/stem pipeline.
class Generator {
 public:
  Generator(const Subject& subject, GenConfig cfg) : subject_(subject), cfg_(cfg) {
    if (!Alphabet::standard().contains(cfg_.placeholder)) {
      throw ConfigError("placeholder is not an alphabet character");
    }
    if (cfg_.phase1_input_count <= 0 || cfg_.phase3_queue_size <= 0 || cfg_.step_budget <= 0 ||
        cfg_.phase2_budget_per_function <= 0 || cfg_.phase3_time_limit <= 0 ||
        cfg_.global_time_limit <= 0) {
      throw ConfigError("generator budgets must be positive");
    }
  }

  // Base algorithm: seed the queue with the placeholder, solve negated
  // placeholder constraints, extend breadth-first. Stops at target_count
  // valid inputs, queue exhaustion, or the time/execution budget.
  InputCorpus one_phase(long target_count) {
    InputCorpus corpus;
    WorkQueue queue;
    std::mt19937_64 rng(detail::mix_seed(cfg_.rng_seed, "one-phase"));
    auto t0 = Clock::now();
    queue.push(std::string(1, cfg_.placeholder), rng);
    long execs = 0;
    while (!queue.empty() && static_cast<long>(corpus.size()) < target_count &&
           execs < cfg_.one_phase_max_execs && seconds_since(t0) < cfg_.global_time_limit) {
      std::string input = *queue.pop();
      ExecutionResult res = run_plain(input, execs);
      store_stripped(input, corpus, 1, execs);
      pc_route(input, res, std::nullopt, queue, rng, corpus, 1, execs, target_count);
    }
    corpus.unsolved = corpus.valid.empty();
    return corpus;
  }

  // Phase 1: run the base algorithm for phase1_input_count queue pops while
  // recording function prefixes and initial stems, then apply the scanner
  // filter.
  ThreePhaseResult phase1_collect() {
    ThreePhaseResult r;
    WorkQueue queue;
    std::mt19937_64 rng(detail::mix_seed(cfg_.rng_seed, "phase1"));
    auto t0 = Clock::now();
    queue.push(std::string(1, cfg_.placeholder), rng);
    long pops = 0;
    long execs = 0;
    while (!queue.empty() && pops < cfg_.phase1_input_count && execs < cfg_.phase1_max_execs) {
      std::string input = *queue.pop();
      ++pops;
      ExecutionResult res = run_plain(input, execs);
      harvest(input, res, r.prefixes, r.stems, /*stems_need_accept=*/false);
      store_stripped(input, r.corpus, 1, execs);
      pc_route_recording(input, res, std::nullopt, queue, rng, r, 1, execs);
    }
    execs_total_ = execs;
    r.prefixes.classify(cfg_.prefix_scanner_threshold, execs_total_);
    r.telemetry.phase1.ms = ms_since(t0);
    r.telemetry.phase1.pops = pops;
    r.telemetry.phase1.execs = execs;
    r.telemetry.phase1.valids = static_cast<long>(r.corpus.size());
    return r;
  }

  // Phase 2: learn longer stems per parser function, splicing known stems of
  // subfunctions at their entry points. Newly discovered parser functions
  // get their own pass on later rounds.
  void phase2_extend(ThreePhaseResult& r) {
    auto t0 = Clock::now();
    long execs = 0;
    std::unordered_set<std::string> learned;
    for (int round = 0; round < cfg_.phase2_rounds_cap; ++round) {
      std::vector<std::string> todo;
      for (const std::string& f : r.prefixes.parser_functions()) {
        if (!learned.count(f)) todo.push_back(f);
      }
      if (todo.empty()) break;
      std::unordered_set<std::string> scanners = r.prefixes.scanner_set();
      for (const std::string& f : todo) {
        learned.insert(f);
        learn_function(f, r, scanners, execs);
      }
      r.prefixes.classify(cfg_.prefix_scanner_threshold, execs_total_ + execs);
    }
    execs_total_ += execs;
    r.telemetry.phase2.ms = ms_since(t0);
    r.telemetry.phase2.execs = execs;
    r.telemetry.phase2.valids = static_cast<long>(r.corpus.size()) - r.telemetry.phase1.valids;
  }

  // Phase 3: bound the queue to phase3_queue_size randomly retained
  // candidates and keep extending until every retained candidate has been
  // completed to a valid input or the limit is hit.
  void phase3_complete(ThreePhaseResult& r) {
    auto t0 = Clock::now();
    std::mt19937_64 rng(detail::mix_seed(cfg_.rng_seed, "phase3"));
    WorkQueue queue(static_cast<std::size_t>(cfg_.phase3_queue_size));
    std::size_t next_leftover = 0;
    auto refill = [&] {
      while (next_leftover < leftovers_.size() &&
             queue.size() < static_cast<std::size_t>(cfg_.phase3_queue_size)) {
        queue.push(std::move(leftovers_[next_leftover++]), rng);
      }
    };
    refill();
    std::unordered_set<std::string> scanners = r.prefixes.scanner_set();
    ExecOptions opts = classified_options(scanners);
    const std::string entry_name = entry_function_name();
    long execs = 0;
    long valids_before = static_cast<long>(r.corpus.size());
    while (!queue.empty() && execs < cfg_.phase3_max_execs &&
           seconds_since(t0) < cfg_.phase3_time_limit) {
      bool all_done = true;
      for (const std::string& item : queue.items()) {
        if (!r.corpus.contains(item.substr(0, item.size() - 1))) {
          all_done = false;
          break;
        }
      }
      if (all_done) {
        // the retained set is completed; draw the next batch of pending
        // candidates while budget remains
        if (next_leftover >= leftovers_.size()) break;
        while (auto done = queue.pop()) (void)done;
        refill();
        continue;
      }
      std::string input = *queue.pop();
      ExecutionResult res = run_opts(input, opts, execs);
      harvest(input, res, r.prefixes, r.stems, /*stems_need_accept=*/true);
      store_stripped(input, r.corpus, 3, execs);
      if (res.accepted()) continue;
      step_candidate(input, res, entry_name, r, queue, rng, 3, execs);
      if (queue.empty()) refill();
    }
    leftovers_.clear();
    r.telemetry.phase3.ms = ms_since(t0);
    r.telemetry.phase3.execs = execs;
    r.telemetry.phase3.valids = static_cast<long>(r.corpus.size()) - valids_before;
  }

  ThreePhaseResult run_three_phase() {
    auto t0 = Clock::now();
    ThreePhaseResult r = phase1_collect();
    phase2_extend(r);
    phase3_complete(r);
    r.corpus.unsolved = r.corpus.valid.empty();
    r.telemetry.total_ms = ms_since(t0);
    return r;
  }

  long total_execs() const { return execs_total_; }

 private:
  using Clock = std::chrono::steady_clock;

  static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }
  static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string entry_function_name() const {
    ExecutionResult res = execute(subject_, "", ExecOptions{cfg_.step_budget, nullptr});
    if (!res.trace.scopes.empty()) return std::string(res.trace.scopes[0].label);
    return subject_.name;
  }

  ExecOptions classified_options(const std::unordered_set<std::string>& scanners) const {
    ExecOptions opts;
    opts.step_budget = cfg_.step_budget;
    opts.is_parser_function = [scanners](std::string_view f) {
      return scanners.count(std::string(f)) == 0;
    };
    return opts;
  }

  ExecutionResult run_plain(const std::string& input, long& execs) {
    ++execs;
    return execute(subject_, input, ExecOptions{cfg_.step_budget, nullptr});
  }

  ExecutionResult run_opts(const std::string& input, const ExecOptions& opts, long& execs) {
    ++execs;
    return execute(subject_, input, opts);
  }

  // Stores the popped candidate with its trailing sentinel stripped, after
  // re-verifying that the stripped input is itself accepted.
  void store_stripped(const std::string& candidate, InputCorpus& corpus, int phase, long& execs) {
    std::string stripped = candidate.substr(0, candidate.size() - 1);
    if (corpus.contains(stripped)) return;
    ++execs;
    ExecutionResult res = execute(subject_, stripped, ExecOptions{cfg_.step_budget, nullptr});
    if (res.accepted()) corpus.add(stripped, phase);
  }

  // Lines 10-20 of the base algorithm: filter the path condition to the
  // placeholder index, negate each term, substitute, re-execute, extend.
  // A placeholder consumed as plain content (no constraint pinned it) gets a
  // representative content character substituted instead, so positions that
  // accept arbitrary text are explored without storing the sentinel itself.
  void pc_route(const std::string& input, const ExecutionResult& popped,
                std::optional<std::string_view> func, WorkQueue& queue, std::mt19937_64& rng,
                InputCorpus& corpus, int phase, long& execs, long target_count) {
    int idx = static_cast<int>(input.size()) - 1;
    auto try_char = [&](char ch) {
      std::string cand = input;
      cand.back() = ch;
      ++execs;
      ExecutionResult res = execute(subject_, cand, ExecOptions{cfg_.step_budget, nullptr});
      if (res.accepted()) corpus.add(cand, phase);
      if (static_cast<int>(cand.size()) < cfg_.max_candidate_length) {
        queue.push(cand + cfg_.placeholder, rng);
      }
    };
    for (const Constraint& term : filter_pc(popped.pc, idx, func)) {
      if (static_cast<long>(corpus.size()) >= target_count) return;
      auto ch = solve_negation(term, {});
      if (!ch || *ch == cfg_.placeholder) continue;
      try_char(*ch);
    }
    if (static_cast<long>(corpus.size()) >= target_count) return;
    if (idx >= 0 && idx < static_cast<int>(popped.trace.consumed_by.size()) &&
        popped.trace.consumed_by[idx] >= 0) {
      try_char(GenConfig::kContentProbe);
    }
  }

  // Same, but records prefixes/stems from the intermediate executions too
  // (phase 1 records on every run). A pop with a single successor is a
  // forced continuation (keyword crawls and the like); it goes to the front
  // of the queue so depth is not starved by sibling breadth.
  void pc_route_recording(const std::string& input, const ExecutionResult& popped,
                          std::optional<std::string_view> func, WorkQueue& queue,
                          std::mt19937_64& rng, ThreePhaseResult& r, int phase, long& execs,
                          bool depth_boost = false) {
    int idx = static_cast<int>(input.size()) - 1;
    std::vector<std::string> produced;
    auto try_char = [&](char ch) {
      std::string cand = input;
      cand.back() = ch;
      ++execs;
      ExecutionResult res = execute(subject_, cand, ExecOptions{cfg_.step_budget, nullptr});
      harvest(cand, res, r.prefixes, r.stems, /*stems_need_accept=*/phase != 1);
      if (res.accepted()) r.corpus.add(cand, phase);
      if (static_cast<int>(cand.size()) < cfg_.max_candidate_length) {
        produced.push_back(cand + cfg_.placeholder);
      }
    };
    for (const Constraint& term : filter_pc(popped.pc, idx, func)) {
      auto ch = solve_negation(term, {});
      if (!ch || *ch == cfg_.placeholder) continue;
      try_char(*ch);
    }
    bool forced = depth_boost && produced.size() == 1 &&
                  static_cast<int>(produced[0].size()) <= GenConfig::kDepthBoostLimit;
    if (idx >= 0 && idx < static_cast<int>(popped.trace.consumed_by.size()) &&
        popped.trace.consumed_by[idx] >= 0) {
      try_char(GenConfig::kContentProbe);
    }
    if (forced) {
      queue.push_front(std::move(produced[0]));
      produced.erase(produced.begin());
    }
    for (std::string& cand : produced) queue.push(std::move(cand), rng);
  }

  // Prefix and stem extraction from one execution trace.
  //
  // A prefix is recorded when replaying it with the placeholder appended
  // would still enter the function: every constraint recorded before the
  // scope opened on an index at or past the entry position must also hold
  // for the placeholder character. Prefixes or stems containing the
  // placeholder are skipped so spliced candidates keep exactly one sentinel.
  void harvest(const std::string& input, const ExecutionResult& res, PrefixTable& prefixes,
               StemTable& stems, bool stems_need_accept) {
    for (const ScopeNode& s : res.trace.scopes) {
      if (s.kind != ScopeKind::Function) continue;
      std::string prefix = input.substr(0, static_cast<std::size_t>(s.enter_pos));
      if (prefix.find(cfg_.placeholder) == std::string::npos && replay_safe(res.pc, s)) {
        prefixes.record(s.label, prefix);
      }
      if (s.error_exit || s.exit_pos <= s.enter_pos) continue;
      if (stems_need_accept && !res.accepted()) continue;
      std::string stem = input.substr(static_cast<std::size_t>(s.enter_pos),
                                      static_cast<std::size_t>(s.exit_pos - s.enter_pos));
      if (stem.find(cfg_.placeholder) != std::string::npos) continue;
      if (static_cast<int>(stem.size()) > cfg_.max_stem_length) continue;
      stems.record(s.label, stem);
    }
    mark_per_char_chains(res.trace, prefixes);
  }

  // A function entered at >= 3 consecutive positions under the same
  // enclosing function instance is consuming the input character by
  // character.
  static void mark_per_char_chains(const ExecutionTrace& trace, PrefixTable& prefixes) {
    std::map<std::pair<int, std::string_view>, std::pair<int, int>> chains;  // -> pos, len
    for (const ScopeNode& s : trace.scopes) {
      if (s.kind != ScopeKind::Function || s.parent < 0) continue;
      int parent = s.parent;
      while (parent >= 0 && trace.scopes[parent].kind != ScopeKind::Function) {
        parent = trace.scopes[parent].parent;
      }
      if (parent < 0) continue;
      auto& [pos, len] = chains[{parent, s.label}];
      if (len > 0 && s.enter_pos == pos + 1) {
        ++len;
      } else {
        len = 1;
      }
      pos = s.enter_pos;
      if (len >= 3) prefixes.mark_per_char(s.label);
    }
  }

  bool replay_safe(const PathCondition& pc, const ScopeNode& s) const {
    for (int i = 0; i < s.pc_at_enter && i < static_cast<int>(pc.size()); ++i) {
      if (pc[i].index >= s.enter_pos && !satisfies(cfg_.placeholder, pc[i])) return false;
    }
    return true;
  }

  bool is_func_start(const ExecutionTrace& trace, int idx, std::string_view lacc,
                     const std::unordered_set<std::string>& scanners) const {
    int sc = trace.last_access_scope(idx);
    if (sc < 0) return false;
    const ScopeNode* fn = trace.enclosing_function(sc, [&](std::string_view f) {
      return scanners.count(std::string(f)) == 0;
    });
    return fn && fn->label == lacc && fn->first_access == idx;
  }

  // One Algorithm-2 step for a popped candidate: splice a stored stem when
  // the placeholder sits at a subfunction's entry, otherwise solve from the
  // path condition filtered to the last-access function.
  void step_candidate(const std::string& input, const ExecutionResult& res,
                      const std::string& func_to_learn, ThreePhaseResult& r, WorkQueue& queue,
                      std::mt19937_64& rng, int phase, long& execs) {
    int idx = static_cast<int>(input.size()) - 1;
    if (res.last_access_func && *res.last_access_func != func_to_learn &&
        is_func_start(res.trace, idx, *res.last_access_func, r.prefixes.scanner_set())) {
      if (auto stem = r.stems.next_stem(*res.last_access_func)) {
        std::string cand = input.substr(0, input.size() - 1) + *stem + cfg_.placeholder;
        if (static_cast<int>(cand.size()) <= cfg_.max_candidate_length) {
          queue.push_front(std::move(cand));
          // the splice replaces solving for the subfunction, but the learned
          // function's own terms at this position would otherwise stay
          // buried behind it
          pc_route_recording(input, res, std::optional<std::string_view>(func_to_learn), queue,
                             rng, r, phase, execs);
          return;
        }
      }
    }
    std::optional<std::string_view> filter;
    if (res.last_access_func) filter = *res.last_access_func;
    pc_route_recording(input, res, filter, queue, rng, r, phase, execs, /*depth_boost=*/true);
    // also solve the learned function's own terms; the last-access filter
    // alone starves repetition inside it whenever an outer scope re-peeks
    // the placeholder
    if (filter && *filter != func_to_learn) {
      pc_route_recording(input, res, std::optional<std::string_view>(func_to_learn), queue, rng, r,
                         phase, execs);
    }
  }

  void learn_function(const std::string& f, ThreePhaseResult& r,
                      const std::unordered_set<std::string>& scanners, long& execs) {
    const std::vector<std::string>* seeds = r.prefixes.prefixes(f);
    if (!seeds) return;
    std::mt19937_64 rng(detail::mix_seed(cfg_.rng_seed, f));
    WorkQueue queue;
    for (const std::string& p : *seeds) queue.push(p + cfg_.placeholder, rng);
    ExecOptions opts = classified_options(scanners);
    auto t0 = Clock::now();
    long execs_f = 0;
    while (!queue.empty() && execs_f < cfg_.phase2_max_execs_per_function &&
           seconds_since(t0) < cfg_.phase2_budget_per_function) {
      std::string input = *queue.pop();
      ExecutionResult res = run_opts(input, opts, execs_f);
      harvest(input, res, r.prefixes, r.stems, /*stems_need_accept=*/true);
      store_stripped(input, r.corpus, 2, execs_f);
      step_candidate(input, res, f, r, queue, rng, 2, execs_f);
    }
    execs += execs_f;
    // unprocessed candidates feed phase 3
    while (auto left = queue.pop()) leftovers_.push_back(std::move(*left));
  }

  const Subject& subject_;
  GenConfig cfg_;
  long execs_total_ = 0;
  std::vector<std::string> leftovers_;
};

// Convenience wrappers matching the pipeline stages.
inline InputCorpus one_phase(const Subject& s, const GenConfig& cfg, long target_count) {
  return Generator(s, cfg).one_phase(target_count);
}

inline ThreePhaseResult run_three_phase(const Subject& s, const GenConfig& cfg) {
  return Generator(s, cfg).run_three_phase();
}

}  // namespace gmine
