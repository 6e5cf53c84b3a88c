#pragma once

#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "gmine/constraint.hpp"
#include "gmine/trace.hpp"

namespace gmine {

// Raised by subjects on malformed input; caught by the execution harness.
class ParseError : public std::exception {
 public:
  ParseError(int position, std::string message) : position_(position), message_(std::move(message)) {}
  int position() const { return position_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  int position_;
  std::string message_;
};

// Raised when an execution exceeds its step budget.
class BudgetExhausted : public std::exception {
 public:
  const char* what() const noexcept override { return "step budget exhausted"; }
};

// Subject misuse of the instrumentation API (unbalanced scopes).
class InstrumentationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Stm;
class Sym;

namespace detail {

// Mutable state of one execution: stream cursor, recorded path condition,
// scope tree, and per-index access log.
class ExecContext {
 public:
  ExecContext(std::string_view input, long step_budget,
              std::function<bool(std::string_view)> is_parser_function)
      : input_(input),
        step_budget_(step_budget),
        is_parser_function_(std::move(is_parser_function)) {
    trace_.accesses.resize(input_.size());
    trace_.consumed_by.assign(input_.size(), -1);
    pc_.reserve(64);
  }

  const std::string& input() const { return input_; }
  int pos() const { return pos_; }
  bool at_eof() const { return pos_ >= static_cast<int>(input_.size()); }

  void step() {
    if (++steps_ > step_budget_) throw BudgetExhausted{};
  }

  void record_access(int index) {
    if (index < 0 || index >= static_cast<int>(input_.size())) return;
    trace_.accesses[index].push_back(open_.empty() ? -1 : open_.back());
    // Every open scope without a first access saw this one first. Once a
    // scope has a first access, so do all of its ancestors.
    for (auto it = open_.rbegin(); it != open_.rend(); ++it) {
      if (trace_.scopes[*it].first_access >= 0) break;
      trace_.scopes[*it].first_access = index;
    }
  }

  void record_comparison(int index, Relation rel, std::string operand) {
    Constraint k;
    k.index = index;
    k.rel = rel;
    k.operand = std::move(operand);
    k.func = attributed_function();
    k.node = open_.empty() ? std::string_view{} : trace_.scopes[open_.back()].label;
    pc_.push_back(std::move(k));
  }

  int enter_scope(ScopeKind kind, std::string_view label) {
    step();
    ScopeNode s;
    s.id = static_cast<int>(trace_.scopes.size());
    s.kind = kind;
    s.label = label;
    s.parent = open_.empty() ? -1 : open_.back();
    s.enter_pos = pos_;
    s.exit_pos = pos_;
    s.pc_at_enter = static_cast<int>(pc_.size());
    trace_.scopes.push_back(std::move(s));
    if (!open_.empty()) trace_.scopes[open_.back()].children.push_back(trace_.scopes.back().id);
    open_.push_back(trace_.scopes.back().id);
    return trace_.scopes.back().id;
  }

  void exit_scope(int id, bool error_exit) {
    if (open_.empty() || open_.back() != id) throw InstrumentationError("unbalanced scope exit");
    trace_.scopes[id].exit_pos = pos_;
    trace_.scopes[id].error_exit = error_exit;
    open_.pop_back();
  }

  int advance() {
    int i = pos_++;
    if (i < static_cast<int>(trace_.consumed_by.size())) {
      trace_.consumed_by[i] = open_.empty() ? -1 : open_.back();
    }
    return i;
  }

  PathCondition take_pc() { return std::move(pc_); }
  ExecutionTrace take_trace() { return std::move(trace_); }
  const ExecutionTrace& trace() const { return trace_; }
  bool scopes_balanced() const { return open_.empty(); }

 private:
  std::string_view attributed_function() const {
    for (auto it = open_.rbegin(); it != open_.rend(); ++it) {
      const ScopeNode& s = trace_.scopes[*it];
      if (s.kind != ScopeKind::Function) continue;
      if (!is_parser_function_ || is_parser_function_(s.label)) return s.label;
    }
    // No parser-classified enclosing function: fall back to the innermost
    // function so the constraint stays attributable.
    for (auto it = open_.rbegin(); it != open_.rend(); ++it) {
      const ScopeNode& s = trace_.scopes[*it];
      if (s.kind == ScopeKind::Function) return s.label;
    }
    return {};
  }

  std::string input_;
  int pos_ = 0;
  long steps_ = 0;
  long step_budget_;
  std::function<bool(std::string_view)> is_parser_function_;
  PathCondition pc_;
  ExecutionTrace trace_;
  std::vector<int> open_;
};

}  // namespace detail

// A character yielded by the stream. Comparing it against literals records
// the comparison outcome as a path-condition constraint. Comparisons on the
// EOF symbol return false and record nothing (there is no input index to
// constrain); the reserved end marker is only visible through is_eof().
class Sym {
 public:
  static constexpr char kEndMarker = '\0';

  bool is_eof() const { return eof_; }
  char ch() const { return eof_ ? kEndMarker : ch_; }

  bool eq(char c) const {
    if (eof_) return false;
    bool r = ch_ == c;
    ctx_->record_comparison(index_, r ? Relation::Eq : Relation::Neq, std::string(1, c));
    return r;
  }

  bool in(std::string_view set) const {
    if (eof_) return false;
    bool r = set.find(ch_) != std::string_view::npos;
    ctx_->record_comparison(index_, r ? Relation::InSet : Relation::NotInSet, std::string(set));
    return r;
  }

  bool lt(char c) const { return ordered(c, Relation::Lt, Relation::Ge, ch_ < c); }
  bool le(char c) const { return ordered(c, Relation::Le, Relation::Gt, ch_ <= c); }
  bool gt(char c) const { return ordered(c, Relation::Gt, Relation::Le, ch_ > c); }
  bool ge(char c) const { return ordered(c, Relation::Ge, Relation::Lt, ch_ >= c); }

 private:
  friend class Stm;
  Sym(detail::ExecContext* ctx, int index, char ch, bool eof)
      : ctx_(ctx), index_(index), ch_(ch), eof_(eof) {}

  bool ordered(char c, Relation if_true, Relation if_false, bool r) const {
    if (eof_) return false;
    ctx_->record_comparison(index_, r ? if_true : if_false, std::string(1, c));
    return r;
  }

  detail::ExecContext* ctx_;
  int index_;
  char ch_;
  bool eof_;
};

// The instrumented input stream handed to subjects.
class Stm {
 public:
  explicit Stm(detail::ExecContext& ctx) : ctx_(&ctx) {}

  Sym peek() {
    ctx_->step();
    if (ctx_->at_eof()) return Sym(ctx_, ctx_->pos(), Sym::kEndMarker, true);
    int i = ctx_->pos();
    ctx_->record_access(i);
    return Sym(ctx_, i, ctx_->input()[i], false);
  }

  Sym next() {
    ctx_->step();
    if (ctx_->at_eof()) return Sym(ctx_, ctx_->pos(), Sym::kEndMarker, true);
    int i = ctx_->advance();
    ctx_->record_access(i);
    return Sym(ctx_, i, ctx_->input()[i], false);
  }

  bool eof() {
    ctx_->step();
    return ctx_->at_eof();
  }

  void skip_spaces() {
    while (true) {
      Sym c = peek();
      if (c.is_eof() || !c.in(" \t\n")) return;
      next();
    }
  }

  // Consumes one character and records the equality comparison; mismatch
  // raises a parse error carrying the position.
  void expect(char c) {
    Sym s = next();
    if (s.is_eof()) throw error(std::string("expected '") + c + "', got end of input");
    if (!s.eq(c)) throw error(std::string("expected '") + c + "'");
  }

  int pos() const { return ctx_->pos(); }

  ParseError error(std::string message) const { return ParseError(ctx_->pos(), std::move(message)); }

  detail::ExecContext& context() { return *ctx_; }

 private:
  detail::ExecContext* ctx_;
};

namespace detail {

class ScopeGuard {
 public:
  ScopeGuard(Stm& stm, ScopeKind kind, std::string_view label)
      : ctx_(&stm.context()),
        id_(ctx_->enter_scope(kind, label)),
        uncaught_(std::uncaught_exceptions()) {}

  ~ScopeGuard() noexcept(false) { ctx_->exit_scope(id_, std::uncaught_exceptions() > uncaught_); }

  ScopeGuard(const ScopeGuard&) = delete;
  ScopeGuard& operator=(const ScopeGuard&) = delete;

 private:
  ExecContext* ctx_;
  int id_;
  int uncaught_;
};

}  // namespace detail

// RAII scope markers used by instrumented subjects.
class FnScope : public detail::ScopeGuard {
 public:
  FnScope(Stm& stm, std::string_view name) : ScopeGuard(stm, ScopeKind::Function, name) {}
};

class LoopScope : public detail::ScopeGuard {
 public:
  LoopScope(Stm& stm, std::string_view label) : ScopeGuard(stm, ScopeKind::Loop, label) {}
};

class BranchScope : public detail::ScopeGuard {
 public:
  BranchScope(Stm& stm, std::string_view label) : ScopeGuard(stm, ScopeKind::Branch, label) {}
};

}  // namespace gmine
