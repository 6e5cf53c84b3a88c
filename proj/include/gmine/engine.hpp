#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "gmine/stream.hpp"

namespace gmine {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { Accepted, Rejected };

// Outcome of one concolic run: verdict, the recorded path condition and
// control-flow trace, and the parser function that last read the final
// input index (the placeholder position by construction of the generator).
struct ExecutionResult {
  Verdict verdict = Verdict::Rejected;
  PathCondition pc;
  ExecutionTrace trace;
  std::optional<std::string> last_access_func;
  bool budget_exhausted = false;
  int consumed = 0;
  std::string diagnostic;

  bool accepted() const { return verdict == Verdict::Accepted; }
};

using SubjectFn = void (*)(Stm&);

struct ExecOptions {
  long step_budget = 100000;
  // Classifier for scanner-helper attribution: constraints and last-access
  // lookups resolve to the nearest enclosing function accepted by this
  // predicate. Empty means every traced function counts as a parser function.
  std::function<bool(std::string_view)> is_parser_function;
};

// Runs a subject on an input. Accepted means the subject returned without a
// parse error and consumed the entire input. Deterministic for a fixed
// (subject, input) pair.
inline ExecutionResult execute(SubjectFn entry, std::string_view input, const ExecOptions& opts = {}) {
  detail::ExecContext ctx(input, opts.step_budget, opts.is_parser_function);
  Stm stm(ctx);
  ExecutionResult res;
  bool parse_error = false;
  try {
    entry(stm);
  } catch (const ParseError& e) {
    parse_error = true;
    res.diagnostic = e.what();
  } catch (const BudgetExhausted&) {
    parse_error = true;
    res.budget_exhausted = true;
    res.diagnostic = "step budget exhausted";
  }
  res.consumed = ctx.pos();
  bool full = ctx.pos() == static_cast<int>(input.size());
  res.verdict = (!parse_error && full) ? Verdict::Accepted : Verdict::Rejected;
  if (!parse_error && !full) res.diagnostic = "trailing input not consumed";
  res.pc = ctx.take_pc();
  res.trace = ctx.take_trace();

  if (!input.empty()) {
    int scope = res.trace.last_access_scope(static_cast<int>(input.size()) - 1);
    if (scope >= 0) {
      const ScopeNode* fn =
          opts.is_parser_function
              ? res.trace.enclosing_function(scope, opts.is_parser_function)
              : res.trace.innermost_function(scope);
      if (fn) res.last_access_func = std::string(fn->label);
    }
  }
  return res;
}

}  // namespace gmine
