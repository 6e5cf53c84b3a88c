#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gmine {

enum class ScopeKind { Function, Loop, Branch };

// One dynamic scope (function call, loop iteration, or branch) observed
// during an execution. Positions are stream positions: [enter_pos, exit_pos)
// is the input span consumed while the scope was open.
struct ScopeNode {
  int id = -1;
  ScopeKind kind = ScopeKind::Function;
  std::string_view label;
  int parent = -1;
  int enter_pos = 0;
  int exit_pos = 0;
  bool error_exit = false;
  // First input index read while this scope was open (self or descendants),
  // -1 if none.
  int first_access = -1;
  // Number of path-condition constraints recorded before this scope opened.
  int pc_at_enter = 0;
  std::vector<int> children;
};

// Nested control-flow events of one execution plus, per input index, the
// innermost scope open at each read of that index (temporal order).
struct ExecutionTrace {
  std::vector<ScopeNode> scopes;
  std::vector<std::vector<int>> accesses;
  // Scope that consumed each index (the innermost scope open at the
  // advancing read), -1 if never consumed.
  std::vector<int> consumed_by;

  const ScopeNode* innermost_function(int scope_id) const {
    for (int s = scope_id; s >= 0; s = scopes[s].parent) {
      if (scopes[s].kind == ScopeKind::Function) return &scopes[s];
    }
    return nullptr;
  }

  // Innermost enclosing function scope accepted by `pred`, walking outward
  // from `scope_id`.
  template <typename Pred>
  const ScopeNode* enclosing_function(int scope_id, Pred&& pred) const {
    for (int s = scope_id; s >= 0; s = scopes[s].parent) {
      if (scopes[s].kind == ScopeKind::Function && pred(scopes[s].label)) return &scopes[s];
    }
    return nullptr;
  }

  // Scope of the last read of `index`, or -1 if the index was never read.
  int last_access_scope(int index) const {
    if (index < 0 || index >= static_cast<int>(accesses.size())) return -1;
    if (accesses[index].empty()) return -1;
    return accesses[index].back();
  }

  bool scope_chain_contains(int scope_id, std::string_view label) const {
    for (int s = scope_id; s >= 0; s = scopes[s].parent) {
      if (scopes[s].label == label) return true;
    }
    return false;
  }
};

}  // namespace gmine
