#include <catch2/catch.hpp>

#include <string>

#include "gmine/subjects/registry.hpp"

using namespace gmine;

namespace {

void toy_dispatch(Stm& stm) {
  FnScope f(stm, "root");
  Sym c = stm.peek();
  if (c.eq('{')) {
    stm.next();
    FnScope g(stm, "inner");
    stm.expect('}');
    return;
  }
  throw stm.error("brace expected");
}

void toy_spin(Stm& stm) {
  FnScope f(stm, "spin");
  while (true) stm.peek();
}

void toy_empty(Stm& stm) { FnScope f(stm, "only"); (void)stm; }

bool pc_contains(const PathCondition& pc, int idx, Relation rel, const std::string& op,
                 std::string_view func = {}) {
  for (const Constraint& c : pc) {
    if (c.index == idx && c.rel == rel && c.operand == op && (func.empty() || c.func == func)) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("execute accepts a full parse and rejects trailing input") {
  const Subject& mj = find_subject("microjson");
  CHECK(execute(mj, "{}").accepted());
  CHECK(execute(mj, "{} ").verdict == Verdict::Rejected);  // trailing blank unconsumed
  CHECK(execute(mj, "1").accepted());
}

TEST_CASE("a lone placeholder is rejected with constraints on index 0") {
  ExecutionResult r = execute(find_subject("microjson"), "~");
  CHECK(r.verdict == Verdict::Rejected);
  CHECK(pc_contains(r.pc, 0, Relation::Neq, "\""));
}

TEST_CASE("placeholder behind an open brace constrains index 1 inside json_dict") {
  ExecutionResult r = execute(find_subject("microjson"), "{~");
  CHECK(r.verdict == Verdict::Rejected);
  CHECK(pc_contains(r.pc, 1, Relation::Neq, "\"", "json_dict"));
  CHECK(pc_contains(r.pc, 1, Relation::Neq, "}", "json_dict"));
  REQUIRE(r.last_access_func.has_value());
  CHECK(*r.last_access_func == "json_dict");
}

TEST_CASE("comma then end of input is rejected") {
  CHECK(execute(find_subject("microjson"), "{,").verdict == Verdict::Rejected);
}

TEST_CASE("unknown subjects raise a configuration error") {
  CHECK_THROWS_AS(find_subject("nope"), ConfigError);
}

TEST_CASE("step budget turns runaway subjects into rejections") {
  ExecOptions opts;
  opts.step_budget = 500;
  ExecutionResult r = execute(&toy_spin, "abc", opts);
  CHECK(r.verdict == Verdict::Rejected);
  CHECK(r.budget_exhausted);
}

TEST_CASE("stream comparisons record constraint outcomes") {
  ExecutionResult r = execute(&toy_dispatch, "{}");
  CHECK(r.accepted());
  CHECK(pc_contains(r.pc, 0, Relation::Eq, "{", "root"));
  CHECK(pc_contains(r.pc, 1, Relation::Eq, "}", "inner"));
  REQUIRE(r.trace.scopes.size() == 2);
  CHECK(r.trace.scopes[0].label == "root");
  CHECK(r.trace.scopes[1].parent == 0);
}

TEST_CASE("next on an empty stream yields eof and no constraints") {
  ExecutionResult r = execute(&toy_empty, "");
  CHECK(r.accepted());
  CHECK(r.pc.empty());
  CHECK_FALSE(r.last_access_func.has_value());
}

TEST_CASE("a subject without pseudo-nodes yields a flat trace") {
  ExecutionResult r = execute(&toy_empty, "");
  REQUIRE(r.trace.scopes.size() == 1);
  CHECK(r.trace.scopes[0].parent == -1);
}

TEST_CASE("execution is deterministic") {
  const Subject& mj = find_subject("microjson");
  ExecutionResult a = execute(mj, "{\"k\":[1,2]}");
  ExecutionResult b = execute(mj, "{\"k\":[1,2]}");
  CHECK(a.verdict == b.verdict);
  REQUIRE(a.pc.size() == b.pc.size());
  for (std::size_t i = 0; i < a.pc.size(); ++i) {
    CHECK(a.pc[i].index == b.pc[i].index);
    CHECK(a.pc[i].rel == b.pc[i].rel);
    CHECK(a.pc[i].operand == b.pc[i].operand);
    CHECK(a.pc[i].func == b.pc[i].func);
    CHECK(a.pc[i].node == b.pc[i].node);
  }
  REQUIRE(a.trace.scopes.size() == b.trace.scopes.size());
  for (std::size_t i = 0; i < a.trace.scopes.size(); ++i) {
    CHECK(a.trace.scopes[i].label == b.trace.scopes[i].label);
    CHECK(a.trace.scopes[i].enter_pos == b.trace.scopes[i].enter_pos);
    CHECK(a.trace.scopes[i].exit_pos == b.trace.scopes[i].exit_pos);
  }
}

TEST_CASE("every constraint's node and function appear as scopes in the trace") {
  for (const char* input : {"{\"a\":1,,\"b\":2}", "[1,{\"x\":\"\\t\"}]", "{~", "[tru"}) {
    ExecutionResult r = execute(find_subject("microjson"), input);
    for (const Constraint& c : r.pc) {
      bool node_found = false;
      bool func_found = false;
      for (const ScopeNode& s : r.trace.scopes) {
        if (s.label == c.node) node_found = true;
        if (s.kind == ScopeKind::Function && s.label == c.func) func_found = true;
      }
      CHECK(node_found);
      CHECK(func_found);
    }
  }
}

TEST_CASE("accepted inputs have every index accessed and consumed") {
  ExecutionResult r = execute(find_subject("microjson"), "{\"ab\":12}");
  REQUIRE(r.accepted());
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK_FALSE(r.trace.accesses[i].empty());
    CHECK(r.trace.consumed_by[i] >= 0);
  }
}

TEST_CASE("scanner helpers attribute to the enclosing parser function") {
  // getvalue reads number characters; with getvalue classified as a scanner
  // its comparisons must attribute to json_number
  ExecOptions opts;
  opts.is_parser_function = [](std::string_view f) { return f != "getvalue"; };
  ExecutionResult r = execute(find_subject("microjson"), "12~", opts);
  CHECK(r.verdict == Verdict::Rejected);  // token "12~" is not a number
  bool found = false;
  for (const Constraint& c : r.pc) {
    if (c.index == 2 && c.func == "json_number") found = true;
    CHECK(c.func != "getvalue");
  }
  CHECK(found);
  REQUIRE(r.last_access_func.has_value());
  CHECK(*r.last_access_func == "json_number");
}

TEST_CASE("unbalanced scope exits are instrumentation errors") {
  detail::ExecContext ctx("x", 1000, nullptr);
  int a = ctx.enter_scope(ScopeKind::Function, "a");
  int b = ctx.enter_scope(ScopeKind::Function, "b");
  (void)b;
  CHECK_THROWS_AS(ctx.exit_scope(a, false), InstrumentationError);
}
