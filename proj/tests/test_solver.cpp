#include <catch2/catch.hpp>

#include <optional>
#include <random>
#include <vector>

#include "gmine/solver.hpp"

using namespace gmine;

namespace {

Constraint make(int idx, Relation rel, std::string operand) {
  Constraint c;
  c.index = idx;
  c.rel = rel;
  c.operand = std::move(operand);
  return c;
}

// Independent reference: scan the alphabet by hand and report every
// character that violates `c` while satisfying the accumulated constraints.
std::vector<char> oracle_all(const Constraint& c, const std::vector<Constraint>& acc) {
  std::vector<char> out;
  for (char x : Alphabet::standard().chars()) {
    if (satisfies(x, c)) continue;
    bool ok = true;
    for (const Constraint& a : acc) ok = ok && satisfies(x, a);
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_CASE("negated disequality forces the literal") {
  auto r = solve_negation(make(1, Relation::Neq, "}"), {});
  REQUIRE(r.has_value());
  CHECK(*r == '}');
}

TEST_CASE("negated equality yields the lowest other character") {
  auto r = solve_negation(make(0, Relation::Eq, "x"), {});
  REQUIRE(r.has_value());
  // alphabet starts with tab
  CHECK(*r == '\t');
}

TEST_CASE("negated not-in-set with an accumulated disequality") {
  // oracle: digits satisfy NOT(not-in 0..9); the accumulated != '0' leaves
  // '1' as the lowest
  Constraint c = make(2, Relation::NotInSet, "0123456789");
  std::vector<Constraint> acc = {make(2, Relation::Neq, "0")};
  auto r = solve_negation(c, acc);
  REQUIRE(r.has_value());
  CHECK(*r == '1');
  CHECK(oracle_all(c, acc).front() == '1');
}

TEST_CASE("unsatisfiable negation returns nothing") {
  // NOT(in-set of the whole alphabet) has no solution
  Constraint c = make(0, Relation::InSet, Alphabet::standard().chars());
  CHECK_FALSE(solve_negation(c, {}).has_value());
  // NOT(x != x) constrained to differ from x
  Constraint eq = make(0, Relation::Neq, "q");
  std::vector<Constraint> acc = {make(0, Relation::Neq, "q")};
  CHECK_FALSE(solve_negation(eq, acc).has_value());
}

TEST_CASE("solver is exhaustively sound and complete over the alphabet") {
  const Alphabet& a = Alphabet::standard();
  std::mt19937 rng(12345);
  std::vector<Relation> singles = {Relation::Eq, Relation::Neq, Relation::Lt,
                                   Relation::Le,  Relation::Gt, Relation::Ge};
  for (Relation rel : singles) {
    for (char op : a.chars()) {
      Constraint c = make(0, rel, std::string(1, op));
      auto got = solve_negation(c, {});
      auto expect = oracle_all(c, {});
      REQUIRE(got.has_value() == !expect.empty());
      if (got) {
        CHECK(violates(*got, c));
        CHECK(*got == expect.front());
      }
    }
  }
  // set relations over random subsets
  for (int trial = 0; trial < 200; ++trial) {
    std::string set;
    for (char ch : a.chars()) {
      if (rng() % 4 == 0) set.push_back(ch);
    }
    if (set.empty()) set = "a";
    for (Relation rel : {Relation::InSet, Relation::NotInSet}) {
      Constraint c = make(0, rel, set);
      std::vector<Constraint> acc;
      if (trial % 3 == 0) acc.push_back(make(0, Relation::Neq, std::string(1, set[0])));
      auto got = solve_negation(c, acc);
      auto expect = oracle_all(c, acc);
      REQUIRE(got.has_value() == !expect.empty());
      if (got) {
        CHECK(violates(*got, c));
        CHECK(*got == expect.front());
      }
    }
  }
}

TEST_CASE("filter_pc selects the placeholder index and optional function") {
  PathCondition pc;
  pc.push_back(make(0, Relation::Eq, "{"));
  pc.push_back(make(1, Relation::Neq, "\""));
  pc.push_back(make(1, Relation::Neq, "}"));
  pc[1].func = "json_dict";
  pc[2].func = "json_dict";

  auto terms = filter_pc(pc, 1);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].operand == "\"");
  CHECK(terms[1].operand == "}");

  CHECK(filter_pc(pc, 1, std::optional<std::string_view>("json_string")).empty());
  CHECK(filter_pc(pc, 1, std::optional<std::string_view>("json_dict")).size() == 2);
  // no constraint on an index beyond the condition
  CHECK(filter_pc(pc, 2).empty());
}
