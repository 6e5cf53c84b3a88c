#include <catch2/catch.hpp>

#include <random>
#include <set>
#include <string>

#include "gmine/derivation.hpp"
#include "gmine/enumerate.hpp"
#include "gmine/grammar_text.hpp"
#include "gmine/recognizer.hpp"
#include "gmine/subjects/registry.hpp"

using namespace gmine;

namespace {

// Random small grammars for the recognizer-versus-enumeration oracle.
Grammar random_grammar(std::mt19937& rng) {
  Grammar g;
  int nts = 2 + static_cast<int>(rng() % 3);
  std::vector<std::string> names;
  for (int i = 0; i < nts; ++i) names.push_back("n" + std::to_string(i));
  const std::string terminals = "abc";
  for (int i = 0; i < nts; ++i) {
    auto& alts = g.rule(names[static_cast<std::size_t>(i)]);
    int n_alts = 1 + static_cast<int>(rng() % 3);
    for (int a = 0; a < n_alts; ++a) {
      Alternative alt;
      int len = static_cast<int>(rng() % 4);
      for (int k = 0; k < len; ++k) {
        if (rng() % 3 == 0) {
          // reference only later rules half the time to keep most grammars productive
          alt.push_back(Symbol::nonterminal(names[rng() % names.size()]));
        } else {
          alt.push_back(Symbol::terminal(terminals[rng() % terminals.size()]));
        }
      }
      alts.push_back(std::move(alt));
    }
  }
  return g;
}

}  // namespace

TEST_CASE("grammar files parse into the expected structure") {
  Grammar g = parse_grammar_file("<s> ::= 'a' <s> | 'b'\n");
  CHECK(g.start == "s");
  REQUIRE(g.find("s"));
  CHECK(g.find("s")->size() == 2);
  CHECK((*g.find("s"))[0].size() == 2);
  CHECK((*g.find("s"))[1].size() == 1);
}

TEST_CASE("starred groups and classes parse") {
  Grammar g = parse_grammar_file(
      "<dict> ::= '}' | ( '\\'' <str> ':' <raw> ',' )* '\"' <str> ':' <raw> '}'\n"
      "<str> ::= [alnum]\n"
      "<raw> ::= [digit] | [print-except: 'u']\n");
  const auto& alts = *g.find("dict");
  REQUIRE(alts.size() == 2);
  CHECK(alts[1][0].kind == SymbolKind::Group);
  CHECK(alts[1][0].body.size() == 5);
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_grammar_file("<s> ::= 'a\n"), GrammarSyntaxError);
  CHECK_THROWS_AS(parse_grammar_file("<s> := 'a'\n"), GrammarSyntaxError);
  CHECK_THROWS_AS(parse_grammar_file("<s> ::= <undefined>\n"), GrammarError);
  CHECK_THROWS_AS(parse_grammar_file("<s> ::= [nope]\n"), GrammarSyntaxError);
}

TEST_CASE("write then parse is structurally stable") {
  Grammar g = parse_grammar_file(
      "<s> ::= 'ab' <t> | '' | ( <t> ',' )* 'x'\n"
      "<t> ::= [digit] | '\\n' '\\t' '\\\\' '\\''\n");
  std::string text = write_grammar_file(g);
  Grammar h = parse_grammar_file(text);
  CHECK(g == h);
}

TEST_CASE("all shipped golden grammars round-trip") {
  for (const Subject& s : all_subjects()) {
    Grammar g = golden(s);
    Grammar h = parse_grammar_file(write_grammar_file(g));
    INFO(s.name);
    CHECK(g == h);
  }
}

TEST_CASE("recognize matches hand derivations") {
  Grammar g = parse_grammar_file("<s> ::= 'a' <s> | 'b'\n");
  Recognizer rec(g);
  CHECK(rec.recognize("aab"));
  CHECK(rec.recognize("b"));
  CHECK_FALSE(rec.recognize("aa"));
  CHECK_FALSE(rec.recognize(""));
}

TEST_CASE("recognizer handles left recursion and ambiguity") {
  Grammar g = parse_grammar_file("<e> ::= <e> '+' <e> | '1'\n");
  Recognizer rec(g);
  CHECK(rec.recognize("1"));
  CHECK(rec.recognize("1+1+1"));
  CHECK_FALSE(rec.recognize("+1"));
  CHECK_FALSE(rec.recognize("1+"));
}

TEST_CASE("recognizer handles epsilon chains") {
  Grammar g = parse_grammar_file(
      "<s> ::= <a> <b> 'x'\n"
      "<a> ::= '' | 'a'\n"
      "<b> ::= <a>\n");
  Recognizer rec(g);
  CHECK(rec.recognize("x"));
  CHECK(rec.recognize("ax"));
  CHECK(rec.recognize("aax"));
  CHECK_FALSE(rec.recognize("aaax"));
}

TEST_CASE("golden microjson grammar recognizes a nested document") {
  CHECK(recognize(golden("microjson"), "{\"a\":[1,2]}"));
}

TEST_CASE("recognizer agrees with enumeration on random small grammars") {
  std::mt19937 rng(99);
  int used = 0;
  while (used < 20) {
    Grammar g = random_grammar(rng);
    std::set<std::string> lang;
    try {
      g.validate();
      lang = enumerate_language(g, 6);
    } catch (const GrammarError&) {
      continue;  // unproductive draw
    }
    ++used;
    Recognizer rec(g);
    // every enumerated string is recognized
    for (const std::string& s : lang) CHECK(rec.recognize(s));
    // recognized short strings over the terminal alphabet are exactly the set
    std::string cur;
    auto walk = [&](auto&& self, int depth) -> void {
      CHECK(rec.recognize(cur) == (lang.count(cur) > 0));
      if (depth == 4) return;
      for (char c : std::string("abc")) {
        cur.push_back(c);
        self(self, depth + 1);
        cur.pop_back();
      }
    };
    walk(walk, 0);
  }
}

TEST_CASE("single-terminal grammar generates its one string") {
  Grammar g = parse_grammar_file("<s> ::= 'b'\n");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DerivationBudget b{10, 100, seed};
    CHECK(generate(g, b) == "b");
  }
}

TEST_CASE("generator output is always recognized by its source grammar") {
  std::vector<Grammar> grammars;
  for (const char* name : {"calc", "microjson", "mjs", "url"}) grammars.push_back(golden(name));
  for (const Grammar& g : grammars) {
    Recognizer rec(g);
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
      DerivationBudget b{8, 512, seed};
      std::string s = generate(g, b);
      INFO("seed " << seed << " -> \"" << s << "\"");
      CHECK(rec.recognize(s));
    }
  }
}

TEST_CASE("generation is deterministic per seed") {
  Grammar g = golden("microjson");
  DerivationBudget b{10, 512, 424242};
  CHECK(generate(g, b) == generate(g, b));
}

TEST_CASE("enumeration cross-checks recognition") {
  Grammar g = parse_grammar_file("<s> ::= 'b'\n");
  std::set<std::string> lang = enumerate_language(g, 4);
  REQUIRE(lang.size() == 1);
  CHECK(lang.count("b") == 1);

  Grammar hello = golden("hello");
  std::set<std::string> hl = enumerate_language(hello, 6);
  CHECK(hl.size() == 32);
  Recognizer rec(hello);
  for (const std::string& s : hl) CHECK(rec.recognize(s));
}

TEST_CASE("desugaring preserves the language on sampled strings") {
  // compare recognition against slow derivation enumeration for a grammar
  // that uses groups and classes
  Grammar g = parse_grammar_file(
      "<s> ::= ( <item> ',' )* <item>\n"
      "<item> ::= [digit] | '[' <s> ']'\n");
  std::set<std::string> lang = enumerate_language(g, 5);
  Recognizer rec(g);
  std::string cur;
  auto walk = [&](auto&& self, int depth) -> void {
    CHECK(rec.recognize(cur) == (lang.count(cur) > 0));
    if (depth == 5) return;
    for (char c : std::string("12,[]")) {
      cur.push_back(c);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  walk(walk, 0);
}
