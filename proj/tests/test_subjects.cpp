#include <catch2/catch.hpp>

#include <set>
#include <string>
#include <vector>

#include "gmine/enumerate.hpp"
#include "gmine/recognizer.hpp"
#include "gmine/subjects/registry.hpp"

using namespace gmine;

namespace {

bool accepts(const Subject& s, const std::string& input) { return execute(s, input).accepted(); }

// Brute-force agreement: over a reduced alphabet, the subject and its golden
// grammar must accept exactly the same strings up to max_len.
void check_agreement(const std::string& name, const std::string& sigma, int max_len) {
  const Subject& subject = find_subject(name);
  Grammar g = golden(subject);
  std::set<std::string> lang = enumerate_language(g, max_len, sigma);

  std::string cur;
  long checked = 0;
  auto walk = [&](auto&& self, int depth) -> void {
    bool in_lang = lang.count(cur) > 0;
    bool ok = accepts(subject, cur);
    if (ok != in_lang) {
      INFO("subject " << name << " disagrees on \"" << cur << "\"");
      REQUIRE(ok == in_lang);
    }
    ++checked;
    if (depth == max_len) return;
    for (char c : sigma) {
      cur.push_back(c);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  walk(walk, 0);
  INFO(name << ": " << checked << " strings checked");
  CHECK(checked > 0);
}

}  // namespace

TEST_CASE("microjson keeps the dictionary comma machinery") {
  const Subject& mj = find_subject("microjson");
  CHECK(accepts(mj, "{\"a\":1,,\"b\":2}"));
  CHECK(accepts(mj, "{,\"a\":1}"));
  CHECK(accepts(mj, "{\"a\":1,,,\"b\":2}"));
  CHECK_FALSE(accepts(mj, "{,}"));
  CHECK_FALSE(accepts(mj, "{\"a\":1,}"));
  CHECK(accepts(mj, "{}"));
}

TEST_CASE("microjson escapes accept every alphabet character except u") {
  const Subject& mj = find_subject("microjson");
  for (char c : Alphabet::standard().chars()) {
    std::string input = std::string("\"\\") + c + "\"";
    bool ok = accepts(mj, input);
    if (c == 'u') {
      CHECK_FALSE(ok);
    } else {
      INFO("escaped char: " << static_cast<int>(c));
      CHECK(ok);
    }
  }
}

TEST_CASE("registry lists the eleven ported subjects with method counts") {
  const auto& subjects = all_subjects();
  REQUIRE(subjects.size() == 11);
  std::vector<std::pair<std::string, std::size_t>> expected = {
      {"advexpr", 6}, {"calc", 3},      {"cgidecode", 1}, {"expr", 4},
      {"hello", 2},   {"json", 21},     {"mail", 5},      {"mathexpr", 9},
      {"microjson", 9}, {"mjs", 33},    {"url", 20},
  };
  for (const auto& [name, count] : expected) {
    const Subject& s = find_subject(name);
    CHECK(s.parser_function_names.size() == count);
    CHECK(s.loc > 0);
  }
}

TEST_CASE("traced function names stay inside the declared registry") {
  std::vector<std::pair<std::string, std::vector<std::string>>> samples = {
      {"microjson", {"{\"a\":[1,2],\"b\":true}", "\"x\\n\"", "-1.5e3"}},
      {"calc", {"1+2", "12*(3+4)"}},
      {"mjs", {"let x=1;", "if(a<b){x=a(1)[2];}else{return;}"}},
      {"url", {"https://ab.cd:80/p?k=v#f"}},
      {"mail", {"ab@cd.ef"}},
      {"mathexpr", {"min(1,2)+sin(3.5)*pi"}},
      {"json", {"{\"a\":[1.5e-2,\"\\n\",false]}"}},
      {"hello", {"hi bob"}},
      {"expr", {"(1+2)*3"}},
      {"advexpr", {"-2^(1+1)"}},
      {"cgidecode", {"a%2fb+c"}},
  };
  for (const auto& [name, inputs] : samples) {
    const Subject& s = find_subject(name);
    std::set<std::string> declared(s.parser_function_names.begin(), s.parser_function_names.end());
    for (const std::string& input : inputs) {
      ExecutionResult r = execute(s, input);
      INFO(name << " on " << input << ": " << r.diagnostic);
      REQUIRE(r.accepted());
      for (const ScopeNode& sc : r.trace.scopes) {
        if (sc.kind != ScopeKind::Function) continue;
        INFO("function " << sc.label << " not declared for " << name);
        CHECK(declared.count(std::string(sc.label)) == 1);
      }
    }
  }
}

TEST_CASE("golden grammar sanity examples") {
  CHECK(recognize(golden("calc"), "1+2"));
  std::set<std::string> hello_lang = enumerate_language(golden("hello"), 8);
  CHECK(hello_lang.size() == 32);
  for (const std::string& s : hello_lang) CHECK(s.size() == 6);
}

TEST_CASE("golden and subject agree on all short strings over reduced alphabets") {
  check_agreement("hello", "hi ybotm", 6);
  check_agreement("expr", "12+*()", 6);
  check_agreement("advexpr", "1-^()", 6);
  check_agreement("calc", "12+()", 6);
  check_agreement("cgidecode", "a%2+", 6);
  check_agreement("mail", "a@.", 6);
  check_agreement("url", "ftp:/a", 6);
  check_agreement("mathexpr", "1+sin()", 6);
  check_agreement("microjson", "{}\":,1", 6);
  check_agreement("json", "[]{}1,", 6);
  check_agreement("mjs", "x=1;{}", 6);
}
