#include <catch2/catch.hpp>

#include <set>
#include <string>

#include "gmine/enumerate.hpp"
#include "gmine/miner.hpp"

using namespace gmine;

namespace {

std::vector<ParseTree> trees_for(const Subject& s, const std::vector<std::string>& corpus) {
  std::vector<ParseTree> trees;
  for (const std::string& input : corpus) {
    ExecutionResult r = execute(s, input);
    REQUIRE(r.accepted());
    trees.push_back(tree_from_trace(r.trace, input));
  }
  return trees;
}

int count_labeled(const ParseTree& t, const std::string& label) {
  int n = t.label == label ? 1 : 0;
  for (const ParseTree& k : t.kids) n += count_labeled(k, label);
  return n;
}

}  // namespace

TEST_CASE("parse tree mirrors the nested document structure") {
  const Subject& mj = find_subject("microjson");
  std::string input = "{\"abc\":123,\"xyz\":[]}";
  ExecutionResult r = execute(mj, input);
  REQUIRE(r.accepted());
  ParseTree t = tree_from_trace(r.trace, input);
  CHECK(t.label == "from_json");
  CHECK(count_labeled(t, "json_dict") == 1);
  CHECK(count_labeled(t, "json_string") == 2);
  CHECK(count_labeled(t, "json_list") == 1);
  CHECK(t.terminals() == input);
}

TEST_CASE("single-function subject yields a near-flat tree") {
  const Subject& cgi = find_subject("cgidecode");
  ExecutionResult r = execute(cgi, "h");
  REQUIRE(r.accepted());
  ParseTree t = tree_from_trace(r.trace, "h");
  CHECK(t.label == "cgi_decode");
  CHECK(t.terminals() == "h");
}

TEST_CASE("leaf concatenation reproduces the input across a generated corpus") {
  const Subject& mj = find_subject("microjson");
  GenConfig cfg;
  cfg.rng_seed = 99;
  ThreePhaseResult r = run_three_phase(mj, cfg);
  REQUIRE(r.corpus.size() >= 100);
  std::size_t step = std::max<std::size_t>(1, r.corpus.size() / 100);
  for (std::size_t i = 0; i < r.corpus.size(); i += step) {
    ExecutionResult res = execute(mj, r.corpus.valid[i]);
    REQUIRE(res.accepted());
    ParseTree t = tree_from_trace(res.trace, r.corpus.valid[i]);
    CHECK(t.terminals() == r.corpus.valid[i]);
  }
}

TEST_CASE("derived rules collect distinct child sequences") {
  const Subject& mj = find_subject("microjson");
  std::vector<std::string> corpus = {"{}", "{\"k\":1}"};
  std::vector<ParseTree> trees = trees_for(mj, corpus);
  Grammar g = derive_grammar(trees, corpus);
  const auto* dict = g.find("json_dict");
  REQUIRE(dict != nullptr);
  CHECK(dict->size() == 2);
}

TEST_CASE("a single tree derives a straight-line grammar for its input") {
  const Subject& hello = find_subject("hello");
  std::vector<std::string> corpus = {"hi bob"};
  Grammar g = derive_grammar(trees_for(hello, corpus), corpus);
  std::set<std::string> lang = enumerate_language(g, 8);
  REQUIRE(lang.size() == 1);
  CHECK(lang.count("hi bob") == 1);
}

TEST_CASE("mining a single input yields a grammar that still covers it") {
  const Subject& mj = find_subject("microjson");
  Grammar g = mine(mj, {"{\"a\":1}"});
  CHECK(recognize(g, "{\"a\":1}"));
}

TEST_CASE("the mined grammar recognizes its whole corpus at every stage") {
  for (const char* name : {"calc", "microjson"}) {
    const Subject& subject = find_subject(name);
    GenConfig cfg;
    cfg.rng_seed = 7;
    ThreePhaseResult r = run_three_phase(subject, cfg);
    MineStages st = mine_stages(subject, r.corpus.valid);
    Recognizer derived(st.derived);
    Recognizer folded(st.folded);
    Recognizer generalized(st.generalized);
    std::size_t step = std::max<std::size_t>(1, r.corpus.size() / 120);
    for (std::size_t i = 0; i < r.corpus.size(); i += step) {
      const std::string& input = r.corpus.valid[i];
      INFO(name << ": " << input);
      CHECK(derived.recognize(input));
      CHECK(folded.recognize(input));
      CHECK(generalized.recognize(input));
    }
  }
}

TEST_CASE("stage monotonicity: folding and widening only grow the language") {
  for (const char* name : {"calc", "microjson"}) {
    const Subject& subject = find_subject(name);
    GenConfig cfg;
    cfg.rng_seed = 7;
    ThreePhaseResult r = run_three_phase(subject, cfg);
    MineStages st = mine_stages(subject, r.corpus.valid);
    Recognizer folded(st.folded);
    Recognizer generalized(st.generalized);
    for (int i = 0; i < 200; ++i) {
      DerivationBudget b{8, 512, 3000 + static_cast<std::uint64_t>(i)};
      std::string from_derived = generate(st.derived, b);
      INFO(name << " derived sample: " << from_derived);
      CHECK(folded.recognize(from_derived));
      std::string from_folded = generate(st.folded, b);
      INFO(name << " folded sample: " << from_folded);
      CHECK(generalized.recognize(from_folded));
    }
  }
}

TEST_CASE("digits widen to the digit class on the calculator") {
  const Subject& calc = find_subject("calc");
  GenConfig cfg;
  cfg.rng_seed = 7;
  ThreePhaseResult r = run_three_phase(calc, cfg);
  Grammar g = mine(calc, r.corpus.valid);
  bool digit_class = false;
  for (const auto& [name, alts] : g.rules()) {
    for (const auto& alt : alts) {
      for (const Symbol& s : alt) {
        if (s.kind == SymbolKind::CharClass && s.cls == "digit") digit_class = true;
      }
    }
  }
  CHECK(digit_class);
}

TEST_CASE("structural delimiters stay literal while escapes widen") {
  const Subject& mj = find_subject("microjson");
  GenConfig cfg;
  cfg.rng_seed = 7;
  ThreePhaseResult r = run_three_phase(mj, cfg);
  Grammar g = mine(mj, r.corpus.valid);

  // '{' stays a literal dispatch character in json_raw
  const auto* raw = g.find("json_raw");
  REQUIRE(raw != nullptr);
  bool brace_literal = false;
  for (const auto& alt : *raw) {
    if (!alt.empty() && alt[0].kind == SymbolKind::Terminal && alt[0].term == '{') {
      brace_literal = true;
    }
  }
  CHECK(brace_literal);

  // the escaped character accepts everything except 'u'
  const auto* esc = g.find("decode_escape");
  REQUIRE(esc != nullptr);
  bool except_u = false;
  for (const auto& alt : *esc) {
    for (const Symbol& s : alt) {
      if (s.kind == SymbolKind::CharClass && s.cls == "print-except" && s.cls_except == "u") {
        except_u = true;
      }
    }
  }
  CHECK(except_u);
}

TEST_CASE("repetitions fold and validate by replay") {
  const Subject& mj = find_subject("microjson");
  std::vector<std::string> corpus = {"{}", "{\"a\":1}", "{\"a\":1,\"b\":2,\"c\":3}", "\"xy\""};
  std::vector<ParseTree> trees = trees_for(mj, corpus);
  Grammar derived = derive_grammar(trees, corpus);
  Grammar folded = detect_repetitions(derived, trees, corpus, mj);
  bool has_group = false;
  for (const auto& [name, alts] : folded.rules()) {
    for (const auto& alt : alts) {
      for (const Symbol& s : alt) {
        if (s.kind == SymbolKind::Group) has_group = true;
      }
    }
  }
  CHECK(has_group);
  // a fold admits more repetitions than observed
  Recognizer rec(folded);
  CHECK(rec.recognize("{\"a\":1,\"b\":2,\"c\":3,\"a\":1,\"b\":2}"));
}

TEST_CASE("grammars without repeated structure stay unchanged by folding") {
  const Subject& hello = find_subject("hello");
  std::vector<std::string> corpus = {"hi bob", "yo sue"};
  std::vector<ParseTree> trees = trees_for(hello, corpus);
  Grammar derived = derive_grammar(trees, corpus);
  Grammar folded = detect_repetitions(derived, trees, corpus, hello);
  CHECK(derived == folded);
}

TEST_CASE("mining the greeting corpus recovers exactly the 32-string language") {
  const Subject& hello = find_subject("hello");
  GenConfig cfg;
  cfg.rng_seed = 7;
  InputCorpus c = one_phase(hello, cfg, 32);
  REQUIRE(c.size() == 32);
  Grammar g = mine(hello, c.valid);
  std::set<std::string> lang = enumerate_language(g, 8);
  CHECK(lang.size() == 32);
  for (const std::string& s : lang) CHECK(execute(hello, s).accepted());
}

TEST_CASE("miner rejects empty and invalid corpora") {
  const Subject& mj = find_subject("microjson");
  CHECK_THROWS_AS(mine(mj, {}), MinerError);
  CHECK_THROWS_AS(mine(mj, {"{,}"}), MinerError);
}

TEST_CASE("re-mining with accepted samples keeps the sampled language") {
  const Subject& calc = find_subject("calc");
  GenConfig cfg;
  cfg.rng_seed = 7;
  ThreePhaseResult r = run_three_phase(calc, cfg);
  Grammar first = mine(calc, r.corpus.valid);

  std::vector<std::string> enriched = r.corpus.valid;
  std::vector<std::string> first_samples;
  for (int i = 0; i < 200; ++i) {
    DerivationBudget b{8, 256, 5000 + static_cast<std::uint64_t>(i)};
    std::string s = generate(first, b);
    first_samples.push_back(s);
    if (execute(calc, s).accepted()) enriched.push_back(s);
  }
  std::sort(enriched.begin(), enriched.end());
  enriched.erase(std::unique(enriched.begin(), enriched.end()), enriched.end());

  Grammar second = mine(calc, enriched);
  Recognizer rec(second);
  for (const std::string& s : first_samples) {
    if (execute(calc, s).accepted()) {
      INFO("sample: " << s);
      CHECK(rec.recognize(s));
    }
  }
}

namespace {

void branchy_subject(Stm& stm) {
  FnScope f(stm, "branchy");
  Sym c = stm.peek();
  if (c.eq('a')) {
    BranchScope b(stm, "branchy.B1");
    stm.next();
    stm.expect('b');
    return;
  }
  BranchScope b(stm, "branchy.B2");
  stm.expect('x');
}

}  // namespace

TEST_CASE("branch scopes fold into their parent node") {
  ExecutionResult r = execute(&branchy_subject, "ab");
  REQUIRE(r.accepted());
  ParseTree t = tree_from_trace(r.trace, "ab");
  CHECK(t.label == "branchy");
  CHECK(t.kids.empty());  // the branch scope is not a tree node
  CHECK(t.terminals() == "ab");
}

TEST_CASE("tree dumps render indented labels and leaves") {
  const Subject& mj = find_subject("microjson");
  ExecutionResult r = execute(mj, "[1]");
  REQUIRE(r.accepted());
  std::string dump = dump_tree(tree_from_trace(r.trace, "[1]"));
  CHECK(dump.find("from_json\n") == 0);
  CHECK(dump.find("json_list") != std::string::npos);
  CHECK(dump.find("'1'") != std::string::npos);
}
