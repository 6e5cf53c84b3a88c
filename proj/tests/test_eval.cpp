#include <catch2/catch.hpp>

#include <string>

#include "gmine/eval.hpp"

using namespace gmine;

TEST_CASE("precision of the golden grammar itself is essentially perfect") {
  // golden grammars are consistent with the subjects; deviations flag
  // porting bugs
  EvalConfig cfg;
  cfg.sample_count = 400;
  for (const Subject& s : all_subjects()) {
    cfg.rng_seed = detail::mix_seed(3, s.name);
    double p = precision(golden(s), s, cfg);
    INFO(s.name);
    CHECK(p >= 0.99);
  }
}

TEST_CASE("a trivial single-string grammar still scores full precision") {
  Grammar g = parse_grammar_file("<s> ::= '1'\n");
  EvalConfig cfg;
  cfg.sample_count = 200;
  CHECK(precision(g, find_subject("calc"), cfg) == 1.0);
}

TEST_CASE("a grammar generating only rejected strings scores zero precision") {
  Grammar g = parse_grammar_file("<s> ::= 'x'\n");
  EvalConfig cfg;
  cfg.sample_count = 200;
  CHECK(precision(g, find_subject("calc"), cfg) == 0.0);
}

TEST_CASE("recall of a grammar against itself is perfect") {
  EvalConfig cfg;
  cfg.sample_count = 300;
  Grammar g = golden("microjson");
  CHECK(recall(g, g, cfg) == 1.0);
}

TEST_CASE("f1 follows the harmonic formula and handles zero") {
  CHECK(f1_score(0, 0) == 0.0);
  CHECK(f1_score(1, 1) == Approx(1.0));
  CHECK(f1_score(1, 0.5) == Approx(2 * 1 * 0.5 / 1.5));
}

TEST_CASE("metrics are deterministic under fixed seeds") {
  EvalConfig cfg;
  cfg.sample_count = 200;
  cfg.rng_seed = 11;
  const Subject& s = find_subject("expr");
  Grammar g = golden(s);
  CHECK(precision(g, s, cfg) == precision(g, s, cfg));
  CHECK(recall(g, g, cfg) == recall(g, g, cfg));
}

TEST_CASE("handwritten evaluation reads shipped corpora") {
  EvalConfig ecfg;
  ecfg.sample_count = 200;
  ecfg.rng_seed = 5;
  GenConfig gcfg;
  EvalReport r = evaluate_all(EvalMode::Handwritten, {"hello", "expr"}, ecfg, gcfg);
  REQUIRE(r.rows.size() == 2);
  for (const SubjectReport& row : r.rows) {
    CHECK_FALSE(row.error);
    CHECK_FALSE(row.unsolved);
    CHECK(row.corpus_size > 0);
    CHECK(row.precision > 0);
  }
}

TEST_CASE("missing handwritten inputs produce an error row") {
  EvalConfig ecfg;
  ecfg.sample_count = 200;
  GenConfig gcfg;
  EvalReport r = evaluate_all(EvalMode::Handwritten, {"hello"}, ecfg, gcfg, "/nonexistent-dir");
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].error);
}

TEST_CASE("an unsolved generation run yields an all-zero row") {
  EvalConfig ecfg;
  ecfg.sample_count = 200;
  GenConfig gcfg;
  gcfg.rng_seed = 7;
  gcfg.one_phase_max_execs = 20000;
  gcfg.phase1_max_execs = 4000;
  gcfg.phase1_input_count = 50;
  gcfg.phase2_max_execs_per_function = 200;
  gcfg.phase3_max_execs = 500;
  EvalReport r = evaluate_all(EvalMode::OnePhase, {"mail"}, ecfg, gcfg);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].unsolved);
  CHECK(r.rows[0].precision == 0.0);
  CHECK(r.rows[0].recall == 0.0);
  CHECK(r.rows[0].f1 == 0.0);
}

TEST_CASE("report rendering has the documented column structure") {
  EvalReport r;
  r.mode = "three";
  SubjectReport row;
  row.name = "HelloParser";
  row.precision = 1.0;
  row.recall = 0.965;
  row.f1 = f1_score(1.0, 0.965);
  row.corpus_size = 32;
  row.avg_len = 6.0;
  row.max_len = 6;
  row.gen_ms = 100;
  row.mine_ms = 971;
  r.rows.push_back(row);
  r.average = row;
  r.average.name = "Average";

  std::string scores = render_scores(r, true);
  CHECK(scores.find("Program\tPrec\tRec\tF1") == 0);
  CHECK(scores.find("HelloParser\t100.0\t96.5\t98.2") != std::string::npos);

  std::string lengths = render_lengths(r, true);
  CHECK(lengths.find("Program\tInputs\tAvg\tMax") == 0);
  CHECK(lengths.find("HelloParser\t32\t6.0\t6") != std::string::npos);

  std::string runtimes = render_runtimes(r, true);
  CHECK(runtimes.find("Program\tIG\tGM") == 0);
  CHECK(runtimes.find("HelloParser\t100\t971") != std::string::npos);
}

TEST_CASE("every shipped handwritten input is accepted by its subject") {
  for (const Subject& s : all_subjects()) {
    std::vector<std::string> lines = read_lines(handwritten_dir() + "/" + s.name + ".txt");
    REQUIRE_FALSE(lines.empty());
    for (const std::string& input : lines) {
      INFO(s.name << ": " << input);
      CHECK(execute(s, input).accepted());
    }
  }
}

TEST_CASE("evaluation rejects undersized sample counts") {
  EvalConfig ecfg;
  ecfg.sample_count = 10;
  GenConfig gcfg;
  CHECK_THROWS_AS(evaluate_all(EvalMode::Handwritten, {"hello"}, ecfg, gcfg), ConfigError);
}
