// gmine command line: input generation, grammar mining, and evaluation over
// the bundled parser subjects.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmine/corpus_io.hpp"
#include "gmine/eval.hpp"
#include "gmine/manifest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsolved = 2;
constexpr int kExitInternal = 3;

std::string output_root() {
  if (const char* env = std::getenv("GMINE_OUT_ROOT")) return env;
  return ".";
}

std::string join_path(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return dir + "/" + name;
}

double ms_between(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

void snapshot_gen_config(gmine::RunManifest& m, const gmine::GenConfig& cfg) {
  m.set("placeholder", std::string(1, cfg.placeholder));
  m.set("phase1_input_count", static_cast<long>(cfg.phase1_input_count));
  m.set("prefix_scanner_threshold", cfg.prefix_scanner_threshold);
  m.set("phase2_budget_per_function", cfg.phase2_budget_per_function);
  m.set("phase3_queue_size", static_cast<long>(cfg.phase3_queue_size));
  m.set("phase3_time_limit", cfg.phase3_time_limit);
  m.set("global_time_limit", cfg.global_time_limit);
  m.set("step_budget", cfg.step_budget);
  m.set("max_stem_length", static_cast<long>(cfg.max_stem_length));
  m.set("max_candidate_length", static_cast<long>(cfg.max_candidate_length));
  m.set("one_phase_max_execs", cfg.one_phase_max_execs);
  m.set("phase1_max_execs", cfg.phase1_max_execs);
  m.set("phase2_max_execs_per_function", cfg.phase2_max_execs_per_function);
  m.set("phase3_max_execs", cfg.phase3_max_execs);
  m.set("phase2_rounds_cap", static_cast<long>(cfg.phase2_rounds_cap));
}

void write_corpus_files(const std::string& base, const gmine::InputCorpus& corpus,
                        const gmine::GenTelemetry* telemetry) {
  gmine::write_lines(base, corpus.valid);
  std::string meta = "count=" + std::to_string(corpus.size()) + "\n";
  long total = 0, maxl = 0, p1 = 0, p2 = 0, p3 = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    total += static_cast<long>(corpus.valid[i].size());
    maxl = std::max(maxl, static_cast<long>(corpus.valid[i].size()));
    if (corpus.phase[i] == 1) ++p1;
    if (corpus.phase[i] == 2) ++p2;
    if (corpus.phase[i] == 3) ++p3;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", corpus.size() ? double(total) / double(corpus.size()) : 0.0);
  meta += std::string("avg_len=") + buf + "\n";
  meta += "max_len=" + std::to_string(maxl) + "\n";
  meta += "phase1_count=" + std::to_string(p1) + "\n";
  meta += "phase2_count=" + std::to_string(p2) + "\n";
  meta += "phase3_count=" + std::to_string(p3) + "\n";
  if (telemetry) {
    meta += "phase1_ms=" + std::to_string(static_cast<long>(telemetry->phase1.ms)) + "\n";
    meta += "phase2_ms=" + std::to_string(static_cast<long>(telemetry->phase2.ms)) + "\n";
    meta += "phase3_ms=" + std::to_string(static_cast<long>(telemetry->phase3.ms)) + "\n";
    meta += "total_ms=" + std::to_string(static_cast<long>(telemetry->total_ms)) + "\n";
  }
  gmine::write_text_file(base + ".meta", meta);
}

int cmd_generate(const std::string& subject_name, const std::string& mode, std::uint64_t seed,
                 std::string out, const gmine::GenConfig& base_cfg, long target_count) {
  const gmine::Subject& subject = gmine::find_subject(subject_name);
  gmine::GenConfig cfg = base_cfg;
  cfg.rng_seed = gmine::detail::mix_seed(seed, subject.name);
  if (out.empty()) out = join_path(output_root(), subject.name + "_" + mode + ".corpus");

  auto t0 = std::chrono::steady_clock::now();
  gmine::InputCorpus corpus;
  gmine::GenTelemetry telemetry;
  bool have_telemetry = false;
  if (mode == "three") {
    gmine::ThreePhaseResult r = gmine::run_three_phase(subject, cfg);
    corpus = std::move(r.corpus);
    telemetry = r.telemetry;
    have_telemetry = true;
  } else {
    long target = target_count > 0 ? target_count : 1000;
    corpus = gmine::one_phase(subject, cfg, target);
  }
  auto t1 = std::chrono::steady_clock::now();

  write_corpus_files(out, corpus, have_telemetry ? &telemetry : nullptr);

  gmine::RunManifest m;
  m.command = "generate";
  m.subjects = {subject.name};
  m.seed = seed;
  m.set("mode", mode);
  if (mode == "one") m.set("target_count", target_count > 0 ? target_count : 1000);
  snapshot_gen_config(m, cfg);
  m.outputs = {out, out + ".meta"};
  m.wall_ms = ms_between(t0, t1);
  gmine::write_manifest(out + ".manifest", m);

  std::printf("%s: %zu valid inputs -> %s\n", subject.name.c_str(), corpus.size(), out.c_str());
  return corpus.valid.empty() ? kExitUnsolved : kExitOk;
}

int cmd_mine(const std::string& subject_name, const std::string& inputs_path, std::string out,
             const std::string& tree_dump) {
  const gmine::Subject& subject = gmine::find_subject(subject_name);
  std::vector<std::string> corpus = gmine::read_lines(inputs_path);
  if (corpus.empty()) {
    std::fprintf(stderr, "error: corpus %s is empty\n", inputs_path.c_str());
    return kExitInternal;
  }
  if (out.empty()) out = join_path(output_root(), subject.name + ".mined.g");

  auto t0 = std::chrono::steady_clock::now();
  gmine::MineStages stages = gmine::mine_stages(subject, corpus);
  const gmine::Grammar& g = stages.generalized;
  auto t1 = std::chrono::steady_clock::now();
  gmine::write_text_file(out, gmine::write_grammar_file(g));
  if (!tree_dump.empty()) {
    std::string dump;
    for (std::size_t i = 0; i < stages.trees.size(); ++i) {
      dump += "# " + gmine::escape_input(corpus[i]) + "\n";
      dump += gmine::dump_tree(stages.trees[i]);
    }
    gmine::write_text_file(tree_dump, dump);
  }

  gmine::RunManifest m;
  m.command = "mine";
  m.subjects = {subject.name};
  m.set("inputs", inputs_path);
  m.set("corpus_size", static_cast<long>(corpus.size()));
  m.outputs = {out};
  m.wall_ms = ms_between(t0, t1);
  gmine::write_manifest(out + ".manifest", m);

  std::printf("%s: mined grammar with %zu rules -> %s\n", subject.name.c_str(), g.rules().size(),
              out.c_str());
  return kExitOk;
}

std::vector<std::string> resolve_subjects(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const std::string& n : names) {
    if (n == "all") {
      for (const gmine::Subject& s : gmine::all_subjects()) out.push_back(s.name);
    } else {
      out.push_back(gmine::find_subject(n).name);
    }
  }
  return out;
}

gmine::EvalReport run_eval(gmine::EvalMode mode, const std::vector<std::string>& subjects,
                           const gmine::EvalConfig& ecfg, const gmine::GenConfig& gcfg, int jobs) {
  gmine::EvalReport report;
  report.mode = gmine::to_string(mode);
  std::string hw = gmine::handwritten_dir();
  if (jobs <= 1) return gmine::evaluate_all(mode, subjects, ecfg, gcfg, hw);

  std::vector<std::future<gmine::SubjectReport>> futures;
  futures.reserve(subjects.size());
  std::size_t next = 0;
  for (const std::string& name : subjects) {
    futures.push_back(std::async(std::launch::async, [&, name] {
      return gmine::evaluate_subject(mode, gmine::find_subject(name), ecfg, gcfg, hw);
    }));
    if (futures.size() - next >= static_cast<std::size_t>(jobs)) {
      report.rows.push_back(futures[next++].get());
    }
  }
  while (next < futures.size()) report.rows.push_back(futures[next++].get());

  gmine::SubjectReport avg;
  avg.name = "Average";
  for (const auto& r : report.rows) {
    avg.precision += r.precision;
    avg.recall += r.recall;
    avg.f1 += r.f1;
    avg.avg_len += r.avg_len;
    avg.corpus_size += r.corpus_size;
    avg.max_len = std::max(avg.max_len, r.max_len);
  }
  if (!report.rows.empty()) {
    double n = static_cast<double>(report.rows.size());
    avg.precision /= n;
    avg.recall /= n;
    avg.f1 /= n;
    avg.avg_len /= n;
  }
  report.average = avg;
  return report;
}

int cmd_eval(const std::string& mode_name, const std::vector<std::string>& subject_args,
             std::uint64_t seed, std::string out_dir, int sample_count, int jobs,
             const gmine::GenConfig& base_cfg) {
  gmine::EvalMode mode;
  if (mode_name == "handwritten") {
    mode = gmine::EvalMode::Handwritten;
  } else if (mode_name == "one") {
    mode = gmine::EvalMode::OnePhase;
  } else {
    mode = gmine::EvalMode::ThreePhase;
  }
  std::vector<std::string> subjects = resolve_subjects(subject_args);
  if (out_dir.empty()) out_dir = join_path(output_root(), "report");

  gmine::GenConfig gcfg = base_cfg;
  gcfg.rng_seed = seed;
  gmine::EvalConfig ecfg;
  ecfg.sample_count = sample_count;
  ecfg.rng_seed = seed;

  auto t0 = std::chrono::steady_clock::now();
  gmine::EvalReport report = run_eval(mode, subjects, ecfg, gcfg, jobs);
  auto t1 = std::chrono::steady_clock::now();

  std::vector<std::string> written = gmine::write_report(out_dir, report);

  gmine::RunManifest m;
  m.command = "eval";
  m.subjects = subjects;
  m.seed = seed;
  m.set("mode", mode_name);
  m.set("sample_count", static_cast<long>(sample_count));
  m.set("jobs", static_cast<long>(jobs));
  snapshot_gen_config(m, gcfg);
  m.outputs = written;
  m.wall_ms = ms_between(t0, t1);
  gmine::write_manifest(out_dir + "/eval_" + mode_name + ".manifest", m);

  std::fputs(gmine::render_scores(report, false).c_str(), stdout);
  return kExitOk;
}

int cmd_list(const std::string& filter) {
  std::printf("%-16s %-10s %s\n", "Program", "Methods", "LOC");
  for (const gmine::Subject& s : gmine::all_subjects()) {
    if (!filter.empty() && s.name.find(filter) == std::string::npos &&
        s.display.find(filter) == std::string::npos) {
      continue;
    }
    std::printf("%-16s %-10zu %d\n", s.display.c_str(), s.parser_function_names.size(), s.loc);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grammar mining toolkit: concolic input generation, control-flow grammar mining, "
               "precision/recall evaluation"};
  app.require_subcommand(1);

  gmine::GenConfig defaults;

  auto* gen = app.add_subcommand("generate", "Generate a valid-input corpus for a subject");
  std::string gen_subject, gen_mode = "three", gen_out;
  std::uint64_t gen_seed = 1;
  long gen_target = 0;
  double gen_time_limit = defaults.global_time_limit;
  long gen_one_phase_execs = defaults.one_phase_max_execs;
  gen->add_option("subject", gen_subject, "Subject name (see `gmine list`)")->required();
  gen->add_option("--mode", gen_mode, "one | three")->check(CLI::IsMember({"one", "three"}));
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Corpus output file");
  gen->add_option("--target", gen_target, "Valid-input goal (one-phase mode)");
  gen->add_option("--time-limit", gen_time_limit, "Wall-clock limit in seconds (one-phase mode)");
  gen->add_option("--max-execs", gen_one_phase_execs, "Execution budget (one-phase mode)");
  gen->add_option("--phase1-count", defaults.phase1_input_count, "Phase 1 queue pops");
  gen->add_option("--phase2-execs", defaults.phase2_max_execs_per_function,
                  "Phase 2 executions per function");
  gen->add_option("--phase3-execs", defaults.phase3_max_execs, "Phase 3 execution budget");

  auto* mine_cmd = app.add_subcommand("mine", "Mine a grammar from a corpus file");
  std::string mine_subject, mine_inputs, mine_out, mine_trees;
  mine_cmd->add_option("subject", mine_subject, "Subject name")->required();
  mine_cmd->add_option("--inputs", mine_inputs, "Corpus file (one escaped input per line)")
      ->required();
  mine_cmd->add_option("--out", mine_out, "Grammar output file");
  mine_cmd->add_option("--dump-trees", mine_trees, "Write per-input parse trees (indented text)");

  auto* eval_cmd = app.add_subcommand("eval", "Run the full evaluation pipeline");
  std::string eval_mode = "three";
  std::vector<std::string> eval_subjects{"all"};
  std::uint64_t eval_seed = 1;
  std::string eval_out;
  int eval_samples = 1000;
  int eval_jobs = 1;
  eval_cmd->add_option("--mode", eval_mode, "handwritten | one | three")
      ->check(CLI::IsMember({"handwritten", "one", "three"}));
  eval_cmd->add_option("--subjects", eval_subjects, "Subject names or 'all'");
  eval_cmd->add_option("--seed", eval_seed, "RNG seed");
  eval_cmd->add_option("--out", eval_out, "Report output directory");
  eval_cmd->add_option("--samples", eval_samples, "Samples per metric")
      ->check(CLI::Range(100, 100000));
  eval_cmd->add_option("--jobs", eval_jobs, "Parallel subjects")->check(CLI::Range(1, 64));

  auto* list_cmd = app.add_subcommand("list", "List subjects with method counts and LOC");
  std::string list_filter;
  list_cmd->add_option("filter", list_filter, "Substring filter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      gmine::GenConfig cfg = defaults;
      cfg.global_time_limit = gen_time_limit;
      cfg.one_phase_max_execs = gen_one_phase_execs;
      return cmd_generate(gen_subject, gen_mode, gen_seed, gen_out, cfg, gen_target);
    }
    if (mine_cmd->parsed()) return cmd_mine(mine_subject, mine_inputs, mine_out, mine_trees);
    if (eval_cmd->parsed()) {
      return cmd_eval(eval_mode, eval_subjects, eval_seed, eval_out, eval_samples, eval_jobs,
                      defaults);
    }
    if (list_cmd->parsed()) return cmd_list(list_filter);
  } catch (const gmine::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
  return kExitUsage;
}
