#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gmine/corpus_io.hpp"

namespace gmine {

// Reproducibility record written alongside every command output: the
// command, subjects, seed, full config snapshot, output paths and timings.
struct RunManifest {
  std::string command;
  std::vector<std::string> subjects;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> outputs;
  double wall_ms = 0;

  void set(const std::string& key, const std::string& value) { config.emplace_back(key, value); }
  void set(const std::string& key, long value) { config.emplace_back(key, std::to_string(value)); }
  void set(const std::string& key, double value) { config.emplace_back(key, std::to_string(value)); }
};

inline std::string render_manifest(const RunManifest& m) {
  std::string out;
  out += "command=" + m.command + "\n";
  std::string subj;
  for (const std::string& s : m.subjects) {
    if (!subj.empty()) subj += ",";
    subj += s;
  }
  out += "subjects=" + subj + "\n";
  out += "seed=" + std::to_string(m.seed) + "\n";
  for (const auto& [k, v] : m.config) out += k + "=" + v + "\n";
  for (const std::string& o : m.outputs) out += "output=" + o + "\n";
  out += "wall_ms=" + std::to_string(static_cast<long>(m.wall_ms)) + "\n";
  return out;
}

inline void write_manifest(const std::string& path, const RunManifest& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << render_manifest(m);
}

}  // namespace gmine
