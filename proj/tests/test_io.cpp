#include <catch2/catch.hpp>

#include <cstdio>
#include <filesystem>
#include <random>
#include <string>

#include "gmine/alphabet.hpp"
#include "gmine/corpus_io.hpp"
#include "gmine/manifest.hpp"

using namespace gmine;

TEST_CASE("corpus escaping round-trips every alphabet character") {
  std::mt19937 rng(4242);
  const std::string& chars = Alphabet::standard().chars();
  for (int trial = 0; trial < 300; ++trial) {
    std::string s;
    int len = static_cast<int>(rng() % 40);
    for (int i = 0; i < len; ++i) s.push_back(chars[rng() % chars.size()]);
    std::string line = escape_input(s);
    CHECK(line.find('\n') == std::string::npos);
    CHECK(line.find('\t') == std::string::npos);
    CHECK(unescape_input(line) == s);
  }
}

TEST_CASE("corpus files round-trip through disk") {
  std::vector<std::string> inputs = {"", "plain", "tab\there", "line\nbreak", "back\\slash",
                                     "{\"a\":1,,\"b\":2}"};
  std::string path = std::filesystem::temp_directory_path() / "gmine_corpus_test.txt";
  write_lines(path, inputs);
  CHECK(read_lines(path) == inputs);
  std::remove(path.c_str());
}

TEST_CASE("malformed escapes are rejected") {
  CHECK_THROWS_AS(unescape_input("dangling\\"), IoError);
  CHECK_THROWS_AS(unescape_input("bad\\q"), IoError);
  CHECK_THROWS_AS(read_lines("/nonexistent/corpus.txt"), IoError);
}

TEST_CASE("manifests serialize command, config, and outputs") {
  RunManifest m;
  m.command = "generate";
  m.subjects = {"microjson"};
  m.seed = 7;
  m.set("mode", "three");
  m.set("phase1_input_count", 500L);
  m.outputs = {"out/microjson.corpus"};
  m.wall_ms = 1234.5;
  std::string text = render_manifest(m);
  CHECK(text.find("command=generate\n") != std::string::npos);
  CHECK(text.find("subjects=microjson\n") != std::string::npos);
  CHECK(text.find("seed=7\n") != std::string::npos);
  CHECK(text.find("mode=three\n") != std::string::npos);
  CHECK(text.find("phase1_input_count=500\n") != std::string::npos);
  CHECK(text.find("output=out/microjson.corpus\n") != std::string::npos);
  CHECK(text.find("wall_ms=1234\n") != std::string::npos);
}
