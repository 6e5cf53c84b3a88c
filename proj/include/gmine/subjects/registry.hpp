#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gmine/engine.hpp"
#include "gmine/grammar_text.hpp"
#include "gmine/subjects/adv_expr.hpp"
#include "gmine/subjects/calc.hpp"
#include "gmine/subjects/cgidecode.hpp"
#include "gmine/subjects/expr.hpp"
#include "gmine/subjects/hello.hpp"
#include "gmine/subjects/json.hpp"
#include "gmine/subjects/mail.hpp"
#include "gmine/subjects/mathexpr.hpp"
#include "gmine/subjects/microjson.hpp"
#include "gmine/subjects/mjs.hpp"
#include "gmine/subjects/url.hpp"

namespace gmine {

// One benchmark parser: entry procedure, declared parser methods (test
// oracle only; the pipeline classifies functions itself), and its golden
// grammar file.
struct Subject {
  std::string name;
  std::string display;
  SubjectFn entry;
  std::vector<std::string> parser_function_names;
  int loc;
  std::string golden_file;
};

inline const std::vector<Subject>& all_subjects() {
  static const std::vector<Subject> subjects = {
      {"advexpr",
       "AdvExprParser",
       &subjects::advexpr_expr,
       {"expr", "term", "unary", "power", "factor", "digit"},
       85,
       "advexpr.g"},
      {"calc", "Calc", &subjects::calc_expr, {"calc_expr", "calc_factor", "calc_num"}, 54, "calc.g"},
      {"cgidecode", "CgiDecode", &subjects::cgi_decode, {"cgi_decode"}, 28, "cgidecode.g"},
      {"expr",
       "ExprParser",
       &subjects::expr_expr,
       {"expr", "term", "factor", "digit"},
       62,
       "expr.g"},
      {"hello", "HelloParser", &subjects::hello, {"hello", "name"}, 68, "hello.g"},
      {"json",
       "JsonParser",
       &subjects::jsonparser,
       {"json",      "element",  "value",    "object",   "members",  "member",  "array",
        "elements",  "string",   "characters", "character", "escape", "number",  "integer",
        "digits",    "digit",    "fraction", "exponent", "bool_true", "bool_false", "null_lit"},
       207,
       "json.g"},
      {"mail", "MailParser", &subjects::mail, {"mail", "local", "domain", "name", "tld"}, 57, "mail.g"},
      {"mathexpr",
       "Mathexpr",
       &subjects::mathexpr,
       {"mathexpr", "expr", "term", "factor", "number", "fraction", "word", "args", "mathdigit"},
       150,
       "mathexpr.g"},
      {"microjson",
       "MicroJson",
       &subjects::microjson,
       {"from_json", "json_raw", "json_dict", "json_list", "json_string", "json_number",
        "json_fixed", "decode_escape", "getvalue"},
       186,
       "microjson.g"},
      {"mjs",
       "Mjs",
       &subjects::mjs,
       {"mjs",         "statements", "statement",  "let_stmt",   "if_stmt",    "while_stmt",
        "for_stmt",    "return_stmt", "block",     "expr_stmt",  "expression", "ternary",
        "logical_or",  "logical_and", "equality",  "relational", "additive",   "multiplicative",
        "unary",       "postfix",    "call_args",  "primary",    "identifier", "number",
        "num_digit",   "string_lit", "str_char",   "array_lit",  "elems",      "object_lit",
        "props",       "prop",       "bool_null"},
       461,
       "mjs.g"},
      {"url",
       "UrlParser",
       &subjects::url,
       {"url",        "scheme", "scheme_http", "scheme_ftp", "scheme_file", "scheme_sep",
        "host",       "name",   "letter",      "digit",      "port",        "port_digits",
        "path",       "segment", "query",      "pairs",      "query_pair",  "key",
        "value",      "fragment"},
       220,
       "url.g"},
  };
  return subjects;
}

inline const Subject& find_subject(const std::string& name) {
  for (const Subject& s : all_subjects()) {
    if (s.name == name) return s;
  }
  throw ConfigError("unknown subject: " + name);
}

inline ExecutionResult execute(const Subject& s, std::string_view input,
                               const ExecOptions& opts = {}) {
  return execute(s.entry, input, opts);
}

// Directory holding the golden grammar files: $GMINE_GRAMMAR_DIR when set,
// otherwise the checked-in grammars/ directory.
inline std::string grammar_dir() {
  if (const char* env = std::getenv("GMINE_GRAMMAR_DIR")) return env;
#ifdef GMINE_SOURCE_DIR
  return std::string(GMINE_SOURCE_DIR) + "/grammars";
#else
  return "grammars";
#endif
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Grammar golden(const Subject& s) {
  Grammar g = parse_grammar_file(read_text_file(grammar_dir() + "/" + s.golden_file));
  g.validate();
  return g;
}

inline Grammar golden(const std::string& subject_name) { return golden(find_subject(subject_name)); }

}  // namespace gmine
