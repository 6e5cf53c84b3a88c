#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "gmine/grammar.hpp"

namespace gmine {

// Line-oriented grammar file format:
//
//   # comment
//   <name> ::= 'literal' <other> [digit] ( <item> ',' )* | ''
//
// Literals are single-quoted with \\ \' \n \t escapes; a multi-character
// literal stands for the sequence of its characters and '' for the empty
// string. Classes are [space], [digit], [lower], [alpha], [alnum], [print] and
// [print-except: 'chars']. A parenthesized group followed by '*' repeats
// zero or more times. Lines starting with '|' continue the previous rule.
// The first rule defines the start symbol.

class GrammarSyntaxError : public GrammarError {
 public:
  GrammarSyntaxError(int line, int col, const std::string& what)
      : GrammarError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what) {}
};

namespace detail {

class GrammarTextParser {
 public:
  explicit GrammarTextParser(const std::string& text) : text_(text) {}

  Grammar parse() {
    Grammar g;
    std::string current_rule;
    std::istringstream in(text_);
    std::string line;
    while (std::getline(in, line)) {
      ++line_no_;
      line_ = line;
      pos_ = 0;
      skip_ws();
      if (done() || peek() == '#') continue;
      if (peek() == '|') {
        if (current_rule.empty()) fail("continuation line without a rule");
        get();
        parse_alternatives(g.rule(current_rule));
        continue;
      }
      std::string name = parse_rule_name();
      skip_ws();
      expect_str("::=");
      current_rule = name;
      parse_alternatives(g.rule(name));
    }
    g.validate();
    return g;
  }

 private:
  bool done() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }
  char get() { return line_[pos_++]; }
  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw GrammarSyntaxError(line_no_, static_cast<int>(pos_) + 1, msg);
  }
  void expect_ch(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  void expect_str(const std::string& s) {
    for (char c : s) expect_ch(c);
  }

  std::string parse_rule_name() {
    expect_ch('<');
    std::string name;
    while (!done() && peek() != '>') name.push_back(get());
    expect_ch('>');
    if (name.empty()) fail("empty nonterminal name");
    return name;
  }

  void parse_alternatives(std::vector<Alternative>& alts) {
    while (true) {
      alts.push_back(parse_sequence());
      skip_ws();
      if (done() || peek() == '#') return;
      expect_ch('|');
    }
  }

  Alternative parse_sequence() {
    Alternative seq;
    while (true) {
      skip_ws();
      if (done() || peek() == '|' || peek() == ')' || peek() == '#') return seq;
      parse_symbol(seq);
    }
  }

  void parse_symbol(Alternative& seq) {
    char c = peek();
    if (c == '\'') {
      std::string chars = parse_literal();
      for (char t : chars) seq.push_back(Symbol::terminal(t));
      return;
    }
    if (c == '<') {
      seq.push_back(Symbol::nonterminal(parse_rule_name()));
      return;
    }
    if (c == '[') {
      seq.push_back(parse_class());
      return;
    }
    if (c == '(') {
      get();
      Alternative body = parse_sequence();
      expect_ch(')');
      expect_ch('*');
      if (body.empty()) fail("empty group");
      seq.push_back(Symbol::group(std::move(body)));
      return;
    }
    fail("unexpected character in rule body");
  }

  std::string parse_literal() {
    expect_ch('\'');
    std::string out;
    while (true) {
      if (done()) fail("unterminated literal");
      char c = get();
      if (c == '\'') return out;
      if (c == '\\') {
        if (done()) fail("dangling escape");
        char e = get();
        switch (e) {
          case '\\': out.push_back('\\'); break;
          case '\'': out.push_back('\''); break;
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          default: fail("unknown escape");
        }
        continue;
      }
      out.push_back(c);
    }
  }

  Symbol parse_class() {
    expect_ch('[');
    std::string name;
    while (!done() && peek() != ']' && peek() != ':') name.push_back(get());
    if (name == "print-except") {
      expect_ch(':');
      skip_ws();
      std::string except = parse_literal();
      skip_ws();
      expect_ch(']');
      return Symbol::char_class("print-except", except);
    }
    expect_ch(']');
    if (name != "space" && name != "digit" && name != "lower" && name != "alpha" &&
        name != "alnum" && name != "print") {
      fail("unknown character class [" + name + "]");
    }
    return Symbol::char_class(name);
  }

  const std::string& text_;
  std::string line_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

inline void write_literal(std::ostringstream& out, const std::string& chars) {
  out << '\'';
  for (char c : chars) {
    switch (c) {
      case '\\': out << "\\\\"; break;
      case '\'': out << "\\'"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      default: out << c;
    }
  }
  out << '\'';
}

inline void write_sequence(std::ostringstream& out, const Alternative& seq) {
  if (seq.empty()) {
    out << "''";
    return;
  }
  std::string run;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  auto flush_run = [&] {
    if (run.empty()) return;
    sep();
    write_literal(out, run);
    run.clear();
  };
  for (const Symbol& s : seq) {
    if (s.kind == SymbolKind::Terminal) {
      run.push_back(s.term);
      continue;
    }
    flush_run();
    sep();
    switch (s.kind) {
      case SymbolKind::Nonterminal:
        out << '<' << s.ref << '>';
        break;
      case SymbolKind::CharClass:
        if (s.cls == "print-except") {
          out << "[print-except: ";
          write_literal(out, s.cls_except);
          out << ']';
        } else {
          out << '[' << s.cls << ']';
        }
        break;
      case SymbolKind::Group: {
        out << "( ";
        std::ostringstream inner;
        write_sequence(inner, s.body);
        out << inner.str() << " )*";
        break;
      }
      case SymbolKind::Terminal:
        break;
    }
  }
  flush_run();
}

}  // namespace detail

inline Grammar parse_grammar_file(const std::string& text) {
  return detail::GrammarTextParser(text).parse();
}

inline std::string write_grammar_file(const Grammar& g) {
  std::ostringstream out;
  for (const auto& [name, alts] : g.rules()) {
    out << '<' << name << "> ::= ";
    for (std::size_t i = 0; i < alts.size(); ++i) {
      if (i) out << " | ";
      std::ostringstream seq;
      detail::write_sequence(seq, alts[i]);
      out << seq.str();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gmine
