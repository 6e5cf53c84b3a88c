#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmine/alphabet.hpp"

namespace gmine {

class GrammarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind { Terminal, CharClass, Nonterminal, Group };

// Grammar symbol: a literal character, a named character class, a reference
// to another rule, or a starred group of symbols.
struct Symbol {
  SymbolKind kind = SymbolKind::Terminal;
  char term = 0;               // Terminal
  std::string cls;             // CharClass: digit|lower|alpha|alnum|print|print-except
  std::string cls_except;      // excluded characters for print-except
  std::string ref;             // Nonterminal name
  std::vector<Symbol> body;    // Group contents (group repeats zero or more times)

  static Symbol terminal(char c) {
    Symbol s;
    s.kind = SymbolKind::Terminal;
    s.term = c;
    return s;
  }
  static Symbol char_class(std::string name, std::string except = {}) {
    Symbol s;
    s.kind = SymbolKind::CharClass;
    s.cls = std::move(name);
    s.cls_except = std::move(except);
    return s;
  }
  static Symbol nonterminal(std::string name) {
    Symbol s;
    s.kind = SymbolKind::Nonterminal;
    s.ref = std::move(name);
    return s;
  }
  static Symbol group(std::vector<Symbol> body) {
    Symbol s;
    s.kind = SymbolKind::Group;
    s.body = std::move(body);
    return s;
  }

  bool operator==(const Symbol& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case SymbolKind::Terminal: return term == o.term;
      case SymbolKind::CharClass: return cls == o.cls && cls_except == o.cls_except;
      case SymbolKind::Nonterminal: return ref == o.ref;
      case SymbolKind::Group: return body == o.body;
    }
    return false;
  }
};

using Alternative = std::vector<Symbol>;  // empty sequence derives the empty string

// Members of a named character class over the configured alphabet.
inline std::string class_members(const std::string& cls, const std::string& except,
                                 const Alphabet& a = Alphabet::standard()) {
  std::string out;
  auto excluded = [&](char c) { return except.find(c) != std::string::npos; };
  for (char c : a.chars()) {
    bool in = false;
    if (cls == "space") {
      in = c == ' ' || c == '\t' || c == '\n';
    } else if (cls == "digit") {
      in = c >= '0' && c <= '9';
    } else if (cls == "lower") {
      in = c >= 'a' && c <= 'z';
    } else if (cls == "alpha") {
      in = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    } else if (cls == "alnum") {
      in = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    } else if (cls == "print" || cls == "print-except") {
      in = true;
    } else {
      throw GrammarError("unknown character class: " + cls);
    }
    if (in && !excluded(c)) out.push_back(c);
  }
  return out;
}

// Context-free grammar with insertion-ordered rules. The first rule added is
// the start symbol unless overridden.
class Grammar {
 public:
  std::string start;

  std::vector<Alternative>& rule(const std::string& name) {
    if (auto* r = find(name)) return *r;
    if (rules_.empty() && start.empty()) start = name;
    rules_.emplace_back(name, std::vector<Alternative>{});
    return rules_.back().second;
  }

  std::vector<Alternative>* find(const std::string& name) {
    for (auto& [n, alts] : rules_) {
      if (n == name) return &alts;
    }
    return nullptr;
  }
  const std::vector<Alternative>* find(const std::string& name) const {
    return const_cast<Grammar*>(this)->find(name);
  }

  const std::vector<std::pair<std::string, std::vector<Alternative>>>& rules() const {
    return rules_;
  }
  std::vector<std::pair<std::string, std::vector<Alternative>>>& rules() { return rules_; }

  bool operator==(const Grammar& o) const { return start == o.start && rules_ == o.rules_; }

  // Start defined, every referenced nonterminal defined, no empty rule lists.
  void validate() const {
    if (!find(start)) throw GrammarError("start symbol <" + start + "> is not defined");
    for (const auto& [name, alts] : rules_) {
      if (alts.empty()) throw GrammarError("rule <" + name + "> has no alternatives");
      for (const auto& alt : alts) check_refs(name, alt);
    }
  }

 private:
  void check_refs(const std::string& rule_name, const Alternative& alt) const {
    for (const Symbol& s : alt) {
      if (s.kind == SymbolKind::Nonterminal && !find(s.ref)) {
        throw GrammarError("rule <" + rule_name + "> references undefined <" + s.ref + ">");
      }
      if (s.kind == SymbolKind::Group) check_refs(rule_name, s.body);
      if (s.kind == SymbolKind::CharClass) class_members(s.cls, s.cls_except);
    }
  }

  std::vector<std::pair<std::string, std::vector<Alternative>>> rules_;
};

}  // namespace gmine
