#pragma once

// Plain-text presentation format:
//
//   # comment
//   group Z2
//   gens: a b
//   rels: [a,b] ; a^2*b^-3
//
//   split hnn vertex=Z edge=a conj=a letter=t twist=a
//
// Words: identifiers name generators, `*` or juxtaposition concatenates, `^k` takes an
// integer power, `[u,v]` is u v u^-1 v^-1, parentheses group, and `1` is the identity.
// Lists of words are separated by `;` (or `,` outside brackets).

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "limitgrp/error.hpp"
#include "limitgrp/presentation.hpp"
#include "limitgrp/word.hpp"

namespace limitgrp {

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, const std::vector<std::string>& names, std::size_t line,
             std::size_t column)
      : text_(text), names_(names), line_(line), column_(column) {}

  std::vector<Word> parse_list() {
    std::vector<Word> out;
    skip_ws();
    if (at_end()) return out;
    while (true) {
      out.push_back(parse_word());
      skip_ws();
      if (at_end()) break;
      if (peek() == ';' || peek() == ',') {
        ++pos_;
        skip_ws();
        if (at_end()) break;  // trailing separator
        continue;
      }
      fail("unexpected character '" + std::string(1, peek()) + "'");
    }
    return out;
  }

  Word parse_single() {
    Word w = parse_word();
    skip_ws();
    if (!at_end()) fail("trailing characters after word");
    return w;
  }

 private:
  Word parse_word() {
    Word w(names_.size());
    skip_ws();
    if (at_end() || !starts_factor()) fail("expected a word");
    while (true) {
      w *= parse_factor();
      skip_ws();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !starts_factor()) fail("expected a factor after '*'");
        continue;
      }
      if (starts_factor()) continue;
      break;
    }
    return w;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '[' || c == '(' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_';
  }

  Word parse_factor() {
    Word base = parse_primary();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      return power(base, parse_int());
    }
    return base;
  }

  Word parse_primary() {
    skip_ws();
    const char c = peek();
    if (c == '[') {
      ++pos_;
      Word u = parse_word();
      expect(',');
      Word v = parse_word();
      expect(']');
      return commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      Word u = parse_word();
      expect(')');
      return u;
    }
    if (c == '1') {
      ++pos_;
      return Word(names_.size());
    }
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return Word::generator(names_.size(), static_cast<std::uint32_t>(i));
    }
    pos_ = start;
    fail("unknown generator '" + name + "'");
  }

  long parse_int() {
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t line_;
  std::size_t column_;
  std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace detail

/// Parses one word over the given generator names. `line`/`column` locate the text in
/// its source for error messages (1-based).
inline Word parse_word(std::string_view text, const std::vector<std::string>& names,
                       std::size_t line = 1, std::size_t column = 1) {
  return detail::WordParser(text, names, line, column).parse_single();
}

inline std::vector<Word> parse_word_list(std::string_view text, const std::vector<std::string>& names,
                                         std::size_t line = 1, std::size_t column = 1) {
  return detail::WordParser(text, names, line, column).parse_list();
}

/// Compact rendering with runs collapsed to powers, e.g. "a^2*b^-1". Identity is "1".
inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i) * w[i].sign;
    if (!out.empty()) out += '*';
    out += w[i].gen < names.size() ? names[w[i].gen] : "x" + std::to_string(w[i].gen + 1);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

inline std::string format_word(const Word& w, const Presentation& p) {
  return format_word(w, p.generator_names());
}

/// Raw `split ...` line: keyword values kept as text until the referenced groups are known.
struct SplitStanza {
  std::string kind;  // "amalgam" or "hnn"
  struct Value {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
  };
  std::map<std::string, Value> fields;
  std::size_t line = 0;

  const Value* field(const std::string& key) const {
    auto it = fields.find(key);
    return it == fields.end() ? nullptr : &it->second;
  }
};

/// Contents of a presentation file: any number of group stanzas and split lines.
struct PresentationDocument {
  std::vector<Presentation> groups;
  std::vector<SplitStanza> splits;

  const Presentation* find(const std::string& name) const {
    for (const auto& g : groups) {
      if (g.name() == name) return &g;
    }
    return nullptr;
  }
};

inline PresentationDocument parse_presentation_document(std::string_view text) {
  PresentationDocument doc;

  struct Pending {
    std::string name;
    std::size_t line = 0;
    std::optional<std::vector<std::string>> gens;
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> rel_chunks;
  };
  std::optional<Pending> cur;

  auto finish = [&]() {
    if (!cur) return;
    if (!cur->gens) throw ParseError("group '" + cur->name + "' has no gens: line", cur->line, 1);
    std::vector<Word> rels;
    for (const auto& [chunk, pos] : cur->rel_chunks) {
      for (Word& w : parse_word_list(chunk, *cur->gens, pos.first, pos.second)) {
        if (w.empty()) throw ParseError("relator reduces to the identity", pos.first, pos.second);
        rels.push_back(std::move(w));
      }
    }
    if (doc.find(cur->name)) throw ParseError("duplicate group '" + cur->name + "'", cur->line, 1);
    doc.groups.emplace_back(cur->name, *cur->gens, std::move(rels));
    cur.reset();
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t indent = 0;
    while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
    std::string_view line = raw.substr(indent);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t col0 = indent + 1;

    auto keyword_is = [&](std::string_view kw) {
      return line.substr(0, kw.size()) == kw &&
             (line.size() == kw.size() || std::isspace(static_cast<unsigned char>(line[kw.size()])) ||
              line[kw.size()] == ':');
    };

    if (keyword_is("group")) {
      finish();
      std::string name = detail::trim(line.substr(5));
      if (name.empty()) throw ParseError("group needs a name", line_no, col0 + 5);
      cur = Pending{name, line_no, std::nullopt, {}};
    } else if (keyword_is("gens")) {
      if (!cur) throw ParseError("gens: outside a group stanza", line_no, col0);
      auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected ':' after gens", line_no, col0 + 4);
      if (cur->gens) throw ParseError("gens: given twice", line_no, col0);
      std::vector<std::string> names;
      std::istringstream in{std::string(line.substr(colon + 1))};
      for (std::string tok; in >> tok;) {
        bool ok = std::isalpha(static_cast<unsigned char>(tok[0])) || tok[0] == '_';
        for (char c : tok) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw ParseError("invalid generator name '" + tok + "'", line_no, col0);
        for (const auto& n : names) {
          if (n == tok) throw ParseError("duplicate generator '" + tok + "'", line_no, col0);
        }
        names.push_back(tok);
      }
      cur->gens = std::move(names);
    } else if (keyword_is("rels")) {
      if (!cur) throw ParseError("rels: outside a group stanza", line_no, col0);
      auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected ':' after rels", line_no, col0 + 4);
      cur->rel_chunks.emplace_back(std::string(line.substr(colon + 1)),
                                   std::make_pair(line_no, col0 + colon + 1));
    } else if (keyword_is("split")) {
      finish();
      SplitStanza s;
      s.line = line_no;
      std::size_t pos = 5;
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      std::size_t kend = pos;
      while (kend < line.size() && !std::isspace(static_cast<unsigned char>(line[kend]))) ++kend;
      s.kind = std::string(line.substr(pos, kend - pos));
      if (s.kind != "amalgam" && s.kind != "hnn") {
        throw ParseError("split kind must be 'amalgam' or 'hnn'", line_no, col0 + pos);
      }
      // key=value pairs; a value runs until the next `key=` token.
      std::vector<std::pair<std::size_t, std::size_t>> keys;  // (key start, '=' position)
      std::size_t p = kend;
      while (p < line.size()) {
        while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        std::size_t q = p;
        while (q < line.size() && (std::isalnum(static_cast<unsigned char>(line[q])) || line[q] == '_')) ++q;
        if (q < line.size() && line[q] == '=' && q > p && (p == kend || std::isspace(static_cast<unsigned char>(line[p - 1])))) {
          keys.emplace_back(p, q);
          p = q + 1;
        } else {
          while (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p]))) ++p;
        }
      }
      if (keys.empty()) throw ParseError("split line has no key=value fields", line_no, col0 + kend);
      if (keys.front().first != kend + 1 &&
          !detail::trim(line.substr(kend, keys.front().first - kend)).empty()) {
        throw ParseError("unexpected text before first field", line_no, col0 + kend);
      }
      for (std::size_t k = 0; k < keys.size(); ++k) {
        const auto [ks, eq] = keys[k];
        const std::size_t vend = k + 1 < keys.size() ? keys[k + 1].first : line.size();
        std::string key(line.substr(ks, eq - ks));
        if (s.fields.count(key)) throw ParseError("duplicate field '" + key + "'", line_no, col0 + ks);
        s.fields[key] = {detail::trim(line.substr(eq + 1, vend - eq - 1)), line_no, col0 + eq + 1};
      }
      doc.splits.push_back(std::move(s));
    } else {
      throw ParseError("expected 'group', 'gens:', 'rels:' or 'split'", line_no, col0);
    }
    if (end == text.size()) break;
  }
  finish();
  return doc;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Single-group convenience: the first group stanza of `text`.
inline Presentation parse_presentation(std::string_view text) {
  auto doc = parse_presentation_document(text);
  if (doc.groups.empty()) throw ParseError("no group stanza", 1, 1);
  return doc.groups.front();
}

/// Inverse of parse_presentation for a single group.
inline std::string format_presentation(const Presentation& p) {
  std::string out = "group " + (p.name().empty() ? std::string("G") : p.name()) + "\ngens:";
  for (const auto& n : p.generator_names()) out += " " + n;
  out += "\n";
  if (!p.relators().empty()) {
    out += "rels:";
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      out += (i ? " ; " : " ") + format_word(p.relators()[i], p);
    }
    out += "\n";
  }
  return out;
}

}  // namespace limitgrp
