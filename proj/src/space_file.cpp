#include "seplat/space_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace seplat {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool valid_name(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '*' || c == '\'' || c == '.' || c == '+' || c == '-';
  });
}

class Parser {
 public:
  SpaceFile run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto end = text.find('\n', pos);
      const auto line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      ++line_no;
      handle(line_no, tokenize(line));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    close_block();
    if (file_.definitions.empty()) throw ParseError(1, 1, "no space definitions");
    return std::move(file_);
  }

 private:
  [[noreturn]] void fail(std::size_t line, const Token& t, const std::string& msg) {
    throw ParseError(line, t.column, msg);
  }

  void expect_name(std::size_t line, const Token& t) {
    if (!valid_name(t.text)) fail(line, t, "invalid name '" + t.text + "'");
  }

  void expect_count(std::size_t line, const std::vector<Token>& toks, std::size_t n, const char* usage) {
    if (toks.size() != n) {
      const Token& at = toks.size() > n ? toks[n] : toks.back();
      fail(line, at, std::string("expected '") + usage + "'");
    }
  }

  void define(Definition d, std::size_t line, const Token& at) {
    if (file_.find(d.name)) fail(line, at, "space '" + d.name + "' is already defined");
    file_.definitions.push_back(std::move(d));
  }

  Definition* open_block() {
    if (!block_open_) return nullptr;
    return &file_.definitions.back();
  }

  void close_block() {
    if (!block_open_) return;
    block_open_ = false;
    const auto& d = file_.definitions.back();
    if (d.kind == DefinitionKind::explicit_space && d.states.empty())
      throw ParseError(d.line, 1, "space '" + d.name + "' has no states or mo line");
  }

  void operand(std::size_t line, const Token& t) {
    expect_name(line, t);
    const auto* d = file_.find(t.text);
    if (!d) fail(line, t, "unknown space '" + t.text + "'");
    if (d->kind == DefinitionKind::coproduct) fail(line, t, "'" + t.text + "' is a coproduct, not a space");
  }

  void handle(std::size_t line, const std::vector<Token>& toks) {
    if (toks.empty()) return;
    const auto& head = toks.front().text;
    if (head == "space") {
      expect_count(line, toks, 2, "space NAME");
      expect_name(line, toks[1]);
      close_block();
      Definition d;
      d.name = toks[1].text;
      d.line = line;
      define(std::move(d), line, toks[1]);
      block_open_ = true;
      block_states_.clear();
    } else if (head == "states") {
      auto* d = open_block();
      if (!d) fail(line, toks[0], "'states' outside a space block");
      if (d->kind == DefinitionKind::mo) fail(line, toks[0], "space '" + d->name + "' is already an mo space");
      if (!d->states.empty()) fail(line, toks[0], "space '" + d->name + "' already has a states line");
      if (toks.size() < 2) fail(line, toks[0], "expected 'states NAME...'");
      for (std::size_t k = 1; k < toks.size(); ++k) {
        expect_name(line, toks[k]);
        if (!block_states_.insert(toks[k].text).second) fail(line, toks[k], "duplicate state '" + toks[k].text + "'");
        d->states.push_back(toks[k].text);
      }
    } else if (head == "ortho") {
      auto* d = open_block();
      if (!d || d->states.empty()) fail(line, toks[0], "'ortho' needs a preceding states line");
      expect_count(line, toks, 3, "ortho STATE STATE");
      for (std::size_t k = 1; k < 3; ++k)
        if (!block_states_.contains(toks[k].text)) fail(line, toks[k], "unknown state '" + toks[k].text + "'");
      if (toks[1].text == toks[2].text) fail(line, toks[2], "state '" + toks[1].text + "' cannot be orthogonal to itself");
      d->ortho.emplace_back(toks[1].text, toks[2].text);
    } else if (head == "mo") {
      expect_count(line, toks, 2, "mo N");
      std::size_t n = 0;
      const auto& num = toks[1].text;
      const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
      if (ec != std::errc{} || ptr != num.data() + num.size()) fail(line, toks[1], "expected a count, got '" + num + "'");
      if (n == 0) fail(line, toks[1], "mo needs at least one antipodal pair");
      auto* d = open_block();
      if (d && d->kind == DefinitionKind::explicit_space && d->states.empty()) {
        d->kind = DefinitionKind::mo;
        d->n = n;
        close_block();
        return;
      }
      close_block();
      Definition a;
      a.name = "mo" + std::to_string(n);
      a.kind = DefinitionKind::mo;
      a.anonymous = true;
      a.n = n;
      a.line = line;
      define(std::move(a), line, toks[0]);
    } else if (head == "product" || head == "coproduct") {
      expect_count(line, toks, 5, (head + " NAME = LEFT RIGHT").c_str());
      expect_name(line, toks[1]);
      if (toks[2].text != "=") fail(line, toks[2], "expected '='");
      close_block();
      operand(line, toks[3]);
      operand(line, toks[4]);
      Definition d;
      d.name = toks[1].text;
      d.kind = head == "product" ? DefinitionKind::product : DefinitionKind::coproduct;
      d.left = toks[3].text;
      d.right = toks[4].text;
      d.line = line;
      define(std::move(d), line, toks[1]);
    } else {
      fail(line, toks[0], "unknown directive '" + head + "'");
    }
  }

  SpaceFile file_;
  bool block_open_ = false;
  std::unordered_set<std::string> block_states_;
};

}  // namespace

const Definition* SpaceFile::find(const std::string& name) const {
  for (const auto& d : definitions)
    if (d.name == name) return &d;
  return nullptr;
}

SpaceFile parse_space_file(std::string_view text) { return Parser{}.run(text); }

std::string render_space_file(const SpaceFile& file) {
  std::string out;
  for (const auto& d : file.definitions) {
    switch (d.kind) {
      case DefinitionKind::explicit_space:
        out += "space " + d.name + "\nstates";
        for (const auto& s : d.states) out += " " + s;
        out += "\n";
        for (const auto& [a, b] : d.ortho) out += "ortho " + a + " " + b + "\n";
        break;
      case DefinitionKind::mo:
        if (!d.anonymous) out += "space " + d.name + "\n";
        out += "mo " + std::to_string(d.n) + "\n";
        break;
      case DefinitionKind::product:
        out += "product " + d.name + " = " + d.left + " " + d.right + "\n";
        break;
      case DefinitionKind::coproduct:
        out += "coproduct " + d.name + " = " + d.left + " " + d.right + "\n";
        break;
    }
  }
  return out;
}

OrthoSpace build_space(const SpaceFile& file, const std::string& name) {
  const auto* d = file.find(name);
  if (!d) throw InvalidSpace("unknown space '" + name + "'");
  switch (d->kind) {
    case DefinitionKind::explicit_space:
      return OrthoSpace::make(d->states, d->ortho);
    case DefinitionKind::mo:
      return mo_space(d->n);
    case DefinitionKind::product:
      return product_space(build_space(file, d->left), build_space(file, d->right));
    case DefinitionKind::coproduct:
      break;
  }
  throw InvalidSpace("'" + name + "' is a coproduct, not a space");
}

}  // namespace seplat
