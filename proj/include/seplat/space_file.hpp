#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seplat/orthospace.hpp"

namespace seplat {

// Line-oriented space descriptions:
//
//   # comment
//   space S            opens a block, followed by either
//   states a a* b b*     an explicit state list and
//   ortho a a*           one orthogonal pair per line,
//   mo 2               or an MO(n) shorthand.
//   mo 3               outside a block: an anonymous space named "mo3"
//   product P = S T
//   coproduct C = S T
//
// The last definition in the file is its subject.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class DefinitionKind { explicit_space, mo, product, coproduct };

struct Definition {
  std::string name;
  DefinitionKind kind = DefinitionKind::explicit_space;
  bool anonymous = false;
  std::vector<std::string> states;
  std::vector<std::pair<std::string, std::string>> ortho;
  std::size_t n = 0;
  std::string left;
  std::string right;
  std::size_t line = 0;  // not part of equality

  bool operator==(const Definition& o) const {
    return name == o.name && kind == o.kind && anonymous == o.anonymous && states == o.states && ortho == o.ortho &&
           n == o.n && left == o.left && right == o.right;
  }
};

struct SpaceFile {
  std::vector<Definition> definitions;

  const Definition& subject() const { return definitions.back(); }
  const Definition* find(const std::string& name) const;
  bool operator==(const SpaceFile&) const = default;
};

SpaceFile parse_space_file(std::string_view text);
std::string render_space_file(const SpaceFile& file);

/// Expands a space definition (explicit, mo or product) into an OrthoSpace.
/// Throws InvalidSpace for unknown names or coproduct definitions.
OrthoSpace build_space(const SpaceFile& file, const std::string& name);

}  // namespace seplat
