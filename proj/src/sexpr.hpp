#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace isokit::detail {

// Minimal s-expression reader shared by the term parser and the theory file
// loader. Atoms are bare identifier tokens; offsets are byte positions in
// the source text.
struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t offset = 0;
};

// Parses exactly one s-expression and requires the rest to be whitespace.
SExpr read_sexpr(std::string_view text);

// Parses a sequence of top-level s-expressions.
std::vector<SExpr> read_sexprs(std::string_view text);

}  // namespace isokit::detail
