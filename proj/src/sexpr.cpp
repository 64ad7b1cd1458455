#include "sexpr.hpp"

#include "isokit/errors.hpp"

namespace isokit::detail {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_atom_char(char c) {
  return !is_space(c) && c != '(' && c != ')' && c != ';';
}

struct Reader {
  std::string_view text;
  std::size_t pos = 0;

  void skip_blank() {
    while (pos < text.size()) {
      if (is_space(text[pos])) {
        ++pos;
      } else if (text[pos] == ';') {  // line comment
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip_blank();
    if (pos >= text.size()) {
      throw ParseError("unexpected end of input", pos);
    }
    if (text[pos] == ')') {
      throw ParseError("unexpected ')'", pos);
    }
    SExpr e;
    e.offset = pos;
    if (text[pos] == '(') {
      ++pos;
      while (true) {
        skip_blank();
        if (pos >= text.size()) {
          throw ParseError("missing ')'", pos);
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    e.is_atom = true;
    std::size_t start = pos;
    while (pos < text.size() && is_atom_char(text[pos])) ++pos;
    e.atom = std::string(text.substr(start, pos - start));
    return e;
  }
};

}  // namespace

SExpr read_sexpr(std::string_view text) {
  Reader r{text};
  SExpr e = r.read();
  r.skip_blank();
  if (r.pos != text.size()) {
    throw ParseError("trailing input after expression", r.pos);
  }
  return e;
}

std::vector<SExpr> read_sexprs(std::string_view text) {
  Reader r{text};
  std::vector<SExpr> out;
  while (true) {
    r.skip_blank();
    if (r.pos >= text.size()) break;
    out.push_back(r.read());
  }
  return out;
}

}  // namespace isokit::detail
