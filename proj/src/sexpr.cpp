#include "logdepth/sexpr.hpp"

#include <stdexcept>

namespace logdepth {

const Sexp& Sexp::at(size_t i) const {
  if (i >= kids.size()) throw std::invalid_argument("sexpr: missing field " + std::to_string(i));
  return kids[i];
}

const std::string& Sexp::head() const {
  if (kids.empty() || !kids[0].is_atom())
    throw std::invalid_argument("sexpr: expected a tagged list");
  return kids[0].text;
}

uint64_t Sexp::as_u64() const {
  if (!is_atom()) throw std::invalid_argument("sexpr: expected a number");
  size_t pos = 0;
  uint64_t v = std::stoull(text, &pos);
  if (pos != text.size()) throw std::invalid_argument("sexpr: bad number " + text);
  return v;
}

std::string Sexp::print() const {
  if (is_atom()) return text;
  std::string out = "(";
  for (size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ' ';
    out += kids[i].print();
  }
  out += ')';
  return out;
}

namespace {

struct Reader {
  const std::string& s;
  size_t pos = 0;

  void skip() {
    while (pos < s.size()) {
      char c = s[pos];
      if (c == ';') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
  }

  Sexp read() {
    skip();
    if (pos >= s.size()) throw std::invalid_argument("sexpr: unexpected end of input");
    if (s[pos] == '(') {
      ++pos;
      Sexp out;
      while (true) {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("sexpr: unbalanced '('");
        if (s[pos] == ')') {
          ++pos;
          return out;
        }
        out.kids.push_back(read());
      }
    }
    if (s[pos] == ')') throw std::invalid_argument("sexpr: unexpected ')'");
    size_t start = pos;
    while (pos < s.size() && s[pos] != '(' && s[pos] != ')' && s[pos] != ';' &&
           !isspace((unsigned char)s[pos]))
      ++pos;
    return Sexp::atom(s.substr(start, pos - start));
  }
};

}  // namespace

Sexp parse_sexpr(const std::string& text) {
  Reader r{text};
  Sexp e = r.read();
  r.skip();
  if (r.pos != text.size()) throw std::invalid_argument("sexpr: trailing input");
  return e;
}

std::vector<Sexp> parse_sexprs(const std::string& text) {
  Reader r{text};
  std::vector<Sexp> out;
  while (true) {
    r.skip();
    if (r.pos >= text.size()) return out;
    out.push_back(r.read());
  }
}

}  // namespace logdepth
