#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace logdepth {

// Minimal s-expression reader/writer shared by the formula, idspec and
// axiom-file formats.
struct Sexp {
  // atom when kids is empty and text non-empty; list otherwise
  std::string text;
  std::vector<Sexp> kids;
  bool is_atom() const { return kids.empty() && !text.empty(); }
  bool is_list() const { return text.empty(); }

  static Sexp atom(std::string s) { return {std::move(s), {}}; }
  static Sexp num(uint64_t v) { return atom(std::to_string(v)); }
  static Sexp list(std::vector<Sexp> kids) { return {"", std::move(kids)}; }

  const Sexp& at(size_t i) const;
  const std::string& head() const;
  size_t size() const { return kids.size(); }
  uint64_t as_u64() const;

  std::string print() const;
};

Sexp parse_sexpr(const std::string& text);
std::vector<Sexp> parse_sexprs(const std::string& text);  // a whole file

}  // namespace logdepth
