#include "logdepth/ast.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <stdexcept>

namespace logdepth {

int32_t AstArena::top() { return push({AstNode::K::Top}); }
int32_t AstArena::bot() { return push({AstNode::K::Bot}); }

int32_t AstArena::var(uint64_t w) {
  AstNode n{AstNode::K::Var};
  n.var = w;
  return push(n);
}

int32_t AstArena::neg(int32_t a) {
  AstNode n{AstNode::K::Not};
  n.a = a;
  n.lsyms = nodes_[size_t(a)].lsyms + 1;
  return push(n);
}

int32_t AstArena::bin(uint8_t conn, int32_t a, int32_t b) {
  if (!sym_is_binary(conn)) throw std::invalid_argument("bin: not a binary connective");
  if (conn == sym::rnimp || conn == sym::rimp) {
    conn = transpose_binary(conn);
    std::swap(a, b);
  }
  AstNode n{AstNode::K::Bin};
  n.conn = conn;
  n.a = a;
  n.b = b;
  n.lsyms = nodes_[size_t(a)].lsyms + nodes_[size_t(b)].lsyms + 1;
  return push(n);
}

// ---------------------------------------------------------------- parsing

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
  }
  bool eat(const char* tok) {
    skip_ws();
    size_t n = strlen(tok);
    if (s.compare(pos, n, tok) == 0) {
      pos += n;
      return true;
    }
    return false;
  }
  bool peek(const char* tok) {
    skip_ws();
    return s.compare(pos, strlen(tok), tok) == 0;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
};

struct Parser {
  Lexer lx;
  AstArena& arena;

  // precedence climbing; iff < imp-family < or-family < and-family < not
  int32_t parse_iff() {
    int32_t a = parse_imp();
    while (true) {
      if (lx.eat("<->") || lx.eat("↔"))
        a = arena.bin(sym::iff, a, parse_imp());
      else
        return a;
    }
  }
  int32_t parse_imp() {  // right associative
    int32_t a = parse_or();
    if (lx.eat("->") || lx.eat("→")) return arena.bin(sym::imp, a, parse_imp());
    if (lx.peek("<->")) return a;
    if (lx.eat("<-") || lx.eat("←")) return arena.bin(sym::rimp, a, parse_imp());
    if (lx.eat("<!") || lx.eat("↚"))  // must come before nothing else
      return arena.bin(sym::rnimp, a, parse_imp());
    if (lx.eat("!>") || lx.eat("↛")) return arena.bin(sym::nimp, a, parse_imp());
    return a;
  }
  int32_t parse_or() {
    int32_t a = parse_and();
    while (true) {
      if (lx.eat("||") || lx.eat("|") || lx.eat("∨"))
        a = arena.bin(sym::or_, a, parse_and());
      else if (lx.eat("^") || lx.eat("⊕"))
        a = arena.bin(sym::xor_, a, parse_and());
      else
        return a;
    }
  }
  int32_t parse_and() {
    int32_t a = parse_unary();
    while (true) {
      if (lx.eat("&&")) a = arena.bin(sym::and_, a, parse_unary());
      else if (lx.eat("!&") || lx.eat("↑"))
        a = arena.bin(sym::nand_, a, parse_unary());
      else if (lx.eat("!|") || lx.eat("↓"))
        a = arena.bin(sym::nor_, a, parse_unary());
      else if (lx.eat("&") || lx.eat("∧"))
        a = arena.bin(sym::and_, a, parse_unary());
      else
        return a;
    }
  }
  int32_t parse_unary() {
    lx.skip_ws();
    if (lx.peek("!&") || lx.peek("!|") || lx.peek("!>"))
      throw ParseError("expected operand", lx.pos);
    if (lx.eat("!") || lx.eat("~") || lx.eat("¬")) return arena.neg(parse_unary());
    return parse_atom();
  }
  int32_t parse_atom() {
    lx.skip_ws();
    if (lx.pos >= lx.s.size()) throw ParseError("unexpected end of input", lx.pos);
    if (lx.eat("(")) {
      int32_t a = parse_iff();
      if (!lx.eat(")")) throw ParseError("expected ')'", lx.pos);
      return a;
    }
    if (lx.eat("⊤") || lx.eat("true") || lx.eat("T")) return arena.top();
    if (lx.eat("⊥") || lx.eat("false") || lx.eat("F")) return arena.bot();
    if (lx.s[lx.pos] == 'p') {
      ++lx.pos;
      size_t start = lx.pos;
      uint64_t w = 0;
      while (lx.pos < lx.s.size() && isdigit((unsigned char)lx.s[lx.pos])) {
        uint64_t d = uint64_t(lx.s[lx.pos] - '0');
        if (w > (~uint64_t{0} - d) / 10) throw ParseError("variable index too large", start);
        w = 10 * w + d;
        ++lx.pos;
      }
      if (lx.pos == start) throw ParseError("expected variable index after 'p'", lx.pos);
      return arena.var(w);
    }
    throw ParseError("unexpected token", lx.pos);
  }
};

}  // namespace

int32_t parse_infix(const std::string& text, AstArena& arena) {
  Parser p{Lexer{text}, arena};
  int32_t root = p.parse_iff();
  if (!p.lx.done()) throw ParseError("trailing input", p.lx.pos);
  return root;
}

std::string ast_to_string(const AstArena& arena, int32_t root) {
  const AstNode& n = arena[root];
  switch (n.kind) {
    case AstNode::K::Top: return "T";
    case AstNode::K::Bot: return "F";
    case AstNode::K::Var: return "p" + std::to_string(n.var);
    case AstNode::K::Not: return "!" + ast_to_string(arena, n.a);
    case AstNode::K::Bin:
      return "(" + ast_to_string(arena, n.a) + " " + sym_glyph(n.conn) + " " +
             ast_to_string(arena, n.b) + ")";
  }
  return "?";
}

bool naive_eval(const AstArena& arena, int32_t root, const Valuation& sigma) {
  // post-order with explicit stack; second visit combines children
  std::vector<std::pair<int32_t, bool>> stack{{root, false}};
  std::vector<bool> vals;
  while (!stack.empty()) {
    auto [idx, expanded] = stack.back();
    stack.pop_back();
    const AstNode& n = arena[idx];
    if (!expanded) {
      switch (n.kind) {
        case AstNode::K::Top: vals.push_back(true); break;
        case AstNode::K::Bot: vals.push_back(false); break;
        case AstNode::K::Var: vals.push_back(sigma(n.var)); break;
        case AstNode::K::Not:
          stack.push_back({idx, true});
          stack.push_back({n.a, false});
          break;
        case AstNode::K::Bin:
          stack.push_back({idx, true});
          stack.push_back({n.b, false});
          stack.push_back({n.a, false});
          break;
      }
    } else if (n.kind == AstNode::K::Not) {
      vals.back() = !vals.back();
    } else {
      bool b = vals.back();
      vals.pop_back();
      bool a = vals.back();
      vals.pop_back();
      vals.push_back(apply_binary(n.conn, a, b));
    }
  }
  return vals.back();
}

namespace {

void emit_var(std::vector<uint8_t>& out, uint64_t w) {
  out.push_back(sym::var_p);
  uint64_t bits = w ? bit_length_u64(w) : 1;
  for (uint64_t i = bits; i-- > 0;)
    out.push_back(((w >> i) & 1) ? sym::digit1 : sym::digit0);
}

}  // namespace

SymbolWord to_plof(const AstArena& arena, int32_t root) {
  SymbolWord w;
  struct Item {
    int32_t idx;
    uint8_t emit_conn;  // 0 = expand, else emit this code
  };
  std::vector<Item> stack{{root, 0}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.emit_conn) {
      w.syms.push_back(it.emit_conn);
      continue;
    }
    const AstNode& n = arena[it.idx];
    switch (n.kind) {
      case AstNode::K::Top: w.syms.push_back(sym::top); break;
      case AstNode::K::Bot: w.syms.push_back(sym::bot); break;
      case AstNode::K::Var: emit_var(w.syms, n.var); break;
      case AstNode::K::Not:
        stack.push_back({it.idx, sym::neg});
        stack.push_back({n.a, 0});
        break;
      case AstNode::K::Bin: {
        bool swap = arena[n.b].lsyms > arena[n.a].lsyms;
        uint8_t conn = swap ? transpose_binary(n.conn) : n.conn;
        int32_t first = swap ? n.b : n.a;
        int32_t second = swap ? n.a : n.b;
        stack.push_back({it.idx, conn});
        stack.push_back({second, 0});
        stack.push_back({first, 0});
        break;
      }
    }
  }
  return w;
}

bool naive_eval(const SymbolWord& w, const Valuation& sigma) {
  std::vector<bool> stack;
  size_t i = 0;
  const size_t n = w.syms.size();
  while (i < n) {
    uint8_t c = w.syms[i];
    if (c == sym::var_p) {
      uint64_t v = 0;
      size_t j = i + 1;
      while (j < n && sym_is_digit(w.syms[j])) {
        if (j - i > 64) throw std::invalid_argument("variable index too long");
        v = (v << 1) | uint64_t(w.syms[j] == sym::digit1);
        ++j;
      }
      stack.push_back(sigma(v));
      i = j;
      continue;
    }
    ++i;
    if (c == sym::top) stack.push_back(true);
    else if (c == sym::bot) stack.push_back(false);
    else if (c == sym::neg) {
      if (stack.empty()) throw std::invalid_argument("naive_eval: malformed postfix");
      stack.back() = !stack.back();
    } else if (sym_is_binary(c)) {
      if (stack.size() < 2) throw std::invalid_argument("naive_eval: malformed postfix");
      bool b = stack.back();
      stack.pop_back();
      bool a = stack.back();
      stack.pop_back();
      stack.push_back(apply_binary(c, a, b));
    } else {
      throw std::invalid_argument("naive_eval: non-formula symbol");
    }
  }
  if (stack.size() != 1) throw std::invalid_argument("naive_eval: malformed postfix");
  return stack.back();
}

int32_t decode_plof(const SymbolWord& w, AstArena& arena) {
  std::vector<int32_t> stack;
  size_t i = 0;
  const size_t n = w.syms.size();
  while (i < n) {
    uint8_t c = w.syms[i];
    if (c == sym::var_p) {
      uint64_t v = 0;
      size_t j = i + 1;
      while (j < n && sym_is_digit(w.syms[j])) {
        if (j - i > 64) throw std::invalid_argument("variable index too long");
        v = (v << 1) | uint64_t(w.syms[j] == sym::digit1);
        ++j;
      }
      stack.push_back(arena.var(v));
      i = j;
      continue;
    }
    ++i;
    if (c == sym::top) stack.push_back(arena.top());
    else if (c == sym::bot) stack.push_back(arena.bot());
    else if (c == sym::neg) {
      if (stack.empty()) throw std::invalid_argument("decode_plof: malformed postfix");
      stack.back() = arena.neg(stack.back());
    } else if (sym_is_binary(c)) {
      if (stack.size() < 2) throw std::invalid_argument("decode_plof: malformed postfix");
      int32_t b = stack.back();
      stack.pop_back();
      int32_t a = stack.back();
      stack.pop_back();
      stack.push_back(arena.bin(c, a, b));
    } else {
      throw std::invalid_argument("decode_plof: non-formula symbol");
    }
  }
  if (stack.size() != 1) throw std::invalid_argument("decode_plof: malformed postfix");
  return stack.back();
}

bool ast_equal(const AstArena& aa, int32_t a, const AstArena& ab, int32_t b) {
  const AstNode &na = aa[a], &nb = ab[b];
  if (na.kind != nb.kind || na.lsyms != nb.lsyms) return false;
  switch (na.kind) {
    case AstNode::K::Top:
    case AstNode::K::Bot: return true;
    case AstNode::K::Var: return na.var == nb.var;
    case AstNode::K::Not: return ast_equal(aa, na.a, ab, nb.a);
    case AstNode::K::Bin:
      return na.conn == nb.conn && ast_equal(aa, na.a, ab, nb.a) &&
             ast_equal(aa, na.b, ab, nb.b);
  }
  return false;
}

bool is_postfix_formula(const SymbolWord& w) {
  uint64_t atoms = 0, binops = 0, lsyms = 0;
  size_t i = 0;
  const size_t n = w.syms.size();
  // count logical symbols first so the prefix test knows the last index
  for (uint8_t c : w.syms)
    if (!sym_is_digit(c)) ++lsyms;
  if (lsyms == 0) return false;
  uint64_t seen = 0;
  bool prev_allows_digit = false;
  while (i < n) {
    uint8_t c = w.syms[i++];
    if (sym_is_digit(c)) {
      if (!prev_allows_digit) return false;  // digits only trail a variable
      continue;
    }
    prev_allows_digit = (c == sym::var_p);
    ++seen;
    if (sym_is_atomic(c)) ++atoms;
    else if (sym_is_binary(c)) ++binops;
    else if (c != sym::neg) return false;  // parens / comma never occur
    if (seen == 1 && !sym_is_atomic(c)) return false;
    if (seen < lsyms && atoms <= binops) return false;
  }
  return atoms == 1 + binops;
}

void collect_vars(const AstArena& arena, int32_t root, std::vector<uint64_t>& out) {
  std::vector<int32_t> stack{root};
  while (!stack.empty()) {
    const AstNode& n = arena[size_t(stack.back())];
    stack.pop_back();
    if (n.kind == AstNode::K::Var) out.push_back(n.var);
    if (n.a >= 0) stack.push_back(n.a);
    if (n.b >= 0) stack.push_back(n.b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace logdepth
