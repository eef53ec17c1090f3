#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "logdepth/symbols.hpp"

namespace logdepth {

// Propositional formulas over Top/Bot, negation, the ten binary connectives
// and variables p_w. Nodes live in an arena and are referenced by index.
// The connectives rnimp and rimp never appear in nodes: decoding normalizes
// "X Y <-" to imp(Y, X), so every AST stores one canonical orientation.
struct AstNode {
  enum class K : uint8_t { Top, Bot, Var, Not, Bin };
  K kind;
  uint8_t conn = 0;     // symbol code for K::Bin
  int32_t a = -1;       // left / only child
  int32_t b = -1;       // right child
  uint64_t var = 0;     // for K::Var
  uint32_t lsyms = 1;   // logical symbols in the subtree
};

class AstArena {
public:
  int32_t top();
  int32_t bot();
  int32_t var(uint64_t w);
  int32_t neg(int32_t a);
  int32_t bin(uint8_t conn, int32_t a, int32_t b);

  const AstNode& operator[](int32_t i) const { return nodes_[size_t(i)]; }
  size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

private:
  int32_t push(AstNode n) {
    nodes_.push_back(n);
    return int32_t(nodes_.size() - 1);
  }
  std::vector<AstNode> nodes_;
};

struct Valuation {
  std::unordered_map<uint64_t, bool> assign;
  bool operator()(uint64_t var) const {
    auto it = assign.find(var);
    return it != assign.end() && it->second;
  }
};

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Infix text -> AST. Variables are written pN with a decimal index;
// connectives accept both ASCII (&, |, ^, ->, <-, <->, !&, !|, !>, <!, !, ~)
// and the unicode glyphs. T/true and F/false denote the constants.
int32_t parse_infix(const std::string& text, AstArena& arena);

std::string ast_to_string(const AstArena& arena, int32_t root);

bool naive_eval(const AstArena& arena, int32_t root, const Valuation& sigma);

// Postfix-Longer-Operands-First coding: at each binary connective the
// operand with more logical symbols is emitted first; on a tie the left
// operand keeps its place. Emitting the right operand first replaces the
// connective by its transpose.
SymbolWord to_plof(const AstArena& arena, int32_t root);

// Stack evaluation of a postfix word; throws on malformed input.
bool naive_eval(const SymbolWord& w, const Valuation& sigma);

// Postfix word -> AST (rnimp/rimp normalized away).
int32_t decode_plof(const SymbolWord& w, AstArena& arena);

bool ast_equal(const AstArena& aa, int32_t a, const AstArena& ab, int32_t b);

// The counting criterion: one more atomic symbol than binary connectives in
// total, strictly more in every proper prefix, and only formula symbols.
bool is_postfix_formula(const SymbolWord& w);

void collect_vars(const AstArena& arena, int32_t root, std::vector<uint64_t>& out);

}  // namespace logdepth
