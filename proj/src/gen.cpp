#include "logdepth/gen.hpp"

namespace logdepth {

int32_t random_ast(AstArena& arena, Rng& rng, uint32_t lsyms, uint64_t var_pool) {
  if (lsyms <= 1) {
    uint64_t pick = rng.below(10);
    if (pick == 0) return arena.top();
    if (pick == 1) return arena.bot();
    return arena.var(rng.below(var_pool));
  }
  if (lsyms == 2 || rng.chance(1, 5)) {
    return arena.neg(random_ast(arena, rng, lsyms - 1, var_pool));
  }
  // binary: split lsyms - 1 symbols between the operands
  uint32_t left = 1 + uint32_t(rng.below(lsyms - 2));
  uint32_t right = lsyms - 1 - left;
  static constexpr uint8_t conns[] = {sym::and_, sym::or_,  sym::xor_, sym::imp,
                                      sym::iff,  sym::nand_, sym::nor_, sym::nimp};
  uint8_t conn = conns[rng.below(8)];
  int32_t a = random_ast(arena, rng, left, var_pool);
  int32_t b = random_ast(arena, rng, right, var_pool);
  return arena.bin(conn, a, b);
}

Valuation random_valuation(Rng& rng, uint64_t var_pool) {
  Valuation v;
  for (uint64_t i = 0; i < var_pool; ++i) v.assign[i] = rng.coin();
  return v;
}

Nat random_nat(Rng& rng, uint64_t max_bits) {
  uint64_t bits = rng.below(max_bits + 1);
  Nat n;
  for (uint64_t i = 0; i < bits; ++i)
    if (rng.coin()) n.set_bit(i, true);
  return n;
}

namespace {

TermPtr random_linear(Rng& rng, const std::vector<std::string>& ivars) {
  std::vector<std::pair<uint64_t, std::string>> terms;
  if (!ivars.empty() && rng.chance(3, 4))
    terms.push_back({1 + rng.below(2), ivars[rng.below(ivars.size())]});
  if (!ivars.empty() && rng.chance(1, 4))
    terms.push_back({1 + rng.below(2), ivars[rng.below(ivars.size())]});
  return tb::linear(terms, rng.below(6));
}

FormulaPtr random_strat_rec(Rng& rng, std::vector<std::string> words,
                            std::vector<std::string> idxs, unsigned depth,
                            const StratifiedGenOptions& opt, unsigned q_budget) {
  if (depth == 0 || rng.chance(1, 4)) {
    // atom
    switch (rng.below(8)) {
      case 0:
        return fb::bit_word(random_linear(rng, idxs), words[rng.below(words.size())]);
      case 1:
        return fb::bit_len(random_linear(rng, idxs),
                           {LenSym{words[rng.below(words.size())], nullptr}});
      case 2:
        return fb::bit_len(random_linear(rng, idxs),
                           {LenSym{words[rng.below(words.size())], nullptr},
                            LenSym{words[rng.below(words.size())], nullptr}});
      case 3:
        if (!idxs.empty())
          return fb::bit_idx(random_linear(rng, idxs), idxs[rng.below(idxs.size())]);
        return fb::constant(rng.coin());
      case 4:
        if (!idxs.empty())
          return fb::bit_idx_len(random_linear(rng, idxs), idxs[rng.below(idxs.size())]);
        return fb::constant(rng.coin());
      case 5:
        if (!idxs.empty())
          return fb::idx_lt(tb::var(idxs[rng.below(idxs.size())]),
                            LenSym{words[rng.below(words.size())], nullptr});
        return fb::constant(rng.coin());
      case 6:
        return fb::le(random_linear(rng, idxs), random_linear(rng, idxs));
      default:
        if (!opt.id_specs.empty() && !idxs.empty() && rng.coin()) {
          auto [name, arity] = opt.id_specs[rng.below(opt.id_specs.size())];
          std::vector<WordArg> args;
          for (size_t i = 0; i < arity; ++i)
            args.push_back(WordArg::of(words[rng.below(words.size())]));
          return fb::id_atom(name, std::move(args), tb::var(idxs[rng.below(idxs.size())]));
        }
        return fb::constant(rng.coin());
    }
  }
  switch (rng.below(q_budget ? 5 : 3)) {
    case 0:
      return fb::lnot(random_strat_rec(rng, words, idxs, depth - 1, opt, q_budget));
    case 1:
    case 2: {
      std::vector<FormulaPtr> kids;
      size_t n = 2 + rng.below(2);
      for (size_t i = 0; i < n; ++i)
        kids.push_back(random_strat_rec(rng, words, idxs, depth - 1, opt, q_budget));
      return rng.coin() ? fb::land(std::move(kids)) : fb::lor(std::move(kids));
    }
    case 3: {
      std::string v = "j" + std::to_string(idxs.size());
      PolyForm bound = rng.coin() ? PolyForm::length_of(words[rng.below(words.size())], 1,
                                                        rng.below(3))
                                  : PolyForm::constant(1 + rng.below(6));
      idxs.push_back(v);
      FormulaPtr body = random_strat_rec(rng, words, idxs, depth - 1, opt, q_budget - 1);
      idxs.pop_back();
      return fb::index_q(rng.coin(), v, std::make_shared<PolyForm>(std::move(bound)),
                         std::move(body));
    }
    default: {
      if (!opt.allow_length_q)
        return fb::lnot(random_strat_rec(rng, words, idxs, depth - 1, opt, q_budget));
      std::string y = "y" + std::to_string(words.size());
      LinLen bound;
      bound.constant = rng.below(3);
      if (rng.coin()) bound.terms.push_back({1, words[rng.below(words.size())]});
      words.push_back(y);
      FormulaPtr body = random_strat_rec(rng, words, idxs, depth - 1, opt, q_budget - 1);
      return fb::length_q(rng.coin(), y, std::move(bound), std::move(body));
    }
  }
}

}  // namespace

FormulaPtr random_stratified(Rng& rng, const StratifiedGenOptions& opt) {
  return random_strat_rec(rng, opt.word_vars, opt.index_vars, opt.depth, opt, 2);
}

FormulaPtr random_clock_formula(Rng& rng, const std::vector<std::string>& args,
                                const std::string& clock, unsigned depth) {
  StratifiedGenOptions opt;
  opt.word_vars = args;
  opt.index_vars = {clock};
  opt.allow_length_q = false;
  return random_strat_rec(rng, opt.word_vars, opt.index_vars, depth, opt, 1);
}

GatePtr random_gate(Rng& rng, uint32_t num_params, uint32_t num_slots, unsigned depth) {
  if (depth == 0 || rng.chance(1, 3)) {
    uint64_t pick = rng.below(num_params + num_slots + 1);
    if (pick < num_params) return gb::param(uint32_t(pick));
    if (pick < num_params + num_slots) return gb::slot(uint32_t(pick - num_params));
    return gb::constant(rng.coin());
  }
  switch (rng.below(3)) {
    case 0: return gb::gnot(random_gate(rng, num_params, num_slots, depth - 1));
    case 1:
      return gb::gand({random_gate(rng, num_params, num_slots, depth - 1),
                       random_gate(rng, num_params, num_slots, depth - 1)});
    default:
      return gb::gor({random_gate(rng, num_params, num_slots, depth - 1),
                      random_gate(rng, num_params, num_slots, depth - 1)});
  }
}

namespace {
void fill_base(Rng& rng, IdSpecBase& s, size_t arity, uint64_t ell_constant,
               uint32_t num_slots) {
  for (size_t i = 0; i < arity; ++i) s.args.push_back("x" + std::to_string(i + 1));
  s.clock_var = "p";
  if (ell_constant >= 3 && arity >= 1 && rng.chance(1, 3)) {
    // let the bound depend on ||x1||; callers keep argument sizes small
    s.ell.terms.push_back({1, s.args[0]});
    s.ell.constant = 1 + rng.below(ell_constant - 2);
  } else {
    s.ell.constant = 1 + rng.below(ell_constant);
  }
  s.terminal = random_clock_formula(rng, s.args, s.clock_var, 2);
  size_t nparams = rng.below(3);
  for (size_t i = 0; i < nparams; ++i)
    s.params.push_back(random_clock_formula(rng, s.args, s.clock_var, 2));
  s.gate = random_gate(rng, uint32_t(nparams), num_slots, 3);
}
}  // namespace

IdSpec random_idspec(Rng& rng, const std::string& name, size_t arity,
                     uint64_t ell_constant) {
  IdSpec s;
  s.name = name;
  fill_base(rng, s, arity, ell_constant, 2);
  return s;
}

QuadIdSpec random_quadspec(Rng& rng, const std::string& name, size_t arity,
                           uint64_t ell_constant) {
  QuadIdSpec s;
  s.name = name;
  fill_base(rng, s, arity, ell_constant, 4);
  return s;
}

SimIdSpec random_simspec(Rng& rng, const std::string& name, size_t arity,
                         uint64_t ell_constant, uint32_t K) {
  SimIdSpec s;
  s.name = name;
  s.lambda_var = "lam";
  s.offset_arity = K;
  fill_base(rng, s, arity, ell_constant, 2 * (K + 1));
  // give the offset a voice in the terminal: fold in a bit test on lambda
  s.terminal = fb::lor({s.terminal, fb::land({fb::bit_idx(tb::cnst(0), s.lambda_var),
                                              fb::bit_idx(tb::cnst(1), s.clock_var)})});
  return s;
}

}  // namespace logdepth
