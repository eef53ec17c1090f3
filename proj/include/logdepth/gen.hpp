#pragma once

#include "logdepth/ast.hpp"
#include "logdepth/idspec.hpp"
#include "logdepth/rng.hpp"

namespace logdepth {

// Random formula with exactly `lsyms` logical symbols over variables
// p_0 .. p_{var_pool-1}.
int32_t random_ast(AstArena& arena, Rng& rng, uint32_t lsyms, uint64_t var_pool);

Valuation random_valuation(Rng& rng, uint64_t var_pool);

Nat random_nat(Rng& rng, uint64_t max_bits);

struct StratifiedGenOptions {
  std::vector<std::string> word_vars = {"x1", "x2"};
  std::vector<std::string> index_vars;
  unsigned depth = 3;
  // id atoms drawn from these spec names (same arity as word_vars prefix)
  std::vector<std::pair<std::string, size_t>> id_specs;
  bool allow_length_q = true;
};

// A formula in the strict stratified grammar of Definitions 5.1/5.4.
FormulaPtr random_stratified(Rng& rng, const StratifiedGenOptions& opt);

// Stratified formula over (args; clock) usable as an IdSpec terminal or
// gate parameter: atoms look at bits of the arguments and of the clock.
FormulaPtr random_clock_formula(Rng& rng, const std::vector<std::string>& args,
                                const std::string& clock, unsigned depth);

GatePtr random_gate(Rng& rng, uint32_t num_params, uint32_t num_slots, unsigned depth);

IdSpec random_idspec(Rng& rng, const std::string& name, size_t arity,
                     uint64_t ell_constant);
QuadIdSpec random_quadspec(Rng& rng, const std::string& name, size_t arity,
                           uint64_t ell_constant);
SimIdSpec random_simspec(Rng& rng, const std::string& name, size_t arity,
                         uint64_t ell_constant, uint32_t K);

}  // namespace logdepth
