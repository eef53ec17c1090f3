#pragma once

#include <map>
#include <optional>
#include <span>

#include "logdepth/base.hpp"
#include "logdepth/formula.hpp"

namespace logdepth {

// Boolean gate formula over parameter atoms d_k and child slots. Binary
// specs have slots {0, 1} (children p0, p1), quadtree specs slot 2i+j for
// p_ij, simultaneous specs slot 2j+i for A(lambda+j, pi).
struct Gate;
using GatePtr = std::shared_ptr<const Gate>;
struct Gate {
  enum class K { Const, Param, Slot, Not, And, Or };
  K k;
  bool bval = false;
  uint32_t idx = 0;
  std::vector<GatePtr> kids;
};

namespace gb {
GatePtr constant(bool b);
GatePtr param(uint32_t k);
GatePtr slot(uint32_t s);
GatePtr gnot(GatePtr g);
GatePtr gand(std::vector<GatePtr> kids);
GatePtr gor(std::vector<GatePtr> kids);
GatePtr giff(GatePtr a, GatePtr b);
}  // namespace gb

// atoms actually mentioned
void gate_atoms(const GatePtr& g, std::vector<uint32_t>& params, std::vector<uint32_t>& slots);

// Substitute constants for slots and formulas for params, folding constants;
// used by the DNF cofactoring of the reductions.
FormulaPtr gate_to_formula(const GatePtr& g, std::span<const int> slot_vals,
                           std::span<const FormulaPtr> param_formulas);

// A^{ell,B,D,I}: terminal B and parameters D are formulas over the word
// arguments and the clock as an index variable.
struct IdSpecBase {
  std::string name;
  std::vector<std::string> args;
  std::string clock_var = "p";
  LinLen ell;  // over the double lengths of args
  FormulaPtr terminal;
  std::vector<FormulaPtr> params;
  GatePtr gate;

  uint64_t ell_value(std::span<const Nat> arg_vals) const;
  Env make_env(std::span<const Nat> arg_vals) const;
};

struct IdSpec : IdSpecBase {};

// Lemma 2.3 shape: clock bound 2*ell+1 with odd |p|, children p_ij = 2(2p+i)+j.
struct QuadIdSpec : IdSpecBase {};

// Lemma 2.5 shape: extra offset argument lambda, children A(lambda+j, pi).
struct SimIdSpec : IdSpecBase {
  std::string lambda_var = "lam";
  uint32_t offset_arity = 0;  // K
};

struct Registry {
  std::map<std::string, IdSpec> specs;
  void add(IdSpec spec) { specs[spec.name] = std::move(spec); }
  const IdSpec& get(const std::string& name) const;
};

struct ClockRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

struct IdTraceEntry {
  Nat clock;
  std::vector<std::optional<bool>> params;
  bool value;
};

struct EvalIdOptions {
  bool memo = true;
  // semantic memo key; defaults to the clock itself
  std::function<Nat(const Nat&)> memo_key;
  std::vector<IdTraceEntry>* trace = nullptr;
  EvalLimits limits;
};

// (A.0)-(A.2) evaluation, top down with lazy gates: a gate whose value is
// fixed by the parameters alone does not recurse into its children.
bool eval_id(const IdSpec& spec, std::span<const Nat> arg_vals, const Nat& clock,
             const Registry& reg = {}, const EvalIdOptions& opts = {});

// Independent bottom-up table fill over all 2^ell - 1 valid clocks.
struct BottomUpResult {
  bool value;
  uint64_t clocks_visited;
};
BottomUpResult eval_id_bottom_up(const IdSpec& spec, std::span<const Nat> arg_vals,
                                 const Nat& clock, const Registry& reg = {},
                                 const EvalLimits& lim = {});

// Direct quadtree recursion (the reduce_quad oracle).
bool eval_quad(const QuadIdSpec& spec, std::span<const Nat> arg_vals, const Nat& clock,
               const Registry& reg = {}, const EvalLimits& lim = {});

// Direct simultaneous recursion (the reduce_sim oracle).
bool eval_sim(const SimIdSpec& spec, std::span<const Nat> arg_vals, const Nat& lambda,
              const Nat& clock, const Registry& reg = {}, const EvalLimits& lim = {});

// id_eval callback backed by a registry
IdEval make_id_eval(const Registry& reg, const EvalLimits& lim = {});

// s-expression io
Sexp gate_to_sexp(const GatePtr& g);
GatePtr gate_from_sexp(const Sexp& e);
Sexp idspec_to_sexp(const IdSpec& s);
IdSpec idspec_from_sexp(const Sexp& e);
Sexp quadspec_to_sexp(const QuadIdSpec& s);
QuadIdSpec quadspec_from_sexp(const Sexp& e);
Sexp simspec_to_sexp(const SimIdSpec& s);
SimIdSpec simspec_from_sexp(const Sexp& e);

}  // namespace logdepth
