#include "logdepth/idspec.hpp"

#include <stdexcept>

namespace logdepth {

namespace gb {

static GatePtr mk(Gate g) { return std::make_shared<Gate>(std::move(g)); }

GatePtr constant(bool b) {
  Gate g{Gate::K::Const};
  g.bval = b;
  return mk(std::move(g));
}
GatePtr param(uint32_t k) {
  Gate g{Gate::K::Param};
  g.idx = k;
  return mk(std::move(g));
}
GatePtr slot(uint32_t s) {
  Gate g{Gate::K::Slot};
  g.idx = s;
  return mk(std::move(g));
}
GatePtr gnot(GatePtr a) {
  Gate g{Gate::K::Not};
  g.kids = {std::move(a)};
  return mk(std::move(g));
}
GatePtr gand(std::vector<GatePtr> kids) {
  Gate g{Gate::K::And};
  g.kids = std::move(kids);
  return mk(std::move(g));
}
GatePtr gor(std::vector<GatePtr> kids) {
  Gate g{Gate::K::Or};
  g.kids = std::move(kids);
  return mk(std::move(g));
}
GatePtr giff(GatePtr a, GatePtr b) {
  return gor({gand({a, b}), gand({gnot(a), gnot(b)})});
}

}  // namespace gb

void gate_atoms(const GatePtr& g, std::vector<uint32_t>& params,
                std::vector<uint32_t>& slots) {
  if (g->k == Gate::K::Param)
    params.push_back(g->idx);
  else if (g->k == Gate::K::Slot)
    slots.push_back(g->idx);
  for (const auto& kid : g->kids) gate_atoms(kid, params, slots);
}

FormulaPtr gate_to_formula(const GatePtr& g, std::span<const int> slot_vals,
                           std::span<const FormulaPtr> param_formulas) {
  switch (g->k) {
    case Gate::K::Const: return fb::constant(g->bval);
    case Gate::K::Param: return param_formulas[g->idx];
    case Gate::K::Slot: return fb::constant(slot_vals[g->idx] != 0);
    case Gate::K::Not: {
      FormulaPtr a = gate_to_formula(g->kids[0], slot_vals, param_formulas);
      if (a->k == Formula::K::Const) return fb::constant(!a->bval);
      return fb::lnot(std::move(a));
    }
    case Gate::K::And:
    case Gate::K::Or: {
      const bool is_and = g->k == Gate::K::And;
      std::vector<FormulaPtr> kids;
      for (const auto& kid : g->kids) {
        FormulaPtr f = gate_to_formula(kid, slot_vals, param_formulas);
        if (f->k == Formula::K::Const) {
          if (f->bval != is_and) return fb::constant(!is_and);  // absorbing
          continue;                                             // neutral
        }
        kids.push_back(std::move(f));
      }
      if (kids.empty()) return fb::constant(is_and);
      if (kids.size() == 1) return kids[0];
      return is_and ? fb::land(std::move(kids)) : fb::lor(std::move(kids));
    }
  }
  throw std::logic_error("gate_to_formula: unknown kind");
}

uint64_t IdSpecBase::ell_value(std::span<const Nat> arg_vals) const {
  uint64_t acc = ell.constant;
  for (const auto& [c, x] : ell.terms) {
    for (size_t i = 0; i < args.size(); ++i)
      if (args[i] == x) acc += c * len2(arg_vals[i]);
  }
  return acc;
}

Env IdSpecBase::make_env(std::span<const Nat> arg_vals) const {
  if (arg_vals.size() != args.size())
    throw std::invalid_argument("id spec " + name + ": arity mismatch");
  Env env;
  for (size_t i = 0; i < args.size(); ++i) env.words[args[i]] = arg_vals[i];
  return env;
}

const IdSpec& Registry::get(const std::string& name) const {
  auto it = specs.find(name);
  if (it == specs.end()) throw std::invalid_argument("unknown id spec " + name);
  return it->second;
}

namespace {

// gate evaluation with on-demand parameters and optional slot values
struct GateEval {
  const std::function<bool(uint32_t)>& get_param;
  std::span<const std::optional<bool>> slots;
  std::vector<std::optional<bool>>* param_cache;

  std::optional<bool> eval(const Gate& g) {
    switch (g.k) {
      case Gate::K::Const: return g.bval;
      case Gate::K::Param: {
        if (param_cache) {
          auto& c = (*param_cache)[g.idx];
          if (!c) c = get_param(g.idx);
          return *c;
        }
        return get_param(g.idx);
      }
      case Gate::K::Slot: return slots[g.idx];
      case Gate::K::Not: {
        auto v = eval(*g.kids[0]);
        if (!v) return std::nullopt;
        return !*v;
      }
      case Gate::K::And:
      case Gate::K::Or: {
        const bool is_and = g.k == Gate::K::And;
        bool unknown = false;
        for (const auto& kid : g.kids) {
          auto v = eval(*kid);
          if (!v)
            unknown = true;
          else if (*v != is_and)
            return !is_and;  // absorbing element decides
        }
        if (unknown) return std::nullopt;
        return is_and;
      }
    }
    throw std::logic_error("gate eval: unknown kind");
  }
};

struct NatKey {
  std::vector<uint64_t> limbs;
  bool operator<(const NatKey& o) const { return limbs < o.limbs; }
};
NatKey key_of(const Nat& n) { return {n.limbs()}; }

struct IdEvaluator {
  const IdSpec& spec;
  Env env;  // arg bindings; clock var rebound per node
  uint64_t ell;
  const Registry& reg;
  const EvalIdOptions& opts;
  IdEval nested;
  std::map<NatKey, bool> memo;

  bool eval(const Nat& clock) {
    uint64_t plen = clock.length();
    if (plen == 0 || plen > ell)
      throw ClockRangeError("eval_id: clock out of range for " + spec.name);
    std::optional<NatKey> mkey;
    if (opts.memo) {
      mkey = key_of(opts.memo_key ? opts.memo_key(clock) : clock);
      auto it = memo.find(*mkey);
      if (it != memo.end()) return it->second;
    }
    env.indices[spec.clock_var] = clock;
    bool value;
    std::vector<std::optional<bool>> param_cache(spec.params.size());
    if (plen == ell) {
      value = eval_sb0(spec.terminal, env, nested, opts.limits);
    } else {
      std::function<bool(uint32_t)> get_param = [&](uint32_t k) {
        env.indices[spec.clock_var] = clock;
        return eval_sb0(spec.params[k], env, nested, opts.limits);
      };
      std::optional<bool> slots_arr[2];
      GateEval ge{get_param, std::span<const std::optional<bool>>(slots_arr, 2),
                  &param_cache};
      auto r = ge.eval(*spec.gate);
      for (int child = 0; child < 2 && !r; ++child) {
        slots_arr[child] = eval(clock_child(clock, child));
        r = ge.eval(*spec.gate);
      }
      if (!r) throw std::logic_error("eval_id: gate undetermined after both children");
      value = *r;
    }
    if (opts.trace && plen < ell) opts.trace->push_back({clock, param_cache, value});
    if (mkey) memo[*mkey] = value;
    return value;
  }
};

}  // namespace

IdEval make_id_eval(const Registry& reg, const EvalLimits& lim) {
  return [&reg, lim](const std::string& name, const std::vector<Nat>& args,
                     const Nat& clock) {
    EvalIdOptions opts;
    opts.limits = lim;
    return eval_id(reg.get(name), args, clock, reg, opts);
  };
}

bool eval_id(const IdSpec& spec, std::span<const Nat> arg_vals, const Nat& clock,
             const Registry& reg, const EvalIdOptions& opts) {
  IdEvaluator ev{spec, spec.make_env(arg_vals), spec.ell_value(arg_vals), reg, opts,
                 make_id_eval(reg, opts.limits)};
  return ev.eval(clock);
}

BottomUpResult eval_id_bottom_up(const IdSpec& spec, std::span<const Nat> arg_vals,
                                 const Nat& clock, const Registry& reg,
                                 const EvalLimits& lim) {
  uint64_t ell = spec.ell_value(arg_vals);
  uint64_t plen = clock.length();
  if (plen == 0 || plen > ell)
    throw ClockRangeError("eval_id_bottom_up: clock out of range");
  if (ell > 24) throw std::length_error("eval_id_bottom_up: table too large");
  Env env = spec.make_env(arg_vals);
  IdEval nested = make_id_eval(reg, lim);
  std::vector<uint8_t> table(uint64_t{1} << ell, 0);
  uint64_t visited = 0;
  for (uint64_t p = (uint64_t{1} << ell) - 1; p >= 1; --p) {
    env.indices[spec.clock_var] = Nat(p);
    bool v;
    if (bit_length_u64(p) == ell) {
      v = eval_sb0(spec.terminal, env, nested, lim);
    } else {
      std::function<bool(uint32_t)> get_param = [&](uint32_t k) {
        env.indices[spec.clock_var] = Nat(p);
        return eval_sb0(spec.params[k], env, nested, lim);
      };
      std::optional<bool> slots_arr[2] = {table[2 * p] != 0, table[2 * p + 1] != 0};
      GateEval ge{get_param, std::span<const std::optional<bool>>(slots_arr, 2), nullptr};
      auto r = ge.eval(*spec.gate);
      if (!r) throw std::logic_error("bottom-up gate undetermined");
      v = *r;
    }
    table[p] = v;
    ++visited;
  }
  return {table[clock.to_u64()] != 0, visited};
}

bool eval_quad(const QuadIdSpec& spec, std::span<const Nat> arg_vals, const Nat& clock,
               const Registry& reg, const EvalLimits& lim) {
  uint64_t ell = spec.ell_value(arg_vals);
  uint64_t bound = 2 * ell + 1;
  Env env = spec.make_env(arg_vals);
  IdEval nested = make_id_eval(reg, lim);
  std::map<NatKey, bool> memo;
  std::function<bool(const Nat&)> go = [&](const Nat& p) -> bool {
    uint64_t plen = p.length();
    if (plen == 0 || plen > bound || plen % 2 == 0)
      throw ClockRangeError("eval_quad: clock out of range");
    NatKey k = key_of(p);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    env.indices[spec.clock_var] = p;
    bool v;
    if (plen == bound) {
      v = eval_sb0(spec.terminal, env, nested, lim);
    } else {
      std::function<bool(uint32_t)> get_param = [&](uint32_t kk) {
        env.indices[spec.clock_var] = p;
        return eval_sb0(spec.params[kk], env, nested, lim);
      };
      std::optional<bool> slots_arr[4];
      GateEval ge{get_param, std::span<const std::optional<bool>>(slots_arr, 4), nullptr};
      auto r = ge.eval(*spec.gate);
      for (uint32_t s = 0; s < 4 && !r; ++s) {
        // slot 2i+j -> clock p*4 + 2i + j
        uint32_t i = s >> 1, j = s & 1;
        Nat child = p.shl(2);
        if (i) child.set_bit(1, true);
        if (j) child.set_bit(0, true);
        slots_arr[s] = go(child);
        r = ge.eval(*spec.gate);
      }
      if (!r) throw std::logic_error("eval_quad: gate undetermined");
      v = *r;
    }
    memo[k] = v;
    return v;
  };
  return go(clock);
}

bool eval_sim(const SimIdSpec& spec, std::span<const Nat> arg_vals, const Nat& lambda,
              const Nat& clock, const Registry& reg, const EvalLimits& lim) {
  uint64_t ell = spec.ell_value(arg_vals);
  Env env = spec.make_env(arg_vals);
  IdEval nested = make_id_eval(reg, lim);
  std::map<std::pair<NatKey, NatKey>, bool> memo;
  std::function<bool(const Nat&, const Nat&)> go = [&](const Nat& lam,
                                                       const Nat& p) -> bool {
    uint64_t plen = p.length();
    if (plen == 0 || plen > ell) throw ClockRangeError("eval_sim: clock out of range");
    auto k = std::make_pair(key_of(lam), key_of(p));
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    env.indices[spec.clock_var] = p;
    env.indices[spec.lambda_var] = lam;
    bool v;
    if (plen == ell) {
      v = eval_sb0(spec.terminal, env, nested, lim);
    } else {
      std::function<bool(uint32_t)> get_param = [&](uint32_t kk) {
        env.indices[spec.clock_var] = p;
        env.indices[spec.lambda_var] = lam;
        return eval_sb0(spec.params[kk], env, nested, lim);
      };
      std::vector<std::optional<bool>> slots_arr(2 * (spec.offset_arity + 1));
      GateEval ge{get_param,
                  std::span<const std::optional<bool>>(slots_arr.data(), slots_arr.size()),
                  nullptr};
      auto r = ge.eval(*spec.gate);
      for (uint32_t s = 0; s < slots_arr.size() && !r; ++s) {
        uint32_t j = s >> 1, i = s & 1;  // slot 2j+i -> A(lambda+j, pi)
        slots_arr[s] = go(lam + Nat(j), clock_child(p, int(i)));
        r = ge.eval(*spec.gate);
      }
      if (!r) throw std::logic_error("eval_sim: gate undetermined");
      v = *r;
    }
    memo[k] = v;
    return v;
  };
  return go(lambda, clock);
}

// ------------------------------------------------------------------- io

Sexp gate_to_sexp(const GatePtr& g) {
  switch (g->k) {
    case Gate::K::Const: return Sexp::list({Sexp::atom(g->bval ? "t" : "f")});
    case Gate::K::Param: return Sexp::list({Sexp::atom("d"), Sexp::num(g->idx)});
    case Gate::K::Slot: return Sexp::list({Sexp::atom("s"), Sexp::num(g->idx)});
    case Gate::K::Not: return Sexp::list({Sexp::atom("not"), gate_to_sexp(g->kids[0])});
    case Gate::K::And:
    case Gate::K::Or: {
      Sexp out = Sexp::list({Sexp::atom(g->k == Gate::K::And ? "and" : "or")});
      for (const auto& kid : g->kids) out.kids.push_back(gate_to_sexp(kid));
      return out;
    }
  }
  throw std::logic_error("gate_to_sexp");
}

GatePtr gate_from_sexp(const Sexp& e) {
  const std::string& h = e.head();
  if (h == "t") return gb::constant(true);
  if (h == "f") return gb::constant(false);
  if (h == "d") return gb::param(uint32_t(e.at(1).as_u64()));
  if (h == "s") return gb::slot(uint32_t(e.at(1).as_u64()));
  if (h == "not") return gb::gnot(gate_from_sexp(e.at(1)));
  if (h == "and" || h == "or") {
    std::vector<GatePtr> kids;
    for (size_t i = 1; i < e.size(); ++i) kids.push_back(gate_from_sexp(e.at(i)));
    return h == "and" ? gb::gand(std::move(kids)) : gb::gor(std::move(kids));
  }
  throw std::invalid_argument("unknown gate head: " + h);
}

namespace {

Sexp linlen_sx(const LinLen& l) {
  Sexp out = Sexp::list({Sexp::atom("lin"), Sexp::num(l.constant)});
  for (const auto& [c, x] : l.terms)
    out.kids.push_back(Sexp::list({Sexp::num(c), Sexp::atom(x)}));
  return out;
}

LinLen linlen_sx(const Sexp& e) {
  LinLen l;
  l.constant = e.at(1).as_u64();
  for (size_t i = 2; i < e.size(); ++i)
    l.terms.push_back({e.at(i).at(0).as_u64(), e.at(i).at(1).text});
  return l;
}

Sexp base_to_sexp(const char* tag, const IdSpecBase& s) {
  Sexp args = Sexp::list({});
  for (const auto& a : s.args) args.kids.push_back(Sexp::atom(a));
  Sexp params = Sexp::list({Sexp::atom("params")});
  for (const auto& p : s.params) params.kids.push_back(formula_to_sexp(p));
  return Sexp::list({Sexp::atom(tag), Sexp::list({Sexp::atom("name"), Sexp::atom(s.name)}),
                     Sexp::list({Sexp::atom("args"), std::move(args)}),
                     Sexp::list({Sexp::atom("clock"), Sexp::atom(s.clock_var)}),
                     Sexp::list({Sexp::atom("ell"), linlen_sx(s.ell)}),
                     Sexp::list({Sexp::atom("terminal"), formula_to_sexp(s.terminal)}),
                     std::move(params),
                     Sexp::list({Sexp::atom("gate"), gate_to_sexp(s.gate)})});
}

void base_from_sexp(const Sexp& e, IdSpecBase& s) {
  for (size_t i = 1; i < e.size(); ++i) {
    const Sexp& field = e.at(i);
    const std::string& h = field.head();
    if (h == "name") s.name = field.at(1).text;
    else if (h == "args") {
      for (const auto& a : field.at(1).kids) s.args.push_back(a.text);
    } else if (h == "clock") s.clock_var = field.at(1).text;
    else if (h == "ell") s.ell = linlen_sx(field.at(1));
    else if (h == "terminal") s.terminal = formula_from_sexp(field.at(1));
    else if (h == "params") {
      for (size_t j = 1; j < field.size(); ++j)
        s.params.push_back(formula_from_sexp(field.at(j)));
    } else if (h == "gate") s.gate = gate_from_sexp(field.at(1));
  }
  if (!s.terminal || !s.gate) throw std::invalid_argument("id spec missing fields");
}

}  // namespace

Sexp idspec_to_sexp(const IdSpec& s) { return base_to_sexp("idspec", s); }
IdSpec idspec_from_sexp(const Sexp& e) {
  if (e.head() != "idspec") throw std::invalid_argument("expected (idspec ...)");
  IdSpec s;
  base_from_sexp(e, s);
  return s;
}

Sexp quadspec_to_sexp(const QuadIdSpec& s) { return base_to_sexp("quadspec", s); }
QuadIdSpec quadspec_from_sexp(const Sexp& e) {
  if (e.head() != "quadspec") throw std::invalid_argument("expected (quadspec ...)");
  QuadIdSpec s;
  base_from_sexp(e, s);
  return s;
}

Sexp simspec_to_sexp(const SimIdSpec& s) {
  Sexp out = base_to_sexp("simspec", s);
  out.kids.push_back(Sexp::list({Sexp::atom("lambda"), Sexp::atom(s.lambda_var)}));
  out.kids.push_back(Sexp::list({Sexp::atom("koffset"), Sexp::num(s.offset_arity)}));
  return out;
}
SimIdSpec simspec_from_sexp(const Sexp& e) {
  if (e.head() != "simspec") throw std::invalid_argument("expected (simspec ...)");
  SimIdSpec s;
  base_from_sexp(e, s);
  for (size_t i = 1; i < e.size(); ++i) {
    if (e.at(i).head() == "lambda") s.lambda_var = e.at(i).at(1).text;
    if (e.at(i).head() == "koffset") s.offset_arity = uint32_t(e.at(i).at(1).as_u64());
  }
  return s;
}

}  // namespace logdepth
