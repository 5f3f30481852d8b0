#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pseudalg/algebra.hpp"

namespace pseudalg {

// Comultiplication table on generators, extended H-linearly through the
// diagonal action on A (x) A.
class CoalgebraMap {
 public:
  CoalgebraMap() = default;
  explicit CoalgebraMap(ModulePtr mod) : mod_(std::move(mod)) {}

  const ModulePtr& module() const { return mod_; }
  const std::map<std::uint32_t, TensorElement>& table() const { return table_; }

  void set(std::uint32_t gen, TensorElement value) {
    if (gen >= mod_->rank()) throw Error("generator index out of range");
    if (!value.is_zero() && !same_module_list(value.modules(), {mod_, mod_}))
      throw Error("delta value must live in A (x) A");
    if (value.is_zero())
      table_.erase(gen);
    else
      table_.insert_or_assign(gen, std::move(value));
  }

  TensorElement at(std::uint32_t gen) const {
    auto it = table_.find(gen);
    if (it != table_.end()) return it->second;
    return TensorElement({mod_, mod_});
  }

  bool is_zero() const { return table_.empty(); }

 private:
  ModulePtr mod_;
  std::map<std::uint32_t, TensorElement> table_;
};

inline TensorElement delta_apply_term(const CoalgebraMap& delta, const BasisIndex& basis,
                                      std::uint32_t gen) {
  const auto& spec = delta.module()->spec();
  if (spec->is_unit_index(basis)) return delta.at(gen);
  return diagonal_act(HElement(spec, basis, 1), delta.at(gen));
}

inline TensorElement delta_apply(const CoalgebraMap& delta, const ModuleElement& m) {
  require_same_module(delta.module(), m.module());
  TensorElement out({delta.module(), delta.module()});
  for (const auto& [g, h] : m.terms())
    for (const auto& [b, c] : h.terms()) out += c * delta_apply_term(delta, b, g);
  return out;
}

// Lifts the comultiplication through an arity-2 value, for Delta(a*b).
inline PseudoTensor delta_on_target(const CoalgebraMap& delta, const PseudoTensor& x) {
  return apply_to_target(x, {delta.module(), delta.module()}, [&](const TensorKey& key) {
    return delta_apply_term(delta, key[0].basis, key[0].gen);
  });
}

inline TensorElement tensor_with_right(const TensorElement& left, const ModuleElement& right) {
  std::vector<ModulePtr> mods = left.modules();
  mods.push_back(right.module());
  TensorElement out(mods);
  for (const auto& [key, c] : left.terms())
    for (const auto& [g, h] : right.terms())
      for (const auto& [b, hc] : h.terms()) {
        TensorKey nk(key);
        nk.push_back({b, g});
        out.add_term(nk, c * hc);
      }
  return out;
}

inline TensorElement tensor_with_left(const ModuleElement& left, const TensorElement& right) {
  std::vector<ModulePtr> mods;
  mods.push_back(left.module());
  for (const auto& m : right.modules()) mods.push_back(m);
  TensorElement out(mods);
  for (const auto& [g, h] : left.terms())
    for (const auto& [b, hc] : h.terms())
      for (const auto& [key, c] : right.terms()) {
        TensorKey nk;
        nk.reserve(key.size() + 1);
        nk.push_back({b, g});
        for (const auto& f : key) nk.push_back(f);
        out.add_term(nk, c * hc);
      }
  return out;
}

// Coassociativity defect of one generator: (Delta (x) id)Delta - (id (x) Delta)Delta.
inline TensorElement coassoc_defect(const CoalgebraMap& delta, std::uint32_t gen) {
  const auto& mod = delta.module();
  TensorElement lhs({mod, mod, mod}), rhs({mod, mod, mod});
  for (const auto& [key, c] : delta.at(gen).terms()) {
    TensorElement d1 = delta_apply_term(delta, key[0].basis, key[0].gen);
    lhs += c * tensor_with_right(d1, ModuleElement(mod, key[1].gen,
                                                   HElement(mod->spec(), key[1].basis, 1)));
    TensorElement d2 = delta_apply_term(delta, key[1].basis, key[1].gen);
    rhs += c * tensor_with_left(ModuleElement(mod, key[0].gen,
                                              HElement(mod->spec(), key[0].basis, 1)),
                                d2);
  }
  return lhs - rhs;
}

inline CheckOutcome<TensorElement> check_coassoc(const CoalgebraMap& delta) {
  CheckOutcome<TensorElement> out;
  for (std::uint32_t g = 0; g < delta.module()->rank(); ++g) {
    TensorElement defect = coassoc_defect(delta, g);
    if (!defect.is_zero())
      out.failures.push_back({delta.module()->generators()[g], std::move(defect)});
  }
  return out;
}

inline CheckOutcome<TensorElement> check_cocommutativity(const CoalgebraMap& delta) {
  CheckOutcome<TensorElement> out;
  for (std::uint32_t g = 0; g < delta.module()->rank(); ++g) {
    TensorElement d = delta.at(g);
    TensorElement defect = d - tau_swap(d);
    if (!defect.is_zero())
      out.failures.push_back({delta.module()->generators()[g], std::move(defect)});
  }
  return out;
}

// Delta(a*b) - a*Delta(b) - Delta(a)*b with the bimodule actions on A (x) A.
inline PseudoTensor compat_defect(const PseudoAlgebra& alg, const CoalgebraMap& delta,
                                  const ModuleElement& a, const ModuleElement& b) {
  PseudoTensor lhs = delta_on_target(delta, pstar(alg, a, b));
  PseudoTensor left = act_left(alg, a, delta_apply(delta, b));
  PseudoTensor right = from_first_form(act_right(alg, delta_apply(delta, a), b));
  return lhs - left - right;
}

inline CheckOutcome<PseudoTensor> check_compat(const PseudoAlgebra& alg,
                                               const CoalgebraMap& delta) {
  CheckOutcome<PseudoTensor> out;
  auto probes = probe_elements(alg.module(), false);
  for (const auto& a : probes)
    for (const auto& b : probes) {
      PseudoTensor defect = compat_defect(alg, delta, a, b);
      if (!defect.is_zero())
        out.failures.push_back(
            {"(" + element_label(a) + "," + element_label(b) + ")", std::move(defect)});
    }
  return out;
}

// Dual coalgebra of a finite free algebra: on the dual generators,
// Delta(a^k) = sum S(f_k^{ij}) a^i (x) S(g_k^{ij}) a^j.
struct DualCoalgebra {
  ModulePtr dual_module;
  CoalgebraMap delta;
};

inline DualCoalgebra dual_coalgebra(const PseudoAlgebra& alg) {
  const auto& spec = alg.module()->spec();
  const std::uint32_t n = alg.module()->rank();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  ModulePtr dual = FreeModule::make(spec, alg.module()->name() + "_dual", labels);

  CoalgebraMap delta(dual);
  for (std::uint32_t k = 0; k < n; ++k) {
    TensorElement value({dual, dual});
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j)
        for (const auto& pair : raw_pairs(alg.product(), i, j)) {
          if (pair.k != k) continue;
          auto [fb, fs] = basis_antipode(*spec, pair.f);
          auto [gb, gs] = basis_antipode(*spec, pair.g);
          value.add_term({{fb, i}, {gb, j}}, (fs * gs > 0) ? pair.c : -pair.c);
        }
    delta.set(k, std::move(value));
  }
  return {dual, delta};
}

// Algebra plus comultiplication, the bundle every bialgebra-level check
// operates on.
struct Bialgebra {
  PseudoAlgebra algebra;
  CoalgebraMap delta;
};

// Current construction: lifts a bundle over the one-dimensional Hopf algebra
// to any target H, with unit product coefficients and the same generator
// labels.
inline Bialgebra cur_from_infbialgebra(const Bialgebra& ordinary, const HopfSpecPtr& target) {
  const auto& mod0 = ordinary.algebra.module();
  if (mod0->spec()->kind() != HopfKind::trivial)
    throw Error("current construction expects an ordinary bialgebra over the trivial Hopf algebra");
  if (!check_associativity(ordinary.algebra).pass() || !check_coassoc(ordinary.delta).pass() ||
      !check_compat(ordinary.algebra, ordinary.delta).pass())
    throw Error("invalid input bialgebra");

  ModulePtr mod = FreeModule::make(target, mod0->name(), mod0->generators());
  PseudoProduct prod(mod);
  const std::uint32_t n = mod0->rank();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      PseudoTensor value(2, {mod});
      for (const auto& pair : raw_pairs(ordinary.algebra.product(), i, j))
        value.add_term({{target->unit_index()}, {{target->unit_index(), pair.k}}}, pair.c);
      prod.set(i, j, std::move(value));
    }

  CoalgebraMap delta(mod);
  for (const auto& [g, value] : ordinary.delta.table()) {
    TensorElement lifted({mod, mod});
    for (const auto& [key, c] : value.terms())
      lifted.add_term({{target->unit_index(), key[0].gen}, {target->unit_index(), key[1].gen}}, c);
    delta.set(g, std::move(lifted));
  }
  return {PseudoAlgebra(mod, std::move(prod)), std::move(delta)};
}

}  // namespace pseudalg
