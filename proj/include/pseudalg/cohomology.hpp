#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pseudalg/bialgebra.hpp"

namespace pseudalg {

// Degree 0 and 1 of the reduced complex with coefficients in A or A (x) A.
// A 1-cochain is a table gen -> M value, extended H-linearly; a 2-cochain
// value is a canonical arity-2 pseudotensor over M.
using Cochain1 = std::map<std::uint32_t, TensorElement>;
using Cochain2 = std::map<std::pair<std::uint32_t, std::uint32_t>, PseudoTensor>;

inline std::vector<ModulePtr> bimodule_modules(const PseudoAlgebra& alg, unsigned power) {
  if (power < 1 || power > 2) throw Error("bimodule power must be 1 or 2");
  std::vector<ModulePtr> mods(power, alg.module());
  return mods;
}

// Scalar-coefficient representative of a degree-zero class.
inline TensorElement cochain0_representative(const TensorElement& m) { return counit_project(m); }

namespace detail {

inline TensorElement collapse_left(const PseudoTensor& p) {
  TensorElement out(p.target_modules());
  const auto& spec = p.spec();
  for (const auto& [key, c] : p.terms()) {
    TensorElement t(p.target_modules());
    t.add_term(key.target, c);
    out += diagonal_act(HElement(spec, key.slots[0], 1), t);
  }
  return out;
}

inline TensorElement collapse_right(const FirstForm& f, const std::vector<ModulePtr>& mods) {
  TensorElement out(mods);
  const auto& spec = mods.front()->spec();
  for (const auto& [key, c] : f.terms()) {
    TensorElement t(mods);
    t.add_term(key.target, c);
    out += diagonal_act(HElement(spec, key.slot2, 1), t);
  }
  return out;
}

}  // namespace detail

// d: C^0 -> C^1, the counit-collapsed difference of the two actions.
inline Cochain1 d0(const PseudoAlgebra& alg, const TensorElement& m) {
  for (const auto& mod : m.modules()) require_same_module(mod, alg.module());
  Cochain1 out;
  for (std::uint32_t g = 0; g < alg.module()->rank(); ++g) {
    ModuleElement a = ModuleElement::generator(alg.module(), g);
    TensorElement value = detail::collapse_left(act_left(alg, a, m)) -
                          detail::collapse_right(act_right(alg, m, a), m.modules());
    if (!value.is_zero()) out.emplace(g, std::move(value));
  }
  return out;
}

inline TensorElement cochain1_at(const Cochain1& gamma, const std::vector<ModulePtr>& mods,
                                 std::uint32_t gen) {
  auto it = gamma.find(gen);
  if (it != gamma.end()) return it->second;
  return TensorElement(mods);
}

// gamma applied through an arity-2 value: each canonical term expands the
// H coefficient of the target through gamma's H-linearity.
inline PseudoTensor cochain1_on_product(const Cochain1& gamma, const std::vector<ModulePtr>& mods,
                                        const PseudoTensor& p) {
  PseudoTensor out(2, mods);
  const auto& spec = p.spec();
  for (const auto& [key, c] : p.terms()) {
    TensorElement img = cochain1_at(gamma, mods, key.target[0].gen);
    if (!spec->is_unit_index(key.target[0].basis))
      img = diagonal_act(HElement(spec, key.target[0].basis, 1), img);
    for (const auto& [tk, tc] : img.terms()) out.add_term({key.slots, tk}, c * tc);
  }
  return out;
}

// d: C^1 -> C^2 on generator pairs,
// d gamma(a,b) = a*gamma(b) - gamma(a*b) + gamma(a)*b.
inline PseudoTensor d1_value(const PseudoAlgebra& alg, const Cochain1& gamma,
                             const std::vector<ModulePtr>& mods, const ModuleElement& a,
                             const ModuleElement& b) {
  // extend gamma H-linearly to the probe elements
  auto apply = [&](const ModuleElement& x) {
    TensorElement r(mods);
    for (const auto& [g, h] : x.terms()) {
      TensorElement base = cochain1_at(gamma, mods, g);
      r += diagonal_act(h, base);
    }
    return r;
  };
  TensorElement gb = apply(b);
  TensorElement ga = apply(a);
  PseudoTensor left = act_left(alg, a, gb);
  PseudoTensor mid = cochain1_on_product(gamma, mods, pstar(alg, a, b));
  PseudoTensor right = from_first_form(act_right(alg, ga, b));
  return left - mid + right;
}

inline Cochain2 d1(const PseudoAlgebra& alg, const Cochain1& gamma, unsigned power) {
  auto mods = bimodule_modules(alg, power);
  Cochain2 out;
  const std::uint32_t n = alg.module()->rank();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      PseudoTensor v = d1_value(alg, gamma, mods, ModuleElement::generator(alg.module(), i),
                                ModuleElement::generator(alg.module(), j));
      if (!v.is_zero()) out.emplace(std::make_pair(i, j), std::move(v));
    }
  return out;
}

inline CheckOutcome<PseudoTensor> is_cocycle1(const PseudoAlgebra& alg, const Cochain1& gamma,
                                              unsigned power) {
  CheckOutcome<PseudoTensor> out;
  const auto& mod = alg.module();
  for (auto& [key, v] : d1(alg, gamma, power))
    out.failures.push_back({"(" + mod->generators()[key.first] + "," +
                                mod->generators()[key.second] + ")",
                            std::move(v)});
  return out;
}

inline Cochain1 delta_as_cochain(const CoalgebraMap& delta) {
  Cochain1 out;
  for (const auto& [g, v] : delta.table()) out.emplace(g, v);
  return out;
}

}  // namespace pseudalg
