#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pseudalg/bialgebra.hpp"

namespace pseudalg {

// Bracket table plus cobracket table.
struct LieStructure {
  PseudoProduct bracket;
  CoalgebraMap cobracket;
};

inline CoalgebraMap delta_lie(const CoalgebraMap& delta) {
  CoalgebraMap out(delta.module());
  for (std::uint32_t g = 0; g < delta.module()->rank(); ++g) {
    TensorElement d = delta.at(g);
    out.set(g, d - tau_swap(d));
  }
  return out;
}

inline TensorElement cobracket_apply_term(const CoalgebraMap& delta, const BasisIndex& basis,
                                          std::uint32_t gen) {
  return delta_apply_term(delta, basis, gen);
}

// Anti-symmetry tau delta = -delta on generators.
inline CheckOutcome<TensorElement> check_lie_anti_symmetry(const CoalgebraMap& delta) {
  CheckOutcome<TensorElement> out;
  for (std::uint32_t g = 0; g < delta.module()->rank(); ++g) {
    TensorElement d = delta.at(g);
    TensorElement defect = tau_swap(d) + d;
    if (!defect.is_zero())
      out.failures.push_back({delta.module()->generators()[g], std::move(defect)});
  }
  return out;
}

// Co-Jacobi (id (x) d)d - (12)(id (x) d)d = (d (x) id)d on generators.
inline CheckOutcome<TensorElement> check_co_jacobi(const CoalgebraMap& delta) {
  CheckOutcome<TensorElement> out;
  const auto& mod = delta.module();
  for (std::uint32_t g = 0; g < mod->rank(); ++g) {
    TensorElement id_d({mod, mod, mod});
    TensorElement d_id({mod, mod, mod});
    for (const auto& [key, c] : delta.at(g).terms()) {
      TensorElement d2 = delta_apply_term(delta, key[1].basis, key[1].gen);
      id_d += c * tensor_with_left(
                      ModuleElement(mod, key[0].gen, HElement(mod->spec(), key[0].basis, 1)), d2);
      TensorElement d1 = delta_apply_term(delta, key[0].basis, key[0].gen);
      d_id += c * tensor_with_right(
                      d1, ModuleElement(mod, key[1].gen, HElement(mod->spec(), key[1].basis, 1)));
    }
    TensorElement defect = id_d - swap_12(id_d) - d_id;
    if (!defect.is_zero()) out.failures.push_back({mod->generators()[g], std::move(defect)});
  }
  return out;
}

struct LieCoalgebraReport {
  CheckOutcome<TensorElement> anti_symmetry;
  CheckOutcome<TensorElement> co_jacobi;
  bool pass() const { return anti_symmetry.pass() && co_jacobi.pass(); }
};

inline LieCoalgebraReport check_lie_coalgebra(const CoalgebraMap& delta) {
  return {check_lie_anti_symmetry(delta), check_co_jacobi(delta)};
}

inline CheckOutcome<PseudoTensor> check_skew(const PseudoProduct& bracket) {
  CheckOutcome<PseudoTensor> out;
  const auto& mod = bracket.module();
  for (std::uint32_t i = 0; i < mod->rank(); ++i)
    for (std::uint32_t j = 0; j < mod->rank(); ++j) {
      PseudoTensor defect = bracket.at(i, j) + sigma_swap(bracket.at(j, i));
      if (!defect.is_zero())
        out.failures.push_back(
            {"(" + mod->generators()[i] + "," + mod->generators()[j] + ")", std::move(defect)});
    }
  return out;
}

// Jacobi identity in the form [[a*b]*c] = [a*[b*c]] - ((sigma (x) id) (x) id)[b*[a*c]].
inline CheckOutcome<PseudoTensor> check_jacobi(const PseudoProduct& bracket) {
  CheckOutcome<PseudoTensor> out;
  const auto& mod = bracket.module();
  auto gen = [&](std::uint32_t i) { return ModuleElement::generator(mod, i); };
  for (std::uint32_t i = 0; i < mod->rank(); ++i)
    for (std::uint32_t j = 0; j < mod->rank(); ++j)
      for (std::uint32_t l = 0; l < mod->rank(); ++l) {
        PseudoTensor lhs =
            detail::compose_left(bracket, extend_bilinear(bracket, gen(i), gen(j)), gen(l));
        PseudoTensor r1 =
            detail::compose_right(bracket, gen(i), extend_bilinear(bracket, gen(j), gen(l)));
        PseudoTensor r2 =
            detail::compose_right(bracket, gen(j), extend_bilinear(bracket, gen(i), gen(l)));
        // swap the first two H slots; the store stays in last-slot-1 form
        PseudoTensor r2s(3, {mod});
        for (const auto& [key, c] : r2.terms())
          r2s.add_term({{key.slots[1], key.slots[0]}, key.target}, c);
        PseudoTensor defect = lhs - r1 + r2s;
        if (!defect.is_zero())
          out.failures.push_back({"(" + mod->generators()[i] + "," + mod->generators()[j] + "," +
                                      mod->generators()[l] + ")",
                                  std::move(defect)});
      }
  return out;
}

// Module action of a bracket on A (x) A, the derivational form
// [a*(w1 (x) w2)] = [a*w1] (x) w2 + w1 (x) [a*w2] with each bracket value
// placed from its left-normal form.
inline PseudoTensor bracket_act(const PseudoProduct& bracket, const ModuleElement& a,
                                const TensorElement& w) {
  const auto& mod = bracket.module();
  const auto& spec = mod->spec();
  PseudoTensor out(2, w.modules());
  for (const auto& [key, c] : w.terms()) {
    ModuleElement w1(mod, key[0].gen, HElement(spec, key[0].basis, 1));
    ModuleElement w2(mod, key[1].gen, HElement(spec, key[1].basis, 1));
    PseudoTensor b1 = extend_bilinear(bracket, a, w1);
    for (const auto& [bk, bc] : b1.terms())
      out.add_term({bk.slots, {bk.target[0], key[1]}}, c * bc);
    PseudoTensor b2 = extend_bilinear(bracket, a, w2);
    for (const auto& [bk, bc] : b2.terms())
      out.add_term({bk.slots, {key[0], bk.target[0]}}, c * bc);
  }
  return out;
}

// Cocycle defect d([a*b]) - [a*d(b)] + (sigma (x) id)[b*d(a)].
inline PseudoTensor lie_cocycle_defect(const LieStructure& lie, const ModuleElement& a,
                                       const ModuleElement& b) {
  PseudoTensor lhs = delta_on_target(lie.cobracket, extend_bilinear(lie.bracket, a, b));
  PseudoTensor left = bracket_act(lie.bracket, a, delta_apply(lie.cobracket, b));
  PseudoTensor right = sigma_swap(bracket_act(lie.bracket, b, delta_apply(lie.cobracket, a)));
  return lhs - left + right;
}

inline CheckOutcome<PseudoTensor> check_lie_cocycle(const LieStructure& lie) {
  CheckOutcome<PseudoTensor> out;
  const auto& mod = lie.bracket.module();
  for (std::uint32_t i = 0; i < mod->rank(); ++i)
    for (std::uint32_t j = 0; j < mod->rank(); ++j) {
      PseudoTensor defect = lie_cocycle_defect(lie, ModuleElement::generator(mod, i),
                                               ModuleElement::generator(mod, j));
      if (!defect.is_zero())
        out.failures.push_back(
            {"(" + mod->generators()[i] + "," + mod->generators()[j] + ")", std::move(defect)});
    }
  return out;
}

// sigma on the H slots together with tau on the two target factors.
inline PseudoTensor sigma_tau(const PseudoTensor& x) {
  if (x.target_modules().size() != 2) throw Error("sigma_tau expects a two-factor target");
  std::vector<ModulePtr> mods = {x.target_modules()[1], x.target_modules()[0]};
  PseudoTensor flipped(2, mods);
  for (const auto& [key, c] : x.terms())
    flipped.add_term({key.slots, {key.target[1], key.target[0]}}, c);
  return sigma_swap(flipped);
}

// H-balanceator B(a,b) = [a, Delta^op(b)]_star + (sigma (x) tau)[b, Delta^op(a)]_star.
inline PseudoTensor balanceator(const PseudoAlgebra& alg, const CoalgebraMap& delta,
                                const ModuleElement& a, const ModuleElement& b) {
  TensorElement db_op = tau_swap(delta_apply(delta, b));
  TensorElement da_op = tau_swap(delta_apply(delta, a));
  return star_bracket(alg, a, db_op) + sigma_tau(star_bracket(alg, b, da_op));
}

inline CheckOutcome<PseudoTensor> check_balanceator_symmetric(const PseudoAlgebra& alg,
                                                              const CoalgebraMap& delta) {
  CheckOutcome<PseudoTensor> out;
  const auto& mod = alg.module();
  for (std::uint32_t i = 0; i < mod->rank(); ++i)
    for (std::uint32_t j = 0; j < mod->rank(); ++j) {
      ModuleElement a = ModuleElement::generator(mod, i);
      ModuleElement b = ModuleElement::generator(mod, j);
      PseudoTensor defect = balanceator(alg, delta, a, b) - sigma_swap(balanceator(alg, delta, b, a));
      if (!defect.is_zero())
        out.failures.push_back(
            {"(" + mod->generators()[i] + "," + mod->generators()[j] + ")", std::move(defect)});
    }
  return out;
}

// Residual of the Lie-ification identity: the difference between
// d_lie([a*b]_lie) and
// [a*d_lie(b)]_lie - (sigma (x) id)[b*d_lie(a)]_lie + B(a,b) - (sigma (x) id)B(b,a).
inline PseudoTensor thm56_residual(const PseudoAlgebra& alg, const CoalgebraMap& delta,
                                   const PseudoProduct& lie_table, const CoalgebraMap& dl,
                                   const ModuleElement& a, const ModuleElement& b) {
  PseudoTensor lhs = delta_on_target(dl, extend_bilinear(lie_table, a, b));
  PseudoTensor left = bracket_act(lie_table, a, delta_apply(dl, b));
  PseudoTensor right = sigma_swap(bracket_act(lie_table, b, delta_apply(dl, a)));
  PseudoTensor b_ab = balanceator(alg, delta, a, b);
  PseudoTensor b_ba = sigma_swap(balanceator(alg, delta, b, a));
  return lhs - (left - right + b_ab - b_ba);
}

inline CheckOutcome<PseudoTensor> check_thm56(const PseudoAlgebra& alg, const CoalgebraMap& delta) {
  CheckOutcome<PseudoTensor> out;
  PseudoProduct lie_table = lieify(alg);
  CoalgebraMap dl = delta_lie(delta);
  const auto& mod = alg.module();
  for (std::uint32_t i = 0; i < mod->rank(); ++i)
    for (std::uint32_t j = 0; j < mod->rank(); ++j) {
      PseudoTensor defect = thm56_residual(alg, delta, lie_table, dl,
                                           ModuleElement::generator(mod, i),
                                           ModuleElement::generator(mod, j));
      if (!defect.is_zero())
        out.failures.push_back(
            {"(" + mod->generators()[i] + "," + mod->generators()[j] + ")", std::move(defect)});
    }
  return out;
}

// Coboundary condition d(a) = mu([a,u_i] (x) v_i + (12)(u_i (x) [a,v_i])).
inline TensorElement coboundary_rhs(const PseudoProduct& bracket, const TensorElement& r,
                                    const ModuleElement& a) {
  const auto& mod = bracket.module();
  const auto& spec = mod->spec();
  TensorElement out({mod, mod});
  for (const auto& [key, c] : r.terms()) {
    ModuleElement u(mod, key[0].gen, HElement(spec, key[0].basis, 1));
    ModuleElement v(mod, key[1].gen, HElement(spec, key[1].basis, 1));
    TensorElement br_u = bracket_of(extend_bilinear(bracket, a, u));
    for (const auto& [bk, bc] : br_u.terms()) {
      TensorElement pure_t({mod, mod});
      pure_t.add_term({bk[1], key[1]}, 1);
      out += (c * bc) * diagonal_act(HElement(spec, bk[0].basis, 1), pure_t);
    }
    TensorElement br_v = bracket_of(extend_bilinear(bracket, a, v));
    for (const auto& [bk, bc] : br_v.terms()) {
      TensorKey uk = {key[0], bk[1]};
      TensorElement pure_t({mod, mod});
      pure_t.add_term(uk, 1);
      out += (c * bc) * diagonal_act(HElement(spec, bk[0].basis, 1), pure_t);
    }
  }
  return out;
}

inline CheckOutcome<TensorElement> check_coboundary_lie(const LieStructure& lie,
                                                        const TensorElement& r) {
  CheckOutcome<TensorElement> out;
  const auto& mod = lie.bracket.module();
  for (std::uint32_t g = 0; g < mod->rank(); ++g) {
    TensorElement defect = lie.cobracket.at(g) -
                           coboundary_rhs(lie.bracket, r, ModuleElement::generator(mod, g));
    if (!defect.is_zero()) out.failures.push_back({mod->generators()[g], std::move(defect)});
  }
  return out;
}

}  // namespace pseudalg
