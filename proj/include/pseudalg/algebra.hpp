#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pseudalg/pseudotensor.hpp"

namespace pseudalg {

// Structure constants: generator pair -> canonical arity-2 value over A.
// Absent pairs are zero.
class PseudoProduct {
 public:
  PseudoProduct() = default;
  explicit PseudoProduct(ModulePtr mod) : mod_(std::move(mod)) {}

  const ModulePtr& module() const { return mod_; }
  const std::map<std::pair<std::uint32_t, std::uint32_t>, PseudoTensor>& table() const {
    return table_;
  }

  void set(std::uint32_t i, std::uint32_t j, PseudoTensor value) {
    if (i >= mod_->rank() || j >= mod_->rank()) throw Error("generator index out of range");
    if (value.is_zero())
      table_.erase({i, j});
    else
      table_.insert_or_assign({i, j}, std::move(value));
  }

  void add(std::uint32_t i, std::uint32_t j, const PseudoTensor& value) {
    PseudoTensor v = at(i, j) + value;
    set(i, j, std::move(v));
  }

  PseudoTensor at(std::uint32_t i, std::uint32_t j) const {
    auto it = table_.find({i, j});
    if (it != table_.end()) return it->second;
    return PseudoTensor(2, {mod_});
  }

 private:
  ModulePtr mod_;
  std::map<std::pair<std::uint32_t, std::uint32_t>, PseudoTensor> table_;
};

// H-bilinear extension of a generator table to arbitrary elements.
inline PseudoTensor extend_bilinear(const PseudoProduct& table, const ModuleElement& a,
                                    const ModuleElement& b) {
  require_same_module(a.module(), table.module());
  require_same_module(b.module(), table.module());
  PseudoTensor out(2, {table.module()});
  for (const auto& [i, ha] : a.terms())
    for (const auto& [j, hb] : b.terms()) {
      auto it = table.table().find({i, j});
      if (it == table.table().end()) continue;
      out += slot_mul({ha, hb}, it->second);
    }
  return out;
}

class PseudoAlgebra {
 public:
  PseudoAlgebra() = default;
  PseudoAlgebra(ModulePtr mod, PseudoProduct prod)
      : mod_(std::move(mod)), prod_(std::move(prod)) {}

  const ModulePtr& module() const { return mod_; }
  const PseudoProduct& product() const { return prod_; }

  ModuleElement gen(std::uint32_t i) const { return ModuleElement::generator(mod_, i); }
  ModuleElement gen(const std::string& label) const { return ModuleElement::generator(mod_, label); }

 private:
  ModulePtr mod_;
  PseudoProduct prod_;
};

inline PseudoTensor pstar(const PseudoAlgebra& alg, const ModuleElement& a,
                          const ModuleElement& b) {
  return extend_bilinear(alg.product(), a, b);
}

namespace detail {

// Composition of two canonical arity-2 values into an arity-3 value. With
// canonical inner factors both rules land directly in last-slot-1 form.
inline PseudoTensor compose_left(const PseudoProduct& table, const PseudoTensor& ab,
                                 const ModuleElement& c) {
  const auto& mod = table.module();
  const auto& spec = mod->spec();
  PseudoTensor out(3, {mod});
  for (const auto& [key, coeff] : ab.terms()) {
    ModuleElement e(mod, key.target[0].gen, HElement(spec, key.target[0].basis, coeff));
    PseudoTensor ec = extend_bilinear(table, e, c);
    for (const auto& [k2, c2] : ec.terms()) {
      for (const auto& [legs, lk] : basis_comul_n(*spec, k2.slots[0], 2)) {
        PseudoKey nk;
        nk.slots = {basis_mul(*spec, key.slots[0], legs[0]), legs[1]};
        nk.target = k2.target;
        out.add_term(nk, c2 * lk);
      }
    }
  }
  return out;
}

inline PseudoTensor compose_right(const PseudoProduct& table, const ModuleElement& a,
                                  const PseudoTensor& bc) {
  const auto& mod = table.module();
  const auto& spec = mod->spec();
  PseudoTensor out(3, {mod});
  for (const auto& [key, coeff] : bc.terms()) {
    ModuleElement e(mod, key.target[0].gen, HElement(spec, key.target[0].basis, coeff));
    PseudoTensor ae = extend_bilinear(table, a, e);
    for (const auto& [k2, c2] : ae.terms()) {
      PseudoKey nk;
      nk.slots = {k2.slots[0], key.slots[0]};
      nk.target = k2.target;
      out.add_term(nk, c2);
    }
  }
  return out;
}

}  // namespace detail

// (a*b)*c
inline PseudoTensor comp_left(const PseudoAlgebra& alg, const ModuleElement& a,
                              const ModuleElement& b, const ModuleElement& c) {
  return detail::compose_left(alg.product(), pstar(alg, a, b), c);
}

// a*(b*c)
inline PseudoTensor comp_right(const PseudoAlgebra& alg, const ModuleElement& a,
                               const ModuleElement& b, const ModuleElement& c) {
  return detail::compose_right(alg.product(), a, pstar(alg, b, c));
}

// Raw structure-constant pairs (f,g,k) with undecorated target, recovered
// from the canonical table entry.
struct RawPair {
  BasisIndex f;
  BasisIndex g;
  std::uint32_t k;
  Rational c;
};

inline std::vector<RawPair> raw_pairs(const PseudoProduct& table, std::uint32_t i,
                                      std::uint32_t j) {
  std::vector<RawPair> out;
  auto it = table.table().find({i, j});
  if (it == table.table().end()) return out;
  const auto& spec = *table.module()->spec();
  for (const auto& [key, c] : it->second.terms()) {
    for (const auto& [legs, k] : basis_comul_n(spec, key.target[0].basis, 2))
      out.push_back({basis_mul(spec, key.slots[0], legs[0]), legs[1], key.target[0].gen, c * k});
  }
  return out;
}

// The structure-constant form of the associativity identity on a generator
// triple, as a normalized arity-3 defect. Independent route used to
// cross-check comp_left/comp_right.
inline PseudoTensor assoc_defect_structure(const PseudoAlgebra& alg, std::uint32_t i,
                                           std::uint32_t j, std::uint32_t l) {
  const auto& mod = alg.module();
  const auto& spec = mod->spec();
  RawTensor raw = RawTensor::from(3, {mod});
  const std::uint32_t rank = mod->rank();
  for (std::uint32_t k = 0; k < rank; ++k) {
    for (const auto& inner : raw_pairs(alg.product(), i, j)) {
      if (inner.k != k) continue;
      for (const auto& outer : raw_pairs(alg.product(), k, l)) {
        // f_k^{ij} (f_s^{kl})_1 (x) g_k^{ij} (f_s^{kl})_2 (x) g_s^{kl} (x)_H a_s
        for (const auto& [legs, lc] : basis_comul_n(*spec, outer.f, 2)) {
          TensorElement t = TensorElement::pure({ModuleElement::generator(mod, outer.k)});
          raw.push({HElement(spec, basis_mul(*spec, inner.f, legs[0]), inner.c * outer.c * lc),
                    HElement(spec, basis_mul(*spec, inner.g, legs[1]), 1),
                    HElement(spec, outer.g, 1)},
                   std::move(t));
        }
      }
    }
    for (const auto& inner : raw_pairs(alg.product(), j, l)) {
      if (inner.k != k) continue;
      for (const auto& outer : raw_pairs(alg.product(), i, k)) {
        // minus f_s^{ik} (x) f_k^{jl} (g_s^{ik})_1 (x) g_k^{jl} (g_s^{ik})_2 (x)_H a_s
        for (const auto& [legs, lc] : basis_comul_n(*spec, outer.g, 2)) {
          TensorElement t = TensorElement::pure({ModuleElement::generator(mod, outer.k)});
          raw.push({HElement(spec, outer.f, -inner.c * outer.c * lc),
                    HElement(spec, basis_mul(*spec, inner.f, legs[0]), 1),
                    HElement(spec, basis_mul(*spec, inner.g, legs[1]), 1)},
                   std::move(t));
        }
      }
    }
  }
  return normalize_last(raw);
}

// Small deterministic probe set: generators, optionally decorated by one
// degree-one basis element, to guard the H-bilinear extension paths.
inline std::vector<ModuleElement> probe_elements(const ModulePtr& mod, bool with_h_probes) {
  std::vector<ModuleElement> probes;
  for (std::uint32_t g = 0; g < mod->rank(); ++g)
    probes.push_back(ModuleElement::generator(mod, g));
  if (!with_h_probes) return probes;
  const auto& spec = mod->spec();
  std::vector<BasisIndex> decors;
  switch (spec->kind()) {
    case HopfKind::trivial:
      break;
    case HopfKind::polynomial: {
      BasisIndex b(spec->poly_generators(), 0);
      b[0] = 1;
      decors.push_back(b);
      break;
    }
    case HopfKind::group_algebra:
      for (std::uint32_t g = 0; g < spec->group().order && decors.empty(); ++g)
        if (g != spec->group().identity) decors.push_back({g});
      break;
  }
  for (const auto& d : decors)
    for (std::uint32_t g = 0; g < mod->rank(); ++g)
      probes.push_back(ModuleElement(mod, g, HElement(spec, d, 1)));
  return probes;
}

template <typename Defect>
struct CheckFailure {
  std::string witness;
  Defect defect;
};

template <typename Defect>
struct CheckOutcome {
  std::vector<CheckFailure<Defect>> failures;
  bool pass() const { return failures.empty(); }
};

inline std::string element_label(const ModuleElement& m);

inline CheckOutcome<PseudoTensor> check_associativity(const PseudoAlgebra& alg,
                                                      bool with_h_probes = true) {
  CheckOutcome<PseudoTensor> out;
  auto probes = probe_elements(alg.module(), with_h_probes);
  for (const auto& a : probes)
    for (const auto& b : probes)
      for (const auto& c : probes) {
        PseudoTensor defect = comp_left(alg, a, b, c) - comp_right(alg, a, b, c);
        if (!defect.is_zero())
          out.failures.push_back(
              {"(" + element_label(a) + "," + element_label(b) + "," + element_label(c) + ")",
               std::move(defect)});
      }
  return out;
}

inline CheckOutcome<PseudoTensor> check_commutativity(const PseudoAlgebra& alg) {
  CheckOutcome<PseudoTensor> out;
  auto probes = probe_elements(alg.module(), false);
  for (const auto& a : probes)
    for (const auto& b : probes) {
      PseudoTensor defect = pstar(alg, a, b) - sigma_swap(pstar(alg, b, a));
      if (!defect.is_zero())
        out.failures.push_back(
            {"(" + element_label(a) + "," + element_label(b) + ")", std::move(defect)});
    }
  return out;
}

// Left action of A on a tensor power of A: the product with the first factor
// in left-normal form, the remaining factors carried along.
inline PseudoTensor act_left(const PseudoAlgebra& alg, const ModuleElement& a,
                             const TensorElement& w) {
  require_same_module(w.modules().front(), alg.module());
  PseudoTensor out(2, w.modules());
  const auto& spec = alg.module()->spec();
  for (const auto& [key, c] : w.terms()) {
    ModuleElement first(alg.module(), key[0].gen, HElement(spec, key[0].basis, c));
    PseudoTensor p = pstar(alg, a, first);
    for (const auto& [pk, pc] : p.terms()) {
      TensorKey nk;
      nk.reserve(key.size());
      nk.push_back(pk.target[0]);
      for (std::size_t i = 1; i < key.size(); ++i) nk.push_back(key[i]);
      out.add_term({pk.slots, nk}, pc);
    }
  }
  return out;
}

// Right action, in right-normal form: the product acts on the last factor.
inline FirstForm act_right(const PseudoAlgebra& alg, const TensorElement& w,
                           const ModuleElement& a) {
  require_same_module(w.modules().back(), alg.module());
  FirstForm out(w.modules());
  const auto& spec = alg.module()->spec();
  const std::size_t p = w.arity();
  for (const auto& [key, c] : w.terms()) {
    ModuleElement last(alg.module(), key[p - 1].gen, HElement(spec, key[p - 1].basis, c));
    FirstForm f = to_first_form(pstar(alg, last, a));
    for (const auto& [fk, fc] : f.terms()) {
      TensorKey nk;
      nk.reserve(p);
      for (std::size_t i = 0; i + 1 < p; ++i) nk.push_back(key[i]);
      nk.push_back(fk.target[0]);
      out.add_term({fk.slot2, nk}, fc);
    }
  }
  return out;
}

namespace detail {

inline TensorElement attach_h_slot_front(const HopfSpecPtr& spec,
                                         const std::vector<ModulePtr>& mods) {
  std::vector<ModulePtr> all;
  all.reserve(mods.size() + 1);
  all.push_back(FreeModule::h_slot(spec));
  for (const auto& m : mods) all.push_back(m);
  return TensorElement(all);
}

}  // namespace detail

// a bullet w: the left action with the unit slot dropped, an element of
// H (x) A^(x)p carried by a leading h-slot factor.
inline TensorElement bullet_left(const PseudoAlgebra& alg, const ModuleElement& a,
                                 const TensorElement& w) {
  PseudoTensor p = act_left(alg, a, w);
  TensorElement out = detail::attach_h_slot_front(alg.module()->spec(), w.modules());
  for (const auto& [key, c] : p.terms()) {
    TensorKey nk;
    nk.reserve(key.target.size() + 1);
    nk.push_back({key.slots[0], 0});
    for (const auto& f : key.target) nk.push_back(f);
    out.add_term(nk, c);
  }
  return out;
}

inline TensorElement bullet_right(const PseudoAlgebra& alg, const TensorElement& w,
                                  const ModuleElement& a) {
  FirstForm f = act_right(alg, w, a);
  TensorElement out = detail::attach_h_slot_front(alg.module()->spec(), w.modules());
  for (const auto& [key, c] : f.terms()) {
    TensorKey nk;
    nk.reserve(key.target.size() + 1);
    nk.push_back({key.slot2, 0});
    for (const auto& t : key.target) nk.push_back(t);
    out.add_term(nk, c);
  }
  return out;
}

// [a, w]_star = a*w - (sigma (x) id)(w*a) with the bimodule actions.
inline PseudoTensor star_bracket(const PseudoAlgebra& alg, const ModuleElement& a,
                                 const TensorElement& w) {
  return act_left(alg, a, w) - sigma_of_first(act_right(alg, w, a));
}

inline PseudoTensor lie_bracket_value(const PseudoAlgebra& alg, const ModuleElement& a,
                                      const ModuleElement& b) {
  return pstar(alg, a, b) - sigma_swap(pstar(alg, b, a));
}

// Bracket table of the Lie-ification.
inline PseudoProduct lieify(const PseudoAlgebra& alg) {
  PseudoProduct out(alg.module());
  const std::uint32_t n = alg.module()->rank();
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      out.set(i, j, lie_bracket_value(alg, alg.gen(i), alg.gen(j)));
  return out;
}

// Scalar-extraction product against a dual basis functional, available only
// for finite-dimensional H.
inline ModuleElement x_product(const PseudoAlgebra& alg, const ModuleElement& a,
                               const ModuleElement& b, const BasisIndex& x) {
  const auto& spec = alg.module()->spec();
  if (!spec->finite_dimensional()) throw Error("x-products require finite-dimensional H");
  ModuleElement out(alg.module());
  for (const auto& [key, c] : pstar(alg, a, b).terms()) {
    auto [sb, sign] = basis_antipode(*spec, key.slots[0]);
    if (sb == x)
      out.add_term(key.target[0].gen,
                   HElement(spec, key.target[0].basis, sign > 0 ? c : -c));
  }
  return out;
}

inline std::string element_label(const ModuleElement& m) {
  if (m.is_zero()) return "0";
  std::string s;
  for (const auto& [g, h] : m.terms()) {
    if (!s.empty()) s += "+";
    if (!h.is_unit()) s += "h.";
    s += m.module()->generators()[g];
  }
  return s;
}

}  // namespace pseudalg
