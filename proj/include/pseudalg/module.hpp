#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pseudalg/hopf.hpp"

namespace pseudalg {

class FreeModule;
using ModulePtr = std::shared_ptr<const FreeModule>;

// Finite free left H-module with named generators. A rank-one "h slot"
// module stands for H itself inside mixed tensors; decorated tensors such as
// the bracket values in H (x) A are ordinary TensorElements whose first
// factor is the h slot.
class FreeModule {
 public:
  static ModulePtr make(HopfSpecPtr spec, std::string name, std::vector<std::string> generators) {
    if (generators.empty()) throw Error("module needs at least one generator");
    std::set<std::string> seen;
    for (const auto& g : generators) {
      if (g.empty()) throw Error("empty generator label");
      if (!seen.insert(g).second) throw Error("duplicate generator label: " + g);
    }
    return std::shared_ptr<FreeModule>(
        new FreeModule(std::move(spec), std::move(name), std::move(generators), false));
  }

  static ModulePtr h_slot(HopfSpecPtr spec) {
    return std::shared_ptr<FreeModule>(new FreeModule(std::move(spec), "<H>", {"<h>"}, true));
  }

  const HopfSpecPtr& spec() const { return spec_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& generators() const { return gens_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(gens_.size()); }
  bool is_h_slot() const { return h_slot_; }

  std::uint32_t generator_index(const std::string& label) const {
    for (std::uint32_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == label) return i;
    throw Error("unknown generator: " + label);
  }

  bool same_as(const FreeModule& o) const {
    return h_slot_ == o.h_slot_ && gens_ == o.gens_ && spec_->same_as(*o.spec_);
  }

 private:
  FreeModule(HopfSpecPtr spec, std::string name, std::vector<std::string> gens, bool hslot)
      : spec_(std::move(spec)), name_(std::move(name)), gens_(std::move(gens)), h_slot_(hslot) {}

  HopfSpecPtr spec_;
  std::string name_;
  std::vector<std::string> gens_;
  bool h_slot_;
};

inline void require_same_module(const ModulePtr& a, const ModulePtr& b) {
  if (!a || !b || !a->same_as(*b)) throw Error("module mismatch");
}

inline bool same_module_list(const std::vector<ModulePtr>& a, const std::vector<ModulePtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i]->same_as(*b[i])) return false;
  return true;
}

// Element of a free module: generator -> H coefficient, no zero terms.
class ModuleElement {
 public:
  ModuleElement() = default;
  explicit ModuleElement(ModulePtr mod) : mod_(std::move(mod)) {}
  ModuleElement(ModulePtr mod, std::uint32_t gen, HElement coeff) : mod_(std::move(mod)) {
    require_same_spec(mod_->spec(), coeff.spec());
    add_term(gen, std::move(coeff));
  }

  static ModuleElement generator(const ModulePtr& mod, std::uint32_t gen) {
    return ModuleElement(mod, gen, HElement::unit(mod->spec()));
  }
  static ModuleElement generator(const ModulePtr& mod, const std::string& label) {
    return generator(mod, mod->generator_index(label));
  }

  const ModulePtr& module() const { return mod_; }
  const std::map<std::uint32_t, HElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::uint32_t gen, const HElement& coeff) {
    if (gen >= mod_->rank()) throw Error("generator index out of range");
    if (coeff.is_zero()) return;
    auto it = terms_.find(gen);
    if (it == terms_.end()) {
      terms_.emplace(gen, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ModuleElement& operator+=(const ModuleElement& o) {
    require_same_module(mod_, o.mod_);
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  ModuleElement& operator-=(const ModuleElement& o) {
    require_same_module(mod_, o.mod_);
    for (const auto& [g, c] : o.terms_) add_term(g, Rational(-1) * c);
    return *this;
  }
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Rational& s, const ModuleElement& m) {
    ModuleElement r(m.mod_);
    for (const auto& [g, c] : m.terms_) r.add_term(g, s * c);
    return r;
  }

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  ModulePtr mod_;
  std::map<std::uint32_t, HElement> terms_;
};

inline ModuleElement h_act(const HElement& h, const ModuleElement& m) {
  require_same_spec(h.spec(), m.module()->spec());
  ModuleElement r(m.module());
  for (const auto& [g, c] : m.terms()) r.add_term(g, h_mul(h, c));
  return r;
}

// One factor of a canonical tensor term: an H basis element applied to a
// generator of that factor's module.
struct TensorFactor {
  BasisIndex basis;
  std::uint32_t gen = 0;
  auto operator<=>(const TensorFactor&) const = default;
};

using TensorKey = std::vector<TensorFactor>;

// Element of M1 (x) ... (x) Mp expanded to the k-basis. Equality is table
// equality, which is what every axiom checker reduces to.
class TensorElement {
 public:
  TensorElement() = default;
  explicit TensorElement(std::vector<ModulePtr> mods) : mods_(std::move(mods)) {
    if (mods_.empty()) throw Error("tensor needs at least one factor");
  }

  static TensorElement pure(const std::vector<ModuleElement>& factors) {
    std::vector<ModulePtr> mods;
    mods.reserve(factors.size());
    for (const auto& f : factors) mods.push_back(f.module());
    TensorElement r(std::move(mods));
    TensorKey key(factors.size());
    r.accumulate_pure(factors, 0, key, 1);
    return r;
  }

  const std::vector<ModulePtr>& modules() const { return mods_; }
  std::size_t arity() const { return mods_.size(); }
  const std::map<TensorKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const HopfSpecPtr& spec() const { return mods_.front()->spec(); }

  void add_term(const TensorKey& key, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator-(const TensorElement& a) {
    TensorElement r(a.mods_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend TensorElement operator*(const Rational& s, const TensorElement& t) {
    TensorElement r(t.mods_);
    if (s == 0) return r;
    for (const auto& [k, c] : t.terms_) r.terms_.emplace(k, s * c);
    return r;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return same_module_list(a.mods_, b.mods_) && a.terms_ == b.terms_;
  }

  // Extracts factor i of a single canonical term as a module element.
  ModuleElement factor_element(const TensorKey& key, std::size_t i, const Rational& c) const {
    return ModuleElement(mods_[i], key[i].gen, HElement(spec(), key[i].basis, c));
  }

 private:
  void check_compatible(const TensorElement& o) const {
    if (!same_module_list(mods_, o.mods_)) throw Error("tensor factor-module mismatch");
  }

  void accumulate_pure(const std::vector<ModuleElement>& factors, std::size_t i, TensorKey& key,
                       Rational coeff) {
    if (i == factors.size()) {
      add_term(key, coeff);
      return;
    }
    for (const auto& [g, h] : factors[i].terms())
      for (const auto& [b, c] : h.terms()) {
        key[i] = {b, g};
        accumulate_pure(factors, i + 1, key, coeff * c);
      }
  }

  std::vector<ModulePtr> mods_;
  std::map<TensorKey, Rational> terms_;
};

// Diagonal action: h acts through the iterated coproduct, one leg per factor.
inline TensorElement diagonal_act(const HElement& h, const TensorElement& t) {
  require_same_spec(h.spec(), t.spec());
  TensorElement r(t.modules());
  const auto p = static_cast<unsigned>(t.arity());
  for (const auto& [hb, hc] : h.terms()) {
    for (const auto& [legs, lc] : basis_comul_n(*h.spec(), hb, p)) {
      for (const auto& [key, c] : t.terms()) {
        TensorKey nk(key);
        for (unsigned i = 0; i < p; ++i) nk[i].basis = basis_mul(*h.spec(), legs[i], key[i].basis);
        r.add_term(nk, hc * lc * c);
      }
    }
  }
  return r;
}

inline TensorElement permute_factors(const TensorElement& t, const std::vector<std::size_t>& perm) {
  if (perm.size() != t.arity()) throw Error("permutation arity mismatch");
  std::vector<ModulePtr> mods(t.arity());
  for (std::size_t i = 0; i < perm.size(); ++i) mods[i] = t.modules()[perm[i]];
  TensorElement r(std::move(mods));
  for (const auto& [key, c] : t.terms()) {
    TensorKey nk(key.size());
    for (std::size_t i = 0; i < perm.size(); ++i) nk[i] = key[perm[i]];
    r.add_term(nk, c);
  }
  return r;
}

// The permutation tau on two-factor tensors.
inline TensorElement tau_swap(const TensorElement& t) {
  if (t.arity() != 2) throw Error("tau expects a two-factor tensor");
  return permute_factors(t, {1, 0});
}

// (12) on three-factor tensors.
inline TensorElement swap_12(const TensorElement& t) {
  if (t.arity() != 3) throw Error("(12) expects a three-factor tensor");
  return permute_factors(t, {1, 0, 2});
}

// Applies the counit to every H coefficient, giving the scalar-coefficient
// representative used for degree-zero cochains.
inline TensorElement counit_project(const TensorElement& t) {
  TensorElement r(t.modules());
  const auto& spec = *t.spec();
  auto unit = t.spec()->unit_index();
  for (const auto& [key, c] : t.terms()) {
    Rational s = c;
    TensorKey nk(key);
    for (auto& f : nk) {
      s *= basis_counit(spec, f.basis);
      f.basis = unit;
    }
    r.add_term(nk, s);
  }
  return r;
}

}  // namespace pseudalg
