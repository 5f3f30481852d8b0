#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pseudalg/module.hpp"

namespace pseudalg {

// Canonical element of H^(x)n (x)_H M, M a tensor of free modules. The store
// keeps the unique representative whose last H slot is 1: the key holds the
// first n-1 slots (basis elements) plus one canonical target term.
struct PseudoKey {
  std::vector<BasisIndex> slots;  // size n-1
  TensorKey target;
  auto operator<=>(const PseudoKey&) const = default;
};

class PseudoTensor {
 public:
  PseudoTensor() = default;
  PseudoTensor(unsigned arity, std::vector<ModulePtr> target)
      : arity_(arity), target_(std::move(target)) {
    if (arity_ < 1) throw Error("pseudotensor arity must be at least 1");
  }

  unsigned arity() const { return arity_; }
  const std::vector<ModulePtr>& target_modules() const { return target_; }
  const HopfSpecPtr& spec() const { return target_.front()->spec(); }
  const std::map<PseudoKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const PseudoKey& key, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PseudoTensor& operator+=(const PseudoTensor& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  PseudoTensor& operator-=(const PseudoTensor& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend PseudoTensor operator+(PseudoTensor a, const PseudoTensor& b) { return a += b; }
  friend PseudoTensor operator-(PseudoTensor a, const PseudoTensor& b) { return a -= b; }
  friend PseudoTensor operator-(const PseudoTensor& a) {
    PseudoTensor r(a.arity_, a.target_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
    return r;
  }
  friend PseudoTensor operator*(const Rational& s, const PseudoTensor& t) {
    PseudoTensor r(t.arity_, t.target_);
    if (s == 0) return r;
    for (const auto& [k, c] : t.terms_) r.terms_.emplace(k, s * c);
    return r;
  }

  friend bool operator==(const PseudoTensor& a, const PseudoTensor& b) {
    return a.arity_ == b.arity_ && same_module_list(a.target_, b.target_) && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const PseudoTensor& o) const {
    if (arity_ != o.arity_ || !same_module_list(target_, o.target_))
      throw Error("pseudotensor shape mismatch");
  }

  unsigned arity_ = 1;
  std::vector<ModulePtr> target_;
  std::map<PseudoKey, Rational> terms_;
};

// Unnormalized representative: a finite sum of (H slots, target) pairs.
struct RawTerm {
  std::vector<HElement> slots;  // size n
  TensorElement target;
};

struct RawTensor {
  unsigned arity = 1;
  std::vector<ModulePtr> target;
  std::vector<RawTerm> terms;

  static RawTensor from(unsigned n, std::vector<ModulePtr> mods) {
    RawTensor r;
    r.arity = n;
    r.target = std::move(mods);
    return r;
  }
  void push(std::vector<HElement> slots, TensorElement t) {
    if (slots.size() != arity) throw Error("raw term has wrong slot count");
    terms.push_back({std::move(slots), std::move(t)});
  }
};

// Rewrites a representative into the unique last-slot-1 form. Slot i < n
// picks up S of the i-th coproduct leg of the last slot; the remaining legs
// act diagonally on the target.
inline PseudoTensor normalize_last(const RawTensor& raw) {
  PseudoTensor out(raw.arity, raw.target);
  const unsigned n = raw.arity;
  for (const auto& term : raw.terms) {
    if (term.target.is_zero()) continue;
    const auto& spec = *term.target.spec();
    for (const auto& h : term.slots) require_same_spec(h.spec(), term.target.spec());

    // expand the first n-1 slots to basis level
    std::vector<BasisIndex> pre(n - 1);
    std::function<void(unsigned, Rational)> walk_pre = [&](unsigned i, Rational coeff) {
      if (i == n - 1) {
        // last slot: split into n-1+p legs
        const auto p = static_cast<unsigned>(term.target.arity());
        for (const auto& [lb, lc] : term.slots[n - 1].terms()) {
          for (const auto& [legs, k] : basis_comul_n(spec, lb, n - 1 + p)) {
            Rational c2 = coeff * lc * k;
            PseudoKey key;
            key.slots.resize(n - 1);
            int sign = 1;
            for (unsigned s = 0; s < n - 1; ++s) {
              auto [sb, sg] = basis_antipode(spec, legs[s]);
              sign *= sg;
              key.slots[s] = basis_mul(spec, pre[s], sb);
            }
            if (sign < 0) c2 = -c2;
            for (const auto& [tkey, tc] : term.target.terms()) {
              key.target = tkey;
              for (unsigned f = 0; f < p; ++f)
                key.target[f].basis = basis_mul(spec, legs[n - 1 + f], tkey[f].basis);
              out.add_term(key, c2 * tc);
            }
          }
        }
        return;
      }
      for (const auto& [b, c] : term.slots[i].terms()) {
        pre[i] = b;
        walk_pre(i + 1, coeff * c);
      }
    };
    walk_pre(0, 1);
  }
  return out;
}

inline PseudoTensor pseudo_zero(unsigned arity, std::vector<ModulePtr> target) {
  return PseudoTensor(arity, std::move(target));
}

inline PseudoTensor pseudo_pure(std::vector<HElement> slots, const TensorElement& target) {
  RawTensor raw = RawTensor::from(static_cast<unsigned>(slots.size()), target.modules());
  raw.push(std::move(slots), target);
  return normalize_last(raw);
}

// Arity-2 right-normal form (unit in the first slot), stored as second-slot
// basis -> target. Used for right actions and the second half of the
// coboundary comultiplication.
struct FirstFormKey {
  BasisIndex slot2;
  TensorKey target;
  auto operator<=>(const FirstFormKey&) const = default;
};

class FirstForm {
 public:
  FirstForm() = default;
  explicit FirstForm(std::vector<ModulePtr> target) : target_(std::move(target)) {}

  const std::vector<ModulePtr>& target_modules() const { return target_; }
  const std::map<FirstFormKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const FirstFormKey& key, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FirstForm& operator+=(const FirstForm& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  friend bool operator==(const FirstForm& a, const FirstForm& b) { return a.terms_ == b.terms_; }

 private:
  std::vector<ModulePtr> target_;
  std::map<FirstFormKey, Rational> terms_;
};

// (f (x) g) (x)_H t  ->  sum (1 (x) g S(f1)) (x)_H f2 t
inline FirstForm normalize_first(const RawTensor& raw) {
  if (raw.arity != 2) throw Error("first-slot normal form is defined for arity 2");
  FirstForm out(raw.target);
  for (const auto& term : raw.terms) {
    if (term.target.is_zero()) continue;
    const auto& spec = *term.target.spec();
    const auto p = static_cast<unsigned>(term.target.arity());
    for (const auto& [fb, fc] : term.slots[0].terms()) {
      for (const auto& [legs, k] : basis_comul_n(spec, fb, 1 + p)) {
        auto [sb, sign] = basis_antipode(spec, legs[0]);
        for (const auto& [gb, gc] : term.slots[1].terms()) {
          FirstFormKey key;
          key.slot2 = basis_mul(spec, gb, sb);
          Rational c = fc * gc * k;
          if (sign < 0) c = -c;
          for (const auto& [tkey, tc] : term.target.terms()) {
            key.target = tkey;
            for (unsigned f = 0; f < p; ++f)
              key.target[f].basis = basis_mul(spec, legs[1 + f], tkey[f].basis);
            out.add_term(key, c * tc);
          }
        }
      }
    }
  }
  return out;
}

inline FirstForm to_first_form(const PseudoTensor& x) {
  if (x.arity() != 2) throw Error("first-slot normal form is defined for arity 2");
  RawTensor raw = RawTensor::from(2, x.target_modules());
  const auto& spec = x.spec();
  for (const auto& [key, c] : x.terms()) {
    TensorElement t(x.target_modules());
    t.add_term(key.target, c);
    raw.push({HElement(spec, key.slots[0], 1), HElement::unit(spec)}, std::move(t));
  }
  return normalize_first(raw);
}

inline PseudoTensor from_first_form(const FirstForm& x) {
  std::vector<ModulePtr> mods = x.target_modules();
  if (mods.empty()) throw Error("empty first form target");
  PseudoTensor out(2, mods);
  const auto& spec = mods.front()->spec();
  RawTensor raw = RawTensor::from(2, mods);
  for (const auto& [key, c] : x.terms()) {
    TensorElement t(mods);
    t.add_term(key.target, c);
    raw.push({HElement::unit(spec), HElement(spec, key.slot2, 1)}, std::move(t));
  }
  return normalize_last(raw);
}

// Swapping the slots of a right-normal form lands directly in the canonical
// left-normal form.
inline PseudoTensor sigma_of_first(const FirstForm& x) {
  std::vector<ModulePtr> mods = x.target_modules();
  PseudoTensor out(2, mods);
  for (const auto& [key, c] : x.terms()) out.add_term({{key.slot2}, key.target}, c);
  return out;
}

// Multiplies slot i by h_i on a representative and renormalizes.
inline PseudoTensor slot_mul(const std::vector<HElement>& h, const PseudoTensor& x) {
  if (h.size() != x.arity()) throw Error("slot count mismatch");
  for (const auto& e : h) require_same_spec(e.spec(), x.spec());
  RawTensor raw = RawTensor::from(x.arity(), x.target_modules());
  const auto& spec = x.spec();
  for (const auto& [key, c] : x.terms()) {
    std::vector<HElement> slots;
    slots.reserve(x.arity());
    for (unsigned i = 0; i + 1 < x.arity(); ++i)
      slots.push_back(h_mul(h[i], HElement(spec, key.slots[i], 1)));
    slots.push_back(h[x.arity() - 1]);
    TensorElement t(x.target_modules());
    t.add_term(key.target, c);
    raw.push(std::move(slots), std::move(t));
  }
  return normalize_last(raw);
}

// sigma on the two H slots of a representative, renormalized.
inline PseudoTensor sigma_swap(const PseudoTensor& x) {
  if (x.arity() != 2) throw Error("sigma expects arity 2");
  RawTensor raw = RawTensor::from(2, x.target_modules());
  const auto& spec = x.spec();
  for (const auto& [key, c] : x.terms()) {
    TensorElement t(x.target_modules());
    t.add_term(key.target, c);
    raw.push({HElement::unit(spec), HElement(spec, key.slots[0], 1)}, std::move(t));
  }
  return normalize_last(raw);
}

// Applies an H-linear map to the stored targets. The callback receives one
// canonical target term and returns its image.
inline PseudoTensor apply_to_target(
    const PseudoTensor& x, const std::vector<ModulePtr>& new_target,
    const std::function<TensorElement(const TensorKey&)>& f) {
  PseudoTensor out(x.arity(), new_target);
  for (const auto& [key, c] : x.terms()) {
    TensorElement img = f(key.target);
    for (const auto& [tkey, tc] : img.terms()) out.add_term({key.slots, tkey}, c * tc);
  }
  return out;
}

// Drops the trailing unit slot of an arity-2 value, producing an element of
// H (x) M with the H leg carried by an h-slot factor.
inline TensorElement bracket_of(const PseudoTensor& x) {
  if (x.arity() != 2) throw Error("bracket extraction expects arity 2");
  std::vector<ModulePtr> mods;
  mods.push_back(FreeModule::h_slot(x.spec()));
  for (const auto& m : x.target_modules()) mods.push_back(m);
  TensorElement out(mods);
  for (const auto& [key, c] : x.terms()) {
    TensorKey nk;
    nk.reserve(key.target.size() + 1);
    nk.push_back({key.slots[0], 0});
    for (const auto& f : key.target) nk.push_back(f);
    out.add_term(nk, c);
  }
  return out;
}

enum class MuSign { plain, antipode };

struct MuDescriptor {
  std::size_t h_position;              // 1-based position of the H factor
  MuSign sign;
  std::vector<std::size_t> targets;    // 1-based positions in the input tensor
};

// Routes the H factor at the named position onto the named module factors,
// optionally through the antipode; two targets split through the coproduct.
inline TensorElement mu_operator(const MuDescriptor& d, const TensorElement& t) {
  const std::size_t n = t.arity();
  if (d.h_position < 1 || d.h_position > n) throw Error("malformed mu descriptor: H position");
  if (!t.modules()[d.h_position - 1]->is_h_slot())
    throw Error("malformed mu descriptor: named position is not an H factor");
  if (d.targets.empty() || d.targets.size() > 2)
    throw Error("malformed mu descriptor: needs one or two targets");
  if (d.sign == MuSign::antipode && d.targets.size() != 1)
    throw Error("malformed mu descriptor: antipode routing takes one target");
  for (auto p : d.targets)
    if (p < 1 || p > n || p == d.h_position || t.modules()[p - 1]->is_h_slot())
      throw Error("malformed mu descriptor: target position");

  std::vector<ModulePtr> mods;
  for (std::size_t i = 0; i < n; ++i)
    if (i + 1 != d.h_position) mods.push_back(t.modules()[i]);
  TensorElement out(mods);
  const auto& spec = *t.spec();

  auto out_index = [&](std::size_t pos1) {
    return pos1 < d.h_position ? pos1 - 1 : pos1 - 2;
  };

  for (const auto& [key, c] : t.terms()) {
    const BasisIndex& h = key[d.h_position - 1].basis;
    TensorKey base;
    base.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (i + 1 != d.h_position) base.push_back(key[i]);

    if (d.targets.size() == 1) {
      auto idx = out_index(d.targets[0]);
      TensorKey nk(base);
      Rational c2 = c;
      if (d.sign == MuSign::antipode) {
        auto [sb, sign] = basis_antipode(spec, h);
        nk[idx].basis = basis_mul(spec, sb, nk[idx].basis);
        if (sign < 0) c2 = -c2;
      } else {
        nk[idx].basis = basis_mul(spec, h, nk[idx].basis);
      }
      out.add_term(nk, c2);
    } else {
      auto i1 = out_index(d.targets[0]);
      auto i2 = out_index(d.targets[1]);
      for (const auto& [legs, k] : basis_comul_n(spec, h, 2)) {
        TensorKey nk(base);
        nk[i1].basis = basis_mul(spec, legs[0], nk[i1].basis);
        nk[i2].basis = basis_mul(spec, legs[1], nk[i2].basis);
        out.add_term(nk, c * k);
      }
    }
  }
  return out;
}

// mu3: the leading H factor acts through the two-fold iterated coproduct on
// all three module factors.
inline TensorElement mu3(const TensorElement& t) {
  if (t.arity() != 4 || !t.modules()[0]->is_h_slot())
    throw Error("mu3 expects an H factor followed by three module factors");
  std::vector<ModulePtr> mods(t.modules().begin() + 1, t.modules().end());
  TensorElement out(mods);
  const auto& spec = *t.spec();
  for (const auto& [key, c] : t.terms()) {
    for (const auto& [legs, k] : basis_comul_n(spec, key[0].basis, 3)) {
      TensorKey nk(key.begin() + 1, key.end());
      for (unsigned i = 0; i < 3; ++i) nk[i].basis = basis_mul(spec, legs[i], nk[i].basis);
      out.add_term(nk, c * k);
    }
  }
  return out;
}

}  // namespace pseudalg
