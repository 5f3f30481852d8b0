#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pseudalg/rational.hpp"

namespace pseudalg {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

enum class HopfKind { trivial, polynomial, group_algebra };

// Basis element of H, encoded uniformly as an index vector:
//   trivial          -> {}
//   polynomial(m)    -> m exponents (multi-degree)
//   group_algebra    -> {element id}, 0-based row of the table
using BasisIndex = std::vector<std::uint32_t>;

struct GroupTable {
  std::uint32_t order = 0;
  std::vector<std::uint32_t> mul;  // row-major order*order, 0-based ids
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> inverse;

  std::uint32_t at(std::uint32_t a, std::uint32_t b) const { return mul[a * order + b]; }
};

class HopfSpec;
using HopfSpecPtr = std::shared_ptr<const HopfSpec>;

class HopfSpec {
 public:
  static HopfSpecPtr make_trivial() {
    return std::shared_ptr<HopfSpec>(new HopfSpec(HopfKind::trivial, 0, {}));
  }

  static HopfSpecPtr make_polynomial(std::uint32_t num_generators) {
    if (num_generators < 1) throw Error("polynomial Hopf algebra needs at least one generator");
    return std::shared_ptr<HopfSpec>(new HopfSpec(HopfKind::polynomial, num_generators, {}));
  }

  // Validates associativity, two-sided identity and inverses before accepting
  // the table. identity/mul entries are 0-based here; the file format is
  // 1-based and converted by the parser.
  static HopfSpecPtr make_group(GroupTable table) {
    const std::uint32_t n = table.order;
    if (n == 0 || table.mul.size() != static_cast<std::size_t>(n) * n)
      throw Error("group table has wrong shape");
    for (auto v : table.mul)
      if (v >= n) throw Error("group table entry out of range");
    if (table.identity >= n) throw Error("group identity out of range");
    const std::uint32_t e = table.identity;
    for (std::uint32_t a = 0; a < n; ++a)
      if (table.at(e, a) != a || table.at(a, e) != a)
        throw Error("group table: designated identity is not two-sided");
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c)
          if (table.at(table.at(a, b), c) != table.at(a, table.at(b, c)))
            throw Error("group table is not associative");
    table.inverse.assign(n, n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b)
        if (table.at(a, b) == e && table.at(b, a) == e) {
          table.inverse[a] = b;
          break;
        }
      if (table.inverse[a] == n) throw Error("group table: element without inverse");
    }
    return std::shared_ptr<HopfSpec>(new HopfSpec(HopfKind::group_algebra, 0, std::move(table)));
  }

  // For tests that exercise the axiom checker on deliberately broken tables.
  static HopfSpecPtr make_group_unchecked(GroupTable table) {
    const std::uint32_t n = table.order;
    if (table.inverse.size() != n) {
      table.inverse.assign(n, 0);
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
          if (table.at(a, b) == table.identity) {
            table.inverse[a] = b;
            break;
          }
    }
    return std::shared_ptr<HopfSpec>(new HopfSpec(HopfKind::group_algebra, 0, std::move(table)));
  }

  HopfKind kind() const { return kind_; }
  std::uint32_t poly_generators() const { return m_; }
  const GroupTable& group() const { return table_; }

  bool finite_dimensional() const { return kind_ != HopfKind::polynomial; }

  std::size_t dimension() const {
    switch (kind_) {
      case HopfKind::trivial: return 1;
      case HopfKind::group_algebra: return table_.order;
      case HopfKind::polynomial: throw Error("polynomial Hopf algebra is infinite-dimensional");
    }
    return 0;
  }

  BasisIndex unit_index() const {
    switch (kind_) {
      case HopfKind::trivial: return {};
      case HopfKind::polynomial: return BasisIndex(m_, 0);
      case HopfKind::group_algebra: return {table_.identity};
    }
    return {};
  }

  bool is_unit_index(const BasisIndex& b) const { return b == unit_index(); }

  // Full basis for finite-dimensional H, bounded basis (total degree <= bound)
  // for polynomial H.
  std::vector<BasisIndex> bounded_basis(unsigned degree_bound) const {
    std::vector<BasisIndex> out;
    switch (kind_) {
      case HopfKind::trivial:
        out.push_back({});
        break;
      case HopfKind::group_algebra:
        for (std::uint32_t g = 0; g < table_.order; ++g) out.push_back({g});
        break;
      case HopfKind::polynomial: {
        BasisIndex cur(m_, 0);
        enumerate(cur, 0, degree_bound, out);
        break;
      }
    }
    return out;
  }

  bool same_as(const HopfSpec& other) const {
    if (kind_ != other.kind_) return false;
    if (kind_ == HopfKind::polynomial) return m_ == other.m_;
    if (kind_ == HopfKind::group_algebra)
      return table_.order == other.table_.order && table_.mul == other.table_.mul &&
             table_.identity == other.table_.identity;
    return true;
  }

 private:
  HopfSpec(HopfKind k, std::uint32_t m, GroupTable t) : kind_(k), m_(m), table_(std::move(t)) {}

  void enumerate(BasisIndex& cur, std::uint32_t pos, unsigned left,
                 std::vector<BasisIndex>& out) const {
    if (pos == m_) {
      out.push_back(cur);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      cur[pos] = d;
      enumerate(cur, pos + 1, left - d, out);
    }
    cur[pos] = 0;
  }

  HopfKind kind_;
  std::uint32_t m_;
  GroupTable table_;
};

inline void require_same_spec(const HopfSpecPtr& a, const HopfSpecPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw Error("hopf mismatch");
}

// In all three instance families the fixed basis is multiplicative: the
// product of two basis elements is a single basis element.
inline BasisIndex basis_mul(const HopfSpec& spec, const BasisIndex& a, const BasisIndex& b) {
  switch (spec.kind()) {
    case HopfKind::trivial: return {};
    case HopfKind::polynomial: {
      BasisIndex r(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
      return r;
    }
    case HopfKind::group_algebra: return {spec.group().at(a[0], b[0])};
  }
  return {};
}

inline unsigned basis_total_degree(const BasisIndex& a) {
  unsigned d = 0;
  for (auto e : a) d += e;
  return d;
}

// S maps a basis element to a signed basis element.
inline std::pair<BasisIndex, int> basis_antipode(const HopfSpec& spec, const BasisIndex& a) {
  switch (spec.kind()) {
    case HopfKind::trivial: return {{}, 1};
    case HopfKind::polynomial: return {a, (basis_total_degree(a) % 2 == 0) ? 1 : -1};
    case HopfKind::group_algebra: return {{spec.group().inverse[a[0]]}, 1};
  }
  return {{}, 1};
}

inline Rational basis_counit(const HopfSpec& spec, const BasisIndex& a) {
  switch (spec.kind()) {
    case HopfKind::trivial: return 1;
    case HopfKind::polynomial: return basis_total_degree(a) == 0 ? 1 : 0;
    case HopfKind::group_algebra: return 1;
  }
  return 0;
}

// n-fold iterated comultiplication of a basis element, n >= 1. Polynomial
// generators are primitive, group elements grouplike.
inline std::map<std::vector<BasisIndex>, Rational> basis_comul_n(const HopfSpec& spec,
                                                                 const BasisIndex& a, unsigned n) {
  std::map<std::vector<BasisIndex>, Rational> out;
  if (n == 0) throw Error("comul arity must be at least 1");
  switch (spec.kind()) {
    case HopfKind::trivial:
      out[std::vector<BasisIndex>(n, BasisIndex{})] = 1;
      break;
    case HopfKind::group_algebra:
      out[std::vector<BasisIndex>(n, a)] = 1;
      break;
    case HopfKind::polynomial: {
      // Split each exponent over n legs; the coefficient is the product of
      // multinomials, built up leg by leg from binomials.
      std::vector<BasisIndex> legs(n, BasisIndex(a.size(), 0));
      struct Walk {
        const BasisIndex& target;
        unsigned n;
        std::map<std::vector<BasisIndex>, Rational>& out;
        std::vector<BasisIndex>& legs;
        void var(std::size_t v, Rational coeff) {
          if (v == target.size()) {
            out[legs] += coeff;
            return;
          }
          split(v, 0, target[v], coeff);
        }
        void split(std::size_t v, unsigned leg, unsigned remaining, Rational coeff) {
          if (leg + 1 == n) {
            legs[leg][v] = remaining;
            var(v + 1, coeff);
            legs[leg][v] = 0;
            return;
          }
          for (unsigned k = 0; k <= remaining; ++k) {
            legs[leg][v] = k;
            split(v, leg + 1, remaining - k, coeff * binomial(remaining, k));
            legs[leg][v] = 0;
          }
        }
      };
      Walk w{a, n, out, legs};
      w.var(0, 1);
      break;
    }
  }
  return out;
}

// Element of H: finite basis-indexed linear combination in canonical sparse
// form (no stored zeros).
class HElement {
 public:
  HElement() = default;
  explicit HElement(HopfSpecPtr spec) : spec_(std::move(spec)) {}
  HElement(HopfSpecPtr spec, const BasisIndex& b, Rational c) : spec_(std::move(spec)) {
    add_term(b, std::move(c));
  }

  static HElement unit(const HopfSpecPtr& spec) { return HElement(spec, spec->unit_index(), 1); }
  static HElement zero(const HopfSpecPtr& spec) { return HElement(spec); }

  const HopfSpecPtr& spec() const { return spec_; }
  const std::map<BasisIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_unit() const {
    return terms_.size() == 1 && terms_.begin()->second == 1 &&
           spec_->is_unit_index(terms_.begin()->first);
  }

  void add_term(const BasisIndex& b, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  HElement& operator+=(const HElement& o) {
    require_same_spec(spec_, o.spec_);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  HElement& operator-=(const HElement& o) {
    require_same_spec(spec_, o.spec_);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
  }
  friend HElement operator+(HElement a, const HElement& b) { return a += b; }
  friend HElement operator-(HElement a, const HElement& b) { return a -= b; }
  friend HElement operator-(const HElement& a) {
    HElement r(a.spec_);
    for (const auto& [b, c] : a.terms_) r.terms_.emplace(b, -c);
    return r;
  }
  friend HElement operator*(const Rational& s, const HElement& a) {
    HElement r(a.spec_);
    if (s == 0) return r;
    for (const auto& [b, c] : a.terms_) r.terms_.emplace(b, s * c);
    return r;
  }

  friend bool operator==(const HElement& a, const HElement& b) { return a.terms_ == b.terms_; }

 private:
  HopfSpecPtr spec_;
  std::map<BasisIndex, Rational> terms_;
};

inline HElement h_mul(const HElement& a, const HElement& b) {
  require_same_spec(a.spec(), b.spec());
  HElement r(a.spec());
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) r.add_term(basis_mul(*a.spec(), ba, bb), ca * cb);
  return r;
}

inline HElement h_antipode(const HElement& a) {
  HElement r(a.spec());
  for (const auto& [b, c] : a.terms()) {
    auto [sb, sign] = basis_antipode(*a.spec(), b);
    r.add_term(sb, sign > 0 ? c : -c);
  }
  return r;
}

inline Rational h_counit(const HElement& a) {
  Rational r = 0;
  for (const auto& [b, c] : a.terms()) r += basis_counit(*a.spec(), b) * c;
  return r;
}

// Element of H (x) H.
class H2Element {
 public:
  H2Element() = default;
  explicit H2Element(HopfSpecPtr spec) : spec_(std::move(spec)) {}

  static H2Element pure(const HElement& f, const HElement& g) {
    require_same_spec(f.spec(), g.spec());
    H2Element r(f.spec());
    for (const auto& [bf, cf] : f.terms())
      for (const auto& [bg, cg] : g.terms()) r.add_term(bf, bg, cf * cg);
    return r;
  }

  const HopfSpecPtr& spec() const { return spec_; }
  const std::map<std::pair<BasisIndex, BasisIndex>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BasisIndex& b1, const BasisIndex& b2, Rational c) {
    if (c == 0) return;
    auto key = std::make_pair(b1, b2);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  H2Element& operator+=(const H2Element& o) {
    require_same_spec(spec_, o.spec_);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  H2Element& operator-=(const H2Element& o) {
    require_same_spec(spec_, o.spec_);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend H2Element operator+(H2Element a, const H2Element& b) { return a += b; }
  friend H2Element operator-(H2Element a, const H2Element& b) { return a -= b; }
  friend bool operator==(const H2Element& a, const H2Element& b) { return a.terms_ == b.terms_; }

 private:
  HopfSpecPtr spec_;
  std::map<std::pair<BasisIndex, BasisIndex>, Rational> terms_;
};

// Element of H^(x)n for the axiom checker and iterated coproducts.
class HTensor {
 public:
  HTensor() = default;
  HTensor(HopfSpecPtr spec, unsigned n) : spec_(std::move(spec)), n_(n) {}

  const HopfSpecPtr& spec() const { return spec_; }
  unsigned arity() const { return n_; }
  const std::map<std::vector<BasisIndex>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const std::vector<BasisIndex>& key, Rational c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(c));
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  HTensor& operator-=(const HTensor& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend bool operator==(const HTensor& a, const HTensor& b) { return a.terms_ == b.terms_; }

 private:
  HopfSpecPtr spec_;
  unsigned n_ = 1;
  std::map<std::vector<BasisIndex>, Rational> terms_;
};

inline H2Element h_comul(const HElement& a) {
  H2Element r(a.spec());
  for (const auto& [b, c] : a.terms())
    for (const auto& [legs, k] : basis_comul_n(*a.spec(), b, 2)) r.add_term(legs[0], legs[1], c * k);
  return r;
}

// Delta^(k): H -> H^(x)(k+1) with Delta^(0) = id. Delta^(-1) is the counit
// and has its own function.
inline HTensor h_iterated_comul(const HElement& a, unsigned k) {
  HTensor r(a.spec(), k + 1);
  for (const auto& [b, c] : a.terms())
    for (const auto& [legs, m] : basis_comul_n(*a.spec(), b, k + 1)) r.add_term(legs, c * m);
  return r;
}

// Fourier transform F(f(x)g) = f S(g1) (x) g2 and its inverse f g1 (x) g2.
inline H2Element fourier(const H2Element& x) {
  H2Element r(x.spec());
  for (const auto& [key, c] : x.terms()) {
    for (const auto& [legs, k] : basis_comul_n(*x.spec(), key.second, 2)) {
      auto [sb, sign] = basis_antipode(*x.spec(), legs[0]);
      r.add_term(basis_mul(*x.spec(), key.first, sb), legs[1], (sign > 0 ? c : -c) * k);
    }
  }
  return r;
}

inline H2Element fourier_inv(const H2Element& x) {
  H2Element r(x.spec());
  for (const auto& [key, c] : x.terms())
    for (const auto& [legs, k] : basis_comul_n(*x.spec(), key.second, 2))
      r.add_term(basis_mul(*x.spec(), key.first, legs[0]), legs[1], c * k);
  return r;
}

struct HopfAxiomFailure {
  std::string axiom;
  std::string witness;
};

struct HopfAxiomReport {
  std::vector<HopfAxiomFailure> failures;
  bool pass() const { return failures.empty(); }
};

// Desk-scale verification of the Hopf axioms on the bounded basis:
// associativity, unit, coassociativity, counit, antipode convolution,
// antipode anti-homomorphism and cocommutativity.
inline HopfAxiomReport check_hopf_axioms(const HopfSpecPtr& spec, unsigned degree_bound = 4) {
  HopfAxiomReport rep;
  auto basis = spec->bounded_basis(degree_bound);
  auto elem = [&](const BasisIndex& b) { return HElement(spec, b, 1); };
  auto name = [&](const BasisIndex& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
  };
  const HElement one = HElement::unit(spec);

  for (const auto& a : basis) {
    if (!(h_mul(one, elem(a)) == elem(a)) || !(h_mul(elem(a), one) == elem(a)))
      rep.failures.push_back({"unit", name(a)});

    // counit laws (eps (x) id)Delta = id = (id (x) eps)Delta
    HElement left(spec), right(spec);
    for (const auto& [key, c] : h_comul(elem(a)).terms()) {
      left.add_term(key.second, c * basis_counit(*spec, key.first));
      right.add_term(key.first, c * basis_counit(*spec, key.second));
    }
    if (!(left == elem(a)) || !(right == elem(a))) rep.failures.push_back({"counit", name(a)});

    // coassociativity and cocommutativity
    HTensor lhs(spec, 3), rhs(spec, 3);
    for (const auto& [key, c] : h_comul(elem(a)).terms()) {
      for (const auto& [legs, k] : basis_comul_n(*spec, key.first, 2))
        lhs.add_term({legs[0], legs[1], key.second}, c * k);
      for (const auto& [legs, k] : basis_comul_n(*spec, key.second, 2))
        rhs.add_term({key.first, legs[0], legs[1]}, c * k);
    }
    if (!(lhs == rhs)) rep.failures.push_back({"coassociativity", name(a)});

    H2Element delta = h_comul(elem(a));
    H2Element flipped(spec);
    for (const auto& [key, c] : delta.terms()) flipped.add_term(key.second, key.first, c);
    if (!(delta == flipped)) rep.failures.push_back({"cocommutativity", name(a)});

    // convolution identity S(a1)a2 = eps(a)1 = a1 S(a2)
    HElement conv_l(spec), conv_r(spec);
    for (const auto& [key, c] : delta.terms()) {
      auto [s1, sign1] = basis_antipode(*spec, key.first);
      conv_l.add_term(basis_mul(*spec, s1, key.second), sign1 > 0 ? c : -c);
      auto [s2, sign2] = basis_antipode(*spec, key.second);
      conv_r.add_term(basis_mul(*spec, key.first, s2), sign2 > 0 ? c : -c);
    }
    HElement expect = basis_counit(*spec, a) * one;
    if (!(conv_l == expect) || !(conv_r == expect))
      rep.failures.push_back({"antipode convolution", name(a)});
  }

  for (const auto& a : basis)
    for (const auto& b : basis) {
      if (!(h_antipode(h_mul(elem(a), elem(b))) == h_mul(h_antipode(elem(b)), h_antipode(elem(a)))))
        rep.failures.push_back({"antipode anti-homomorphism", name(a) + "," + name(b)});
      for (const auto& c : basis)
        if (!(h_mul(h_mul(elem(a), elem(b)), elem(c)) == h_mul(elem(a), h_mul(elem(b), elem(c))))) {
          rep.failures.push_back({"associativity", name(a) + "," + name(b) + "," + name(c)});
          goto next_pair;  // one witness per pair is enough
        }
    next_pair:;
    }
  return rep;
}

}  // namespace pseudalg
