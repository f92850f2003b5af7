#pragma once

// Ring structure layer: the constructor grammar, built ring values, element
// arithmetic and regularity/unit decisions.
//
// A built Ring is a flat list of components.  Elements are tuples with one
// value per component.  Infinite components (Z and Z localized away from a
// finite prime set) keep exact integer values; finite components are either
// residue rings Z/n or table-backed rings (explicit tables, quotients of
// tables, idealizations R(+)M).

#include "phir/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace phir {

// ---------------------------------------------------------------------------
// Element values

// One slot per ring component.  `den` is only meaningful for localized
// components (canonical fraction, den > 0, gcd(num, den) = 1); every other
// kind keeps den = 1 and stores its residue/index/integer in `num`.
struct CompVal {
  Int num = 0;
  Int den = 1;
  bool operator==(const CompVal& o) const { return num == o.num && den == o.den; }
  bool operator!=(const CompVal& o) const { return !(*this == o); }
};

struct Element {
  std::vector<CompVal> parts;
  bool operator==(const Element& o) const { return parts == o.parts; }
  bool operator!=(const Element& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Surface specification (canonical AST after build)

struct RingSpec;

struct ZSpec {};
struct ZnSpec {
  long long n = 0;
};
struct LocSpec {
  std::vector<long long> primes;  // sorted, distinct
};
struct TableSpec {
  uint32_t size = 0;
  std::vector<uint32_t> add, mul;  // row-major size*size
  uint32_t zero = 0, one = 0;
  std::vector<std::string> labels;  // optional; defaults to indices
};
struct ProductSpec {
  std::vector<RingSpec> parts;
};
struct QuotientSpec {
  std::shared_ptr<RingSpec> base;
  std::vector<std::vector<Int>> gens;  // flat integer tuples in base coordinates
};
struct IdealizationSpec {
  std::shared_ptr<RingSpec> base;
  std::vector<std::vector<Int>> modGens;  // empty => M = R (regular module)
};
// Surface form loc(ring, {k, ...}); canonicalizes to LocSpec components.
struct LocalizeSpec {
  std::shared_ptr<RingSpec> base;
  std::vector<long long> gens;
};

struct RingSpec {
  std::variant<ZSpec, ZnSpec, LocSpec, TableSpec, ProductSpec, QuotientSpec, IdealizationSpec,
               LocalizeSpec>
      v;
};

inline RingSpec spec_z() { return RingSpec{ZSpec{}}; }
inline RingSpec spec_zn(long long n) { return RingSpec{ZnSpec{n}}; }

inline bool spec_equal(const RingSpec& a, const RingSpec& b);

inline bool spec_equal_vec(const std::vector<RingSpec>& a, const std::vector<RingSpec>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!spec_equal(a[i], b[i])) return false;
  return true;
}

inline bool spec_equal(const RingSpec& a, const RingSpec& b) {
  if (a.v.index() != b.v.index()) return false;
  if (std::holds_alternative<ZSpec>(a.v)) return true;
  if (auto* x = std::get_if<ZnSpec>(&a.v)) return x->n == std::get<ZnSpec>(b.v).n;
  if (auto* x = std::get_if<LocSpec>(&a.v)) return x->primes == std::get<LocSpec>(b.v).primes;
  if (auto* x = std::get_if<TableSpec>(&a.v)) {
    const auto& y = std::get<TableSpec>(b.v);
    return x->size == y.size && x->add == y.add && x->mul == y.mul && x->zero == y.zero &&
           x->one == y.one;
  }
  if (auto* x = std::get_if<ProductSpec>(&a.v))
    return spec_equal_vec(x->parts, std::get<ProductSpec>(b.v).parts);
  if (auto* x = std::get_if<QuotientSpec>(&a.v)) {
    const auto& y = std::get<QuotientSpec>(b.v);
    return spec_equal(*x->base, *y.base) && x->gens == y.gens;
  }
  if (auto* x = std::get_if<IdealizationSpec>(&a.v)) {
    const auto& y = std::get<IdealizationSpec>(b.v);
    return spec_equal(*x->base, *y.base) && x->modGens == y.modGens;
  }
  if (auto* x = std::get_if<LocalizeSpec>(&a.v)) {
    const auto& y = std::get<LocalizeSpec>(b.v);
    return spec_equal(*x->base, *y.base) && x->gens == y.gens;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Built components

struct Ring;

struct FiniteTables {
  uint32_t size = 0;
  std::vector<uint32_t> add, mul, neg;
  uint32_t zero = 0, one = 0;
  std::vector<std::string> labels;
  std::vector<char> isUnit;

  uint32_t plus(uint32_t i, uint32_t j) const { return add[size_t(i) * size + j]; }
  uint32_t times(uint32_t i, uint32_t j) const { return mul[size_t(i) * size + j]; }

  void finish() {
    neg.assign(size, 0);
    for (uint32_t i = 0; i < size; ++i)
      for (uint32_t j = 0; j < size; ++j)
        if (plus(i, j) == zero) neg[i] = j;
    isUnit.assign(size, 0);
    for (uint32_t i = 0; i < size; ++i)
      for (uint32_t j = 0; j < size; ++j)
        if (times(i, j) == one) {
          isUnit[i] = 1;
          break;
        }
    if (labels.empty()) {
      labels.resize(size);
      for (uint32_t i = 0; i < size; ++i) labels[i] = std::to_string(i);
    }
  }
};

struct ZComp {};
struct ZnComp {
  long long n = 0;
};
struct LocComp {
  std::vector<long long> primes;  // sorted, distinct
};
struct TableComp {
  FiniteTables t;
  std::shared_ptr<const RingSpec> provenance;  // canonical surface expression
};
// Idealization R(+)M.  Elements are pairs (r, m) encoded as
// index = baseIndex * numCosets + cosetIndex; M = base/J as a module.
struct IdealComp {
  std::shared_ptr<const Ring> base;
  std::vector<Element> baseElems;
  std::vector<uint32_t> cosetOf;   // base index -> module coset
  std::vector<uint32_t> cosetRep;  // coset -> representative base index
  uint32_t numCosets = 0;
  FiniteTables t;
  std::shared_ptr<const RingSpec> provenance;
  bool regularModule = true;
  std::vector<char> baseInZM;  // base index r: true iff r*m = 0 for some coset m != 0

  uint32_t pairIndex(uint32_t r, uint32_t m) const { return r * numCosets + m; }
  uint32_t basePart(uint32_t idx) const { return idx / numCosets; }
  uint32_t modPart(uint32_t idx) const { return idx % numCosets; }
};

using Comp = std::variant<ZComp, ZnComp, LocComp, TableComp, IdealComp>;

struct Ring {
  std::vector<Comp> comps;
  RingSpec canon;
};

inline bool ring_equal(const Ring& a, const Ring& b) { return spec_equal(a.canon, b.canon); }

// ---------------------------------------------------------------------------
// Component-level operations

inline const FiniteTables* comp_tables(const Comp& c) {
  if (auto* t = std::get_if<TableComp>(&c)) return &t->t;
  if (auto* t = std::get_if<IdealComp>(&c)) return &t->t;
  return nullptr;
}

inline bool comp_finite(const Comp& c) {
  return !std::holds_alternative<ZComp>(c) && !std::holds_alternative<LocComp>(c);
}

// 0 means infinite.
inline long long comp_size(const Comp& c) {
  if (auto* z = std::get_if<ZnComp>(&c)) return z->n;
  if (auto* t = comp_tables(c)) return t->size;
  return 0;
}

inline CompVal comp_zero(const Comp& c) {
  if (auto* t = comp_tables(c)) return CompVal{Int(t->zero), 1};
  return CompVal{0, 1};
}

inline CompVal comp_one(const Comp& c) {
  if (auto* t = comp_tables(c)) return CompVal{Int(t->one), 1};
  return CompVal{1, 1};
}

inline CompVal loc_reduce(Int num, Int den, const LocComp&) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = int_gcd(int_abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return CompVal{num, den};
}

inline uint32_t val_index(const CompVal& v) { return uint32_t(v.num.get_ui()); }

inline CompVal comp_add(const Comp& c, const CompVal& x, const CompVal& y) {
  if (std::holds_alternative<ZComp>(c)) return CompVal{x.num + y.num, 1};
  if (auto* z = std::get_if<ZnComp>(&c)) return CompVal{(x.num + y.num) % z->n, 1};
  if (auto* l = std::get_if<LocComp>(&c))
    return loc_reduce(x.num * y.den + y.num * x.den, x.den * y.den, *l);
  auto* t = comp_tables(c);
  return CompVal{Int(t->plus(val_index(x), val_index(y))), 1};
}

inline CompVal comp_mul(const Comp& c, const CompVal& x, const CompVal& y) {
  if (std::holds_alternative<ZComp>(c)) return CompVal{x.num * y.num, 1};
  if (auto* z = std::get_if<ZnComp>(&c)) return CompVal{(x.num * y.num) % z->n, 1};
  if (auto* l = std::get_if<LocComp>(&c)) return loc_reduce(x.num * y.num, x.den * y.den, *l);
  auto* t = comp_tables(c);
  return CompVal{Int(t->times(val_index(x), val_index(y))), 1};
}

inline CompVal comp_neg(const Comp& c, const CompVal& x) {
  if (std::holds_alternative<ZComp>(c)) return CompVal{-x.num, 1};
  if (auto* z = std::get_if<ZnComp>(&c)) return CompVal{(z->n - x.num) % z->n, 1};
  if (auto* l = std::get_if<LocComp>(&c)) return CompVal{-x.num, x.den};
  auto* t = comp_tables(c);
  return CompVal{Int(t->neg[val_index(x)]), 1};
}

inline bool comp_is_zero(const Comp& c, const CompVal& x) {
  if (auto* t = comp_tables(c)) return val_index(x) == t->zero;
  return x.num == 0;
}

// Regular = Ann(a) = (0).  On finite components this coincides with being a
// unit; on Z and its localizations it is "numerator nonzero".
inline bool comp_is_unit(const Comp& c, const CompVal& x) {
  if (std::holds_alternative<ZComp>(c)) return x.num == 1 || x.num == -1;
  if (auto* z = std::get_if<ZnComp>(&c)) return int_gcd(x.num, Int(z->n)) == 1;
  if (auto* l = std::get_if<LocComp>(&c))
    return x.num != 0 && strip_primes(x.num, l->primes) == 1;
  auto* t = comp_tables(c);
  return t->isUnit[val_index(x)] != 0;
}

inline bool comp_is_regular(const Comp& c, const CompVal& x) {
  if (std::holds_alternative<ZComp>(c)) return x.num != 0;
  if (std::holds_alternative<LocComp>(c)) return x.num != 0;
  return comp_is_unit(c, x);
}

inline CompVal comp_elem(const Comp& c, long long i) {
  // i-th element of a finite component
  return CompVal{Int(i), 1};
}

inline long long comp_index(const Comp& c, const CompVal& x) { return x.num.get_si(); }

// Image of the integer k under the canonical map Z -> component.
inline CompVal comp_from_int(const Comp& c, const Int& k) {
  if (std::holds_alternative<ZComp>(c)) return CompVal{k, 1};
  if (auto* z = std::get_if<ZnComp>(&c)) {
    Int r = k % z->n;
    if (r < 0) r += z->n;
    return CompVal{r, 1};
  }
  if (std::holds_alternative<LocComp>(c)) return CompVal{k, 1};
  auto* t = comp_tables(c);
  // additive order of 1 divides the table size
  uint32_t ord = 1, acc = t->one;
  while (acc != t->zero) {
    acc = t->plus(acc, t->one);
    ++ord;
  }
  Int r = k % ord;
  if (r < 0) r += ord;
  uint32_t out = t->zero;
  for (Int i = 0; i < r; ++i) out = t->plus(out, t->one);
  return CompVal{Int(out), 1};
}

inline bool comp_val_ok(const Comp& c, const CompVal& x) {
  if (std::holds_alternative<ZComp>(c)) return x.den == 1;
  if (auto* z = std::get_if<ZnComp>(&c)) return x.den == 1 && x.num >= 0 && x.num < z->n;
  if (auto* l = std::get_if<LocComp>(&c)) {
    if (x.den <= 0) return false;
    if (int_gcd(int_abs(x.num), x.den) != 1) return false;
    return strip_primes(x.den, l->primes) == 1;
  }
  auto* t = comp_tables(c);
  return x.den == 1 && x.num >= 0 && x.num < t->size;
}

inline std::string comp_val_str(const Comp& c, const CompVal& x) {
  if (auto* t = comp_tables(c)) return t->labels[val_index(x)];
  if (x.den != 1) return x.num.get_str() + "/" + x.den.get_str();
  return x.num.get_str();
}

// ---------------------------------------------------------------------------
// Ring-level operations

inline size_t ring_arity(const Ring& R) { return R.comps.size(); }

inline Element ring_zero(const Ring& R) {
  Element e;
  for (const auto& c : R.comps) e.parts.push_back(comp_zero(c));
  return e;
}

inline Element ring_one(const Ring& R) {
  Element e;
  for (const auto& c : R.comps) e.parts.push_back(comp_one(c));
  return e;
}

inline void check_element(const Ring& R, const Element& x) {
  if (x.parts.size() != R.comps.size())
    fail(Errc::ElementNotInRing, "element arity does not match ring");
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_val_ok(R.comps[i], x.parts[i]))
      fail(Errc::ElementNotInRing, "component value out of range");
}

inline Element ring_add(const Ring& R, const Element& x, const Element& y) {
  Element e;
  for (size_t i = 0; i < R.comps.size(); ++i)
    e.parts.push_back(comp_add(R.comps[i], x.parts[i], y.parts[i]));
  return e;
}

inline Element ring_mul(const Ring& R, const Element& x, const Element& y) {
  Element e;
  for (size_t i = 0; i < R.comps.size(); ++i)
    e.parts.push_back(comp_mul(R.comps[i], x.parts[i], y.parts[i]));
  return e;
}

inline Element ring_neg(const Ring& R, const Element& x) {
  Element e;
  for (size_t i = 0; i < R.comps.size(); ++i)
    e.parts.push_back(comp_neg(R.comps[i], x.parts[i]));
  return e;
}

inline Element ring_sub(const Ring& R, const Element& x, const Element& y) {
  return ring_add(R, x, ring_neg(R, y));
}

inline Element ring_pow(const Ring& R, Element x, unsigned long e) {
  Element acc = ring_one(R);
  for (unsigned long i = 0; i < e; ++i) acc = ring_mul(R, acc, x);
  return acc;
}

inline bool ring_is_zero(const Ring& R, const Element& x) {
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_is_zero(R.comps[i], x.parts[i])) return false;
  return true;
}

inline bool is_finite(const Ring& R) {
  for (const auto& c : R.comps)
    if (!comp_finite(c)) return false;
  return true;
}

// 0 when infinite.
inline long long ring_size(const Ring& R) {
  long long s = 1;
  for (const auto& c : R.comps) {
    long long k = comp_size(c);
    if (k == 0) return 0;
    s *= k;
  }
  return s;
}

inline Element element_by_index(const Ring& R, long long idx) {
  Element e;
  e.parts.resize(R.comps.size());
  for (size_t i = R.comps.size(); i-- > 0;) {
    long long k = comp_size(R.comps[i]);
    e.parts[i] = comp_elem(R.comps[i], idx % k);
    idx /= k;
  }
  return e;
}

inline long long index_of_element(const Ring& R, const Element& x) {
  long long idx = 0;
  for (size_t i = 0; i < R.comps.size(); ++i)
    idx = idx * comp_size(R.comps[i]) + comp_index(R.comps[i], x.parts[i]);
  return idx;
}

inline std::vector<Element> ring_elements(const Ring& R) {
  long long n = ring_size(R);
  if (n == 0) fail(Errc::UnboundedEnumeration, "cannot enumerate an infinite ring");
  std::vector<Element> out;
  out.reserve(size_t(n));
  for (long long i = 0; i < n; ++i) out.push_back(element_by_index(R, i));
  return out;
}

// regular <=> every component is regular
inline bool is_regular(const Ring& R, const Element& x) {
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_is_regular(R.comps[i], x.parts[i])) return false;
  return true;
}

inline bool is_unit(const Ring& R, const Element& x) {
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_is_unit(R.comps[i], x.parts[i])) return false;
  return true;
}

inline bool is_zerodivisor(const Ring& R, const Element& x) { return !is_regular(R, x); }

// Explicit zerodivisor set of a finite ring.
inline std::vector<Element> zerodivisors(const Ring& R) {
  std::vector<Element> out;
  for (const auto& e : ring_elements(R))
    if (!is_regular(R, e)) out.push_back(e);
  return out;
}

inline Element element_from_int(const Ring& R, const Int& k) {
  Element e;
  for (const auto& c : R.comps) e.parts.push_back(comp_from_int(c, k));
  return e;
}

// ---------------------------------------------------------------------------
// Flat integer tuples <-> elements (the CLI element literal encoding).
// Each Z/Zn/Loc/Table component consumes one integer; an idealization
// component consumes one tuple for the base followed by one for the module.

inline size_t comp_flat_arity(const Comp& c);

inline size_t ring_flat_arity(const Ring& R) {
  size_t n = 0;
  for (const auto& c : R.comps) n += comp_flat_arity(c);
  return n;
}

inline size_t comp_flat_arity(const Comp& c) {
  if (auto* ic = std::get_if<IdealComp>(&c)) return 2 * ring_flat_arity(*ic->base);
  return 1;
}

inline CompVal comp_from_flat(const Comp& c, const std::vector<Int>& flat, size_t& pos);

inline Element element_from_flat(const Ring& R, const std::vector<Int>& flat, size_t& pos) {
  Element e;
  for (const auto& c : R.comps) e.parts.push_back(comp_from_flat(c, flat, pos));
  return e;
}

inline CompVal comp_from_flat(const Comp& c, const std::vector<Int>& flat, size_t& pos) {
  if (auto* ic = std::get_if<IdealComp>(&c)) {
    Element r = element_from_flat(*ic->base, flat, pos);
    Element m = element_from_flat(*ic->base, flat, pos);
    long long ri = index_of_element(*ic->base, r);
    long long mi = index_of_element(*ic->base, m);
    return CompVal{Int(ic->pairIndex(uint32_t(ri), ic->cosetOf[size_t(mi)])), 1};
  }
  if (pos >= flat.size()) fail(Errc::ElementNotInRing, "element tuple too short");
  const Int& k = flat[pos++];
  if (auto* t = std::get_if<TableComp>(&c)) {
    if (k < 0 || k >= t->t.size) fail(Errc::ElementNotInRing, "table index out of range");
    return CompVal{k, 1};
  }
  return comp_from_int(c, k);
}

inline Element element_from_ints(const Ring& R, const std::vector<Int>& flat) {
  if (flat.size() != ring_flat_arity(R))
    fail(Errc::ElementNotInRing, "element tuple arity does not match ring");
  size_t pos = 0;
  return element_from_flat(R, flat, pos);
}

inline std::string element_to_string(const Ring& R, const Element& x) {
  if (R.comps.size() == 1) return comp_val_str(R.comps[0], x.parts[0]);
  std::string s = "(";
  for (size_t i = 0; i < R.comps.size(); ++i) {
    if (i) s += ",";
    s += comp_val_str(R.comps[i], x.parts[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Canonical spec printing (the surface syntax of the ring DSL)

inline std::string flat_tuple_str(const std::vector<Int>& t) {
  if (t.size() == 1) return t[0].get_str();
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += t[i].get_str();
  }
  return s + ")";
}

inline std::string gens_str(const std::vector<std::vector<Int>>& gens) {
  std::string s = "gen";
  for (size_t i = 0; i < gens.size(); ++i) {
    s += i ? ", " : " ";
    s += flat_tuple_str(gens[i]);
  }
  return s;
}

inline std::string spec_to_string(const RingSpec& sp) {
  if (std::holds_alternative<ZSpec>(sp.v)) return "Z";
  if (auto* x = std::get_if<ZnSpec>(&sp.v)) return "Z/" + std::to_string(x->n);
  if (auto* x = std::get_if<LocSpec>(&sp.v)) {
    std::string s = "loc(Z, {";
    for (size_t i = 0; i < x->primes.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(x->primes[i]);
    }
    return s + "})";
  }
  if (auto* x = std::get_if<TableSpec>(&sp.v)) return "table#" + std::to_string(x->size);
  if (auto* x = std::get_if<ProductSpec>(&sp.v)) {
    std::string s;
    for (size_t i = 0; i < x->parts.size(); ++i) {
      if (i) s += " x ";
      s += spec_to_string(x->parts[i]);
    }
    return s;
  }
  if (auto* x = std::get_if<QuotientSpec>(&sp.v))
    return "quot(" + spec_to_string(*x->base) + ", " + gens_str(x->gens) + ")";
  if (auto* x = std::get_if<LocalizeSpec>(&sp.v)) {
    std::string s = "loc(" + spec_to_string(*x->base) + ", {";
    for (size_t i = 0; i < x->gens.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(x->gens[i]);
    }
    return s + "})";
  }
  auto& x = std::get<IdealizationSpec>(sp.v);
  std::string s = "idealize(" + spec_to_string(*x.base);
  if (!x.modGens.empty()) s += ", mod " + gens_str(x.modGens);
  return s + ")";
}

inline std::string ring_to_string(const Ring& R) { return spec_to_string(R.canon); }

}  // namespace phir
