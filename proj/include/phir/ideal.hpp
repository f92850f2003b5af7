#pragma once

// Ideal layer: canonical per-component representations with decidable
// membership, equality and arithmetic (sum, product, power, intersection,
// radical, colon, annihilator) plus ideal enumeration.
//
// PIR components (Z, Z/n, localized Z) carry a single canonical generator:
//   Z    : g >= 0                       (0 = zero ideal, 1 = full ring)
//   Z/n  : g = 0 (zero ideal) or g | n with 1 <= g < n
//   loc  : g >= 0 coprime to the inverted primes
// Table-backed components carry the explicit (sorted) element subset.

#include "phir/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace phir {

struct Ideal {
  struct Cyclic {
    Int g = 0;
    bool operator==(const Cyclic& o) const { return g == o.g; }
  };
  using CompRep = std::variant<Cyclic, std::vector<uint32_t>>;
  std::vector<CompRep> comps;

  bool operator==(const Ideal& o) const { return comps == o.comps; }
  bool operator!=(const Ideal& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Per-component helpers

inline Int cyc_canon(const Comp& c, Int raw) {
  raw = int_abs(raw);
  if (auto* z = std::get_if<ZnComp>(&c)) {
    Int g = int_gcd(raw, Int(z->n));
    if (g == z->n) return 0;
    return g;
  }
  if (auto* l = std::get_if<LocComp>(&c)) return strip_primes(raw, l->primes);
  return raw;
}

// Generator used in arithmetic; the stored 0 of Z/n means the zero ideal <n>.
inline Int cyc_eff(const Comp& c, const Int& g) {
  if (auto* z = std::get_if<ZnComp>(&c))
    if (g == 0) return Int(z->n);
  return g;
}

inline Int cyc_uncanon(const Comp& c, const Int& eff) { return cyc_canon(c, eff); }

inline std::vector<uint32_t> table_closure(const FiniteTables& t, std::vector<uint32_t> seeds) {
  std::vector<char> in(t.size, 0);
  in[t.zero] = 1;
  for (uint32_t s : seeds) in[s] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<uint32_t> cur;
    for (uint32_t i = 0; i < t.size; ++i)
      if (in[i]) cur.push_back(i);
    for (uint32_t x : cur) {
      for (uint32_t y : cur) {
        uint32_t s = t.plus(x, y);
        if (!in[s]) {
          in[s] = 1;
          changed = true;
        }
      }
      for (uint32_t r = 0; r < t.size; ++r) {
        uint32_t p = t.times(x, r);
        if (!in[p]) {
          in[p] = 1;
          changed = true;
        }
      }
    }
  }
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < t.size; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

// Greedy minimal generating subset of a table-component ideal (deterministic).
inline std::vector<uint32_t> table_min_gens(const FiniteTables& t, const std::vector<uint32_t>& set) {
  std::vector<uint32_t> gens;
  std::vector<uint32_t> have = table_closure(t, {});
  for (uint32_t x : set) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    auto g2 = gens;
    have = table_closure(t, g2);
    if (have == set) break;
  }
  return gens;
}

inline Ideal::CompRep comp_ideal_zero(const Comp& c) {
  if (auto* t = comp_tables(c)) return std::vector<uint32_t>{t->zero};
  return Ideal::Cyclic{0};
}

inline Ideal::CompRep comp_ideal_full(const Comp& c) {
  if (auto* t = comp_tables(c)) {
    std::vector<uint32_t> all(t->size);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  return Ideal::Cyclic{1};
}

inline bool comp_ideal_is_full(const Comp& c, const Ideal::CompRep& r) {
  if (auto* s = std::get_if<std::vector<uint32_t>>(&r)) return s->size() == comp_tables(c)->size;
  return std::get<Ideal::Cyclic>(r).g == 1;
}

inline bool comp_ideal_is_zero(const Comp& c, const Ideal::CompRep& r) {
  if (auto* s = std::get_if<std::vector<uint32_t>>(&r)) return s->size() == 1;
  const Int& g = std::get<Ideal::Cyclic>(r).g;
  if (std::holds_alternative<ZnComp>(c)) return g == 0;
  return g == 0;
}

inline bool comp_ideal_contains(const Comp& c, const Ideal::CompRep& r, const CompVal& x) {
  if (auto* s = std::get_if<std::vector<uint32_t>>(&r))
    return std::binary_search(s->begin(), s->end(), val_index(x));
  Int eff = cyc_eff(c, std::get<Ideal::Cyclic>(r).g);
  if (std::holds_alternative<LocComp>(c)) {
    if (eff == 0) return x.num == 0;
    return divides(eff, x.num);  // denominator is a unit, generator coprime to it
  }
  return divides(eff, x.num);
}

// I subseteq J per component
inline bool comp_ideal_subset(const Comp& c, const Ideal::CompRep& I, const Ideal::CompRep& J) {
  if (auto* si = std::get_if<std::vector<uint32_t>>(&I)) {
    const auto& sj = std::get<std::vector<uint32_t>>(J);
    return std::includes(sj.begin(), sj.end(), si->begin(), si->end());
  }
  Int gi = cyc_eff(c, std::get<Ideal::Cyclic>(I).g);
  Int gj = cyc_eff(c, std::get<Ideal::Cyclic>(J).g);
  return divides(gj, gi);
}

inline Ideal::CompRep comp_ideal_sum(const Comp& c, const Ideal::CompRep& a, const Ideal::CompRep& b) {
  if (auto* sa = std::get_if<std::vector<uint32_t>>(&a)) {
    const auto& sb = std::get<std::vector<uint32_t>>(b);
    std::vector<uint32_t> u;
    std::set_union(sa->begin(), sa->end(), sb.begin(), sb.end(), std::back_inserter(u));
    return table_closure(*comp_tables(c), u);
  }
  Int ga = cyc_eff(c, std::get<Ideal::Cyclic>(a).g);
  Int gb = cyc_eff(c, std::get<Ideal::Cyclic>(b).g);
  return Ideal::Cyclic{cyc_canon(c, int_gcd(ga, gb))};
}

inline Ideal::CompRep comp_ideal_product(const Comp& c, const Ideal::CompRep& a, const Ideal::CompRep& b) {
  if (auto* sa = std::get_if<std::vector<uint32_t>>(&a)) {
    const auto& sb = std::get<std::vector<uint32_t>>(b);
    const auto* t = comp_tables(c);
    std::vector<uint32_t> seeds;
    for (uint32_t x : *sa)
      for (uint32_t y : sb) seeds.push_back(t->times(x, y));
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return table_closure(*t, seeds);
  }
  Int ga = cyc_eff(c, std::get<Ideal::Cyclic>(a).g);
  Int gb = cyc_eff(c, std::get<Ideal::Cyclic>(b).g);
  return Ideal::Cyclic{cyc_canon(c, ga * gb)};
}

inline Ideal::CompRep comp_ideal_intersect(const Comp& c, const Ideal::CompRep& a, const Ideal::CompRep& b) {
  if (auto* sa = std::get_if<std::vector<uint32_t>>(&a)) {
    const auto& sb = std::get<std::vector<uint32_t>>(b);
    std::vector<uint32_t> u;
    std::set_intersection(sa->begin(), sa->end(), sb.begin(), sb.end(), std::back_inserter(u));
    return u;
  }
  Int ga = cyc_eff(c, std::get<Ideal::Cyclic>(a).g);
  Int gb = cyc_eff(c, std::get<Ideal::Cyclic>(b).g);
  return Ideal::Cyclic{cyc_canon(c, int_lcm(ga, gb))};
}

// ---------------------------------------------------------------------------
// Ideal-level operations

inline void check_same_ring_ideal(const Ring& R, const Ideal& I) {
  if (I.comps.size() != R.comps.size()) fail(Errc::RingMismatch, "ideal arity mismatch");
}

inline Ideal ideal_zero(const Ring& R) {
  Ideal I;
  for (const auto& c : R.comps) I.comps.push_back(comp_ideal_zero(c));
  return I;
}

inline Ideal ideal_full(const Ring& R) {
  Ideal I;
  for (const auto& c : R.comps) I.comps.push_back(comp_ideal_full(c));
  return I;
}

inline bool is_proper(const Ring& R, const Ideal& I) {
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_ideal_is_full(R.comps[i], I.comps[i])) return true;
  return false;
}

inline bool is_zero_ideal(const Ring& R, const Ideal& I) {
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_ideal_is_zero(R.comps[i], I.comps[i])) return false;
  return true;
}

inline bool contains(const Ring& R, const Ideal& I, const Element& x) {
  check_same_ring_ideal(R, I);
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_ideal_contains(R.comps[i], I.comps[i], x.parts[i])) return false;
  return true;
}

inline bool ideal_subset(const Ring& R, const Ideal& I, const Ideal& J) {
  for (size_t i = 0; i < R.comps.size(); ++i)
    if (!comp_ideal_subset(R.comps[i], I.comps[i], J.comps[i])) return false;
  return true;
}

inline Ideal ideal_from_generators(const Ring& R, const std::vector<Element>& gens) {
  for (const auto& g : gens) check_element(R, g);
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    const Comp& c = R.comps[i];
    if (auto* t = comp_tables(c)) {
      std::vector<uint32_t> seeds;
      for (const auto& g : gens) seeds.push_back(val_index(g.parts[i]));
      std::sort(seeds.begin(), seeds.end());
      seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
      I.comps.push_back(table_closure(*t, seeds));
    } else {
      Int acc = 0;
      for (const auto& g : gens) acc = int_gcd(acc, int_abs(g.parts[i].num));
      I.comps.push_back(Ideal::Cyclic{cyc_canon(c, acc)});
    }
  }
  return I;
}

inline Ideal ideal_principal(const Ring& R, const Element& x) {
  return ideal_from_generators(R, {x});
}

inline Ideal ideal_sum(const Ring& R, const Ideal& a, const Ideal& b) {
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i)
    I.comps.push_back(comp_ideal_sum(R.comps[i], a.comps[i], b.comps[i]));
  return I;
}

inline Ideal ideal_product(const Ring& R, const Ideal& a, const Ideal& b) {
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i)
    I.comps.push_back(comp_ideal_product(R.comps[i], a.comps[i], b.comps[i]));
  return I;
}

inline Ideal ideal_power(const Ring& R, const Ideal& a, unsigned long n) {
  Ideal acc = a;
  for (unsigned long i = 1; i < n; ++i) acc = ideal_product(R, acc, a);
  return acc;
}

inline Ideal ideal_intersect(const Ring& R, const Ideal& a, const Ideal& b) {
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i)
    I.comps.push_back(comp_ideal_intersect(R.comps[i], a.comps[i], b.comps[i]));
  return I;
}

// Intersection of all powers I^n.  Powers descend, so on finite components
// the chain stabilizes; on Z/loc components <d>^n meets in <0> for d >= 2.
inline Ideal omega_power(const Ring& R, const Ideal& a) {
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    const Comp& c = R.comps[i];
    if (!comp_finite(c)) {
      const Int& g = std::get<Ideal::Cyclic>(a.comps[i]).g;
      I.comps.push_back(Ideal::Cyclic{g <= 1 ? g : Int(0)});
      continue;
    }
    Ideal::CompRep cur = a.comps[i];
    for (;;) {
      Ideal::CompRep nxt = comp_ideal_product(c, cur, a.comps[i]);
      if (nxt == cur) break;
      cur = nxt;
    }
    I.comps.push_back(cur);
  }
  return I;
}

inline Ideal radical(const Ring& R, const Ideal& a) {
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    const Comp& c = R.comps[i];
    if (auto* t = comp_tables(c)) {
      const auto& set = std::get<std::vector<uint32_t>>(a.comps[i]);
      std::vector<uint32_t> out;
      for (uint32_t x = 0; x < t->size; ++x) {
        uint32_t p = x;
        bool inrad = false;
        for (uint32_t k = 1; k <= t->size; ++k) {
          if (std::binary_search(set.begin(), set.end(), p)) {
            inrad = true;
            break;
          }
          p = t->times(p, x);
        }
        if (inrad) out.push_back(x);
      }
      I.comps.push_back(out);
    } else {
      Int eff = cyc_eff(c, std::get<Ideal::Cyclic>(a.comps[i]).g);
      I.comps.push_back(Ideal::Cyclic{cyc_canon(c, int_radical(eff))});
    }
  }
  return I;
}

inline Ideal colon(const Ring& R, const Ideal& a, const Element& x) {
  check_element(R, x);
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    const Comp& c = R.comps[i];
    if (auto* t = comp_tables(c)) {
      const auto& set = std::get<std::vector<uint32_t>>(a.comps[i]);
      std::vector<uint32_t> out;
      uint32_t xi = val_index(x.parts[i]);
      for (uint32_t r = 0; r < t->size; ++r)
        if (std::binary_search(set.begin(), set.end(), t->times(r, xi))) out.push_back(r);
      I.comps.push_back(out);
    } else {
      Int eff = cyc_eff(c, std::get<Ideal::Cyclic>(a.comps[i]).g);
      Int xv = x.parts[i].num;
      if (auto* l = std::get_if<LocComp>(&c)) xv = strip_primes(xv, l->primes);
      xv = int_abs(xv);
      if (eff == 0) {
        I.comps.push_back(Ideal::Cyclic{xv == 0 ? Int(1) : Int(0)});
      } else {
        I.comps.push_back(Ideal::Cyclic{cyc_canon(c, eff / int_gcd(eff, xv))});
      }
    }
  }
  return I;
}

inline Ideal colon_ideal(const Ring& R, const Ideal& a, const Ideal& b) {
  Ideal I;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    const Comp& c = R.comps[i];
    if (auto* t = comp_tables(c)) {
      const auto& sa = std::get<std::vector<uint32_t>>(a.comps[i]);
      const auto& sb = std::get<std::vector<uint32_t>>(b.comps[i]);
      std::vector<uint32_t> out;
      for (uint32_t r = 0; r < t->size; ++r) {
        bool ok = true;
        for (uint32_t s : sb)
          if (!std::binary_search(sa.begin(), sa.end(), t->times(r, s))) {
            ok = false;
            break;
          }
        if (ok) out.push_back(r);
      }
      I.comps.push_back(out);
    } else {
      Int ea = cyc_eff(c, std::get<Ideal::Cyclic>(a.comps[i]).g);
      Int eb = cyc_eff(c, std::get<Ideal::Cyclic>(b.comps[i]).g);
      if (ea == 0) {
        I.comps.push_back(Ideal::Cyclic{eb == 0 ? Int(1) : Int(0)});
      } else {
        I.comps.push_back(Ideal::Cyclic{cyc_canon(c, ea / int_gcd(ea, eb))});
      }
    }
  }
  return I;
}

inline Ideal annihilator(const Ring& R, const Element& x) { return colon(R, ideal_zero(R), x); }
inline Ideal annihilator_ideal(const Ring& R, const Ideal& a) {
  return colon_ideal(R, ideal_zero(R), a);
}

// ---------------------------------------------------------------------------
// Enumeration

inline std::vector<Ideal::CompRep> comp_ideal_list(const Comp& c, long long genBound, bool& partial) {
  std::vector<Ideal::CompRep> out;
  if (auto* z = std::get_if<ZnComp>(&c)) {
    out.push_back(Ideal::Cyclic{0});
    for (const Int& d : divisors_of(Int(z->n)))
      if (d < z->n) out.push_back(Ideal::Cyclic{d});
    return out;
  }
  if (auto* t = comp_tables(c)) {
    std::set<std::vector<uint32_t>> lattice;
    lattice.insert(std::get<std::vector<uint32_t>>(comp_ideal_zero(c)));
    for (uint32_t x = 0; x < t->size; ++x) lattice.insert(table_closure(*t, {x}));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<uint32_t>> cur(lattice.begin(), lattice.end());
      for (size_t i = 0; i < cur.size(); ++i)
        for (size_t j = i + 1; j < cur.size(); ++j) {
          auto u = comp_ideal_sum(c, cur[i], cur[j]);
          if (lattice.insert(std::get<std::vector<uint32_t>>(u)).second) grew = true;
        }
    }
    std::vector<std::vector<uint32_t>> sorted(lattice.begin(), lattice.end());
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (auto& s : sorted) out.push_back(std::move(s));
    return out;
  }
  // infinite component: generators 0..genBound (loc: coprime ones only)
  if (genBound < 0) fail(Errc::UnboundedEnumeration, "infinite ring needs an enumeration bound");
  partial = true;
  for (long long d = 0; d <= genBound; ++d) {
    if (auto* l = std::get_if<LocComp>(&c)) {
      if (d != 0 && strip_primes(Int(d), l->primes) != d) continue;
    }
    out.push_back(Ideal::Cyclic{d});
  }
  return out;
}

struct IdealEnumeration {
  std::vector<Ideal> ideals;
  bool partial = false;  // true when an infinite component was bounded
};

inline IdealEnumeration enumerate_ideals(const Ring& R, long long genBound = -1) {
  IdealEnumeration res;
  std::vector<std::vector<Ideal::CompRep>> lists;
  for (const auto& c : R.comps) lists.push_back(comp_ideal_list(c, genBound, res.partial));
  std::vector<size_t> idx(lists.size(), 0);
  for (;;) {
    Ideal I;
    for (size_t i = 0; i < lists.size(); ++i) I.comps.push_back(lists[i][idx[i]]);
    res.ideals.push_back(std::move(I));
    size_t k = lists.size();
    while (k-- > 0) {
      if (++idx[k] < lists[k].size()) break;
      idx[k] = 0;
      if (k == 0) return res;
    }
  }
}

inline std::vector<Ideal> proper_ideals(const Ring& R, long long genBound = -1) {
  std::vector<Ideal> out;
  for (auto& I : enumerate_ideals(R, genBound).ideals)
    if (is_proper(R, I)) out.push_back(std::move(I));
  return out;
}

// ---------------------------------------------------------------------------
// Display and generator extraction

inline std::string comp_ideal_str(const Comp& c, const Ideal::CompRep& r) {
  if (auto* s = std::get_if<std::vector<uint32_t>>(&r)) {
    const auto* t = comp_tables(c);
    if (s->size() == t->size) return "<1>";
    std::string out = "{";
    for (size_t i = 0; i < s->size(); ++i) {
      if (i) out += ",";
      out += t->labels[(*s)[i]];
    }
    return out + "}";
  }
  return "<" + std::get<Ideal::Cyclic>(r).g.get_str() + ">";
}

inline std::string ideal_to_string(const Ring& R, const Ideal& I) {
  std::string s;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    if (i) s += " x ";
    s += comp_ideal_str(R.comps[i], I.comps[i]);
  }
  return s;
}

// Flat integer tuple of an element (inverse of element_from_ints for
// integral values; used when printing canonical generators).
inline void element_to_flat(const Ring& R, const Element& x, std::vector<Int>& out);

inline void comp_val_to_flat(const Comp& c, const CompVal& v, std::vector<Int>& out) {
  if (auto* ic = std::get_if<IdealComp>(&c)) {
    uint32_t idx = val_index(v);
    element_to_flat(*ic->base, ic->baseElems[ic->basePart(idx)], out);
    element_to_flat(*ic->base, ic->baseElems[ic->cosetRep[ic->modPart(idx)]], out);
    return;
  }
  out.push_back(v.num);
}

inline void element_to_flat(const Ring& R, const Element& x, std::vector<Int>& out) {
  for (size_t i = 0; i < R.comps.size(); ++i) comp_val_to_flat(R.comps[i], x.parts[i], out);
}

// Canonical generator elements: one per component, embedded with zeros.
inline std::vector<Element> ideal_generator_elements(const Ring& R, const Ideal& I) {
  std::vector<Element> gens;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    const Comp& c = R.comps[i];
    std::vector<CompVal> vals;
    if (auto* t = comp_tables(c)) {
      for (uint32_t g : table_min_gens(*t, std::get<std::vector<uint32_t>>(I.comps[i])))
        vals.push_back(CompVal{Int(g), 1});
    } else {
      Int g = std::get<Ideal::Cyclic>(I.comps[i]).g;
      if (std::holds_alternative<ZnComp>(c) && g == 0) {
        // zero ideal: no generator needed
      } else if (g != 0) {
        vals.push_back(CompVal{g, 1});
      }
    }
    for (const auto& v : vals) {
      Element e = ring_zero(R);
      e.parts[i] = v;
      gens.push_back(e);
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Idealization ideal helpers: the J(+)N shape

// Builds the ideal J(+)N of a one-component idealization ring R(+)M, where
// N is given as an ideal N' of the base with N = N'/J0.  Requires JM <= N,
// which over M = base/J0 amounts to J + J0 <= N'.
inline Ideal idealization_ideal(const Ring& R, const Ideal& J, const Ideal& Nprime) {
  if (R.comps.size() != 1 || !std::holds_alternative<IdealComp>(R.comps[0]))
    fail(Errc::ShapeMismatch, "idealization_ideal needs an idealization ring");
  const auto& ic = std::get<IdealComp>(R.comps[0]);
  const Ring& B = *ic.base;
  if (!ideal_subset(B, J, Nprime)) fail(Errc::InvalidIdealPair, "JM is not contained in N");
  std::vector<uint32_t> set;
  for (uint32_t r = 0; r < ic.baseElems.size(); ++r) {
    if (!contains(B, J, ic.baseElems[r])) continue;
    for (uint32_t m = 0; m < ic.numCosets; ++m)
      if (contains(B, Nprime, ic.baseElems[ic.cosetRep[m]])) set.push_back(ic.pairIndex(r, m));
  }
  std::sort(set.begin(), set.end());
  Ideal I;
  I.comps.push_back(set);
  return I;
}

// I(+)M for a proper ideal I of the base.
inline Ideal idealization_full_module_ideal(const Ring& R, const Ideal& J) {
  const auto& ic = std::get<IdealComp>(R.comps[0]);
  return idealization_ideal(R, J, ideal_full(*ic.base));
}

// Recognizes the J(+)N shape of an idealization ideal, returning (J, N') when
// the element set factors as {(r, m) : r in J, m in N'/J0}.
inline std::optional<std::pair<Ideal, Ideal>> as_ideal_pair(const Ring& R, const Ideal& I) {
  if (R.comps.size() != 1 || !std::holds_alternative<IdealComp>(R.comps[0])) return std::nullopt;
  const auto& ic = std::get<IdealComp>(R.comps[0]);
  const Ring& B = *ic.base;
  const auto& set = std::get<std::vector<uint32_t>>(I.comps[0]);
  std::set<uint32_t> rs, ms;
  for (uint32_t idx : set) {
    rs.insert(ic.basePart(idx));
    ms.insert(ic.modPart(idx));
  }
  if (rs.size() * ms.size() != set.size()) return std::nullopt;
  std::vector<Element> jgens, ngens;
  for (uint32_t r : rs) jgens.push_back(ic.baseElems[r]);
  for (uint32_t x = 0; x < ic.baseElems.size(); ++x)
    if (ms.count(ic.cosetOf[x])) ngens.push_back(ic.baseElems[x]);
  Ideal J = ideal_from_generators(B, jgens);
  Ideal N = ideal_from_generators(B, ngens);
  if (!ideal_subset(B, J, N)) return std::nullopt;
  Ideal probe = idealization_ideal(R, J, N);
  if (probe == I) return std::make_pair(J, N);
  return std::nullopt;
}

}  // namespace phir
