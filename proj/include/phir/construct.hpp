#pragma once

// Ring constructions: build_ring over the constructor grammar, products,
// quotients with projection/lift maps, idealizations R(+)M and localizations
// S^-1 R with extension/contraction maps.
//
// Normalization rules applied at construction time:
//   quot(Z, <n>)        ->  Z/n           (n >= 2)
//   quot(Z/m, <d>)      ->  Z/gcd(d, m)
//   quot(loc, <d>)      ->  Z/d           (d coprime to the inverted primes)
//   product quotients componentwise, dropping collapsed components
//   quot(table-like)    ->  coset table
//   idealize(R, M)      ->  table-backed pair component (R finite)

#include "phir/ideal.hpp"
#include "phir/numeric.hpp"
#include "phir/ring.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

namespace phir {

inline RingSpec comp_spec(const Comp& c) {
  if (std::holds_alternative<ZComp>(c)) return RingSpec{ZSpec{}};
  if (auto* z = std::get_if<ZnComp>(&c)) return RingSpec{ZnSpec{z->n}};
  if (auto* l = std::get_if<LocComp>(&c)) return RingSpec{LocSpec{l->primes}};
  if (auto* t = std::get_if<TableComp>(&c)) return *t->provenance;
  return *std::get<IdealComp>(c).provenance;
}

inline Ring ring_from_comps(std::vector<Comp> comps) {
  Ring R;
  R.comps = std::move(comps);
  if (R.comps.size() == 1) {
    R.canon = comp_spec(R.comps[0]);
  } else {
    ProductSpec p;
    for (const auto& c : R.comps) p.parts.push_back(comp_spec(c));
    R.canon = RingSpec{std::move(p)};
  }
  return R;
}

// ---------------------------------------------------------------------------
// Explicit tables

inline void validate_table(const TableSpec& ts) {
  uint32_t n = ts.size;
  if (n < 2) fail(Errc::InvalidTable, "ring needs 1 != 0");
  if (ts.add.size() != size_t(n) * n || ts.mul.size() != size_t(n) * n)
    fail(Errc::InvalidTable, "table dimensions do not match size");
  if (ts.zero >= n || ts.one >= n || ts.zero == ts.one)
    fail(Errc::InvalidTable, "zero/one out of range or equal");
  auto A = [&](uint32_t i, uint32_t j) { return ts.add[size_t(i) * n + j]; };
  auto M = [&](uint32_t i, uint32_t j) { return ts.mul[size_t(i) * n + j]; };
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      if (A(i, j) >= n || M(i, j) >= n) fail(Errc::InvalidTable, "table entry out of range");
      if (A(i, j) != A(j, i)) fail(Errc::InvalidTable, "addition is not commutative");
      if (M(i, j) != M(j, i)) fail(Errc::InvalidTable, "multiplication is not commutative");
    }
  for (uint32_t i = 0; i < n; ++i) {
    if (A(i, ts.zero) != i) fail(Errc::InvalidTable, "zero is not an additive identity");
    if (M(i, ts.one) != i) fail(Errc::InvalidTable, "one is not a multiplicative identity");
    bool hasNeg = false;
    for (uint32_t j = 0; j < n; ++j)
      if (A(i, j) == ts.zero) hasNeg = true;
    if (!hasNeg) fail(Errc::InvalidTable, "missing additive inverse");
  }
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j)
      for (uint32_t k = 0; k < n; ++k) {
        if (A(A(i, j), k) != A(i, A(j, k))) fail(Errc::InvalidTable, "addition not associative");
        if (M(M(i, j), k) != M(i, M(j, k)))
          fail(Errc::InvalidTable, "multiplication not associative");
        if (M(i, A(j, k)) != A(M(i, j), M(i, k)))
          fail(Errc::InvalidTable, "distributivity fails");
      }
}

inline Comp table_comp_from_spec(const TableSpec& ts) {
  validate_table(ts);
  TableComp tc;
  tc.t.size = ts.size;
  tc.t.add = ts.add;
  tc.t.mul = ts.mul;
  tc.t.zero = ts.zero;
  tc.t.one = ts.one;
  tc.t.labels = ts.labels;
  tc.t.finish();
  tc.provenance = std::make_shared<RingSpec>(RingSpec{ts});
  return tc;
}

// ---------------------------------------------------------------------------
// Product

inline Ring make_product(const std::vector<Ring>& parts) {
  if (parts.empty()) fail(Errc::EmptyProduct, "product of zero rings");
  std::vector<Comp> comps;
  for (const auto& r : parts)
    for (const auto& c : r.comps) comps.push_back(c);
  return ring_from_comps(std::move(comps));
}

// ---------------------------------------------------------------------------
// Quotient

struct Quotient {
  Ring ring;
  Ring base;
  Ideal modI;

  struct Action {
    enum Kind { Drop, Keep, Mod, Coset } kind = Keep;
    Int m = 0;                      // Mod
    std::vector<uint32_t> cosetOf;  // Coset
    std::vector<uint32_t> reps;     // Coset
  };
  std::vector<Action> actions;

  Element project(const Element& x) const {
    Element out;
    for (size_t i = 0; i < base.comps.size(); ++i) {
      const Action& a = actions[i];
      switch (a.kind) {
        case Action::Drop: break;
        case Action::Keep: out.parts.push_back(x.parts[i]); break;
        case Action::Mod: {
          Int num = x.parts[i].num % a.m;
          if (num < 0) num += a.m;
          if (x.parts[i].den != 1) {
            Int inv;
            mpz_invert(inv.get_mpz_t(), x.parts[i].den.get_mpz_t(), a.m.get_mpz_t());
            num = (num * inv) % a.m;
          }
          out.parts.push_back(CompVal{num, 1});
          break;
        }
        case Action::Coset:
          out.parts.push_back(CompVal{Int(a.cosetOf[val_index(x.parts[i])]), 1});
          break;
      }
    }
    return out;
  }

  // image (J + I)/I of an ideal J of the base
  Ideal project_ideal(const Ideal& J) const {
    Ideal out;
    for (size_t i = 0; i < base.comps.size(); ++i) {
      const Action& a = actions[i];
      switch (a.kind) {
        case Action::Drop: break;
        case Action::Keep: out.comps.push_back(J.comps[i]); break;
        case Action::Mod: {
          Int eff = cyc_eff(base.comps[i], std::get<Ideal::Cyclic>(J.comps[i]).g);
          Int g = int_gcd(eff, a.m);
          out.comps.push_back(Ideal::Cyclic{g == a.m ? Int(0) : g});
          break;
        }
        case Action::Coset: {
          std::set<uint32_t> img;
          for (uint32_t x : std::get<std::vector<uint32_t>>(J.comps[i])) img.insert(a.cosetOf[x]);
          out.comps.push_back(std::vector<uint32_t>(img.begin(), img.end()));
          break;
        }
      }
    }
    return out;
  }

  // preimage of an ideal of the quotient
  Ideal lift_ideal(const Ideal& K) const {
    Ideal out;
    size_t q = 0;
    for (size_t i = 0; i < base.comps.size(); ++i) {
      const Action& a = actions[i];
      switch (a.kind) {
        case Action::Drop: out.comps.push_back(comp_ideal_full(base.comps[i])); break;
        case Action::Keep: out.comps.push_back(K.comps[q++]); break;
        case Action::Mod: {
          Int e = std::get<Ideal::Cyclic>(K.comps[q++]).g;
          Int eff = (e == 0) ? a.m : e;
          out.comps.push_back(Ideal::Cyclic{cyc_canon(base.comps[i], eff)});
          break;
        }
        case Action::Coset: {
          std::vector<uint32_t> set;
          const auto& ks = std::get<std::vector<uint32_t>>(K.comps[q++]);
          for (uint32_t x = 0; x < a.cosetOf.size(); ++x)
            if (std::binary_search(ks.begin(), ks.end(), a.cosetOf[x])) set.push_back(x);
          out.comps.push_back(set);
          break;
        }
      }
    }
    return out;
  }
};

inline Quotient make_quotient(const Ring& R, const Ideal& I) {
  check_same_ring_ideal(R, I);
  if (!is_proper(R, I)) fail(Errc::ImproperIdeal, "cannot quotient by the whole ring");
  Quotient Q;
  Q.base = R;
  Q.modI = I;
  std::vector<Comp> comps;
  for (size_t i = 0; i < R.comps.size(); ++i) {
    const Comp& c = R.comps[i];
    Quotient::Action act;
    if (comp_ideal_is_full(c, I.comps[i])) {
      act.kind = Quotient::Action::Drop;
    } else if (comp_ideal_is_zero(c, I.comps[i])) {
      act.kind = Quotient::Action::Keep;
      comps.push_back(c);
    } else if (auto* t = comp_tables(c)) {
      act.kind = Quotient::Action::Coset;
      const auto& set = std::get<std::vector<uint32_t>>(I.comps[i]);
      act.cosetOf.assign(t->size, 0);
      for (uint32_t x = 0; x < t->size; ++x) {
        bool found = false;
        for (size_t rj = 0; rj < act.reps.size() && !found; ++rj) {
          uint32_t diff = t->plus(x, t->neg[act.reps[rj]]);
          if (std::binary_search(set.begin(), set.end(), diff)) {
            act.cosetOf[x] = uint32_t(rj);
            found = true;
          }
        }
        if (!found) {
          act.cosetOf[x] = uint32_t(act.reps.size());
          act.reps.push_back(x);
        }
      }
      TableComp tc;
      uint32_t m = uint32_t(act.reps.size());
      tc.t.size = m;
      tc.t.add.resize(size_t(m) * m);
      tc.t.mul.resize(size_t(m) * m);
      for (uint32_t a = 0; a < m; ++a)
        for (uint32_t b = 0; b < m; ++b) {
          tc.t.add[size_t(a) * m + b] = act.cosetOf[t->plus(act.reps[a], act.reps[b])];
          tc.t.mul[size_t(a) * m + b] = act.cosetOf[t->times(act.reps[a], act.reps[b])];
        }
      tc.t.zero = act.cosetOf[t->zero];
      tc.t.one = act.cosetOf[t->one];
      tc.t.labels.resize(m);
      for (uint32_t a = 0; a < m; ++a) tc.t.labels[a] = "[" + t->labels[act.reps[a]] + "]";
      tc.t.finish();
      QuotientSpec qs;
      qs.base = std::make_shared<RingSpec>(comp_spec(c));
      for (uint32_t g : table_min_gens(*t, set)) {
        std::vector<Int> flat;
        comp_val_to_flat(c, CompVal{Int(g), 1}, flat);
        qs.gens.push_back(flat);
      }
      tc.provenance = std::make_shared<RingSpec>(RingSpec{qs});
      comps.push_back(tc);
    } else {
      act.kind = Quotient::Action::Mod;
      act.m = cyc_eff(c, std::get<Ideal::Cyclic>(I.comps[i]).g);
      comps.push_back(ZnComp{act.m.get_si()});
    }
    Q.actions.push_back(std::move(act));
  }
  Q.ring = ring_from_comps(std::move(comps));
  return Q;
}

// ---------------------------------------------------------------------------
// Idealization R(+)M with M = R/J0 (J0 = 0 gives M = R)

inline Ring make_idealization(const Ring& R, const Ideal& J0) {
  if (!is_finite(R)) fail(Errc::InfiniteIdealizationBase, "idealization base must be finite");
  if (!is_proper(R, J0)) fail(Errc::SemanticError, "module of an idealization must be nonzero");
  IdealComp ic;
  ic.base = std::make_shared<Ring>(R);
  ic.baseElems = ring_elements(R);
  uint32_t n = uint32_t(ic.baseElems.size());
  ic.regularModule = is_zero_ideal(R, J0);

  ic.cosetOf.assign(n, 0);
  for (uint32_t x = 0; x < n; ++x) {
    bool found = false;
    for (size_t rj = 0; rj < ic.cosetRep.size() && !found; ++rj) {
      Element diff = ring_sub(R, ic.baseElems[x], ic.baseElems[ic.cosetRep[rj]]);
      if (contains(R, J0, diff)) {
        ic.cosetOf[x] = uint32_t(rj);
        found = true;
      }
    }
    if (!found) {
      ic.cosetOf[x] = uint32_t(ic.cosetRep.size());
      ic.cosetRep.push_back(x);
    }
  }
  ic.numCosets = uint32_t(ic.cosetRep.size());

  // base-index arithmetic helpers
  std::vector<uint32_t> badd(size_t(n) * n), bmul(size_t(n) * n);
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      badd[size_t(a) * n + b] =
          uint32_t(index_of_element(R, ring_add(R, ic.baseElems[a], ic.baseElems[b])));
      bmul[size_t(a) * n + b] =
          uint32_t(index_of_element(R, ring_mul(R, ic.baseElems[a], ic.baseElems[b])));
    }
  auto modAdd = [&](uint32_t m1, uint32_t m2) {
    return ic.cosetOf[badd[size_t(ic.cosetRep[m1]) * n + ic.cosetRep[m2]]];
  };
  auto modScale = [&](uint32_t r, uint32_t m) {
    return ic.cosetOf[bmul[size_t(r) * n + ic.cosetRep[m]]];
  };

  uint32_t sz = n * ic.numCosets;
  ic.t.size = sz;
  ic.t.add.resize(size_t(sz) * sz);
  ic.t.mul.resize(size_t(sz) * sz);
  for (uint32_t r1 = 0; r1 < n; ++r1)
    for (uint32_t m1 = 0; m1 < ic.numCosets; ++m1)
      for (uint32_t r2 = 0; r2 < n; ++r2)
        for (uint32_t m2 = 0; m2 < ic.numCosets; ++m2) {
          uint32_t i = ic.pairIndex(r1, m1), j = ic.pairIndex(r2, m2);
          ic.t.add[size_t(i) * sz + j] =
              ic.pairIndex(badd[size_t(r1) * n + r2], modAdd(m1, m2));
          // (a,m)(b,n) = (ab, an + bm)
          ic.t.mul[size_t(i) * sz + j] = ic.pairIndex(
              bmul[size_t(r1) * n + r2],
              ic.cosetOf[badd[size_t(ic.cosetRep[modScale(r1, m2)]) * n +
                              ic.cosetRep[modScale(r2, m1)]]]);
        }
  uint32_t z0 = uint32_t(index_of_element(R, ring_zero(R)));
  uint32_t o1 = uint32_t(index_of_element(R, ring_one(R)));
  ic.t.zero = ic.pairIndex(z0, ic.cosetOf[z0]);
  ic.t.one = ic.pairIndex(o1, ic.cosetOf[z0]);
  ic.t.labels.resize(sz);
  for (uint32_t r = 0; r < n; ++r)
    for (uint32_t m = 0; m < ic.numCosets; ++m)
      ic.t.labels[ic.pairIndex(r, m)] = "(" + element_to_string(R, ic.baseElems[r]) + "," +
                                        element_to_string(R, ic.baseElems[ic.cosetRep[m]]) + ")";
  ic.t.finish();

  // z(M) = { r : rm = 0 for some m != 0 }
  ic.baseInZM.assign(n, 0);
  uint32_t mz = ic.cosetOf[z0];
  for (uint32_t r = 0; r < n; ++r)
    for (uint32_t m = 0; m < ic.numCosets; ++m) {
      if (m == mz) continue;
      if (modScale(r, m) == mz) {
        ic.baseInZM[r] = 1;
        break;
      }
    }

  IdealizationSpec is;
  is.base = std::make_shared<RingSpec>(R.canon);
  if (!ic.regularModule)
    for (const auto& g : ideal_generator_elements(R, J0)) {
      std::vector<Int> flat;
      element_to_flat(R, g, flat);
      is.modGens.push_back(flat);
    }
  ic.provenance = std::make_shared<RingSpec>(RingSpec{is});

  Ring out;
  out.comps.push_back(std::move(ic));
  out.canon = *std::get<IdealComp>(out.comps[0]).provenance;
  return out;
}

// Embedding a -> (a, 0) of the base into the idealization.
inline Element idealization_embed(const Ring& RM, const Element& a) {
  const auto& ic = std::get<IdealComp>(RM.comps[0]);
  uint32_t z0 = uint32_t(index_of_element(*ic.base, ring_zero(*ic.base)));
  uint32_t ai = uint32_t(index_of_element(*ic.base, a));
  Element e;
  e.parts.push_back(CompVal{Int(ic.pairIndex(ai, ic.cosetOf[z0])), 1});
  return e;
}

// ---------------------------------------------------------------------------
// Localization S^-1 R, S generated by images of the given integers

struct Localization {
  Ring ring;
  Ring base;
  std::vector<long long> gens;

  struct Act {
    enum Kind { Keep, ToLoc } kind = Keep;
    std::vector<long long> primes;
  };
  std::vector<Act> acts;

  Element map_element(const Element& x) const {
    // numerators carry over unchanged; denominators stay valid
    return x;
  }

  Ideal extend_ideal(const Ideal& J) const {
    Ideal out;
    for (size_t i = 0; i < base.comps.size(); ++i) {
      if (acts[i].kind == Act::Keep) {
        out.comps.push_back(J.comps[i]);
      } else {
        Int g = std::get<Ideal::Cyclic>(J.comps[i]).g;
        out.comps.push_back(Ideal::Cyclic{strip_primes(g, acts[i].primes)});
      }
    }
    return out;
  }

  Ideal contract_ideal(const Ideal& K) const {
    Ideal out;
    for (size_t i = 0; i < base.comps.size(); ++i) out.comps.push_back(K.comps[i]);
    return out;
  }
};

inline Localization make_localization(const Ring& R, const std::vector<long long>& gens) {
  Localization L;
  L.base = R;
  L.gens = gens;
  std::vector<long long> primes;
  for (long long k : gens) {
    if (k == 0) fail(Errc::ZeroInMultiplicativeSet, "0 cannot be inverted");
    Element img = element_from_int(R, Int(k));
    if (!is_regular(R, img))
      fail(Errc::NonRegularDenominator, "multiplicative set must consist of regular elements");
    for (const auto& [p, e] : factorize(Int(k))) primes.push_back(p.get_si());
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  std::vector<Comp> comps;
  for (const auto& c : R.comps) {
    Localization::Act act;
    if (std::holds_alternative<ZComp>(c) && !primes.empty()) {
      act.kind = Localization::Act::ToLoc;
      act.primes = primes;
      comps.push_back(LocComp{primes});
    } else if (auto* l = std::get_if<LocComp>(&c)) {
      std::vector<long long> merged = l->primes;
      merged.insert(merged.end(), primes.begin(), primes.end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      act.kind = Localization::Act::ToLoc;
      act.primes = merged;
      comps.push_back(LocComp{merged});
    } else {
      act.kind = Localization::Act::Keep;
      comps.push_back(c);
    }
    L.acts.push_back(std::move(act));
  }
  L.ring = ring_from_comps(std::move(comps));
  return L;
}

// ---------------------------------------------------------------------------
// build_ring over the grammar

inline Ring build_ring(const RingSpec& sp);

inline Ideal ideal_from_flat_gens(const Ring& R, const std::vector<std::vector<Int>>& gens) {
  std::vector<Element> elems;
  for (const auto& t : gens) elems.push_back(element_from_ints(R, t));
  return ideal_from_generators(R, elems);
}

inline Ring build_ring(const RingSpec& sp) {
  if (std::holds_alternative<ZSpec>(sp.v)) return ring_from_comps({ZComp{}});
  if (auto* x = std::get_if<ZnSpec>(&sp.v)) {
    if (x->n < 2) fail(Errc::SemanticError, "Z/n needs n >= 2");
    return ring_from_comps({ZnComp{x->n}});
  }
  if (auto* x = std::get_if<LocSpec>(&sp.v)) {
    if (x->primes.empty()) return ring_from_comps({ZComp{}});
    for (long long p : x->primes)
      if (p == 0) fail(Errc::ZeroInMultiplicativeSet, "0 cannot be inverted");
    return ring_from_comps({LocComp{x->primes}});
  }
  if (auto* x = std::get_if<TableSpec>(&sp.v)) return ring_from_comps({table_comp_from_spec(*x)});
  if (auto* x = std::get_if<ProductSpec>(&sp.v)) {
    if (x->parts.empty()) fail(Errc::EmptyProduct, "product of zero rings");
    std::vector<Ring> parts;
    for (const auto& p : x->parts) parts.push_back(build_ring(p));
    return make_product(parts);
  }
  if (auto* x = std::get_if<QuotientSpec>(&sp.v)) {
    Ring base = build_ring(*x->base);
    Ideal I = ideal_from_flat_gens(base, x->gens);
    return make_quotient(base, I).ring;
  }
  if (auto* x = std::get_if<LocalizeSpec>(&sp.v)) {
    Ring base = build_ring(*x->base);
    return make_localization(base, x->gens).ring;
  }
  auto& x = std::get<IdealizationSpec>(sp.v);
  Ring base = build_ring(*x.base);
  Ideal J0 = ideal_from_flat_gens(base, x.modGens);
  return make_idealization(base, J0);
}

}  // namespace phir
