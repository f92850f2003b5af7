#pragma once

// Reduction maps phi : L(R) -> L(R) u {0-with-no-ideal}: the named family
// (empty, zero, identity, powers, omega), componentwise product maps, custom
// tables, and the induced quotient/localization maps.  Every evaluated image
// is normalized by intersecting with the argument, so phi(I) <= I holds
// throughout.

#include "phir/construct.hpp"
#include "phir/ideal.hpp"
#include "phir/ring.hpp"
#include "phir/verdict.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace phir {

struct PhiMap;

struct PhiEmpty {};
struct PhiZero {};
struct PhiIdentity {};
struct PhiPower {
  unsigned n = 2;
};
struct PhiOmega {};
// Entries are keyed by the canonical printed form of the ideal; querying a
// missing key is an error, not the empty-set value.
struct PhiCustom {
  std::map<std::string, std::optional<Ideal>> entries;
};
struct PhiProduct {
  std::vector<PhiMap> parts;
};
struct PhiQuotientInduced {
  std::shared_ptr<PhiMap> base;
  std::shared_ptr<Quotient> ctx;
};
struct PhiLocalizationInduced {
  std::shared_ptr<PhiMap> base;
  std::shared_ptr<Localization> ctx;
};

struct PhiMap {
  std::variant<PhiEmpty, PhiZero, PhiIdentity, PhiPower, PhiOmega, PhiCustom, PhiProduct,
               PhiQuotientInduced, PhiLocalizationInduced>
      v;
};

inline PhiMap phi_empty() { return PhiMap{PhiEmpty{}}; }
inline PhiMap phi_zero() { return PhiMap{PhiZero{}}; }
inline PhiMap phi_identity() { return PhiMap{PhiIdentity{}}; }
inline PhiMap phi_power(unsigned n) { return PhiMap{PhiPower{n}}; }
inline PhiMap phi_omega() { return PhiMap{PhiOmega{}}; }

inline std::string phi_to_string(const PhiMap& p) {
  if (std::holds_alternative<PhiEmpty>(p.v)) return "empty";
  if (std::holds_alternative<PhiZero>(p.v)) return "zero";
  if (std::holds_alternative<PhiIdentity>(p.v)) return "id";
  if (auto* x = std::get_if<PhiPower>(&p.v)) return "pow:" + std::to_string(x->n);
  if (std::holds_alternative<PhiOmega>(p.v)) return "omega";
  if (std::holds_alternative<PhiCustom>(p.v)) return "custom";
  if (auto* x = std::get_if<PhiProduct>(&p.v)) {
    std::string s = "prod:[";
    for (size_t i = 0; i < x->parts.size(); ++i) {
      if (i) s += ",";
      s += phi_to_string(x->parts[i]);
    }
    return s + "]";
  }
  if (auto* x = std::get_if<PhiQuotientInduced>(&p.v))
    return "quot[" + phi_to_string(*x->base) + "]";
  return "loc[" + phi_to_string(std::get<PhiLocalizationInduced>(p.v).base.operator*()) + "]";
}

inline std::optional<Ideal> phi_apply(const Ring& R, const PhiMap& phi, const Ideal& I);

inline std::optional<Ideal> phi_apply_raw(const Ring& R, const PhiMap& phi, const Ideal& I) {
  if (std::holds_alternative<PhiEmpty>(phi.v)) return std::nullopt;
  if (std::holds_alternative<PhiZero>(phi.v)) return ideal_zero(R);
  if (std::holds_alternative<PhiIdentity>(phi.v)) return I;
  if (auto* x = std::get_if<PhiPower>(&phi.v)) return ideal_power(R, I, x->n);
  if (std::holds_alternative<PhiOmega>(phi.v)) return omega_power(R, I);
  if (auto* x = std::get_if<PhiCustom>(&phi.v)) {
    auto it = x->entries.find(ideal_to_string(R, I));
    if (it == x->entries.end())
      fail(Errc::MissingCustomEntry, "custom phi has no entry for " + ideal_to_string(R, I));
    return it->second;
  }
  if (auto* x = std::get_if<PhiProduct>(&phi.v)) {
    if (x->parts.size() != R.comps.size())
      fail(Errc::RingMismatch, "product phi arity does not match ring");
    Ideal out;
    for (size_t i = 0; i < R.comps.size(); ++i) {
      Ring Ci = ring_from_comps({R.comps[i]});
      Ideal Ii;
      Ii.comps.push_back(I.comps[i]);
      auto v = phi_apply(Ci, x->parts[i], Ii);
      if (!v) return std::nullopt;  // an empty factor empties the product
      out.comps.push_back(v->comps[0]);
    }
    return out;
  }
  if (auto* x = std::get_if<PhiQuotientInduced>(&phi.v)) {
    // phi_I(J/I) = (phi(J) + I)/I, empty when phi(J) is empty
    if (!ring_equal(R, x->ctx->ring)) fail(Errc::RingMismatch, "induced phi bound to another ring");
    Ideal J = x->ctx->lift_ideal(I);
    auto v = phi_apply(x->ctx->base, *x->base, J);
    if (!v) return std::nullopt;
    return x->ctx->project_ideal(*v);
  }
  auto& x = std::get<PhiLocalizationInduced>(phi.v);
  // phi_S(J) = S^-1 phi(J n R), empty when phi(J n R) is empty
  if (!ring_equal(R, x.ctx->ring)) fail(Errc::RingMismatch, "induced phi bound to another ring");
  Ideal C = x.ctx->contract_ideal(I);
  auto v = phi_apply(x.ctx->base, *x.base, C);
  if (!v) return std::nullopt;
  return x.ctx->extend_ideal(*v);
}

inline std::optional<Ideal> phi_apply(const Ring& R, const PhiMap& phi, const Ideal& I) {
  auto v = phi_apply_raw(R, phi, I);
  if (!v) return std::nullopt;
  return ideal_intersect(R, *v, I);
}

// psi1 <= psi2  iff  psi1(I) <= psi2(I) for every ideal I; the empty value
// sits below everything.
inline Verdict phi_leq(const Ring& R, const PhiMap& p1, const PhiMap& p2, long long idealBound = 50) {
  auto en = enumerate_ideals(R, is_finite(R) ? -1 : idealBound);
  for (const auto& I : en.ideals) {
    auto v1 = phi_apply(R, p1, I);
    if (!v1) continue;
    auto v2 = phi_apply(R, p2, I);
    if (!v2 || !ideal_subset(R, *v1, *v2))
      return Verdict::fails({witness_ideal(R, "I", I)});
  }
  return en.partial ? Verdict::up_to(idealBound) : Verdict::holds();
}

// Verifies the displayed order chain
//   phi_empty <= phi_0 <= phi_omega <= ... <= phi_{n+1} <= phi_n <= ... <= phi_2 <= phi_1
// on every ideal of a finite ring, with powers taken up to n_max + 1.
inline Verdict order_chain_check(const Ring& R, unsigned n_max) {
  if (!is_finite(R)) fail(Errc::UnboundedEnumeration, "order chain check needs a finite ring");
  std::vector<std::pair<PhiMap, PhiMap>> pairs;
  pairs.emplace_back(phi_empty(), phi_zero());
  pairs.emplace_back(phi_zero(), phi_omega());
  if (n_max >= 2) {
    pairs.emplace_back(phi_omega(), phi_power(n_max + 1));
    for (unsigned k = n_max; k >= 2; --k) pairs.emplace_back(phi_power(k + 1), phi_power(k));
    pairs.emplace_back(phi_power(2), phi_identity());
  } else {
    pairs.emplace_back(phi_omega(), phi_identity());
  }
  for (const auto& [p1, p2] : pairs) {
    Verdict v = phi_leq(R, p1, p2);
    if (!v.ok()) {
      v.witness.push_back(WitnessItem{"pair", v.witness.empty() ? ideal_zero(R) : v.witness[0].value,
                                      phi_to_string(p1) + " <= " + phi_to_string(p2)});
      return v;
    }
  }
  return Verdict::holds();
}

}  // namespace phir
