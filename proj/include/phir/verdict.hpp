#pragma once

// Three-valued check outcome.  Fails always carries a witness that replays
// as a genuine violation; HoldsUpToBound marks searches that exhausted a
// bounded slice of an infinite space without finding one.

#include "phir/ideal.hpp"
#include "phir/ring.hpp"

#include <string>
#include <variant>
#include <vector>

namespace phir {

enum class Status { Holds, Fails, HoldsUpToBound };

inline std::string status_str(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    default: return "holds_up_to";
  }
}

struct WitnessItem {
  std::string label;
  std::variant<Element, Ideal> value;
  std::string printed;
};

inline WitnessItem witness_elem(const Ring& R, std::string label, const Element& e) {
  return WitnessItem{std::move(label), e, element_to_string(R, e)};
}

inline WitnessItem witness_ideal(const Ring& R, std::string label, const Ideal& I) {
  return WitnessItem{std::move(label), I, ideal_to_string(R, I)};
}

struct Verdict {
  Status status = Status::Holds;
  long long bound = 0;
  std::vector<WitnessItem> witness;

  static Verdict holds() { return Verdict{Status::Holds, 0, {}}; }
  static Verdict fails(std::vector<WitnessItem> w) {
    return Verdict{Status::Fails, 0, std::move(w)};
  }
  static Verdict up_to(long long b) { return Verdict{Status::HoldsUpToBound, b, {}}; }

  bool ok() const { return status != Status::Fails; }
  bool exact_holds() const { return status == Status::Holds; }
};

inline std::string witness_str(const Verdict& v) {
  std::string s;
  for (size_t i = 0; i < v.witness.size(); ++i) {
    if (i) s += ", ";
    s += v.witness[i].label + "=" + v.witness[i].printed;
  }
  return s;
}

}  // namespace phir
