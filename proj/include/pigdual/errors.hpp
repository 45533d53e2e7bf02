#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pigdual {

// Malformed input: schema violations, signature mismatches, bad references.
// CLI maps this (and ResourceLimit) to exit status 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configurable size bound was exceeded before or during a computation.
// The message names the bound and the offending quantity.
struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hypothesis required by a construction failed, with a machine-readable
// witness. These are certified outcomes, not bugs; CLI maps them to exit 1.
struct CertifiedFailure : std::runtime_error {
  std::string kind;
  CertifiedFailure(std::string kind_, const std::string& msg)
      : std::runtime_error(msg), kind(std::move(kind_)) {}
};

// Separation fails: elements a != b of one sort that no carrier and no
// carrier-after-hom composite tells apart.
struct SepFailed : CertifiedFailure {
  std::string sort_id;
  int a, b;
  SepFailed(std::string sort, int a_, int b_)
      : CertifiedFailure("SepFailed", "separation fails on sort " + sort + " at elements " +
                                          std::to_string(a_) + ", " + std::to_string(b_)),
        sort_id(std::move(sort)), a(a_), b(b_) {}
};

// No sort has a one-element subalgebra whose carrier takes value 1 there.
struct MissingS1 : CertifiedFailure {
  MissingS1() : CertifiedFailure("MissingS1", "no (sort, element, carrier) witness with a one-element subalgebra sent to 1") {}
};

// Dual witness for value 0.
struct MissingS0 : CertifiedFailure {
  MissingS0() : CertifiedFailure("MissingS0", "no (sort, element, carrier) witness with a one-element subalgebra sent to 0") {}
};

// The relation generated on the Y-space is not reflexive; the relation set
// of the alter ego is inconsistent with the construction.
struct PreorderViolation : CertifiedFailure {
  int p, q, r;  // reflexivity: p == q == r is the missing loop
  PreorderViolation(int p_, int q_, int r_, const std::string& msg)
      : CertifiedFailure("PreorderViolation", msg), p(p_), q(q_), r(r_) {}
};

// The designated class is not the unique extreme of the quotient.
struct WrongPointing : CertifiedFailure {
  int cls;
  WrongPointing(int cls_, const std::string& msg)
      : CertifiedFailure("WrongPointing", msg), cls(cls_) {}
};

// Two members of one quotient class compose to different lattice maps.
struct WellDefinednessViolation : CertifiedFailure {
  int p, q;  // Y points in the same class with distinct composites
  WellDefinednessViolation(int p_, int q_, const std::string& msg)
      : CertifiedFailure("WellDefinednessViolation", msg), p(p_), q(q_) {}
};

}  // namespace pigdual
