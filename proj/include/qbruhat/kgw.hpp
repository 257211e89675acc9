#pragma once

#include <optional>
#include <string>

#include "qbruhat/group_algebra.hpp"
#include "qbruhat/qls.hpp"

namespace qbruhat {

// Which case of the closed form produced the value.
enum class CfBranch {
  RAtLeastTwo,       // #R >= 2                     -> 1
  ROne,              // #R = 1                      -> 1 - (-1)^{l(w)-l(xmin)} e^{-varpi_i + wt(eta)}
  REmptyQwtLe,       // #R = 0, qwt(w=>x) <= d      -> 1
  REmptyQwtNotLe,    // #R = 0, qwt(w=>x) not <= d  -> 0
  MinusculeAll,      // minuscule, (coset, d_i, qwt) conditions hold -> 1 - e^{-varpi_i + w varpi_i}
  MinusculeQwtLe,    // minuscule, conditions fail, qwt <= d -> 1
  MinusculeQwtNotLe  // minuscule, conditions fail, qwt not <= d -> 0
};

std::string branch_name(CfBranch b);

struct InvariantResult {
  GroupAlgebraElt value;
  CfBranch branch;
  long long r_size = 0;
  std::optional<WeylElt> x_min;
  std::optional<IntVec> wt_eta_fw;
  int sign_exponent = 0;  // ell(w) - ell(x_min) when #R = 1
};

// <O^w, O_x>_d = 1 if qwt(w => x) <= d, else 0.
GroupAlgebraElt two_point(const Qbg& g, const WeylElt& w, const WeylElt& x, const IntVec& d);

// The divisor axiom evaluated literally:
// <O^{s_i}, O^w, O_x>_d = <O^w, O_x>_d - sum_{p in R} (-1)^{l(p)} e^{-varpi_i + wt(eta_p)}.
// Valid for every node i (any level N within the context bound).
GroupAlgebraElt divisor_sum(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                            const IntVec& d);

// The cancellation-free closed form; requires varpi_i minuscule or
// quasi-minuscule (std::invalid_argument otherwise). Branch-level facts that
// the closed form relies on are asserted and raise TheoremViolation.
InvariantResult divisor_cf(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                           const IntVec& d);

enum class CertificateKind { Zero, One, OnePlusEMinusBeta, EMinusBetaTimesEBetaMinusOne };

struct PositivityCertificate {
  CertificateKind kind;
  std::optional<IntVec> beta_fw;  // beta in Q^+ exhibited by the decomposition
  long long value_at_one = 0;
  std::string text;
};

// Certifies membership in Z>=0[e^{-beta}, e^beta - 1 | beta in Q^+] by the
// shape of the closed-form value; throws TheoremViolation when beta fails to
// lie in Q^+ or the value matches no certified shape.
PositivityCertificate positivity_certificate(const RootSystem& rs, const InvariantResult& res);

struct SignedSumCheck {
  bool pass = true;
  long long r_size = 0;
  long long signed_sum = 0;
  std::string detail;
};

// Checks sum_{p in R} (-1)^{l(p)} = 0 when #R != 1, and = (-1)^{l(w)-l(xmin)}
// with ed(p_min) = xmin when #R = 1 (plus the parity of l(p_min)).
SignedSumCheck signed_sum_check(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                                const IntVec& d);

}  // namespace qbruhat
