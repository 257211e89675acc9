#include "qbruhat/kgw.hpp"

#include <stdexcept>

namespace qbruhat {

std::string branch_name(CfBranch b) {
  switch (b) {
    case CfBranch::RAtLeastTwo: return "|R| >= 2";
    case CfBranch::ROne: return "|R| = 1";
    case CfBranch::REmptyQwtLe: return "|R| = 0, qwt(w=>x) <= d";
    case CfBranch::REmptyQwtNotLe: return "|R| = 0, qwt(w=>x) not <= d";
    case CfBranch::MinusculeAll: return "minuscule, conditions hold";
    case CfBranch::MinusculeQwtLe: return "minuscule, conditions fail, qwt(w=>x) <= d";
    case CfBranch::MinusculeQwtNotLe: return "minuscule, conditions fail, qwt(w=>x) not <= d";
  }
  return "?";
}

GroupAlgebraElt two_point(const Qbg& g, const WeylElt& w, const WeylElt& x, const IntVec& d) {
  if (!g.J().empty() || g.filter())
    throw std::invalid_argument("two-point invariants live on the full graph");
  if (!dominates(d, zero_vec(g.rs().rank())))
    throw std::invalid_argument("degree d must lie in Q^{vee,+}");
  auto [dist, qwt] = g.dist_qwt(g.index_of(w), g.index_of(x));
  (void)dist;
  const int rank = g.rs().rank();
  return dominates(sub(d, qwt), zero_vec(rank)) ? GroupAlgebraElt::constant(rank, 1)
                                                : GroupAlgebraElt::zero();
}

GroupAlgebraElt divisor_sum(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                            const IntVec& d) {
  const int rank = ctx.rs().rank();
  GroupAlgebraElt total = two_point(ctx.graph(), w, x, d);
  for (const PathTuple& p : enumerate_R(ctx, w, x, d)) {
    IntVec wt = wt_eta(ctx.rs(), eta_of(ctx, p), ctx.varpi());
    long long sign = (p.length % 2 == 0) ? 1 : -1;
    total -= GroupAlgebraElt::monomial(sub(wt, ctx.varpi()), sign);
  }
  (void)rank;
  return total;
}

InvariantResult divisor_cf(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                           const IntVec& d) {
  const RootSystem& rs = ctx.rs();
  const int rank = rs.rank();
  if (!dominates(d, zero_vec(rank)))
    throw std::invalid_argument("degree d must lie in Q^{vee,+}");
  InvariantResult res;

  if (ctx.weight_class() == WeightClass::Minuscule) {
    // the three conditions: x W_J = w W_J, d_i = 0, qwt(w => x) <= d
    bool same_coset = min_coset_rep(w, ctx.J()) == min_coset_rep(x, ctx.J());
    bool d_i_zero = d[ctx.node() - 1] == 0;
    auto [dist, qwt] = ctx.graph().dist_qwt(ctx.graph().index_of(w), ctx.graph().index_of(x));
    (void)dist;
    bool qwt_le = dominates(sub(d, qwt), zero_vec(rank));
    if (same_coset && d_i_zero && qwt_le) {
      res.branch = CfBranch::MinusculeAll;
      res.r_size = 1;
      IntVec wt = w.act_weight(ctx.varpi());
      res.wt_eta_fw = wt;
      res.value = GroupAlgebraElt::constant(rank, 1) -
                  GroupAlgebraElt::monomial(sub(wt, ctx.varpi()), 1);
    } else if (qwt_le) {
      res.branch = CfBranch::MinusculeQwtLe;
      res.value = GroupAlgebraElt::constant(rank, 1);
    } else {
      res.branch = CfBranch::MinusculeQwtNotLe;
      res.value = GroupAlgebraElt::zero();
    }
    return res;
  }

  if (ctx.weight_class() != WeightClass::QuasiMinuscule)
    throw std::invalid_argument(
        "closed form requires a minuscule or quasi-minuscule fundamental weight; use the "
        "divisor sum");

  auto R = enumerate_R(ctx, w, x, d);
  res.r_size = static_cast<long long>(R.size());
  if (R.size() >= 2) {
    res.branch = CfBranch::RAtLeastTwo;
    res.value = GroupAlgebraElt::constant(rank, 1);
    return res;
  }
  if (R.empty()) {
    GroupAlgebraElt tp = two_point(ctx.graph(), w, x, d);
    res.branch = tp.is_zero() ? CfBranch::REmptyQwtNotLe : CfBranch::REmptyQwtLe;
    res.value = tp;
    return res;
  }

  res.branch = CfBranch::ROne;
  WeylElt xmin = tilted_min(ctx.graph(), ctx.J(), w, x);
  res.x_min = xmin;
  if (!(ctx.graph().vertex(R[0].end) == xmin))
    throw TheoremViolation("unique member of R does not end at the tilted minimum");

  // wt(eta) = (w varpi_i + x varpi_i) / 2, an integral weight in varpi_i - Q^+
  IntVec sum = add(w.act_weight(ctx.varpi()), x.act_weight(ctx.varpi()));
  IntVec wt(rank);
  for (int k = 0; k < rank; ++k) {
    if (sum[k] % 2 != 0) throw TheoremViolation("wt(eta) is not an integral weight");
    wt[k] = sum[k] / 2;
  }
  if (!rs.weight_in_Q_plus(sub(ctx.varpi(), wt)))
    throw TheoremViolation("varpi_i - wt(eta) is not in Q^+");
  res.wt_eta_fw = wt;
  res.sign_exponent = w.length() - xmin.length();
  long long sign = (res.sign_exponent % 2 == 0) ? 1 : -1;
  res.value = GroupAlgebraElt::constant(rank, 1) -
              GroupAlgebraElt::monomial(sub(wt, ctx.varpi()), sign);
  return res;
}

PositivityCertificate positivity_certificate(const RootSystem& rs, const InvariantResult& res) {
  const int rank = rs.rank();
  PositivityCertificate cert{CertificateKind::Zero, std::nullopt, 0, ""};
  const GroupAlgebraElt& v = res.value;
  if (v.is_zero()) {
    cert.kind = CertificateKind::Zero;
    cert.text = "0 (empty decomposition)";
  } else if (v == GroupAlgebraElt::constant(rank, 1)) {
    cert.kind = CertificateKind::One;
    cert.text = "1 (a single monomial)";
  } else if (v.terms().size() == 2 && v.coeff(zero_vec(rank)) == 1) {
    IntVec nu;
    long long c = 0;
    for (const auto& [wvec, cc] : v.terms()) {
      if (!is_zero(wvec)) {
        nu = wvec;
        c = cc;
      }
    }
    IntVec beta = negate(nu);  // value is 1 + c e^{-beta}
    if (!rs.weight_in_Q_plus(beta))
      throw TheoremViolation("positivity: beta is not in Q^+ for value " + v.to_string());
    cert.beta_fw = beta;
    if (c == 1) {
      cert.kind = CertificateKind::OnePlusEMinusBeta;
      cert.text = "1 + e^{-beta}, beta = " + weight_expr(beta) + " in Q^+";
    } else if (c == -1) {
      cert.kind = CertificateKind::EMinusBetaTimesEBetaMinusOne;
      cert.text = "e^{-beta} (e^{beta} - 1), beta = " + weight_expr(beta) + " in Q^+";
    } else {
      throw TheoremViolation("positivity: unexpected coefficient in " + v.to_string());
    }
  } else {
    throw TheoremViolation("positivity: value " + v.to_string() + " matches no certified shape");
  }
  cert.value_at_one = v.eval_at_one();
  if (cert.value_at_one < 0)
    throw TheoremViolation("positivity: negative specialization at e -> 1");
  return cert;
}

SignedSumCheck signed_sum_check(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                                const IntVec& d) {
  if (ctx.weight_class() == WeightClass::Neither)
    throw std::invalid_argument("main theorem requires a quasi-minuscule fundamental weight");
  SignedSumCheck out;
  auto R = enumerate_R(ctx, w, x, d);
  out.r_size = static_cast<long long>(R.size());
  for (const PathTuple& p : R) out.signed_sum += (p.length % 2 == 0) ? 1 : -1;

  auto complain = [&](std::string why) {
    out.pass = false;
    out.detail = std::move(why);
    return out;
  };
  if (R.size() != 1) {
    if (out.signed_sum != 0)
      return complain("signed sum is " + std::to_string(out.signed_sum) + " with |R| = " +
                      std::to_string(R.size()));
    return out;
  }
  WeylElt xmin = tilted_min(ctx.graph(), ctx.J(), w, x);
  int expo = w.length() - xmin.length();
  long long expected = (expo % 2 == 0) ? 1 : -1;
  if (!(ctx.graph().vertex(R[0].end) == xmin))
    return complain("unique member ends at " + ctx.graph().vertex(R[0].end).word_string() +
                    ", not at the tilted minimum " + xmin.word_string());
  if (out.signed_sum != expected)
    return complain("signed sum " + std::to_string(out.signed_sum) + " != (-1)^{l(w)-l(xmin)}");
  if (((R[0].length % 2) + 2) % 2 != ((expo % 2) + 2) % 2)
    return complain("l(p_min) parity differs from l(w) - l(xmin)");
  return out;
}

}  // namespace qbruhat
