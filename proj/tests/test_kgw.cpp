#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbruhat/kgw.hpp"

using namespace qbruhat;

namespace {

RootSystem make(char f, int n) { return RootSystem(CartanSpec{family_from_char(f), n}); }

QlsContext context(const RootSystem& rs, int i) {
  return QlsContext(rs, i, default_reflection_order(rs, rs.complement({i})));
}

}  // namespace

TEST_CASE("group algebra arithmetic and canonical text") {
  GroupAlgebraElt one = GroupAlgebraElt::constant(3, 1);
  GroupAlgebraElt m = GroupAlgebraElt::monomial({-1, -2, 1});
  CHECK((one + m).to_string() == "1 + e^{-w1 - 2w2 + w3}");
  CHECK((m * m).to_string() == "e^{-2w1 - 4w2 + 2w3}");
  CHECK((m - m).is_zero());
  CHECK((m - m).to_string() == "0");
  CHECK(GroupAlgebraElt::monomial({1, 0, 0}) * GroupAlgebraElt::monomial({-1, 0, 0}) ==
        GroupAlgebraElt::constant(3, 1));
  CHECK((one + m).eval_at_one() == 2);
  CHECK((one - m).eval_at_one() == 0);
  CHECK(GroupAlgebraElt::monomial({0, 1, 0}, -3).to_string() == "-3 e^{w2}");
  CHECK(GroupAlgebraElt::zero().is_zero());
}

TEST_CASE("two point invariants") {
  RootSystem a1 = make('A', 1);
  Qbg g1(a1, {});
  WeylElt e1 = WeylElt::identity(a1), s1 = WeylElt::simple(a1, 1);
  CHECK(two_point(g1, e1, e1, {0}) == GroupAlgebraElt::constant(1, 1));
  // the only route from s_1 toward e is the quantum loop-back edge
  CHECK(two_point(g1, s1, e1, {0}).is_zero());
  CHECK(two_point(g1, s1, e1, {1}) == GroupAlgebraElt::constant(1, 1));

  RootSystem b4 = make('B', 4);
  Qbg g4(b4, {});
  WeylElt w = WeylElt::from_word(b4, {3, 4, 2, 3, 4, 2, 3});
  CHECK(two_point(g4, w, WeylElt::identity(b4), {0, 1, 2, 1}) ==
        GroupAlgebraElt::constant(4, 1));
  CHECK_THROWS_AS(two_point(g4, w, w, {-1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("divisor sum basics") {
  RootSystem rs = make('A', 1);
  QlsContext ctx = context(rs, 1);
  WeylElt e = WeylElt::identity(rs);
  CHECK(divisor_sum(ctx, e, e, {0}).is_zero());  // 1 - e^0

  RootSystem b2 = make('B', 2);
  QlsContext ctx2 = context(b2, 2);
  CHECK(divisor_sum(ctx2, WeylElt::identity(b2), WeylElt::identity(b2), {0, 0}).is_zero());
}

TEST_CASE("closed form at w = s3s4s2s3s4s2s3 in B4, i = 3") {
  RootSystem rs = make('B', 4);
  QlsContext ctx = context(rs, 3);
  WeylElt w = WeylElt::from_word(rs, {3, 4, 2, 3, 4, 2, 3});
  WeylElt x = WeylElt::identity(rs);

  InvariantResult res = divisor_cf(ctx, w, x, {0, 1, 2, 1});
  CHECK(res.branch == CfBranch::ROne);
  CHECK(res.r_size == 1);
  REQUIRE(res.x_min);
  CHECK(res.x_min->is_identity());
  CHECK(res.sign_exponent == 7);
  REQUIRE(res.wt_eta_fw);
  CHECK(*res.wt_eta_fw == IntVec{1, 0, 0, 0});  // (w varpi_3 + varpi_3)/2 = varpi_1
  GroupAlgebraElt expect =
      GroupAlgebraElt::constant(4, 1) + GroupAlgebraElt::monomial({1, 0, -1, 0});
  CHECK(res.value == expect);
  CHECK(res.value == divisor_sum(ctx, w, x, {0, 1, 2, 1}));

  // d = (1,1,2,1): |R| = 2, lengths differ by one, terms cancel to 1
  InvariantResult res2 = divisor_cf(ctx, w, x, {1, 1, 2, 1});
  CHECK(res2.branch == CfBranch::RAtLeastTwo);
  CHECK(res2.value == GroupAlgebraElt::constant(4, 1));
  CHECK(divisor_sum(ctx, w, x, {1, 1, 2, 1}) == GroupAlgebraElt::constant(4, 1));
}

TEST_CASE("cancelling pair across different lengths in B4, i = 3") {
  RootSystem rs = make('B', 4);
  QlsContext ctx = context(rs, 3);
  WeylElt w = WeylElt::from_word(rs, {3, 4, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 1});
  WeylElt x = WeylElt::from_word(rs, {2, 3, 4, 3});
  SignedSumCheck tc = signed_sum_check(ctx, w, x, {1, 2, 2, 1});
  CHECK(tc.pass);
  CHECK(tc.r_size == 2);
  CHECK(tc.signed_sum == 0);
  CHECK(divisor_cf(ctx, w, x, {1, 2, 2, 1}).value == GroupAlgebraElt::constant(4, 1));
  CHECK(divisor_sum(ctx, w, x, {1, 2, 2, 1}) == GroupAlgebraElt::constant(4, 1));
}

TEST_CASE("four-member R set: the length multiset sums to zero") {
  RootSystem rs = make('B', 4);
  QlsContext ctx = context(rs, 3);
  WeylElt w = WeylElt::from_word(rs, {3, 4, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
  WeylElt x = WeylElt::from_word(rs, {1, 2, 3, 4, 3, 1, 2, 1});
  SignedSumCheck tc = signed_sum_check(ctx, w, x, {1, 2, 2, 1});
  CHECK(tc.pass);
  CHECK(tc.r_size == 4);
  CHECK(tc.signed_sum == 0);
  CHECK(divisor_cf(ctx, w, x, {1, 2, 2, 1}).value == GroupAlgebraElt::constant(4, 1));

  SignedSumCheck tc1 = signed_sum_check(ctx, w, x, {0, 1, 2, 1});
  CHECK(tc1.pass);
  CHECK(tc1.r_size == 1);
}

TEST_CASE("trivial triple gives zero") {
  RootSystem rs = make('B', 3);
  for (int i : {1, 2, 3}) {
    QlsContext ctx = context(rs, i);
    WeylElt e = WeylElt::identity(rs);
    InvariantResult res = divisor_cf(ctx, e, e, {0, 0, 0});
    CHECK(res.value.is_zero());
    CHECK(res.value == divisor_sum(ctx, e, e, {0, 0, 0}));
  }
}

TEST_CASE("positivity certificates by branch shape") {
  RootSystem rs = make('B', 4);
  QlsContext ctx = context(rs, 3);
  WeylElt w = WeylElt::from_word(rs, {3, 4, 2, 3, 4, 2, 3});
  WeylElt x = WeylElt::identity(rs);

  // 1 + e^{-beta}
  InvariantResult plus = divisor_cf(ctx, w, x, {0, 1, 2, 1});
  PositivityCertificate c1 = positivity_certificate(rs, plus);
  CHECK(c1.kind == CertificateKind::OnePlusEMinusBeta);
  CHECK(c1.value_at_one == 2);
  REQUIRE(c1.beta_fw);
  CHECK(*c1.beta_fw == IntVec{-1, 0, 1, 0});  // varpi_3 - varpi_1 = a2 + 2a3 + 2a4

  // 1 - e^{-beta} = e^{-beta}(e^beta - 1)
  InvariantResult minus = divisor_cf(ctx, WeylElt::from_word(rs, {3, 4}), x, {0, 0, 2, 1});
  if (minus.branch == CfBranch::ROne && minus.value.terms().size() == 2) {
    PositivityCertificate c2 = positivity_certificate(rs, minus);
    CHECK((c2.kind == CertificateKind::EMinusBetaTimesEBetaMinusOne ||
           c2.kind == CertificateKind::OnePlusEMinusBeta));
    CHECK((c2.value_at_one == 0 || c2.value_at_one == 2));
  }

  // 0 and 1
  InvariantResult zero = divisor_cf(ctx, w, x, {3, 0, 0, 0});
  CHECK(positivity_certificate(rs, zero).value_at_one <= 1);
  InvariantResult one = divisor_cf(ctx, w, x, {1, 1, 2, 1});
  PositivityCertificate c3 = positivity_certificate(rs, one);
  CHECK(c3.kind == CertificateKind::One);
  CHECK(c3.value_at_one == 1);
}

TEST_CASE("both certified two-term shapes occur across B2") {
  RootSystem rs = make('B', 2);
  auto W = enumerate_group(rs, rs.full_node_set());
  bool saw_minus = false, saw_plus = false;
  for (int i : {1, 2}) {
    QlsContext ctx = context(rs, i);
    for (const auto& w : W) {
      for (const auto& x : W) {
        for (int d1 = 0; d1 <= 3; ++d1) {
          for (int d2 = 0; d2 <= 3; ++d2) {
            InvariantResult res = divisor_cf(ctx, w, x, {d1, d2});
            PositivityCertificate cert = positivity_certificate(rs, res);
            CHECK((cert.value_at_one == 0 || cert.value_at_one == 1 || cert.value_at_one == 2));
            if (cert.kind == CertificateKind::EMinusBetaTimesEBetaMinusOne) saw_minus = true;
            if (cert.kind == CertificateKind::OnePlusEMinusBeta) saw_plus = true;
          }
        }
      }
    }
  }
  CHECK(saw_minus);
  CHECK(saw_plus);
}

TEST_CASE("closed form matches the divisor sum on B3 random triples") {
  RootSystem rs = make('B', 3);
  auto W = enumerate_group(rs, rs.full_node_set());
  for (int i : {1, 2, 3}) {
    QlsContext ctx = context(rs, i);
    for (size_t wi = 0; wi < W.size(); wi += 11) {
      for (size_t xi = 0; xi < W.size(); xi += 13) {
        for (IntVec d : {IntVec{1, 2, 1}, IntVec{0, 1, 2}, IntVec{2, 0, 1}, IntVec{3, 3, 3}}) {
          InvariantResult cf = divisor_cf(ctx, W[wi], W[xi], d);
          CHECK(cf.value == divisor_sum(ctx, W[wi], W[xi], d));
        }
      }
    }
  }
}

TEST_CASE("minuscule closed form in type A") {
  RootSystem rs = make('A', 2);
  for (int i : {1, 2}) {
    QlsContext ctx = context(rs, i);
    auto W = enumerate_group(rs, rs.full_node_set());
    for (const auto& w : W) {
      for (const auto& x : W) {
        for (int d1 = 0; d1 <= 2; ++d1) {
          for (int d2 = 0; d2 <= 2; ++d2) {
            InvariantResult cf = divisor_cf(ctx, w, x, {d1, d2});
            CHECK(cf.value == divisor_sum(ctx, w, x, {d1, d2}));
            positivity_certificate(rs, cf);
          }
        }
      }
    }
  }
}

TEST_CASE("closed form refuses nodes beyond quasi-minuscule") {
  RootSystem rs = make('G', 2);
  REQUIRE(rs.classify_fundamental(2) == WeightClass::Neither);
  QlsContext ctx(rs, 2, default_reflection_order(rs, rs.complement({2})));
  CHECK(ctx.N() == 6);
  WeylElt e = WeylElt::identity(rs);
  CHECK_THROWS_AS(divisor_cf(ctx, e, e, zero_vec(2)), std::invalid_argument);
  // the divisor sum still works at higher levels
  CHECK(divisor_sum(ctx, e, e, zero_vec(2)).is_zero());
  CHECK(divisor_sum(ctx, WeylElt::simple(rs, 1), e, zero_vec(2)).is_zero());
  // F4 carries a node whose level exceeds the default cap; the cap is a knob
  RootSystem f4 = make('F', 4);
  int wide = -1;
  for (int i = 1; i <= 4 && wide < 0; ++i)
    if (f4.level_N(i) > 6) wide = i;
  REQUIRE(wide > 0);
  CHECK_THROWS_AS(
      QlsContext(f4, wide, default_reflection_order(f4, f4.complement({wide }))),
      std::invalid_argument);
}

TEST_CASE("theorem check reports violations as data, not exceptions") {
  RootSystem rs = make('B', 2);
  QlsContext ctx = context(rs, 1);
  auto W = enumerate_group(rs, rs.full_node_set());
  for (const auto& w : W)
    for (const auto& x : W) {
      SignedSumCheck tc = signed_sum_check(ctx, w, x, {2, 2});
      CHECK(tc.pass);
    }
}
