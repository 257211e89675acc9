// Acceptance suite: one pass/fail line per criterion.
//
// 1-3  the three worked B4 (i = 3) cases
// 4    the theta-edge singleton law for i = 2 in B3, exhaustively
// 5    signed-sum law and closed-form/oracle agreement over small-rank sweeps
// 6    minuscule closed form against the oracle in types A2, A3
// 7    R nonempty forces the two-point bound, across all sweeps
// 8    label-increasing uniqueness / shortestness / lex-minimality in B3
// 9    deletion-lemma and qL-lemma contracts
// 10   positivity certificates and the e -> 1 specialization

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "qbruhat/json_io.hpp"

using namespace qbruhat;

namespace {

int failures = 0;
std::vector<SweepStats> sweep_records;  // collected by criteria 5 and 6

struct Criterion {
  int id;
  std::string text;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Criterion(int id_, std::string text_) : id(id_), text(std::move(text_)) {}
  void finish(bool ok, const std::string& note = "") {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << "criterion " << id << ": " << (ok ? "PASS" : "FAIL") << " - " << text;
    if (!note.empty()) os << " [" << note << "]";
    os << " (" << secs << " s)";
    std::cout << os.str() << std::endl;
    if (!ok) ++failures;
  }
};

QlsContext context(const RootSystem& rs, int i) {
  return QlsContext(rs, i, default_reflection_order(rs, rs.complement({i})));
}

std::multiset<int> lengths_of(const std::vector<PathTuple>& R) {
  std::multiset<int> out;
  for (const auto& p : R) out.insert(p.length);
  return out;
}

void criterion_1() {
  Criterion c(1, "B4 i=3: R-sets for w = s3 s4 s2 s3 s4 s2 s3, x = e");
  bool ok = true;
  RootSystem rs(CartanSpec{Family::B, 4});
  QlsContext ctx = context(rs, 3);
  WeylElt w = WeylElt::from_word(rs, {3, 4, 2, 3, 4, 2, 3});
  WeylElt x = WeylElt::identity(rs);

  auto r1 = enumerate_R(ctx, w, x, {0, 1, 2, 1});
  ok = ok && r1.size() == 1 && ctx.graph().vertex(r1[0].end).is_identity() &&
       r1[0].length == 1 && r1[0].qwt == IntVec{0, 1, 2, 1};

  auto r2 = enumerate_R(ctx, w, x, {1, 1, 2, 1});
  std::set<std::string> ends;
  for (const auto& p : r2) ends.insert(ctx.graph().vertex(p.end).word_string());
  ok = ok && r2.size() == 2 && ends == std::set<std::string>{"", "1"} &&
       lengths_of(r2) == std::multiset<int>{1, 2};

  ok = ok && enumerate_R(ctx, w, x, {0, 1, 1, 1}).empty() &&
       enumerate_R(ctx, w, x, {0, 1, 3, 1}).empty();
  c.finish(ok);
}

void criterion_2() {
  Criterion c(2, "B4 i=3: w of length 13, x = s2 s3 s4 s3");
  bool ok = true;
  RootSystem rs(CartanSpec{Family::B, 4});
  QlsContext ctx = context(rs, 3);
  WeylElt w = WeylElt::from_word(rs, {3, 4, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 1});
  WeylElt x = WeylElt::from_word(rs, {2, 3, 4, 3});
  ok = ok && w.length() == 13;

  auto r = enumerate_R(ctx, w, x, {1, 2, 2, 1});
  ok = ok && r.size() == 2 && lengths_of(r) == std::multiset<int>{1, 2};
  SignedSumCheck tc = signed_sum_check(ctx, w, x, {1, 2, 2, 1});
  ok = ok && tc.pass && tc.signed_sum == 0;
  ok = ok && divisor_cf(ctx, w, x, {1, 2, 2, 1}).value == GroupAlgebraElt::constant(4, 1);
  ok = ok && enumerate_R(ctx, w, x, {1, 1, 2, 1}).empty();
  c.finish(ok);
}

void criterion_3() {
  Criterion c(3, "B4 i=3: |R| = 4 / 2 / 1 across the three degree regimes");
  bool ok = true;
  RootSystem rs(CartanSpec{Family::B, 4});
  QlsContext ctx = context(rs, 3);
  WeylElt w = WeylElt::from_word(rs, {3, 4, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
  WeylElt x = WeylElt::from_word(rs, {1, 2, 3, 4, 3, 1, 2, 1});

  auto r4 = enumerate_R(ctx, w, x, {1, 2, 2, 1});
  int base = r4.empty() ? 0 : lengths_of(r4).count(1) ? 1 : 0;
  (void)base;
  ok = ok && r4.size() == 4 && lengths_of(r4) == std::multiset<int>{1, 2, 2, 3};

  auto r2 = enumerate_R(ctx, w, x, {1, 1, 2, 1});
  ok = ok && r2.size() == 2;

  auto r1 = enumerate_R(ctx, w, x, {0, 1, 2, 1});
  ok = ok && r1.size() == 1 &&
       ctx.graph().vertex(r1[0].end) == tilted_min(ctx.graph(), ctx.J(), w, x);
  c.finish(ok);
}

void criterion_4() {
  Criterion c(4, "theta-edge singleton law for i = 2 in B3, exhaustive with d_2 = 2, d_1, d_3 <= 3");
  RootSystem rs(CartanSpec{Family::B, 3});
  QlsContext ctx = context(rs, 2);
  const Qbg& g = ctx.graph();
  std::vector<int> J = ctx.J();
  WeylElt st = WeylElt::reflection(rs, rs.theta_index());
  IntVec theta_vee = rs.coroot(rs.theta_index());
  auto W = enumerate_group(rs, rs.full_node_set());
  long long checked = 0, bad = 0;
  for (const auto& w : W) {
    bool w_in_theta_coset = min_coset_rep(w, J) == st;
    for (const auto& x : W) {
      bool x_in_wj = min_coset_rep(x, J).is_identity();
      for (int d1 = 0; d1 <= 3; ++d1) {
        for (int d3 = 0; d3 <= 3; ++d3) {
          IntVec d = {d1, 2, d3};
          auto R = enumerate_R(ctx, w, x, d);
          ++checked;
          if (!w_in_theta_coset || !x_in_wj) {
            if (!R.empty()) ++bad;
            continue;
          }
          WeylElt v = st * w;  // w = s_theta v
          auto [dist, qvx] = g.dist_qwt(g.index_of(v), g.index_of(x));
          (void)dist;
          bool admits = dominates(sub(d, add(theta_vee, qvx)), zero_vec(3));
          if (!admits) {
            if (!R.empty()) ++bad;
            continue;
          }
          if (R.size() != 1) {
            ++bad;
            continue;
          }
          const PathTuple& p = R[0];
          const DirectedPath& p2 = p.segs.front();
          bool shape = p.length == 1 && g.vertex(p.end) == v &&
                       p2.labels.size() == 1 && p2.labels[0] == rs.theta_index() &&
                       p2.kinds[0] == EdgeKind::Quantum;
          if (!shape) ++bad;
        }
      }
    }
  }
  c.finish(bad == 0 && checked == 48LL * 48 * 16,
           std::to_string(checked) + " cases, " + std::to_string(bad) + " mismatches");
}

void criterion_5() {
  Criterion c(5, "signed-sum law + closed-form/oracle agreement sweeps (A2, B2, A3, B3)");
  struct Case {
    Family f;
    int rank, node;
  };
  std::vector<Case> cases = {{Family::A, 2, 1}, {Family::A, 2, 2}, {Family::B, 2, 1},
                             {Family::B, 2, 2}, {Family::A, 3, 2}, {Family::B, 3, 1},
                             {Family::B, 3, 2}};
  bool ok = true;
  long long triples = 0;
  std::string note;
  for (const Case& cs : cases) {
    SweepConfig cfg;
    cfg.spec = CartanSpec{cs.f, cs.rank};
    cfg.node = cs.node;
    cfg.box = 3;
    cfg.jobs = 2;
    SweepStats s = run_sweep(cfg);
    sweep_records.push_back(s);
    triples += s.triples;
    if (s.violations != 0) {
      ok = false;
      if (note.empty()) note = cfg.spec.name() + " i=" + std::to_string(cs.node) + ": " +
                               s.first_violation;
    }
  }
  c.finish(ok, std::to_string(triples) + " triples" + (note.empty() ? "" : "; " + note));
}

void criterion_6() {
  Criterion c(6, "minuscule closed form equals the divisor sum in A2 and A3 (all i)");
  bool ok = true;
  long long triples = 0;
  for (auto [rank, node] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}}) {
    SweepConfig cfg;
    cfg.spec = CartanSpec{Family::A, rank};
    cfg.node = node;
    cfg.box = 3;
    cfg.jobs = 2;
    SweepStats s = run_sweep(cfg);
    sweep_records.push_back(s);
    triples += s.triples;
    ok = ok && s.violations == 0;
  }
  c.finish(ok, std::to_string(triples) + " triples");
}

void criterion_7() {
  Criterion c(7, "R nonempty forces qwt(w=>x) <= d in every sweep case");
  long long nonempty = 0, bad = 0;
  for (const SweepStats& s : sweep_records) {
    nonempty += s.r_nonempty;
    bad += s.twp_violations;
  }
  c.finish(bad == 0 && nonempty > 0,
           std::to_string(nonempty) + " nonempty R-sets, " + std::to_string(bad) + " violations");
}

void criterion_8() {
  Criterion c(8, "label-increasing uniqueness / shortestness / lex-minimality over B3");
  RootSystem rs(CartanSpec{Family::B, 3});
  Qbg g(rs, {});
  ReflectionOrder ord = default_reflection_order(rs, rs.complement({2}));
  PairSweepStats s = label_increasing_sweep(g, ord, 2);
  c.finish(s.violations == 0 && s.pairs == 48LL * 48,
           std::to_string(s.pairs) + " pairs" +
               (s.first_violation.empty() ? "" : "; " + s.first_violation));
}

void criterion_9() {
  Criterion c(9, "deletion-lemma contracts (B2 exhaustive, B3 sampled) and qL witnesses");
  RootSystem b2(CartanSpec{Family::B, 2});
  Qbg g2(b2, {});
  PairSweepStats dl2 = transport_sweep_exhaustive(g2);

  RootSystem b3(CartanSpec{Family::B, 3});
  Qbg g3(b3, {});
  PairSweepStats dl3 = transport_sweep_sampled(g3, 10000, 20240817u);
  PairSweepStats ql = parabolic_descent_sweep(b3, {1, 3});

  bool ok = dl2.violations == 0 && dl3.violations == 0 && ql.violations == 0 &&
            dl3.pairs == 10000 && ql.pairs == 48;
  std::string note = std::to_string(dl2.pairs) + " exhaustive paths, 10000 samples";
  if (!dl2.first_violation.empty()) note += "; " + dl2.first_violation;
  if (!dl3.first_violation.empty()) note += "; " + dl3.first_violation;
  if (!ql.first_violation.empty()) note += "; " + ql.first_violation;
  c.finish(ok, note);
}

void criterion_10() {
  Criterion c(10, "positivity certificates with e->1 in {0,1,2} across all sweeps");
  long long bad = 0, triples = 0;
  for (const SweepStats& s : sweep_records) {
    bad += s.positivity_violations;
    triples += s.triples;
  }
  c.finish(bad == 0 && triples > 0, std::to_string(bad) + " failures");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures == 0)
    std::cout << "all criteria passed" << std::endl;
  else
    std::cout << failures << " criteria FAILED" << std::endl;
  return failures == 0 ? 0 : 1;
}
