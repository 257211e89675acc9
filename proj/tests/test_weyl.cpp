#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "qbruhat/root_system.hpp"
#include "qbruhat/weyl.hpp"

using namespace qbruhat;

namespace {

RootSystem make(char f, int n) { return RootSystem(CartanSpec{family_from_char(f), n}); }

std::vector<int> complement_of(const RootSystem& rs, int i) {
  std::vector<int> J;
  for (int j = 1; j <= rs.rank(); ++j)
    if (j != i) J.push_back(j);
  return J;
}

}  // namespace

TEST_CASE("words and lengths") {
  RootSystem b4 = make('B', 4);
  CHECK(WeylElt::from_word(b4, {}).length() == 0);
  CHECK(WeylElt::from_word(b4, {}).is_identity());
  CHECK(WeylElt::from_word(b4, {1, 1}).is_identity());
  CHECK(WeylElt::from_word(b4, {3, 4, 2, 3, 4, 2, 3}).length() == 7);
  CHECK(WeylElt::from_word(b4, {3, 4, 2, 3, 4, 1, 2, 3, 4, 1, 2, 3, 1}).length() == 13);
  CHECK_THROWS_AS(WeylElt::from_word(b4, {5}), std::invalid_argument);

  RootSystem b2 = make('B', 2);
  CHECK(longest_element(b2, b2.full_node_set()).length() == 4);
  CHECK(longest_element(b2, b2.full_node_set()).length() == b2.num_positive_roots());
}

TEST_CASE("length steps by one under simple multiplication") {
  RootSystem rs = make('B', 3);
  auto W = enumerate_group(rs, rs.full_node_set());
  for (const auto& w : W) {
    for (int j = 1; j <= 3; ++j) {
      WeylElt ws = w * WeylElt::simple(rs, j);
      if (w.right_descent(j))
        CHECK(ws.length() == w.length() - 1);
      else
        CHECK(ws.length() == w.length() + 1);
    }
    CHECK(w.inverse().length() == w.length());
  }
}

TEST_CASE("reflection action formula") {
  RootSystem rs = make('B', 4);
  // s_j alpha_j = -alpha_j
  for (int j = 1; j <= 4; ++j) {
    WeylElt s = WeylElt::simple(rs, j);
    CHECK(s.act_root(rs.root(rs.simple_root_index(j))) ==
          negate(rs.root(rs.simple_root_index(j))));
    CHECK((s * s).is_identity());
  }
  // s_theta mu = mu - <mu, theta^vee> theta on weights
  WeylElt st = WeylElt::reflection(rs, rs.theta_index());
  for (int i = 1; i <= 4; ++i) {
    IntVec mu = unit_vec(4, i - 1);
    long long pr = RootSystem::pair_weight_coroot(mu, rs.coroot(rs.theta_index()));
    IntVec expect = mu;
    IntVec theta_fw = rs.fw_coords_of_root(rs.root(rs.theta_index()));
    for (int k = 0; k < 4; ++k) expect[k] -= static_cast<int>(pr) * theta_fw[k];
    CHECK(st.act_weight(mu) == expect);
  }
  CHECK((st * st).is_identity());
  CHECK(st.length() % 2 == 1);
}

TEST_CASE("action consistency between root, coroot and weight pictures") {
  RootSystem rs = make('B', 3);
  std::mt19937 gen(7);
  auto W = enumerate_group(rs, rs.full_node_set());
  std::uniform_int_distribution<int> pick(0, static_cast<int>(W.size()) - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const WeylElt& w = W[pick(gen)];
    CHECK((w * w.inverse()).is_identity());
    for (int k = 0; k < rs.num_positive_roots(); ++k) {
      // <w lambda, (w beta)^vee> = <lambda, beta^vee>
      IntVec wbeta = w.act_root(rs.root(k));
      IntVec wcor = w.act_coroot(rs.coroot(k));
      CHECK(rs.coroot_of(wbeta) == wcor);
      IntVec lam = {1, -2, 3};
      CHECK(RootSystem::pair_weight_coroot(w.act_weight(lam), wcor) ==
            RootSystem::pair_weight_coroot(lam, rs.coroot(k)));
    }
  }
}

TEST_CASE("group enumeration sizes") {
  CHECK(enumerate_group(make('A', 2), {1, 2}).size() == 6);
  RootSystem b4 = make('B', 4);
  CHECK(enumerate_group(b4, b4.full_node_set()).size() == 384);
  RootSystem b3 = make('B', 3);
  CHECK(enumerate_group(b3, b3.full_node_set()).size() == 48);
  CHECK(enumerate_group(b3, {1, 3}).size() == 4);
  CHECK(enumerate_group(b3, {}).size() == 1);
  CHECK_THROWS(enumerate_group(b4, b4.full_node_set(), 100));
}

TEST_CASE("enumeration is duplicate-free") {
  RootSystem rs = make('B', 3);
  auto W = enumerate_group(rs, rs.full_node_set());
  std::set<std::vector<int>> keys;
  for (const auto& w : W) keys.insert(w.key());
  CHECK(keys.size() == W.size());
}

TEST_CASE("min coset representative") {
  RootSystem rs = make('B', 3);
  std::vector<int> J = {1, 3};
  auto W = enumerate_group(rs, rs.full_node_set());
  auto WJ = enumerate_group(rs, J);
  for (const auto& w : W) {
    WeylElt rep = min_coset_rep(w, J);
    // brute-force coset minimum
    WeylElt best = w;
    for (const auto& y : WJ) {
      WeylElt z = w * y;
      if (z.length() < best.length()) best = z;
    }
    CHECK(rep == best);
    CHECK(min_coset_rep(rep, J) == rep);  // idempotent
    // length additivity on the coset
    for (const auto& y : WJ) CHECK((rep * y).length() == rep.length() + y.length());
  }
  // elements of W_J map to the identity
  for (const auto& y : WJ) CHECK(min_coset_rep(y, J).is_identity());
}

TEST_CASE("floor of w0 in B_n with J = I minus node 2 is s_theta") {
  for (int n : {3, 4}) {
    RootSystem rs = make('B', n);
    std::vector<int> J = complement_of(rs, 2);
    WeylElt w0 = longest_element(rs, rs.full_node_set());
    WeylElt st = WeylElt::reflection(rs, rs.theta_index());
    CHECK(min_coset_rep(w0, J) == st);
    // s_theta commutes with s_j for j in J
    for (int j : J) {
      WeylElt sj = WeylElt::simple(rs, j);
      CHECK(st * sj == sj * st);
    }
  }
}

TEST_CASE("affine datum") {
  RootSystem a2 = make('A', 2);
  AffineDatum d1 = affine_datum(a2, 1);
  CHECK(d1.root_coords == IntVec{1, 0});
  CHECK(d1.reflection == WeylElt::simple(a2, 1));

  RootSystem b2 = make('B', 2);
  AffineDatum d0 = affine_datum(b2, 0);
  CHECK(d0.root_coords == IntVec{-1, -2});
  CHECK(d0.reflection == WeylElt::reflection(b2, b2.theta_index()));
  CHECK((d0.reflection * d0.reflection).is_identity());
  CHECK(d0.reflection.length() % 2 == 1);
  CHECK_THROWS_AS(affine_datum(b2, 3), std::invalid_argument);
}

TEST_CASE("canonical words are reduced and deterministic") {
  RootSystem rs = make('B', 3);
  auto W = enumerate_group(rs, rs.full_node_set());
  std::set<std::string> words;
  for (const auto& w : W) {
    auto word = w.canonical_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    CHECK(WeylElt::from_word(rs, word) == w);
    words.insert(w.word_string());
  }
  CHECK(words.size() == W.size());
  CHECK(WeylElt::identity(rs).word_string() == "");
}

TEST_CASE("w0 is the unique longest element") {
  RootSystem rs = make('B', 2);
  auto W = enumerate_group(rs, rs.full_node_set());
  WeylElt w0 = longest_element(rs, rs.full_node_set());
  int count = 0;
  for (const auto& w : W)
    if (w.length() == rs.num_positive_roots()) ++count;
  CHECK(count == 1);
  CHECK(w0.length() == rs.num_positive_roots());
}
