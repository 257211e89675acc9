#include "qbruhat/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace qbruhat {

namespace {

std::vector<int> identity_mat(int n) {
  std::vector<int> m(n * n, 0);
  for (int k = 0; k < n; ++k) m[k * n + k] = 1;
  return m;
}

std::vector<int> mat_mul(const std::vector<int>& a, const std::vector<int>& b, int n) {
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

IntVec mat_apply(const std::vector<int>& m, const IntVec& v, int n) {
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += m[i * n + j] * v[j];
    out[i] = s;
  }
  return out;
}

}  // namespace

WeylElt::WeylElt(const RootSystem& rs, std::vector<int> mat, std::vector<int> inv)
    : rs_(&rs), mat_(std::move(mat)), inv_(std::move(inv)) {
  length_ = compute_length();
}

int WeylElt::compute_length() const {
  const int n = rs_->rank();
  int count = 0;
  for (int k = 0; k < rs_->num_positive_roots(); ++k) {
    IntVec img = mat_apply(mat_, rs_->root(k), n);
    if (RootSystem::root_sign(img) < 0) ++count;
  }
  return count;
}

WeylElt WeylElt::identity(const RootSystem& rs) {
  auto id = identity_mat(rs.rank());
  return WeylElt(rs, id, id);
}

WeylElt WeylElt::simple(const RootSystem& rs, int j) {
  const int n = rs.rank();
  if (j < 1 || j > n) throw std::invalid_argument("simple reflection index out of range");
  std::vector<int> m = identity_mat(n);
  // column k: s_j(alpha_{k+1}) = alpha_{k+1} - <alpha_{k+1}, alpha_j^vee> alpha_j
  for (int k = 0; k < n; ++k) m[(j - 1) * n + k] -= rs.cartan()[j - 1][k];
  return WeylElt(rs, m, m);
}

WeylElt WeylElt::reflection(const RootSystem& rs, int root_idx) {
  const int n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (int k = 0; k < n; ++k) {
    IntVec col = rs.reflect_root(root_idx, unit_vec(n, k));
    for (int r = 0; r < n; ++r) m[r * n + k] = col[r];
  }
  return WeylElt(rs, m, m);
}

WeylElt WeylElt::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = identity(rs);
  for (int j : word) w = w * simple(rs, j);
  return w;
}

bool WeylElt::is_identity() const { return mat_ == identity_mat(rs_->rank()); }

WeylElt WeylElt::operator*(const WeylElt& o) const {
  const int n = rs_->rank();
  return WeylElt(*rs_, mat_mul(mat_, o.mat_, n), mat_mul(o.inv_, inv_, n));
}

WeylElt WeylElt::inverse() const { return WeylElt(*rs_, inv_, mat_); }

IntVec WeylElt::act_root(const IntVec& root_coords) const {
  return mat_apply(mat_, root_coords, rs_->rank());
}

IntVec WeylElt::act_root_inv(const IntVec& root_coords) const {
  return mat_apply(inv_, root_coords, rs_->rank());
}

IntVec WeylElt::act_coroot(const IntVec& cor) const {
  const int n = rs_->rank();
  IntVec out(n, 0);
  for (int j = 0; j < n; ++j) {
    if (cor[j] == 0) continue;
    IntVec col(n);
    for (int r = 0; r < n; ++r) col[r] = mat_[r * n + j];
    IntVec cc = rs_->coroot_of(col);  // (w alpha_{j+1})^vee
    for (int r = 0; r < n; ++r) out[r] += cor[j] * cc[r];
  }
  return out;
}

IntVec WeylElt::act_weight(const IntVec& lambda_fw) const {
  const int n = rs_->rank();
  IntVec out(n, 0);
  for (int k = 0; k < n; ++k) {
    IntVec col(n);
    for (int r = 0; r < n; ++r) col[r] = inv_[r * n + k];
    // <w lambda, alpha_{k+1}^vee> = <lambda, (w^{-1} alpha_{k+1})^vee>
    out[k] = static_cast<int>(RootSystem::pair_weight_coroot(lambda_fw, rs_->coroot_of(col)));
  }
  return out;
}

IntVec WeylElt::inv_act_affine_root(int j) const {
  const int n = rs_->rank();
  if (j == 0) return mat_apply(inv_, negate(rs_->root(rs_->theta_index())), n);
  IntVec col(n);
  for (int r = 0; r < n; ++r) col[r] = inv_[r * n + (j - 1)];
  return col;
}

bool WeylElt::left_descent(int j) const {
  return RootSystem::root_sign(inv_act_affine_root(j)) < 0;
}

bool WeylElt::right_descent(int j) const {
  const int n = rs_->rank();
  IntVec col(n);
  for (int r = 0; r < n; ++r) col[r] = mat_[r * n + (j - 1)];
  return RootSystem::root_sign(col) < 0;
}

std::vector<int> WeylElt::canonical_word() const {
  std::vector<int> word;
  WeylElt w = *this;
  while (!w.is_identity()) {
    int j = 1;
    while (j <= rs_->rank() && !w.left_descent(j)) ++j;
    if (j > rs_->rank()) throw std::runtime_error("no left descent on a non-identity element");
    word.push_back(j);
    w = simple(*rs_, j) * w;
  }
  return word;
}

std::string WeylElt::word_string() const {
  std::string s;
  for (int j : canonical_word()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(j);
  }
  return s;
}

WeylElt min_coset_rep(const WeylElt& w, const std::vector<int>& J) {
  WeylElt z = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (z.right_descent(j)) {
        z = z * WeylElt::simple(w.rs(), j);
        moved = true;
        break;
      }
    }
  }
  return z;
}

std::vector<WeylElt> enumerate_group(const RootSystem& rs, const std::vector<int>& J,
                                     std::size_t bound) {
  std::vector<WeylElt> out;
  std::map<std::vector<int>, int> seen;
  out.push_back(WeylElt::identity(rs));
  seen.emplace(out[0].key(), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    WeylElt w = out[head];
    for (int j : J) {
      WeylElt nw = w * WeylElt::simple(rs, j);
      if (seen.count(nw.key())) continue;
      if (out.size() >= bound)
        throw std::runtime_error("group enumeration exceeds bound " + std::to_string(bound));
      seen.emplace(nw.key(), static_cast<int>(out.size()));
      out.push_back(std::move(nw));
    }
  }
  return out;
}

WeylElt longest_element(const RootSystem& rs, const std::vector<int>& J) {
  WeylElt w = WeylElt::identity(rs);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int j : J) {
      if (!w.right_descent(j)) {
        w = w * WeylElt::simple(rs, j);
        moved = true;
        break;
      }
    }
  }
  return w;
}

AffineDatum affine_datum(const RootSystem& rs, int j) {
  if (j == 0)
    return AffineDatum{negate(rs.root(rs.theta_index())),
                       WeylElt::reflection(rs, rs.theta_index())};
  if (j < 1 || j > rs.rank()) throw std::invalid_argument("affine index out of range");
  return AffineDatum{rs.root(rs.simple_root_index(j)), WeylElt::simple(rs, j)};
}

namespace {

std::vector<int> greedy_word(const WeylElt& elt, bool largest) {
  std::vector<int> word;
  WeylElt w = elt;
  const int n = w.rs().rank();
  while (!w.is_identity()) {
    int pick = -1;
    for (int j = 1; j <= n; ++j) {
      if (w.left_descent(j)) {
        pick = j;
        if (!largest) break;
      }
    }
    if (pick < 0) throw std::runtime_error("no left descent on a non-identity element");
    word.push_back(pick);
    w = WeylElt::simple(w.rs(), pick) * w;
  }
  return word;
}

ReflectionOrder build_order(const RootSystem& rs, const std::vector<int>& J, bool largest) {
  WeylElt wJ = longest_element(rs, J);
  WeylElt w0 = longest_element(rs, rs.full_node_set());
  std::vector<int> word = greedy_word(wJ, largest);
  std::vector<int> tail = greedy_word(wJ.inverse() * w0, largest);
  word.insert(word.end(), tail.begin(), tail.end());
  return rs.order_from_word(word);
}

}  // namespace

ReflectionOrder default_reflection_order(const RootSystem& rs, const std::vector<int>& J) {
  return build_order(rs, J, false);
}

ReflectionOrder variant_reflection_order(const RootSystem& rs, const std::vector<int>& J) {
  return build_order(rs, J, true);
}

std::size_t group_size_bound_from_env() {
  if (const char* env = std::getenv("QBRUHAT_MAX_GROUP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultGroupBound;
}

}  // namespace qbruhat
