#include "qbruhat/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qbruhat {

IntVec zero_vec(int rank) { return IntVec(rank, 0); }

IntVec unit_vec(int rank, int k) {
  IntVec v(rank, 0);
  v[k] = 1;
  return v;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

IntVec negate(const IntVec& a) {
  IntVec r(a);
  for (auto& x : r) x = -x;
  return r;
}

bool is_zero(const IntVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool dominates(const IntVec& a, const IntVec& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

namespace {

// Fraction-free determinant (Bareiss), n <= 8.
long long int_det(std::vector<std::vector<long long>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { p = r; break; }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

RootSystem::RootSystem(const CartanSpec& spec)
    : spec_(spec), cartan_(cartan_matrix(spec)) {
  const int n = spec_.rank;

  // Orbit closure: start from the simple roots/coroots, saturate under the
  // simple reflections, keep the positive half.
  std::map<IntVec, IntVec> found;  // root coords -> coroot coords
  std::vector<IntVec> queue;
  for (int j = 0; j < n; ++j) {
    found.emplace(unit_vec(n, j), unit_vec(n, j));
    queue.push_back(unit_vec(n, j));
  }
  while (!queue.empty()) {
    IntVec beta = queue.back();
    queue.pop_back();
    const IntVec cor = found.at(beta);
    for (int j = 0; j < n; ++j) {
      // s_j beta = beta - <beta, alpha_j^vee> alpha_j
      int pr = 0;
      for (int k = 0; k < n; ++k) pr += cartan_[j][k] * beta[k];
      IntVec nb = beta;
      nb[j] -= pr;
      if (root_sign(nb) < 0) continue;
      if (found.count(nb)) continue;
      // coroot transforms by s_j on the coroot side
      int prc = 0;
      for (int k = 0; k < n; ++k) prc += cartan_[k][j] * cor[k];
      IntVec nc = cor;
      nc[j] -= prc;
      found.emplace(nb, nc);
      queue.push_back(nb);
    }
  }

  roots_.reserve(found.size());
  coroots_.reserve(found.size());
  std::vector<std::pair<int, IntVec>> order;
  for (const auto& [r, c] : found) {
    (void)c;
    order.emplace_back(std::accumulate(r.begin(), r.end(), 0), r);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [h, r] : order) {
    (void)h;
    roots_.push_back(r);
    coroots_.push_back(found.at(r));
  }

  simple_idx_.assign(n, -1);
  for (int j = 0; j < n; ++j) simple_idx_[j] = root_index(unit_vec(n, j));

  // theta: the dominance-maximal positive root (unique in an irreducible system)
  theta_ = -1;
  for (int k = 0; k < num_positive_roots(); ++k) {
    bool maximal = true;
    for (int m = 0; m < num_positive_roots(); ++m)
      if (!dominates(roots_[k], roots_[m])) { maximal = false; break; }
    if (maximal) {
      theta_ = k;
      break;
    }
  }
  if (theta_ < 0) throw std::runtime_error("no dominance-maximal root found");

  // adjugate and determinant of the Cartan matrix, for Q^+ membership tests
  std::vector<std::vector<long long>> c64(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c64[i][j] = cartan_[i][j];
  cartan_det_ = int_det(c64);
  cartan_adj_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<long long>> minor;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<long long> row;
        for (int cc = 0; cc < n; ++cc)
          if (cc != i) row.push_back(c64[r][cc]);
        minor.push_back(std::move(row));
      }
      long long d = int_det(minor);
      cartan_adj_[i][j] = (((i + j) % 2) ? -d : d);
    }
  }
}

int RootSystem::height(int idx) const {
  return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0);
}

int RootSystem::root_index(const IntVec& coords) const {
  auto it = std::lower_bound(
      roots_.begin(), roots_.end(), coords, [this](const IntVec& a, const IntVec& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        return ha != hb ? ha < hb : a < b;
      });
  if (it != roots_.end() && *it == coords) return static_cast<int>(it - roots_.begin());
  return -1;
}

int RootSystem::root_sign(const IntVec& coords) {
  for (int x : coords)
    if (x != 0) return x > 0 ? 1 : -1;
  throw std::invalid_argument("zero vector is not a root");
}

IntVec RootSystem::coroot_of(const IntVec& root_coords) const {
  if (root_sign(root_coords) > 0) {
    int idx = root_index(root_coords);
    if (idx < 0) throw std::invalid_argument("not a root");
    return coroots_[idx];
  }
  int idx = root_index(negate(root_coords));
  if (idx < 0) throw std::invalid_argument("not a root");
  return negate(coroots_[idx]);
}

long long RootSystem::pair_weight_coroot(const IntVec& lambda_fw, const IntVec& cor) {
  long long s = 0;
  for (size_t k = 0; k < lambda_fw.size(); ++k)
    s += static_cast<long long>(lambda_fw[k]) * cor[k];
  return s;
}

int RootSystem::pair_root_simple_coroot(const IntVec& root_coords, int j) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += cartan_[j - 1][k] * root_coords[k];
  return s;
}

int RootSystem::pair_simple_root_coroot(int j, const IntVec& cor) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += cartan_[k][j - 1] * cor[k];
  return s;
}

long long RootSystem::pair_root_coroot(const IntVec& root_coords, const IntVec& cor) const {
  long long s = 0;
  for (int j = 1; j <= rank(); ++j)
    s += static_cast<long long>(cor[j - 1]) * pair_root_simple_coroot(root_coords, j);
  return s;
}

IntVec RootSystem::fw_coords_of_root(const IntVec& root_coords) const {
  IntVec out(rank(), 0);
  for (int k = 0; k < rank(); ++k) out[k] = pair_root_simple_coroot(root_coords, k + 1);
  return out;
}

IntVec RootSystem::rho_fw() const { return IntVec(rank(), 1); }

long long RootSystem::two_rho_pair(const IntVec& cor) const {
  long long s = 0;
  for (int x : cor) s += x;
  return 2 * s;
}

long long RootSystem::two_rho_J_pair(const std::vector<int>& J, const IntVec& cor) const {
  long long s = 0;
  for (int idx : positive_roots_in(J)) s += pair_root_coroot(roots_[idx], cor);
  return s;
}

std::vector<int> RootSystem::full_node_set() const {
  std::vector<int> v(rank());
  std::iota(v.begin(), v.end(), 1);
  return v;
}

std::vector<int> RootSystem::complement(const std::vector<int>& J) const {
  std::vector<bool> in(rank() + 1, false);
  for (int j : J) in[j] = true;
  std::vector<int> out;
  for (int j = 1; j <= rank(); ++j)
    if (!in[j]) out.push_back(j);
  return out;
}

bool RootSystem::root_in_span(int idx, const std::vector<int>& J) const {
  std::vector<bool> in(rank() + 1, false);
  for (int j : J) in[j] = true;
  const IntVec& r = roots_[idx];
  for (int k = 0; k < rank(); ++k)
    if (r[k] != 0 && !in[k + 1]) return false;
  return true;
}

std::vector<int> RootSystem::positive_roots_in(const std::vector<int>& J) const {
  std::vector<int> out;
  for (int k = 0; k < num_positive_roots(); ++k)
    if (root_in_span(k, J)) out.push_back(k);
  return out;
}

IntVec RootSystem::reflect_root(int root_idx, const IntVec& v) const {
  long long pr = pair_root_coroot(v, coroots_[root_idx]);
  IntVec out = v;
  for (int k = 0; k < rank(); ++k) out[k] -= static_cast<int>(pr) * roots_[root_idx][k];
  return out;
}

int RootSystem::simple_reflect(int j, int root_idx) const {
  int pr = pair_root_simple_coroot(roots_[root_idx], j);
  IntVec nb = roots_[root_idx];
  nb[j - 1] -= pr;
  if (root_sign(nb) < 0) return -1;
  return root_index(nb);
}

int RootSystem::reflection_length(int root_idx) const {
  int count = 0;
  for (int k = 0; k < num_positive_roots(); ++k) {
    IntVec img = reflect_root(root_idx, roots_[k]);
    if (root_sign(img) < 0) ++count;
  }
  return count;
}

bool RootSystem::is_quantum_root(int root_idx) const {
  const long long bound = two_rho_pair(coroots_[root_idx]) - 1;  // 2<rho,gamma^vee> - 1
  const int len = reflection_length(root_idx);
  if (len > bound)
    throw std::runtime_error("ell(s_gamma) exceeds 2<rho,gamma^vee>-1 for " +
                             root_name(root_idx));
  return len == bound;
}

WeightClass RootSystem::classify_fundamental(int i) const {
  int maxv = 0;
  for (int k = 0; k < num_positive_roots(); ++k)
    maxv = std::max(maxv, coroots_[k][i - 1]);
  if (maxv <= 1) return WeightClass::Minuscule;
  if (maxv == 2) return WeightClass::QuasiMinuscule;
  return WeightClass::Neither;
}

int RootSystem::level_N(int i) const {
  long long l = 1;
  for (int k = 0; k < num_positive_roots(); ++k) {
    int v = coroots_[k][i - 1];
    if (v != 0) l = std::lcm(l, static_cast<long long>(v));
  }
  return static_cast<int>(l);
}

bool RootSystem::weight_in_root_lattice(const IntVec& lambda_fw, IntVec* root_coords) const {
  const int n = rank();
  IntVec out(n, 0);
  for (int k = 0; k < n; ++k) {
    long long s = 0;
    for (int m = 0; m < n; ++m) s += cartan_adj_[k][m] * lambda_fw[m];
    if (s % cartan_det_ != 0) return false;
    out[k] = static_cast<int>(s / cartan_det_);
  }
  if (root_coords) *root_coords = out;
  return true;
}

bool RootSystem::weight_in_Q_plus(const IntVec& lambda_fw) const {
  IntVec rc;
  if (!weight_in_root_lattice(lambda_fw, &rc)) return false;
  return dominates(rc, zero_vec(rank()));
}

ReflectionOrder RootSystem::order_from_word(const std::vector<int>& word) const {
  if (static_cast<int>(word.size()) != num_positive_roots())
    throw std::invalid_argument("word length must equal the number of positive roots");
  ReflectionOrder ord;
  ord.word = word;
  ord.pos_of.assign(num_positive_roots(), -1);
  // beta_k = s_{i_1} ... s_{i_{k-1}} (alpha_{i_k}), tracked on coordinates
  for (size_t k = 0; k < word.size(); ++k) {
    IntVec beta = unit_vec(rank(), word[k] - 1);
    for (size_t t = k; t-- > 0;) {
      int j = word[t];
      int pr = pair_root_simple_coroot(beta, j);
      beta[j - 1] -= pr;
    }
    if (root_sign(beta) < 0)
      throw std::invalid_argument("word is not reduced: produced a negative root");
    int idx = root_index(beta);
    if (idx < 0 || ord.pos_of[idx] != -1)
      throw std::invalid_argument("word is not a reduced word of w0");
    ord.pos_of[idx] = static_cast<int>(k);
    ord.roots.push_back(idx);
  }
  return ord;
}

OrderCheck RootSystem::validate_reflection_order(const ReflectionOrder& ord,
                                                 const std::vector<int>& J) const {
  OrderCheck res;
  const int m = num_positive_roots();
  if (static_cast<int>(ord.roots.size()) != m) {
    res.ok = false;
    res.report = "order does not cover all positive roots";
    return res;
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      int s = root_index(add(roots_[a], roots_[b]));
      if (s < 0) continue;
      int pa = ord.pos_of[a], pb = ord.pos_of[b], ps = ord.pos_of[s];
      if ((ps > pa && ps > pb) || (ps < pa && ps < pb)) {
        res.ok = false;
        res.report = "convexity violated: " + root_name(s) + " = " + root_name(a) + " + " +
                     root_name(b) + " is not between them";
        return res;
      }
    }
  }
  auto inJ = positive_roots_in(J);
  const int prefix = static_cast<int>(inJ.size());
  for (int idx : inJ) {
    if (ord.pos_of[idx] >= prefix) {
      res.ok = false;
      res.report = "prefix condition violated: " + root_name(idx) +
                   " lies in Delta^+_J but not in the first " + std::to_string(prefix) +
                   " positions";
      return res;
    }
  }
  return res;
}

std::string RootSystem::root_name(int idx) const {
  std::string s;
  const IntVec& r = roots_[idx];
  for (int k = 0; k < rank(); ++k) {
    if (r[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (r[k] != 1) s += std::to_string(r[k]);
    s += "a" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace qbruhat
