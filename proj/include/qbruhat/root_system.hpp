#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbruhat/cartan.hpp"

namespace qbruhat {

// Small exact integer coordinate vector. Context fixes the basis:
// roots live in the simple-root basis, coroots in the simple-coroot basis,
// weights in the fundamental-weight basis. Entry k corresponds to node k+1.
using IntVec = std::vector<int>;

IntVec zero_vec(int rank);
IntVec unit_vec(int rank, int k);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& a);
bool is_zero(const IntVec& a);
// a >= b componentwise (the orders on Q^{vee,+} and Q^+)
bool dominates(const IntVec& a, const IntVec& b);

enum class WeightClass { Minuscule, QuasiMinuscule, Neither };

// Total order on the positive roots induced by a reduced word of w0:
// beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}).
struct ReflectionOrder {
  std::vector<int> roots;   // positive-root indices in order
  std::vector<int> pos_of;  // pos_of[root_index] = position in the order
  std::vector<int> word;    // the inducing reduced word of w0 (1-based letters)
};

struct OrderCheck {
  bool ok = true;
  std::string report;
};

class RootSystem {
 public:
  explicit RootSystem(const CartanSpec& spec);

  const CartanSpec& spec() const { return spec_; }
  int rank() const { return spec_.rank; }
  // cartan()[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  const IntVec& root(int idx) const { return roots_[idx]; }
  const IntVec& coroot(int idx) const { return coroots_[idx]; }
  int height(int idx) const;
  // Index of a positive root given its simple-root coordinates; -1 if absent.
  int root_index(const IntVec& coords) const;
  int simple_root_index(int j) const { return simple_idx_[j - 1]; }  // node j in 1..n
  int theta_index() const { return theta_; }

  // +1 for positive roots, -1 for negative (coords all of one sign).
  static int root_sign(const IntVec& coords);
  // Coroot coordinates of a root given by coordinates of either sign.
  IntVec coroot_of(const IntVec& root_coords) const;

  // Pairings (all exact integers).
  // <lambda, c> for lambda in fundamental-weight coords, c in simple-coroot coords.
  static long long pair_weight_coroot(const IntVec& lambda_fw, const IntVec& cor);
  // <beta, alpha_j^vee> for beta in root coords, node j in 1..n.
  int pair_root_simple_coroot(const IntVec& root_coords, int j) const;
  // <alpha_j, c> for c in coroot coords, node j in 1..n.
  int pair_simple_root_coroot(int j, const IntVec& cor) const;
  // <beta, c> in the same bases.
  long long pair_root_coroot(const IntVec& root_coords, const IntVec& cor) const;
  // Fundamental-weight coordinates of an element of the root lattice.
  IntVec fw_coords_of_root(const IntVec& root_coords) const;

  // rho in fundamental-weight coords is (1,...,1); <2 rho, c> = 2 * sum(c).
  IntVec rho_fw() const;
  // <2 rho_J, c> = sum over gamma in Delta^+_J of <gamma, c>.
  long long two_rho_pair(const IntVec& cor) const;
  long long two_rho_J_pair(const std::vector<int>& J, const IntVec& cor) const;

  // Subsets J of I are given as sorted lists of node labels (1-based).
  std::vector<int> full_node_set() const;
  std::vector<int> complement(const std::vector<int>& J) const;
  bool root_in_span(int idx, const std::vector<int>& J) const;
  std::vector<int> positive_roots_in(const std::vector<int>& J) const;

  // s_beta acting on root coordinates: v - <v, beta^vee> beta.
  IntVec reflect_root(int root_idx, const IntVec& v) const;
  // s_{alpha_j}(beta): new root index (beta any positive root, j in 1..n);
  // returns -1 when the image is negative (only for beta = alpha_j).
  int simple_reflect(int j, int root_idx) const;

  // ell(s_gamma) as an inversion count of the reflection's root action.
  int reflection_length(int root_idx) const;
  // gamma is a quantum root when ell(s_gamma) = 2 <rho, gamma^vee> - 1.
  bool is_quantum_root(int root_idx) const;

  // Classification of varpi_i by the values <varpi_i, beta^vee>, beta > 0.
  WeightClass classify_fundamental(int i) const;
  // Least N >= 1 with N / <varpi_i, alpha^vee> integral whenever nonzero.
  int level_N(int i) const;

  // Membership of a weight (fw coords) in the root lattice / in Q^+.
  bool weight_in_root_lattice(const IntVec& lambda_fw, IntVec* root_coords = nullptr) const;
  bool weight_in_Q_plus(const IntVec& lambda_fw) const;

  ReflectionOrder order_from_word(const std::vector<int>& word) const;
  OrderCheck validate_reflection_order(const ReflectionOrder& ord,
                                       const std::vector<int>& J) const;

  std::string root_name(int idx) const;  // e.g. "a1+2a2"

 private:
  CartanSpec spec_;
  std::vector<std::vector<int>> cartan_;
  std::vector<IntVec> roots_;    // positive roots, sorted by (height, coords)
  std::vector<IntVec> coroots_;  // coroots_[k] = coroot of roots_[k]
  std::vector<int> simple_idx_;  // index of alpha_j in roots_
  int theta_ = -1;
  long long cartan_det_ = 0;
  std::vector<std::vector<long long>> cartan_adj_;  // adjugate of the Cartan matrix
};

}  // namespace qbruhat
