#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qbruhat/root_system.hpp"

namespace qbruhat {

// Default ceiling for group enumerations; the env var QBRUHAT_MAX_GROUP
// and the CLI can override it.
inline constexpr std::size_t kDefaultGroupBound = 1000000;

// An exact Weyl group element: the linear action on simple-root coordinates
// together with the action of the inverse. Elements compare and hash by the
// action matrix; reduced words are derived data.
class WeylElt {
 public:
  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple(const RootSystem& rs, int j);          // node j in 1..n
  static WeylElt reflection(const RootSystem& rs, int root_idx);
  // Word letters are node labels, applied left-to-right as written:
  // "3 4 2" produces s_3 s_4 s_2 with s_3 outermost.
  static WeylElt from_word(const RootSystem& rs, const std::vector<int>& word);

  const RootSystem& rs() const { return *rs_; }
  int length() const { return length_; }
  bool is_identity() const;

  WeylElt operator*(const WeylElt& o) const;
  WeylElt inverse() const;
  bool operator==(const WeylElt& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElt& o) const { return mat_ != o.mat_; }
  bool operator<(const WeylElt& o) const { return mat_ < o.mat_; }

  IntVec act_root(const IntVec& root_coords) const;      // w . beta
  IntVec act_root_inv(const IntVec& root_coords) const;  // w^{-1} . beta
  IntVec act_coroot(const IntVec& cor) const;
  IntVec act_weight(const IntVec& lambda_fw) const;

  // w^{-1} alpha_j as root coordinates, j in I_af = {0} u {1..n}; j = 0 means
  // alpha_0 = -theta.
  IntVec inv_act_affine_root(int j) const;

  bool left_descent(int j) const;   // ell(s_j w) < ell(w)
  bool right_descent(int j) const;  // ell(w s_j) < ell(w)

  // Lexicographically smallest reduced word (greedy smallest left descent).
  std::vector<int> canonical_word() const;
  std::string word_string() const;  // space-separated letters, "" = identity

  const std::vector<int>& key() const { return mat_; }  // flat row-major matrix

 private:
  WeylElt(const RootSystem& rs, std::vector<int> mat, std::vector<int> inv);
  int compute_length() const;

  const RootSystem* rs_ = nullptr;
  std::vector<int> mat_;  // row-major n x n; column j = coords of w(alpha_{j+1})
  std::vector<int> inv_;
  int length_ = 0;
};

// Minimal-length representative of the coset w W_J (greedy right-descent removal).
WeylElt min_coset_rep(const WeylElt& w, const std::vector<int>& J);

// Breadth-first closure of W_J under right multiplication by its generators.
// Deterministic order: by discovery (length-layered). Throws when the size
// exceeds `bound`.
std::vector<WeylElt> enumerate_group(const RootSystem& rs, const std::vector<int>& J,
                                     std::size_t bound = kDefaultGroupBound);

WeylElt longest_element(const RootSystem& rs, const std::vector<int>& J);

// (alpha_j, s_j) for j in 1..n; (-theta, s_theta) for j = 0.
struct AffineDatum {
  IntVec root_coords;
  WeylElt reflection;
};
AffineDatum affine_datum(const RootSystem& rs, int j);

// Reflection order induced by the reduced word w0(J) . (w0(J)^{-1} w0), each
// factor spelled by greedy descent; Delta^+_J forms a prefix by construction.
ReflectionOrder default_reflection_order(const RootSystem& rs, const std::vector<int>& J);
// Same construction with greedy-largest descents; a second valid order for
// order-invariance checks.
ReflectionOrder variant_reflection_order(const RootSystem& rs, const std::vector<int>& J);

std::size_t group_size_bound_from_env();

}  // namespace qbruhat
