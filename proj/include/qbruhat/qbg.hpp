#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qbruhat/root_system.hpp"
#include "qbruhat/weyl.hpp"

namespace qbruhat {

struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EdgeKind { Bruhat, Quantum };

struct QbgEdge {
  int from = -1;
  int to = -1;
  int root = -1;  // positive-root index (the label)
  EdgeKind kind = EdgeKind::Bruhat;
};

struct DirectedPath {
  std::vector<int> vertices;      // vertex indices, size = length + 1
  std::vector<int> labels;        // root indices
  std::vector<EdgeKind> kinds;
  IntVec qwt;                     // sum of coroots over quantum edges

  int length() const { return static_cast<int>(labels.size()); }
  int start() const { return vertices.front(); }
  int end() const { return vertices.back(); }
  bool operator==(const DirectedPath& o) const {
    return vertices == o.vertices && labels == o.labels;
  }
};

// Restriction to QBG_{a lambda}: keep edges whose label satisfies
// a <lambda, alpha^vee> in Z, with a = num/den held exactly.
struct QbgFilter {
  long long num = 0;
  long long den = 1;
  IntVec lambda_fw;
  bool keeps(long long pairing) const { return (num * pairing) % den == 0; }
};

// The (parabolic) quantum Bruhat graph on W^J, immutable once built. All
// query methods are const and safe to call concurrently; shortest-path
// tables fill lazily under per-source once-flags.
class Qbg {
 public:
  Qbg(const RootSystem& rs, std::vector<int> J, std::optional<QbgFilter> filter = {},
      std::size_t bound = kDefaultGroupBound);

  const RootSystem& rs() const { return *rs_; }
  const std::vector<int>& J() const { return J_; }
  const std::optional<QbgFilter>& filter() const { return filter_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const WeylElt& vertex(int idx) const { return vertices_[idx]; }
  // Exact lookup; the element must be a vertex (a minimal coset representative
  // when J is nonempty). Throws std::invalid_argument otherwise.
  int index_of(const WeylElt& w) const;
  // Index of the coset representative of w.
  int index_of_coset(const WeylElt& w) const;

  const std::vector<QbgEdge>& edges_from(int v) const { return adj_[v]; }
  // The at-most-one edge at v labeled by the given root; nullptr if absent.
  const QbgEdge* edge(int v, int root_idx) const;
  int num_edges() const;

  // Shortest directed distance and quantum weight from src to every vertex.
  // Path-independence of qwt over shortest paths is asserted during the BFS.
  struct DistRow {
    std::vector<int> dist;
    std::vector<IntVec> qwt;
  };
  const DistRow& from(int src) const;
  // ell(w => v) and qwt(w => v).
  std::pair<int, IntVec> dist_qwt(int src, int dst) const;

  DirectedPath trivial_path(int v) const;
  // Builds the path along the given vertices, validating every step.
  DirectedPath make_path(const std::vector<int>& vertices, const std::vector<int>& labels) const;
  DirectedPath concat(const DirectedPath& a, const DirectedPath& b) const;

  // The unique label-increasing directed path (Theorem: it exists, is
  // shortest, and is lexicographically minimal). Throws TheoremViolation if
  // the search fails.
  DirectedPath label_increasing_path(int from, int to, const ReflectionOrder& ord) const;
  long long count_label_increasing(int from, int to, const ReflectionOrder& ord) const;

  std::vector<DirectedPath> all_shortest_paths(int from, int to,
                                               std::size_t bound = 1u << 20) const;

  std::string to_dot() const;

 private:
  const RootSystem* rs_;
  std::vector<int> J_;
  std::optional<QbgFilter> filter_;
  std::vector<WeylElt> vertices_;
  std::vector<std::vector<QbgEdge>> adj_;
  std::vector<std::vector<int>> edge_by_root_;  // [v][root] -> index into adj_[v] or -1
  std::vector<WeylElt> wj_;                     // W_J, for coset reduction

  mutable std::vector<DistRow> dist_rows_;
  mutable std::unique_ptr<std::once_flag[]> dist_once_;

  void build();
};

// The edge w -> s_j w labeled w^{-1} alpha_j (Bruhat for j in I, quantum for
// j = 0). Precondition: w^{-1} alpha_j is positive; throws
// std::invalid_argument otherwise. The produced edge is cross-checked against
// the graph adjacency.
QbgEdge edge_from_affine(const Qbg& g, const WeylElt& w, int j);

// min(x W_J, tilted order <=_w): the coset element at minimal distance from w;
// verifies ell(w=>z) = ell(w=>u) + ell(u=>z) on the whole coset.
WeylElt tilted_min(const Qbg& g, const std::vector<int>& J, const WeylElt& w, const WeylElt& x);

// A sequence j_1..j_m in I_af with (s_{j_{k-1}}...s_{j_1} w)^{-1} alpha_{j_k}
// in Delta^+ \ Delta^+_J at each step and s_{j_m}...s_{j_1} w in W_J.
std::vector<int> affine_sequence_to_parabolic(const RootSystem& rs, const std::vector<int>& J,
                                   const WeylElt& w);

// Path surgery along alpha_j (the deletion lemma, parts 1-3). The returned
// path satisfies the exact endpoint/length/qwt contracts, which are asserted.
DirectedPath transport_path(const Qbg& g, const DirectedPath& p, int j, int variant);

// Labels appearing on shortest paths between two members of the same coset
// x W_J; asserted to lie in Delta^+_J.
std::set<int> coset_path_labels(const Qbg& g, const WeylElt& v1, const WeylElt& v2,
                                const std::vector<int>& J);

}  // namespace qbruhat
