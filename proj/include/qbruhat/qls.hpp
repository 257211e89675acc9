#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qbruhat/qbg.hpp"

namespace qbruhat {

// Quantum Lakshmibai-Seshadri path of some shape lambda: directions in W^J
// and rational breakpoints 0 = a_0 < ... < a_s = 1 stored over a common
// denominator.
struct QlsPath {
  std::vector<WeylElt> dirs;  // v_1, ..., v_s
  int den = 1;                // N
  std::vector<int> nums;      // numerators of a_0, ..., a_s
};

// A tuple (p_N, ..., p_2, p_1) of label-increasing directed paths in QBG(W),
// chained so that p_k starts where p_{k+1} ends; segs[0] = p_N, segs[N-1] = p_1.
struct PathTuple {
  std::vector<DirectedPath> segs;
  int end = -1;  // vertex index of ed(p) = ed(p_1) in the full graph
  int length = 0;
  IntVec qwt;
  IntVec qwt2;  // qwt(p) - qwt(p_1)
};

// Shared immutable state for R-set enumeration at a fixed (type, i, order):
// the full quantum Bruhat graph, the level filters, and per-start caches of
// the candidate tuples. Query methods are safe under concurrent use.
class QlsContext {
 public:
  QlsContext(const RootSystem& rs, int i, ReflectionOrder ord,
             std::size_t bound = kDefaultGroupBound, int max_level = 6);

  const RootSystem& rs() const { return *rs_; }
  int node() const { return i_; }
  const std::vector<int>& J() const { return J_; }
  int N() const { return N_; }
  WeightClass weight_class() const { return class_; }
  const ReflectionOrder& order() const { return ord_; }
  const Qbg& graph() const { return *graph_; }
  IntVec varpi() const { return unit_vec(rs_->rank(), i_ - 1); }

  // label beta admissible in segment p_k: beta in Delta^+ \ Delta^+_J and
  // ((k-1)/N) <varpi_i, beta^vee> integral
  bool label_allowed(int root_idx, int k) const;

  // Members of bQLS(w) with trivial p_1 (every member of an R-set has this
  // form); cached per start vertex.
  const std::vector<PathTuple>& candidates(int w_vertex) const;

 private:
  const RootSystem* rs_;
  int i_;
  std::vector<int> J_;
  int N_;
  WeightClass class_;
  ReflectionOrder ord_;
  std::unique_ptr<Qbg> graph_;
  std::vector<bool> in_J_span_;
  std::vector<int> pairing_;  // <varpi_i, beta^vee> per root

  mutable std::vector<std::vector<PathTuple>> cand_;
  mutable std::unique_ptr<std::once_flag[]> cand_once_;
};

// All label-increasing directed paths from `start` whose labels pass the
// filter; includes the trivial path.
std::vector<DirectedPath> enumerate_increasing(const Qbg& g, int start,
                                               const ReflectionOrder& ord,
                                               const std::function<bool(int)>& label_ok);

// The set R(w, x, d), sorted by endpoint (length, then canonical word).
std::vector<PathTuple> enumerate_R(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                                   const IntVec& d);

// eta_p: coset representatives of the segment endpoints with breakpoints k/N,
// equal consecutive directions merged.
QlsPath eta_of(const QlsContext& ctx, const PathTuple& p);

// wt(eta) = sum (a_k - a_{k-1}) v_k lambda; exact, asserts integrality.
IntVec wt_eta(const RootSystem& rs, const QlsPath& eta, const IntVec& lambda_fw);

struct QlsCheck {
  bool ok = true;
  std::string reason;
};
QlsCheck validate_qls(const RootSystem& rs, const QlsPath& eta, const IntVec& lambda_fw,
                      std::size_t bound = kDefaultGroupBound);

}  // namespace qbruhat
