#pragma once

#include <string>
#include <vector>

#include "qbruhat/kgw.hpp"

namespace qbruhat {

// Exhaustive verification over all w, x in W and all d with coordinates in
// [0, box]: the signed-sum law, closed-form/oracle agreement, positivity,
// and the two-point bound whenever R is nonempty.
struct SweepConfig {
  CartanSpec spec;
  int node = 1;            // i
  int box = 3;             // max coordinate of d
  int jobs = 1;            // <= 1: serial reference; > 1: OpenMP
  bool check_signed_sum = true;  // the signed-sum law (needs N <= 2)
  bool check_agreement = true;   // divisor_cf == divisor_sum (needs N <= 2)
  bool check_positivity = true;
  std::size_t group_bound = kDefaultGroupBound;
};

struct SweepStats {
  long long triples = 0;
  long long r_nonempty = 0;
  long long r_singleton = 0;
  long long violations = 0;
  // per-check breakdown (each counted violation also increments `violations`)
  long long law_violations = 0;        // signed-sum law / tilted-minimum endpoint
  long long agreement_violations = 0;  // closed form != divisor sum
  long long positivity_violations = 0;
  long long twp_violations = 0;        // R nonempty but qwt(w=>x) not <= d
  std::string first_violation;         // smallest (w, x, d) in canonical order

  void merge(const SweepStats& o);
};

SweepStats run_sweep_serial(const QlsContext& ctx, const SweepConfig& cfg);
SweepStats run_sweep_parallel(const QlsContext& ctx, const SweepConfig& cfg);
SweepStats run_sweep(const QlsContext& ctx, const SweepConfig& cfg);

// Convenience entry that builds the root system and context itself.
SweepStats run_sweep(const SweepConfig& cfg);

// For every ordered pair (w, v): exactly one label-increasing path exists,
// it is shortest, and it is lexicographically minimal among all shortest
// paths.
struct PairSweepStats {
  long long pairs = 0;
  long long violations = 0;
  std::string first_violation;

  void merge(const PairSweepStats& o);
};

PairSweepStats label_increasing_sweep(const Qbg& g, const ReflectionOrder& ord, int jobs = 1);

// Deletion-lemma contracts over shortest paths: exhaustive, or sampled with
// a seeded generator. transport_path performs the contract assertions;
// the sweep additionally checks shortest-preservation.
PairSweepStats transport_sweep_exhaustive(const Qbg& g);
PairSweepStats transport_sweep_sampled(const Qbg& g, int samples, unsigned seed);

// The affine descent witnesses validate for every w.
PairSweepStats parabolic_descent_sweep(const RootSystem& rs, const std::vector<int>& J);

}  // namespace qbruhat
