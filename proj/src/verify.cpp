#include "qbruhat/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qbruhat {

namespace {

// enumerate d vectors with coordinates in [0, box], lexicographic
IntVec nth_degree(int rank, int box, long long t) {
  IntVec d(rank, 0);
  for (int k = rank - 1; k >= 0; --k) {
    d[k] = static_cast<int>(t % (box + 1));
    t /= (box + 1);
  }
  return d;
}

long long degree_count(int rank, int box) {
  long long c = 1;
  for (int k = 0; k < rank; ++k) c *= (box + 1);
  return c;
}

std::string triple_tag(const WeylElt& w, const WeylElt& x, const IntVec& d) {
  std::ostringstream os;
  os << "w=\"" << w.word_string() << "\" x=\"" << x.word_string() << "\" d=";
  for (size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
  return os.str();
}

// one (w, x, d) triple; returns an empty string when every check passes
std::string check_triple(const QlsContext& ctx, const SweepConfig& cfg, const WeylElt& w,
                         const WeylElt& x, const IntVec& d, SweepStats& stats) {
  try {
    long long r_size = static_cast<long long>(enumerate_R(ctx, w, x, d).size());
    if (r_size > 0) {
      ++stats.r_nonempty;
      // R nonempty forces qwt(w => x) <= d
      auto [dist, qwt] = ctx.graph().dist_qwt(ctx.graph().index_of(w), ctx.graph().index_of(x));
      (void)dist;
      if (!dominates(sub(d, qwt), zero_vec(ctx.rs().rank()))) {
        ++stats.twp_violations;
        return "two-point bound fails with R nonempty at " + triple_tag(w, x, d);
      }
    }
    if (r_size == 1) ++stats.r_singleton;
    if (cfg.check_signed_sum) {
      SignedSumCheck tc = signed_sum_check(ctx, w, x, d);
      if (!tc.pass) {
        ++stats.law_violations;
        return "signed-sum law fails at " + triple_tag(w, x, d) + ": " + tc.detail;
      }
    }

    if (cfg.check_agreement) {
      InvariantResult cf = divisor_cf(ctx, w, x, d);
      GroupAlgebraElt oracle = divisor_sum(ctx, w, x, d);
      if (cf.value != oracle) {
        ++stats.agreement_violations;
        return "closed form " + cf.value.to_string() + " != divisor sum " + oracle.to_string() +
               " at " + triple_tag(w, x, d);
      }
      if (cfg.check_positivity) {
        try {
          PositivityCertificate cert = positivity_certificate(ctx.rs(), cf);
          if (cert.value_at_one != 0 && cert.value_at_one != 1 && cert.value_at_one != 2) {
            ++stats.positivity_violations;
            return "specialization at e->1 outside {0,1,2} at " + triple_tag(w, x, d);
          }
        } catch (const TheoremViolation& e) {
          ++stats.positivity_violations;
          return std::string(e.what()) + " at " + triple_tag(w, x, d);
        }
      }
    }
  } catch (const TheoremViolation& e) {
    ++stats.law_violations;
    return std::string(e.what()) + " at " + triple_tag(w, x, d);
  }
  return "";
}

}  // namespace

void SweepStats::merge(const SweepStats& o) {
  triples += o.triples;
  r_nonempty += o.r_nonempty;
  r_singleton += o.r_singleton;
  violations += o.violations;
  law_violations += o.law_violations;
  agreement_violations += o.agreement_violations;
  positivity_violations += o.positivity_violations;
  twp_violations += o.twp_violations;
  if (!o.first_violation.empty() && first_violation.empty()) first_violation = o.first_violation;
}

SweepStats run_sweep_serial(const QlsContext& ctx, const SweepConfig& cfg) {
  const Qbg& g = ctx.graph();
  const long long nd = degree_count(ctx.rs().rank(), cfg.box);
  SweepStats stats;
  for (int wi = 0; wi < g.num_vertices(); ++wi) {
    for (int xi = 0; xi < g.num_vertices(); ++xi) {
      for (long long t = 0; t < nd; ++t) {
        IntVec d = nth_degree(ctx.rs().rank(), cfg.box, t);
        ++stats.triples;
        std::string err = check_triple(ctx, cfg, g.vertex(wi), g.vertex(xi), d, stats);
        if (!err.empty()) {
          ++stats.violations;
          if (stats.first_violation.empty()) stats.first_violation = err;
        }
      }
    }
  }
  return stats;
}

SweepStats run_sweep_parallel(const QlsContext& ctx, const SweepConfig& cfg) {
#ifndef _OPENMP
  return run_sweep_serial(ctx, cfg);
#else
  const Qbg& g = ctx.graph();
  const int nv = g.num_vertices();
  const long long nd = degree_count(ctx.rs().rank(), cfg.box);
  const long long total_pairs = static_cast<long long>(nv) * nv;

  // warm the per-source caches serially so parallel readers never block
  for (int v = 0; v < nv; ++v) {
    g.from(v);
    ctx.candidates(v);
  }

  SweepStats merged;
  long long first_key = -1;
  std::string first_msg;
#pragma omp parallel num_threads(cfg.jobs)
  {
    SweepStats local;
    long long local_key = -1;
    std::string local_msg;
#pragma omp for schedule(dynamic, 8)
    for (long long pair = 0; pair < total_pairs; ++pair) {
      int wi = static_cast<int>(pair / nv), xi = static_cast<int>(pair % nv);
      for (long long t = 0; t < nd; ++t) {
        IntVec d = nth_degree(ctx.rs().rank(), cfg.box, t);
        ++local.triples;
        std::string err = check_triple(ctx, cfg, g.vertex(wi), g.vertex(xi), d, local);
        if (!err.empty()) {
          ++local.violations;
          long long key = pair * nd + t;
          if (local_key < 0 || key < local_key) {
            local_key = key;
            local_msg = err;
          }
        }
      }
    }
#pragma omp critical
    {
      local.first_violation.clear();  // the deterministic pick happens below
      merged.merge(local);
      if (local_key >= 0 && (first_key < 0 || local_key < first_key)) {
        first_key = local_key;
        first_msg = local_msg;
      }
    }
  }
  merged.first_violation = first_msg;
  return merged;
#endif
}

SweepStats run_sweep(const QlsContext& ctx, const SweepConfig& cfg) {
  return cfg.jobs <= 1 ? run_sweep_serial(ctx, cfg) : run_sweep_parallel(ctx, cfg);
}

SweepStats run_sweep(const SweepConfig& cfg) {
  RootSystem rs(cfg.spec);
  std::vector<int> J = rs.complement({cfg.node});
  QlsContext ctx(rs, cfg.node, default_reflection_order(rs, J), cfg.group_bound);
  return run_sweep(ctx, cfg);
}

void PairSweepStats::merge(const PairSweepStats& o) {
  pairs += o.pairs;
  violations += o.violations;
  if (!o.first_violation.empty() && first_violation.empty()) first_violation = o.first_violation;
}

namespace {

std::string check_increasing_pair(const Qbg& g, const ReflectionOrder& ord, int a, int b) {
  std::string tag = "(" + g.vertex(a).word_string() + ", " + g.vertex(b).word_string() + ")";
  long long count = g.count_label_increasing(a, b, ord);
  if (count != 1)
    return std::to_string(count) + " label-increasing paths at " + tag;
  DirectedPath p = g.label_increasing_path(a, b, ord);
  auto [dist, qwt] = g.dist_qwt(a, b);
  if (p.length() != dist) return "label-increasing path is not shortest at " + tag;
  if (p.qwt != qwt) return "label-increasing path qwt mismatch at " + tag;
  std::vector<int> ppos;
  for (int l : p.labels) ppos.push_back(ord.pos_of[l]);
  for (const DirectedPath& s : g.all_shortest_paths(a, b)) {
    std::vector<int> spos;
    for (int l : s.labels) spos.push_back(ord.pos_of[l]);
    if (ppos > spos) return "label-increasing path is not lexicographically minimal at " + tag;
  }
  return "";
}

}  // namespace

PairSweepStats label_increasing_sweep(const Qbg& g, const ReflectionOrder& ord, int jobs) {
  const int nv = g.num_vertices();
  PairSweepStats stats;
#ifdef _OPENMP
  if (jobs > 1) {
    for (int v = 0; v < nv; ++v) g.from(v);
    long long first_key = -1;
    std::string first_msg;
    long long pairs = 0, violations = 0;
#pragma omp parallel num_threads(jobs)
    {
      long long local_key = -1;
      std::string local_msg;
#pragma omp for schedule(dynamic, 4) reduction(+ : pairs, violations)
      for (long long pr = 0; pr < static_cast<long long>(nv) * nv; ++pr) {
        ++pairs;
        std::string err = check_increasing_pair(g, ord, static_cast<int>(pr / nv),
                                                static_cast<int>(pr % nv));
        if (!err.empty()) {
          ++violations;
          if (local_key < 0 || pr < local_key) {
            local_key = pr;
            local_msg = err;
          }
        }
      }
#pragma omp critical
      if (local_key >= 0 && (first_key < 0 || local_key < first_key)) {
        first_key = local_key;
        first_msg = local_msg;
      }
    }
    stats.pairs = pairs;
    stats.violations = violations;
    stats.first_violation = first_msg;
    return stats;
  }
#else
  (void)jobs;
#endif
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b) {
      ++stats.pairs;
      std::string err = check_increasing_pair(g, ord, a, b);
      if (!err.empty()) {
        ++stats.violations;
        if (stats.first_violation.empty()) stats.first_violation = err;
      }
    }
  return stats;
}

namespace {

// applies every applicable variant to the path and checks shortest-preservation
std::string dl_check_path(const Qbg& g, const DirectedPath& p) {
  const RootSystem& rs = g.rs();
  for (int j = 0; j <= rs.rank(); ++j) {
    int sw = RootSystem::root_sign(g.vertex(p.start()).inv_act_affine_root(j));
    int sv = RootSystem::root_sign(g.vertex(p.end()).inv_act_affine_root(j));
    const WeylElt sj = affine_datum(rs, j).reflection;
    try {
      if (sw > 0 && sv < 0) {
        for (int variant : {1, 2}) {
          DirectedPath q = transport_path(g, p, j, variant);
          int from = variant == 1 ? g.index_of(sj * g.vertex(p.start())) : p.start();
          int to = variant == 2 ? g.index_of(sj * g.vertex(p.end())) : p.end();
          if (q.length() != g.dist_qwt(from, to).first)
            return "variant " + std::to_string(variant) + " lost shortestness (j=" +
                   std::to_string(j) + ")";
        }
      } else if (sw == sv) {
        DirectedPath q = transport_path(g, p, j, 3);
        int from = g.index_of(sj * g.vertex(p.start()));
        int to = g.index_of(sj * g.vertex(p.end()));
        if (q.length() != g.dist_qwt(from, to).first)
          return "variant 3 lost shortestness (j=" + std::to_string(j) + ")";
      }
    } catch (const TheoremViolation& e) {
      return std::string(e.what()) + " (j=" + std::to_string(j) + ")";
    }
  }
  return "";
}

}  // namespace

PairSweepStats transport_sweep_exhaustive(const Qbg& g) {
  PairSweepStats stats;
  for (int a = 0; a < g.num_vertices(); ++a) {
    for (int b = 0; b < g.num_vertices(); ++b) {
      for (const DirectedPath& p : g.all_shortest_paths(a, b)) {
        ++stats.pairs;
        std::string err = dl_check_path(g, p);
        if (!err.empty()) {
          ++stats.violations;
          if (stats.first_violation.empty())
            stats.first_violation = err + " from " + g.vertex(a).word_string() + " to " +
                                    g.vertex(b).word_string();
        }
      }
    }
  }
  return stats;
}

PairSweepStats transport_sweep_sampled(const Qbg& g, int samples, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
  PairSweepStats stats;
  for (int s = 0; s < samples; ++s) {
    int a = pick(gen), b = pick(gen);
    auto paths = g.all_shortest_paths(a, b);
    const DirectedPath& p = paths[gen() % paths.size()];
    ++stats.pairs;
    std::string err = dl_check_path(g, p);
    if (!err.empty()) {
      ++stats.violations;
      if (stats.first_violation.empty())
        stats.first_violation = err + " from " + g.vertex(a).word_string() + " to " +
                                g.vertex(b).word_string();
    }
  }
  return stats;
}

PairSweepStats parabolic_descent_sweep(const RootSystem& rs, const std::vector<int>& J) {
  PairSweepStats stats;
  auto roots_J = rs.positive_roots_in(J);
  std::vector<bool> inJ(rs.num_positive_roots(), false);
  for (int idx : roots_J) inJ[idx] = true;
  for (const auto& w : enumerate_group(rs, rs.full_node_set())) {
    ++stats.pairs;
    std::string err;
    try {
      WeylElt cur = w;
      for (int j : affine_sequence_to_parabolic(rs, J, w)) {
        IntVec img = cur.inv_act_affine_root(j);
        if (RootSystem::root_sign(img) < 0 || inJ[rs.root_index(img)]) {
          err = "invalid step at w = " + w.word_string();
          break;
        }
        cur = affine_datum(rs, j).reflection * cur;
      }
      if (err.empty() && !min_coset_rep(cur, J).is_identity())
        err = "sequence does not land in W_J at w = " + w.word_string();
    } catch (const TheoremViolation& e) {
      err = e.what();
    }
    if (!err.empty()) {
      ++stats.violations;
      if (stats.first_violation.empty()) stats.first_violation = err;
    }
  }
  return stats;
}

}  // namespace qbruhat
