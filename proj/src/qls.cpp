#include "qbruhat/qls.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qbruhat {

QlsContext::QlsContext(const RootSystem& rs, int i, ReflectionOrder ord, std::size_t bound,
                       int max_level)
    : rs_(&rs), i_(i), ord_(std::move(ord)) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("node index out of range");
  J_ = rs.complement({i});
  N_ = rs.level_N(i);
  class_ = rs.classify_fundamental(i);
  if (N_ > max_level)
    throw std::invalid_argument("level N = " + std::to_string(N_) + " exceeds the bound " +
                                std::to_string(max_level));
  auto check = rs.validate_reflection_order(ord_, J_);
  if (!check.ok)
    throw std::invalid_argument("reflection order unfit for J = I \\ {i}: " + check.report);
  graph_ = std::make_unique<Qbg>(rs, std::vector<int>{}, std::nullopt, bound);

  in_J_span_.assign(rs.num_positive_roots(), false);
  for (int idx : rs.positive_roots_in(J_)) in_J_span_[idx] = true;
  pairing_.resize(rs.num_positive_roots());
  for (int k = 0; k < rs.num_positive_roots(); ++k) pairing_[k] = rs.coroot(k)[i_ - 1];

  cand_.resize(graph_->num_vertices());
  cand_once_ = std::make_unique<std::once_flag[]>(graph_->num_vertices());
}

bool QlsContext::label_allowed(int root_idx, int k) const {
  if (in_J_span_[root_idx]) return false;
  return ((k - 1) * pairing_[root_idx]) % N_ == 0;
}

std::vector<DirectedPath> enumerate_increasing(const Qbg& g, int start,
                                               const ReflectionOrder& ord,
                                               const std::function<bool(int)>& label_ok) {
  const int m = g.rs().num_positive_roots();
  std::vector<DirectedPath> out;
  std::vector<int> verts = {start}, labels;
  auto dfs = [&](auto&& self, int v, int minpos) -> void {
    out.push_back(g.make_path(verts, labels));
    for (int pos = minpos; pos < m; ++pos) {
      int root = ord.roots[pos];
      if (!label_ok(root)) continue;
      const QbgEdge* e = g.edge(v, root);
      if (!e) continue;
      verts.push_back(e->to);
      labels.push_back(root);
      self(self, e->to, pos + 1);
      verts.pop_back();
      labels.pop_back();
    }
  };
  dfs(dfs, start, 0);
  return out;
}

const std::vector<PathTuple>& QlsContext::candidates(int w_vertex) const {
  std::call_once(cand_once_[w_vertex], [this, w_vertex] {
    std::vector<PathTuple> result;
    PathTuple acc;
    acc.qwt = zero_vec(rs_->rank());
    // build p_N, then p_{N-1}, ... down to p_2; p_1 stays trivial
    auto rec = [&](auto&& self, int level, int start) -> void {
      if (level == 1) {
        PathTuple done = acc;
        done.segs.push_back(graph_->trivial_path(start));
        done.end = start;
        done.qwt2 = done.qwt;
        result.push_back(std::move(done));
        return;
      }
      auto paths = enumerate_increasing(*graph_, start, ord_,
                                        [&](int r) { return label_allowed(r, level); });
      for (auto& p : paths) {
        acc.segs.push_back(p);
        acc.length += p.length();
        IntVec saved = acc.qwt;
        acc.qwt = add(acc.qwt, p.qwt);
        self(self, level - 1, p.end());
        acc.qwt = std::move(saved);
        acc.length -= p.length();
        acc.segs.pop_back();
      }
    };
    rec(rec, N_, w_vertex);
    // deterministic order: by endpoint (length, canonical matrix), then length
    std::sort(result.begin(), result.end(), [this](const PathTuple& a, const PathTuple& b) {
      const WeylElt &va = graph_->vertex(a.end), &vb = graph_->vertex(b.end);
      if (va.length() != vb.length()) return va.length() < vb.length();
      if (va.key() != vb.key()) return va.key() < vb.key();
      return a.length < b.length;
    });
    cand_[w_vertex] = std::move(result);
  });
  return cand_[w_vertex];
}

std::vector<PathTuple> enumerate_R(const QlsContext& ctx, const WeylElt& w, const WeylElt& x,
                                   const IntVec& d) {
  if (!dominates(d, zero_vec(ctx.rs().rank())))
    throw std::invalid_argument("degree d must lie in Q^{vee,+}");
  const Qbg& g = ctx.graph();
  const int xi = g.index_of(x);
  const WeylElt xrep = min_coset_rep(x, ctx.J());
  std::vector<PathTuple> out;
  for (const PathTuple& p : ctx.candidates(g.index_of(w))) {
    if (!(min_coset_rep(g.vertex(p.end), ctx.J()) == xrep)) continue;  // ed(p) in x W_J
    if (d[ctx.node() - 1] != p.qwt2[ctx.node() - 1]) continue;  // <varpi_i, d - qwt_2(p)> = 0
    IntVec budget = sub(d, p.qwt);
    auto [dist, qx] = g.dist_qwt(p.end, xi);
    (void)dist;
    if (!dominates(sub(budget, qx), zero_vec(ctx.rs().rank()))) continue;
    out.push_back(p);
  }
  return out;
}

QlsPath eta_of(const QlsContext& ctx, const PathTuple& p) {
  const Qbg& g = ctx.graph();
  const int N = ctx.N();
  if (static_cast<int>(p.segs.size()) != N)
    throw std::invalid_argument("tuple has the wrong number of segments");
  // direction k (1-based) is the coset representative of ed(p_{k+1}),
  // with p_{N+1} trivial at w; segs[t] = p_{N-t}
  QlsPath eta;
  eta.den = N;
  std::vector<WeylElt> raw;
  for (int k = 1; k <= N; ++k) {
    const WeylElt& endpoint =
        (k == N) ? g.vertex(p.segs.front().start())        // ed(p_{N+1}) = w
                 : g.vertex(p.segs[N - (k + 1)].end());    // ed(p_{k+1})
    raw.push_back(min_coset_rep(endpoint, ctx.J()));
  }
  eta.nums.push_back(0);
  for (int k = 0; k < N; ++k) {
    if (!eta.dirs.empty() && eta.dirs.back() == raw[k]) {
      eta.nums.back() = k + 1;  // widen the last interval
    } else {
      eta.dirs.push_back(raw[k]);
      eta.nums.push_back(k + 1);
    }
  }
  return eta;
}

IntVec wt_eta(const RootSystem& rs, const QlsPath& eta, const IntVec& lambda_fw) {
  const int n = rs.rank();
  IntVec scaled(n, 0);  // den * wt(eta)
  for (size_t k = 0; k < eta.dirs.size(); ++k) {
    int width = eta.nums[k + 1] - eta.nums[k];
    IntVec move = eta.dirs[k].act_weight(lambda_fw);
    for (int c = 0; c < n; ++c) scaled[c] += width * move[c];
  }
  IntVec out(n, 0);
  for (int c = 0; c < n; ++c) {
    if (scaled[c] % eta.den != 0)
      throw TheoremViolation("wt(eta) is not an integral weight");
    out[c] = scaled[c] / eta.den;
  }
  return out;
}

QlsCheck validate_qls(const RootSystem& rs, const QlsPath& eta, const IntVec& lambda_fw,
                      std::size_t bound) {
  QlsCheck res;
  auto fail = [&](std::string why) {
    res.ok = false;
    res.reason = std::move(why);
    return res;
  };
  if (eta.dirs.empty()) return fail("no directions");
  if (eta.nums.size() != eta.dirs.size() + 1) return fail("breakpoint count mismatch");
  if (eta.nums.front() != 0 || eta.nums.back() != eta.den)
    return fail("breakpoints must run from 0 to 1");
  for (size_t k = 0; k + 1 < eta.nums.size(); ++k)
    if (eta.nums[k] >= eta.nums[k + 1]) return fail("breakpoints must strictly increase");

  std::vector<int> J;
  for (int j = 1; j <= rs.rank(); ++j)
    if (lambda_fw[j - 1] == 0) J.push_back(j);

  for (size_t k = 0; k < eta.dirs.size(); ++k) {
    if (!(min_coset_rep(eta.dirs[k], J) == eta.dirs[k]))
      return fail("direction " + std::to_string(k + 1) + " is not a minimal coset representative");
    if (k + 1 < eta.dirs.size() && eta.dirs[k] == eta.dirs[k + 1])
      return fail("equal consecutive directions");
  }

  // directed path in QBG_{a_k lambda}(W^J) from v_{k+1} to v_k
  std::map<int, std::unique_ptr<Qbg>> graphs;
  for (size_t k = 1; k < eta.dirs.size(); ++k) {
    int num = eta.nums[k];
    auto it = graphs.find(num);
    if (it == graphs.end())
      it = graphs
               .emplace(num, std::make_unique<Qbg>(rs, J, QbgFilter{num, eta.den, lambda_fw},
                                                   bound))
               .first;
    const Qbg& g = *it->second;
    int from = g.index_of(eta.dirs[k]);      // v_{k+1}
    int to = g.index_of(eta.dirs[k - 1]);    // v_k
    if (g.from(from).dist[to] < 0)
      return fail("no directed path in QBG_{a_" + std::to_string(k) + " lambda}(W^J) from v_" +
                  std::to_string(k + 1) + " to v_" + std::to_string(k));
  }
  return res;
}

}  // namespace qbruhat
