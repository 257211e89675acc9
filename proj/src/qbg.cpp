#include "qbruhat/qbg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qbruhat {

Qbg::Qbg(const RootSystem& rs, std::vector<int> J, std::optional<QbgFilter> filter,
         std::size_t bound)
    : rs_(&rs), J_(std::move(J)), filter_(std::move(filter)) {
  std::sort(J_.begin(), J_.end());
  wj_ = enumerate_group(rs, J_, bound);
  auto full = enumerate_group(rs, rs.full_node_set(), bound);
  if (J_.empty()) {
    vertices_ = std::move(full);
  } else {
    std::map<std::vector<int>, bool> seen;
    for (const auto& w : full) {
      WeylElt rep = min_coset_rep(w, J_);
      if (seen.emplace(rep.key(), true).second) vertices_.push_back(rep);
    }
  }
  std::sort(vertices_.begin(), vertices_.end(), [](const WeylElt& a, const WeylElt& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.key() < b.key();
  });
  build();
}

void Qbg::build() {
  const int m = rs_->num_positive_roots();
  const int nv = num_vertices();
  std::map<std::vector<int>, int> index;
  for (int v = 0; v < nv; ++v) index.emplace(vertices_[v].key(), v);

  auto roots_J = rs_->positive_roots_in(J_);
  std::vector<bool> inJ(m, false);
  for (int idx : roots_J) inJ[idx] = true;

  // 2 <rho - rho_J, alpha^vee> per candidate label
  std::vector<long long> drop(m, 0);
  for (int a = 0; a < m; ++a) {
    if (inJ[a]) continue;
    drop[a] = rs_->two_rho_pair(rs_->coroot(a)) - rs_->two_rho_J_pair(J_, rs_->coroot(a));
  }

  adj_.assign(nv, {});
  edge_by_root_.assign(nv, std::vector<int>(m, -1));
  for (int v = 0; v < nv; ++v) {
    for (int a = 0; a < m; ++a) {
      if (inJ[a]) continue;
      if (filter_ &&
          !filter_->keeps(RootSystem::pair_weight_coroot(filter_->lambda_fw, rs_->coroot(a))))
        continue;
      WeylElt y = vertices_[v] * WeylElt::reflection(*rs_, a);
      if (!J_.empty()) y = min_coset_rep(y, J_);
      auto it = index.find(y.key());
      if (it == index.end()) throw std::runtime_error("coset representative missing from graph");
      const int lx = vertices_[v].length(), ly = y.length();
      EdgeKind kind;
      if (ly == lx + 1)
        kind = EdgeKind::Bruhat;
      else if (ly == lx + 1 - drop[a])
        kind = EdgeKind::Quantum;
      else
        continue;
      edge_by_root_[v][a] = static_cast<int>(adj_[v].size());
      adj_[v].push_back(QbgEdge{v, it->second, a, kind});
    }
  }

  dist_rows_.resize(nv);
  dist_once_ = std::make_unique<std::once_flag[]>(nv);
}

int Qbg::index_of(const WeylElt& w) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w,
                             [](const WeylElt& a, const WeylElt& b) {
                               if (a.length() != b.length()) return a.length() < b.length();
                               return a.key() < b.key();
                             });
  if (it != vertices_.end() && *it == w) return static_cast<int>(it - vertices_.begin());
  throw std::invalid_argument("element is not a vertex of this graph");
}

int Qbg::index_of_coset(const WeylElt& w) const {
  return J_.empty() ? index_of(w) : index_of(min_coset_rep(w, J_));
}

const QbgEdge* Qbg::edge(int v, int root_idx) const {
  int slot = edge_by_root_[v][root_idx];
  return slot < 0 ? nullptr : &adj_[v][slot];
}

int Qbg::num_edges() const {
  int s = 0;
  for (const auto& e : adj_) s += static_cast<int>(e.size());
  return s;
}

const Qbg::DistRow& Qbg::from(int src) const {
  std::call_once(dist_once_[src], [this, src] {
    const int nv = num_vertices();
    DistRow row;
    row.dist.assign(nv, -1);
    row.qwt.assign(nv, IntVec());
    row.dist[src] = 0;
    row.qwt[src] = zero_vec(rs_->rank());
    std::deque<int> queue = {src};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const QbgEdge& e : adj_[u]) {
        IntVec q = row.qwt[u];
        if (e.kind == EdgeKind::Quantum) q = add(q, rs_->coroot(e.root));
        if (row.dist[e.to] < 0) {
          row.dist[e.to] = row.dist[u] + 1;
          row.qwt[e.to] = std::move(q);
          queue.push_back(e.to);
        } else if (row.dist[e.to] == row.dist[u] + 1 && row.qwt[e.to] != q) {
          throw TheoremViolation("qwt differs across shortest paths into vertex " +
                                 vertices_[e.to].word_string());
        }
      }
    }
    dist_rows_[src] = std::move(row);
  });
  return dist_rows_[src];
}

std::pair<int, IntVec> Qbg::dist_qwt(int src, int dst) const {
  const DistRow& row = from(src);
  if (row.dist[dst] < 0) {
    if (!filter_ && J_.empty())
      throw TheoremViolation("unreachable vertex in the full quantum Bruhat graph");
    return {-1, IntVec()};
  }
  return {row.dist[dst], row.qwt[dst]};
}

DirectedPath Qbg::trivial_path(int v) const {
  DirectedPath p;
  p.vertices = {v};
  p.qwt = zero_vec(rs_->rank());
  return p;
}

DirectedPath Qbg::make_path(const std::vector<int>& vertices,
                            const std::vector<int>& labels) const {
  if (vertices.size() != labels.size() + 1)
    throw std::invalid_argument("path shape mismatch");
  DirectedPath p;
  p.vertices = vertices;
  p.labels = labels;
  p.qwt = zero_vec(rs_->rank());
  for (size_t t = 0; t < labels.size(); ++t) {
    const QbgEdge* e = edge(vertices[t], labels[t]);
    if (!e || e->to != vertices[t + 1])
      throw TheoremViolation("constructed step is not an edge: " +
                             vertex(vertices[t]).word_string() + " --" +
                             rs_->root_name(labels[t]) + "--> " +
                             vertex(vertices[t + 1]).word_string());
    p.kinds.push_back(e->kind);
    if (e->kind == EdgeKind::Quantum) p.qwt = add(p.qwt, rs_->coroot(e->root));
  }
  return p;
}

DirectedPath Qbg::concat(const DirectedPath& a, const DirectedPath& b) const {
  if (a.end() != b.start()) throw std::invalid_argument("paths do not compose");
  std::vector<int> verts = a.vertices;
  verts.insert(verts.end(), b.vertices.begin() + 1, b.vertices.end());
  std::vector<int> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  return make_path(verts, labels);
}

DirectedPath Qbg::label_increasing_path(int from, int to, const ReflectionOrder& ord) const {
  const int m = rs_->num_positive_roots();
  // fail[v * (m+1) + k]: no increasing completion from v to `to` with
  // label positions >= k
  std::vector<char> fail(static_cast<size_t>(num_vertices()) * (m + 1), 0);
  std::vector<int> verts, labels;

  auto dfs = [&](auto&& self, int v, int minpos) -> bool {
    if (fail[v * (m + 1) + minpos]) return false;
    if (v == to) return true;
    for (int pos = minpos; pos < m; ++pos) {
      const QbgEdge* e = edge(v, ord.roots[pos]);
      if (!e) continue;
      if (self(self, e->to, pos + 1)) {
        verts.push_back(e->to);
        labels.push_back(e->root);
        return true;
      }
    }
    fail[v * (m + 1) + minpos] = 1;
    return false;
  };
  if (!dfs(dfs, from, 0))
    throw TheoremViolation("no label-increasing path from " + vertex(from).word_string() +
                           " to " + vertex(to).word_string());
  verts.push_back(from);
  std::reverse(verts.begin(), verts.end());
  std::reverse(labels.begin(), labels.end());
  return make_path(verts, labels);
}

long long Qbg::count_label_increasing(int from, int to, const ReflectionOrder& ord) const {
  const int m = rs_->num_positive_roots();
  std::vector<long long> memo(static_cast<size_t>(num_vertices()) * (m + 1), -1);
  auto rec = [&](auto&& self, int v, int minpos) -> long long {
    long long& slot = memo[v * (m + 1) + minpos];
    if (slot >= 0) return slot;
    long long total = (v == to) ? 1 : 0;
    for (int pos = minpos; pos < m; ++pos) {
      const QbgEdge* e = edge(v, ord.roots[pos]);
      if (e) total += self(self, e->to, pos + 1);
    }
    return slot = total;
  };
  return rec(rec, from, 0);
}

std::vector<DirectedPath> Qbg::all_shortest_paths(int from, int to, std::size_t bound) const {
  // distances toward `to` via the reverse graph
  const int nv = num_vertices();
  std::vector<std::vector<int>> radj(nv);
  for (int v = 0; v < nv; ++v)
    for (const QbgEdge& e : adj_[v]) radj[e.to].push_back(v);
  std::vector<int> dist_to(nv, -1);
  dist_to[to] = 0;
  std::deque<int> queue = {to};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int p : radj[u])
      if (dist_to[p] < 0) {
        dist_to[p] = dist_to[u] + 1;
        queue.push_back(p);
      }
  }
  if (dist_to[from] < 0) return {};

  std::vector<DirectedPath> out;
  std::vector<int> verts = {from}, labels;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == to && dist_to[v] == 0) {
      out.push_back(make_path(verts, labels));
      if (out.size() > bound) throw std::runtime_error("too many shortest paths");
      return;
    }
    for (const QbgEdge& e : adj_[v]) {
      if (dist_to[e.to] != dist_to[v] - 1) continue;
      verts.push_back(e.to);
      labels.push_back(e.root);
      self(self, e.to);
      verts.pop_back();
      labels.pop_back();
    }
  };
  dfs(dfs, from);
  return out;
}

std::string Qbg::to_dot() const {
  std::ostringstream os;
  os << "digraph qbg {\n";
  for (int v = 0; v < num_vertices(); ++v)
    os << "  n" << v << " [label=\"" << (vertices_[v].is_identity() ? "e" : vertices_[v].word_string())
       << "\"];\n";
  for (int v = 0; v < num_vertices(); ++v) {
    for (const QbgEdge& e : adj_[v]) {
      os << "  n" << e.from << " -> n" << e.to << " [label=\"";
      const IntVec& r = rs_->root(e.root);
      for (size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
      os << "\"" << (e.kind == EdgeKind::Quantum ? ", style=dashed" : "") << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

QbgEdge edge_from_affine(const Qbg& g, const WeylElt& w, int j) {
  IntVec label = w.inv_act_affine_root(j);
  if (RootSystem::root_sign(label) < 0)
    throw std::invalid_argument("w^{-1} alpha_j is negative; no edge from this datum");
  int root_idx = g.rs().root_index(label);
  AffineDatum datum = affine_datum(g.rs(), j);
  WeylElt target = datum.reflection * w;
  int from = g.index_of(w), to = g.index_of(target);
  const QbgEdge* e = g.edge(from, root_idx);
  if (!e || e->to != to)
    throw TheoremViolation("affine datum did not produce a graph edge");
  EdgeKind expect = (j == 0) ? EdgeKind::Quantum : EdgeKind::Bruhat;
  if (e->kind != expect) throw TheoremViolation("affine edge has unexpected kind");
  return *e;
}

WeylElt tilted_min(const Qbg& g, const std::vector<int>& J, const WeylElt& w,
                   const WeylElt& x) {
  if (!g.J().empty() || g.filter())
    throw std::invalid_argument("tilted minima are computed in the full graph");
  const RootSystem& rs = g.rs();
  WeylElt rep = min_coset_rep(x, J);
  auto wj = enumerate_group(rs, J);
  int src = g.index_of(w);
  const Qbg::DistRow& row = g.from(src);

  int best = -1, best_dist = 0;
  std::vector<int> coset;
  for (const auto& y : wj) {
    int v = g.index_of(rep * y);
    coset.push_back(v);
    if (best < 0 || row.dist[v] < best_dist) {
      best = v;
      best_dist = row.dist[v];
    }
  }
  // defining property of the tilted-order minimum, and its uniqueness
  const Qbg::DistRow& from_u = g.from(best);
  for (int z : coset) {
    if (row.dist[z] != best_dist + from_u.dist[z])
      throw TheoremViolation("tilted minimum does not factor distances through the coset");
    if (z != best && row.dist[z] == best_dist)
      throw TheoremViolation("tilted minimum is not unique on the coset");
  }
  return g.vertex(best);
}

std::vector<int> affine_sequence_to_parabolic(const RootSystem& rs, const std::vector<int>& J,
                                   const WeylElt& w) {
  auto roots_J = rs.positive_roots_in(J);
  std::vector<bool> inJ(rs.num_positive_roots(), false);
  for (int idx : roots_J) inJ[idx] = true;

  auto in_WJ = [&](const WeylElt& u) { return min_coset_rep(u, J).is_identity(); };

  // Reachability search in the move digraph u -> s_j u over valid j
  // (smallest simple index first, affine move last).
  std::vector<int> order;
  for (int j = 1; j <= rs.rank(); ++j) order.push_back(j);
  order.push_back(0);

  std::set<std::vector<int>> visited;
  std::vector<int> seq;
  auto dfs = [&](auto&& self, const WeylElt& u) -> bool {
    if (in_WJ(u)) return true;
    if (!visited.insert(u.key()).second) return false;
    for (int j : order) {
      IntVec img = u.inv_act_affine_root(j);
      if (RootSystem::root_sign(img) < 0) continue;
      if (inJ[rs.root_index(img)]) continue;  // must lie in Delta^+ \ Delta^+_J
      WeylElt next = affine_datum(rs, j).reflection * u;
      if (self(self, next)) {
        seq.push_back(j);
        return true;
      }
    }
    return false;
  };
  if (!dfs(dfs, w))
    throw TheoremViolation("no affine descent sequence into W_J found");
  std::reverse(seq.begin(), seq.end());
  return seq;
}

namespace {

int sign_along(const Qbg& g, int vertex_idx, int j) {
  return RootSystem::root_sign(g.vertex(vertex_idx).inv_act_affine_root(j));
}

// coroot of a root given with either sign, as an exact coroot vector
IntVec signed_coroot(const RootSystem& rs, const IntVec& root_coords) {
  return rs.coroot_of(root_coords);
}

DirectedPath transform_1(const Qbg& g, const DirectedPath& p, int j) {
  const RootSystem& rs = g.rs();
  const int r = p.length();
  const WeylElt sj = affine_datum(rs, j).reflection;
  int t = -1;
  for (int q = 1; q <= r; ++q)
    if (sign_along(g, p.vertices[q], j) < 0) { t = q; break; }
  if (t < 0) throw TheoremViolation("no crossing index found");
  // at the crossing, the label is forced to be u_{t-1}^{-1} alpha_j
  IntVec cross = g.vertex(p.vertices[t - 1]).inv_act_affine_root(j);
  if (rs.root_index(cross) != p.labels[t - 1])
    throw TheoremViolation("crossing label differs from u_{t-1}^{-1} alpha_j");
  std::vector<int> verts, labels;
  for (int q = 0; q < t; ++q) verts.push_back(g.index_of(sj * g.vertex(p.vertices[q])));
  // s_j u_{t-1} = u_t, so the prefix ends where the suffix picks up
  if (verts.back() != p.vertices[t])
    throw TheoremViolation("prefix does not rejoin the path at the crossing");
  for (int q = t + 1; q <= r; ++q) verts.push_back(p.vertices[q]);
  for (int q = 0; q < r; ++q)
    if (q != t - 1) labels.push_back(p.labels[q]);
  return g.make_path(verts, labels);
}

DirectedPath transform_2(const Qbg& g, const DirectedPath& p, int j) {
  const RootSystem& rs = g.rs();
  const int r = p.length();
  const WeylElt sj = affine_datum(rs, j).reflection;
  int t = -1;
  for (int q = r; q >= 1; --q) {
    if (sign_along(g, p.vertices[q - 1], j) > 0) { t = q; break; }
  }
  if (t < 0) throw TheoremViolation("no crossing index found");
  // all of u_t..u_r lie on the negative side by choice of the last crossing
  IntVec cross = g.vertex(p.vertices[t - 1]).inv_act_affine_root(j);
  if (rs.root_index(cross) != p.labels[t - 1])
    throw TheoremViolation("crossing label differs from u_{t-1}^{-1} alpha_j");
  std::vector<int> verts, labels;
  for (int q = 0; q < t; ++q) verts.push_back(p.vertices[q]);
  for (int q = t + 1; q <= r; ++q) verts.push_back(g.index_of(sj * g.vertex(p.vertices[q])));
  for (int q = 0; q < r; ++q)
    if (q != t - 1) labels.push_back(p.labels[q]);
  return g.make_path(verts, labels);
}

}  // namespace

DirectedPath transport_path(const Qbg& g, const DirectedPath& p, int j, int variant) {
  if (!g.J().empty() || g.filter())
    throw std::invalid_argument("deletion lemma operates on the full graph");
  const RootSystem& rs = g.rs();
  const int sw = sign_along(g, p.start(), j);
  const int sv = sign_along(g, p.end(), j);
  const WeylElt sj = affine_datum(rs, j).reflection;

  DirectedPath q;
  if (variant == 1 || variant == 2) {
    if (!(sw > 0 && sv < 0))
      throw std::invalid_argument("variants 1 and 2 need w^{-1}a_j > 0 > v^{-1}a_j");
    q = (variant == 1) ? transform_1(g, p, j) : transform_2(g, p, j);
  } else if (variant == 3) {
    if (sw != sv) throw std::invalid_argument("variant 3 needs both ends on the same side");
    if (sw > 0) {
      // append the edge v -> s_j v, then delete across variant 1
      QbgEdge e = edge_from_affine(g, g.vertex(p.end()), j);
      DirectedPath ext = g.concat(p, g.make_path({e.from, e.to}, {e.root}));
      q = transform_1(g, ext, j);
    } else {
      // prepend the edge s_j w -> w, then delete across variant 2
      QbgEdge e = edge_from_affine(g, sj * g.vertex(p.start()), j);
      DirectedPath ext = g.concat(g.make_path({e.from, e.to}, {e.root}), p);
      q = transform_2(g, ext, j);
    }
  } else {
    throw std::invalid_argument("variant must be 1, 2 or 3");
  }

  // contracts
  const int delta_j0 = (j == 0) ? 1 : 0;
  IntVec expected_qwt = p.qwt;
  int expected_len = p.length();
  int expected_start = p.start(), expected_end = p.end();
  if (variant == 1) {
    expected_len -= 1;
    expected_start = g.index_of(sj * g.vertex(p.start()));
    if (delta_j0)
      expected_qwt = sub(expected_qwt, signed_coroot(rs, g.vertex(p.start()).inv_act_affine_root(j)));
  } else if (variant == 2) {
    expected_len -= 1;
    expected_end = g.index_of(sj * g.vertex(p.end()));
    if (delta_j0)
      expected_qwt = add(expected_qwt, signed_coroot(rs, g.vertex(p.end()).inv_act_affine_root(j)));
  } else {
    expected_start = g.index_of(sj * g.vertex(p.start()));
    expected_end = g.index_of(sj * g.vertex(p.end()));
    if (delta_j0) {
      expected_qwt = sub(expected_qwt, signed_coroot(rs, g.vertex(p.start()).inv_act_affine_root(j)));
      expected_qwt = add(expected_qwt, signed_coroot(rs, g.vertex(p.end()).inv_act_affine_root(j)));
    }
  }
  if (q.start() != expected_start || q.end() != expected_end)
    throw TheoremViolation("deletion lemma: endpoint contract failed");
  if (q.length() != expected_len)
    throw TheoremViolation("deletion lemma: length contract failed");
  if (q.qwt != expected_qwt)
    throw TheoremViolation("deletion lemma: qwt contract failed");
  return q;
}

std::set<int> coset_path_labels(const Qbg& g, const WeylElt& v1, const WeylElt& v2,
                                const std::vector<int>& J) {
  const RootSystem& rs = g.rs();
  if (!(min_coset_rep(v1, J) == min_coset_rep(v2, J)))
    throw std::invalid_argument("elements lie in different cosets");
  auto paths = g.all_shortest_paths(g.index_of(v1), g.index_of(v2));
  auto roots_J = rs.positive_roots_in(J);
  std::set<int> allowed(roots_J.begin(), roots_J.end());
  std::set<int> labels;
  for (const auto& p : paths)
    for (int l : p.labels) labels.insert(l);
  for (int l : labels)
    if (!allowed.count(l))
      throw TheoremViolation("shortest path between coset members uses label " +
                             rs.root_name(l) + " outside Delta^+_J");
  // consequence: qwt(v1 => v2) is supported on J
  auto [d, qwt] = g.dist_qwt(g.index_of(v1), g.index_of(v2));
  (void)d;
  std::vector<bool> inJ(rs.rank() + 1, false);
  for (int jn : J) inJ[jn] = true;
  for (int k = 0; k < rs.rank(); ++k)
    if (qwt[k] != 0 && !inJ[k + 1])
      throw TheoremViolation("qwt between coset members leaves the J coroot span");
  return labels;
}

}  // namespace qbruhat
