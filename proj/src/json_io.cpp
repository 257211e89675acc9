#include "qbruhat/json_io.hpp"

#include <sstream>

namespace qbruhat {

json algebra_to_json(const GroupAlgebraElt& v) {
  json arr = json::array();
  for (const auto& [w, c] : v.terms()) arr.push_back({{"weight", w}, {"coeff", c}});
  return arr;
}

GroupAlgebraElt algebra_from_json(const json& j) {
  GroupAlgebraElt v;
  for (const auto& term : j)
    v += GroupAlgebraElt::monomial(term.at("weight").get<IntVec>(),
                                   term.at("coeff").get<long long>());
  return v;
}

namespace {

json path_to_json(const Qbg& g, const DirectedPath& p) {
  json seg;
  seg["vertices"] = json::array();
  for (int v : p.vertices) seg["vertices"].push_back(g.vertex(v).word_string());
  seg["labels"] = json::array();
  for (int l : p.labels) seg["labels"].push_back(g.rs().root(l));
  seg["kinds"] = json::array();
  for (EdgeKind k : p.kinds) seg["kinds"].push_back(k == EdgeKind::Quantum ? "Q" : "B");
  return seg;
}

DirectedPath path_from_json(const Qbg& g, const json& j) {
  std::vector<int> verts, labels;
  for (const auto& word : j.at("vertices"))
    verts.push_back(
        g.index_of(WeylElt::from_word(g.rs(), parse_word(word.get<std::string>(), g.rs().rank()))));
  for (const auto& coords : j.at("labels")) {
    int idx = g.rs().root_index(coords.get<IntVec>());
    if (idx < 0) throw std::invalid_argument("label is not a positive root");
    labels.push_back(idx);
  }
  return g.make_path(verts, labels);  // recomputes kinds and qwt, validating edges
}

}  // namespace

json tuple_to_json(const Qbg& g, const PathTuple& p) {
  json out;
  out["start"] = g.vertex(p.segs.front().start()).word_string();
  out["end"] = g.vertex(p.end).word_string();
  out["length"] = p.length;
  out["qwt"] = p.qwt;
  out["segments"] = json::array();
  for (const auto& seg : p.segs) out["segments"].push_back(path_to_json(g, seg));
  return out;
}

PathTuple tuple_from_json(const QlsContext& ctx, const json& j) {
  PathTuple p;
  p.qwt = zero_vec(ctx.rs().rank());
  for (const auto& seg : j.at("segments")) {
    DirectedPath dp = path_from_json(ctx.graph(), seg);
    p.length += dp.length();
    p.qwt = add(p.qwt, dp.qwt);
    p.segs.push_back(std::move(dp));
  }
  p.end = p.segs.back().end();
  p.qwt2 = sub(p.qwt, p.segs.back().qwt);
  if (j.at("end").get<std::string>() != ctx.graph().vertex(p.end).word_string() ||
      j.at("length").get<int>() != p.length || j.at("qwt").get<IntVec>() != p.qwt)
    throw std::invalid_argument("tuple payload is inconsistent with its segments");
  return p;
}

json graph_to_json(const Qbg& g) {
  json out;
  out["vertices"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    out["vertices"].push_back(g.vertex(v).word_string());
  out["edges"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    for (const QbgEdge& e : g.edges_from(v))
      out["edges"].push_back({{"from", e.from},
                              {"to", e.to},
                              {"label", g.rs().root(e.root)},
                              {"kind", e.kind == EdgeKind::Quantum ? "Q" : "B"}});
  return out;
}

json qls_to_json(const QlsPath& eta, bool expanded) {
  json out;
  if (expanded) {
    json steps = json::array();
    for (size_t k = 0; k < eta.dirs.size(); ++k)
      for (int t = eta.nums[k]; t < eta.nums[k + 1]; ++t)
        steps.push_back(eta.dirs[k].word_string());
    out["steps"] = std::move(steps);
    return out;
  }
  out["den"] = eta.den;
  out["breaks"] = eta.nums;
  out["dirs"] = json::array();
  for (const auto& v : eta.dirs) out["dirs"].push_back(v.word_string());
  return out;
}

QlsPath qls_from_json(const RootSystem& rs, const json& j) {
  QlsPath eta;
  if (j.contains("steps")) {
    // collapse the expanded form back to breakpoints over den = #steps
    const auto& steps = j.at("steps");
    eta.den = static_cast<int>(steps.size());
    eta.nums.push_back(0);
    for (int k = 0; k < eta.den; ++k) {
      WeylElt v =
          WeylElt::from_word(rs, parse_word(steps[k].get<std::string>(), rs.rank()));
      if (!eta.dirs.empty() && eta.dirs.back() == v) {
        eta.nums.back() = k + 1;
      } else {
        eta.dirs.push_back(v);
        eta.nums.push_back(k + 1);
      }
    }
    return eta;
  }
  eta.den = j.at("den").get<int>();
  eta.nums = j.at("breaks").get<std::vector<int>>();
  for (const auto& word : j.at("dirs"))
    eta.dirs.push_back(
        WeylElt::from_word(rs, parse_word(word.get<std::string>(), rs.rank())));
  return eta;
}

json invariant_to_json(const RootSystem& rs, const InvariantResult& res,
                       const PositivityCertificate* cert) {
  (void)rs;
  json out;
  out["branch"] = branch_name(res.branch);
  out["r_size"] = res.r_size;
  out["value"] = algebra_to_json(res.value);
  out["value_text"] = res.value.to_string();
  if (res.x_min) out["x_min"] = res.x_min->word_string();
  if (res.wt_eta_fw) {
    out["wt_eta"] = *res.wt_eta_fw;
    out["sign_exponent"] = res.sign_exponent;
  }
  if (cert) {
    out["certificate"] = {{"text", cert->text}, {"value_at_one", cert->value_at_one}};
    if (cert->beta_fw) out["certificate"]["beta"] = *cert->beta_fw;
  }
  return out;
}

json sweep_to_json(const SweepStats& s) {
  json out;
  out["triples"] = s.triples;
  out["r_nonempty"] = s.r_nonempty;
  out["r_singleton"] = s.r_singleton;
  out["violations"] = s.violations;
  if (!s.first_violation.empty()) out["first_violation"] = s.first_violation;
  return out;
}

SweepStats sweep_from_json(const json& j) {
  SweepStats s;
  s.triples = j.at("triples").get<long long>();
  s.r_nonempty = j.at("r_nonempty").get<long long>();
  s.r_singleton = j.at("r_singleton").get<long long>();
  s.violations = j.at("violations").get<long long>();
  if (j.contains("first_violation")) s.first_violation = j["first_violation"].get<std::string>();
  return s;
}

json pair_sweep_to_json(const PairSweepStats& s) {
  json out;
  out["pairs"] = s.pairs;
  out["violations"] = s.violations;
  if (!s.first_violation.empty()) out["first_violation"] = s.first_violation;
  return out;
}

PairSweepStats pair_sweep_from_json(const json& j) {
  PairSweepStats s;
  s.pairs = j.at("pairs").get<long long>();
  s.violations = j.at("violations").get<long long>();
  if (j.contains("first_violation")) s.first_violation = j["first_violation"].get<std::string>();
  return s;
}

std::vector<int> parse_word(const std::string& text, int rank) {
  std::vector<int> word;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse word letter '" + tok + "'");
    }
    if (used != tok.size() || v < 1 || v > rank)
      throw std::invalid_argument("word letter '" + tok + "' is out of range 1.." +
                                  std::to_string(rank));
    word.push_back(v);
  }
  return word;
}

}  // namespace qbruhat
