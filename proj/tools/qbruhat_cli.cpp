// Command-line front end: evaluate divisor invariants, enumerate R-sets,
// export quantum Bruhat graphs, and run exhaustive verification sweeps.

#include <CLI11.hpp>
#include <iostream>

#include "qbruhat/json_io.hpp"

using namespace qbruhat;

namespace {

struct Options {
  std::string type = "A";
  int rank = 2;
  int i = 1;
  std::string w, x;
  std::string d;
  std::string order_word;
  std::string format = "text";
  int box = 3;
  int jobs = 1;
  bool cf = false;
  bool oracle = false;
  std::string a;  // filter parameter num/den for graph dumps
};

IntVec parse_degree(const std::string& text, int rank) {
  IntVec d;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse degree entry '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("cannot parse degree entry '" + tok + "'");
    if (v < 0) throw std::invalid_argument("degree coordinates must be nonnegative");
    d.push_back(v);
  }
  if (static_cast<int>(d.size()) != rank)
    throw std::invalid_argument("degree needs exactly " + std::to_string(rank) + " coordinates");
  return d;
}

std::pair<long long, long long> parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  long long num = std::stoll(text.substr(0, slash));
  long long den = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
  if (den <= 0 || num < 0 || num >= den)
    throw std::invalid_argument("filter parameter must satisfy 0 <= a < 1");
  return {num, den};
}

RootSystem make_system(const Options& opt) {
  CartanSpec spec{family_from_char(opt.type.empty() ? 'A' : opt.type[0]), opt.rank};
  return RootSystem(spec);
}

ReflectionOrder make_order(const RootSystem& rs, const Options& opt, const std::vector<int>& J) {
  if (opt.order_word.empty()) return default_reflection_order(rs, J);
  ReflectionOrder ord = rs.order_from_word(parse_word(opt.order_word, rs.rank()));
  auto check = rs.validate_reflection_order(ord, J);
  if (!check.ok) throw std::invalid_argument("order word rejected: " + check.report);
  return ord;
}

int cmd_invariant(const Options& opt) {
  RootSystem rs = make_system(opt);
  std::vector<int> J = rs.complement({opt.i});
  QlsContext ctx(rs, opt.i, make_order(rs, opt, J), group_size_bound_from_env());
  WeylElt w = WeylElt::from_word(rs, parse_word(opt.w, rs.rank()));
  WeylElt x = WeylElt::from_word(rs, parse_word(opt.x, rs.rank()));
  IntVec d = parse_degree(opt.d, rs.rank());

  bool use_cf = opt.cf || (!opt.oracle && ctx.weight_class() != WeightClass::Neither);
  if (use_cf) {
    InvariantResult res = divisor_cf(ctx, w, x, d);
    PositivityCertificate cert = positivity_certificate(rs, res);
    if (opt.format == "json") {
      std::cout << invariant_to_json(rs, res, &cert).dump(2) << "\n";
    } else {
      std::cout << "branch: " << branch_name(res.branch) << "\n";
      std::cout << "|R| = " << res.r_size << "\n";
      if (res.x_min)
        std::cout << "x_min = \"" << res.x_min->word_string()
                  << "\", sign exponent l(w) - l(x_min) = " << res.sign_exponent << "\n";
      if (res.wt_eta_fw) std::cout << "wt(eta) = " << weight_expr(*res.wt_eta_fw) << "\n";
      std::cout << "value = " << res.value.to_string() << "\n";
      std::cout << "certificate: " << cert.text << "; at e->1: " << cert.value_at_one << "\n";
    }
  } else {
    GroupAlgebraElt v = divisor_sum(ctx, w, x, d);
    if (opt.format == "json") {
      json out;
      out["value"] = algebra_to_json(v);
      out["value_text"] = v.to_string();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "value = " << v.to_string() << "\n";
    }
  }
  return 0;
}

int cmd_rset(const Options& opt) {
  RootSystem rs = make_system(opt);
  std::vector<int> J = rs.complement({opt.i});
  QlsContext ctx(rs, opt.i, make_order(rs, opt, J), group_size_bound_from_env());
  WeylElt w = WeylElt::from_word(rs, parse_word(opt.w, rs.rank()));
  WeylElt x = WeylElt::from_word(rs, parse_word(opt.x, rs.rank()));
  IntVec d = parse_degree(opt.d, rs.rank());
  auto R = enumerate_R(ctx, w, x, d);
  std::sort(R.begin(), R.end(), [&](const PathTuple& a, const PathTuple& b) {
    return ctx.graph().vertex(a.end).word_string() < ctx.graph().vertex(b.end).word_string();
  });
  if (opt.format == "json") {
    json out = json::array();
    for (const auto& p : R) out.push_back(tuple_to_json(ctx.graph(), p));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "|R| = " << R.size() << "\n";
    for (const auto& p : R) {
      std::cout << "end=\"" << ctx.graph().vertex(p.end).word_string() << "\" length=" << p.length
                << " qwt=";
      for (size_t k = 0; k < p.qwt.size(); ++k) std::cout << (k ? "," : "") << p.qwt[k];
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_graph(const Options& opt) {
  RootSystem rs = make_system(opt);
  std::optional<QbgFilter> filter;
  if (!opt.a.empty()) {
    auto [num, den] = parse_fraction(opt.a);
    filter = QbgFilter{num, den, unit_vec(rs.rank(), opt.i - 1)};
  }
  Qbg g(rs, {}, filter, group_size_bound_from_env());
  if (opt.format == "dot")
    std::cout << g.to_dot();
  else
    std::cout << graph_to_json(g).dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& opt) {
  RootSystem rs = make_system(opt);
  std::vector<int> J = rs.complement({opt.i});
  QlsContext ctx(rs, opt.i, make_order(rs, opt, J), group_size_bound_from_env());

  SweepConfig cfg;
  cfg.spec = rs.spec();
  cfg.node = opt.i;
  cfg.box = opt.box;
  cfg.jobs = opt.jobs;
  // the signed-sum law and the closed form only apply through level N = 2
  cfg.check_signed_sum = ctx.weight_class() != WeightClass::Neither;
  cfg.check_agreement = cfg.check_signed_sum;
  SweepStats sweep = run_sweep(ctx, cfg);

  PairSweepStats inc = label_increasing_sweep(ctx.graph(), ctx.order(), opt.jobs);
  PairSweepStats dl = ctx.graph().num_vertices() <= 100
                          ? transport_sweep_exhaustive(ctx.graph())
                          : transport_sweep_sampled(ctx.graph(), 10000, 20240817u);
  PairSweepStats ql = parabolic_descent_sweep(rs, J);

  long long violations = sweep.violations + inc.violations + dl.violations + ql.violations;
  if (opt.format == "json") {
    json out;
    out["triple_sweep"] = sweep_to_json(sweep);
    out["label_increasing"] = pair_sweep_to_json(inc);
    out["deletion_lemma"] = pair_sweep_to_json(dl);
    out["ql_lemma"] = pair_sweep_to_json(ql);
    out["violations"] = violations;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "triple sweep: " << sweep.triples << " triples, " << sweep.r_nonempty
              << " with R nonempty, " << sweep.r_singleton << " singletons, "
              << sweep.violations << " violations\n";
    if (!sweep.first_violation.empty())
      std::cout << "  first: " << sweep.first_violation << "\n";
    std::cout << "label-increasing: " << inc.pairs << " pairs, " << inc.violations
              << " violations\n";
    if (!inc.first_violation.empty()) std::cout << "  first: " << inc.first_violation << "\n";
    std::cout << "deletion lemma: " << dl.pairs << " paths, " << dl.violations
              << " violations\n";
    if (!dl.first_violation.empty()) std::cout << "  first: " << dl.first_violation << "\n";
    std::cout << "qL lemma: " << ql.pairs << " elements, " << ql.violations << " violations\n";
    if (!ql.first_violation.empty()) std::cout << "  first: " << ql.first_violation << "\n";
    std::cout << (violations == 0 ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return violations == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum Bruhat graph combinatorics and K-theoretic divisor invariants"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_triple) {
    cmd->add_option("--type", opt.type, "Cartan family A..G")->required();
    cmd->add_option("--rank", opt.rank, "rank")->required();
    cmd->add_option("--i", opt.i, "node index i (1-based)");
    cmd->add_option("--format", opt.format, "text | json | dot");
    if (needs_triple) {
      cmd->add_option("--w", opt.w, "reduced word for w, e.g. \"3 4 2\"");
      cmd->add_option("--x", opt.x, "reduced word for x");
      cmd->add_option("--d", opt.d, "degree: comma-separated coroot coefficients");
      cmd->add_option("--order-word", opt.order_word, "reduced word of w0 inducing the order");
    }
  };

  CLI::App* inv = app.add_subcommand("invariant", "evaluate <O^{s_i}, O^w, O_x>_d");
  add_common(inv, true);
  inv->add_flag("--cf", opt.cf, "use the cancellation-free closed form");
  inv->add_flag("--oracle", opt.oracle, "use the signed-sum divisor axiom");

  CLI::App* rset = app.add_subcommand("rset", "enumerate the path-tuple set R(w,x,d)");
  add_common(rset, true);

  CLI::App* graph = app.add_subcommand("graph", "dump the quantum Bruhat graph");
  add_common(graph, false);
  graph->add_option("--a", opt.a, "filter parameter a = num/den for QBG_{a varpi_i}");

  CLI::App* verify = app.add_subcommand("verify", "run the exhaustive verification sweep");
  add_common(verify, false);
  verify->add_option("--box", opt.box, "max degree coordinate");
  verify->add_option("--jobs", opt.jobs, "worker count (1 = serial reference)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(inv)) return cmd_invariant(opt);
    if (app.got_subcommand(rset)) return cmd_rset(opt);
    if (app.got_subcommand(graph)) return cmd_graph(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
