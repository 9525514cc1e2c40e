#include "logtor/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "logtor/json_io.hpp"

namespace logtor {

namespace {

constexpr std::uint64_t kDefaultSeed = 0x10907;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

void emit(const Json& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  // aligned text rendering of one level of keys
  std::size_t width = 0;
  for (auto it = report.begin(); it != report.end(); ++it) width = std::max(width, it.key().size());
  for (auto it = report.begin(); it != report.end(); ++it) {
    out << it.key() << std::string(width - it.key().size() + 2, ' ');
    if (it.value().is_string())
      out << it.value().get<std::string>();
    else
      out << it.value().dump();
    out << "\n";
  }
}

struct CliContext {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 0;
  std::vector<std::uint32_t> primes{101, 103, 107, 109};
  std::size_t max_subset = 20;
  bool allow_large = false;
};

void check_arrangement_cap(const HArrangement& a, const CliContext& ctx) {
  if (a.size() > ctx.max_subset && !ctx.allow_large)
    throw std::invalid_argument(
        "arrangement has more than " + std::to_string(ctx.max_subset) +
        " hyperplanes; subset enumeration is exponential (pass --allow-large to override)");
}

Json run_distinguish(const CliContext& ctx, const std::string& fpath, const std::string& gpath) {
  MPoly f = mpoly_from_json(load_json(fpath));
  MPoly g = mpoly_from_json(load_json(gpath));
  DistinguishReport rep = distinguish(f, g);
  Json out;
  out["verdict"] = rep.verdict == DistinguishReport::Verdict::DistinctBundles
                       ? "DistinctBundles"
                       : "JacobianIndistinguishable";
  if (rep.witness_factor) out["witness_factor"] = *rep.witness_factor + 1;
  out["provenance"] = "exact";
  out["h1_gate"] = Json{{"h1", rep.h1}, {"verified", rep.hypothesis_verified}};
  if (!rep.hypothesis_verified) out["warning"] = "HypothesisUnverified: h1(TX(-a)) does not vanish";
  Json spans = Json::array();
  for (std::size_t i = 0; i < f.shape().factors(); ++i) spans.push_back(span_to_json(jacobian_space(f, i)));
  out["spans"] = spans;
  if (ctx.trials > 0 && f.shape().factors() >= 2) {
    RestrictReport rr = restrict_and_compare(f, g, ctx.trials, ctx.seed);
    out["restriction_trials"] = Json{{"trials", rr.trials.size()},
                                     {"spans_equal", rr.equal_count},
                                     {"proportional", rr.proportional_count},
                                     {"seed", ctx.seed}};
  }
  return out;
}

Json run_recover(const CliContext&, const std::string& fpath, const std::string& gpath) {
  MPoly f = mpoly_from_json(load_json(fpath));
  MPoly g = mpoly_from_json(load_json(gpath));
  auto rec = recover_split_normal_form(f, g);
  Json out;
  if (!rec) {
    out["recovered"] = false;
    out["note"] = "no split structure found (or not resolvable over a quadratic extension)";
    return out;
  }
  out["recovered"] = true;
  out["lambda"] = quadext_to_json(rec->lambda);
  out["v_f"] = quadext_to_json(rec->v_f);
  out["v_g"] = quadext_to_json(rec->v_g);
  out["provenance"] = rec->rational ? "exact (rational)" : "exact (quadratic extension)";
  Json changes = Json::array();
  for (const auto& ch : rec->change) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < 2; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < 2; ++j) row.push_back(quadext_to_json(ch.matrix(i, j)));
      rows.push_back(row);
    }
    changes.push_back(Json{{"factor", ch.factor + 1}, {"matrix", rows}});
  }
  out["change"] = changes;
  return out;
}

Json run_jacobian(const CliContext&, const std::string& fpath, std::size_t factor) {
  MPoly f = mpoly_from_json(load_json(fpath));
  if (factor < 1 || factor > f.shape().factors())
    throw std::invalid_argument("factor index out of range");
  Span s = jacobian_space(f, factor - 1);
  Json out;
  out["factor"] = factor;
  out["span"] = span_to_json(s);
  return out;
}

Json run_smooth(const CliContext& ctx, const std::string& fpath) {
  MPoly f = mpoly_from_json(load_json(fpath));
  return smoothness_to_json(smooth_on_p1xp1(f, ctx.primes));
}

Json run_pencil(const CliContext&, const std::string& fpath, const std::string& gpath) {
  MPoly f = mpoly_from_json(load_json(fpath));
  MPoly g = mpoly_from_json(load_json(gpath));
  return pencil_to_json(pencil_singular_members(f, g));
}

Json run_apolar(const CliContext&, const std::string& qpath, const std::string& hpath) {
  Quadric q = quadric_from_json(load_json(qpath));
  Hyperplane h = hyperplane_from_json(load_json(hpath));
  auto p = apolar_point(q, h);
  Json out;
  Json pt = Json::array();
  for (const auto& c : p) pt.push_back(rational_to_json(c));
  out["apolar_point"] = pt;
  out["on_quadric"] = q.contains(p);
  out["section_smooth"] = section_is_smooth(q, h);
  return out;
}

Json run_tame(const CliContext& ctx, const std::string& path) {
  SectionConfig config = section_config_from_json(load_json(path));
  if (config.sections().size() > ctx.max_subset && !ctx.allow_large)
    throw std::invalid_argument("configuration too large; pass --allow-large to override");
  Json out;
  out["tame"] = is_tame(config);
  return out;
}

Json run_snc(const CliContext& ctx, const std::string& path) {
  HArrangement a = arrangement_from_json(load_json(path));
  check_arrangement_cap(a, ctx);
  SncReport rep = is_snc(a);
  Json out;
  out["snc"] = rep.snc;
  if (!rep.snc) {
    Json w = Json::array();
    for (auto i : rep.witness) w.push_back(i + 1);
    out["witness_subset"] = w;
  }
  return out;
}

Json run_sigma(const CliContext& ctx, const std::string& path) {
  HArrangement a = arrangement_from_json(load_json(path));
  check_arrangement_cap(a, ctx);
  auto pts = sigma_points(a);
  Json out;
  out["count"] = pts.size();
  Json arr = Json::array();
  for (const auto& p : pts) {
    Json jp = Json::array();
    for (const auto& c : p) jp.push_back(rational_to_json(c));
    arr.push_back(jp);
  }
  out["points"] = arr;
  return out;
}

Json run_chern(const CliContext&, const std::string& path) {
  auto curves = curves_from_json(load_json(path));
  LogChern lc = log_chern(curves);
  Json out;
  out["rank"] = lc.rank;
  out["c1"] = Json::array({lc.c1a, lc.c1b});
  out["c2"] = lc.c2;
  out["chi"] = euler_char(lc);
  return out;
}

Json run_chi(const CliContext&, long long rank, const std::string& c1, long long c2,
             const std::string& twist) {
  auto c1v = parse_int_list(c1);
  if (c1v.size() != 2) throw std::invalid_argument("--c1 expects a,b");
  LogChern e{rank, c1v[0], c1v[1], c2};
  Json out;
  if (!twist.empty()) {
    auto tv = parse_int_list(twist);
    if (tv.size() != 2) throw std::invalid_argument("--twist expects s,t");
    e = twist_chern(e, tv[0], tv[1]);
    out["twisted_c1"] = Json::array({e.c1a, e.c1b});
    out["twisted_c2"] = e.c2;
  }
  out["chi"] = euler_char(e);
  return out;
}

Json run_splitting_lines(const CliContext&, long long a, long long b) {
  auto [l1, l2] = line_arrangement_splitting(a, b);
  Json out;
  out["summands"] = Json::array({Json::array({l1.first, l1.second}), Json::array({l2.first, l2.second})});
  return out;
}

Json run_splitting_hyperplanes(const CliContext&, int n, int m) {
  auto bundle = hyperplane_log_splitting(n, m);
  Json out;
  if (std::holds_alternative<SplitBundle>(bundle)) {
    const auto& s = std::get<SplitBundle>(bundle);
    out["type"] = "split";
    out["trivial_summands"] = s.trivial_summands;
    out["twisted_summands"] = s.twisted_summands;
  } else if (std::holds_alternative<TangentTwist>(bundle)) {
    out["type"] = "tangent_twist";
    out["n"] = std::get<TangentTwist>(bundle).n;
  } else {
    const auto& s = std::get<SteinerRanks>(bundle);
    out["type"] = "steiner";
    out["kernel_rank"] = s.kernel_rank;
    out["middle_rank"] = s.middle_rank;
  }
  return out;
}

Json run_acm(const CliContext&, const std::string& path) {
  auto curves = curves_from_json(load_json(path));
  Json out;
  out["acm"] = is_acm_q2(curves);
  return out;
}

Json run_vanishing(const CliContext&, const std::string& shape, const std::string& degree) {
  Shape s(parse_int_list(shape));
  MultiDegree a(parse_int_list(degree));
  auto rep = bott_kunneth_h1_tangent(s, a);
  Json out;
  out["h1"] = rep.h1;
  out["vanishes"] = rep.vanishes;
  // cohomology table of the factor sheaves entering the Kunneth sum
  Json table = Json::array();
  for (std::size_t i = 0; i < s.factors(); ++i) {
    for (int q = 0; q <= 1; ++q) {
      table.push_back(Json{{"space", "P^" + std::to_string(s.dim(i))},
                           {"sheaf", "T(" + std::to_string(-a[i]) + ")"},
                           {"q", q},
                           {"dim", h_pn_tangent(s.dim(i), -a[i], q)}});
      table.push_back(Json{{"space", "P^" + std::to_string(s.dim(i))},
                           {"sheaf", "O(" + std::to_string(-a[i]) + ")"},
                           {"q", q},
                           {"dim", h_pn_line(s.dim(i), -a[i], q)}});
    }
  }
  out["table"] = table;
  return out;
}

Json run_threshold(const CliContext&, const std::string& variety, int n, int d) {
  ThresholdQuery q;
  if (variety == "pn") {
    q.variety = ThresholdQuery::Variety::Pn;
  } else if (variety == "qn") {
    q.variety = ThresholdQuery::Variety::Qn;
  } else {
    throw std::invalid_argument("variety must be pn or qn");
  }
  q.n = n;
  q.d = d;
  Json out;
  out["threshold"] = torelli_threshold(q);
  return out;
}

Json run_residue_check(const CliContext&, const std::string& path) {
  auto curves = curves_from_json(load_json(path));
  ResidueCheck rc = residue_euler_check(curves);
  Json out;
  out["lhs"] = rc.lhs;
  out["rhs"] = rc.rhs;
  out["equal"] = rc.equal;
  return out;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants of logarithmic bundles on quadrics and multiprojective spaces"};
  app.require_subcommand(1);
  CliContext ctx;
  app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", ctx.seed, "seed for randomized trials");
  app.add_option("--trials", ctx.trials, "number of randomized restriction trials");
  app.add_option("--primes", ctx.primes, "primes for probabilistic fallbacks");
  app.add_option("--max-subset", ctx.max_subset, "arrangement size cap for subset enumeration");
  app.add_flag("--allow-large", ctx.allow_large, "lift the arrangement size cap");

  std::string file1, file2, c1, twist, shape, degree, variety, kind;
  long long rank = 2, c2 = 0, la = 0, lb = 0;
  std::size_t factor = 1;
  int n = 1, d = 1;

  auto* distinguish_cmd = app.add_subcommand("distinguish", "compare Jacobian spans of two divisors");
  distinguish_cmd->add_option("f", file1)->required();
  distinguish_cmd->add_option("g", file2)->required();

  auto* recover_cmd = app.add_subcommand("recover", "split normal form of a pair");
  recover_cmd->add_option("f", file1)->required();
  recover_cmd->add_option("g", file2)->required();

  auto* jac_cmd = app.add_subcommand("jacobian", "Jacobian span of one factor");
  jac_cmd->add_option("f", file1)->required();
  jac_cmd->add_option("--factor", factor, "factor index (1-based)");

  auto* smooth_cmd = app.add_subcommand("smooth", "smoothness on P^1 x P^1");
  smooth_cmd->add_option("f", file1)->required();

  auto* pencil_cmd = app.add_subcommand("pencil", "singular members of a pencil");
  pencil_cmd->add_option("f", file1)->required();
  pencil_cmd->add_option("g", file2)->required();

  auto* apolar_cmd = app.add_subcommand("apolar", "apolar point of a hyperplane");
  apolar_cmd->add_option("quadric", file1)->required();
  apolar_cmd->add_option("hyperplane", file2)->required();

  auto* tame_cmd = app.add_subcommand("tame", "tameness of a section configuration");
  tame_cmd->add_option("config", file1)->required();

  auto* snc_cmd = app.add_subcommand("snc", "simple normal crossings test");
  snc_cmd->add_option("arrangement", file1)->required();

  auto* sigma_cmd = app.add_subcommand("sigma", "points on at least r+1 hyperplanes");
  sigma_cmd->add_option("arrangement", file1)->required();

  auto* chern_cmd = app.add_subcommand("chern", "Chern data of a curve arrangement");
  chern_cmd->add_option("curves", file1)->required();

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic from Chern data");
  chi_cmd->add_option("--rank", rank)->required();
  chi_cmd->add_option("--c1", c1, "a,b")->required();
  chi_cmd->add_option("--c2", c2)->required();
  chi_cmd->add_option("--twist", twist, "s,t");

  auto* split_cmd = app.add_subcommand("splitting", "splitting of logarithmic bundles");
  split_cmd->add_option("kind", kind, "lines | hyperplanes")->required();
  split_cmd->add_option("first", la)->required();
  split_cmd->add_option("second", lb)->required();

  auto* acm_cmd = app.add_subcommand("acm", "ACM test for a curve arrangement");
  acm_cmd->add_option("curves", file1)->required();

  auto* van_cmd = app.add_subcommand("vanishing", "h1 gate for the distinguisher");
  van_cmd->add_option("--shape", shape, "n_1,...,n_s")->required();
  van_cmd->add_option("--degree", degree, "a_1,...,a_s")->required();

  auto* thr_cmd = app.add_subcommand("threshold", "generic-injectivity thresholds");
  thr_cmd->add_option("variety", variety, "pn | qn")->required();
  thr_cmd->add_option("n", n)->required();
  thr_cmd->add_option("d", d);

  auto* res_cmd = app.add_subcommand("residue-check", "chi additivity along the residue sequence");
  res_cmd->add_option("curves", file1)->required();

  // CLI11 wants argv order reversed, without the program name
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    Json report;
    if (distinguish_cmd->parsed()) report = run_distinguish(ctx, file1, file2);
    if (recover_cmd->parsed()) report = run_recover(ctx, file1, file2);
    if (jac_cmd->parsed()) report = run_jacobian(ctx, file1, factor);
    if (smooth_cmd->parsed()) report = run_smooth(ctx, file1);
    if (pencil_cmd->parsed()) report = run_pencil(ctx, file1, file2);
    if (apolar_cmd->parsed()) report = run_apolar(ctx, file1, file2);
    if (tame_cmd->parsed()) report = run_tame(ctx, file1);
    if (snc_cmd->parsed()) report = run_snc(ctx, file1);
    if (sigma_cmd->parsed()) report = run_sigma(ctx, file1);
    if (chern_cmd->parsed()) report = run_chern(ctx, file1);
    if (chi_cmd->parsed()) report = run_chi(ctx, rank, c1, c2, twist);
    if (split_cmd->parsed()) {
      if (kind == "lines")
        report = run_splitting_lines(ctx, la, lb);
      else if (kind == "hyperplanes")
        report = run_splitting_hyperplanes(ctx, static_cast<int>(la), static_cast<int>(lb));
      else
        throw std::invalid_argument("splitting kind must be lines or hyperplanes");
    }
    if (acm_cmd->parsed()) report = run_acm(ctx, file1);
    if (van_cmd->parsed()) report = run_vanishing(ctx, shape, degree);
    if (thr_cmd->parsed()) report = run_threshold(ctx, variety, n, d);
    if (res_cmd->parsed()) report = run_residue_check(ctx, file1);
    emit(report, ctx.format, out);
    return 0;
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const SingularMatrixError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const IdenticalDivisorsError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const DependentHyperplanesError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const CenterOnQuadricError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const DegeneratePlaneError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const AmbientTooSmallError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const InfiniteLocusError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedExtensionError& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "malformed input: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace logtor
