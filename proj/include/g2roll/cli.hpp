#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "g2roll/checks.hpp"

namespace g2roll::cli {

struct Globals {
  std::uint64_t seed = 0;
  int samples = 20;
  std::string format = "text";
  std::string out;
  bool timings = false;
};

enum Exit : int { ok = 0, failed = 1, usage = 2 };

inline std::string render(const Report& r, const Globals& g) {
  if (g.format == "json") return r.to_json(g.timings).dump(2) + "\n";
  return r.to_text(g.timings);
}

/// Keeps only claims whose id starts with one of the prefixes.
inline Report select(const Report& r, const std::vector<std::string>& prefixes) {
  Report out;
  for (const auto& c : r.claims())
    for (const auto& p : prefixes)
      if (c.id.rfind(p, 0) == 0) {
        out.adopt(c);
        break;
      }
  return out;
}

inline std::string join(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

inline std::string vec_text(const Vec3& v) { return "(" + v[0].str() + "," + v[1].str() + "," + v[2].str() + ")"; }

inline json roots_dump(const CheckContext& ctx) {
  json roots = json::array();
  for (const auto& root : ctx.rd.roots)
    roots.push_back({{"label", root.label},
                     {"value", detail::functional_json(root.value)},
                     {"long", root.is_long},
                     {"vector", to_json(root.vector.to_vector())}});
  auto wd = weight_decomposition();
  json weights = json::object();
  for (std::size_t k = 0; k < wd.names.size(); ++k) weights[wd.names[k]] = detail::functional_json(wd.weights[k]);
  return {{"roots", roots},
          {"weights", weights},
          {"parabolic", to_json(parabolic_root_labels())},
          {"plane", to_json(plane_root_labels())},
          {"derived_flag", to_json(derived_flag(parabolic_distribution_data(ctx.rd)))}};
}

inline json constants_json(const StructureConstantTable& t) {
  json rows = json::object();
  for (std::size_t i = 0; i < 6; ++i) {
    json row = json::object();
    for (std::size_t j = 0; j < 6; ++j) row[SerreBasis::kNegative[j]] = t.c[i][j].str();
    rows[SerreBasis::kPositive[i]] = row;
  }
  static const std::array<std::string, 6> dn = {"h1", "h2", "h3", "H1", "H2", "H3"};
  json diag = json::object();
  for (std::size_t i = 0; i < 6; ++i) diag[dn[i]] = t.diagonal[i].str();
  return {{"table", rows}, {"diagonal", diag}, {"[x1,x2]", t.x1x2.str() + " X3"}};
}

struct GrowthRow {
  RollingState state;
  std::vector<std::size_t> growth;
};

inline std::vector<GrowthRow> growth_rows(const Rational& ratio, const CheckOptions& o) {
  Rng rng = detail::group_rng(o, 60);
  std::vector<GrowthRow> rows;
  for (int k = 0; k < o.samples; ++k) {
    RollingState s = detail::random_state(rng, ratio);
    rows.push_back({s, growth_vector(ratio, s)});
  }
  return rows;
}

inline Report ratio_scan_report(const CheckContext& ctx) {
  Report r;
  const std::string L = "plane span{S1,S2} against the rolling equations";
  auto d = compact_distribution_data(ctx.cb);
  auto ds = compact_distribution_data(ctx.cb, true);
  auto fits = [](const DistributionData& dd, const Rational& rho) {
    for (const auto& w : dd.plane)
      if (!satisfies_plane_equations(w, rho)) return false;
    return true;
  };
  for (const Rational& rho : {Rational(3), Rational(1), Rational(2), Rational(5), Rational(1, 2)}) {
    bool f = fits(d, rho);
    r.check("compact.ratio_scan[" + rho.str() + "]", L, f == (rho == 3), {{"ratio", rho.str()}, {"fits", f}});
  }
  bool f = fits(ds, Rational(1, 3));
  r.check("compact.ratio_scan[1/3,swapped]", L, f, {{"ratio", "1/3"}, {"fits", f}});
  return r;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of g2, split octonions and the rolling distribution", "g2roll"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "sampling seed (G2ROLL_SEED overrides)");
  app.add_option("--samples", g.samples, "random samples per check")->check(CLI::Range(1, 100000));
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--out", g.out, "write output to FILE");
  app.add_flag("--timings", g.timings, "include per-claim durations");

  auto* verify = app.add_subcommand("verify-all", "run every check");
  auto* constants = app.add_subcommand("constants", "structure constants of the Serre basis");
  auto* roots = app.add_subcommand("roots", "root and weight decomposition");
  bool emit_json = false;
  roots->add_flag("--emit-json", emit_json, "dump roots, weights and flags as JSON");
  auto* compact = app.add_subcommand("compact", "maximal compact subalgebra");
  bool ratio_scan = false;
  compact->add_flag("--ratio-scan", ratio_scan, "test the plane against candidate ratios");
  auto* rolling = app.add_subcommand("rolling", "rolling distribution on SO3 x S2");
  std::string ratio_text = "3";
  bool growth = false;
  rolling->add_option("--ratio", ratio_text, "radius ratio p/q");
  rolling->add_flag("--growth", growth, "growth vector at sampled states");
  rolling->add_option("--samples", g.samples, "sample points")->check(CLI::Range(1, 100000));
  auto* quadric = app.add_subcommand("quadric", "null quadric and the covering map");
  bool q_chain = false, q_iso = false, q_cover = false, q_scan = false;
  quadric->add_flag("--chain", q_chain, "annihilator chain");
  quadric->add_flag("--isotropy", q_iso, "isotropy, transitivity and plane data");
  quadric->add_flag("--cover", q_cover, "covering map checks");
  quadric->add_flag("--ratio-scan", q_scan, "ratio realized by the cover");
  auto* pfaffian = app.add_subcommand("pfaffian", "Pfaffian system on V");
  bool p_all = false;
  std::string rank_at;
  pfaffian->add_flag("--verify-all", p_all, "run every Pfaffian check");
  pfaffian->add_option("--rank-at", rank_at, "kernel dimensions at a point, e.g. x1,0,0");
  auto* octonions = app.add_subcommand("octonions", "split octonion checks");
  bool table = false;
  octonions->add_flag("--table", table, "print the basis multiplication table");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  if (const char* env = std::getenv("G2ROLL_SEED"); env && *env) {
    try {
      std::size_t pos = 0;
      g.seed = std::stoull(env, &pos);
      if (env[pos] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: G2ROLL_SEED must be a non-negative integer\n";
      return usage;
    }
  }
  if (g.format == "latex" && !constants->parsed()) {
    err << "error: --format latex applies only to constants\n";
    return usage;
  }

  const CheckOptions opts{g.seed, g.samples};
  std::ostringstream body;
  int code = ok;
  auto emit_report = [&](const Report& r) {
    body << render(r, g);
    if (!r.ok()) code = failed;
  };

  try {
    if (verify->parsed()) {
      emit_report(verify_all(opts));
    } else if (constants->parsed()) {
      CheckContext ctx;
      const auto& t = ctx.sr.table;
      if (g.format == "json")
        body << constants_json(t).dump(2) << "\n";
      else if (g.format == "latex")
        body << format_constants_latex(t);
      else
        body << format_constants_text(t);
      if (!table_difference(t, expected_structure_constants()).empty()) code = failed;
    } else if (roots->parsed()) {
      CheckContext ctx;
      Report r = run_group("roots", opts, ctx);
      if (emit_json) {
        json d = roots_dump(ctx);
        d["report"] = r.to_json(g.timings);
        body << d.dump(2) << "\n";
        if (!r.ok()) code = failed;
      } else {
        emit_report(r);
      }
    } else if (compact->parsed()) {
      CheckContext ctx;
      emit_report(ratio_scan ? ratio_scan_report(ctx) : run_group("compact", opts, ctx));
    } else if (rolling->parsed()) {
      Rational rho = Rational::parse(ratio_text);
      if (rho.sign() <= 0) throw BadParameters("ratio must be positive");
      if (growth) {
        auto rows = growth_rows(rho, opts);
        if (g.format == "json") {
          json a = json::array();
          for (const auto& row : rows)
            a.push_back({{"ratio", rho.str()}, {"g", to_json(row.state.g.to_vector())}, {"x", to_json(row.state.x)},
                         {"growth", to_json(row.growth)}});
          body << a.dump(2) << "\n";
        } else {
          for (const auto& row : rows) body << join(row.growth) << "  x=" << vec_text(row.state.x) << "\n";
        }
      } else {
        CheckContext ctx;
        emit_report(run_group("rolling", opts, ctx));
      }
    } else if (quadric->parsed()) {
      CheckContext ctx;
      Report all = run_group("quadric", opts, ctx);
      std::vector<std::string> keep;
      if (q_chain) keep.insert(keep.end(), {"quadric.chain", "quadric.distribution_invariance"});
      if (q_iso) keep.insert(keep.end(), {"quadric.isotropy", "quadric.transitivity", "quadric.plane_data"});
      if (q_cover)
        keep.insert(keep.end(), {"quadric.cover_derivative", "quadric.cover_equivariance", "quadric.cover_two_to_one",
                                 "quadric.cover_floating"});
      if (q_scan) keep.insert(keep.end(), {"quadric.cover_ratio", "quadric.cover_convention"});
      emit_report(keep.empty() ? all : select(all, keep));
    } else if (pfaffian->parsed()) {
      if (!rank_at.empty()) {
        Vector p = parse_cartan_point(rank_at);
        PfaffianSystem s = build_system();
        std::size_t ab = system_rank_at(s.alpha_beta(), p);
        std::size_t abc = system_rank_at(s.corrected(), p);
        Rational j = J(CartanPoint::from(p));
        if (g.format == "json")
          body << json{{"point", to_json(p)}, {"J", j.str()}, {"kernel_alpha_beta", ab}, {"kernel_alpha_beta_gamma", abc}}.dump(2)
               << "\n";
        else
          body << "point " << rank_at << "  J=" << j.str() << "\nkernel(alpha,beta) = " << ab
               << "\nkernel(alpha,beta,gamma) = " << abc << "\n";
      }
      if (p_all || rank_at.empty()) {
        CheckContext ctx;
        emit_report(run_group("pfaffian", opts, ctx));
      }
    } else if (octonions->parsed()) {
      if (table) {
        body << format_multiplication_table(basis_multiplication_table());
        if (basis_multiplication_table() != expected_multiplication_table()) code = failed;
      } else {
        CheckContext ctx;
        emit_report(run_group("octonions", opts, ctx));
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const BadParameters& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failed;
  }

  if (g.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << g.out << "\n";
      return usage;
    }
    f << body.str();
  }
  return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

}  // namespace g2roll::cli
