// One line per acceptance criterion: status, wall time against its limit, and what was checked.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "g2roll/cli.hpp"

using namespace g2roll;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// every listed claim present and not failed
Outcome require(const Report& r, const std::vector<std::string>& ids) {
  Outcome o;
  for (const auto& id : ids) {
    const Claim* c = r.find(id);
    if (!c || c->status == Status::fail) {
      o.ok = false;
      o.detail += (o.detail.empty() ? "" : ", ") + id + (c ? " failed" : " missing");
    }
  }
  if (o.ok) o.detail = std::to_string(ids.size()) + " claims";
  return o;
}

struct Criterion {
  int number;
  double limit_s;
  std::string name;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  const CheckOptions opts{0, 20};

  std::vector<Criterion> criteria = {
      {1, 1, "octonion table, alternativity, composition",
       [&] {
         Report r = check_octonions(opts);
         return require(r, {"octonion.table", "octonion.examples", "octonion.alternative", "octonion.composition"});
       }},
      {2, 5, "g2 realization, bracket, Jacobi, J-antisymmetry",
       [&] {
         RootDatum rd = root_decomposition();
         Report r = check_g2(opts, rd);
         return require(r, {"g2.dimension", "g2.cartan_operators", "g2.rho_expansion", "g2.bracket_closed_form",
                            "g2.jacobi", "g2.J_antisymmetric"});
       }},
      {3, 5, "structure constants, diagonal expansions, [x1,x2], symmetries",
       [&] {
         RootDatum rd = root_decomposition();
         SerreResult sr = serre_structure(rd);
         Report r = check_serre(opts, rd, sr);
         std::vector<std::string> ids = {"serre.table", "serre.diagonal", "serre.x1x2", "serre.negation_symmetry",
                                         "serre.swap_symmetry", "serre.relations"};
         for (const auto& a : SerreBasis::kPositive)
           for (const auto& b : SerreBasis::kNegative) ids.push_back("serre.table[" + a + "][" + b + "]");
         Outcome o = require(r, ids);
         std::ifstream golden(std::string(G2ROLL_GOLDEN_DIR) + "/constants.txt", std::ios::binary);
         std::stringstream s;
         s << golden.rdbuf();
         if (s.str() != format_constants_text(sr.table)) {
           o.ok = false;
           o.detail += "; golden file differs";
         } else {
           o.detail += ", golden file identical";
         }
         return o;
       }},
      {4, 1, "compact relations, e'/e'' split, quadratic x^2 + x - 3/4",
       [&] {
         RootDatum rd = root_decomposition();
         SerreResult sr = serre_structure(rd);
         Report r = check_compact(opts, rd, sr);
         return require(r, {"compact.relations", "compact.ideal_split", "compact.quadratic"});
       }},
      {5, 1, "plane of S1, S2 has ratio 3 (1/3 swapped), fails 1, 2, 5, 1/2",
       [&] {
         CheckContext ctx;
         Report r = cli::ratio_scan_report(ctx);
         Outcome o = require(r, {"compact.ratio_scan[3]", "compact.ratio_scan[1]", "compact.ratio_scan[2]",
                                 "compact.ratio_scan[5]", "compact.ratio_scan[1/2]", "compact.ratio_scan[1/3,swapped]"});
         return o;
       }},
      {6, 10, "rolling invariance, growth (2,3,5), stall at equal radii",
       [&] {
         CheckContext ctx;
         Report r = check_rolling(opts, ctx.cb);
         return require(r, {"rolling.invariance", "rolling.growth", "rolling.growth_equal_radii"});
       }},
      {7, 10, "quadric chain, isotropy = p, transitivity, derived flag",
       [&] {
         RootDatum rd = root_decomposition();
         Report r = check_quadric(opts, rd);
         return require(r, {"quadric.chain", "quadric.isotropy", "quadric.transitivity", "quadric.plane_data"});
       }},
      {8, 10, "covering map equivariance and ratio, kernel of the action, involutions",
       [&] {
         CheckContext ctx;
         Report r = check_quadric(opts, ctx.rd);
         r.merge(check_compact(opts, ctx.rd, ctx.sr));
         Outcome o = require(r, {"quadric.cover_equivariance", "quadric.cover_ratio", "compact.ktilde_kernel",
                                 "compact.involutions"});
         if (o.ok) o.detail += ", realized ratio " + r.find("quadric.cover_ratio")->witness["realized ratio"].get<std::string>();
         return o;
       }},
      {9, 10, "Pfaffian case formulas, identities, rank jump, null 3-planes",
       [&] {
         RootDatum rd = root_decomposition();
         Report r = check_pfaffian(opts, rd);
         return require(r, {"pfaffian.case1", "pfaffian.case2", "pfaffian.case3", "pfaffian.gamma_identity", "pfaffian.dJ",
                            "pfaffian.rank_jump", "pfaffian.corrections", "pfaffian.null_planes",
                            "pfaffian.null_planes_invariance"});
       }},
      {10, 60, "verify-all --seed 0 twice gives identical JSON",
       [&] {
         std::ostringstream a, b, err;
         int ca = cli::run(std::vector<std::string>{"verify-all", "--format", "json", "--seed", "0"}, a, err);
         int cb = cli::run(std::vector<std::string>{"verify-all", "--format", "json", "--seed", "0"}, b, err);
         Outcome o;
         o.ok = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
         o.detail = std::to_string(json::parse(a.str()).size()) + " claims, " + std::to_string(a.str().size()) + " bytes, " +
                    (a.str() == b.str() ? "identical" : "different") + ", exit " + std::to_string(ca) + "/" +
                    std::to_string(cb);
         return o;
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < c.limit_s;
    bool ok = o.ok && in_time;
    all = all && ok;
    std::printf("criterion %2d: %s  %.3f s (limit %.0f s)  %s: %s%s\n", c.number, ok ? "PASS" : "FAIL", s, c.limit_s,
                c.name.c_str(), o.detail.c_str(), in_time ? "" : " [over time limit]");
  }
  std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
  return all ? 0 : 1;
}
