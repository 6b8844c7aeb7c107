// Command-line driver for the logfano library: classification, Mori cone
// data, ampleness ranges, weight-space chambers, secant-variety oracles,
// curve decompositions and full log Fano certificates on blow-ups of P^n at
// general points.
//
// Exit codes: 0 = success / affirmative verdict, 1 = negative verdict,
// 2 = usage or input error.  All arithmetic and all printed values are exact
// rationals; --json switches every subcommand to the JSON wire formats.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "logfano/json_io.hpp"

namespace {

using namespace logfano;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// c0 + c1*eps with folded signs: "4 - 4*eps", "-2 + 3*eps", "1/3".
std::string linear_in_eps(const Rat& c0, const Rat& c1) {
  std::string out = rat_to_string(c0);
  if (c1 == 0) return out;
  out += c1 > 0 ? " + " : " - ";
  const Rat a = abs(c1);
  if (a != 1) out += rat_to_string(a) + "*";
  out += "eps";
  return out;
}

std::vector<Rat> parse_csv_rationals(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto from = item.find_first_not_of(" \t");
    if (from == std::string::npos)
      throw std::invalid_argument("empty entry in comma-separated rational list");
    const auto to = item.find_last_not_of(" \t");
    out.push_back(parse_rational(item.substr(from, to - from + 1)));
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of rationals");
  return out;
}

Json parse_json_arg(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid ") + what + " JSON: " + e.what());
  }
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
  int n = 0, k = 0;
};

int run_classify(const ClassifyArgs& a, bool json) {
  const bool fano = classify_log_fano(a.n, a.k);
  std::optional<TheoremId> family;
  if (a.n >= 3) family = covering_family(a.n, a.k);
  if (json) {
    Json out{{"n", a.n}, {"k", a.k}, {"log_fano", fano}};
    out["covering"] = family ? Json(theorem_name(*family)) : Json(nullptr);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "X^" << a.n << "_" << a.k << " = Bl_" << a.k << " P^" << a.n << "\n";
    std::cout << "log Fano: " << yes_no(fano) << "\n";
    if (fano && a.n >= 3) {
      if (family)
        std::cout << "covering configuration: " << theorem_name(*family) << "\n";
      else
        std::cout << "covering configuration: none built in\n";
    }
  }
  return fano ? 0 : 1;
}

// ---------------------------------------------------------------------------
// cone-info

struct ConeArgs {
  int n = 0, k = 0;
  std::string divisor_json;
};

int run_cone_info(const ConeArgs& a, bool json) {
  const MoriGenerators gens = mori_generators(a.n, a.k);
  std::optional<DivisorClass> divisor;
  std::optional<PositivityReport> report;
  if (!a.divisor_json.empty()) {
    divisor = divisor_from_json(parse_json_arg(a.divisor_json, "divisor"));
    if (divisor->n() != a.n || divisor->k() != a.k)
      throw std::invalid_argument("divisor lives on a different blow-up than --n/--k");
    report = positivity_report(*divisor);
  }
  if (json) {
    Json glist = Json::array();
    for (const auto& g : gens.generators)
      glist.push_back(Json{{"name", g.ref.name()}, {"class", curve_to_json(g.cls)}});
    Json out{{"n", a.n}, {"k", a.k}, {"cone_proven", gens.validity}, {"generators", glist}};
    if (report) {
      out["divisor"] = divisor_to_json(*divisor);
      out["positivity"] = positivity_to_json(*report);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "cone of curves on X^" << a.n << "_" << a.k << "\n";
    if (a.k == 0)
      std::cout << "generators: the line class L (no blown-up points)\n";
    else
      std::cout << "generators: " << a.k << " exceptional lines R_i, " << a.k * (a.k - 1) / 2
                << " lines through pairs L_i_j\n";
    std::cout << "description proven: " << yes_no(gens.validity) << "\n";
    if (report) {
      std::cout << "divisor: " << divisor->to_string() << "\n";
      std::cout << "min pairing over generators: " << rat_to_string(report->min_value) << "\n";
      std::cout << "ample: " << yes_no(report->ample) << ", nef: " << yes_no(report->nef) << "\n";
      if (!report->violating.empty()) {
        std::cout << "non-positive on:";
        for (const auto& g : report->violating) std::cout << " " << g.name();
        std::cout << "\n";
      }
    }
  }
  if (report) return report->ample ? 0 : 1;
  return gens.validity ? 0 : 1;
}

// ---------------------------------------------------------------------------
// ample-range

struct AmpleArgs {
  std::string theorem;
  int n = 0;
  std::string divisor_json;
};

int run_ample_range(const AmpleArgs& a, bool json) {
  if (a.theorem.empty() && a.divisor_json.empty())
    throw std::invalid_argument("one of --theorem or --divisor is required");
  DivisorClass divisor;
  if (!a.theorem.empty()) {
    const CertConfig config = build_config(parse_theorem(a.theorem), a.n);
    if (config.fixed_coefficients)
      throw std::invalid_argument(
          "configuration has fixed coefficients, not an eps family; use `certify`");
    divisor = config.divisor;
  } else {
    divisor = divisor_from_json(parse_json_arg(a.divisor_json, "divisor"));
  }
  const DivisorClass anti = anticanonical(divisor.n(), divisor.k());
  const EpsilonInterval range = epsilon_interval(anti, divisor);
  if (json) {
    Json out{{"divisor", divisor_to_json(divisor)},
             {"anticanonical", divisor_to_json(anti)},
             {"ample_range", interval_to_json(range)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "blow-up: X^" << divisor.n() << "_" << divisor.k() << "\n";
    std::cout << "divisor D = " << divisor.to_string() << "\n";
    std::cout << "-K = " << anti.to_string() << "\n";
    std::cout << "eps with -K - eps*D ample: " << range.to_string() << "\n";
  }
  return range.is_empty() ? 1 : 0;
}

// ---------------------------------------------------------------------------
// certify

struct CertifyArgs {
  std::string theorem;
  int n = 0;
};

int run_certify(const CertifyArgs& a, bool json) {
  const Certificate cert = certify(parse_theorem(a.theorem), a.n);
  if (json) {
    std::cout << certificate_to_json(cert).dump(2) << "\n";
    return cert.verdict ? 0 : 1;
  }
  std::cout << "configuration: " << theorem_name(cert.theorem) << " (n = " << cert.param_n
            << ")\n";
  std::cout << "blow-up: X^" << cert.divisor.n() << "_" << cert.divisor.k() << "\n";
  std::cout << (cert.fixed_coefficients ? "log pair K + Delta = " : "divisor D = ")
            << cert.divisor.to_string() << "\n";
  std::cout << "ample range:       " << cert.ample.to_string() << "\n";
  if (cert.singular)
    std::cout << "singularity range: " << cert.singular->to_string() << "\n";
  else
    std::cout << "singularity range: not quantified (" << cert.singular_note << ")\n";
  std::cout << "joint range:       " << cert.joint.to_string() << "\n";
  std::cout << "verdict: " << (cert.verdict ? "certified log Fano" : "not certified") << "\n";

  // Group identical pairing rows: symmetric configurations collapse to one
  // line per orbit instead of k + C(k,2) lines.
  std::vector<std::pair<std::string, std::vector<std::string>>> groups;
  for (const auto& p : cert.pairings) {
    const std::string value = linear_in_eps(p.at_zero, -p.slope);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == value; });
    if (it == groups.end())
      groups.push_back({value, {p.gen.name()}});
    else
      it->second.push_back(p.gen.name());
  }
  std::cout << "pairings against the cone generators:\n";
  for (const auto& [value, names] : groups) {
    std::cout << "  " << names.front();
    if (names.size() > 1) std::cout << " ... (" << names.size() << " generators)";
    std::cout << ": " << value << "\n";
  }
  if (!cert.ledger.empty()) {
    std::cout << "ledger discrepancies at eps = " << rat_to_string(cert.sample_eps) << ":\n";
    for (const auto& e : cert.ledger) {
      const Rat value = Rat(e.k_coeff) - cert.sample_eps * e.d_mult;
      std::cout << "  " << e.center << " (count " << e.count
                << "): a(eps) = " << linear_in_eps(Rat(e.k_coeff), -e.d_mult)
                << ", at sample: " << rat_to_string(value) << "\n";
    }
  }
  return cert.verdict ? 0 : 1;
}

// ---------------------------------------------------------------------------
// chamber

struct ChamberArgs {
  int n = 0;
  std::string point_csv;
  std::string divisor_json;
};

struct WallDescription {
  std::string kind;
  Json extra;
  std::string text;
};

WallDescription describe_wall_kind(const WallKind& kind) {
  if (const auto* f = std::get_if<FlipWall>(&kind)) {
    return {"flip",
            Json{{"contracted_dim", f->contracted_dim}, {"extracted_dim", f->extracted_dim}},
            "flip (contracts dim " + std::to_string(f->contracted_dim) + ", extracts dim " +
                std::to_string(f->extracted_dim) + ")"};
  }
  if (const auto* b = std::get_if<BlowDownWall>(&kind)) {
    Json members = Json::array();
    for (int i : b->exceptional.members()) members.push_back(i);
    return {"blow_down", Json{{"exceptional", members}},
            "divisorial contraction of E_" + b->exceptional.to_string()};
  }
  return {"p1_bundle", Json::object(), "P^1-bundle wall"};
}

int run_chamber(const ChamberArgs& a, bool json) {
  if (a.point_csv.empty() == a.divisor_json.empty())
    throw std::invalid_argument("exactly one of --point or --divisor is required");
  WeightPoint point;
  std::optional<DivisorClass> divisor;
  if (!a.point_csv.empty()) {
    point = WeightPoint{parse_csv_rationals(a.point_csv)};
  } else {
    divisor = divisor_from_json(parse_json_arg(a.divisor_json, "divisor"));
    if (divisor->n() != a.n)
      throw std::invalid_argument("divisor ambient dimension disagrees with --n");
    point = weight_projection(*divisor);
  }
  if (point.ambient() != a.n + 3)
    throw std::invalid_argument("weight point needs n+3 coordinates");

  const RegionMembership regions = region_membership(point);
  std::optional<ChamberSignature> sig;
  if (regions.in_delta) sig = chamber_signature(point, a.n);

  long below = 0, on = 0, above = 0;
  std::vector<std::pair<WallId, WallDescription>> on_walls;
  if (sig) {
    for (const auto& [wall, sign] : sig->signs) {
      if (sign == WallSign::below) ++below;
      if (sign == WallSign::above) ++above;
      if (sign == WallSign::on) {
        ++on;
        on_walls.push_back({wall, describe_wall_kind(classify_wall(wall, a.n))});
      }
    }
  }
  std::vector<std::pair<BoundaryFacet, WallDescription>> facets;
  for (int i = 1; i <= a.n + 3; ++i) {
    const Rat& c = point.alpha(i);
    if (c == 0 || c == 1) {
      const BoundaryFacet facet{i, c == 0 ? 0 : 1};
      facets.push_back({facet, describe_wall_kind(classify_wall(facet, a.n))});
    }
  }

  if (json) {
    Json coords = Json::array();
    for (const Rat& c : point.alphas) coords.push_back(rat_to_json(c));
    Json out{{"n", a.n},
             {"point", coords},
             {"regions", Json{{"delta", regions.in_delta},
                              {"mov", regions.in_mov},
                              {"nef", regions.in_nef}}}};
    if (divisor) out["divisor"] = divisor_to_json(*divisor);
    out["signature"] = sig ? signature_to_json(*sig) : Json(nullptr);
    Json walls = Json::array();
    for (const auto& [wall, desc] : on_walls) {
      Json members = Json::array();
      for (int i : wall.I.members()) members.push_back(i);
      Json entry{{"I", members}, {"k", wall.level}, {"kind", desc.kind}};
      entry.update(desc.extra);
      walls.push_back(entry);
    }
    out["on_walls"] = walls;
    Json box = Json::array();
    for (const auto& [facet, desc] : facets)
      box.push_back(Json{{"index", facet.index}, {"value", facet.value}, {"kind", desc.kind}});
    out["box_facets"] = box;
    std::cout << out.dump(2) << "\n";
  } else {
    if (divisor) std::cout << "divisor: " << divisor->to_string() << "\n";
    std::cout << "weight point: " << point.to_string() << "\n";
    std::cout << "in effective region Delta: " << yes_no(regions.in_delta) << "\n";
    std::cout << "in movable region: " << yes_no(regions.in_mov) << "\n";
    std::cout << "in nef region: " << yes_no(regions.in_nef) << "\n";
    if (sig) {
      std::cout << "walls: " << below << " below, " << on << " on, " << above << " above\n";
      for (const auto& [wall, desc] : on_walls)
        std::cout << "  on H_I = " << wall.level << " for I = " << wall.I.to_string() << ": "
                  << desc.text << "\n";
      for (const auto& [facet, desc] : facets)
        std::cout << "  on box facet alpha_" << facet.index << " = " << facet.value << ": "
                  << desc.text << "\n";
    } else {
      std::cout << "chamber signature: undefined outside Delta\n";
    }
  }
  return regions.in_delta ? 0 : 1;
}

// ---------------------------------------------------------------------------
// secant-oracle

struct SecantArgs {
  int n = 0;
  int trials = 20;
};

std::vector<Rat> random_direction(RatSampler& rng, const RationalPoint& p) {
  while (true) {
    std::vector<Rat> v(p.coords.size());
    for (auto& c : v) c = rng.next_rational(20, 8);
    if (exact_rank({p.coords, v}) == 2) return v;
  }
}

int run_secant_oracle(const SecantArgs& a, bool json, std::uint64_t seed) {
  if (a.n < 4 || a.n % 2 != 0 || a.n > 10)
    throw std::invalid_argument("secant oracle needs even n with 4 <= n <= 10");
  if (a.trials < 1) throw std::invalid_argument("trials must be positive");
  const int h = a.n / 2;
  RatSampler rng(seed);
  const std::vector<Rat> anchors = default_anchors(a.n);
  const Polynomial det = hankel_det_poly(h);

  long rank_pass = 0, rank_total = 0, order_pass = 0, order_total = 0;
  for (int trial = 0; trial < a.trials; ++trial) {
    // Rank of the Hankel matrix at a random point of sec_k is k.
    for (int k = 1; k <= h; ++k) {
      const RationalPoint p = sample_join_point(JoinLabel::secant(k, a.n), anchors, rng);
      ++rank_total;
      if (hankel_rank(p, a.n) == k) ++rank_pass;
    }
    // The sec_h hypersurface det vanishes to order t+1 along sec_{h-t}.
    for (int t = 0; t < h; ++t) {
      const RationalPoint p = sample_join_point(JoinLabel::secant(h - t, a.n), anchors, rng);
      const std::vector<Rat> v = random_direction(rng, p);
      ++order_total;
      if (vanishing_order(det, p.coords, v, h + 2) == t + 1) ++order_pass;
    }
  }
  const bool all = rank_pass == rank_total && order_pass == order_total;
  if (json) {
    Json out{{"n", a.n},
             {"h", h},
             {"seed", seed},
             {"trials", a.trials},
             {"rank_checks", Json{{"passed", rank_pass}, {"total", rank_total}}},
             {"order_checks", Json{{"passed", order_pass}, {"total", order_total}}},
             {"all_passed", all}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "secant oracle on P^" << a.n << " (h = " << h << "), seed " << seed << ", "
              << a.trials << " trials\n";
    std::cout << "hankel rank checks:      " << rank_pass << "/" << rank_total << "\n";
    std::cout << "vanishing order checks:  " << order_pass << "/" << order_total << "\n";
    std::cout << "verdict: " << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// decompose

struct DecomposeArgs {
  int n = 0, k = 0;
  std::string curve_csv;
};

int run_decompose(const DecomposeArgs& a, bool json) {
  const std::vector<Rat> values = parse_csv_rationals(a.curve_csv);
  if (static_cast<int>(values.size()) != a.k + 1)
    throw std::invalid_argument("--curve needs k+1 entries: l,r_1,...,r_k");
  const CurveClass curve(a.n, a.k, values[0],
                         std::vector<Rat>(values.begin() + 1, values.end()));
  const std::vector<DecompositionTerm> terms = decompose_curve(curve);
  const bool exact = recombine(terms, a.n, a.k) == curve;
  if (json) {
    Json out{{"curve", curve_to_json(curve)},
             {"terms", decomposition_to_json(terms)},
             {"recombines", exact}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "curve: " << curve.to_string() << "\n";
    std::cout << "decomposition:\n";
    for (const auto& t : terms)
      std::cout << "  " << rat_to_string(t.coeff) << " * " << t.gen.name() << "\n";
    std::cout << "recombination check: " << (exact ? "exact" : "MISMATCH") << "\n";
  }
  return exact ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact intersection theory, Mori cone data, weight-space chambers and log Fano "
      "certificates on blow-ups of P^n at general points"};
  app.set_version_flag("--version", "logfano 1.0");
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "emit JSON wire formats instead of text");
  std::uint64_t seed_value = 0;
  auto* seed_opt =
      app.add_option("--seed", seed_value, "sampling seed (beats LOGFANO_SEED; default 1729)");

  int rc = 0;

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "decide whether Bl_k P^n is log Fano");
  classify->fallthrough();
  classify->add_option("-n,--n", classify_args.n, "ambient dimension (>= 2)")->required();
  classify->add_option("-k,--k", classify_args.k, "number of blown-up points")->required();
  classify->callback([&] { rc = run_classify(classify_args, json); });

  ConeArgs cone_args;
  auto* cone = app.add_subcommand("cone-info", "cone of curves generators and validity");
  cone->fallthrough();
  cone->add_option("-n,--n", cone_args.n, "ambient dimension (>= 2)")->required();
  cone->add_option("-k,--k", cone_args.k, "number of blown-up points")->required();
  cone->add_option("--divisor", cone_args.divisor_json,
                   "divisor class as JSON; adds a positivity report");
  cone->callback([&] { rc = run_cone_info(cone_args, json); });

  AmpleArgs ample_args;
  auto* ample =
      app.add_subcommand("ample-range", "exact eps range over which -K - eps*D is ample");
  ample->fallthrough();
  auto* ample_theorem = ample->add_option(
      "--theorem", ample_args.theorem,
      "built-in configuration: cremona, hyperplanes, odd, even, p3-k4..p3-k7");
  ample->add_option("-n,--n", ample_args.n, "parameter n of the configuration");
  auto* ample_divisor =
      ample->add_option("--divisor", ample_args.divisor_json, "divisor class as JSON");
  ample_theorem->excludes(ample_divisor)->needs(ample->get_option("--n"));
  ample->callback([&] { rc = run_ample_range(ample_args, json); });

  CertifyArgs certify_args;
  auto* cert = app.add_subcommand("certify", "full log Fano certificate for a configuration");
  cert->fallthrough();
  cert->add_option("--theorem", certify_args.theorem,
                   "cremona, hyperplanes, odd, even, p3-k4..p3-k7, hassett-a1, hassett-a12")
      ->required();
  cert->add_option("-n,--n", certify_args.n, "parameter n of the configuration")->required();
  cert->callback([&] { rc = run_certify(certify_args, json); });

  ChamberArgs chamber_args;
  auto* chamber =
      app.add_subcommand("chamber", "weight-space region membership and chamber signature");
  chamber->fallthrough();
  chamber->add_option("-n,--n", chamber_args.n, "ambient dimension (k = n+3 points)")
      ->required();
  auto* chamber_point = chamber->add_option("--point", chamber_args.point_csv,
                                            "weight point: n+3 comma-separated rationals");
  auto* chamber_divisor = chamber->add_option("--divisor", chamber_args.divisor_json,
                                              "divisor class as JSON (projected to weights)");
  chamber_point->excludes(chamber_divisor);
  chamber->callback([&] { rc = run_chamber(chamber_args, json); });

  SecantArgs secant_args;
  auto* secant = app.add_subcommand(
      "secant-oracle", "seeded rank and vanishing-order checks for secant varieties");
  secant->fallthrough();
  secant->add_option("-n,--n", secant_args.n, "even ambient dimension, 4..10")->required();
  secant->add_option("--trials", secant_args.trials, "number of random trials (default 20)");
  secant->callback([&] {
    const std::uint64_t seed =
        seed_opt->count() > 0 ? resolve_seed(&seed_value) : resolve_seed(nullptr);
    rc = run_secant_oracle(secant_args, json, seed);
  });

  DecomposeArgs decompose_args;
  auto* decompose = app.add_subcommand(
      "decompose", "write an effective curve class as a sum of cone generators");
  decompose->fallthrough();
  decompose->add_option("-n,--n", decompose_args.n, "ambient dimension (>= 2)")->required();
  decompose->add_option("-k,--k", decompose_args.k, "number of blown-up points")->required();
  decompose
      ->add_option("--curve", decompose_args.curve_csv,
                   "k+1 comma-separated values l,r_1,...,r_k (degree-d curve with "
                   "multiplicity m_i at p_i has l = d, r_i = -m_i)")
      ->required();
  decompose->callback([&] { rc = run_decompose(decompose_args, json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
