#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "cubic27/io.hpp"

namespace {

using namespace cubic27;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitConstruction = 3;

struct Options {
  std::string format = "text";
  int jobs = 1;
};

void emit(const Json& doc, const Options& opt, const std::string& text_summary) {
  if (opt.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text_summary;
  }
}

std::string describe_lines(const IncidenceReport& rep) {
  std::ostringstream os;
  os << "27 lines, self-intersection -1 each\n";
  for (const auto& li : rep.lines) {
    os << "  " << li.label.str() << " " << li.cls.str() << "  meets";
    for (auto [m, n] : li.triangles)
      os << "  {" << rep.lines[static_cast<size_t>(m)].label.str() << ","
         << rep.lines[static_cast<size_t>(n)].label.str() << "}";
    os << "\n";
  }
  os << (rep.counts_verified ? "counts verified: 10 neighbors, 5 coplanar pairs per line\n"
                             : "COUNT VERIFICATION FAILED\n");
  return os.str();
}

std::string describe_genericity(const GenericityReport& rep) {
  std::ostringstream os;
  os << "general position: " << (rep.general_position ? "yes" : "NO") << "\n";
  for (const auto& p : rep.predicate_results) {
    os << "  [" << (p.holds ? "ok" : "FAIL") << "] " << p.id;
    if (!p.holds && p.witness) os << "  witness " << p.witness->str();
    os << "\n";
  }
  os << "all predicates hold: " << (rep.all_hold() ? "yes" : "no") << "\n";
  return os.str();
}

std::string describe_exc(const ExceptionalLocusReport& rep) {
  std::ostringstream os;
  os << rep.components.size() << " components outside the boundary\n";
  for (const auto& c : rep.components) {
    os << "  " << c.label.str() << "  support(closure)=" << c.support.count_closure
       << "  degree=" << c.support.total_degree_lattice << "  type=" << curve_type_name(c.type)
       << "\n";
  }
  if (!rep.extra_components.empty()) {
    os << rep.extra_components.size() << " certified extra components\n";
    for (const auto& cert : rep.extra_components)
      os << "  degree " << cert.curve.degree() << ": " << cert.notes << "\n";
  }
  os << "genericity: " << (rep.genericity.all_hold() ? "all predicates hold" : "degenerate")
     << "\n";
  return os.str();
}

std::string describe_profiles(const std::vector<MultiplicityProfile>& profiles) {
  std::ostringstream os;
  os << profiles.size() << " boundary profiles up to hexagon symmetry\n";
  for (const auto& p : profiles) os << "  " << p.str() << "\n";
  return os.str();
}

int run_selftest(unsigned long seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-50, 50);
  std::uniform_int_distribution<long> scale(1, 40);
  for (int t = 0; t < trials; ++t) {
    std::array<Rational, 3> raw;
    bool all_zero = true;
    for (auto& v : raw) {
      long num = coord(rng);
      long den = scale(rng);
      v = make_rational(Int(num), Int(den));
      if (num != 0) all_zero = false;
    }
    if (all_zero) continue;
    ProjPoint p = normalize(raw);
    Rational s = make_rational(Int(coord(rng) == 0 ? 3 : coord(rng)), Int(scale(rng)));
    if (s == 0) s = Rational(7);
    std::array<Rational, 3> scaled;
    for (size_t i = 0; i < 3; ++i) scaled[i] = raw[i] * s;
    if (!(normalize(scaled) == p)) {
      std::cerr << "selftest: normalize not scale invariant\n";
      return kExitVerification;
    }
  }
  std::cout << "selftest passed (" << trials << " trials, seed " << seed << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the lines and boundary geometry of a blown-up plane"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Options opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", opt.jobs, "parallelism hint (output is deterministic)")
      ->check(CLI::PositiveNumber);

  auto* lines_cmd = app.add_subcommand("lines", "the 27 lines and their incidence structure");

  std::string config_path;
  auto* check_cmd = app.add_subcommand("check-config", "general position and extra genericity");
  check_cmd->add_option("config", config_path, "configuration document")->required();

  auto* exc_cmd = app.add_subcommand("exc-locus", "candidate exceptional components");
  exc_cmd->add_option("config", config_path, "configuration document")->required();

  int max_degree = 5;
  bool no_tangency = false;
  auto* bound_cmd = app.add_subcommand("bound-search", "exhaustive boundary-profile search");
  bound_cmd->add_option("--max-degree", max_degree, "largest plane degree (<= 12)");
  bound_cmd->add_flag("--no-tangency", no_tangency, "require transverse boundary points");

  int bound = 10;
  auto* ineq_cmd = app.add_subcommand("inequality-check", "genus inequality reduction on a grid");
  ineq_cmd->add_option("--bound", bound, "grid bound");

  auto* degen_cmd = app.add_subcommand("degenerate", "degenerate configuration laboratory");
  degen_cmd->require_subcommand(1);
  std::string build_kind;
  int scan_range = 60;
  auto* build_cmd = degen_cmd->add_subcommand("build", "construct a degenerate configuration");
  build_cmd->add_option("kind", build_kind, "affine-line | triple-point | nodal-cubic | quartic")
      ->required()
      ->check(CLI::IsMember({"affine-line", "triple-point", "nodal-cubic", "quartic"}));
  build_cmd->add_option("--scan-range", scan_range, "search range for rational scans");
  auto* detect_cmd = degen_cmd->add_subcommand("detect", "detect degeneracies in a configuration");
  detect_cmd->add_option("config", config_path, "configuration document")->required();

  auto* verify_cmd = app.add_subcommand("verify-cert", "re-verify a certificate document");
  verify_cmd->add_option("document", config_path, "certificate document")->required();

  auto* emit_cmd = app.add_subcommand("emit-config", "write a built-in configuration");
  std::string emit_kind = "standard";
  emit_cmd->add_option("kind", emit_kind, "standard | example")
      ->check(CLI::IsMember({"standard", "example"}));

  unsigned long seed = 1;
  int trials = 500;
  auto* selftest_cmd = app.add_subcommand("selftest", "randomized invariance checks");
  selftest_cmd->add_option("--seed", seed, "random seed");
  selftest_cmd->add_option("--trials", trials, "number of trials");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lines_cmd) {
      auto rep = incidence_report();
      emit(incidence_json(rep), opt, describe_lines(rep));
      return rep.counts_verified ? kExitOk : kExitVerification;
    }
    if (*check_cmd) {
      auto points = parse_config_points(load_json_file(config_path));
      GenericityReport rep = general_position_check(points);
      if (rep.general_position) rep = extra_genericity_check(SixPointConfig::create(points));
      emit(genericity_json(rep), opt, describe_genericity(rep));
      return kExitOk;
    }
    if (*exc_cmd) {
      auto config = load_config_file(config_path);
      auto rep = exceptional_components(config);
      emit(exceptional_json(rep), opt, describe_exc(rep));
      return kExitOk;
    }
    if (*bound_cmd) {
      auto profiles = degree_bound_search(max_degree, !no_tangency);
      Json doc = Json::array();
      for (const auto& p : profiles) doc.push_back(profile_json(p));
      emit(doc, opt, describe_profiles(profiles));
      return kExitOk;
    }
    if (*ineq_cmd) {
      bool ok = verify_inequality_reduction(bound);
      Json doc;
      doc["bound"] = bound;
      doc["equivalent"] = ok;
      std::ostringstream os;
      os << "genus reduction equivalent on the grid up to " << bound << ": "
         << (ok ? "yes" : "NO") << "\n";
      emit(doc, opt, os.str());
      return ok ? kExitOk : kExitVerification;
    }
    if (*build_cmd) {
      if (build_kind == "affine-line") {
        std::array<ProjPoint, 5> seeds = {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0),
                                          ProjPoint(0, 0, 1), ProjPoint(1, 1, 1),
                                          ProjPoint(1, 2, 5)};
        auto result = build_affine_line_config(seeds, scan_range);
        if (std::holds_alternative<std::string>(result)) {
          std::cerr << "construction failed: " << std::get<std::string>(result) << "\n";
          return kExitConstruction;
        }
        const auto& b = std::get<AffineLineBuild>(result);
        Json doc;
        doc["config"] = config_json(b.config);
        doc["witness_chord"] = {b.witness.chord_i, b.witness.chord_j};
        doc["witness_point"] = point_json(b.witness.R);
        std::ostringstream os;
        os << "affine-line configuration built; chord L" << b.witness.chord_i
           << b.witness.chord_j << " meets the boundary only over " << b.witness.R.str() << "\n";
        emit(doc, opt, os.str());
        return kExitOk;
      }
      if (build_kind == "triple-point") {
        auto b = build_triple_point_config();
        Json doc;
        doc["config"] = config_json(b.config);
        doc["R1"] = point_json(b.R1);
        doc["R2"] = point_json(b.R2);
        std::ostringstream os;
        os << "triple-point configuration built; triangles concur at " << b.R1.str() << " and "
           << b.R2.str() << "\n";
        emit(doc, opt, os.str());
        return kExitOk;
      }
      if (build_kind == "nodal-cubic") {
        auto [p1, rest] = standard_nodal_cubic_seeds();
        auto result = build_nodal_cubic_config(p1, rest);
        if (std::holds_alternative<WitnessPolynomial>(result)) {
          const auto& w = std::get<WitnessPolynomial>(result);
          Json doc = witness_polynomial_json(w);
          emit(doc, opt, "no rational witness; condition polynomial attached\n");
          return kExitConstruction;
        }
        const auto& b = std::get<NodalCubicBuild>(result);
        Json doc = certificate_document_json(b.config, b.certificate);
        doc["condition"] = witness_polynomial_json(b.condition);
        std::ostringstream os;
        os << "nodal-cubic witness built; node at " << b.certificate.claims[0].point.str()
           << ", boundary crossings " << b.R1.str() << " and " << b.R2.str() << "\n";
        emit(doc, opt, os.str());
        return kExitOk;
      }
      // quartic
      auto w = standard_quartic_certificate();
      if (!w) {
        std::cerr << "construction failed: no quartic witness on the symmetric frame\n";
        return kExitConstruction;
      }
      Json doc = certificate_document_json(w->config, w->certificate);
      std::ostringstream os;
      os << "trinodal quartic witness built; boundary points " << w->Q1.str() << " and "
         << w->Q2.str() << "\n";
      emit(doc, opt, os.str());
      return kExitOk;
    }
    if (*detect_cmd) {
      auto config = load_config_file(config_path);
      auto witnesses = detect_affine_line_witnesses(config);
      DivisorD D = divisor_D(config);
      Json doc;
      Json ws = Json::array();
      for (const auto& w : witnesses) {
        Json e;
        e["chord"] = {w.chord_i, w.chord_j};
        e["lines"] = {w.hex_line_1 + 1, w.hex_line_2 + 1};
        e["point"] = point_json(w.R);
        ws.push_back(std::move(e));
      }
      doc["affine_line_witnesses"] = std::move(ws);
      doc["triangle1_concurrent"] = D.h1_concurrent;
      doc["triangle2_concurrent"] = D.h2_concurrent;
      std::ostringstream os;
      os << witnesses.size() << " affine-line witnesses; triangles concurrent: "
         << (D.h1_concurrent ? "yes" : "no") << "/" << (D.h2_concurrent ? "yes" : "no") << "\n";
      emit(doc, opt, os.str());
      return kExitOk;
    }
    if (*verify_cmd) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + config_path + "'");
      Json doc = Json::parse(in);
      auto parsed = parse_certificate_document(doc);
      auto rep = verify_extra_curve_certificate(parsed.config, parsed.certificate);
      emit(verification_json(rep), opt,
           std::string("certificate ") + (rep.pass ? "verified\n" : "REJECTED\n"));
      return rep.pass ? kExitOk : kExitVerification;
    }
    if (*emit_cmd) {
      SixPointConfig config = emit_kind == "standard"
                                  ? standard_config()
                                  : SixPointConfig::create(example_points());
      emit(config_json(config), opt, "six points emitted (use --format json)\n");
      return kExitOk;
    }
    if (*selftest_cmd) return run_selftest(seed, trials);
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidInput:
      case ErrorCode::InvalidHomogeneousCoordinates:
        return kExitInvalidInput;
      case ErrorCode::ConstructionFailed:
        return kExitConstruction;
      default:
        return kExitVerification;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitOk;
}
