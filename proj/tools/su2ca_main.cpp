#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "su2ca/errors.hpp"
#include "su2ca/io.hpp"
#include "su2ca/verification.hpp"

namespace {

using namespace su2ca;

std::string fmt_complex(Complex c) {
  char buf[80];
  if (c.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%g", c.real());
  } else if (c.real() == 0.0) {
    std::snprintf(buf, sizeof buf, "%gi", c.imag());
  } else {
    std::snprintf(buf, sizeof buf, "%g%+gi", c.real(), c.imag());
  }
  return buf;
}

// Lines noting where a preset's two constant tables disagree.
template <typename Constants>
std::vector<std::string> constants_banner(const Constants& printed, const Constants& recomputed,
                                          const std::string& chosen) {
  std::vector<std::pair<std::string, std::pair<Complex, Complex>>> diffs;
  auto note = [&](const std::string& label, Complex a, Complex b) {
    if (std::abs(a - b) > 1e-12) diffs.push_back({label, {a, b}});
  };
  note("a1", printed.a1, recomputed.a1);
  note("a2", printed.a2, recomputed.a2);
  if constexpr (requires { printed.a3; }) note("a3", printed.a3, recomputed.a3);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 3; ++k)
      note("b[" + std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]", printed.b[j][k],
           recomputed.b[j][k]);
  if (diffs.empty()) return {};
  std::string line = "note: the preset's printed constants disagree with its brackets at ";
  for (size_t i = 0; i < diffs.size(); ++i) {
    if (i) line += ", ";
    line += diffs[i].first + " (printed " + fmt_complex(diffs[i].second.first) + ", recomputed " +
            fmt_complex(diffs[i].second.second) + ")";
  }
  return {line, "note: showing the " + chosen + " variant; rerun with --constants to compare"};
}

struct StructureArgs {
  std::string preset_name;
  std::string frame_path;
  std::string constants = "recomputed";
};

void add_structure_options(CLI::App* cmd, StructureArgs& args) {
  auto* p = cmd->add_option("--preset", args.preset_name,
                            "named example structure (corank2-paper, corank1-paper)");
  auto* f = cmd->add_option("--frame", args.frame_path, "frame file (JSON)");
  p->excludes(f);
  cmd->add_option("--constants", args.constants,
                  "which constant table a preset uses: printed or recomputed")
      ->check(CLI::IsMember({"printed", "recomputed"}));
}

// Resolved structure: frame + constants + banner + classification.
struct ResolvedStructure {
  std::variant<Corank1Frame, Corank2Frame> frame;
  std::variant<Corank1Constants, Corank2Constants> constants;
  std::vector<std::string> banner;
  std::string constants_label;
};

ResolvedStructure resolve_structure(const StructureArgs& args) {
  if (args.preset_name.empty() == args.frame_path.empty())
    throw CLI::ValidationError("exactly one of --preset and --frame is required");
  ResolvedStructure out;
  out.constants_label = args.constants;
  const ConstantsVariant variant =
      args.constants == "printed" ? ConstantsVariant::Printed : ConstantsVariant::Recomputed;
  if (!args.preset_name.empty()) {
    const Preset ps = preset(args.preset_name);
    if (const auto* p1 = std::get_if<Corank1Preset>(&ps)) {
      out.frame = p1->frame;
      out.constants = pick(*p1, variant);
      out.banner = constants_banner(p1->printed, p1->recomputed, args.constants);
    } else {
      const auto& p2 = std::get<Corank2Preset>(ps);
      out.frame = p2.frame;
      out.constants = pick(p2, variant);
      out.banner = constants_banner(p2.printed, p2.recomputed, args.constants);
    }
    return out;
  }
  if (variant == ConstantsVariant::Printed)
    throw CLI::ValidationError("--constants printed applies only to presets");
  const LoadedFrame lf = load_frame(args.frame_path);
  if (const auto* f1 = std::get_if<Corank1Frame>(&lf)) {
    out.frame = *f1;
    out.constants = corank1_constants(*f1);
  } else {
    const auto& f2 = std::get<Corank2Frame>(lf);
    out.frame = f2;
    out.constants = corank2_constants(f2);
  }
  return out;
}

int run_verify(int two_l_max, double tol, unsigned mc_samples) {
  const auto results = run_verification({two_l_max, tol, mc_samples});
  int failed = 0;
  for (const auto& r : results) {
    char detail[128];
    if (r.threshold == 0.0) {
      std::snprintf(detail, sizeof detail, "(mismatches %.0f)", r.residual);
    } else {
      std::snprintf(detail, sizeof detail, "(residual %.3g, allowed %.3g)", r.residual,
                    r.threshold);
    }
    std::printf("%s  %-55s %s\n", r.passed ? "ok  " : "FAIL", r.name.c_str(), detail);
    if (!r.passed) ++failed;
  }
  std::printf("%zu checks, %zu passed, %d failed\n", results.size(), results.size() - failed,
              failed);
  return failed == 0 ? 0 : 1;
}

int run_dims(const StructureArgs& args, int two_l_max, const std::string& format) {
  const ResolvedStructure rs = resolve_structure(args);
  const OutputFormat fmt = parse_format(format);
  CohomologyReport rep;
  if (const auto* f1 = std::get_if<Corank1Frame>(&rs.frame)) {
    rep = cohomology_report(*f1, std::get<Corank1Constants>(rs.constants), two_l_max);
  } else {
    rep = cohomology_report(std::get<Corank2Frame>(rs.frame),
                            std::get<Corank2Constants>(rs.constants), two_l_max);
  }
  if (fmt == OutputFormat::Csv) {
    for (const auto& line : rs.banner) std::cerr << line << "\n";
  }
  std::cout << render_report(rep, fmt, rs.banner, rs.constants_label);
  return 0;
}

int run_gap(const std::string& field, const std::string& s_text, int two_l_max) {
  AlgebraElement x;
  if (field == "dminus") x = field_lower();
  else if (field == "dplus") x = field_raise();
  else if (field == "dzero") x = field_neutral();
  else if (field == "y1") x = frame_y1();
  else if (field == "y2") x = frame_y2();
  else x = frame_y3();
  const ClosedRangeCertificate cert = closed_range_certificate(x, parse_rational(s_text),
                                                               two_l_max);
  std::cout << render_certificate(cert, field_display(x));
  return cert.passed ? 0 : 1;
}

int run_dprime(const StructureArgs& args) {
  const ResolvedStructure rs = resolve_structure(args);
  for (const auto& line : rs.banner) std::cout << line << "\n";
  if (!rs.banner.empty()) std::cout << "\n";
  if (const auto* f1 = std::get_if<Corank1Frame>(&rs.frame)) {
    const auto& c = std::get<Corank1Constants>(rs.constants);
    std::cout << "corank 1 structure, class " << to_string(classify(*f1)) << "\n";
    std::cout << "span: L1 = " << field_display(f1->l1) << ", L2 = " << field_display(f1->l2)
              << "; complement M = " << field_display(f1->m) << "\n\n";
    std::cout << render_constants(c) << "\n";
    for (const auto [p, q] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}})
      std::cout << render_dprime(dprime_expression(*f1, c, p, q)) << "\n";
  } else {
    const auto& f2 = std::get<Corank2Frame>(rs.frame);
    const auto& c = std::get<Corank2Constants>(rs.constants);
    std::cout << "corank 2 structure, class " << to_string(classify(f2)) << "\n";
    std::cout << "span: L = " << field_display(f2.l) << "; complement M1 = "
              << field_display(f2.m1) << ", M2 = " << field_display(f2.m2) << "\n\n";
    std::cout << render_constants(c) << "\n";
    for (const auto [p, q] : {std::pair{0, 0}, {1, 0}, {2, 0}})
      std::cout << render_dprime(dprime_expression(f2, c, p, q)) << "\n";
  }
  return 0;
}

int run_solve(const std::string& input, const std::string& output, double tol) {
  const FourierSeries f = load_series(input);
  const FourierSeries u = solve_lowering(f, tol);
  const FourierSeries back = apply_symbol(field_lower(), u);
  double residual_sq = 0.0;
  for (const auto& [two_l, block] : f.blocks()) {
    const Eigen::MatrixXcd got = back.has_level(two_l)
                                     ? back.block(two_l)
                                     : Eigen::MatrixXcd::Zero(block.rows(), block.cols());
    residual_sq += (got - block).squaredNorm();
  }
  for (const auto& [two_l, block] : back.blocks())
    if (!f.has_level(two_l)) residual_sq += block.squaredNorm();
  std::fprintf(stderr, "solved: |f| = %.6g, |u| = %.6g, residual = %.3g\n", l2_norm(f),
               l2_norm(u), std::sqrt(residual_sq));
  if (output.empty()) {
    std::cout << format_series(u);
  } else {
    save_series(u, output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier analysis of left-invariant operators on the 3-sphere"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
  int v_two_l_max = 8;
  double v_tol = 1e-9;
  unsigned v_mc = 1000000;
  verify->add_option("--two-l-max", v_two_l_max, "largest doubled level to test")
      ->check(CLI::Range(0, 400));
  verify->add_option("--tol", v_tol, "scales every floating check's allowance by tol / 1e-9")
      ->check(CLI::PositiveNumber);
  verify->add_option("--mc-samples", v_mc, "monte carlo sample count for the Plancherel check");

  auto* dims = app.add_subcommand("dims", "per-level kernel, range and cohomology dimensions");
  StructureArgs d_args;
  add_structure_options(dims, d_args);
  int d_two_l_max = 8;
  std::string d_format = "table";
  dims->add_option("--two-l-max", d_two_l_max, "largest doubled level")->check(CLI::Range(0, 400));
  dims->add_option("--format", d_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  auto* gap = app.add_subcommand("gap", "finite-range closed-range certificate for one field");
  std::string g_field = "dminus";
  std::string g_s = "1/3";
  int g_two_l_max = 40;
  gap->add_option("--field", g_field, "dminus, dplus, dzero, y1, y2 or y3")
      ->check(CLI::IsMember({"dminus", "dplus", "dzero", "y1", "y2", "y3"}));
  gap->add_option("--s", g_s, "Sobolev order as a rational p or p/q");
  gap->add_option("--two-l-max", g_two_l_max, "largest doubled level")->check(CLI::Range(1, 4000));

  auto* dprime = app.add_subcommand("dprime", "structure constants and induced complex stages");
  StructureArgs p_args;
  add_structure_options(dprime, p_args);

  auto* solve = app.add_subcommand("solve", "minimal-norm solution of (lowering field) u = f");
  std::string s_input, s_output;
  double s_tol = 1e-9;
  solve->add_option("--input", s_input, "series file (JSON)")->required();
  solve->add_option("--output", s_output, "write the solution here instead of stdout");
  solve->add_option("--tol", s_tol, "top-weight obstruction threshold")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  try {
    if (*verify) return run_verify(v_two_l_max, v_tol, v_mc);
    if (*dims) return run_dims(d_args, d_two_l_max, d_format);
    if (*gap) return run_gap(g_field, g_s, g_two_l_max);
    if (*dprime) return run_dprime(p_args);
    return run_solve(s_input, s_output, s_tol);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const NotInRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotSubalgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateFrameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
