#include "su2ca/verification.hpp"

#include <cmath>
#include <random>

#include "su2ca/cohomology.hpp"
#include "su2ca/fourier.hpp"
#include "su2ca/io.hpp"

namespace su2ca {

namespace {

using Rng = std::mt19937_64;

GroupPoint random_point(Rng& rng) {
  std::normal_distribution<double> g;
  const double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
  const double n = std::sqrt(a * a + b * b + c * c + d * d);
  return {{a / n, b / n}, {c / n, d / n}};
}

AlgebraElement random_element(Rng& rng, bool real_only) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto coeff = [&] { return real_only ? Complex{u(rng), 0.0} : Complex{u(rng), u(rng)}; };
  return {coeff(), coeff(), coeff()};
}

Matrix2 brute_expm(const Matrix2& a) {
  Matrix2 sum = Matrix2::Identity(), term = Matrix2::Identity();
  for (int k = 1; k <= 120; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-18) break;
  }
  return sum;
}

// Polynomial form of a series supported on low levels, for pointwise work.
ZPolynomial series_polynomial(const FourierSeries& f) {
  ZPolynomial p;
  for (const auto& [two_l, block] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const double root_dim = std::sqrt(static_cast<double>(level.dim()));
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni) {
        const Complex c = block(mi, ni);
        if (c == Complex{}) continue;
        p = p + (root_dim * c) *
                    matrix_coeff_poly(level, level.weight_at(mi), level.weight_at(ni));
      }
  }
  return p;
}

FourierSeries random_series(Rng& rng, int two_l_max, bool zero_top_column) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries f;
  for (int two_l = 0; two_l <= two_l_max; ++two_l) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    Eigen::MatrixXcd b(level.dim(), level.dim());
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni) b(mi, ni) = Complex{u(rng), u(rng)};
    if (zero_top_column) b.col(level.dim() - 1).setZero();
    f.set_block(level, std::move(b));
  }
  f.prune();
  return f;
}

class Harness {
public:
  explicit Harness(double tol) : scale_(tol / 1e-9) {}

  // Float-residual check: allowance is the documented default scaled by tol.
  void record(std::string name, double residual, double default_threshold) {
    const double threshold = default_threshold * scale_;
    results_.push_back({std::move(name), residual, threshold, residual <= threshold});
  }
  // Exact check: counts mismatches, never rescaled.
  void record_exact(std::string name, int mismatches) {
    results_.push_back({std::move(name), static_cast<double>(mismatches), 0.0, mismatches == 0});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

private:
  double scale_;
  std::vector<CheckResult> results_;
};

double hi(double a, double b) { return std::max(a, b); }

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  if (opt.two_l_max < 0) throw std::invalid_argument("run_verification: two_l_max must be >= 0");
  Harness h(opt.tol);
  const int N = opt.two_l_max;

  {  // bracket vs matrix commutator, and the Jacobi identity
    Rng rng(1001);
    double worst_comm = 0.0, worst_jacobi = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const AlgebraElement x = random_element(rng, false), y = random_element(rng, false),
                           z = random_element(rng, false);
      const Matrix2 lhs = bracket(x, y).matrix();
      const Matrix2 rhs = x.matrix() * y.matrix() - y.matrix() * x.matrix();
      worst_comm = hi(worst_comm, (lhs - rhs).cwiseAbs().maxCoeff());
      const AlgebraElement jac =
          bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
      worst_jacobi = hi(worst_jacobi, jac.norm());
    }
    h.record("bracket agrees with the matrix commutator", worst_comm, 1e-12);
    h.record("bracket satisfies the jacobi identity", worst_jacobi, 1e-12);
  }

  {  // metric: orthonormal frame, ad-invariance
    Rng rng(1002);
    const AlgebraElement ys[3] = {frame_y1(), frame_y2(), frame_y3()};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        worst = hi(worst, std::abs(frame_inner(ys[i], ys[j]) - (i == j ? 1.0 : 0.0)));
    for (int trial = 0; trial < 25; ++trial) {
      const AlgebraElement x = random_element(rng, true), a = random_element(rng, true),
                           b = random_element(rng, true);
      worst = hi(worst, std::abs(frame_inner(bracket(x, a), b) + frame_inner(a, bracket(x, b))));
    }
    h.record("frame is orthonormal and the metric is ad-invariant", worst, 1e-12);
  }

  {  // theta as a homomorphism
    Rng rng(1003);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
      const GroupPoint w = random_point(rng), z = random_point(rng);
      worst = hi(worst, (theta(group_mul(w, z)) - theta(w) * theta(z)).cwiseAbs().maxCoeff());
    }
    h.record("sphere map is a group homomorphism", worst, 1e-12);
  }

  {  // exponential curve: series agreement, sphere membership, one-parameter law
    Rng rng(1004);
    std::uniform_real_distribution<double> ts(-2.0, 2.0);
    double worst_series = 0.0, worst_group = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
      const AlgebraElement x = random_element(rng, true);
      const double t = ts(rng), s = ts(rng);
      const GroupPoint p = exp_curve(x, t);
      worst_series = hi(worst_series, (theta(p) - brute_expm(t * x.matrix())).cwiseAbs().maxCoeff());
      worst_series = hi(worst_series, p.sphere_defect());
      const GroupPoint q = group_mul(exp_curve(x, t), exp_curve(x, s));
      const GroupPoint r = exp_curve(x, t + s);
      worst_group = hi(worst_group, std::abs(q.z1 - r.z1) + std::abs(q.z2 - r.z2));
    }
    h.record("exponential curve matches the power series", worst_series, 1e-10);
    h.record("exponential is a one-parameter group", worst_group, 1e-9);
  }

  {  // representation matrices: unitary, homomorphism
    Rng rng(1005);
    double worst_unitary = 0.0, worst_hom = 0.0;
    for (int two_l = 0; two_l <= std::min(N, 12); ++two_l) {
      const RepLevel level = RepLevel::from_doubled(two_l);
      for (int trial = 0; trial < 8; ++trial) {
        const GroupPoint w = random_point(rng);
        const Eigen::MatrixXcd t = rep_matrix(level, w).entries();
        worst_unitary = hi(worst_unitary,
                           (t.adjoint() * t - Eigen::MatrixXcd::Identity(level.dim(), level.dim()))
                               .cwiseAbs()
                               .maxCoeff());
        if (two_l <= 8) {
          const GroupPoint z = random_point(rng);
          const Eigen::MatrixXcd lhs = rep_matrix(level, group_mul(w, z)).entries();
          worst_hom = hi(worst_hom,
                         (lhs - t * rep_matrix(level, z).entries()).cwiseAbs().maxCoeff());
        }
      }
    }
    h.record("representation matrices are unitary", worst_unitary, 1e-10);
    h.record("representation is a homomorphism", worst_hom, 1e-10);
  }

  {  // symbol commutation table
    double worst = 0.0;
    for (int two_l = 0; two_l <= N; ++two_l) {
      const RepLevel level = RepLevel::from_doubled(two_l);
      const Symbol y1 = ladder_symbol(FrameField::Y1, level),
                   y2 = ladder_symbol(FrameField::Y2, level),
                   y3 = ladder_symbol(FrameField::Y3, level),
                   sp = ladder_symbol(FrameField::Raise, level),
                   sm = ladder_symbol(FrameField::Lower, level),
                   s0 = ladder_symbol(FrameField::Neutral, level);
      auto comm = [](const Symbol& a, const Symbol& b) {
        return a.entries() * b.entries() - b.entries() * a.entries();
      };
      worst = hi(worst, (comm(y1, y2) - y3.entries()).cwiseAbs().maxCoeff());
      worst = hi(worst, (comm(y2, y3) - y1.entries()).cwiseAbs().maxCoeff());
      worst = hi(worst, (comm(y3, y1) - y2.entries()).cwiseAbs().maxCoeff());
      worst = hi(worst, (comm(sp, sm) - 2.0 * s0.entries()).cwiseAbs().maxCoeff());
      worst = hi(worst, (comm(sp, s0) + sp.entries()).cwiseAbs().maxCoeff());
      worst = hi(worst, (comm(sm, s0) - sm.entries()).cwiseAbs().maxCoeff());
    }
    h.record("symbols satisfy the commutation table", worst, 1e-10);
  }

  {  // finite-difference derivative oracle vs symbols
    Rng rng(1006);
    double worst = 0.0;
    const FrameField fields[6] = {FrameField::Y1, FrameField::Y2, FrameField::Y3,
                                  FrameField::Raise, FrameField::Lower, FrameField::Neutral};
    for (int two_l = 0; two_l <= std::min(N, 4); ++two_l) {
      const RepLevel level = RepLevel::from_doubled(two_l);
      for (int trial = 0; trial < 4; ++trial) {
        const GroupPoint x = random_point(rng);
        const Eigen::MatrixXcd f = rep_matrix(level, x).entries();
        for (const FrameField field : fields) {
          const AlgebraElement elem = field_element(field);
          const Eigen::MatrixXcd symbolic = f * ladder_symbol(field, level).entries();
          for (int mi = 0; mi < level.dim(); ++mi)
            for (int ni = 0; ni < level.dim(); ++ni) {
              const Complex fd = derivative_oracle(elem, level, level.weight_at(mi),
                                                   level.weight_at(ni), x);
              worst = hi(worst, std::abs(fd - symbolic(mi, ni)));
            }
        }
      }
    }
    h.record("symbols differentiate matrix coefficients", worst, 1e-7);
  }

  {  // laplace symbol
    double worst = 0.0;
    for (int two_l = 0; two_l <= std::min(N, 20); ++two_l) {
      const RepLevel level = RepLevel::from_doubled(two_l);
      Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(level.dim(), level.dim());
      for (FrameField f : {FrameField::Y1, FrameField::Y2, FrameField::Y3}) {
        const Eigen::MatrixXcd s = ladder_symbol(f, level).entries();
        sum -= s * s;
      }
      worst = hi(worst, (sum - laplace_symbol(level).entries()).cwiseAbs().maxCoeff());
    }
    h.record("laplace symbol matches the assembled casimir", worst, 1e-10);
  }

  {  // analyze/synthesize round trips
    Rng rng(1007);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> e(0, 2);
    double worst = 0.0;
    ZPolynomial p;
    for (int k = 0; k < 10; ++k) {
      int a1 = e(rng), b1 = e(rng), a2 = e(rng), b2 = e(rng);
      while (a1 + b1 + a2 + b2 > 4) {
        if (a1 > 0) --a1;
        else if (b1 > 0) --b1;
        else if (a2 > 0) --a2;
        else --b2;
      }
      p = p + ZPolynomial::monomial(a1, b1, a2, b2, {u(rng), u(rng)});
    }
    const FourierSeries fs = analyze_poly(p);
    for (int trial = 0; trial < 25; ++trial) {
      const GroupPoint x = random_point(rng);
      worst = hi(worst, std::abs(synthesize(fs, x) - p.evaluate(x.z1, x.z2)));
    }
    const FourierSeries s0 = random_series(rng, 4, false);
    const FourierSeries s1 = analyze_poly(series_polynomial(s0));
    for (const auto& [two_l, block] : s0.blocks()) {
      if (!s1.has_level(two_l)) {
        worst = hi(worst, block.cwiseAbs().maxCoeff());
        continue;
      }
      worst = hi(worst, (block - s1.block(two_l)).cwiseAbs().maxCoeff());
    }
    h.record("analyze and synthesize invert each other", worst, 1e-9);
  }

  {  // plancherel vs monte carlo
    Rng rng(1008);
    FourierSeries f = random_series(rng, 2, false);
    const double norm = l2_norm(f);
    FourierSeries scaled;
    for (const auto& [two_l, block] : f.blocks())
      scaled.set_block(RepLevel::from_doubled(two_l), block / norm);
    const ZPolynomial p = series_polynomial(scaled);
    // Each draw is averaged over four measure-preserving isometries of the
    // sphere (antipode and coordinatewise conjugation), which cancels the
    // odd-degree and mixed holomorphic cross terms of |f|^2.
    double acc = 0.0;
    unsigned long long evals = 0;
    const unsigned draws = std::max(1u, opt.mc_samples / 4);
    for (unsigned i = 0; i < draws; ++i) {
      const GroupPoint x = random_point(rng);
      acc += std::norm(p.evaluate(x.z1, x.z2));
      acc += std::norm(p.evaluate(-x.z1, -x.z2));
      acc += std::norm(p.evaluate(std::conj(x.z1), std::conj(x.z2)));
      acc += std::norm(p.evaluate(-std::conj(x.z1), -std::conj(x.z2)));
      evals += 4;
    }
    const double mc = acc / static_cast<double>(evals);
    h.record("plancherel identity against monte carlo quadrature", std::abs(mc - 1.0), 1e-3);
  }

  {  // orthogonality of matrix coefficients
    double worst = 0.0;
    for (int la = 0; la <= 4; ++la)
      for (int lb = la; lb <= 4; ++lb) {
        const RepLevel a = RepLevel::from_doubled(la), b = RepLevel::from_doubled(lb);
        for (int mi = 0; mi < a.dim(); ++mi)
          for (int ni = 0; ni < a.dim(); ++ni)
            for (int mj = 0; mj < b.dim(); ++mj)
              for (int nj = 0; nj < b.dim(); ++nj) {
                const Complex got =
                    haar_pair(matrix_coeff_poly(a, a.weight_at(mi), a.weight_at(ni)),
                              matrix_coeff_poly(b, b.weight_at(mj), b.weight_at(nj)));
                const bool diag = la == lb && mi == mj && ni == nj;
                const Complex want = diag ? Complex{1.0 / a.dim(), 0.0} : Complex{};
                worst = hi(worst, std::abs(got - want));
              }
      }
    h.record("matrix coefficients are orthogonal with weight 1/(2l+1)", worst, 1e-10);
  }

  {  // spectral gap of the lowering field
    double worst = 0.0;
    for (int two_l = 1; two_l <= std::max(N, 1); ++two_l) {
      const auto gap = spectral_gap(field_lower(), RepLevel::from_doubled(two_l));
      worst = hi(worst, std::abs((gap ? *gap : 0.0) - std::sqrt(static_cast<double>(two_l))));
    }
    h.record("lowering gap equals sqrt(2l)", worst, 1e-9);
  }

  {  // lowering solve: residual, minimal norm, norm bound
    Rng rng(1009);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      FourierSeries f = random_series(rng, std::min(std::max(N, 1), 20), true);
      const FourierSeries u = solve_lowering(f);
      const FourierSeries back = apply_symbol(field_lower(), u);
      for (const auto& [two_l, block] : f.blocks()) {
        if (two_l == 0) continue;
        const Eigen::MatrixXcd got = back.has_level(two_l)
                                         ? back.block(two_l)
                                         : Eigen::MatrixXcd::Zero(block.rows(), block.cols());
        worst = hi(worst, (got - block).cwiseAbs().maxCoeff());
        if (u.has_level(two_l)) {
          worst = hi(worst, u.block(two_l).col(0).cwiseAbs().maxCoeff());  // kernel part absent
          const double bound = block.norm() / std::sqrt(static_cast<double>(two_l));
          worst = hi(worst, std::max(0.0, u.block(two_l).norm() - bound));
        }
      }
    }
    h.record("lowering solve inverts with minimal norm", worst, 1e-9);
  }

  {  // closed-form kernels
    int mismatches = 0;
    for (int two_l = 0; two_l <= std::min(std::max(N, 1), 10); ++two_l) {
      const RepLevel level = RepLevel::from_doubled(two_l);
      if (kernel_dim(algebra_symbol(field_lower(), level).entries()) != 1) ++mismatches;
      if (!kernel_basis_check(level)) ++mismatches;
    }
    h.record_exact("kernel dimensions match the closed forms", mismatches);
  }

  {  // structure constants reproduce brackets
    Rng rng(1010);
    double worst = 0.0;
    auto check2 = [&](const Corank2Frame& fr) {
      const Corank2Constants c = corank2_constants(fr);
      const AlgebraElement r1 =
          bracket(fr.m1, fr.m2) - (c.a1 * fr.m1 + c.a2 * fr.m2 + c.a3 * fr.l);
      worst = hi(worst, r1.norm());
      const AlgebraElement ms[2] = {fr.m1, fr.m2};
      for (int j = 0; j < 2; ++j) {
        const AlgebraElement rj = bracket(fr.l, ms[j]) -
                                  (c.b[j][0] * fr.m1 + c.b[j][1] * fr.m2 + c.b[j][2] * fr.l);
        worst = hi(worst, rj.norm());
      }
    };
    auto check1 = [&](const Corank1Frame& fr) {
      const Corank1Constants c = corank1_constants(fr);
      worst = hi(worst, (bracket(fr.l1, fr.l2) - (c.a1 * fr.l1 + c.a2 * fr.l2)).norm());
      const AlgebraElement ls[2] = {fr.l1, fr.l2};
      for (int j = 0; j < 2; ++j) {
        const AlgebraElement rj = bracket(ls[j], fr.m) -
                                  (c.b[j][0] * fr.l1 + c.b[j][1] * fr.l2 + c.b[j][2] * fr.m);
        worst = hi(worst, rj.norm());
      }
    };
    check2(std::get<Corank2Preset>(preset("corank2-paper")).frame);
    check1(std::get<Corank1Preset>(preset("corank1-paper")).frame);
    for (int trial = 0; trial < 10; ++trial) {
      const GroupPoint g = random_point(rng);
      check2({adjoint(g, field_lower()), adjoint(g, field_raise()), adjoint(g, field_neutral())});
      check1({adjoint(g, field_lower()), adjoint(g, field_neutral()), adjoint(g, field_raise())});
    }
    h.record("structure constants reproduce the brackets", worst, 1e-10);
  }

  {  // the induced complexes compose to zero
    double worst = 0.0;
    const auto p1 = std::get<Corank1Preset>(preset("corank1-paper"));
    const auto p2 = std::get<Corank2Preset>(preset("corank2-paper"));
    for (int two_l = 0; two_l <= std::min(std::max(N, 1), 20); ++two_l) {
      const RepLevel level = RepLevel::from_doubled(two_l);
      for (const auto variant : {ConstantsVariant::Printed, ConstantsVariant::Recomputed}) {
        const Corank1Constants& c1 = pick(p1, variant);
        const Eigen::MatrixXcd b00 = block_matrix(dprime_expression(p1.frame, c1, 0, 0), level);
        const Eigen::MatrixXcd b01 = block_matrix(dprime_expression(p1.frame, c1, 0, 1), level);
        const Eigen::MatrixXcd b10 = block_matrix(dprime_expression(p1.frame, c1, 1, 0), level);
        const Eigen::MatrixXcd b11 = block_matrix(dprime_expression(p1.frame, c1, 1, 1), level);
        worst = hi(worst, (b01 * b00).cwiseAbs().maxCoeff());
        worst = hi(worst, (b11 * b10).cwiseAbs().maxCoeff());
        const Corank2Constants& c2 = pick(p2, variant);
        const Eigen::MatrixXcd a10 = block_matrix(dprime_expression(p2.frame, c2, 1, 0), level);
        const Eigen::MatrixXcd a20 = block_matrix(dprime_expression(p2.frame, c2, 2, 0), level);
        const Eigen::MatrixXcd wedge = block_matrix(corank2_wedge_step(p2.frame, c2), level);
        const Eigen::MatrixXcd top = block_matrix(corank2_top_step(p2.frame, c2), level);
        worst = hi(worst, (top * a10 + a20 * wedge).cwiseAbs().maxCoeff());
      }
    }
    h.record("induced complexes compose to zero", worst, 1e-9);
  }

  {  // classification
    Rng rng(1011);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int mismatches = 0;
    const Corank1Frame elliptic{field_lower(), field_neutral(), field_raise()};
    const Corank2Frame cr{field_lower(), field_raise(), field_neutral()};
    const Corank2Frame ess_real{field_neutral(), field_raise(), field_lower()};
    if (classify(elliptic) != StructureClass::Elliptic) ++mismatches;
    if (classify(cr) != StructureClass::CR) ++mismatches;
    if (classify(ess_real) != StructureClass::EssentiallyReal) ++mismatches;
    for (int trial = 0; trial < 10; ++trial) {
      // Reframe the elliptic example by an invertible combination.
      const Complex a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)}, d{u(rng), u(rng)};
      if (std::abs(a * d - b * c) < 0.1) continue;
      const Corank1Frame re{a * elliptic.l1 + b * elliptic.l2,
                            c * elliptic.l1 + d * elliptic.l2,
                            elliptic.m + Complex{u(rng), u(rng)} * elliptic.l1};
      if (classify(re) != StructureClass::Elliptic) ++mismatches;
      const Complex s{u(rng), u(rng)};
      if (std::abs(s) > 0.1 && classify(Corank2Frame{s * cr.l, cr.m1, cr.m2}) != StructureClass::CR)
        ++mismatches;
    }
    h.record_exact("classification is stable under reframing", mismatches);
  }

  {  // report totals and rank-nullity bookkeeping
    const auto p1 = std::get<Corank1Preset>(preset("corank1-paper"));
    const int span = std::max(N, 4);
    const CohomologyReport printed = cohomology_report(p1.frame, p1.printed, span);
    const CohomologyReport recomputed = cohomology_report(p1.frame, p1.recomputed, span);
    int mismatches = 0;
    if (printed.totals.at("0,1") != 1) ++mismatches;
    if (recomputed.totals.at("0,1") != 1) ++mismatches;
    if (printed.totals.at("1,1") != 3) ++mismatches;
    if (recomputed.totals.at("1,1") != 1) ++mismatches;
    for (const CohomologyReport* rep : {&printed, &recomputed}) {
      for (const auto& lr : rep->levels) {
        for (const auto& st : lr.stages)
          if (st.ker + st.ran != st.domain_dim) ++mismatches;
        const int h01 = lr.stages[1].quotient;
        if (h01 != (lr.two_l == 0 ? 1 : 0)) ++mismatches;
      }
    }
    h.record_exact("cohomology totals match the frozen audit", mismatches);
  }

  {  // certificate baselines
    const ClosedRangeCertificate cert =
        closed_range_certificate(field_lower(), Rational{1, 3}, 40);
    double worst = std::abs(cert.c_star - std::cbrt(4.0 / 7.0));
    if (!cert.passed || cert.argmin_two_l != 1 || cert.min_at_range_end) worst = hi(worst, 1.0);
    const ClosedRangeCertificate flat =
        closed_range_certificate(field_neutral(), Rational{0, 1}, 8);
    worst = hi(worst, std::abs(flat.c_star - 0.5));
    h.record("certificate baseline for the lowering field", worst, 1e-9);
  }

  return h.take();
}

}  // namespace su2ca
