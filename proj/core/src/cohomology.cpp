#include "su2ca/cohomology.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <thread>

namespace su2ca {

namespace {

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues();
}

double rank_threshold(const Eigen::VectorXd& sv) {
  const double smax = sv.size() ? sv(0) : 0.0;
  return 1e-9 * std::max(1.0, smax);
}

unsigned level_thread_cap(int jobs) {
  unsigned cap = std::thread::hardware_concurrency();
  if (cap == 0) cap = 1;
  if (const char* env = std::getenv("SU2CA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) cap = static_cast<unsigned>(v);
  }
  return std::min<unsigned>(cap, static_cast<unsigned>(std::max(jobs, 1)));
}

// Run fn(two_l) for two_l = 0..two_l_max on a small pool; results are written
// into per-level slots by the callee, so scheduling order never shows.
template <typename Fn>
void for_each_level(int two_l_max, Fn&& fn) {
  const unsigned n_threads = level_thread_cap(two_l_max + 1);
  if (n_threads <= 1) {
    for (int t = 0; t <= two_l_max; ++t) fn(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned i = 0; i < n_threads; ++i)
    pool.emplace_back([&] {
      for (int t = next.fetch_add(1); t <= two_l_max; t = next.fetch_add(1)) fn(t);
    });
  for (auto& th : pool) th.join();
}

std::string stage_key(int p, int q) { return std::to_string(p) + "," + std::to_string(q); }

StageDims stage_dims(const DPrimeOperator& op, const Eigen::MatrixXcd& block,
                     const Eigen::MatrixXcd* incoming, RepLevel level) {
  const int d = level.dim();
  StageDims s;
  s.p = op.p;
  s.q = op.q;
  s.domain_dim = op.cols * d * d;
  const int ker_block = kernel_dim(block);
  s.ker = ker_block * d;
  s.ran = range_dim(block) * d;
  const int incoming_rank = incoming ? matrix_rank(*incoming) : 0;
  s.quotient = (ker_block - incoming_rank) * d;
  s.gap = min_nonzero_singular(block);
  return s;
}

template <typename Frame, typename Constants>
CohomologyReport assemble_report(const Frame& f, const Constants& c, int two_l_max, int corank,
                                 const std::vector<std::pair<int, int>>& bidegrees,
                                 const std::vector<int>& incoming_of) {
  if (two_l_max < 0) throw std::invalid_argument("cohomology_report: two_l_max must be >= 0");
  CohomologyReport rep;
  rep.corank = corank;
  rep.two_l_max = two_l_max;
  rep.levels.resize(two_l_max + 1);

  std::vector<DPrimeOperator> ops;
  for (auto [p, q] : bidegrees) ops.push_back(dprime_expression(f, c, p, q));

  for_each_level(two_l_max, [&](int two_l) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    std::vector<Eigen::MatrixXcd> blocks;
    blocks.reserve(ops.size());
    for (const auto& op : ops) blocks.push_back(block_matrix(op, level));
    LevelReport lr;
    lr.two_l = two_l;
    for (size_t i = 0; i < ops.size(); ++i) {
      const Eigen::MatrixXcd* incoming =
          incoming_of[i] >= 0 ? &blocks[incoming_of[i]] : nullptr;
      lr.stages.push_back(stage_dims(ops[i], blocks[i], incoming, level));
    }
    rep.levels[two_l] = std::move(lr);
  });

  for (size_t i = 0; i < bidegrees.size(); ++i) {
    long long total = 0;
    for (const auto& lr : rep.levels) total += lr.stages[i].quotient;
    rep.totals[stage_key(bidegrees[i].first, bidegrees[i].second)] = total;
  }
  return rep;
}

std::string format_gap(double g) {
  std::ostringstream os;
  os.precision(6);
  os << g;
  return os.str();
}

}  // namespace

Eigen::MatrixXcd block_matrix(const DPrimeOperator& op, RepLevel level) {
  const int d = level.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(op.rows * d, op.cols * d);
  for (int r = 0; r < op.rows; ++r)
    for (int c = 0; c < op.cols; ++c) {
      const ScalarOperator& e = op.entry(r, c);
      Eigen::MatrixXcd sub = algebra_symbol(e.field, level).entries();
      if (e.order_zero != Complex{})
        sub += e.order_zero * Eigen::MatrixXcd::Identity(d, d);
      m.block(r * d, c * d, d, d) = sub;
    }
  return m;
}

int matrix_rank(const Eigen::MatrixXcd& m) {
  const Eigen::VectorXd sv = singular_values(m);
  const double thresh = rank_threshold(sv);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

int kernel_dim(const Eigen::MatrixXcd& m) { return static_cast<int>(m.cols()) - matrix_rank(m); }

int range_dim(const Eigen::MatrixXcd& m) { return matrix_rank(m); }

std::optional<double> min_nonzero_singular(const Eigen::MatrixXcd& m) {
  const Eigen::VectorXd sv = singular_values(m);
  const double thresh = rank_threshold(sv);
  std::optional<double> out;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) out = sv(i);  // values are sorted descending
  return out;
}

std::optional<double> spectral_gap(const AlgebraElement& x, RepLevel level) {
  return min_nonzero_singular(algebra_symbol(x, level).entries());
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
  Rational r;
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      r.num = std::stoll(text);
      r.den = 1;
    } else {
      r.num = std::stoll(text.substr(0, slash));
      r.den = std::stoll(text.substr(slash + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: expected p or p/q, got '" + text + "'");
  }
  if (r.den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  if (r.den < 0) {
    r.den = -r.den;
    r.num = -r.num;
  }
  const long long g = std::gcd(std::llabs(r.num), r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

ClosedRangeCertificate closed_range_certificate(const AlgebraElement& x, Rational s,
                                                int two_l_max) {
  if (two_l_max < 1)
    throw std::invalid_argument("closed_range_certificate: two_l_max must be >= 1");
  ClosedRangeCertificate cert;
  cert.s = s;
  cert.two_l_min = 1;
  cert.two_l_max = two_l_max;
  const double sv = s.value();
  for (int two_l = 1; two_l <= two_l_max; ++two_l) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const auto gap = spectral_gap(x, level);
    if (!gap) continue;
    const double ratio = *gap / std::pow(1.0 + level.casimir(), sv);
    cert.rows.push_back({two_l, *gap, ratio});
    if (cert.argmin_two_l < 0 || ratio < cert.c_star) {
      cert.c_star = ratio;
      cert.argmin_two_l = two_l;
    }
  }
  cert.passed = !cert.rows.empty() && cert.c_star > 0.0;
  cert.min_at_range_end = !cert.rows.empty() && cert.argmin_two_l == cert.rows.back().two_l;
  return cert;
}

bool kernel_basis_check(RepLevel level, double tol) {
  const auto p = std::get<Corank2Preset>(preset("corank2-paper"));
  const DPrimeOperator op = dprime_expression(p.frame, p.recomputed, 1, 0);
  const Eigen::MatrixXcd block = block_matrix(op, level);
  const int d = level.dim();
  const int expected_block_kernel = level.two_l() == 0 ? 1 : 2;
  if (kernel_dim(block) != expected_block_kernel) return false;

  Eigen::VectorXcd v1 = Eigen::VectorXcd::Zero(2 * d);
  v1(0) = 1.0;  // u1 = e_{-l}, u2 = 0
  if ((block * v1).cwiseAbs().maxCoeff() > tol) return false;
  if (level.two_l() == 0) return true;

  Eigen::VectorXcd v2 = Eigen::VectorXcd::Zero(2 * d);
  v2(1) = 2.0 / std::sqrt(static_cast<double>(level.two_l()));  // u1 = (2/sqrt(2l)) e_{-l+1}
  v2(d) = 1.0;                                                  // u2 = e_{-l}
  if ((block * v2).cwiseAbs().maxCoeff() > tol) return false;

  Eigen::MatrixXcd pair(2 * d, 2);
  pair.col(0) = v1;
  pair.col(1) = v2;
  return matrix_rank(pair) == 2;
}

CohomologyReport cohomology_report(const Corank1Frame& f, const Corank1Constants& c,
                                   int two_l_max) {
  CohomologyReport rep = assemble_report(f, c, two_l_max, 1,
                                         {{0, 0}, {0, 1}, {1, 0}, {1, 1}}, {-1, 0, -1, 2});
  // Closed-range notes for the two stages with no incoming differential.
  for (size_t idx : {size_t{0}, size_t{2}}) {
    double least = 0.0;
    bool seen = false;
    for (const auto& lr : rep.levels) {
      const auto& g = lr.stages[idx].gap;
      if (g && (!seen || *g < least)) {
        least = *g;
        seen = true;
      }
    }
    const std::string label = idx == 0 ? "(0,0)" : "(1,0)";
    if (seen)
      rep.notes.push_back("closed range: stage " + label +
                          " has least nonzero block singular value " + format_gap(least) +
                          " over the tested levels");
  }
  return rep;
}

CohomologyReport cohomology_report(const Corank2Frame& f, const Corank2Constants& c,
                                   int two_l_max) {
  return assemble_report(f, c, two_l_max, 2, {{0, 0}, {1, 0}, {2, 0}}, {-1, -1, -1});
}

}  // namespace su2ca
