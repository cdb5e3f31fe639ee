#include "su2ca/structures.hpp"

#include <Eigen/Dense>

namespace su2ca {

namespace {

Eigen::Vector3cd as_vector(const AlgebraElement& x) { return {x.c1, x.c2, x.c3}; }

int span_rank(const std::vector<AlgebraElement>& v) {
  Eigen::MatrixXcd m(3, v.size());
  for (size_t i = 0; i < v.size(); ++i) m.col(i) = as_vector(v[i]);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  const double thresh = 1e-10 * std::max(1.0, sv(0));
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

// Coordinates of x over the ordered basis (e0, e1, e2); DegenerateFrame when
// the basis does not span.
Eigen::Vector3cd solve_in_basis(const AlgebraElement& e0, const AlgebraElement& e1,
                                const AlgebraElement& e2, const AlgebraElement& x) {
  Eigen::Matrix3cd basis;
  basis.col(0) = as_vector(e0);
  basis.col(1) = as_vector(e1);
  basis.col(2) = as_vector(e2);
  Eigen::FullPivLU<Eigen::Matrix3cd> lu(basis);
  lu.setThreshold(1e-10);
  if (lu.rank() < 3)
    throw DegenerateFrameError("frame vectors do not span the complexified algebra");
  return lu.solve(as_vector(x));
}

}  // namespace

std::string to_string(StructureClass c) {
  switch (c) {
    case StructureClass::EssentiallyReal: return "essentially real";
    case StructureClass::Elliptic: return "elliptic";
    case StructureClass::CR: return "CR";
    case StructureClass::Generic: return "generic";
  }
  return "?";
}

Corank2Constants corank2_constants(const Corank2Frame& f) {
  Corank2Constants out;
  const Eigen::Vector3cd a = solve_in_basis(f.m1, f.m2, f.l, bracket(f.m1, f.m2));
  out.a1 = a(0);
  out.a2 = a(1);
  out.a3 = a(2);
  const AlgebraElement mj[2] = {f.m1, f.m2};
  for (int j = 0; j < 2; ++j) {
    const Eigen::Vector3cd b = solve_in_basis(f.m1, f.m2, f.l, bracket(f.l, mj[j]));
    for (int k = 0; k < 3; ++k) out.b[j][k] = b(k);
  }
  return out;
}

Corank1Constants corank1_constants(const Corank1Frame& f) {
  Corank1Constants out;
  const AlgebraElement br = bracket(f.l1, f.l2);
  const Eigen::Vector3cd a = solve_in_basis(f.l1, f.l2, f.m, br);
  const double scale = std::max(1.0, br.norm());
  if (std::abs(a(2)) > 1e-10 * scale)
    throw NotSubalgebraError("[L1, L2] leaves span{L1, L2}; component along M is " +
                             std::to_string(std::abs(a(2))));
  out.a1 = a(0);
  out.a2 = a(1);
  const AlgebraElement lj[2] = {f.l1, f.l2};
  for (int j = 0; j < 2; ++j) {
    const Eigen::Vector3cd b = solve_in_basis(f.l1, f.l2, f.m, bracket(lj[j], f.m));
    for (int k = 0; k < 3; ++k) out.b[j][k] = b(k);
  }
  return out;
}

StructureClass classify_span(const std::vector<AlgebraElement>& v) {
  std::vector<AlgebraElement> both = v;
  for (const auto& x : v) both.push_back(x.conjugate());
  const int rank_v = span_rank(v);
  const int rank_sum = span_rank(both);
  if (rank_v == 0 || rank_v != static_cast<int>(v.size()))
    throw DegenerateFrameError("classify: spanning set is degenerate");
  if (rank_sum == rank_v) return StructureClass::EssentiallyReal;
  if (rank_sum == 3) return StructureClass::Elliptic;
  if (rank_sum == 2 * rank_v) return StructureClass::CR;
  return StructureClass::Generic;
}

StructureClass classify(const Corank2Frame& f) {
  solve_in_basis(f.m1, f.m2, f.l, frame_y1());  // spanning check
  return classify_span({f.l});
}

StructureClass classify(const Corank1Frame& f) {
  solve_in_basis(f.l1, f.l2, f.m, frame_y1());
  return classify_span({f.l1, f.l2});
}

DPrimeOperator dprime_expression(const Corank2Frame& f, const Corank2Constants& c, int p, int q) {
  if (q != 0 || p < 0 || p > 2)
    throw std::invalid_argument("dprime_expression: corank-2 source bidegree must be (0,0), (1,0) or (2,0)");
  const Complex one{1.0, 0.0};
  if (p == 0) return {2, 0, 0, 1, 1, {{f.l, 0.0}}};
  if (p == 1) {
    DPrimeOperator op{2, 1, 0, 2, 2, {}};
    op.entries = {{-one * f.l, c.b[0][0]}, {AlgebraElement{}, c.b[0][1]},
                  {AlgebraElement{}, c.b[1][0]}, {-one * f.l, c.b[1][1]}};
    return op;
  }
  return {2, 2, 0, 1, 1, {{f.l, -(c.b[0][0] + c.b[1][1])}}};
}

DPrimeOperator dprime_expression(const Corank1Frame& f, const Corank1Constants& c, int p, int q) {
  const Complex one{1.0, 0.0};
  if (p == 0 && q == 0) return {1, 0, 0, 2, 1, {{f.l1, 0.0}, {f.l2, 0.0}}};
  if (p == 0 && q == 1)
    return {1, 0, 1, 1, 2, {{-one * f.l2, -c.a1}, {f.l1, -c.a2}}};
  if (p == 1 && q == 0)
    return {1, 1, 0, 2, 1, {{-one * f.l1, c.b[0][2]}, {-one * f.l2, c.b[1][2]}}};
  if (p == 1 && q == 1)
    return {1, 1, 1, 1, 2, {{f.l2, c.a1 - c.b[1][2]}, {-one * f.l1, c.a2 + c.b[0][2]}}};
  throw std::invalid_argument("dprime_expression: corank-1 source bidegree must be (0,0), (0,1), (1,0) or (1,1)");
}

DPrimeOperator corank2_wedge_step(const Corank2Frame& f, const Corank2Constants& c) {
  const Complex one{1.0, 0.0};
  return {2, 1, 0, 1, 2, {{-one * f.m2, -c.a1}, {f.m1, -c.a2}}};
}

DPrimeOperator corank2_top_step(const Corank2Frame& f, const Corank2Constants& c) {
  const Complex one{1.0, 0.0};
  return {2, 1, 1, 1, 2,
          {{-one * f.m2, -(c.a1 + c.b[1][2])}, {f.m1, c.b[0][2] - c.a2}}};
}

Preset preset(const std::string& name) {
  if (name == "corank2-paper") {
    Corank2Preset p;
    p.name = name;
    p.frame = {field_lower(), field_raise(), field_neutral()};
    p.printed = {};
    p.printed.a1 = -1.0;
    p.printed.a2 = 0.0;
    p.printed.a3 = 0.0;
    const Complex b0[3] = {0.0, -2.0, 0.0}, b1[3] = {0.0, 0.0, 1.0};
    for (int k = 0; k < 3; ++k) {
      p.printed.b[0][k] = b0[k];
      p.printed.b[1][k] = b1[k];
    }
    p.recomputed = corank2_constants(p.frame);
    return p;
  }
  if (name == "corank1-paper") {
    Corank1Preset p;
    p.name = name;
    p.frame = {field_lower(), field_neutral(), field_raise()};
    p.printed = {};
    p.printed.a1 = 1.0;
    p.printed.a2 = 0.0;
    const Complex b0[3] = {0.0, -2.0, 0.0}, b1[3] = {0.0, 0.0, -1.0};
    for (int k = 0; k < 3; ++k) {
      p.printed.b[0][k] = b0[k];
      p.printed.b[1][k] = b1[k];
    }
    p.recomputed = corank1_constants(p.frame);
    return p;
  }
  throw std::invalid_argument("unknown preset '" + name + "'; available: corank2-paper, corank1-paper");
}

std::vector<std::string> preset_names() { return {"corank2-paper", "corank1-paper"}; }

const Corank2Constants& pick(const Corank2Preset& p, ConstantsVariant v) {
  return v == ConstantsVariant::Printed ? p.printed : p.recomputed;
}
const Corank1Constants& pick(const Corank1Preset& p, ConstantsVariant v) {
  return v == ConstantsVariant::Printed ? p.printed : p.recomputed;
}

}  // namespace su2ca
