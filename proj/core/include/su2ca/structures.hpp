#pragma once

#include <string>
#include <variant>
#include <vector>

#include "su2ca/group.hpp"

namespace su2ca {

// Corank-2 involutive structure: v = span{L}, complement {M1, M2}.
struct Corank2Frame {
  AlgebraElement l, m1, m2;
};

// Corank-1 involutive structure: v = span{L1, L2}, complement {M}.
struct Corank1Frame {
  AlgebraElement l1, l2, m;
};

// [M1, M2] = a1 M1 + a2 M2 + a3 L;  [L, Mj] = b[j][0] M1 + b[j][1] M2 + b[j][2] L.
struct Corank2Constants {
  Complex a1, a2, a3;
  Complex b[2][3];
};

// [L1, L2] = a1 L1 + a2 L2;  [Lj, M] = b[j][0] L1 + b[j][1] L2 + b[j][2] M.
struct Corank1Constants {
  Complex a1, a2;
  Complex b[2][3];
};

enum class StructureClass { EssentiallyReal, Elliptic, CR, Generic };
enum class ConstantsVariant { Printed, Recomputed };

std::string to_string(StructureClass c);

// Structure constants from brackets; DegenerateFrame when the three fields
// do not span, NotSubalgebra when span{L1, L2} is not bracket-closed.
Corank2Constants corank2_constants(const Corank2Frame& f);
Corank1Constants corank1_constants(const Corank1Frame& f);

StructureClass classify(const Corank2Frame& f);
StructureClass classify(const Corank1Frame& f);
StructureClass classify_span(const std::vector<AlgebraElement>& v);

// First-order scalar operator u -> field(u) + order_zero * u.
struct ScalarOperator {
  AlgebraElement field;
  Complex order_zero;
};

// One stage of the induced differential complex, acting on tuples of scalar
// coefficients; entries are row-major rows x cols.
struct DPrimeOperator {
  int corank;
  int p, q;  // source bidegree
  int rows, cols;
  std::vector<ScalarOperator> entries;

  const ScalarOperator& entry(int r, int c) const { return entries[r * cols + c]; }
};

// Corank 2 supports source bidegrees (0,0), (1,0), (2,0); corank 1 supports
// (0,0), (0,1), (1,0), (1,1).
DPrimeOperator dprime_expression(const Corank2Frame& f, const Corank2Constants& c, int p, int q);
DPrimeOperator dprime_expression(const Corank1Frame& f, const Corank1Constants& c, int p, int q);

// Companion maps that close the corank-2 square: the wedge step takes
// (1,0)-data to the top exterior degree, the top step takes (1,1)-data there;
// top_step o dprime(1,0) + dprime(2,0) o wedge_step = 0.
DPrimeOperator corank2_wedge_step(const Corank2Frame& f, const Corank2Constants& c);
DPrimeOperator corank2_top_step(const Corank2Frame& f, const Corank2Constants& c);

// Named example frames with their published constant table (printed) and the
// table recomputed from brackets (recomputed); the two differ exactly where
// the published table disagrees with the brackets.
struct Corank2Preset {
  std::string name;
  Corank2Frame frame;
  Corank2Constants printed, recomputed;
};
struct Corank1Preset {
  std::string name;
  Corank1Frame frame;
  Corank1Constants printed, recomputed;
};
using Preset = std::variant<Corank2Preset, Corank1Preset>;

Preset preset(const std::string& name);  // "corank2-paper" | "corank1-paper"
std::vector<std::string> preset_names();

const Corank2Constants& pick(const Corank2Preset& p, ConstantsVariant v);
const Corank1Constants& pick(const Corank1Preset& p, ConstantsVariant v);

}  // namespace su2ca
