#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "su2ca/cohomology.hpp"
#include "su2ca/fourier.hpp"
#include "su2ca/structures.hpp"

namespace su2ca {

// Malformed files, unknown or duplicate keys, out-of-range indices.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series files: {"terms": [{"two_l": L, "entries": [{"two_m": M, "two_n": N,
// "re": x, "im": y}, ...]}, ...]}. Saving is canonical: terms sorted by
// level, entries by (two_m, two_n), floats rendered with %.17g, exact zeros
// dropped; a loaded file re-saves byte for byte.
FourierSeries parse_series(const std::string& json_text);
FourierSeries load_series(const std::string& path);
std::string format_series(const FourierSeries& f);
void save_series(const FourierSeries& f, const std::string& path);

// Frame files: {"corank": 1 or 2, "vectors": [[{"re": x, "im": y} x3] x3]}
// with coefficients over (Y1, Y2, Y3); vector order is (L1, L2, M) for
// corank 1 and (L, M1, M2) for corank 2.
using LoadedFrame = std::variant<Corank1Frame, Corank2Frame>;
LoadedFrame parse_frame(const std::string& json_text);
LoadedFrame load_frame(const std::string& path);

enum class OutputFormat { Table, Csv, Json };
OutputFormat parse_format(const std::string& name);

// Human or machine rendering of a level report. The banner lines accompany
// the table and json outputs; csv carries only the data rows (the banner is
// the caller's to print elsewhere).
std::string render_report(const CohomologyReport& rep, OutputFormat fmt,
                          const std::vector<std::string>& banner,
                          const std::string& constants_label);

std::string render_certificate(const ClosedRangeCertificate& cert,
                               const std::string& field_label);

// Display form of an algebra element over whichever of the two standard
// bases needs fewer terms, e.g. the lowering field renders as its own symbol.
std::string field_display(const AlgebraElement& x);

std::string render_dprime(const DPrimeOperator& op);
std::string render_constants(const Corank2Constants& c);
std::string render_constants(const Corank1Constants& c);

}  // namespace su2ca
