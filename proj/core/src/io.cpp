#include "su2ca/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

namespace su2ca {

namespace {

using json = nlohmann::json;

std::string fmt_g17(double v) {
  if (v == 0.0) v = 0.0;  // normalize the sign of zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_g(double v, int prec = 6) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

// Parse with duplicate-key detection; nlohmann would silently keep the last
// duplicate otherwise.
json parse_checked(const std::string& text) {
  std::vector<std::set<std::string>> object_keys;
  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) {
      object_keys.emplace_back();
    } else if (ev == json::parse_event_t::object_end) {
      object_keys.pop_back();
    } else if (ev == json::parse_event_t::key) {
      const auto k = parsed.get<std::string>();
      if (!object_keys.back().insert(k).second)
        throw ParseError("duplicate key '" + k + "'");
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

void require_keys(const json& obj, const char* what, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object");
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      throw ParseError(std::string("unknown key '") + item.key() + "' in " + what);
}

long long get_int(const json& obj, const char* what, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string(what) + " is missing '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string(what) + ": '" + key + "' must be an integer");
  return v.get<long long>();
}

double get_num(const json& obj, const char* what, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string(what) + " is missing '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number()) throw ParseError(std::string(what) + ": '" + key + "' must be a number");
  return v.get<double>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Scalar display: real as %g, pure imaginary as %gi, mixed as (a+bi).
std::string fmt_scalar(Complex c) {
  const double re = c.real(), im = c.imag();
  if (im == 0.0) return fmt_g(re);
  std::string imag = fmt_g(std::abs(im)) + "i";
  if (imag == "1i") imag = "i";
  if (re == 0.0) return (im < 0 ? "-" : "") + imag;
  return "(" + fmt_g(re) + (im < 0 ? " - " : " + ") + imag + ")";
}

struct DisplayTerm {
  Complex coeff;
  std::string name;
};

std::string join_terms(const std::vector<DisplayTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    Complex c = t.coeff;
    std::string sep;
    if (!first) {
      if (c.imag() == 0.0 && c.real() < 0) {
        sep = " - ";
        c = -c;
      } else {
        sep = " + ";
      }
    }
    std::string mag;
    if (c == Complex{1.0, 0.0})
      mag = "";
    else if (c == Complex{-1.0, 0.0})
      mag = "-";
    else
      mag = fmt_scalar(c);
    out += sep + mag + t.name;
    first = false;
  }
  return out;
}

constexpr const char* kRaise = "\xE2\x88\x82+";    // the raising field
constexpr const char* kLower = "\xE2\x88\x82-";    // the lowering field
constexpr const char* kNeutral = "\xE2\x88\x82""0";  // the neutral field

bool nonzero(Complex c) { return std::abs(c) > 1e-12; }

}  // namespace

FourierSeries parse_series(const std::string& json_text) {
  const json root = parse_checked(json_text);
  require_keys(root, "series file", {"terms"});
  if (!root.contains("terms") || !root.at("terms").is_array())
    throw ParseError("series file needs a 'terms' array");
  FourierSeries out;
  std::set<long long> seen_levels;
  for (const json& term : root.at("terms")) {
    require_keys(term, "term", {"two_l", "entries"});
    const long long two_l = get_int(term, "term", "two_l");
    if (two_l < 0) throw ParseError("two_l must be >= 0");
    if (!seen_levels.insert(two_l).second)
      throw ParseError("duplicate term for two_l = " + std::to_string(two_l));
    if (!term.contains("entries") || !term.at("entries").is_array())
      throw ParseError("term needs an 'entries' array");
    const RepLevel level = RepLevel::from_doubled(static_cast<int>(two_l));
    std::set<std::pair<long long, long long>> seen_entries;
    for (const json& e : term.at("entries")) {
      require_keys(e, "entry", {"two_m", "two_n", "re", "im"});
      const long long two_m = get_int(e, "entry", "two_m");
      const long long two_n = get_int(e, "entry", "two_n");
      for (long long w : {two_m, two_n}) {
        if (std::llabs(w) > two_l)
          throw ParseError("weight " + std::to_string(w) + " exceeds level " + std::to_string(two_l));
        if ((w - two_l) % 2 != 0)
          throw ParseError("weight " + std::to_string(w) + " has wrong parity for level " +
                           std::to_string(two_l));
      }
      if (!seen_entries.insert({two_m, two_n}).second)
        throw ParseError("duplicate entry (" + std::to_string(two_m) + ", " +
                         std::to_string(two_n) + ") at two_l = " + std::to_string(two_l));
      out.set_coeff(level, HalfInt::from_doubled(static_cast<int>(two_m)),
                    HalfInt::from_doubled(static_cast<int>(two_n)),
                    {get_num(e, "entry", "re"), get_num(e, "entry", "im")});
    }
  }
  return out;
}

FourierSeries load_series(const std::string& path) { return parse_series(read_file(path)); }

std::string format_series(const FourierSeries& f) {
  std::string out = "{\n  \"terms\": [";
  bool first_term = true;
  for (const auto& [two_l, block] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    std::string entries;
    bool first_entry = true;
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni) {
        const Complex c = block(mi, ni);
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        entries += first_entry ? "\n" : ",\n";
        entries += "        { \"two_m\": " + std::to_string(level.weight_at(mi).doubled()) +
                   ", \"two_n\": " + std::to_string(level.weight_at(ni).doubled()) +
                   ", \"re\": " + fmt_g17(c.real()) + ", \"im\": " + fmt_g17(c.imag()) + " }";
        first_entry = false;
      }
    if (first_entry) continue;  // block held only zeros
    out += first_term ? "\n" : ",\n";
    out += "    {\n      \"two_l\": " + std::to_string(two_l) + ",\n      \"entries\": [" +
           entries + "\n      ]\n    }";
    first_term = false;
  }
  out += first_term ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

void save_series(const FourierSeries& f, const std::string& path) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) throw ParseError("cannot write '" + path + "'");
  outf << format_series(f);
  if (!outf) throw ParseError("write to '" + path + "' failed");
}

LoadedFrame parse_frame(const std::string& json_text) {
  const json root = parse_checked(json_text);
  require_keys(root, "frame file", {"corank", "vectors"});
  const long long corank = get_int(root, "frame file", "corank");
  if (corank != 1 && corank != 2) throw ParseError("corank must be 1 or 2");
  if (!root.contains("vectors") || !root.at("vectors").is_array() ||
      root.at("vectors").size() != 3)
    throw ParseError("frame file needs a 'vectors' array of three vectors");
  AlgebraElement v[3];
  for (int i = 0; i < 3; ++i) {
    const json& vec = root.at("vectors")[i];
    if (!vec.is_array() || vec.size() != 3)
      throw ParseError("each frame vector needs three coefficient objects");
    Complex c[3];
    for (int k = 0; k < 3; ++k) {
      require_keys(vec[k], "coefficient", {"re", "im"});
      c[k] = {get_num(vec[k], "coefficient", "re"), get_num(vec[k], "coefficient", "im")};
    }
    v[i] = {c[0], c[1], c[2]};
  }
  if (corank == 1) return Corank1Frame{v[0], v[1], v[2]};
  return Corank2Frame{v[0], v[1], v[2]};
}

LoadedFrame load_frame(const std::string& path) { return parse_frame(read_file(path)); }

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format '" + name + "'; expected table, csv or json");
}

std::string field_display(const AlgebraElement& x) {
  const Complex i{0.0, 1.0};
  // Coordinates over the ladder basis (raise, lower, neutral).
  const Complex alpha = 0.5 * (-i * x.c1 - x.c2);
  const Complex beta = 0.5 * (-i * x.c1 + x.c2);
  const Complex gamma = -i * x.c3;

  std::vector<DisplayTerm> ladder, frame;
  if (nonzero(alpha)) ladder.push_back({alpha, kRaise});
  if (nonzero(beta)) ladder.push_back({beta, kLower});
  if (nonzero(gamma)) ladder.push_back({gamma, kNeutral});
  if (nonzero(x.c1)) frame.push_back({x.c1, "Y1"});
  if (nonzero(x.c2)) frame.push_back({x.c2, "Y2"});
  if (nonzero(x.c3)) frame.push_back({x.c3, "Y3"});

  if (frame.empty()) return "0";
  if (frame.size() < ladder.size()) return join_terms(frame);
  if (ladder.size() < frame.size()) return join_terms(ladder);
  return x.is_real() ? join_terms(frame) : join_terms(ladder);
}

std::string render_dprime(const DPrimeOperator& op) {
  std::vector<std::string> vars;
  if (op.cols == 1)
    vars = {"u"};
  else
    for (int c = 0; c < op.cols; ++c) vars.push_back("u" + std::to_string(c + 1));

  std::string head = "d'(" + std::to_string(op.p) + "," + std::to_string(op.q) + ")(";
  for (int c = 0; c < op.cols; ++c) head += (c ? ", " : "") + vars[c];
  head += ") = ";

  std::vector<std::string> rows;
  for (int r = 0; r < op.rows; ++r) {
    std::string row;
    bool first = true;
    for (int c = 0; c < op.cols; ++c) {
      const ScalarOperator& e = op.entry(r, c);
      if (nonzero(e.field.c1) || nonzero(e.field.c2) || nonzero(e.field.c3)) {
        std::string disp = field_display(e.field);
        const bool compound = disp.find(" + ") != std::string::npos ||
                              disp.find(" - ") != std::string::npos;
        if (compound) disp = "(" + disp + ")";
        std::string term = disp + vars[c];
        if (!first && term[0] != '-') row += " + ";
        else if (!first) { row += " - "; term = term.substr(1); }
        row += term;
        first = false;
      }
      if (nonzero(e.order_zero)) {
        Complex z = e.order_zero;
        std::string sep;
        if (!first) {
          if (z.imag() == 0.0 && z.real() < 0) { sep = " - "; z = -z; }
          else sep = " + ";
        }
        std::string mag = (z == Complex{1.0, 0.0}) ? "" :
                          (z == Complex{-1.0, 0.0}) ? "-" : fmt_scalar(z);
        row += sep + mag + vars[c];
        first = false;
      }
    }
    if (first) row = "0";
    rows.push_back(row);
  }

  if (rows.size() == 1) return head + rows[0];
  std::string out = head + "(";
  for (size_t r = 0; r < rows.size(); ++r) out += (r ? ", " : "") + rows[r];
  return out + ")";
}

std::string render_constants(const Corank2Constants& c) {
  std::string out = "a = (" + fmt_scalar(c.a1) + ", " + fmt_scalar(c.a2) + ", " +
                    fmt_scalar(c.a3) + ")";
  for (int j = 0; j < 2; ++j)
    out += "; b" + std::to_string(j + 1) + " = (" + fmt_scalar(c.b[j][0]) + ", " +
           fmt_scalar(c.b[j][1]) + ", " + fmt_scalar(c.b[j][2]) + ")";
  return out;
}

std::string render_constants(const Corank1Constants& c) {
  std::string out = "a = (" + fmt_scalar(c.a1) + ", " + fmt_scalar(c.a2) + ")";
  for (int j = 0; j < 2; ++j)
    out += "; b" + std::to_string(j + 1) + " = (" + fmt_scalar(c.b[j][0]) + ", " +
           fmt_scalar(c.b[j][1]) + ", " + fmt_scalar(c.b[j][2]) + ")";
  return out;
}

namespace {

std::string bidegree_label(const StageDims& s) {
  return std::to_string(s.p) + "," + std::to_string(s.q);
}

std::string render_report_table(const CohomologyReport& rep,
                                const std::vector<std::string>& banner,
                                const std::string& constants_label) {
  std::ostringstream os;
  os << "corank " << rep.corank << " report, constants " << constants_label
     << ", levels two_l = 0.." << rep.two_l_max << "\n";
  for (const auto& line : banner) os << line << "\n";
  os << "\n";
  os << std::setw(6) << "two_l" << std::setw(10) << "bidegree" << std::setw(8) << "ker"
     << std::setw(8) << "ran" << std::setw(10) << "quotient" << "  gap\n";
  for (const auto& lr : rep.levels)
    for (const auto& s : lr.stages) {
      os << std::setw(6) << lr.two_l << std::setw(10) << ("(" + bidegree_label(s) + ")")
         << std::setw(8) << s.ker << std::setw(8) << s.ran << std::setw(10) << s.quotient
         << "  " << (s.gap ? fmt_g(*s.gap) : "-") << "\n";
    }
  os << "\ntotals over tested levels:";
  for (const auto& [key, total] : rep.totals) os << "  (" << key << ") " << total;
  os << "\n";
  for (const auto& note : rep.notes) os << note << "\n";
  return os.str();
}

std::string render_report_csv(const CohomologyReport& rep) {
  std::string out = "two_l,bidegree,ker,ran,quotient,gap\r\n";
  for (const auto& lr : rep.levels)
    for (const auto& s : lr.stages) {
      out += std::to_string(lr.two_l) + ",\"" + bidegree_label(s) + "\"," +
             std::to_string(s.ker) + "," + std::to_string(s.ran) + "," +
             std::to_string(s.quotient) + "," + (s.gap ? fmt_g17(*s.gap) : "") + "\r\n";
    }
  return out;
}

std::string render_report_json(const CohomologyReport& rep,
                               const std::vector<std::string>& banner,
                               const std::string& constants_label) {
  std::string out = "{\n";
  out += "  \"corank\": " + std::to_string(rep.corank) + ",\n";
  out += "  \"constants\": \"" + json_escape(constants_label) + "\",\n";
  out += "  \"two_l_max\": " + std::to_string(rep.two_l_max) + ",\n";
  out += "  \"banner\": [";
  for (size_t i = 0; i < banner.size(); ++i)
    out += (i ? ", " : "") + ("\"" + json_escape(banner[i]) + "\"");
  out += "],\n  \"levels\": [";
  bool first_level = true;
  for (const auto& lr : rep.levels) {
    out += first_level ? "\n" : ",\n";
    out += "    { \"two_l\": " + std::to_string(lr.two_l) + ", \"stages\": [";
    bool first_stage = true;
    for (const auto& s : lr.stages) {
      out += first_stage ? "\n" : ",\n";
      out += "      { \"bidegree\": \"" + bidegree_label(s) + "\", \"domain\": " +
             std::to_string(s.domain_dim) + ", \"ker\": " + std::to_string(s.ker) +
             ", \"ran\": " + std::to_string(s.ran) + ", \"quotient\": " +
             std::to_string(s.quotient) + ", \"gap\": " + (s.gap ? fmt_g17(*s.gap) : "null") +
             " }";
      first_stage = false;
    }
    out += "\n    ] }";
    first_level = false;
  }
  out += "\n  ],\n  \"totals\": {";
  bool first_total = true;
  for (const auto& [key, total] : rep.totals) {
    out += first_total ? " " : ", ";
    out += "\"" + key + "\": " + std::to_string(total);
    first_total = false;
  }
  out += " },\n  \"notes\": [";
  for (size_t i = 0; i < rep.notes.size(); ++i)
    out += (i ? ", " : "") + ("\"" + json_escape(rep.notes[i]) + "\"");
  out += "]\n}\n";
  return out;
}

}  // namespace

std::string render_report(const CohomologyReport& rep, OutputFormat fmt,
                          const std::vector<std::string>& banner,
                          const std::string& constants_label) {
  switch (fmt) {
    case OutputFormat::Table: return render_report_table(rep, banner, constants_label);
    case OutputFormat::Csv: return render_report_csv(rep);
    case OutputFormat::Json: return render_report_json(rep, banner, constants_label);
  }
  throw std::invalid_argument("render_report: unknown format");
}

std::string render_certificate(const ClosedRangeCertificate& cert,
                               const std::string& field_label) {
  std::ostringstream os;
  os << "closed-range certificate: field " << field_label << ", s = " << cert.s.str()
     << ", levels two_l = " << cert.two_l_min << ".." << cert.two_l_max << "\n";
  os << std::setw(6) << "two_l" << std::setw(16) << "gap" << std::setw(16) << "ratio" << "\n";
  for (const auto& row : cert.rows)
    os << std::setw(6) << row.two_l << std::setw(16) << fmt_g(row.gap, 9) << std::setw(16)
       << fmt_g(row.ratio, 9) << "\n";
  if (cert.rows.empty()) {
    os << "no level in range carries a nonzero symbol\nFAIL\n";
    return os.str();
  }
  os << "c_star = " << fmt_g(cert.c_star, 12) << " at two_l = " << cert.argmin_two_l << "\n";
  os << (cert.passed ? "PASS: c_star > 0 over the tested range\n" : "FAIL\n");
  if (cert.min_at_range_end)
    os << "warning: the ratio minimum sits at the end of the tested range; "
          "the finite-range bound does not extrapolate\n";
  return os.str();
}

}  // namespace su2ca
