#include "gabor/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "gabor/error.hpp"

namespace gabor::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, sep)) parts.push_back(field);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double parse_double(const std::string& text, std::size_t line_no) {
  const std::string t = trim(text);
  if (t == "nan") return std::nan("");
  if (t == "inf") return std::numeric_limits<double>::infinity();
  if (t == "-inf") return -std::numeric_limits<double>::infinity();
  double value = 0.0;
  const auto* first = t.data();
  const auto* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorKind::Precondition,
                fmt::format("line {}: '{}' is not a number", line_no, t));
  }
  return value;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  return fmt::format("{}", x);
}

SampledFunction read_sampled_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "t,re,im") {
    throw Error(ErrorKind::Precondition, "sampled window CSV must start with header 't,re,im'");
  }
  std::vector<double> ts;
  std::vector<Complex> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      throw Error(ErrorKind::Precondition, fmt::format("line {}: expected 3 fields", line_no));
    }
    ts.push_back(parse_double(fields[0], line_no));
    values.emplace_back(parse_double(fields[1], line_no), parse_double(fields[2], line_no));
  }
  if (ts.size() < 3) throw Error(ErrorKind::Precondition, "sampled window needs >= 3 rows");
  const double step = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double d = ts[i] - ts[i - 1];
    if (!(d > 0.0)) throw Error(ErrorKind::Precondition, "t must be strictly increasing");
    if (std::abs(d - step) > 1e-6 * step) {
      throw Error(ErrorKind::Precondition, "t must be uniformly spaced");
    }
  }
  SampledFunction f;
  f.grid = UniformGrid{ts.front(), step, ts.size()};
  f.values = std::move(values);
  return f;
}

SampledFunction read_sampled_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_sampled_csv(in);
}

void write_sampled_csv(std::ostream& out, const SampledFunction& f) {
  out << "t,re,im\n";
  for (std::size_t i = 0; i < f.grid.size; ++i) {
    out << format_double(f.grid.at(i)) << ',' << format_double(f.values[i].real()) << ','
        << format_double(f.values[i].imag()) << '\n';
  }
}

void write_profile_csv(std::ostream& out, const DensityProfile& profile) {
  std::vector<const DeltaEstimate*> rows;
  for (const auto& d : profile.deltas) rows.push_back(&d);
  for (const auto& d : profile.refinements) rows.push_back(&d);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto* x, const auto* y) { return x->omega < y->omega; });
  out << "omega,delta_g_low,delta_g,delta_g_high,tail_bound_num,tail_bound_den\n";
  for (const auto* d : rows) {
    out << format_double(d->omega) << ',' << format_double(d->low) << ','
        << format_double(d->value) << ',' << format_double(d->high) << ','
        << format_double(d->numerator.tail_bound) << ','
        << format_double(d->denominator.tail_bound) << '\n';
  }
}

std::vector<ProfileRow> read_profile_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) ||
      trim(line) != "omega,delta_g_low,delta_g,delta_g_high,tail_bound_num,tail_bound_den") {
    throw Error(ErrorKind::Precondition, "unexpected profile header");
  }
  std::vector<ProfileRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 6) {
      throw Error(ErrorKind::Precondition, fmt::format("line {}: expected 6 fields", line_no));
    }
    rows.push_back({parse_double(f[0], line_no), parse_double(f[1], line_no),
                    parse_double(f[2], line_no), parse_double(f[3], line_no),
                    parse_double(f[4], line_no), parse_double(f[5], line_no)});
  }
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<BarrierScanRow>& rows) {
  out << "b,delta0_low,delta0,delta0_high,log_gap_to_half\n";
  for (const auto& r : rows) {
    out << format_double(r.b) << ',' << format_double(r.delta0_low) << ','
        << format_double(r.delta0) << ',' << format_double(r.delta0_high) << ','
        << format_double(r.log_gap_to_half) << '\n';
  }
}

Lattice2D read_lattice_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    const auto& b = j.at("basis");
    if (!b.is_array() || b.size() != 2 || b[0].size() != 2 || b[1].size() != 2) {
      throw Error(ErrorKind::Precondition, "basis must be a 2x2 array");
    }
    return Lattice2D::from_row_major({b[0][0].get<double>(), b[0][1].get<double>(),
                                      b[1][0].get<double>(), b[1][1].get<double>()});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Precondition, std::string("bad lattice JSON: ") + e.what());
  }
}

}  // namespace gabor::io
