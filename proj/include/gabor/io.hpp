#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gabor/barrier.hpp"
#include "gabor/criterion.hpp"
#include "gabor/lattice.hpp"
#include "gabor/sampled_function.hpp"

namespace gabor::io {

/// CSV with header `t,re,im` and strictly increasing, uniform t.
SampledFunction read_sampled_csv(std::istream& in);
SampledFunction read_sampled_csv_file(const std::string& path);
void write_sampled_csv(std::ostream& out, const SampledFunction& f);

/// `omega,delta_g_low,delta_g,delta_g_high,tail_bound_num,tail_bound_den`,
/// grid and refinement points merged in increasing omega.
void write_profile_csv(std::ostream& out, const DensityProfile& profile);

struct ProfileRow {
  double omega, delta_g_low, delta_g, delta_g_high, tail_bound_num, tail_bound_den;
};
std::vector<ProfileRow> read_profile_csv(std::istream& in);

/// `b,delta0_low,delta0,delta0_high,log_gap_to_half`
void write_scan_csv(std::ostream& out, const std::vector<BarrierScanRow>& rows);

/// `{"basis": [[b11, b12], [b21, b22]]}`
Lattice2D read_lattice_json(std::istream& in);

/// Shortest text that parses back to exactly x (nan/inf spelled out).
std::string format_double(double x);

}  // namespace gabor::io
