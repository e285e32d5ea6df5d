// cli.hpp: command-line front end of the simulator.
//
// Settings are resolved as built-in defaults, then the --config file, then
// flags given on the command line. Every setting has a dotted key (used in
// the config file) and a flag:
//
//   model               --model           single | 11 | 12 | 21 | 22
//   bath.T_h            --th              hot-bath temperature
//   bath.T_c            --tc              cold-bath temperature
//   bath.kappa          --kappa           coupling rate kappa
//   bath.cutoff         --cutoff          spectral cutoff omega_ct
//   levels.omega_h      --wh              single-qubit hot gap
//   levels.omega_c      --wc              energy unit: single cold gap, gap of Q2
//   levels.omega1_c     --w1c             cold gap of Q1 (coupled)
//   coupling.g          --g               XX coupling (coupled)
//   stroke.t_h          --t-h             hot stroke duration
//   stroke.t_c          --t-c             cold stroke duration
//   cycle.max_iterations --max-iterations
//   sweep.axis1         --axis1           name:start:stop:step
//   sweep.axis2         --axis2           name:start:stop:step
//   sweep.budget        --budget          largest allowed grid
//   search.temp_ratios  --temp-ratios     start:stop:step or comma list
//   search.scan         --scan            level scan start:stop:step
//   search.scan_g       --scan-g          coupling scan (replaces --scan)
//   verify.draws        --draws           measurement draws
//   verify.states       --states          states per generator
//   run.output          --output, -o      output file (stdout when empty)
//   run.workers         --workers         threads; env OTTO_WORKERS
//
// Exit status: 0 success, 1 invalid input or failed verification, 2 every
// evaluated point failed to converge.

#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "otto/sweep.hpp"

namespace otto::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNoConvergence = 2;

using Settings = std::map<std::string, std::string>;

/// Parses "key = value" lines; '#' starts a comment, blank lines are
/// skipped. Throws std::invalid_argument with the line number on malformed
/// input or unknown keys.
Settings parse_config_text(std::string_view text);

/// Every recognised key with its default value.
const Settings& default_settings();

/// "%.17g".
std::string format_number(double v);

/// "start:stop:step".
ScanRange parse_range(std::string_view text);

/// Range syntax or comma-separated values.
std::vector<double> parse_value_list(std::string_view text);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otto::cli
