#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfc::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kConvergence = 3,
  kResolution = 4,
};

/// Uniform grid `min:max:points`, endpoints included.
struct GridSpec {
  double t_min = 0.0;
  double t_max = 1.0;
  int points = 2;

  /// Throws DomainError on malformed text, points < 2 or t_max <= t_min.
  static GridSpec parse(const std::string& text);
  std::vector<double> values() const;
};

/// Real number, with `e` accepted for Euler's number. Throws DomainError.
double parse_real(const std::string& text);

struct PlotSeries {
  std::string label;
  std::vector<double> y;
};

struct PlotSpec {
  int width_px = 800;
  int height_px = 600;
  std::string title;
  std::string x_label = "t";
};

/// Line chart with one polyline per series, 5-tick axes and a legend.
/// Output depends only on the inputs, so identical data gives identical bytes.
std::string render_svg(const PlotSpec& spec, const std::vector<double>& x, const std::vector<PlotSeries>& series);

/// Runs `pfcalc` with the arguments after the program name.
/// Writes results to `out` (or the files named by flags), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfc::cli
