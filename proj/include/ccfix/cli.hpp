#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ccfix::cli {

/// Shared command options.  An empty format means the command default
/// (json for solve/enumerate/inverse/survey, csv for psi/fig1/fig2).
struct RunConfig {
  double alpha = 1.0;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::string format;
};

/// Interior floor used when sampling gap points in surveys.
inline constexpr double kSurveyFloor = 1e-4;

int cmd_solve(const std::vector<double>& masses,
              const std::optional<std::vector<int>>& ordering_one_based,
              const RunConfig& rc, std::ostream& os);
int cmd_enumerate(const std::vector<double>& masses, const RunConfig& rc,
                  std::ostream& os);

struct InverseInput {
  std::vector<double> gaps;       // gap coordinates, rescaled to sum 1
  std::vector<double> positions;  // strictly decreasing coordinates
  std::string input_path;         // gap-point JSON file {"x": [...]}
};
int cmd_inverse(const InverseInput& in, const RunConfig& rc, std::ostream& os);

int cmd_psi(const std::vector<double>& gaps, const RunConfig& rc,
            std::ostream& os);

int cmd_fig1(const std::vector<double>& masses, int samples,
             const RunConfig& rc, std::ostream& os);
int cmd_fig2(int samples, const RunConfig& rc, std::ostream& os);

int cmd_survey(int n, const std::vector<double>& alphas, int count,
               const RunConfig& rc, std::ostream& os);

}  // namespace ccfix::cli
