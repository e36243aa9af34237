#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace hetcorr {

/// Raised when a budget violates the nulling feasibility bound
/// N_cl < SNU * B / 4.
class InfeasibleBudget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Classical noise budget in SNU-normalized units. Either a flat n_cl or a
/// piecewise-linear table of (frequency Hz, N_cl SNU*Hz) pairs.
struct NoiseBudget {
  double bandwidth = 1.0;  // B, Hz
  double n_cl = 0.0;       // flat value, used when table is empty
  std::vector<std::pair<double, double>> n_cl_table;  // ascending in f

  bool frequency_dependent() const { return !n_cl_table.empty(); }
  double n_cl_at(double freq) const;
  void validate() const;
};

/// True iff total noise can be nulled: N_cl < SNU*B/4 (strict; SNU = 1 here).
bool feasible(const NoiseBudget& budget);
bool feasible_value(double n_cl, double bandwidth);

/// Optimal squeeze parameter r* = -ln(1 - 4 N_cl / (SNU B)) / 2, the root of
/// total_noise(r, pi/2) = 0. Throws InfeasibleBudget when infeasible.
double optimal_r(const NoiseBudget& budget);
double optimal_r_value(double n_cl, double bandwidth);

/// Total noise csd_narrowband(r, theta_l) * B + N_cl, in SNU*Hz.
double total_noise(const NoiseBudget& budget, double r, double theta_l);

struct SweepRow {
  double r = 0.0;
  double total = 0.0;
  double abs_total = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::size_t argmin = 0;  // index of minimum |total|
};

/// Evaluate total_noise over an ascending grid of r values.
SweepResult sweep_r(const NoiseBudget& budget, const std::vector<double>& grid,
                    double theta_l);

/// Per-frequency optimal r for a tabulated budget. Infeasible bins are
/// reported as rows with feasible = false rather than clamped.
struct ProfileRow {
  double freq = 0.0;
  double n_cl = 0.0;
  bool is_feasible = false;
  double r_star = 0.0;  // valid only when is_feasible
};
std::vector<ProfileRow> optimal_r_profile(const NoiseBudget& budget,
                                          const std::vector<double>& freqs);

}  // namespace hetcorr
