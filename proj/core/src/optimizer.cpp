#include "hetcorr/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "hetcorr/analytic.hpp"

namespace hetcorr {

double NoiseBudget::n_cl_at(double freq) const {
  if (n_cl_table.empty()) return n_cl;
  if (freq <= n_cl_table.front().first) return n_cl_table.front().second;
  if (freq >= n_cl_table.back().first) return n_cl_table.back().second;
  for (std::size_t i = 1; i < n_cl_table.size(); ++i) {
    if (freq <= n_cl_table[i].first) {
      const auto& [f0, v0] = n_cl_table[i - 1];
      const auto& [f1, v1] = n_cl_table[i];
      const double w = (freq - f0) / (f1 - f0);
      return v0 + w * (v1 - v0);
    }
  }
  return n_cl_table.back().second;
}

void NoiseBudget::validate() const {
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("bandwidth B must be > 0");
  }
  if (n_cl_table.empty()) {
    if (n_cl < 0.0) throw std::invalid_argument("N_cl must be >= 0");
    return;
  }
  double prev = -1.0;
  for (const auto& [f, v] : n_cl_table) {
    if (f <= prev) {
      throw std::invalid_argument("N_cl table frequencies must be ascending");
    }
    if (v < 0.0) throw std::invalid_argument("N_cl must be >= 0 everywhere");
    prev = f;
  }
}

bool feasible_value(double n_cl, double bandwidth) {
  return n_cl < 0.25 * bandwidth;  // SNU = 1
}

bool feasible(const NoiseBudget& budget) {
  budget.validate();
  if (!budget.frequency_dependent()) {
    return feasible_value(budget.n_cl, budget.bandwidth);
  }
  return std::all_of(budget.n_cl_table.begin(), budget.n_cl_table.end(),
                     [&](const auto& row) {
                       return feasible_value(row.second, budget.bandwidth);
                     });
}

double optimal_r_value(double n_cl, double bandwidth) {
  if (!feasible_value(n_cl, bandwidth)) {
    throw InfeasibleBudget("noise nulling requires N_cl < SNU*B/4");
  }
  return -0.5 * std::log(1.0 - 4.0 * n_cl / bandwidth);
}

double optimal_r(const NoiseBudget& budget) {
  budget.validate();
  if (budget.frequency_dependent()) {
    throw std::invalid_argument(
        "optimal_r needs a flat budget; use optimal_r_profile");
  }
  return optimal_r_value(budget.n_cl, budget.bandwidth);
}

double total_noise(const NoiseBudget& budget, double r, double theta_l) {
  budget.validate();
  if (r < 0.0) throw std::invalid_argument("squeeze parameter r must be >= 0");
  return csd_narrowband(r, theta_l) * budget.bandwidth + budget.n_cl;
}

SweepResult sweep_r(const NoiseBudget& budget, const std::vector<double>& grid,
                    double theta_l) {
  budget.validate();
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  SweepResult out;
  out.rows.reserve(grid.size());
  double prev = -1.0;
  for (double r : grid) {
    if (r <= prev && !out.rows.empty()) {
      throw std::invalid_argument("sweep grid must be ascending");
    }
    prev = r;
    const double tn = total_noise(budget, r, theta_l);
    out.rows.push_back({r, tn, std::abs(tn)});
  }
  out.argmin = 0;
  for (std::size_t i = 1; i < out.rows.size(); ++i) {
    if (out.rows[i].abs_total < out.rows[out.argmin].abs_total) out.argmin = i;
  }
  return out;
}

std::vector<ProfileRow> optimal_r_profile(const NoiseBudget& budget,
                                          const std::vector<double>& freqs) {
  budget.validate();
  std::vector<ProfileRow> rows;
  rows.reserve(freqs.size());
  for (double f : freqs) {
    ProfileRow row;
    row.freq = f;
    row.n_cl = budget.n_cl_at(f);
    row.is_feasible = feasible_value(row.n_cl, budget.bandwidth);
    row.r_star =
        row.is_feasible ? optimal_r_value(row.n_cl, budget.bandwidth) : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hetcorr
