#include "conebvp/nonlinearity.hpp"

#include <cmath>

namespace conebvp {

Nonlinearity::Nonlinearity(std::vector<NonlinearityBranch> branches,
                           Interval t_domain)
    : branches_(std::move(branches)), t_domain_(t_domain) {
  if (branches_.empty())
    throw ConfigError("nonlinearity: needs at least one branch");
  for (size_t i = 0; i + 1 < branches_.size(); ++i) {
    double ub = branches_[i].u_upper;
    if (!std::isfinite(ub) || ub <= 0.0)
      throw ConfigError("nonlinearity: interior branch bounds must be finite and positive");
    if (i > 0 && ub <= branches_[i - 1].u_upper)
      throw ConfigError("nonlinearity: branch bounds must increase");
    boundaries_.push_back(ub);
  }
  if (std::isfinite(branches_.back().u_upper))
    throw ConfigError("nonlinearity: last branch must be unbounded");

  // continuity audit at every boundary, 50 t samples, 1e-9 relative
  for (size_t i = 0; i + 1 < branches_.size(); ++i) {
    double ub = branches_[i].u_upper;
    for (int j = 0; j < 50; ++j) {
      double t = t_domain_.lo + t_domain_.width() * j / 49.0;
      double lo = branches_[i].expr.eval(t, ub);
      double hi = branches_[i + 1].expr.eval(t, ub);
      double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
      if (std::abs(lo - hi) > 1e-9 * scale)
        throw ConfigError(
            "nonlinearity: branches " + std::to_string(i) + " and " +
            std::to_string(i + 1) + " disagree at u=" + std::to_string(ub) +
            " (t=" + std::to_string(t) + ": " + std::to_string(lo) + " vs " +
            std::to_string(hi) + ")");
    }
  }
}

int Nonlinearity::branch_index(double u) const {
  for (size_t i = 0; i + 1 < branches_.size(); ++i)
    if (u <= branches_[i].u_upper) return static_cast<int>(i);
  return static_cast<int>(branches_.size()) - 1;
}

double Nonlinearity::operator()(double t, double u) const {
  return branches_[static_cast<size_t>(branch_index(u))].expr.eval(t, u);
}

Interval Nonlinearity::branch_range(int i, double ulo, double uhi) const {
  double lo = i == 0 ? 0.0 : branches_[static_cast<size_t>(i) - 1].u_upper;
  double hi = branches_[static_cast<size_t>(i)].u_upper;
  lo = std::max(lo, ulo);
  hi = std::min(hi, uhi);
  return {lo, hi};
}

}  // namespace conebvp
