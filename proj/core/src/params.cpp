#include "gboson/params.hpp"

#include <cmath>
#include <sstream>

namespace gboson {

DeformationParams::DeformationParams(double q, double alpha, double beta,
                                     double classical_guard)
    : q_(q), alpha_(alpha), beta_(beta), guard_(classical_guard) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw std::invalid_argument("q must be a positive finite number");
  if (alpha == 0.0 || !std::isfinite(alpha))
    throw std::invalid_argument("alpha must be finite and nonzero");
  if (!std::isfinite(beta)) throw std::invalid_argument("beta must be finite");
  if (!(classical_guard > 0.0 && classical_guard < 1e-4))
    throw std::invalid_argument("classical guard must lie in (0, 1e-4)");

  q_eff_ = q;
  if (std::abs(q - 1.0) < guard_) q_eff_ = q >= 1.0 ? 1.0 + guard_ : 1.0 - guard_;
  log_q_ = std::log(q_eff_);
}

double DeformationParams::half_alpha_sum() const {
  return 2.0 * std::cosh(0.5 * alpha_ * log_q_);
}

double DeformationParams::varpi() const { return kPi / half_alpha_sum(); }

double DeformationParams::double_bracket(double x) const {
  return std::cosh(x * log_q_) / std::cosh(0.5 * alpha_ * log_q_);
}

double DeformationParams::q_minus_inverse() const {
  return 2.0 * std::sinh(log_q_);
}

DeformationParams DeformationParams::reflected() const {
  return DeformationParams(q_, -alpha_, beta_ - alpha_, guard_);
}

std::string DeformationParams::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << "q=" << q_ << " alpha=" << alpha_ << " beta=" << beta_;
  if (guarded()) os << " (evaluated at q=" << q_eff_ << ")";
  return os.str();
}

}  // namespace gboson
