#include "gboson/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gboson/qspecial.hpp"

namespace gboson {

namespace {

using HighFloat = boost::multiprecision::cpp_bin_float_100;

// Terms are summed until they fall below this fraction of the largest one,
// which keeps the truncation error under the rounding floor.
const HighFloat kTruncation("1e-98");
// Cancellation beyond this ratio leaves fewer than ~17 valid digits.
const HighFloat kCancellationLimit("1e80");

std::vector<double> box_factorials(int dim, const DeformationParams& params) {
  std::vector<double> out(static_cast<std::size_t>(dim), 1.0);
  double running = 1.0;
  for (int n = 1; n < dim; ++n) {
    const double box = box_number(n, params);
    if (!(box > 0.0)) {
      std::ostringstream os;
      os << "(" << n << ")_{alpha,beta} = " << box << " is not positive for " << params.describe();
      throw std::domain_error(os.str());
    }
    running *= box;
    out[static_cast<std::size_t>(n)] = running;
  }
  return out;
}

}  // namespace

CoherentState build_coherent(Complex zeta, int dim, const DeformationParams& params,
                             const ScalarSeriesBudget& budget) {
  if (dim < 1) throw std::invalid_argument("coherent state dimension must be positive");
  const auto factorials = box_factorials(dim, params);
  const Complex normalizer = deformed_exp(std::norm(zeta), params, budget);
  const double scale = 1.0 / std::sqrt(normalizer.real());

  CoherentState state;
  state.zeta = zeta;
  state.dim = dim;
  state.coefficients.resize(dim);
  Complex power = 1.0;
  double mass = 0.0;
  for (int n = 0; n < dim; ++n) {
    const Complex c = power * scale / std::sqrt(factorials[static_cast<std::size_t>(n)]);
    state.coefficients(n) = c;
    mass += std::norm(c);
    power *= zeta;
  }
  state.tail_mass = std::max(0.0, 1.0 - mass);
  return state;
}

Complex overlap(Complex z1, Complex z2, int dim, const DeformationParams& params) {
  const auto left = build_coherent(z1, dim, params);
  const auto right = build_coherent(z2, dim, params);
  return left.coefficients.dot(right.coefficients);
}

struct RadialMeasure::Impl {
  // 1 / (n)_{-alpha,beta-alpha}! and 1 / (n)_{alpha,beta}!
  std::vector<HighFloat> reflected_inverse;
  std::vector<HighFloat> direct_inverse;
};

RadialMeasure::RadialMeasure(DeformationParams params)
    : params_(params), prefactor_(2.0 * pole_weight(params)), impl_(std::make_unique<Impl>()) {
  const HighFloat alpha = params_.alpha();
  const HighFloat beta = params_.beta();
  const HighFloat log_q = boost::multiprecision::log(HighFloat(params_.effective_q()));
  impl_->reflected_inverse.reserve(kMaxTerms);
  impl_->direct_inverse.reserve(kMaxTerms);
  HighFloat reflected = 1;
  HighFloat direct = 1;
  impl_->reflected_inverse.push_back(reflected);
  impl_->direct_inverse.push_back(direct);
  for (int n = 1; n < kMaxTerms; ++n) {
    const HighFloat down = box_number_generic<HighFloat>(-n, alpha, beta, log_q);
    const HighFloat up = box_number_generic<HighFloat>(n, alpha, beta, log_q);
    if (down == 0 || up == 0) {
      throw std::domain_error("vanishing box number in the measure series at n = " +
                              std::to_string(n));
    }
    reflected /= down;
    direct /= up;
    impl_->reflected_inverse.push_back(reflected);
    impl_->direct_inverse.push_back(direct);
  }
}

RadialMeasure::~RadialMeasure() = default;
RadialMeasure::RadialMeasure(RadialMeasure&&) noexcept = default;
RadialMeasure& RadialMeasure::operator=(RadialMeasure&&) noexcept = default;

namespace {

HighFloat sum_power_series(const std::vector<HighFloat>& inverse, double rho, const char* name) {
  const HighFloat x = HighFloat(rho) * rho;
  HighFloat sum = 0;
  HighFloat power = 1;
  HighFloat largest = 0;
  int small_run = 0;
  for (std::size_t n = 0; n < inverse.size(); ++n) {
    const HighFloat term = power * inverse[n];
    const HighFloat magnitude = boost::multiprecision::abs(term);
    sum += term;
    largest = std::max(largest, magnitude);
    small_run = (magnitude <= kTruncation * largest) ? small_run + 1 : 0;
    if (small_run >= 2) {
      if (largest > kCancellationLimit * boost::multiprecision::abs(sum)) {
        std::ostringstream os;
        os << name << " lost precision at rho = " << rho;
        throw MeasureDivergence(os.str(), rho, sum.convert_to<double>(), true);
      }
      return sum;
    }
    power *= x;
  }
  std::ostringstream os;
  os << name << " did not converge at rho = " << rho << " within " << inverse.size() << " terms";
  throw MeasureDivergence(os.str(), rho, sum.convert_to<double>(), false);
}

}  // namespace

double RadialMeasure::F(double rho) const {
  const HighFloat series = sum_power_series(impl_->reflected_inverse, rho, "exp_{-alpha,beta-alpha}");
  return prefactor_ * series.convert_to<double>();
}

double RadialMeasure::density(double rho) const {
  const HighFloat weight = sum_power_series(impl_->direct_inverse, rho, "exp_{alpha,beta}");
  return F(rho) * weight.convert_to<double>();
}

MomentResult moment_integral(int n, const DeformationParams& params,
                             const QuadratureConfig& config) {
  return moment_integral(n, RadialMeasure(params), config);
}

MomentResult moment_integral(int n, const RadialMeasure& measure,
                             const QuadratureConfig& config) {
  if (n < 0) throw std::invalid_argument("moment index must be nonnegative");
  const auto integrand = [&](double rho) {
    return std::pow(rho, 2 * n + 1) * measure.F(rho);
  };

  double peak = 0.0;
  double upper = -1.0;
  int below = 0;
  double last = 0.0;
  for (double rho = config.scan_step; rho <= config.r_max + 1e-12; rho += config.scan_step) {
    last = integrand(rho);
    peak = std::max(peak, std::abs(last));
    below = (peak > 0.0 && std::abs(last) < config.decay * peak) ? below + 1 : 0;
    if (below >= config.decay_window) {
      upper = rho;
      break;
    }
  }
  if (upper < 0.0) {
    std::ostringstream os;
    os << "moment integrand for n = " << n << " has not decayed by rho = " << config.r_max
       << " (value " << last << ", peak " << peak << ")";
    throw MeasureDivergence(os.str(), config.r_max, last, false);
  }

  using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double rough = std::abs(Rule::integrate(integrand, 0.0, upper, 0));
  const double relative = config.abs_tolerance / std::max(1.0, rough);
  double error = 0.0;
  MomentResult out;
  out.n = n;
  out.value = Rule::integrate(integrand, 0.0, upper, static_cast<unsigned>(config.max_depth),
                              relative, &error);
  out.error_estimate = error;
  out.upper_limit = upper;
  return out;
}

ResolutionResult resolution_check(int dim, const DeformationParams& params,
                                  const QuadratureConfig& config) {
  if (dim < 3) throw std::invalid_argument("resolution check needs dim >= 3");
  ResolutionResult out;
  out.dim = dim;
  const RadialMeasure measure(params);
  double factorial = 1.0;
  for (int n = 0; n < dim; ++n) {
    if (n > 0) factorial *= box_number(n, params);
    const double ratio = moment_integral(n, measure, config).value / factorial;
    out.diagonal.push_back(ratio);
    if (n < dim - 2) out.residual = std::max(out.residual, std::abs(ratio - 1.0));
  }
  return out;
}

}  // namespace gboson
