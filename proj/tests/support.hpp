#pragma once

#include <cmath>
#include <complex>

#include "gboson/dualalg.hpp"
#include "gboson/ualg.hpp"

namespace gboson::testing {

inline double distance(const UElement& a, const UElement& b) { return (a - b).max_abs_coeff(); }
inline double distance(const FElement& a, const FElement& b) { return (a - b).max_abs_coeff(); }
inline double distance(const UTensor& a, const UTensor& b) { return (a - b).max_abs_coeff(); }
inline double distance(const FTensor& a, const FTensor& b) { return (a - b).max_abs_coeff(); }

inline double relative_gap(double got, double expected) {
  return std::abs(got - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace gboson::testing
