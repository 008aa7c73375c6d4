#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gboson/dualalg.hpp"
#include "gboson/ualg.hpp"

namespace gboson {

/// Index bounds for dual-basis expansions, each in [0, 8].
struct PairingWindow {
  int max_k = 4;
  int max_l = 4;
  int max_m = 4;

  void validate() const;
};

/// Raised when a pairing needs basis elements outside its window.
class WindowInsufficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Truncated universal T matrix as a list of F (x) U pure tensors.
struct TMatrixSeries {
  int degree = 0;
  std::vector<std::pair<FElement, UElement>> terms;
};

/// The dual pair of the function algebra and the generalized boson algebra.
class Duality {
 public:
  explicit Duality(DeformationParams params);

  const BosonAlgebra& boson() const { return boson_; }
  const DualAlgebra& dual() const { return dual_; }

  /// <f, u> = sum of matched e- and E-basis coefficients.
  Complex pair(const FElement& f, const UElement& u, const PairingWindow& window) const;
  /// Legwise pairing of two-leg tensors.
  Complex pair(const FTensor& f, const UTensor& u, const PairingWindow& window) const;

  /// max |<e^{klm}, E_{k'l'm'}> - delta| over all indices <= max_index.
  CheckResult pairing_orthonormality(int max_index) const;

  /// Residuals of the five duality conditions over random PBW monomials
  /// with indices <= 2, drawn from a seeded generator.
  std::vector<CheckResult> duality_axiom_check(int samples, std::uint64_t seed,
                                               const PairingWindow& window) const;

  /// sum e^{klm} (x) E_{klm} over k + l + m <= degree.
  TMatrixSeries tmatrix_series(int degree) const;
  /// Ordered closed form, terms x^k z^l y^m / ({k}! l! {m}!) (x)
  /// a^dagger^k Ntilde^l q^{-(k-m) alpha Ntilde/2} e^{-i m pi Ntilde} a^m.
  TMatrixSeries tmatrix_closed(int degree) const;
  /// Largest coefficient discrepancy between the aligned expansions.
  double tmatrix_compare(int degree) const;

  /// Closed-form T with z summed exactly, k + m <= degree, on the
  /// two-mode oscillator space (dimension dosc per mode) tensor the Fock space.
  Eigen::MatrixXcd tmatrix_represented(int dfock, int dosc, int degree) const;
  /// T_{13} T_{23} against T_{Delta(e), E} on two oscillator copies, on the
  /// columns where both sides are free of truncation.
  CheckResult grouplike_check(int dfock, int dosc, int degree) const;

 private:
  BosonAlgebra boson_;
  DualAlgebra dual_;
};

}  // namespace gboson
