#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gboson/normal_form.hpp"
#include "gboson/params.hpp"

namespace gboson {

struct UTag {};
/// sum a^dagger^k f(Ntilde) a^m
using UElement = NormalForm<UTag>;
using UTensor = Tensor<UTag>;

/// PBW index (k, l, m) of a^dagger^k Ntilde^l a^m, or of the dual e^{klm}.
struct BasisIndex {
  int k = 0;
  int l = 0;
  int m = 0;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

/// Coefficient tables f (product) and g (coproduct) over PBW indices.
struct StructureTable {
  enum class Kind { Product, Coproduct };

  Kind kind = Kind::Product;
  /// Product: keyed by (p, q, r). Coproduct: keyed by (p, q, r, p', q', r').
  std::map<std::vector<int>, Complex> entries;

  Complex at(const std::vector<int>& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? Complex(0.0) : it->second;
  }
};

/// One named residual of an identity check.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string note;
  bool passed() const { return residual <= tolerance; }
};

/// Normal-ordering engine for the generalized boson algebra
///   a a^dagger + a^dagger a = [alpha N + beta]_q, [N, a] = -a, [N, a^dagger] = a^dagger.
class BosonAlgebra {
 public:
  explicit BosonAlgebra(DeformationParams params);

  const DeformationParams& params() const { return params_; }

  UElement one() const { return UElement::identity(); }
  UElement a() const;
  UElement adag() const;
  /// Ntilde = N + beta/alpha
  UElement ntilde() const;
  UElement number() const;
  /// (-1)^{Ntilde} = e^{i pi Ntilde}
  UElement grading() const;
  UElement function(const ExpPoly& f) const { return UElement::term(0, 0, f); }

  /// [alpha Ntilde]_q as a function of Ntilde.
  ExpPoly alpha_bracket() const;
  /// [alpha (Ntilde + s)]_q
  ExpPoly alpha_bracket(double s) const;

  UElement multiply(const UElement& u, const UElement& v) const;
  UElement power(const UElement& u, int n) const;
  UElement commutator(const UElement& u, const UElement& v) const;

  /// a^dagger^k Ntilde^l a^m
  UElement basis_E(int k, int l, int m) const;
  UElement basis_E(BasisIndex i) const { return basis_E(i.k, i.l, i.m); }

  /// E-basis coefficients of u with Ntilde powers up to `max_l`.
  std::map<BasisIndex, Complex> e_coefficients(const UElement& u, int max_l) const;

  /// Coefficients f^{pqr} of E_i E_j, Taylor window `max_l`.
  StructureTable extract_f(BasisIndex i, BasisIndex j, int max_l) const;
  /// Coefficients g^{pqr p'q'r'} of Delta(E_i), Taylor window `max_l` per leg.
  StructureTable extract_g(BasisIndex i, int max_l) const;
  StructureTable tensor_coefficients(const UTensor& t, int max_l) const;

  UTensor coproduct(const UElement& u) const;
  /// Applies Delta to leg `leg`, producing one more leg.
  UTensor coproduct_on_leg(const UTensor& t, int leg) const;
  UTensor multiply(const UTensor& s, const UTensor& t) const;
  /// m(t) for a two-leg tensor.
  UElement contract(const UTensor& t) const;

  Complex counit(const UElement& u) const;
  UElement antipode(const UElement& u) const;

  /// m(S (x) id)Delta(u) - eps(u) 1 and m(id (x) S)Delta(u) - eps(u) 1 for
  /// each named element, plus coassociativity.
  std::vector<CheckResult> hopf_axioms(
      const std::vector<std::pair<std::string, UElement>>& elements) const;

 private:
  UElement lmul_a(const UElement& v) const;
  UTensor coproduct_monomial(const LegMonomial& leg) const;
  UElement antipode_monomial(const LegMonomial& leg) const;

  DeformationParams params_;
  double half_log_;  // alpha ln q / 2
};

}  // namespace gboson
