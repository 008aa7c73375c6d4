#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gboson/exppoly.hpp"

namespace gboson {

/// Normal-ordered element sum_{k,m} L^k f_{k,m}(t) R^m over one algebra,
/// where L is the raising (or left) generator, R the lowering (or right)
/// generator and t the commuting Cartan-like generator.
template <class Tag>
class NormalForm {
 public:
  using Key = std::pair<int, int>;

  NormalForm() = default;

  static NormalForm identity() { return term(0, 0, ExpPoly::constant(1.0)); }
  static NormalForm term(int k, int m, ExpPoly f) {
    NormalForm out;
    out.add_term(k, m, f);
    return out;
  }

  const std::map<Key, ExpPoly>& terms() const { return terms_; }

  void add_term(int k, int m, const ExpPoly& f) {
    if (k < 0 || m < 0) throw std::invalid_argument("negative generator power");
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{k, m}, f);
    if (!inserted) {
      it->second += f;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NormalForm& operator+=(const NormalForm& o) {
    for (const auto& [key, f] : o.terms_) add_term(key.first, key.second, f);
    return *this;
  }
  NormalForm& operator-=(const NormalForm& o) {
    for (const auto& [key, f] : o.terms_) add_term(key.first, key.second, -f);
    return *this;
  }
  NormalForm& operator*=(Complex s) {
    if (s == Complex(0.0)) terms_.clear();
    for (auto& [key, f] : terms_) f *= s;
    return *this;
  }
  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, Complex s) { return a *= s; }
  friend NormalForm operator*(Complex s, NormalForm a) { return a *= s; }

  bool is_zero() const { return terms_.empty(); }

  double max_abs_coeff() const {
    double out = 0.0;
    for (const auto& [key, f] : terms_) out = std::max(out, f.max_abs_coeff());
    return out;
  }

  /// Largest k + m present.
  int max_degree() const {
    int out = 0;
    for (const auto& [key, f] : terms_) out = std::max(out, key.first + key.second);
    return out;
  }
  int max_left() const {
    int out = 0;
    for (const auto& [key, f] : terms_) out = std::max(out, key.first);
    return out;
  }

 private:
  std::map<Key, ExpPoly> terms_;
};

/// One leg of a tensor term: L^k t^power e^{exponent t} R^m.
struct LegMonomial {
  int k = 0;
  int m = 0;
  int power = 0;
  Complex exponent;

  friend bool operator==(const LegMonomial&, const LegMonomial&) = default;
  friend bool operator<(const LegMonomial& a, const LegMonomial& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.m != b.m) return a.m < b.m;
    if (a.power != b.power) return a.power < b.power;
    return complex_less(a.exponent, b.exponent);
  }
};

/// Counts and largest magnitude of terms removed by truncation.
struct DropStats {
  long count = 0;
  double max_abs = 0.0;

  void record(double magnitude) {
    ++count;
    max_abs = std::max(max_abs, magnitude);
  }
  void merge(const DropStats& o) {
    count += o.count;
    max_abs = std::max(max_abs, o.max_abs);
  }
};

/// Expands a normal form into (leg monomial, coefficient) pairs.
template <class Tag>
std::vector<std::pair<LegMonomial, Complex>> leg_terms(const NormalForm<Tag>& u) {
  std::vector<std::pair<LegMonomial, Complex>> out;
  for (const auto& [key, f] : u.terms())
    for (const auto& t : f.terms())
      out.push_back({LegMonomial{key.first, key.second, t.power, t.exponent}, t.coeff});
  return out;
}

template <class Tag>
NormalForm<Tag> leg_element(const LegMonomial& leg, Complex coeff = 1.0) {
  return NormalForm<Tag>::term(leg.k, leg.m,
                               ExpPoly::monomial(leg.power, leg.exponent, coeff));
}

/// Finite sum of pure tensors over `legs` copies of one algebra.
template <class Tag>
class Tensor {
 public:
  using Key = std::vector<LegMonomial>;
  using Element = NormalForm<Tag>;

  explicit Tensor(int legs = 2) : legs_(legs) {}

  /// u_1 (x) u_2 (x) ... (x) u_n
  static Tensor from_legs(const std::vector<Element>& parts) {
    Tensor out(static_cast<int>(parts.size()));
    out.append_product(parts, 1.0);
    out.canonicalize();
    return out;
  }

  static Tensor from_element(const Element& u) { return from_legs({u}); }

  int legs() const { return legs_; }
  const std::vector<std::pair<Key, Complex>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Appends without canonicalizing.
  void add(Key key, Complex c) {
    if (static_cast<int>(key.size()) != legs_)
      throw std::invalid_argument("tensor leg count mismatch");
    terms_.emplace_back(std::move(key), c);
  }

  /// Appends scale * (parts[0] (x) parts[1] (x) ...) without canonicalizing.
  void append_product(const std::vector<Element>& parts, Complex scale) {
    std::vector<std::vector<std::pair<LegMonomial, Complex>>> expanded;
    for (const Element& p : parts) {
      expanded.push_back(leg_terms(p));
      if (expanded.back().empty()) return;
    }
    Key key(parts.size());
    append_recursive(expanded, 0, key, scale);
  }

  Tensor& operator+=(const Tensor& o) {
    check_legs(o);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize();
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    check_legs(o);
    for (const auto& [key, c] : o.terms_) terms_.emplace_back(key, -c);
    canonicalize();
    return *this;
  }
  Tensor& operator*=(Complex s) {
    for (auto& [key, c] : terms_) c *= s;
    canonicalize();
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, Complex s) { return a *= s; }

  double max_abs_coeff() const {
    double out = 0.0;
    for (const auto& [key, c] : terms_) out = std::max(out, std::abs(c));
    return out;
  }

  /// Merges equal keys (exponents clustered per leg) and drops exact zeros.
  void canonicalize() {
    for (int leg = 0; leg < legs_; ++leg) {
      std::vector<Complex*> exps;
      exps.reserve(terms_.size());
      for (auto& [key, c] : terms_) exps.push_back(&key[leg].exponent);
      cluster_exponents(exps);
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Key, Complex>> merged;
    merged.reserve(terms_.size());
    for (auto& term : terms_) {
      if (!merged.empty() && merged.back().first == term.first)
        merged.back().second += term.second;
      else
        merged.push_back(std::move(term));
    }
    std::erase_if(merged, [](const auto& t) { return t.second == Complex(0.0); });
    terms_ = std::move(merged);
  }

  /// Single-leg tensor back to an element.
  Element to_element() const {
    if (legs_ != 1) throw std::logic_error("to_element requires a one-leg tensor");
    Element out;
    for (const auto& [key, c] : terms_) out += leg_element<Tag>(key[0], c);
    return out;
  }

  /// Keeps only terms accepted by `keep` on every leg; records the rest.
  Tensor filtered(const std::function<bool(const LegMonomial&)>& keep,
                  DropStats* drops = nullptr) const {
    Tensor out(legs_);
    for (const auto& [key, c] : terms_) {
      const bool ok = std::all_of(key.begin(), key.end(), keep);
      if (ok)
        out.terms_.emplace_back(key, c);
      else if (drops)
        drops->record(std::abs(c));
    }
    return out;
  }

 private:
  void check_legs(const Tensor& o) const {
    if (o.legs_ != legs_) throw std::invalid_argument("tensor leg count mismatch");
  }

  void append_recursive(
      const std::vector<std::vector<std::pair<LegMonomial, Complex>>>& expanded,
      std::size_t leg, Key& key, Complex scale) {
    if (leg == expanded.size()) {
      terms_.emplace_back(key, scale);
      return;
    }
    for (const auto& [mono, c] : expanded[leg]) {
      key[leg] = mono;
      append_recursive(expanded, leg + 1, key, scale * c);
    }
  }

  int legs_;
  std::vector<std::pair<Key, Complex>> terms_;
};

/// Legwise product of two tensors with a per-leg multiplication `mul` and an
/// optional per-leg truncation filter applied to the results.
template <class Tag, class Mul>
Tensor<Tag> tensor_multiply(const Tensor<Tag>& a, const Tensor<Tag>& b, Mul mul,
                            const std::function<bool(const LegMonomial&)>& keep = {},
                            DropStats* drops = nullptr) {
  if (a.legs() != b.legs()) throw std::invalid_argument("tensor leg count mismatch");
  using Element = NormalForm<Tag>;
  std::map<std::pair<LegMonomial, LegMonomial>, Element> cache;
  auto leg_product = [&](const LegMonomial& x, const LegMonomial& y) -> const Element& {
    auto it = cache.find({x, y});
    if (it != cache.end()) return it->second;
    Element prod = mul(leg_element<Tag>(x), leg_element<Tag>(y));
    if (keep) {
      Element kept;
      for (const auto& [mono, c] : leg_terms(prod)) {
        if (keep(mono))
          kept += leg_element<Tag>(mono, c);
        else if (drops)
          drops->record(std::abs(c));
      }
      prod = std::move(kept);
    }
    return cache.emplace(std::pair{x, y}, std::move(prod)).first->second;
  };

  Tensor<Tag> out(a.legs());
  std::vector<Element> parts(a.legs());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      bool empty = false;
      for (int leg = 0; leg < a.legs() && !empty; ++leg) {
        parts[leg] = leg_product(ka[leg], kb[leg]);
        empty = parts[leg].is_zero();
      }
      if (!empty) out.append_product(parts, ca * cb);
    }
  }
  out.canonicalize();
  return out;
}

/// Replaces leg `leg` of every term by the tensor `map(leg monomial)`.
template <class Tag, class Map>
Tensor<Tag> map_leg(const Tensor<Tag>& t, int leg, Map map) {
  std::map<LegMonomial, Tensor<Tag>> cache;
  int out_legs = -1;
  std::vector<std::pair<std::vector<LegMonomial>, Complex>> pieces;
  for (const auto& [key, c] : t.terms()) {
    auto it = cache.find(key[leg]);
    if (it == cache.end()) it = cache.emplace(key[leg], map(key[leg])).first;
    const Tensor<Tag>& image = it->second;
    out_legs = t.legs() - 1 + image.legs();
    for (const auto& [sub, cs] : image.terms()) {
      std::vector<LegMonomial> merged(key.begin(), key.begin() + leg);
      merged.insert(merged.end(), sub.begin(), sub.end());
      merged.insert(merged.end(), key.begin() + leg + 1, key.end());
      pieces.emplace_back(std::move(merged), c * cs);
    }
  }
  if (out_legs < 0) return Tensor<Tag>(t.legs());
  Tensor<Tag> result(out_legs);
  for (auto& [key, c] : pieces) result.add(std::move(key), c);
  result.canonicalize();
  return result;
}

/// Multiplies the legs of a two-leg tensor together.
template <class Tag, class Mul>
NormalForm<Tag> contract(const Tensor<Tag>& t, Mul mul) {
  if (t.legs() != 2) throw std::invalid_argument("contract requires two legs");
  NormalForm<Tag> out;
  for (const auto& [key, c] : t.terms())
    out += mul(leg_element<Tag>(key[0], c), leg_element<Tag>(key[1]));
  return out;
}

}  // namespace gboson
