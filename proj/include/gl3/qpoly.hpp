#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gl3 {

/// Integer polynomial in the residue-field order q. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t c);  // NOLINT: constants convert implicitly
  QPoly(std::initializer_list<std::int64_t> coeffs);
  explicit QPoly(std::vector<std::int64_t> coeffs);

  /// c * q^k, k >= 0.
  static QPoly monomial(std::int64_t c, int k);
  /// The variable q.
  static QPoly q() { return monomial(1, 1); }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::int64_t coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  std::int64_t constant() const { return coeff(0); }

  /// Exact evaluation; throws Error on 64-bit overflow.
  std::int64_t eval(std::int64_t q) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  QPoly operator-() const;
  QPoly pow(int e) const;

  /// Exact division; returns false (leaving out untouched) if d does not divide *this.
  bool divides_by(const QPoly& d, QPoly& out) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

  /// "a0 + a1 q + a2 q^2" form, lowest degree first.
  std::string str() const;
  /// Product of small factors q, q-1, q+1, q-2, q-3, q^2+q+1 times a remainder.
  std::string factored() const;

 private:
  void normalize();
  std::vector<std::int64_t> c_;
};

}  // namespace gl3
