#pragma once

// Exact power series in t, u, v with big-integer coefficients, truncated to
// a box: t^i u^j v^k is kept iff i <= dims.t, j <= dims.u and k <= dims.v.
// The box is a quotient by a monomial ideal, so +, - and * are exact modulo
// the dropped terms.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fishburn {

using BigInt = mpz_class;

struct Dims {
  int t = 0;
  int u = 0;
  int v = 0;

  friend bool operator==(const Dims&, const Dims&) = default;
};

class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(Dims dims);

  static TruncatedSeries constant(Dims dims, const BigInt& c);
  static TruncatedSeries monomial(Dims dims, int i, int j, int k, const BigInt& c = 1);

  const Dims& dims() const noexcept { return dims_; }

  /// Zero outside the box.
  BigInt coeff(int i, int j = 0, int k = 0) const;
  /// Must be inside the box.
  BigInt& at(int i, int j = 0, int k = 0);

  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const BigInt& c);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const BigInt& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a);

  /// Power by repeated squaring; pow(0) is 1.
  TruncatedSeries pow(unsigned e) const;

  /// Multiplicative inverse; throws std::domain_error unless the constant
  /// term is 1 or -1.
  TruncatedSeries reciprocal() const;

  /// Moves every coefficient into another box, dropping what falls outside.
  TruncatedSeries resized(Dims dims) const;

  /// u -> u v. Terms pushed past dims.v are dropped.
  TruncatedSeries substitute_u_uv() const;
  /// v -> 1. Exact only when no v-power was truncated.
  TruncatedSeries at_v_one() const;
  /// v -> V(t, u); V must not involve v. Exact under the same caveat.
  TruncatedSeries substitute_v(const TruncatedSeries& V) const;

  /// Readable sum of monomials, for diagnostics.
  std::string to_string() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(dims_.u + 1) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(dims_.v + 1) +
           static_cast<std::size_t>(k);
  }
  bool inside(int i, int j, int k) const {
    return i >= 0 && j >= 0 && k >= 0 && i <= dims_.t && j <= dims_.u && k <= dims_.v;
  }

  Dims dims_{};
  std::vector<BigInt> c_ = std::vector<BigInt>(1);
};

}  // namespace fishburn
