#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace skewjdt {

using BigInt = boost::multiprecision::cpp_int;

/// Power series in q with exact integer coefficients, truncated at a fixed
/// degree. Binary operations truncate at the smaller operand degree.
class QSeries {
 public:
  /// Zero series truncated at `degree`.
  explicit QSeries(int degree);
  QSeries(int degree, std::vector<BigInt> coefficients);

  static QSeries one(int degree);
  /// q^exponent (zero if the exponent lies above the truncation).
  static QSeries monomial(int exponent, int degree);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int exponent) const { return coeffs_.at(exponent); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Adds `amount` to the coefficient of q^exponent; ignored above the degree.
  void add_term(int exponent, const BigInt& amount);

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

QSeries qs_add(const QSeries& x, const QSeries& y);
QSeries qs_sub(const QSeries& x, const QSeries& y);
QSeries qs_mul(const QSeries& x, const QSeries& y);
/// 1 + q^k + q^2k + ... truncated at `degree`. Requires k >= 1.
QSeries qs_geom(int k, int degree);
/// 1 - q^k truncated at `degree`. Requires k >= 1.
QSeries qs_one_minus(int k, int degree);

inline QSeries operator+(const QSeries& x, const QSeries& y) { return qs_add(x, y); }
inline QSeries operator-(const QSeries& x, const QSeries& y) { return qs_sub(x, y); }
inline QSeries operator*(const QSeries& x, const QSeries& y) { return qs_mul(x, y); }

/// "1 + 2q + q^3" style rendering; "0" for the zero series.
std::string to_string(const QSeries& s);

}  // namespace skewjdt
