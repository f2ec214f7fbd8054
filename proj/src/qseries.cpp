#include "skewjdt/qseries.hpp"

#include <algorithm>

#include "skewjdt/errors.hpp"

namespace skewjdt {

QSeries::QSeries(int degree) {
  if (degree < 0) throw PreconditionError("truncation degree must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
}

QSeries::QSeries(int degree, std::vector<BigInt> coefficients) : QSeries(degree) {
  if (coefficients.size() > coeffs_.size()) {
    throw PreconditionError("coefficient above the truncation degree");
  }
  std::copy(coefficients.begin(), coefficients.end(), coeffs_.begin());
}

QSeries QSeries::one(int degree) { return monomial(0, degree); }

QSeries QSeries::monomial(int exponent, int degree) {
  QSeries s(degree);
  s.add_term(exponent, 1);
  return s;
}

void QSeries::add_term(int exponent, const BigInt& amount) {
  if (exponent < 0) throw PreconditionError("negative exponent");
  if (exponent <= degree()) coeffs_[exponent] += amount;
}

QSeries qs_add(const QSeries& x, const QSeries& y) {
  QSeries out(std::min(x.degree(), y.degree()));
  for (int d = 0; d <= out.degree(); ++d) out.add_term(d, x[d] + y[d]);
  return out;
}

QSeries qs_sub(const QSeries& x, const QSeries& y) {
  QSeries out(std::min(x.degree(), y.degree()));
  for (int d = 0; d <= out.degree(); ++d) out.add_term(d, x[d] - y[d]);
  return out;
}

QSeries qs_mul(const QSeries& x, const QSeries& y) {
  const int n = std::min(x.degree(), y.degree());
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += x[i] * y[j];
  }
  return QSeries(n, std::move(c));
}

QSeries qs_geom(int k, int degree) {
  if (k <= 0) throw PreconditionError("qs_geom: step must be positive, got " + std::to_string(k));
  QSeries s(degree);
  for (int d = 0; d <= degree; d += k) s.add_term(d, 1);
  return s;
}

QSeries qs_one_minus(int k, int degree) {
  if (k <= 0) {
    throw PreconditionError("qs_one_minus: step must be positive, got " + std::to_string(k));
  }
  QSeries s = QSeries::one(degree);
  s.add_term(k, -1);
  return s;
}

std::string to_string(const QSeries& s) {
  std::string out;
  for (int d = 0; d <= s.degree(); ++d) {
    BigInt c = s[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool show_coeff = c != 1 || d == 0;
    if (show_coeff) out += c.str();
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace skewjdt
