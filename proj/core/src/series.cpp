#include "affgr/series.hpp"

#include "affgr/errors.hpp"

#include <algorithm>
#include <sstream>

namespace affgr {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::from_ints(const std::vector<long long>& coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coeff) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_minus(int k) { return one() - monomial(k); }
IntPolynomial IntPolynomial::one_plus(int k) { return one() + monomial(k); }

BigInt IntPolynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw InternalError("polynomial division by zero");
  const BigInt& lead = divisor.c_.back();
  if (lead != 1 && lead != -1) throw InternalError("divide_exact needs a unit leading coefficient");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw InternalError("inexact polynomial division");
  std::vector<BigInt> rem = c_;
  const int dd = divisor.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(degree() - dd) + 1);
  for (int i = degree(); i >= dd; --i) {
    BigInt f = rem[i] * lead;  // lead is its own inverse
    if (f == 0) continue;
    q[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw InternalError("inexact polynomial division");
  return IntPolynomial(std::move(q));
}

bool IntPolynomial::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i, --j)
    if (c_[i] != c_[j - 1]) return false;
  return true;
}

BigInt IntPolynomial::sum() const {
  BigInt s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const BigInt& a = c_[i];
    if (a == 0) continue;
    BigInt mag = a < 0 ? BigInt(-a) : a;
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

TruncatedSeries::TruncatedSeries(int N) : c_(static_cast<std::size_t>(std::max(N, 0)) + 1) {}

TruncatedSeries::TruncatedSeries(int N, const IntPolynomial& p) : TruncatedSeries(N) {
  for (int i = 0; i <= std::min(N, p.degree()); ++i) c_[i] = p.coeffs()[i];
}

TruncatedSeries TruncatedSeries::one(int N) {
  TruncatedSeries s(N);
  s.c_[0] = 1;
  return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  std::vector<BigInt> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const IntPolynomial& p) {
  return *this *= TruncatedSeries(truncation(), p);
}

TruncatedSeries& TruncatedSeries::divide_one_minus(int k) {
  if (k <= 0) throw InternalError("divide_one_minus needs k >= 1");
  for (std::size_t i = static_cast<std::size_t>(k); i < c_.size(); ++i) c_[i] += c_[i - k];
  return *this;
}

TruncatedSeries& TruncatedSeries::shift(int k) {
  for (int i = truncation(); i >= 0; --i) c_[i] = i >= k ? c_[i - k] : BigInt(0);
  return *this;
}

std::optional<int> TruncatedSeries::first_mismatch(const TruncatedSeries& o) const {
  const std::size_t n = std::min(c_.size(), o.c_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (c_[i] != o.c_[i]) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<long long> TruncatedSeries::to_ints() const {
  std::vector<long long> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.convert_to<long long>());
  return out;
}

RationalForm RationalForm::over(IntPolynomial num, const std::vector<int>& ks) {
  RationalForm r{std::move(num), {}};
  for (int k : ks) ++r.denominator[k];
  return r;
}

IntPolynomial RationalForm::denominator_polynomial() const {
  IntPolynomial d = IntPolynomial::one();
  for (const auto& [k, m] : denominator)
    for (int i = 0; i < m; ++i) d *= IntPolynomial::one_minus(k);
  return d;
}

TruncatedSeries RationalForm::expand(int N) const {
  TruncatedSeries s(N, numerator);
  for (const auto& [k, m] : denominator)
    for (int i = 0; i < m; ++i) s.divide_one_minus(k);
  return s;
}

bool RationalForm::equals(const RationalForm& o) const {
  return numerator * o.denominator_polynomial() == o.numerator * denominator_polynomial();
}

std::string RationalForm::to_string() const {
  std::ostringstream os;
  os << "(" << numerator.to_string() << ") / ";
  if (denominator.empty()) return os.str() + "1";
  bool first = true;
  for (const auto& [k, m] : denominator) {
    if (!first) os << "*";
    first = false;
    os << "(1 - t^" << k << ")";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

IntPolynomial t_integer(int n) {
  std::vector<BigInt> c(static_cast<std::size_t>(std::max(n, 0)), BigInt(1));
  return IntPolynomial(std::move(c));
}

IntPolynomial t_binomial(int n, int k) {
  if (k < 0 || k > n) throw InvalidInput("t_binomial needs 0 <= k <= n");
  IntPolynomial num = IntPolynomial::one();
  IntPolynomial den = IntPolynomial::one();
  for (int i = 1; i <= k; ++i) {
    num *= t_integer(n - k + i);
    den *= t_integer(i);
  }
  return num.divide_exact(den);
}

}  // namespace affgr
