#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace affgr {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial in t. Trailing zeros are always trimmed, so the
// zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial from_ints(const std::vector<long long>& coeffs);
  static IntPolynomial monomial(int degree, BigInt coeff = 1);
  static IntPolynomial one() { return monomial(0); }
  // 1 - t^k and 1 + t^k
  static IntPolynomial one_minus(int k);
  static IntPolynomial one_plus(int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt operator[](int i) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Exact division by a polynomial with leading coefficient +-1.
  // Throws InternalError if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  bool is_palindromic() const;
  BigInt sum() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Power series known through degree N.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int N);
  TruncatedSeries(int N, const IntPolynomial& p);
  static TruncatedSeries one(int N);

  int truncation() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt& operator[](int i) { return c_.at(i); }
  const BigInt& operator[](int i) const { return c_.at(i); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const IntPolynomial& p);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // In-place multiplication by 1/(1 - t^k): c'_i = c_i + c'_{i-k}.
  TruncatedSeries& divide_one_minus(int k);
  TruncatedSeries& shift(int k);

  // Smallest degree where the two series differ, if any.
  std::optional<int> first_mismatch(const TruncatedSeries& o) const;
  std::vector<long long> to_ints() const;

 private:
  std::vector<BigInt> c_;
};

// numerator / prod (1 - t^k)^{mult}
struct RationalForm {
  IntPolynomial numerator;
  std::map<int, int> denominator;

  static RationalForm over(IntPolynomial num, const std::vector<int>& ks);
  IntPolynomial denominator_polynomial() const;
  TruncatedSeries expand(int N) const;
  // Equality of rational functions by cross multiplication.
  bool equals(const RationalForm& o) const;
  std::string to_string() const;
};

// Gaussian binomial [n choose k]_t.
IntPolynomial t_binomial(int n, int k);
// [n]_t = 1 + t + ... + t^{n-1}
IntPolynomial t_integer(int n);

}  // namespace affgr
