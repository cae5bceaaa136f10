#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <string>

#include "pointfree/errors.hpp"

namespace pointfree {

// Exact rational arithmetic. Backed by boost::multiprecision::cpp_rational,
// which keeps values normalised (lowest terms, positive denominator) and
// never overflows; this wrapper pins the interface the rest of the library
// and the text formats rely on.
class rational {
 public:
  using big_int = boost::multiprecision::cpp_int;

  rational() : v_(0) {}
  rational(long long n) : v_(n) {}
  rational(const big_int& num, const big_int& den) {
    if (den == 0) throw input_error("rational: zero denominator");
    // The backend wants the denominator positive already.
    if (den < 0)
      v_ = boost::multiprecision::cpp_rational(-num, -den);
    else
      v_ = boost::multiprecision::cpp_rational(num, den);
  }

  big_int num() const { return boost::multiprecision::numerator(v_); }
  big_int den() const { return boost::multiprecision::denominator(v_); }

  friend rational operator+(const rational& a, const rational& b) { return rational(a.v_ + b.v_); }
  friend rational operator-(const rational& a, const rational& b) { return rational(a.v_ - b.v_); }
  friend rational operator*(const rational& a, const rational& b) { return rational(a.v_ * b.v_); }
  friend rational operator/(const rational& a, const rational& b) {
    if (b.v_ == 0) throw input_error("rational: division by zero");
    return rational(a.v_ / b.v_);
  }
  rational operator-() const { return rational(-v_); }

  friend bool operator==(const rational& a, const rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const rational& a, const rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const rational& a, const rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const rational& a, const rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const rational& a, const rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const rational& a, const rational& b) { return a.v_ >= b.v_; }

  // Canonical form p/q, q > 0, lowest terms, e.g. "1/1", "-3/4".
  std::string str() const {
    return num().str() + "/" + den().str();
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

 private:
  explicit rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

inline rational rat(long long num, long long den) {
  return rational(rational::big_int(num), rational::big_int(den));
}

inline rational min(const rational& a, const rational& b) { return a < b ? a : b; }
inline rational max(const rational& a, const rational& b) { return a < b ? b : a; }

inline rational midpoint(const rational& a, const rational& b) {
  return (a + b) / rat(2, 1);
}

}  // namespace pointfree
