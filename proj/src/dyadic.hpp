// Exact arithmetic in Z[1/2]: value = num / 2^exp with num odd or zero.
// Everything downstream divides only by powers of two, so this ring is closed
// under all the operations the transform needs.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <optional>
#include <string>

#include "gf2.hpp"

namespace arcspan {

using BigInt = boost::multiprecision::cpp_int;

class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long long v) : num_(v) {}  // NOLINT: integers convert freely
  static Dyadic scaled(BigInt num, int exp) {
    if (exp < 0) throw usage_error("negative scale");
    Dyadic d;
    d.num_ = std::move(num);
    d.exp_ = exp;
    d.normalize();
    return d;
  }

  const BigInt& num() const { return num_; }
  int exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  Dyadic operator-() const {
    Dyadic d = *this;
    d.num_ = -d.num_;
    return d;
  }
  Dyadic operator+(const Dyadic& o) const {
    int e = std::max(exp_, o.exp_);
    return scaled((num_ << (e - exp_)) + (o.num_ << (e - o.exp_)), e);
  }
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  Dyadic operator*(const Dyadic& o) const {
    if (num_ == 0 || o.num_ == 0) return Dyadic();
    // integers with exponent 0 may carry an even numerator, so normalize
    return scaled(num_ * o.num_, exp_ + o.exp_);
  }
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

  Dyadic halved(int k) const {  // divide by 2^k
    if (k < 0) throw usage_error("negative halving");
    return scaled(num_, exp_ + k);
  }

  bool operator==(const Dyadic&) const = default;

  std::optional<long long> as_int() const {
    if (exp_ != 0) return std::nullopt;
    if (num_ < std::numeric_limits<long long>::min() ||
        num_ > std::numeric_limits<long long>::max())
      return std::nullopt;
    return num_.convert_to<long long>();
  }

  std::string str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/2^" + std::to_string(exp_);
  }

 private:
  BigInt num_ = 0;
  int exp_ = 0;

  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && num_ % 2 == 0) {
      num_ /= 2;  // exact: the dropped bit is zero
      --exp_;
    }
  }
};

}  // namespace arcspan
