#pragma once

// Truncated univariate power series over exact rationals, plus the
// generating-function identities: the six appendix Taylor expansions and the
// infinite products F_a, F_b with their square-root closed forms.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"

namespace tamcox {

// Coefficients exact through degree `order` inclusive; binary operations
// require equal orders and never extend the reliable range.
class RatSeries {
 public:
  explicit RatSeries(long order) : order_(check_order(order)), c_(static_cast<std::size_t>(order) + 1) {}

  static RatSeries zero(long order) { return RatSeries(order); }

  static RatSeries constant(const Rat& v, long order) {
    RatSeries s(order);
    s.c_[0] = v;
    return s;
  }

  static RatSeries one(long order) { return constant(Rat(1), order); }

  static RatSeries x(long order) {
    RatSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
  }

  long order() const { return order_; }

  const Rat& coeff(long i) const {
    if (i < 0 || i > order_) throw Error("RatSeries: coefficient index out of range");
    return c_[static_cast<std::size_t>(i)];
  }

  void set_coeff(long i, const Rat& v) {
    if (i < 0 || i > order_) throw Error("RatSeries: coefficient index out of range");
    c_[static_cast<std::size_t>(i)] = v;
  }

  RatSeries truncate(long new_order) const {
    if (new_order > order_) throw TruncationMismatch("RatSeries: cannot extend order");
    RatSeries s(new_order);
    for (long i = 0; i <= new_order; ++i) s.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
    return s;
  }

  friend bool operator==(const RatSeries& a, const RatSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const RatSeries& a, const RatSeries& b) { return !(a == b); }

  RatSeries operator-() const {
    RatSeries r(order_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
  }

  friend RatSeries operator+(const RatSeries& a, const RatSeries& b) {
    a.require_same_order(b);
    RatSeries r(a.order_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend RatSeries operator-(const RatSeries& a, const RatSeries& b) { return a + (-b); }

  friend RatSeries operator*(const RatSeries& a, const RatSeries& b) {
    a.require_same_order(b);
    RatSeries r(a.order_);
    for (long i = 0; i <= a.order_; ++i) {
      if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
      for (long j = 0; i + j <= a.order_; ++j) {
        if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
        r.c_[static_cast<std::size_t>(i + j)] +=
            a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return r;
  }

  RatSeries scale(const Rat& v) const {
    RatSeries r(order_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * v;
    return r;
  }

  // 1/f; requires f(0) != 0.
  RatSeries inverse() const {
    if (c_[0] == 0) throw BadConstantTerm("RatSeries::inverse: zero constant term");
    RatSeries r(order_);
    r.c_[0] = Rat(1) / c_[0];
    for (long k = 1; k <= order_; ++k) {
      Rat s = 0;
      for (long i = 1; i <= k; ++i) s += c_[static_cast<std::size_t>(i)] * r.c_[static_cast<std::size_t>(k - i)];
      r.c_[static_cast<std::size_t>(k)] = -s / c_[0];
    }
    return r;
  }

  friend RatSeries operator/(const RatSeries& a, const RatSeries& b) { return a * b.inverse(); }

  // Square root with f(0) = 1 normalization.
  RatSeries sqrt() const {
    if (c_[0] != 1) throw BadConstantTerm("RatSeries::sqrt: constant term must be 1");
    RatSeries r(order_);
    r.c_[0] = 1;
    for (long k = 1; k <= order_; ++k) {
      Rat s = c_[static_cast<std::size_t>(k)];
      for (long i = 1; i < k; ++i) s -= r.c_[static_cast<std::size_t>(i)] * r.c_[static_cast<std::size_t>(k - i)];
      r.c_[static_cast<std::size_t>(k)] = s / 2;
    }
    return r;
  }

  // log f with f(0) = 1, via the derivative recurrence f' = f * (log f)'.
  RatSeries log() const {
    if (c_[0] != 1) throw BadConstantTerm("RatSeries::log: constant term must be 1");
    RatSeries r(order_);
    for (long k = 1; k <= order_; ++k) {
      Rat s = Rat(k) * c_[static_cast<std::size_t>(k)];
      for (long i = 1; i < k; ++i) {
        s -= Rat(i) * r.c_[static_cast<std::size_t>(i)] * c_[static_cast<std::size_t>(k - i)];
      }
      r.c_[static_cast<std::size_t>(k)] = s / k;
    }
    return r;
  }

  // exp f with f(0) = 0.
  RatSeries exp() const {
    if (c_[0] != 0) throw BadConstantTerm("RatSeries::exp: constant term must be 0");
    RatSeries r(order_);
    r.c_[0] = 1;
    for (long k = 1; k <= order_; ++k) {
      Rat s = 0;
      for (long i = 1; i <= k; ++i) {
        s += Rat(i) * c_[static_cast<std::size_t>(i)] * r.c_[static_cast<std::size_t>(k - i)];
      }
      r.c_[static_cast<std::size_t>(k)] = s / k;
    }
    return r;
  }

  RatSeries pow_int(const Int& e) const {
    if (e < 0) return inverse().pow_int(-e);
    RatSeries acc = one(order_);
    RatSeries base = *this;
    Int k = e;
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return acc;
  }

  // f / x^k, requiring the first k coefficients to vanish; drops the order
  // by k since nothing is known past it.
  RatSeries shift_down(long k) const {
    if (k < 0 || k > order_) throw Error("RatSeries::shift_down: bad shift");
    for (long i = 0; i < k; ++i) {
      if (c_[static_cast<std::size_t>(i)] != 0)
        throw BadConstantTerm("RatSeries::shift_down: low-order coefficient nonzero");
    }
    RatSeries r(order_ - k);
    for (long i = 0; i + k <= order_; ++i) r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i + k)];
    return r;
  }

  // f(-x).
  RatSeries substitute_neg() const {
    RatSeries r(order_);
    for (long i = 0; i <= order_; ++i) {
      r.c_[static_cast<std::size_t>(i)] = (i % 2 == 0) ? c_[static_cast<std::size_t>(i)] : -c_[static_cast<std::size_t>(i)];
    }
    return r;
  }

  // f(-x^2) truncated to `out_order`; needs f through degree out_order/2.
  RatSeries substitute_neg_square(long out_order) const {
    if (out_order / 2 > order_)
      throw TruncationMismatch("RatSeries::substitute_neg_square: insufficient order");
    RatSeries r(out_order);
    for (long m = 0; 2 * m <= out_order; ++m) {
      const Rat& v = c_[static_cast<std::size_t>(m)];
      r.c_[static_cast<std::size_t>(2 * m)] = (m % 2 == 0) ? v : -v;
    }
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= order_; ++i) {
      const Rat& v = c_[static_cast<std::size_t>(i)];
      if (v == 0) continue;
      if (!first) os << " + ";
      os << v.get_str();
      if (i >= 1) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    if (first) os << "0";
    os << " + O(x^" << order_ + 1 << ")";
    return os.str();
  }

 private:
  static long check_order(long order) {
    if (order < 0) throw Error("RatSeries: negative order");
    return order;
  }

  void require_same_order(const RatSeries& other) const {
    if (order_ != other.order_)
      throw TruncationMismatch("RatSeries: operands have different orders");
  }

  long order_;
  std::vector<Rat> c_;
};

// prod_{d <= N} (1 - x^d)^{-e_d}, exactly to order N, through
// exp(sum_d e_d sum_k x^{dk}/k); exponents of either sign and any size.
inline RatSeries product_form(const std::function<Int(long)>& exponent, long order) {
  RatSeries logsum(order);
  for (long d = 1; d <= order; ++d) {
    const Int e = exponent(d);
    if (e == 0) continue;
    for (long k = 1; d * k <= order; ++k) {
      logsum.set_coeff(d * k, logsum.coeff(d * k) + Rat(e) / k);
    }
  }
  return logsum.exp();
}

inline RatSeries product_form(const std::map<long, Int>& exponents, long order) {
  return product_form(
      [&exponents](long d) {
        auto it = exponents.find(d);
        return it == exponents.end() ? Int(0) : it->second;
      },
      order);
}

// sqrt(1 - 4x) at the given order.
inline RatSeries sqrt_one_minus_4x(long order) {
  RatSeries f = RatSeries::one(order) - RatSeries::x(order).scale(4);
  return f.sqrt();
}

// sqrt(1 + 4x^2) at the given order.
inline RatSeries sqrt_one_plus_4x2(long order) {
  RatSeries f = RatSeries::one(order);
  if (order >= 2) f.set_coeff(2, 4);
  return f.sqrt();
}

// F_a(x) = (1 - sqrt(1-4x)) / (2x), the Catalan generating function.
inline RatSeries fa_closed(long order) {
  RatSeries num = RatSeries::one(order + 1) - sqrt_one_minus_4x(order + 1);
  return num.shift_down(1).scale(Rat(1, 2));
}

// F_b(x) = (-1 + 2x + sqrt(1+4x^2)) / (2x).
inline RatSeries fb_closed(long order) {
  RatSeries num = sqrt_one_plus_4x2(order + 1) - RatSeries::one(order + 1) +
                  RatSeries::x(order + 1).scale(2);
  return num.shift_down(1).scale(Rat(1, 2));
}

// The six appendix Taylor identities; the closed sum on the left is built
// coefficient-by-coefficient, the right side from sqrt/log compositions.
inline bool taylor_check(int identity_id, long order) {
  if (order < 1) throw Error("taylor_check: order must be positive");
  RatSeries lhs(order), rhs(order);
  switch (identity_id) {
    case 1: {  // sum C(2n,n) x^n = 1/sqrt(1-4x)
      for (long n = 0; n <= order; ++n) lhs.set_coeff(n, Rat(binomial(2 * n, n)));
      rhs = sqrt_one_minus_4x(order).inverse();
      break;
    }
    case 2: {  // sum (1/n) C(2n-2,n-1) x^n = (1 - sqrt(1-4x))/2
      for (long n = 1; n <= order; ++n)
        lhs.set_coeff(n, Rat(binomial(2 * n - 2, n - 1)) / n);
      rhs = (RatSeries::one(order) - sqrt_one_minus_4x(order)).scale(Rat(1, 2));
      break;
    }
    case 3: {  // sum (1/2n) C(2n,n) x^n = -log((1 + sqrt(1-4x))/2)
      for (long n = 1; n <= order; ++n)
        lhs.set_coeff(n, Rat(binomial(2 * n, n)) / (2 * n));
      rhs = -(RatSeries::one(order) + sqrt_one_minus_4x(order)).scale(Rat(1, 2)).log();
      break;
    }
    case 4: {  // sum ((-1)^{n+1}/(n+1)) C(2n,n) x^{2n+1} = (1 - sqrt(1+4x^2))/(2x)
      for (long n = 0; 2 * n + 1 <= order; ++n) {
        Rat v = Rat(binomial(2 * n, n)) / (n + 1);
        lhs.set_coeff(2 * n + 1, n % 2 == 0 ? -v : v);
      }
      rhs = (RatSeries::one(order + 1) - sqrt_one_plus_4x2(order + 1))
                .shift_down(1)
                .scale(Rat(1, 2));
      break;
    }
    case 5: {  // sum lambda(n) x^n = x/sqrt(1+4x^2) - (1 - 1/sqrt(1+4x^2))/2
      for (long n = 1; n <= order; ++n) lhs.set_coeff(n, Rat(lambda_val(n)));
      const RatSeries inv_root = sqrt_one_plus_4x2(order).inverse();
      rhs = RatSeries::x(order) * inv_root -
            (RatSeries::one(order) - inv_root).scale(Rat(1, 2));
      break;
    }
    case 6: {  // sum lambda(n)/n x^n = -log((1 - 2x + sqrt(1+4x^2))/2)
      for (long n = 1; n <= order; ++n) lhs.set_coeff(n, Rat(lambda_val(n)) / n);
      rhs = -(RatSeries::one(order) - RatSeries::x(order).scale(2) + sqrt_one_plus_4x2(order))
                 .scale(Rat(1, 2))
                 .log();
      break;
    }
    default:
      throw Error("taylor_check: identity id must be 1..6");
  }
  return lhs == rhs;
}

// F_a(-z^2) = F_b(z) F_b(-z) to the given order, plus the three-factor
// product refinement of F_a over residue classes mod 4.
inline bool verify_fa_fb_relation(long order) {
  if (order < 1) throw Error("verify_fa_fb_relation: order must be positive");
  const RatSeries fa = fa_closed(order);
  const RatSeries fb = fb_closed(order);
  if (fa.substitute_neg_square(order) != fb * fb.substitute_neg()) return false;

  const RatSeries lhs = product_form([](long d) { return a_val(d); }, order);
  if (lhs != fa) return false;
  const RatSeries rhs = product_form(
      [](long d) {
        if (d % 2 == 1) return -(2 * b_val(2 * d) + b_val(d));
        if (d % 4 == 0) return 2 * b_val(2 * d);
        return 2 * b_val(2 * d) + 2 * b_val(d) + b_val(d / 2);
      },
      order);
  return lhs == rhs;
}

}  // namespace tamcox
