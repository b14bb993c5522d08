#pragma once

// Dense integer polynomials, cyclotomic polynomials, and the factored form
// prod_d (t^d - 1)^{e_d} that characteristic polynomials of finite-order
// matrices are stated in, with the square/negate substitution rules.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"

namespace tamcox {

// Coefficients ascending by degree; no trailing zeros; empty vector is 0.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return constant(1); }

  static IntPoly constant(Int v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }

  // t^d with coefficient c.
  static IntPoly monomial(long d, Int coeff = 1) {
    IntPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(d) + 1, Int(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  // t^d - 1.
  static IntPoly t_power_minus_one(long d) {
    if (d < 1) throw Error("t_power_minus_one: d must be positive");
    IntPoly p = monomial(d);
    p.c_[0] = -1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  const std::vector<Int>& coefficients() const { return c_; }

  Int coeff(long d) const {
    if (d < 0 || d >= static_cast<long>(c_.size())) return Int(0);
    return c_[static_cast<std::size_t>(d)];
  }

  Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly operator-() const {
    IntPoly r(*this);
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    r.normalize();
    return r;
  }

  IntPoly pow(unsigned long e) const {
    IntPoly acc = one();
    IntPoly base = *this;
    while (e > 0) {
      if (e & 1UL) acc = acc * base;
      e >>= 1UL;
      if (e > 0) base = base * base;
    }
    return acc;
  }

  // Exact quotient; throws NotAPolynomial if the division leaves a remainder
  // or exactness fails at any step (divisor leading coefficient must divide).
  IntPoly divide_exact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw NotAPolynomial("divide_exact: zero divisor");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree())
      throw NotAPolynomial("divide_exact: divisor degree exceeds dividend");
    std::vector<Int> rem = c_;
    const long dd = divisor.degree();
    std::vector<Int> quot(static_cast<std::size_t>(degree() - dd) + 1, Int(0));
    for (long k = degree() - dd; k >= 0; --k) {
      Int& top = rem[static_cast<std::size_t>(k + dd)];
      if (top == 0) continue;
      Int q = exact_divide_or_throw(top, divisor.leading());
      quot[static_cast<std::size_t>(k)] = q;
      for (long i = 0; i <= dd; ++i) {
        mpz_submul(rem[static_cast<std::size_t>(k + i)].get_mpz_t(), q.get_mpz_t(),
                   divisor.c_[static_cast<std::size_t>(i)].get_mpz_t());
      }
    }
    for (const Int& v : rem) {
      if (v != 0) throw NotAPolynomial("divide_exact: nonzero remainder");
    }
    IntPoly qp(std::move(quot));
    return qp;
  }

  Rat eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
  }

  Int eval_int(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Sparse ascending form, e.g. "1 + t + 2*t^3 - t^5".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Int& v = c_[i];
      if (v == 0) continue;
      const bool neg = v < 0;
      Int av = abs(v);
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      if (i == 0) {
        os << av.get_str();
      } else {
        if (av != 1) os << av.get_str() << "*";
        os << "t";
        if (i > 1) os << "^" << i;
      }
      first = false;
    }
    return os.str();
  }

 private:
  static Int exact_divide_or_throw(const Int& num, const Int& den) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw NotAPolynomial("divide_exact: coefficient not divisible");
    return q;
  }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

// Cyclotomic polynomial Phi_d, by exact division of t^d - 1 by the proper
// cyclotomic factors.
inline IntPoly cyclotomic(long d) {
  if (d < 1) throw Error("cyclotomic: index must be positive");
  IntPoly p = IntPoly::t_power_minus_one(d);
  for (long e : divisors(d)) {
    if (e == d) continue;
    p = p.divide_exact(cyclotomic(e));
  }
  return p;
}

// Formal product prod_d (t^d - 1)^{e_d} with integer exponents of either
// sign; denotes a polynomial only when expansion divides exactly.
class FactoredForm {
 public:
  FactoredForm() = default;
  explicit FactoredForm(std::map<long, Int> exponents) : e_(std::move(exponents)) { normalize(); }

  const std::map<long, Int>& exponents() const { return e_; }

  Int exponent(long d) const {
    auto it = e_.find(d);
    return it == e_.end() ? Int(0) : it->second;
  }

  void add_exponent(long d, const Int& e) {
    if (d < 1) throw Error("FactoredForm: factor index must be positive");
    auto it = e_.find(d);
    if (it == e_.end()) {
      if (e != 0) e_.emplace(d, e);
    } else {
      it->second += e;
      if (it->second == 0) e_.erase(it);
    }
  }

  friend bool operator==(const FactoredForm& a, const FactoredForm& b) { return a.e_ == b.e_; }
  friend bool operator!=(const FactoredForm& a, const FactoredForm& b) { return !(a == b); }

  // Degree of the denoted rational function, sum of d*e_d.
  Int degree() const {
    Int s = 0;
    for (const auto& [d, e] : e_) s += Int(d) * e;
    return s;
  }

  // Multiplicity of Phi_m in the product: sum of e_d over multiples d of m.
  std::map<long, Int> cyclotomic_multiplicities() const {
    std::map<long, Int> m;
    for (const auto& [d, e] : e_) {
      for (long f : divisors(d)) m[f] += e;
    }
    for (auto it = m.begin(); it != m.end();) {
      it = it->second == 0 ? m.erase(it) : std::next(it);
    }
    return m;
  }

  // Multiplies the positive part, then divides out the negative part with
  // exactness checks.
  IntPoly expand() const {
    IntPoly num = IntPoly::one();
    std::vector<std::pair<long, unsigned long>> den;
    for (const auto& [d, e] : e_) {
      if (e > 0) {
        if (!e.fits_ulong_p()) throw NotAPolynomial("expand: exponent too large");
        num = num * IntPoly::t_power_minus_one(d).pow(e.get_ui());
      } else if (e < 0) {
        Int a = -e;
        if (!a.fits_ulong_p()) throw NotAPolynomial("expand: exponent too large");
        den.emplace_back(d, a.get_ui());
      }
    }
    for (auto [d, mult] : den) {
      const IntPoly f = IntPoly::t_power_minus_one(d);
      for (unsigned long i = 0; i < mult; ++i) num = num.divide_exact(f);
    }
    return num;
  }

  std::string to_string() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, e] : e_) {
      if (!first) os << " ";
      os << "(t^" << d << "-1)^" << e.get_str();
      first = false;
    }
    return os.str();
  }

 private:
  void normalize() {
    for (auto it = e_.begin(); it != e_.end();) {
      if (it->first < 1) throw Error("FactoredForm: factor index must be positive");
      it = it->second == 0 ? e_.erase(it) : std::next(it);
    }
  }

  std::map<long, Int> e_;
};

// Characteristic polynomial of M^2 from that of a finite-order M:
// (t^d-1) stays for odd d, becomes (t^{d/2}-1)^2 for even d.
inline FactoredForm substitute_square(const FactoredForm& f) {
  FactoredForm r;
  for (const auto& [d, e] : f.exponents()) {
    if (d % 2 == 1) {
      r.add_exponent(d, e);
    } else {
      r.add_exponent(d / 2, 2 * e);
    }
  }
  return r;
}

// Characteristic polynomial of -M from that of a finite-order M:
// (t^d-1) becomes (t^{2d}-1)/(t^d-1) for odd d, stays for even d.
inline FactoredForm substitute_negate(const FactoredForm& f) {
  FactoredForm r;
  for (const auto& [d, e] : f.exponents()) {
    if (d % 2 == 1) {
      r.add_exponent(2 * d, e);
      r.add_exponent(d, -e);
    } else {
      r.add_exponent(d, e);
    }
  }
  return r;
}

}  // namespace tamcox
