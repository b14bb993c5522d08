#pragma once

// Number-theoretic primitives and the four integer sequences of the
// Tamari/Coxeter spectra computation: Catalan numbers c_n, the positive
// sequence a_n, the signed sequences lambda(n), b_n and b'_n, together
// with the divisibility identities linking them.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tamcox/errors.hpp"

namespace tamcox {

using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Exact quotient num/den; throws NonIntegerResult on any remainder.
inline Int exact_div(const Int& num, const Int& den, const char* what = "exact_div") {
  if (den == 0) throw NonIntegerResult(std::string(what) + ": division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw NonIntegerResult(std::string(what) + ": " + num.get_str() + " not divisible by " +
                           den.get_str());
  }
  return q;
}

inline Int catalan(long n) {
  if (n < 0) throw Error("catalan: negative index");
  return exact_div(binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n)),
                   Int(n + 1), "catalan");
}

// Prime factorization by trial division; inputs stay small (<= ~10^4 in
// practice, sequence indices and divisors).
inline std::vector<std::pair<long, int>> factorize(long n) {
  if (n < 1) throw Error("factorize: argument must be positive");
  std::vector<std::pair<long, int>> f;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.emplace_back(p, e);
    }
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline std::vector<long> divisors(long n) {
  auto f = factorize(n);
  std::vector<long> ds{1};
  for (auto [p, e] : f) {
    const std::size_t base = ds.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline int mobius(long n) {
  if (n < 1) throw Error("mobius: argument must be positive");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline long euler_phi(long n) {
  if (n < 1) throw Error("euler_phi: argument must be positive");
  long phi = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

// lambda(n) = (-1)^C(n,2) * C(n-1, ceil((n-1)/2)); sign exponent reduced mod 2.
inline Int lambda_val(long n) {
  if (n < 1) throw Error("lambda_val: argument must be positive");
  const unsigned long m = static_cast<unsigned long>(n - 1);
  Int v = binomial(m, (m + 1) / 2);
  if ((n * (n - 1) / 2) % 2 != 0) v = -v;
  return v;
}

// a_n = (1/2n) sum_{d|n} mu(n/d) C(2d,d); integral and positive.
inline Int a_val(long n) {
  if (n < 1) throw Error("a_val: argument must be positive");
  Int s = 0;
  for (long d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu != 0) s += mu * binomial(2 * static_cast<unsigned long>(d), static_cast<unsigned long>(d));
  }
  Int a = exact_div(s, Int(2 * n), "a_val");
  if (a <= 0) throw NonIntegerResult("a_val: nonpositive value at n=" + std::to_string(n));
  return a;
}

// b_n = (1/n) sum_{d|n} mu(d) lambda(n/d); integral.
inline Int b_val(long n) {
  if (n < 1) throw Error("b_val: argument must be positive");
  Int s = 0;
  for (long d : divisors(n)) {
    const int mu = mobius(d);
    if (mu != 0) s += mu * lambda_val(n / d);
  }
  return exact_div(s, Int(n), "b_val");
}

inline Int bprime_val(long n) {
  if (n < 1) throw Error("bprime_val: argument must be positive");
  if (n % 2 == 1) return b_val(n);
  return -b_val(n) - b_val(n / 2);
}

// The three compatibility conditions between a_d and b_{2d}, b_d, b_{d/2}.
inline bool check_crux(long d) {
  if (d < 1) throw Error("check_crux: argument must be positive");
  const Int a = a_val(d);
  if (d % 2 == 1) return a == -2 * b_val(2 * d) - b_val(d);
  if (d % 4 == 0) return a == 2 * b_val(2 * d);
  return a == 2 * b_val(2 * d) + 2 * b_val(d) + b_val(d / 2);
}

// Ramanujan sum c_d(j) = sum over e | gcd(d,j) of mu(d/e)*e; c_d(0) = phi(d).
inline Int ramanujan_sum(long d, long j) {
  if (d < 1) throw Error("ramanujan_sum: order must be positive");
  const long g = j == 0 ? d : std::gcd(d, j);
  Int s = 0;
  for (long e : divisors(g)) {
    if (d % e == 0) s += Int(mobius(d / e)) * e;
  }
  return s;
}

enum class SequenceKind { catalan, a, b, bprime, lambda };

inline const char* to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::catalan: return "catalan";
    case SequenceKind::a: return "a";
    case SequenceKind::b: return "b";
    case SequenceKind::bprime: return "bprime";
    case SequenceKind::lambda: return "lambda";
  }
  return "?";
}

// Append-only memo over the pure sequence functions; safe for concurrent use.
class SequenceTable {
 public:
  explicit SequenceTable(SequenceKind kind) : kind_(kind) {}

  SequenceKind kind() const { return kind_; }

  // First valid index (0 for Catalan, 1 for the others).
  long first_index() const { return kind_ == SequenceKind::catalan ? 0 : 1; }

  Int at(long n) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = values_.find(n);
      if (it != values_.end()) return it->second;
    }
    Int v = compute(n);
    std::lock_guard<std::mutex> lock(mu_);
    return values_.emplace(n, std::move(v)).first->second;
  }

 private:
  Int compute(long n) const {
    switch (kind_) {
      case SequenceKind::catalan: return catalan(n);
      case SequenceKind::a: return a_val(n);
      case SequenceKind::b: return b_val(n);
      case SequenceKind::bprime: return bprime_val(n);
      case SequenceKind::lambda: return lambda_val(n);
    }
    throw Error("SequenceTable: unknown kind");
  }

  SequenceKind kind_;
  mutable std::mutex mu_;
  mutable std::map<long, Int> values_;
};

}  // namespace tamcox
