#pragma once

// Symmetric functions in the power-sum basis, graded and truncated, with
// plethysm and the named series of the dendriform computation: Lie, Brace,
// Z, Com, the two closed-form plethysms, and the dendriform character.

#include <algorithm>
#include <compare>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"

namespace tamcox {

// Weakly decreasing positive parts; the empty partition indexes the constant.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw Error("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("Partition: parts must be decreasing");
    }
  }

  // d^m : m copies of the part d.
  static Partition rectangle(int d, int m) {
    return Partition(std::vector<int>(static_cast<std::size_t>(m), d));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  long weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  Partition merged_with(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<int>());
    return Partition(std::move(out));
  }

  // Parts multiplied by k (plethysm by p_k on monomials).
  Partition stretched(int k) const {
    std::vector<int> out(parts_);
    for (int& p : out) p *= k;
    return Partition(std::move(out));
  }

  friend auto operator<=>(const Partition& a, const Partition& b) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ",";
      os << parts_[i];
    }
    os << ")";
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

// z_lambda = prod_i i^{m_i} m_i! — the centralizer order of the cycle type.
inline Int z_of(const Partition& lam) {
  Int z = 1;
  int current = 0, mult = 0;
  auto flush = [&]() {
    for (int i = 1; i <= mult; ++i) z *= Int(current) * i;
  };
  for (int p : lam.parts()) {
    if (p == current) {
      ++mult;
    } else {
      flush();
      current = p;
      mult = 1;
    }
  }
  flush();
  return z;
}

inline void enumerate_partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_partitions_rec(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_partitions_rec(n, n == 0 ? 1 : n, acc, out);
  return out;
}

// Graded symmetric function sum c_lambda p_lambda, truncated at a fixed
// degree; zero coefficients are never stored.
class PowerSumPoly {
 public:
  explicit PowerSumPoly(long truncation)
      : trunc_(truncation), deg_(static_cast<std::size_t>(check(truncation)) + 1) {}

  static PowerSumPoly zero(long truncation) { return PowerSumPoly(truncation); }

  static PowerSumPoly one(long truncation) {
    PowerSumPoly f(truncation);
    f.add_term(Partition(), 1);
    return f;
  }

  // The generator p_d.
  static PowerSumPoly p(int d, long truncation) {
    PowerSumPoly f(truncation);
    f.add_term(Partition::rectangle(d, 1), 1);
    return f;
  }

  long truncation() const { return trunc_; }

  // Adds c * p_lambda; terms beyond the truncation degree are dropped (the
  // algebra is truncated, not erroring).
  void add_term(const Partition& lam, const Rat& c) {
    if (c == 0) return;
    const long w = lam.weight();
    if (w > trunc_) return;
    auto& m = deg_[static_cast<std::size_t>(w)];
    auto it = m.find(lam);
    if (it == m.end()) {
      m.emplace(lam, c);
    } else {
      it->second += c;
      if (it->second == 0) m.erase(it);
    }
  }

  Rat coeff(const Partition& lam) const {
    const long w = lam.weight();
    if (w > trunc_) return Rat(0);
    const auto& m = deg_[static_cast<std::size_t>(w)];
    auto it = m.find(lam);
    return it == m.end() ? Rat(0) : it->second;
  }

  const std::map<Partition, Rat>& degree_terms(long n) const {
    if (n < 0 || n > trunc_) throw Error("PowerSumPoly: degree out of range");
    return deg_[static_cast<std::size_t>(n)];
  }

  PowerSumPoly component(long n) const {
    PowerSumPoly f(trunc_);
    for (const auto& [lam, c] : degree_terms(n)) f.add_term(lam, c);
    return f;
  }

  bool is_zero() const {
    for (const auto& m : deg_) {
      if (!m.empty()) return false;
    }
    return true;
  }

  bool has_constant_term() const { return !deg_[0].empty(); }

  friend bool operator==(const PowerSumPoly& a, const PowerSumPoly& b) {
    return a.trunc_ == b.trunc_ && a.deg_ == b.deg_;
  }
  friend bool operator!=(const PowerSumPoly& a, const PowerSumPoly& b) { return !(a == b); }

  PowerSumPoly operator-() const { return scale(-1); }

  PowerSumPoly scale(const Rat& v) const {
    PowerSumPoly f(trunc_);
    if (v == 0) return f;
    for (const auto& m : deg_) {
      for (const auto& [lam, c] : m) f.add_term(lam, c * v);
    }
    return f;
  }

  friend PowerSumPoly operator+(const PowerSumPoly& a, const PowerSumPoly& b) {
    a.require_same_truncation(b);
    PowerSumPoly f(a.trunc_);
    for (const auto& m : a.deg_) {
      for (const auto& [lam, c] : m) f.add_term(lam, c);
    }
    for (const auto& m : b.deg_) {
      for (const auto& [lam, c] : m) f.add_term(lam, c);
    }
    return f;
  }

  friend PowerSumPoly operator-(const PowerSumPoly& a, const PowerSumPoly& b) {
    return a + (-b);
  }

  friend PowerSumPoly operator*(const PowerSumPoly& a, const PowerSumPoly& b) {
    a.require_same_truncation(b);
    PowerSumPoly f(a.trunc_);
    for (long da = 0; da <= a.trunc_; ++da) {
      const auto& ma = a.deg_[static_cast<std::size_t>(da)];
      if (ma.empty()) continue;
      for (long db = 0; da + db <= a.trunc_; ++db) {
        const auto& mb = b.deg_[static_cast<std::size_t>(db)];
        for (const auto& [la, ca] : ma) {
          for (const auto& [lb, cb] : mb) {
            f.add_term(la.merged_with(lb), ca * cb);
          }
        }
      }
    }
    return f;
  }

  // p_d -> p_{kd} on every monomial.
  PowerSumPoly stretched(int k) const {
    PowerSumPoly f(trunc_);
    for (const auto& m : deg_) {
      for (const auto& [lam, c] : m) f.add_term(lam.stretched(k), c);
    }
    return f;
  }

  // Degree-n coefficient sum — the dimension of invariants (p_d = 1).
  Rat invariants_dim(long n) const {
    Rat s = 0;
    for (const auto& [lam, c] : degree_terms(n)) s += c;
    return s;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& m : deg_) {
      for (const auto& [lam, c] : m) {
        if (!first) os << " + ";
        os << c.get_str() << "*p" << lam.to_string();
        first = false;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static long check(long truncation) {
    if (truncation < 0) throw Error("PowerSumPoly: negative truncation degree");
    return truncation;
  }

  void require_same_truncation(const PowerSumPoly& other) const {
    if (trunc_ != other.trunc_)
      throw TruncationMismatch("PowerSumPoly: operands have different truncation degrees");
  }

  long trunc_;
  std::vector<std::map<Partition, Rat>> deg_;
};

// Plethysm f o g: p_k o g substitutes p_d -> p_{kd} in g, extended to f
// additively and multiplicatively; coefficients of f pass through unchanged.
// g must have no constant term.
inline PowerSumPoly plethysm(const PowerSumPoly& f, const PowerSumPoly& g) {
  if (f.truncation() != g.truncation())
    throw TruncationMismatch("plethysm: operands have different truncation degrees");
  if (g.has_constant_term()) throw ConstantTermError("plethysm: g has a constant term");

  const long trunc = f.truncation();
  std::map<int, PowerSumPoly> stretched;  // k -> p_k o g
  auto stretch = [&](int k) -> const PowerSumPoly& {
    auto it = stretched.find(k);
    if (it == stretched.end()) it = stretched.emplace(k, g.stretched(k)).first;
    return it->second;
  };

  PowerSumPoly out(trunc);
  for (long d = 0; d <= trunc; ++d) {
    for (const auto& [lam, c] : f.degree_terms(d)) {
      PowerSumPoly term = PowerSumPoly::one(trunc);
      for (int k : lam.parts()) term = term * stretch(k);
      out = out + term.scale(c);
    }
  }
  return out;
}

// Lie = sum_n (1/n) sum_{d|n} mu(d) p_d^{n/d}.
inline PowerSumPoly lie_series(long trunc) {
  PowerSumPoly f(trunc);
  for (long n = 1; n <= trunc; ++n) {
    for (long d : divisors(n)) {
      const int mu = mobius(d);
      if (mu == 0) continue;
      f.add_term(Partition::rectangle(static_cast<int>(d), static_cast<int>(n / d)),
                 Rat(mu) / n);
    }
  }
  return f;
}

// Brace = sum_n (1/n) C(2n-2,n-1) p_1^n.
inline PowerSumPoly brace_series(long trunc) {
  PowerSumPoly f(trunc);
  for (long n = 1; n <= trunc; ++n) {
    f.add_term(Partition::rectangle(1, static_cast<int>(n)),
               Rat(binomial(2 * n - 2, n - 1)) / n);
  }
  return f;
}

// Z = p_1 + sum_{n >= 0} ((-1)^{n+1}/(n+1)) C(2n,n) p_1^{2n+2}.
inline PowerSumPoly z_series(long trunc) {
  PowerSumPoly f(trunc);
  f.add_term(Partition::rectangle(1, 1), 1);
  for (long n = 0; 2 * n + 2 <= trunc; ++n) {
    Rat v = Rat(binomial(2 * n, n)) / (n + 1);
    f.add_term(Partition::rectangle(1, static_cast<int>(2 * n + 2)), n % 2 == 0 ? -v : v);
  }
  return f;
}

// Com = sum_n h_n, h_n = sum_{lambda |- n} p_lambda / z_lambda.
inline PowerSumPoly com_series(long trunc) {
  PowerSumPoly f(trunc);
  for (long n = 1; n <= trunc; ++n) {
    for (const Partition& lam : partitions_of(static_cast<int>(n))) {
      f.add_term(lam, Rat(1) / Rat(z_of(lam)));
    }
  }
  return f;
}

// Closed form of Lie o Brace: sum_n (1/2n) sum_{d|n} mu(d) C(2n/d,n/d) p_d^{n/d}.
inline PowerSumPoly lie_brace_closed(long trunc) {
  PowerSumPoly f(trunc);
  for (long n = 1; n <= trunc; ++n) {
    for (long d : divisors(n)) {
      const int mu = mobius(d);
      if (mu == 0) continue;
      f.add_term(Partition::rectangle(static_cast<int>(d), static_cast<int>(n / d)),
                 Rat(mu) * Rat(binomial(2 * n / d, n / d)) / (2 * n));
    }
  }
  return f;
}

// Closed form of Lie o Z: sum_n (1/n) sum_{d|n} mu(d) lambda(n/d) p_d^{n/d}.
inline PowerSumPoly lie_z_closed(long trunc) {
  PowerSumPoly f(trunc);
  for (long n = 1; n <= trunc; ++n) {
    for (long d : divisors(n)) {
      const int mu = mobius(d);
      if (mu == 0) continue;
      f.add_term(Partition::rectangle(static_cast<int>(d), static_cast<int>(n / d)),
                 Rat(mu) * Rat(lambda_val(n / d)) / n);
    }
  }
  return f;
}

// Character of the induced dendriform module, homogeneous of degree n:
// 2 c_{n-1} p_1^n - (1/2n) sum_{d|n} phi(d) C(2n/d,n/d) p_d^{n/d}.
inline PowerSumPoly dend_character(long n) {
  if (n < 1) throw Error("dend_character: n must be positive");
  PowerSumPoly f(n);
  f.add_term(Partition::rectangle(1, static_cast<int>(n)), Rat(2 * catalan(n - 1)));
  for (long d : divisors(n)) {
    f.add_term(Partition::rectangle(static_cast<int>(d), static_cast<int>(n / d)),
               -Rat(euler_phi(d)) * Rat(binomial(2 * n / d, n / d)) / (2 * n));
  }
  return f;
}

}  // namespace tamcox
