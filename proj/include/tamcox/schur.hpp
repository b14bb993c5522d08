#pragma once

// Symmetric-group characters by the Murnaghan-Nakayama rule (border-strip
// removal on beta-numbers) and the power-sum -> Schur transition
// <f, s_lambda> = sum_mu c_mu chi^lambda(mu).

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"
#include "tamcox/powersum.hpp"

namespace tamcox {

// Character tables above this degree are refused by default; the MN
// recursion stays well under a minute up to here.
inline constexpr int kSchurDegreeCap = 14;

namespace detail {

using MnMemo = std::map<std::pair<std::vector<int>, std::size_t>, Int>;

// Sum over removals of a border strip of length mu[idx] from lam, with the
// sign (-1)^{height}; beta-number encoding makes removals a single hop.
inline Int mn_recurse(const std::vector<int>& lam, const std::vector<int>& mu, std::size_t idx,
                      MnMemo& memo) {
  if (idx == mu.size()) return lam.empty() ? Int(1) : Int(0);
  const auto key = std::make_pair(lam, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int k = mu[idx];
  const int r = static_cast<int>(lam.size());
  std::vector<int> beta(lam.size());
  for (int i = 0; i < r; ++i) beta[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (r - 1 - i);

  Int total = 0;
  for (int i = 0; i < r; ++i) {
    const int b = beta[static_cast<std::size_t>(i)] - k;
    if (b < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int j = 0; j < r; ++j) {
      if (j == i) continue;
      const int bj = beta[static_cast<std::size_t>(j)];
      if (bj == b) {
        occupied = true;
        break;
      }
      if (bj > b && bj < beta[static_cast<std::size_t>(i)]) ++height;
    }
    if (occupied) continue;

    std::vector<int> nbeta = beta;
    nbeta[static_cast<std::size_t>(i)] = b;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
    std::vector<int> nlam;
    nlam.reserve(nbeta.size());
    for (int j = 0; j < r; ++j) {
      const int part = nbeta[static_cast<std::size_t>(j)] - (r - 1 - j);
      if (part > 0) nlam.push_back(part);
    }
    const Int sub = mn_recurse(nlam, mu, idx + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace detail

// chi^lambda(mu) for lambda, mu partitions of the same weight.
inline Int sym_group_character(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight())
    throw Error("sym_group_character: partitions of different weight");
  detail::MnMemo memo;
  return detail::mn_recurse(lam.parts(), mu.parts(), 0, memo);
}

// Homogeneous expansion in Schur functions of a given degree.
struct SchurExpansion {
  long degree = 0;
  std::map<Partition, Rat> coeffs;  // zero coefficients absent

  Rat coeff(const Partition& lam) const {
    auto it = coeffs.find(lam);
    return it == coeffs.end() ? Rat(0) : it->second;
  }

  // All coefficients are integers.
  bool is_integral() const {
    for (const auto& [lam, c] : coeffs) {
      if (c.get_den() != 1) return false;
    }
    return true;
  }

  // +1 if all coefficients are positive, -1 if all negative, 0 if mixed;
  // the zero expansion counts as +1.
  int common_sign() const {
    int sign = 0;
    for (const auto& [lam, c] : coeffs) {
      const int s = c > 0 ? 1 : -1;
      if (sign == 0) {
        sign = s;
      } else if (sign != s) {
        return 0;
      }
    }
    return sign == 0 ? 1 : sign;
  }

  bool is_nonnegative() const { return common_sign() >= 0 || coeffs.empty(); }
};

// Transition of the degree-n component of f to the Schur basis.
inline SchurExpansion to_schur(const PowerSumPoly& f, long n, int degree_cap = kSchurDegreeCap) {
  if (n > degree_cap) {
    throw DegreeTooLarge("to_schur: degree " + std::to_string(n) + " exceeds cap " +
                         std::to_string(degree_cap));
  }
  if (n < 0 || n > f.truncation()) throw Error("to_schur: degree out of range");
  SchurExpansion out;
  out.degree = n;
  const auto& terms = f.degree_terms(n);
  if (terms.empty()) return out;
  for (const Partition& lam : partitions_of(static_cast<int>(n))) {
    Rat c = 0;
    for (const auto& [mu, cmu] : terms) c += cmu * Rat(sym_group_character(lam, mu));
    if (c != 0) out.coeffs.emplace(lam, c);
  }
  return out;
}

}  // namespace tamcox
