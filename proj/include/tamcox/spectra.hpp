#pragma once

// The Coxeter transformation theta = -C (tC)^{-1} of the Tamari lattice, the
// cyclic action tau = (-1)^{n+1} theta^2, and exact verification of their
// characteristic polynomials against the factored forms
//   tau:   (t^n-1)^{2 c_{n-1}} / prod_{d|n} (t^d-1)^{a_d}
//   theta: (t^{2n}-1)^{c_{n-1}} / prod_{d|2n} (t^d-1)^{b_d or b'_d}.

#include <chrono>
#include <map>
#include <optional>
#include <string>

#include "tamcox/arith.hpp"
#include "tamcox/charpoly.hpp"
#include "tamcox/errors.hpp"
#include "tamcox/matrix.hpp"
#include "tamcox/poly.hpp"
#include "tamcox/tamari.hpp"

namespace tamcox {

struct SpectraOptions {
  // Lattices above this dimension are refused (SizeLimit).
  long max_dim = 1430;
  // Berkowitz cross-check runs when the dimension is at most this.
  long berkowitz_max_dim = 132;
  bool cross_check = true;
};

inline MatZ coxeter_matrix(const TamariLattice& lat) {
  const MatZ c = order_matrix(lat);
  return -(c * inverse_unit_lower_triangular(c.transpose()));
}

// tau = (-1)^{n+1} theta^2; asserts tau^n = I.
inline MatZ tau_matrix(const TamariLattice& lat) {
  const MatZ theta = coxeter_matrix(lat);
  const long n = lat.n_leaves();
  MatZ tau = theta * theta;
  if (n % 2 == 0) tau = -tau;
  if (!tau.pow(static_cast<unsigned long>(n)).is_identity()) {
    throw OrderCheckFailed("tau_matrix: tau^" + std::to_string(n) + " != I");
  }
  return tau;
}

// (t^n-1)^{2 c_{n-1}} combined with exponent -a_d at each divisor d of n.
inline FactoredForm theorem_form(long n) {
  if (n < 2) throw Error("theorem_form: n must be at least 2");
  FactoredForm f;
  f.add_exponent(n, 2 * catalan(n - 1));
  for (long d : divisors(n)) f.add_exponent(d, -a_val(d));
  return f;
}

// (t^{2n}-1)^{c_{n-1}} combined with -b_d (n even) or -b'_d (n odd) at each
// divisor d of 2n.
inline FactoredForm conjecture_form(long n) {
  if (n < 2) throw Error("conjecture_form: n must be at least 2");
  FactoredForm f;
  f.add_exponent(2 * n, catalan(n - 1));
  const bool even = n % 2 == 0;
  for (long d : divisors(2 * n)) f.add_exponent(d, even ? -b_val(d) : -bprime_val(d));
  return f;
}

enum class VerifyStatus { Pass, Fail, ConjecturePass, ConjectureFail };

inline const char* to_string(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return "PASS";
    case VerifyStatus::Fail: return "FAIL";
    case VerifyStatus::ConjecturePass: return "CONJECTURE-PASS";
    case VerifyStatus::ConjectureFail: return "CONJECTURE-FAIL";
  }
  return "?";
}

struct VerifyOutcome {
  long n = 0;
  long dim = 0;
  VerifyStatus status = VerifyStatus::Fail;
  IntPoly computed;           // char poly from the trace method
  IntPoly expected;           // expansion of the factored form
  FactoredForm form;
  std::map<long, long> phi_multiplicities;
  long matrix_order_bound = 0;
  long measured_order = 0;    // measured multiplicative order of the matrix
  bool berkowitz_checked = false;
  bool methods_agree = true;  // Berkowitz vs trace method, when checked
  std::optional<long> first_mismatch;  // lowest degree where computed != expected
  std::map<std::string, double> timings_ms;

  bool passed() const {
    return status == VerifyStatus::Pass || status == VerifyStatus::ConjecturePass;
  }
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

inline std::optional<long> first_coeff_mismatch(const IntPoly& a, const IntPoly& b) {
  const long top = std::max(a.degree(), b.degree());
  for (long d = 0; d <= top; ++d) {
    if (a.coeff(d) != b.coeff(d)) return d;
  }
  return std::nullopt;
}

inline VerifyOutcome verify_charpoly(long n, bool against_tau, const SpectraOptions& opt) {
  using clock = std::chrono::steady_clock;
  VerifyOutcome out;
  out.n = n;

  auto t0 = clock::now();
  const TamariLattice lat = TamariLattice::build(n, opt.max_dim);
  out.dim = lat.size();
  out.timings_ms["lattice"] = ms_since(t0);

  t0 = clock::now();
  const MatZ mat = against_tau ? tau_matrix(lat) : coxeter_matrix(lat);
  out.timings_ms["matrix"] = ms_since(t0);

  t0 = clock::now();
  out.matrix_order_bound = against_tau ? n : 2 * n;
  const FiniteOrderCharPoly fo = charpoly_finite_order(mat, out.matrix_order_bound);
  out.computed = fo.poly;
  out.phi_multiplicities = fo.phi_multiplicities;
  out.measured_order = fo.measured_order;
  out.timings_ms["traces"] = ms_since(t0);

  if (opt.cross_check && out.dim <= opt.berkowitz_max_dim) {
    t0 = clock::now();
    out.berkowitz_checked = true;
    out.methods_agree = charpoly_berkowitz(mat) == out.computed;
    out.timings_ms["berkowitz"] = ms_since(t0);
  }

  t0 = clock::now();
  out.form = against_tau ? theorem_form(n) : conjecture_form(n);
  out.expected = out.form.expand();
  out.timings_ms["expand"] = ms_since(t0);

  const bool equal = out.computed == out.expected && out.methods_agree;
  if (!equal) out.first_mismatch = first_coeff_mismatch(out.computed, out.expected);
  if (against_tau) {
    out.status = equal ? VerifyStatus::Pass : VerifyStatus::Fail;
  } else {
    out.status = equal ? VerifyStatus::ConjecturePass : VerifyStatus::ConjectureFail;
  }
  return out;
}

}  // namespace detail

// Theorem check: char poly of tau equals the expanded theorem form.
inline VerifyOutcome verify_theorem(long n, const SpectraOptions& opt = {}) {
  return detail::verify_charpoly(n, /*against_tau=*/true, opt);
}

// Conjecture check: char poly of theta equals the expanded conjecture form.
// A mismatch is CONJECTURE-FAIL — reportable output, not an artifact error.
inline VerifyOutcome verify_conjecture(long n, const SpectraOptions& opt = {}) {
  return detail::verify_charpoly(n, /*against_tau=*/false, opt);
}

}  // namespace tamcox
