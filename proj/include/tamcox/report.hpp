#pragma once

// Machine-readable reports for the CLI: a command, its parameters, a
// PASS/FAIL-style status and a structured payload, serializable to JSON and
// to human-readable text. One report per performed check.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/poly.hpp"
#include "tamcox/spectra.hpp"

namespace tamcox {

using nlohmann::json;

enum class ReportStatus { Pass, Fail, Error, ConjecturePass, ConjectureFail };

inline const char* to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::Pass: return "PASS";
    case ReportStatus::Fail: return "FAIL";
    case ReportStatus::Error: return "ERROR";
    case ReportStatus::ConjecturePass: return "CONJECTURE-PASS";
    case ReportStatus::ConjectureFail: return "CONJECTURE-FAIL";
  }
  return "?";
}

inline ReportStatus report_status(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Pass: return ReportStatus::Pass;
    case VerifyStatus::Fail: return ReportStatus::Fail;
    case VerifyStatus::ConjecturePass: return ReportStatus::ConjecturePass;
    case VerifyStatus::ConjectureFail: return ReportStatus::ConjectureFail;
  }
  return ReportStatus::Error;
}

// Big integers go out as JSON numbers when they fit in 64 bits, else as
// decimal strings.
inline json json_int(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

inline json json_int_vector(const std::vector<Int>& v) {
  json arr = json::array();
  for (const Int& x : v) arr.push_back(json_int(x));
  return arr;
}

inline json json_poly(const IntPoly& p) { return json_int_vector(p.coefficients()); }

inline json json_factored(const FactoredForm& f) {
  json obj = json::object();
  for (const auto& [d, e] : f.exponents()) obj[std::to_string(d)] = json_int(e);
  return obj;
}

struct Report {
  std::string command;
  json parameters = json::object();
  ReportStatus status = ReportStatus::Error;
  json payload = json::object();

  bool counts_as_failure() const { return status == ReportStatus::Fail; }
  bool counts_as_error() const { return status == ReportStatus::Error; }

  json to_json() const {
    return json{{"command", command},
                {"parameters", parameters},
                {"status", to_string(status)},
                {"payload", payload}};
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "[" << to_string(status) << "] " << command;
    for (const auto& [k, v] : parameters.items()) {
      os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    for (const auto& [k, v] : payload.items()) {
      if (k == "timings_ms") continue;
      os << "\n    " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump());
    }
    return os.str();
  }
};

// Structural schema check for a serialized report.
inline bool validate_report_json(const json& j) {
  if (!j.is_object()) return false;
  if (!j.contains("command") || !j.at("command").is_string()) return false;
  if (!j.contains("parameters") || !j.at("parameters").is_object()) return false;
  if (!j.contains("payload") || !j.at("payload").is_object()) return false;
  if (!j.contains("status") || !j.at("status").is_string()) return false;
  const std::string s = j.at("status").get<std::string>();
  return s == "PASS" || s == "FAIL" || s == "ERROR" || s == "CONJECTURE-PASS" ||
         s == "CONJECTURE-FAIL";
}

// Report for one theorem/conjecture verification outcome.
inline Report report_from_outcome(const std::string& command, const VerifyOutcome& out) {
  Report rep;
  rep.command = command;
  rep.parameters = json{{"n", out.n}};
  rep.status = report_status(out.status);
  json timings = json::object();
  for (const auto& [k, v] : out.timings_ms) timings[k] = v;
  json phi = json::object();
  for (const auto& [d, m] : out.phi_multiplicities) phi[std::to_string(d)] = m;
  rep.payload = json{{"dim", out.dim},
                     {"polynomial", json_poly(out.computed)},
                     {"factored_form", json_factored(out.form)},
                     {"phi_multiplicities", phi},
                     {"matrix_order_bound", out.matrix_order_bound},
                     {"measured_order", out.measured_order},
                     {"berkowitz_checked", out.berkowitz_checked},
                     {"methods_agree", out.methods_agree},
                     {"timings_ms", timings}};
  if (out.first_mismatch) {
    rep.payload["first_mismatch_degree"] = *out.first_mismatch;
    rep.payload["expected_polynomial"] = json_poly(out.expected);
  }
  return rep;
}

}  // namespace tamcox
