#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsv/qseries.hpp"

namespace qsv {

enum class Status { pass, fail, mismatch_recorded };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::mismatch_recorded: return "mismatch-recorded";
  }
  return "fail";
}

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "mismatch-recorded") return Status::mismatch_recorded;
  throw std::invalid_argument("unknown status '" + s + "'");
}

/// First coefficient (or degree, or sample) where two sides disagree.
struct Mismatch {
  std::size_t exponent{};
  std::string lhs_value;
  std::string rhs_value;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  std::string task;
  std::map<std::string, std::string> parameters;
  Status status = Status::pass;
  std::optional<Mismatch> first_mismatch;
  double runtime_ms = 0;
  std::vector<std::string> notes;

  bool passed() const { return status == Status::pass; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

inline void to_json(nlohmann::json& j, const Mismatch& m) {
  j = {{"exponent", m.exponent}, {"lhs_value", m.lhs_value}, {"rhs_value", m.rhs_value}};
}

inline void from_json(const nlohmann::json& j, Mismatch& m) {
  j.at("exponent").get_to(m.exponent);
  j.at("lhs_value").get_to(m.lhs_value);
  j.at("rhs_value").get_to(m.rhs_value);
}

inline void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"task", r.task},
       {"parameters", r.parameters},
       {"status", to_string(r.status)},
       {"first_mismatch", nullptr},
       {"runtime_ms", r.runtime_ms},
       {"notes", r.notes}};
  if (r.first_mismatch) j["first_mismatch"] = *r.first_mismatch;
}

inline void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("task").get_to(r.task);
  j.at("parameters").get_to(r.parameters);
  r.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("first_mismatch") && !j.at("first_mismatch").is_null())
    r.first_mismatch = j.at("first_mismatch").get<Mismatch>();
  else
    r.first_mismatch.reset();
  j.at("runtime_ms").get_to(r.runtime_ms);
  j.at("notes").get_to(r.notes);
  if (r.status != Status::pass && !r.first_mismatch)
    throw std::invalid_argument("report: non-pass status requires first_mismatch");
}

/// Wall-clock helper for filling runtime_ms.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Coefficientwise comparison of two sides of a q-series identity.
inline VerificationReport compare_series(std::string task, const QSeries& lhs, const QSeries& rhs,
                                         std::map<std::string, std::string> parameters = {}) {
  VerificationReport r;
  r.task = std::move(task);
  r.parameters = std::move(parameters);
  r.parameters["compared_order"] = std::to_string(std::min(lhs.order(), rhs.order()));
  if (auto e = first_difference(lhs, rhs)) {
    r.status = Status::fail;
    r.first_mismatch = Mismatch{*e, lhs[*e].to_string(), rhs[*e].to_string()};
  }
  return r;
}

}  // namespace qsv
