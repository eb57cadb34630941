#ifndef CATKIT_HARNESS_REPORT_HPP
#define CATKIT_HARNESS_REPORT_HPP

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "catkit/error.hpp"
#include "catkit/version.hpp"

namespace catkit::harness {

/** Lower-case hex SHA-256 of the raw input bytes. */
inline std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

enum class Outcome { Pass, Fail, Error };

inline const char* outcome_name(Outcome o) {
  switch (o) {
  case Outcome::Pass: return "pass";
  case Outcome::Fail: return "fail";
  case Outcome::Error: return "error";
  }
  return "error";
}

inline Outcome outcome_from(const std::string& s) {
  if (s == "pass") return Outcome::Pass;
  if (s == "fail") return Outcome::Fail;
  if (s == "error") return Outcome::Error;
  throw std::invalid_argument("unknown outcome \"" + s + "\"");
}

struct TaskError {
  /** structural | law | domain | resource | reference */
  std::string kind;
  std::string message;
  std::vector<std::string> witness;
  std::optional<std::size_t> limit;

  friend bool operator==(const TaskError&, const TaskError&) = default;
};

struct TaskReport {
  std::string name;
  std::string op;
  Outcome outcome = Outcome::Pass;
  std::size_t checks_run = 0;
  std::size_t checks_failed = 0;
  /** Sorted, duplicate-free. */
  std::vector<Violation> violations;
  /** Derived artifacts: counts, decisions, tables. */
  nlohmann::json derived = nlohmann::json::object();
  std::optional<TaskError> error;

  friend bool operator==(const TaskReport&, const TaskReport&) = default;
};

struct RunReport {
  std::string engine = engine_name;
  std::string version = engine_version;
  std::string input_sha256;
  std::vector<TaskReport> tasks;

  std::size_t count(Outcome o) const {
    return static_cast<std::size_t>(
        std::count_if(tasks.begin(), tasks.end(), [&](const TaskReport& t) { return t.outcome == o; }));
  }
  Outcome outcome() const {
    if (count(Outcome::Error)) return Outcome::Error;
    if (count(Outcome::Fail)) return Outcome::Fail;
    return Outcome::Pass;
  }
  bool resource_limited() const {
    return std::any_of(tasks.begin(), tasks.end(),
                       [](const TaskReport& t) { return t.error && t.error->kind == "resource"; });
  }
  /** 0 all pass, 1 some check failed or errored, 3 a resource limit was hit. */
  int exit_code() const {
    if (resource_limited()) return 3;
    return outcome() == Outcome::Pass ? 0 : 1;
  }

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/** Fill the check counters and sorted violations from an engine report. */
inline void record(TaskReport& t, const Report& r) {
  t.checks_run += r.checks().size();
  t.checks_failed +=
      static_cast<std::size_t>(std::count_if(r.checks().begin(), r.checks().end(), [](const auto& c) { return !c.second; }));
  for (const auto& v : r.sorted_violations()) t.violations.push_back(v);
  std::sort(t.violations.begin(), t.violations.end());
  t.violations.erase(std::unique(t.violations.begin(), t.violations.end()), t.violations.end());
  if (!r.ok() && t.outcome == Outcome::Pass) t.outcome = Outcome::Fail;
}

inline nlohmann::json to_json(const RunReport& r) {
  using nlohmann::json;
  json tasks = json::array();
  for (const auto& t : r.tasks) {
    json v = json::array();
    for (const auto& x : t.violations) v.push_back({{"law", x.law}, {"witness", x.witness}});
    json e{{"name", t.name},
           {"op", t.op},
           {"outcome", outcome_name(t.outcome)},
           {"checks", {{"run", t.checks_run}, {"failed", t.checks_failed}}},
           {"violations", std::move(v)},
           {"derived", t.derived}};
    if (t.error) {
      json err{{"kind", t.error->kind}, {"message", t.error->message}, {"witness", t.error->witness}};
      if (t.error->limit) err["limit"] = *t.error->limit;
      e["error"] = std::move(err);
    }
    tasks.push_back(std::move(e));
  }
  return json{{"engine", {{"name", r.engine}, {"version", r.version}}},
              {"input", {{"sha256", r.input_sha256}}},
              {"outcome", outcome_name(r.outcome())},
              {"totals",
               {{"tasks", r.tasks.size()},
                {"pass", r.count(Outcome::Pass)},
                {"fail", r.count(Outcome::Fail)},
                {"error", r.count(Outcome::Error)}}},
              {"tasks", std::move(tasks)}};
}

inline RunReport report_from_json(const nlohmann::json& j) {
  RunReport r;
  r.engine = j.at("engine").at("name").get<std::string>();
  r.version = j.at("engine").at("version").get<std::string>();
  r.input_sha256 = j.at("input").at("sha256").get<std::string>();
  for (const auto& e : j.at("tasks")) {
    TaskReport t;
    t.name = e.at("name").get<std::string>();
    t.op = e.at("op").get<std::string>();
    t.outcome = outcome_from(e.at("outcome").get<std::string>());
    t.checks_run = e.at("checks").at("run").get<std::size_t>();
    t.checks_failed = e.at("checks").at("failed").get<std::size_t>();
    for (const auto& v : e.at("violations"))
      t.violations.push_back({v.at("law").get<std::string>(), v.at("witness").get<std::vector<std::string>>()});
    t.derived = e.at("derived");
    if (e.contains("error")) {
      const auto& x = e["error"];
      TaskError err{x.at("kind").get<std::string>(), x.at("message").get<std::string>(),
                    x.at("witness").get<std::vector<std::string>>(), std::nullopt};
      if (x.contains("limit")) err.limit = x["limit"].get<std::size_t>();
      t.error = std::move(err);
    }
    r.tasks.push_back(std::move(t));
  }
  return r;
}

/** Keys sorted at every level; two-space indent; trailing newline. */
inline std::string emit_json(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

inline std::string emit_text(const RunReport& r) {
  std::ostringstream out;
  out << r.engine << " " << r.version << "  input sha256 " << r.input_sha256 << "\n";
  for (const auto& t : r.tasks) {
    out << "[" << outcome_name(t.outcome) << "] " << t.name;
    if (t.name.rfind(t.op, 0) != 0) out << " (" << t.op << ")";
    out << ": " << (t.checks_run - t.checks_failed) << "/" << t.checks_run << " checks";
    if (t.error) out << "; " << t.error->kind << " error: " << t.error->message;
    out << "\n";
    for (const auto& v : t.violations) out << "    " << v.law << " " << format_witness(v.witness) << "\n";
  }
  out << r.tasks.size() << " tasks: " << r.count(Outcome::Pass) << " pass, " << r.count(Outcome::Fail) << " fail, "
      << r.count(Outcome::Error) << " error\n";
  return out.str();
}

inline std::string emit_report(const RunReport& r, const std::string& format) {
  if (format == "json") return emit_json(r);
  if (format == "text") return emit_text(r);
  throw std::invalid_argument("unknown report format \"" + format + "\"");
}

} // namespace catkit::harness

#endif
