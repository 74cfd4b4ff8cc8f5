#include "dcrit/report.hpp"

#include <sstream>

#include "dcrit/errors.hpp"

namespace dcrit {

using json = nlohmann::ordered_json;

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "error") return Status::Error;
  throw DomainError("unknown check status '" + s + "'");
}

}  // namespace

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["inputs"] = json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;

  json results = json::object();
  if (r.hilbert) {
    json h = json::object();
    for (const auto& [deg, dims] : *r.hilbert) h[std::to_string(deg)] = dims;
    results["hilbert"] = h;
  }
  if (r.milnor) results["milnor"] = *r.milnor;
  if (r.pairing) {
    results["pairing"] = {{"hessian", r.pairing->hessian},
                          {"symmetric", r.pairing->symmetric},
                          {"nondegenerate", r.pairing->nondegenerate}};
  }
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj = {{"name", c.name}, {"status", status_name(c.status)}};
    if (c.counterexample) cj["counterexample"] = *c.counterexample;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (c.informational) cj["informational"] = true;
    checks.push_back(std::move(cj));
  }
  results["checks"] = std::move(checks);
  for (const auto& [k, v] : r.extra.items()) results[k] = v;
  j["results"] = std::move(results);
  j["version"] = r.version;
  if (r.timing) {
    json t = json::object();
    for (const auto& [k, v] : *r.timing) t[k] = v;
    j["timing"] = t;
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs[k] = v.get<std::string>();
  const auto& results = j.at("results");
  for (const auto& [k, v] : results.items()) {
    if (k == "hilbert") {
      std::map<int, std::vector<std::size_t>> h;
      for (const auto& [deg, dims] : v.items()) h[std::stoi(deg)] = dims.get<std::vector<std::size_t>>();
      r.hilbert = std::move(h);
    } else if (k == "milnor") {
      r.milnor = v.get<std::string>();
    } else if (k == "pairing") {
      r.pairing = PairingSummary{v.at("hessian").get<std::vector<std::vector<std::string>>>(),
                                 v.at("symmetric").get<bool>(), v.at("nondegenerate").get<bool>()};
    } else if (k == "checks") {
      for (const auto& cj : v) {
        CheckResult c;
        c.name = cj.at("name").get<std::string>();
        c.status = parse_status(cj.at("status").get<std::string>());
        if (cj.contains("counterexample")) c.counterexample = cj["counterexample"].get<std::string>();
        if (cj.contains("detail")) c.detail = cj["detail"].get<std::string>();
        c.informational = cj.value("informational", false);
        r.checks.push_back(std::move(c));
      }
    } else {
      r.extra[k] = v;
    }
  }
  r.version = j.at("version").get<std::string>();
  if (j.contains("timing")) {
    std::map<std::string, double> t;
    for (const auto& [k, v] : j["timing"].items()) t[k] = v.get<double>();
    r.timing = std::move(t);
  }
  return r;
}

bool operator==(const CheckResult& a, const CheckResult& b) {
  return a.name == b.name && a.status == b.status && a.counterexample == b.counterexample && a.detail == b.detail &&
         a.informational == b.informational;
}

bool operator==(const Report& a, const Report& b) {
  return a.command == b.command && a.inputs == b.inputs && a.hilbert == b.hilbert && a.milnor == b.milnor &&
         a.pairing == b.pairing && a.checks == b.checks && a.extra == b.extra && a.timing == b.timing &&
         a.version == b.version;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  if (r.milnor) out << "milnor = " << *r.milnor << '\n';
  if (r.hilbert) {
    out << "hilbert:\n";
    for (auto it = r.hilbert->rbegin(); it != r.hilbert->rend(); ++it) {
      out << "  H^" << it->first << ":";
      std::size_t total = 0;
      for (auto d : it->second) {
        out << ' ' << d;
        total += d;
      }
      out << "  (total " << total << ")\n";
    }
  }
  if (r.pairing) {
    out << "hessian =";
    for (const auto& row : r.pairing->hessian) {
      out << " [";
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? ", " : "") << row[i];
      out << ']';
    }
    out << "\nsymmetric = " << (r.pairing->symmetric ? "true" : "false")
        << "\nnondegenerate = " << (r.pairing->nondegenerate ? "true" : "false") << '\n';
  }
  for (const auto& [k, v] : r.extra.items()) {
    out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  for (const auto& c : r.checks) {
    out << (c.informational ? "[info] " : c.passed() ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
    if (c.counterexample) out << "    counterexample: " << *c.counterexample << '\n';
  }
  if (r.timing) {
    for (const auto& [k, v] : *r.timing) out << "time " << k << " = " << v << " ms\n";
  }
  return out.str();
}

}  // namespace dcrit
