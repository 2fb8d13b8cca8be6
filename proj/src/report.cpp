#include "braidkit/report.hpp"

#include <cstdio>
#include <sstream>

namespace braidkit {

void Report::merge(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool Report::all_pass() const {
  for (const auto& r : records_) {
    if (!r.pass) return false;
  }
  return true;
}

const CheckRecord* Report::find(const std::string& check) const {
  for (const auto& r : records_) {
    if (r.check == check) return &r;
  }
  return nullptr;
}

bool Report::passed(const std::string& check) const {
  const auto* r = find(check);
  return r != nullptr && r->pass;
}

std::string Report::text() const {
  std::ostringstream os;
  if (!title_.empty()) os << "== " << title_ << "\n";
  for (const auto& r : records_) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3fs", r.seconds);
    os << (r.pass ? "PASS " : "FAIL ") << r.check;
    if (!r.subject.empty()) os << " [" << r.subject << "]";
    os << " (" << secs << ")";
    if (!r.note.empty()) os << " -- " << r.note;
    os << "\n";
    for (const auto& w : r.witnesses) {
      os << "    at " << w.where;
      if (!w.lhs.empty() || !w.rhs.empty()) os << ": lhs = " << w.lhs << ", rhs = " << w.rhs;
      os << "\n";
    }
  }
  return os.str();
}

nlohmann::json to_json(const CheckRecord& r) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : r.witnesses) w.push_back({{"where", x.where}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  nlohmann::json j = {{"check", r.check},
                      {"subject", r.subject},
                      {"verdict", r.pass ? "pass" : "fail"},
                      {"witnesses", w},
                      {"timings", {{"seconds", r.seconds}}}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CheckRecord record_from_json(const nlohmann::json& j) {
  CheckRecord r;
  r.check = j.at("check").get<std::string>();
  r.subject = j.value("subject", "");
  r.pass = j.at("verdict").get<std::string>() == "pass";
  for (const auto& w : j.value("witnesses", nlohmann::json::array())) {
    r.witnesses.push_back({w.value("where", ""), w.value("lhs", ""), w.value("rhs", "")});
  }
  if (j.contains("timings")) r.seconds = j["timings"].value("seconds", 0.0);
  r.note = j.value("note", "");
  return r;
}

nlohmann::json Report::json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records_) recs.push_back(to_json(r));
  return {{"title", title_}, {"verdict", all_pass() ? "pass" : "fail"}, {"records", recs}};
}

CheckRecord fact(std::string check, std::string subject, bool pass, std::string note) {
  CheckRecord r;
  r.check = std::move(check);
  r.subject = std::move(subject);
  r.pass = pass;
  r.note = std::move(note);
  return r;
}

}  // namespace braidkit
