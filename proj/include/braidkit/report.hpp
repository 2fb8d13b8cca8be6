#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace braidkit {

struct Witness {
  std::string where;  // basis element or basis tuple
  std::string lhs;
  std::string rhs;
};

struct CheckRecord {
  std::string check;    // axiom or identity id, e.g. "coassociativity"
  std::string subject;  // structure under test
  bool pass = true;
  std::vector<Witness> witnesses;
  double seconds = 0.0;
  std::string note;
};

/// Ordered list of check records. Order is the order checks were run, which
/// is deterministic for a given input.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<CheckRecord>& records() const { return records_; }

  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  void merge(const Report& other);
  bool all_pass() const;
  /// First record with the given check id, or nullptr.
  const CheckRecord* find(const std::string& check) const;
  bool passed(const std::string& check) const;

  std::string text() const;
  nlohmann::json json() const;

 private:
  std::string title_;
  std::vector<CheckRecord> records_;
};

nlohmann::json to_json(const CheckRecord& r);
CheckRecord record_from_json(const nlohmann::json& j);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Record for a boolean fact with an optional witness.
CheckRecord fact(std::string check, std::string subject, bool pass, std::string note = {});

}  // namespace braidkit
