#pragma once

#include <json.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace hopfad {

using nlohmann::json;

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);
Status parse_status(const std::string& s);

struct ClaimResult {
  std::string claim_id;
  Status status = Status::Pass;
  std::optional<json> witness;  // always present on Fail
  double timing_ms = 0.0;
  std::string note;             // optional finding text, e.g. which reading matched
};

/// Ordered collection of claim outcomes. Claim ids are unique within a
/// report; adding a duplicate id throws.
class VerificationReport {
 public:
  void pass(std::string claim_id, std::string note = {});
  void fail(std::string claim_id, json witness, std::string note = {});
  void skip(std::string claim_id, std::string note);
  /// Pass when witness is nullopt, fail otherwise.
  void record(std::string claim_id, std::optional<json> witness, std::string note = {});
  void add(ClaimResult r);

  /// Appends every entry of other with "prefix/" prepended to its id.
  void merge(const VerificationReport& other, const std::string& prefix = {});

  const std::vector<ClaimResult>& entries() const { return entries_; }
  const ClaimResult* find(const std::string& claim_id) const;
  bool passed(const std::string& claim_id) const;
  bool all_passed() const;
  std::size_t failures() const;
  bool empty() const { return entries_.empty(); }

  /// Applies the same wall-clock time to every entry added since `from`.
  void stamp_since(std::size_t from, double ms);

  json to_json(bool with_timing = false) const;
  static VerificationReport from_json(const json& j);

 private:
  std::vector<ClaimResult> entries_;
};

/// Times a block and stamps the entries it added.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& r)
      : report_(r), from_(r.entries().size()), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    const auto end = std::chrono::steady_clock::now();
    report_.stamp_since(from_, std::chrono::duration<double, std::milli>(end - start_).count());
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::size_t from_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hopfad
