#include "hopfad/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfad {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped") return Status::Skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

void VerificationReport::add(ClaimResult r) {
  if (find(r.claim_id)) throw std::logic_error("duplicate claim id '" + r.claim_id + "'");
  if (r.status == Status::Fail && !r.witness) r.witness = json::object();
  entries_.push_back(std::move(r));
}

void VerificationReport::pass(std::string claim_id, std::string note) {
  add({std::move(claim_id), Status::Pass, std::nullopt, 0.0, std::move(note)});
}

void VerificationReport::fail(std::string claim_id, json witness, std::string note) {
  add({std::move(claim_id), Status::Fail, std::move(witness), 0.0, std::move(note)});
}

void VerificationReport::skip(std::string claim_id, std::string note) {
  add({std::move(claim_id), Status::Skipped, std::nullopt, 0.0, std::move(note)});
}

void VerificationReport::record(std::string claim_id, std::optional<json> witness,
                                std::string note) {
  if (witness) fail(std::move(claim_id), std::move(*witness), std::move(note));
  else pass(std::move(claim_id), std::move(note));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    ClaimResult copy = e;
    if (!prefix.empty()) copy.claim_id = prefix + "/" + e.claim_id;
    add(std::move(copy));
  }
}

const ClaimResult* VerificationReport::find(const std::string& claim_id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const ClaimResult& e) { return e.claim_id == claim_id; });
  return it == entries_.end() ? nullptr : &*it;
}

bool VerificationReport::passed(const std::string& claim_id) const {
  const ClaimResult* r = find(claim_id);
  return r && r->status == Status::Pass;
}

bool VerificationReport::all_passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const ClaimResult& e) { return e.status == Status::Fail; }));
}

void VerificationReport::stamp_since(std::size_t from, double ms) {
  for (std::size_t i = from; i < entries_.size(); ++i)
    if (entries_[i].timing_ms == 0.0) entries_[i].timing_ms = ms;
}

json VerificationReport::to_json(bool with_timing) const {
  json arr = json::array();
  for (const auto& e : entries_) {
    json j = {{"claim_id", e.claim_id}, {"status", to_string(e.status)}};
    if (e.witness) j["witness"] = *e.witness;
    if (!e.note.empty()) j["note"] = e.note;
    if (with_timing) j["timing_ms"] = e.timing_ms;
    arr.push_back(std::move(j));
  }
  return arr;
}

VerificationReport VerificationReport::from_json(const json& j) {
  VerificationReport r;
  for (const auto& e : j) {
    ClaimResult c;
    c.claim_id = e.at("claim_id").get<std::string>();
    c.status = parse_status(e.at("status").get<std::string>());
    if (e.contains("witness")) c.witness = e.at("witness");
    if (e.contains("note")) c.note = e.at("note").get<std::string>();
    if (e.contains("timing_ms")) c.timing_ms = e.at("timing_ms").get<double>();
    r.add(std::move(c));
  }
  return r;
}

}  // namespace hopfad
