#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "g2roll/exact/matrix.hpp"

namespace g2roll {

using nlohmann::json;

enum class Status { pass, fail, flagged };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged";
  }
  return "?";
}

/// One verified statement.
struct Claim {
  std::string id;
  std::string locus;
  Status status = Status::pass;
  json witness = json::object();
  std::string note;
  std::optional<double> seconds;
};

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline json to_json(const Vec3& v) { return to_json(v.to_vector()); }

inline json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
    rows.push_back(r);
  }
  return rows;
}

template <typename T>
json to_json(const std::vector<T>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

class Report {
 public:
  /// status pass or fail
  Claim& check(std::string id, std::string locus, bool ok, json witness = json::object()) {
    return add({std::move(id), std::move(locus), ok ? Status::pass : Status::fail, std::move(witness), {}, {}});
  }

  /// A statement whose printed form disagrees with what holds: flagged when the corrected form holds.
  Claim& flag(std::string id, std::string locus, bool corrected_holds, std::string note, json witness = json::object()) {
    return add({std::move(id), std::move(locus), corrected_holds ? Status::flagged : Status::fail, std::move(witness),
                std::move(note), {}});
  }

  /// Records an exception from a check as a failure.
  Claim& error(std::string id, std::string locus, const std::exception& e) {
    return add({std::move(id), std::move(locus), Status::fail, json{{"error", e.what()}}, {}, {}});
  }

  /// Appends an existing claim unchanged.
  void adopt(const Claim& c) { claims_.push_back(c); }

  void merge(const Report& other) { claims_.insert(claims_.end(), other.claims_.begin(), other.claims_.end()); }

  const std::vector<Claim>& claims() const { return claims_; }

  std::vector<Claim> sorted() const {
    auto out = claims_;
    std::stable_sort(out.begin(), out.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return out;
  }

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(claims_.begin(), claims_.end(), [s](const Claim& c) { return c.status == s; }));
  }
  bool ok() const { return count(Status::fail) == 0; }

  const Claim* find(const std::string& id) const {
    for (const auto& c : claims_)
      if (c.id == id) return &c;
    return nullptr;
  }

  json to_json(bool timings) const {
    json arr = json::array();
    for (const auto& c : sorted()) {
      json o = {{"id", c.id}, {"locus", c.locus}, {"status", g2roll::to_string(c.status)}, {"witness", c.witness}};
      if (!c.note.empty()) o["note"] = c.note;
      if (timings && c.seconds) o["duration_s"] = *c.seconds;
      arr.push_back(o);
    }
    return arr;
  }

  std::string to_text(bool timings) const {
    std::string out;
    for (const auto& c : sorted()) {
      std::string line = std::string(g2roll::to_string(c.status));
      line.resize(8, ' ');
      line += c.id;
      if (!c.note.empty()) line += "  (" + c.note + ")";
      if (timings && c.seconds) line += "  [" + std::to_string(*c.seconds) + " s]";
      out += line + "\n";
    }
    out += "summary: " + std::to_string(count(Status::pass)) + " pass, " + std::to_string(count(Status::flagged)) +
           " flagged, " + std::to_string(count(Status::fail)) + " fail\n";
    return out;
  }

 private:
  Claim& add(Claim c) {
    auto now = std::chrono::steady_clock::now();
    c.seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    claims_.push_back(std::move(c));
    return claims_.back();
  }

  std::vector<Claim> claims_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace g2roll
