#pragma once

#include <string>

#include "lga/core.hpp"

namespace lga {

enum class Status { Holds, Fails, UnknownAtBound };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    default: return "unknown-at-bound";
  }
}

// Every decision routine answers with one of these. `bound` records how far the
// search went (so "holds" can be read as "holds up to bound" where relevant),
// `certificate` is a machine-checkable witness for the verdict, and `note` is a
// one-line human reading.
struct Verdict {
  Status status = Status::UnknownAtBound;
  json bound;        // object; empty when the verdict is unconditional
  json certificate;  // object; empty when no witness applies
  std::string note;

  static Verdict holds(json bound = json::object(), json cert = json::object(),
                       std::string note = "") {
    return {Status::Holds, std::move(bound), std::move(cert), std::move(note)};
  }
  static Verdict fails(json cert = json::object(), std::string note = "",
                       json bound = json::object()) {
    return {Status::Fails, std::move(bound), std::move(cert), std::move(note)};
  }
  static Verdict unknown(std::string note, json bound = json::object(),
                         json cert = json::object()) {
    return {Status::UnknownAtBound, std::move(bound), std::move(cert), std::move(note)};
  }

  json to_json() const {
    json out;
    out["status"] = status_name(status);
    if (!bound.empty()) out["bound"] = bound;
    if (!certificate.empty()) out["certificate"] = certificate;
    if (!note.empty()) out["note"] = note;
    return out;
  }
};

inline std::string verdict_text(const std::string& name, const Verdict& v) {
  std::string out = name + ": " + status_name(v.status);
  if (!v.bound.empty()) out += "  bound=" + v.bound.dump();
  if (!v.certificate.empty()) out += "  certificate=" + v.certificate.dump();
  if (!v.note.empty()) out += "\n  " + v.note;
  return out;
}

}  // namespace lga
