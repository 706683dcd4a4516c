#include "wolfkit/report.hpp"

namespace wolfkit {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Evidence: return "evidence";
    case Status::Skip: return "skip";
    case Status::Fail: return "fail";
  }
  return "unknown";
}

CheckEntry& Report::add(std::string name, Status status, std::string detail,
                        std::optional<Matrix> witness) {
  entries.push_back({std::move(name), status, std::move(detail), std::move(witness)});
  return entries.back();
}

void Report::append(const Report& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

const CheckEntry* Report::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

bool Report::passed(std::string_view name) const {
  const CheckEntry* e = find(name);
  return e && e->status == Status::Pass;
}

bool Report::any_failed() const {
  for (const auto& e : entries)
    if (e.status == Status::Fail) return true;
  return false;
}

}  // namespace wolfkit
