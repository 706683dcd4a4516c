#ifndef WOLFKIT_REPORT_HPP
#define WOLFKIT_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wolfkit/matrix.hpp"

namespace wolfkit {

enum class Status { Pass, Evidence, Skip, Fail };

std::string_view to_string(Status s);

// One verified identity. The witness is the exact expression that failed
// (or the evidence that was gathered).
struct CheckEntry {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::optional<Matrix> witness;
};

struct Report {
  std::vector<CheckEntry> entries;

  CheckEntry& add(std::string name, Status status, std::string detail = {},
                  std::optional<Matrix> witness = std::nullopt);
  void append(const Report& other);
  const CheckEntry* find(std::string_view name) const;
  bool passed(std::string_view name) const;
  bool any_failed() const;
};

}  // namespace wolfkit

#endif  // WOLFKIT_REPORT_HPP
