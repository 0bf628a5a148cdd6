#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvdual {

/// One verified law: `OK|FAIL <law> <subject> [detail]`.
struct ReportLine {
  bool ok = true;
  std::string law;
  std::string subject;
  std::string detail;
};

class Report {
public:
  void add(bool ok, std::string law, std::string subject, std::string detail = "") {
    lines_.push_back({ok, std::move(law), std::move(subject), std::move(detail)});
  }

  void merge(const Report& other) {
    lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
  }

  bool all_ok() const {
    for (const auto& line : lines_)
      if (!line.ok) return false;
    return true;
  }

  std::size_t failure_count() const {
    std::size_t count = 0;
    for (const auto& line : lines_)
      if (!line.ok) ++count;
    return count;
  }

  const std::vector<ReportLine>& lines() const { return lines_; }

  void print(std::ostream& os) const {
    for (const auto& line : lines_) {
      os << (line.ok ? "OK   " : "FAIL ") << line.law << ' ' << line.subject;
      if (!line.detail.empty()) os << ' ' << line.detail;
      os << '\n';
    }
  }

private:
  std::vector<ReportLine> lines_;
};

} // namespace mvdual
