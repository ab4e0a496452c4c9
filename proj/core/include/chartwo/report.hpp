#ifndef CHARTWO_REPORT_HPP
#define CHARTWO_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace chartwo {

/// One verification line: `CHECK <dotted.id> <PASS|FAIL|INFO> key=value ...`.
/// Lines print in insertion order and carry no timing, so a fixed invocation
/// is byte-identical across runs and thread counts.
struct ReportLine {
  enum class Status { kPass, kFail, kInfo };

  std::string id;
  Status status = Status::kInfo;
  std::vector<std::pair<std::string, std::string>> details;
};

class Reporter {
 public:
  using KeyValues = std::vector<std::pair<std::string, std::string>>;

  void check(const std::string& id, bool ok, KeyValues kv = {});
  void pass(const std::string& id, KeyValues kv = {});
  void fail(const std::string& id, KeyValues kv = {});
  void info(const std::string& id, KeyValues kv = {});

  bool all_passed() const { return fail_count_ == 0; }
  std::size_t fail_count() const { return fail_count_; }
  const std::vector<ReportLine>& lines() const { return lines_; }

  /// 0 when every check passed, 1 otherwise (input errors never get here;
  /// they surface as exceptions and exit code 2 in the driver).
  int exit_code() const { return all_passed() ? 0 : 1; }

  void print(std::ostream& os) const;

 private:
  std::vector<ReportLine> lines_;
  std::size_t fail_count_ = 0;
};

}  // namespace chartwo

#endif  // CHARTWO_REPORT_HPP
