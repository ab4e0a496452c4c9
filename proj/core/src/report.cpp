#include "chartwo/report.hpp"

namespace chartwo {

void Reporter::check(const std::string& id, bool ok, KeyValues kv) {
  if (ok) {
    pass(id, std::move(kv));
  } else {
    fail(id, std::move(kv));
  }
}

void Reporter::pass(const std::string& id, KeyValues kv) {
  lines_.push_back({id, ReportLine::Status::kPass, std::move(kv)});
}

void Reporter::fail(const std::string& id, KeyValues kv) {
  lines_.push_back({id, ReportLine::Status::kFail, std::move(kv)});
  ++fail_count_;
}

void Reporter::info(const std::string& id, KeyValues kv) {
  lines_.push_back({id, ReportLine::Status::kInfo, std::move(kv)});
}

void Reporter::print(std::ostream& os) const {
  for (const ReportLine& line : lines_) {
    os << "CHECK " << line.id << ' ';
    switch (line.status) {
      case ReportLine::Status::kPass: os << "PASS"; break;
      case ReportLine::Status::kFail: os << "FAIL"; break;
      case ReportLine::Status::kInfo: os << "INFO"; break;
    }
    for (const auto& [key, value] : line.details) {
      os << ' ' << key << '=' << value;
    }
    os << '\n';
  }
}

}  // namespace chartwo
