#include "verify/report.hpp"

#include <algorithm>
#include <sstream>

namespace vmeasure::verify {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

std::string Report::text() const {
  std::ostringstream os;
  os << "# " << title << "\n";
  for (const auto& [key, value] : summary.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  std::string current;
  bool first = true;
  for (const auto& r : records) {
    if (first || r.scenario != current) {
      os << "== " << r.scenario << "\n";
      current = r.scenario;
      first = false;
    }
    os << (r.pass ? "PASS " : "FAIL ") << r.check << "\n";
    for (const auto& row : r.rows) os << "    " << row.dump() << "\n";
    if (!r.pass && !r.witness.is_null()) os << "  witness: " << r.witness.dump() << "\n";
  }
  os << "-- " << records.size() << " checks, " << records.size() - failures() << " passed, "
     << failures() << " failed\n";
  os << (passed() ? "RESULT PASS" : "RESULT FAIL") << "\n";
  return os.str();
}

std::string Report::json() const {
  Json j;
  j["title"] = title;
  j["summary"] = summary;
  j["records"] = Json::array();
  for (const auto& r : records) {
    Json rec{{"scenario", r.scenario}, {"check", r.check}, {"verdict", r.pass ? "PASS" : "FAIL"},
             {"rows", r.rows}};
    if (!r.pass) rec["witness"] = r.witness;
    j["records"].push_back(std::move(rec));
  }
  j["checks"] = records.size();
  j["failures"] = failures();
  j["result"] = passed() ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

}  // namespace vmeasure::verify
