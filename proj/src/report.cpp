#include "cremona/report.hpp"

#include <sstream>

#include "json.hpp"

namespace cremona {

std::string Report::text() const {
  std::ostringstream out;
  out << statement << "\n";
  for (auto& [k, v] : witness) out << "  " << k << ": " << v << "\n";
  return out.str();
}

std::string Report::json() const {
  nlohmann::json j;
  j["statement"] = statement;
  j["anchor"] = anchor;
  nlohmann::json w = nlohmann::json::object();
  for (auto& [k, v] : witness) w[k] = v;
  j["witness"] = w;
  return j.dump(2);
}

} // namespace cremona
