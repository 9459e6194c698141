#pragma once
#include <string>
#include <utility>
#include <vector>

namespace cremona {

// Human-readable conclusion of a structural computation, with the witnesses
// that back it up. `anchor` is a stable slug naming the family of statements
// so tools can match on it without parsing prose.
struct Report {
  std::string statement;
  std::string anchor;
  std::vector<std::pair<std::string, std::string>> witness;

  std::string text() const;
  std::string json() const;
};

} // namespace cremona
