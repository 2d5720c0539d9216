#ifndef AGW_SOURCE_LOCATION_HPP
#define AGW_SOURCE_LOCATION_HPP

#include <string>

namespace agw {

// 1-based line/column position inside a grammar file (or an in-memory buffer,
// in which case `file` carries the origin label passed to the frontend).
struct SourceLocation {
  std::string file;
  int line = 0;
  int column = 0;

  std::string to_string() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

// A single parse/validation finding. `code` is a short stable identifier
// (R1..R4 for the structural grammar restrictions, E* for everything else).
struct Diagnostic {
  std::string code;
  std::string message;
  SourceLocation loc;

  std::string to_string() const {
    return loc.to_string() + ": [" + code + "] " + message;
  }
};

}  // namespace agw

#endif  // AGW_SOURCE_LOCATION_HPP
