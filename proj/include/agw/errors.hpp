#ifndef AGW_ERRORS_HPP
#define AGW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace agw {

// Error taxonomy mirrored by the CLI exit codes: Domain -> 1, Io/Config -> 2.
enum class ErrorKind { Domain, Io, Config };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error domain_error(std::string message) {
  return Error(ErrorKind::Domain, std::move(message));
}
inline Error io_error(std::string message) {
  return Error(ErrorKind::Io, std::move(message));
}
inline Error config_error(std::string message) {
  return Error(ErrorKind::Config, std::move(message));
}

}  // namespace agw

#endif  // AGW_ERRORS_HPP
