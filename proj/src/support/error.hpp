#pragma once

#include <stdexcept>
#include <string>

namespace tg {

// Coarse error classification; mirrored by the tg_status codes of the C API.
enum class ErrorKind {
  Io,
  Syntax,
  Unsupported,
  Elaboration,
  Graph,
  Injection,
  Config,
  Dataset,
  Format,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error syntax_error(const std::string& path, int line, int col,
                          const std::string& message) {
  return Error(ErrorKind::Syntax, path + ":" + std::to_string(line) + ":" +
                                      std::to_string(col) + ": " + message);
}

inline Error unsupported_construct(const std::string& feature,
                                   const std::string& path, int line, int col) {
  return Error(ErrorKind::Unsupported,
               path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                   ": unsupported construct: " + feature);
}

}  // namespace tg
