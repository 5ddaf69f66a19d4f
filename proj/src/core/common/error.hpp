#pragma once

#include <stdexcept>
#include <string>

namespace gambitlab {

// Exit codes shared by the library, the C API and the CLI.
enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,   // also: selfcheck failure
    kConfigError = 2,
    kEngineError = 3,
    kCorpusError = 4,
    kPartialFailure = 5,  // rank completed with per-gambit failures
};

class Error : public std::runtime_error {
  public:
    Error(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    int code() const { return code_; }

  private:
    int code_;
};

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& msg) : Error(kConfigError, msg) {}
};

class EngineError : public Error {
  public:
    explicit EngineError(const std::string& msg) : Error(kEngineError, msg) {}
};

class CorpusError : public Error {
  public:
    explicit CorpusError(const std::string& msg) : Error(kCorpusError, msg) {}
};

}  // namespace gambitlab
