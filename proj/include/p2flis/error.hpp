#pragma once

#include <stdexcept>
#include <string>

namespace p2flis {

/// Failure categories; the CLI maps these onto process exit codes.
enum class ErrorKind {
  Invalid = 1,     // bad input value, malformed file, invalid patch
  Usage = 2,       // unknown name or flag combination
  Budget = 3,      // node or time limit hit
  Structural = 4,  // an observed structure contradicts an expected property
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace p2flis
