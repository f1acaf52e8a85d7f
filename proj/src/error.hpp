#pragma once

#include <stdexcept>
#include <string>

namespace gapflow {

enum class ErrorCode {
  domain,      // argument outside the mathematical domain
  validation,  // malformed input (bad gap sequence, bad knots, bad JSON)
  capacity,    // frequency beyond the 2^62 cap
  numeric,     // quadrature or search failed to converge
  config,      // inconsistent experiment configuration (e.g. split M too small)
  io,          // file / parse errors surfaced through the C API
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace gapflow
