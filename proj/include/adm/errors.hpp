#pragma once

#include <stdexcept>
#include <string>

namespace adm {

// Invalid probability, interval, or configuration value.
class DomainError : public std::invalid_argument {
public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Fixed-backend interval width collapsed below one register ulp.
class UnderflowError : public std::runtime_error {
public:
  explicit UnderflowError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed framed block (bad magic, bad version, overflowing field).
class FrameError : public std::runtime_error {
public:
  explicit FrameError(const std::string& what) : std::runtime_error(what) {}
};

// Codeword exhausted before the full source word was recovered.
class TruncatedError : public std::runtime_error {
public:
  explicit TruncatedError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant; signals a defect, not bad input.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace adm
