#pragma once

#include <stdexcept>
#include <string>

namespace shoda {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct MalformedSpec : std::runtime_error {
  explicit MalformedSpec(const std::string& msg) : std::runtime_error(msg) {}
};

// a multiplication table failed the Latin-square / associativity audit
struct NotClosed : std::runtime_error {
  explicit NotClosed(const std::string& msg) : std::runtime_error(msg) {}
};

// a builtin constructor produced a table violating one of its defining relations
struct ConstructionInvalid : std::runtime_error {
  explicit ConstructionInvalid(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotScalarMultiple : std::runtime_error {
  explicit NotScalarMultiple(const std::string& msg) : std::runtime_error(msg) {}
};

struct IdempotencyFailure : std::runtime_error {
  explicit IdempotencyFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct AuditFailure : std::runtime_error {
  explicit AuditFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedFormat : std::runtime_error {
  explicit UnsupportedFormat(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace shoda
