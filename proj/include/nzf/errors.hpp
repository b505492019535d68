#pragma once

#include <stdexcept>
#include <string>

namespace nzf {

// Error messages start with a stable machine-parsable slug ("bridge: ...",
// "parse: ...") so the CLI can forward them verbatim.

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error("parse: " + msg + " (byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error("schema: " + msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error("shape: " + msg) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error("data: " + msg) {}
};

struct InvalidFlowError : std::runtime_error {
    explicit InvalidFlowError(const std::string& msg)
        : std::runtime_error("invalid-flow: " + msg) {}
};

struct InvalidTriangulationError : std::runtime_error {
    explicit InvalidTriangulationError(const std::string& msg)
        : std::runtime_error("invalid-triangulation: " + msg) {}
};

struct TimeoutError : std::runtime_error {
    explicit TimeoutError(const std::string& msg) : std::runtime_error("timeout: " + msg) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error("internal: " + msg) {}
};

}  // namespace nzf
