#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdet {

/// Base of every library error. Carries a stable machine-readable code and,
/// where meaningful, the offending 1-based block or entry indices.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message, std::vector<long> indices = {})
        : std::runtime_error(message), code_(std::move(code)), indices_(std::move(indices)) {}

    const std::string& code() const noexcept { return code_; }
    const std::vector<long>& indices() const noexcept { return indices_; }

private:
    std::string code_;
    std::vector<long> indices_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& message, std::vector<long> indices = {})
        : Error("dimension-mismatch", message, std::move(indices)) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& message, std::vector<long> indices = {})
        : Error("index-out-of-range", message, std::move(indices)) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& message, std::vector<long> indices = {})
        : Error("not-invertible", message, std::move(indices)) {}
};

struct ZeroDivision : Error {
    explicit ZeroDivision(const std::string& message)
        : Error("zero-division", message) {}
};

struct DegenerateResult : Error {
    explicit DegenerateResult(const std::string& message)
        : Error("degenerate-result", message) {}
};

struct InvalidSplit : Error {
    explicit InvalidSplit(const std::string& message, std::vector<long> indices = {})
        : Error("invalid-split", message, std::move(indices)) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& message)
        : Error("cap-exceeded", message) {}
};

struct TriangularityError : Error {
    explicit TriangularityError(const std::string& message, std::vector<long> indices = {})
        : Error("triangularity", message, std::move(indices)) {}
};

struct ShapeError : Error {
    explicit ShapeError(const std::string& message, std::vector<long> indices = {})
        : Error("shape", message, std::move(indices)) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& message)
        : Error("parse", message) {}
};

}  // namespace qdet
