#pragma once

#include <stdexcept>
#include <string>

namespace lnqec {

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct RankDeficient : std::runtime_error {
    explicit RankDeficient(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroMatrix : std::runtime_error {
    explicit ZeroMatrix(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct LengthMismatch : std::runtime_error {
    explicit LengthMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DistanceViolation : std::runtime_error {
    explicit DistanceViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NoRedundantRows : std::runtime_error {
    explicit NoRedundantRows(const std::string& what) : std::runtime_error(what) {}
};

struct NoCodewords : std::runtime_error {
    explicit NoCodewords(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotProductState : std::runtime_error {
    explicit NotProductState(const std::string& what) : std::runtime_error(what) {}
};

// Signals a broken internal invariant, e.g. a block matrix that the
// construction guarantees to be invertible turning out singular.
struct InternalRankError : std::logic_error {
    explicit InternalRankError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lnqec
