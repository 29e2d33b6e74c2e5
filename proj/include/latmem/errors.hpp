#pragma once

#include <stdexcept>
#include <string>

namespace latmem {

// Contract violations on caller inputs. The CLI maps these to exit code 2.
struct ContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RankDeficient : ContractError {
    RankDeficient() : ContractError("basis columns are linearly dependent") {}
};
struct Singular : ContractError {
    Singular() : ContractError("matrix is singular") {}
};
struct NotPositiveDefinite : ContractError {
    NotPositiveDefinite() : ContractError("form is not positive definite") {}
};
struct NegativeRadicand : ContractError {
    NegativeRadicand() : ContractError("negative radicand") {}
};
struct DependentNormals : ContractError {
    DependentNormals() : ContractError("hyperplane normals are linearly dependent") {}
};
struct DependentInput : ContractError {
    DependentInput() : ContractError("hyperplane normal lies in the span of the subspace normals") {}
};
struct Degenerate : ContractError {
    Degenerate() : ContractError("polytope is not full-dimensional") {}
};
struct TargetOutsideSpan : ContractError {
    TargetOutsideSpan() : ContractError("target vector is outside the lattice span") {}
};
struct ZeroSubgradientOutside : ContractError {
    ZeroSubgradientOutside() : ContractError("zero subgradient at an outside point (empty body)") {}
};
struct DimensionLimit : ContractError {
    explicit DimensionLimit(std::size_t n, std::size_t lim)
        : ContractError("instance dimension " + std::to_string(n) +
                        " exceeds the configured limit " + std::to_string(lim)) {}
};

// Oracle enumeration gave up. Exit code 3.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("enumeration budget exceeded") {}
};

// Internal certified invariant failed; indicates a bug, never an input problem.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check(bool cond, const char* what) {
    if (!cond) throw InternalError(what);
}

}  // namespace latmem
