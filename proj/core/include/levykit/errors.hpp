#pragma once

#include <stdexcept>
#include <string>

namespace levykit {

// Two error classes drive the CLI exit codes: bad inputs (exit 2) and
// numerical failures (exit 3).
class Error : public std::runtime_error {
public:
    enum class Kind { validation, numerical };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(Kind::validation, what) {}
};
struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(Kind::numerical, what) {}
};

struct UnknownFamilyError : ValidationError {
    explicit UnknownFamilyError(const std::string& what) : ValidationError(what) {}
};
struct ParamOutOfRangeError : ValidationError {
    explicit ParamOutOfRangeError(const std::string& what) : ValidationError(what) {}
};
struct OutsideDomainError : ValidationError {
    explicit OutsideDomainError(const std::string& what) : ValidationError(what) {}
};
struct NotRotInvariantError : ValidationError {
    explicit NotRotInvariantError(const std::string& what) : ValidationError(what) {}
};
struct NotDifferentiableError : ValidationError {
    explicit NotDifferentiableError(const std::string& what) : ValidationError(what) {}
};
struct CodomainViolationError : ValidationError {
    explicit CodomainViolationError(const std::string& what) : ValidationError(what) {}
};
struct MissingIndexMapError : ValidationError {
    explicit MissingIndexMapError(const std::string& what) : ValidationError(what) {}
};
struct HypothesisViolatedError : ValidationError {
    explicit HypothesisViolatedError(const std::string& what) : ValidationError(what) {}
};
struct GridMismatchError : ValidationError {
    explicit GridMismatchError(const std::string& what) : ValidationError(what) {}
};
struct ConvolutionUnderflowError : ValidationError {
    explicit ConvolutionUnderflowError(const std::string& what) : ValidationError(what) {}
};

struct BranchAmbiguityError : NumericalError {
    explicit BranchAmbiguityError(const std::string& what) : NumericalError(what) {}
};
struct DomainViolationError : NumericalError {
    explicit DomainViolationError(const std::string& what) : NumericalError(what) {}
};
struct TolUnreachableError : NumericalError {
    explicit TolUnreachableError(const std::string& what) : NumericalError(what) {}
};
struct CdfNotMonotoneError : NumericalError {
    explicit CdfNotMonotoneError(const std::string& what) : NumericalError(what) {}
};
struct BoundaryLeakError : NumericalError {
    explicit BoundaryLeakError(const std::string& what) : NumericalError(what) {}
};

}  // namespace levykit
