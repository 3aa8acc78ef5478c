#ifndef PADISC_ERRORS_HPP
#define PADISC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace padisc {

// Domain errors: the inputs are outside the mathematical domain of the
// operation.  The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ZeroVector : public DomainError {
public:
    ZeroVector() : DomainError("zero vector") {}
};

class NotASquare : public DomainError {
public:
    explicit NotASquare(const std::string& what = "not a square")
        : DomainError(what) {}
};

class NotInDisc : public DomainError {
public:
    explicit NotInDisc(const std::string& what = "point is not in the disc")
        : DomainError(what) {}
};

class NotLongLine : public DomainError {
public:
    explicit NotLongLine(const std::string& what = "line is not long")
        : DomainError(what) {}
};

class SamePoint : public DomainError {
public:
    SamePoint() : DomainError("the two points coincide on the sphere") {}
};

class ZeroDenominator : public DomainError {
public:
    ZeroDenominator() : DomainError("cross-ratio denominator vanishes") {}
};

class SingularBasis : public DomainError {
public:
    SingularBasis() : DomainError("lattice basis is singular") {}
};

class EqualBoundaryPoints : public DomainError {
public:
    EqualBoundaryPoints() : DomainError("boundary points coincide") {}
};

class OddValuationAlpha : public DomainError {
public:
    OddValuationAlpha()
        : DomainError("tree projection requires a class of even valuation") {}
};

class OddPrimeOnly : public DomainError {
public:
    OddPrimeOnly()
        : DomainError("closed-form distance requires an odd prime") {}
};

class DegenerateRadii : public DomainError {
public:
    DegenerateRadii() : DomainError("circle radius must be nonzero") {}
};

class NotInPerp : public DomainError {
public:
    NotInPerp()
        : DomainError("direction is not orthogonal to the base point") {}
};

// The big-cell triangular decomposition does not exist for this element.
class ChartFailure : public DomainError {
public:
    explicit ChartFailure(const std::string& what) : DomainError(what) {}
};

// Raised when a finite-precision computation cannot be stabilized even at
// the precision cap.  The CLI maps this to exit code 3.
class PrecisionExhausted : public std::runtime_error {
public:
    explicit PrecisionExhausted(const std::string& what)
        : std::runtime_error(what) {}
};

// Bad flags / malformed CLI input.  The CLI maps this to exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace padisc

#endif
