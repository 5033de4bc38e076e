#ifndef GENHANKEL_ERROR_HPP
#define GENHANKEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace genhankel {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure could not reach its target accuracy (quadrature
/// refinement cap, evaluation outside the validated region, oracle remainder).
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace genhankel

#endif
