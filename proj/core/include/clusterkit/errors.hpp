// Error taxonomy. Every failure mode carries a stable name so that the CLI can
// surface structured diagnostics and tests can assert on the exact condition.
#pragma once

#include <stdexcept>
#include <string>

namespace ck {

class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define CK_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                      \
    public:                                                          \
        explicit NAME(const std::string& what) : Error(#NAME, what) {} \
    }

CK_DEFINE_ERROR(NotSignSkewSymmetric);
CK_DEFINE_ERROR(NotDivisible);
CK_DEFINE_ERROR(NotHomogeneous);
CK_DEFINE_ERROR(RecurrenceMismatch);
CK_DEFINE_ERROR(NotALaurentPolynomial);
CK_DEFINE_ERROR(InvariantViolation);
CK_DEFINE_ERROR(NegativeA);
CK_DEFINE_ERROR(NonLattice);
CK_DEFINE_ERROR(PointOutside);
CK_DEFINE_ERROR(SignUndefined);
CK_DEFINE_ERROR(RouteMismatch);
CK_DEFINE_ERROR(IdentityViolation);
CK_DEFINE_ERROR(CorrelationAmbiguous);
CK_DEFINE_ERROR(FacetNotFound);
CK_DEFINE_ERROR(FaceTestFailure);
CK_DEFINE_ERROR(ContainmentViolation);
CK_DEFINE_ERROR(WellDefinednessViolation);
CK_DEFINE_ERROR(VariableNotInCatalog);
CK_DEFINE_ERROR(OutOfScope);
CK_DEFINE_ERROR(DepthExceeded);
CK_DEFINE_ERROR(ConnectivityViolation);
CK_DEFINE_ERROR(TermLimitExceeded);
CK_DEFINE_ERROR(UsageError);

#undef CK_DEFINE_ERROR

} // namespace ck
