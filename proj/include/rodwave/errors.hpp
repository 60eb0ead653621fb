#pragma once

#include <stdexcept>
#include <string>

namespace rodwave {

/// Base of every library error. `kind()` is the stable error name used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define RODWAVE_ERROR(Name)                                                                 \
    class Name : public Error {                                                             \
    public:                                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}                      \
    }

RODWAVE_ERROR(InvalidConstants);
RODWAVE_ERROR(ZeroPoissonRatio);
RODWAVE_ERROR(DivisionNearPole);
RODWAVE_ERROR(DomainError);
RODWAVE_ERROR(ConstraintViolated);
RODWAVE_ERROR(DegenerateDenominator);
RODWAVE_ERROR(SingularPoint);
RODWAVE_ERROR(GateViolated);
RODWAVE_ERROR(IncompleteAssignment);
RODWAVE_ERROR(UnknownFamily);

#undef RODWAVE_ERROR

}  // namespace rodwave
