// Exception hierarchy shared by the whole library.  Every failure mode the
// library can report is a subclass of Error; what() carries the detail and
// kind() a stable machine-readable tag.
#pragma once

#include <stdexcept>
#include <string>

namespace bidiag {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define BIDIAG_ERROR_KIND(Name)                                       \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}  \
    }

BIDIAG_ERROR_KIND(ParseError);
BIDIAG_ERROR_KIND(DimensionMismatch);
BIDIAG_ERROR_KIND(Singular);
BIDIAG_ERROR_KIND(NotInvariant);
BIDIAG_ERROR_KIND(NotDiagonalizable);
BIDIAG_ERROR_KIND(NoStandardOrdering);
BIDIAG_ERROR_KIND(DiameterMismatch);
BIDIAG_ERROR_KIND(BijectionFails);
BIDIAG_ERROR_KIND(NotBRecurrent);
BIDIAG_ERROR_KIND(NotSegregated);
BIDIAG_ERROR_KIND(NotReduced);
BIDIAG_ERROR_KIND(NotValid);
BIDIAG_ERROR_KIND(InvalidQ);
BIDIAG_ERROR_KIND(RelationViolation);
BIDIAG_ERROR_KIND(Unrepresentable);
BIDIAG_ERROR_KIND(PreconditionFailed);
BIDIAG_ERROR_KIND(InternalInvariantViolation);

#undef BIDIAG_ERROR_KIND

}  // namespace bidiag
