#pragma once

#include <stdexcept>
#include <string>

namespace stabctab {

/* Every failure raised by the library derives from Error. The concrete
 * subclasses are thin tags so that callers (and tests) can dispatch on the
 * condition without parsing messages. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define STABCTAB_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

// series
STABCTAB_DEFINE_ERROR(OrderMismatch);
STABCTAB_DEFINE_ERROR(NotInvertible);
STABCTAB_DEFINE_ERROR(BadFactorBound);
STABCTAB_DEFINE_ERROR(OutOfOrder);
STABCTAB_DEFINE_ERROR(LaurentBoundViolated);

// genfunc / perverse
STABCTAB_DEFINE_ERROR(InvalidSurface);
STABCTAB_DEFINE_ERROR(InternalIdentityFailure);
STABCTAB_DEFINE_ERROR(InconsistentTower);

// germ
STABCTAB_DEFINE_ERROR(ParseError);
STABCTAB_DEFINE_ERROR(InvalidGerm);
STABCTAB_DEFINE_ERROR(NonIsolatedSingularity);
STABCTAB_DEFINE_ERROR(InvalidBranch);
STABCTAB_DEFINE_ERROR(TruncationTooSmall);
STABCTAB_DEFINE_ERROR(EmptyBranchSet);

// nslattice
STABCTAB_DEFINE_ERROR(InvalidLattice);
STABCTAB_DEFINE_ERROR(NotEffectiveCandidate);
STABCTAB_DEFINE_ERROR(BasisDenominatorError);
STABCTAB_DEFINE_ERROR(EnumerationTooLarge);
STABCTAB_DEFINE_ERROR(InvalidSelfIntersection);
STABCTAB_DEFINE_ERROR(InvalidParameters);

#undef STABCTAB_DEFINE_ERROR

}  // namespace stabctab
