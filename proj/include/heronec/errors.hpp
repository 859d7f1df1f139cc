#pragma once

#include <stdexcept>
#include <string>

namespace heronec {

// Common base so callers (and the CLI exit-code mapping) can catch everything
// the library throws in one place.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Parse failures for integers, rationals and JSON payloads.
struct ParseError : Error {
    using Error::Error;
};

// Discriminant vanished where a nonsingular curve was required.
struct SingularCurveError : Error {
    using Error::Error;
};

// Affine coordinates that do not satisfy the curve equation.
struct PointNotOnCurveError : Error {
    using Error::Error;
};

// Group-law arguments bound to different curve models.
struct CrossCurveError : Error {
    using Error::Error;
};

// Reduction mod p requested at a prime of bad reduction (or p | 6).
struct BadReductionError : Error {
    using Error::Error;
};

// Family parameter hit one of its excluded values (k = 0, +-2 and friends).
struct ForbiddenParameterError : Error {
    using Error::Error;
};

// Geometric side lengths that violate positivity, the strict polygon
// inequalities, or the Pitot condition.
struct ConstraintError : Error {
    using Error::Error;
};

// Sastry parameters that produce a vanishing side or unfixable mixed signs.
struct DegenerateParametersError : Error {
    using Error::Error;
};

// Triangle handed to the area-as-n construction has irrational area.
struct TriangleAreaIrrationalError : Error {
    using Error::Error;
};

// Height computation could not reach the requested error bound within the
// configured doubling/bit-size budget.
struct PrecisionExhaustedError : Error {
    using Error::Error;
};

// Factorization gave up; carries the offending cofactor in the message.
struct FactorizationError : Error {
    using Error::Error;
};

// Fifth parameter supplied to the biquadrate family without satisfying
// A^4 + D^4 = 2(B^4 + C^4).
struct QuarticConditionFailedError : Error {
    using Error::Error;
};

// (u, v) supplied to the sextic family without solving the sextic system.
struct SexticSystemFailedError : Error {
    using Error::Error;
};

// Quadrilateral-to-curve construction needs pairwise distinct sides.
struct SidesNotDistinctError : Error {
    using Error::Error;
};

// The D(1) square identities of the triple (k-1, k+1, 4k) failed; this is an
// algebraic identity, so seeing it means the construction itself is broken.
struct DPropertyFailedError : Error {
    using Error::Error;
};

}  // namespace heronec
