#pragma once

#include "zx/diagram.hpp"
#include "zx/matrix.hpp"

#include <string>

namespace zx {

inline constexpr double kDefaultTol = 1e-9;

enum class PropVerdict { Proportional, NotProportional, ShapeMismatch };

struct PropResult {
    PropVerdict verdict = PropVerdict::NotProportional;
    Complex factor{}; // witness c with a = c * b, valid when Proportional
    std::string reason;

    bool is_proportional() const { return verdict == PropVerdict::Proportional; }
};

// Decides whether a = c * b for some nonzero complex c, returning the witness.
// The candidate c is read off at b's max-modulus entry; the residual check is
// relative to max(1, maxabs(a)). Two matrices that are both numerically zero
// count as proportional with witness 1; zero against nonzero does not.
PropResult proportional_matrices(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

PropResult proportional(const Diagram& d0, const Diagram& d1, double tol = kDefaultTol);

} // namespace zx
