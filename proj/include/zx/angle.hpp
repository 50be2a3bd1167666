#pragma once

#include <cstdint>
#include <string>

namespace zx {

// Spider phase. By default an exact rational multiple of pi, kept normalized:
// gcd(|num|, den) = 1 and the value reduced into [0, 2*pi). Inexact radian
// values are supported but carry an exact=false flag; exactness survives
// arithmetic only when both operands are exact.
class Angle {
public:
    Angle() = default; // exact zero

    static Angle zero() { return {}; }
    static Angle pi() { return rational(1, 1); }
    // (num/den) * pi, normalized. den must be positive.
    static Angle rational(std::int64_t num, std::int64_t den);
    static Angle radians(double value);

    bool is_exact() const { return exact_; }
    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    // Value in radians, in [0, 2*pi).
    double value() const;

    Angle operator+(const Angle& rhs) const;
    Angle operator-() const;
    bool operator==(const Angle& rhs) const;
    bool operator!=(const Angle& rhs) const { return !(*this == rhs); }

    // Text-format spelling: "0", "pi", "3pi/4", "1.5rad", ...
    std::string str() const;

    std::size_t hash() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    double radians_ = 0.0; // used only when !exact_
    bool exact_ = true;
};

} // namespace zx
