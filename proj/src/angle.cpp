#include "zx/angle.hpp"

#include "zx/errors.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>

namespace zx {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

Angle Angle::rational(std::int64_t num, std::int64_t den) {
    if (den <= 0) {
        throw DimError("angle denominator must be positive, got " + std::to_string(den));
    }
    // Reduce the value into [0, 2*pi): num modulo 2*den, made non-negative.
    const std::int64_t period = 2 * den;
    num %= period;
    if (num < 0) {
        num += period;
    }
    const std::int64_t g = std::gcd(num, den);
    Angle a;
    a.num_ = num / g;
    a.den_ = den / g;
    a.exact_ = true;
    return a;
}

Angle Angle::radians(double value) {
    double v = std::fmod(value, kTwoPi);
    if (v < 0) {
        v += kTwoPi;
    }
    Angle a;
    a.exact_ = false;
    a.radians_ = v;
    return a;
}

double Angle::value() const {
    if (exact_) {
        return static_cast<double>(num_) * M_PI / static_cast<double>(den_);
    }
    return radians_;
}

Angle Angle::operator+(const Angle& rhs) const {
    if (exact_ && rhs.exact_) {
        // num/den + num'/den' over the common denominator; rational() renormalizes.
        return rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    }
    return radians(value() + rhs.value());
}

Angle Angle::operator-() const {
    if (exact_) {
        return rational(-num_, den_);
    }
    return radians(-radians_);
}

bool Angle::operator==(const Angle& rhs) const {
    if (exact_ != rhs.exact_) {
        return false;
    }
    if (exact_) {
        return num_ == rhs.num_ && den_ == rhs.den_;
    }
    return radians_ == rhs.radians_;
}

std::string Angle::str() const {
    if (!exact_) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17grad", radians_);
        return buf;
    }
    if (num_ == 0) {
        return "0";
    }
    std::string head = num_ == 1 ? "pi" : std::to_string(num_) + "pi";
    if (den_ == 1) {
        return head;
    }
    return head + "/" + std::to_string(den_);
}

std::size_t Angle::hash() const {
    if (exact_) {
        std::size_t h = std::hash<std::int64_t>{}(num_);
        h = h * 1000003u ^ std::hash<std::int64_t>{}(den_);
        return h;
    }
    return std::hash<double>{}(radians_) ^ 0x9e3779b97f4a7c15ull;
}

} // namespace zx
