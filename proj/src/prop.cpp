#include "zx/prop.hpp"

#include "zx/semantics.hpp"

#include <cmath>

namespace zx {

PropResult proportional_matrices(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows != b.rows || a.cols != b.cols) {
        return {PropVerdict::ShapeMismatch, {}, "shapes differ"};
    }

    std::size_t pivot = 0;
    double pivot_abs = 0.0;
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
        const double v = std::abs(b.entries[i]);
        if (v > pivot_abs) {
            pivot_abs = v;
            pivot = i;
        }
    }

    if (pivot_abs <= tol) {
        // b is numerically zero; proportional only to another zero matrix.
        if (max_abs(a) <= tol) {
            return {PropVerdict::Proportional, Complex{1.0, 0.0}, ""};
        }
        return {PropVerdict::NotProportional, {}, "rhs is zero, lhs is not"};
    }

    const Complex c = a.entries[pivot] / b.entries[pivot];
    if (std::abs(c) <= tol) {
        return {PropVerdict::NotProportional, {}, "witness would be zero"};
    }
    const double allowance = tol * std::max(1.0, max_abs(a));
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        if (std::abs(a.entries[i] - c * b.entries[i]) > allowance) {
            return {PropVerdict::NotProportional, {},
                    "entry " + std::to_string(i / a.cols) + "," + std::to_string(i % a.cols) +
                        " off by " + std::to_string(std::abs(a.entries[i] - c * b.entries[i]))};
        }
    }
    return {PropVerdict::Proportional, c, ""};
}

PropResult proportional(const Diagram& d0, const Diagram& d1, double tol) {
    if (dims(d0) != dims(d1)) {
        return {PropVerdict::ShapeMismatch, {}, "dims differ"};
    }
    return proportional_matrices(eval(d0), eval(d1), tol);
}

} // namespace zx
