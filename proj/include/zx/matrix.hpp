#pragma once

#include "zx/angle.hpp"
#include "zx/errors.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace zx {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Semantic outputs have rows = 2^outputs and
// cols = 2^inputs.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex> entries;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    static CMatrix identity(std::size_t n);

    Complex& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    bool operator==(const CMatrix&) const = default;
};

// Kronecker product; row index of the result is a_row * b.rows + b_row.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Standard product; throws ShapeMismatchError unless a.cols == b.rows.
CMatrix matmul(const CMatrix& a, const CMatrix& b);

CMatrix matadd(const CMatrix& a, const CMatrix& b);
CMatrix transposed(const CMatrix& a);
CMatrix conj_transposed(const CMatrix& a);
CMatrix scaled(const CMatrix& a, Complex factor);

double max_abs(const CMatrix& a);
// Largest entrywise |a - b|; throws ShapeMismatchError on shape disagreement.
double max_abs_diff(const CMatrix& a, const CMatrix& b);
bool approx_equal(const CMatrix& a, const CMatrix& b, double tol);

// (1/sqrt 2) [[1, 1], [1, -1]]
CMatrix hadamard();
// k-fold Kronecker power of H; k = 0 gives the 1x1 identity.
CMatrix hadamard_power(std::size_t k);

// Z-spider matrix built directly: zeros except (0,0) = 1 and
// (2^m-1, 2^n-1) = e^{i a}; the two coincide when n = m = 0, where the single
// entry is 1 + e^{i a}.
CMatrix z_matrix_direct(std::size_t n, std::size_t m, Angle a);

// The same matrix assembled literally from Kronecker powers of basis vectors
// and outer products.
CMatrix z_matrix_braket(std::size_t n, std::size_t m, Angle a);

// "rows cols" line followed by row-major "a+bi" entries, 17 significant
// digits.
std::string dump(const CMatrix& a);

std::string format_complex(Complex value);

} // namespace zx
