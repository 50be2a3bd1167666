#include "zx/matrix.hpp"

#include <cmath>
#include <cstdio>

namespace zx {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(i, i) = 1.0;
    }
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t ar = 0; ar < a.rows; ++ar) {
        for (std::size_t ac = 0; ac < a.cols; ++ac) {
            const Complex f = a.at(ar, ac);
            if (f == Complex{}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows; ++br) {
                for (std::size_t bc = 0; bc < b.cols; ++bc) {
                    out.at(ar * b.rows + br, ac * b.cols + bc) = f * b.at(br, bc);
                }
            }
        }
    }
    return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols != b.rows) {
        throw ShapeMismatchError("matmul " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                                 " * " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
    }
    CMatrix out(a.rows, b.cols);
    // Spider and permutation matrices are mostly exact zeros; skipping them
    // keeps large compositions affordable.
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Complex f = a.at(i, k);
            if (f == Complex{}) {
                continue;
            }
            const Complex* brow = &b.entries[k * b.cols];
            Complex* orow = &out.entries[i * b.cols];
            for (std::size_t j = 0; j < b.cols; ++j) {
                orow[j] += f * brow[j];
            }
        }
    }
    return out;
}

CMatrix matadd(const CMatrix& a, const CMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw ShapeMismatchError("matadd shapes differ");
    }
    CMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i] += b.entries[i];
    }
    return out;
}

CMatrix transposed(const CMatrix& a) {
    CMatrix out(a.cols, a.rows);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) {
            out.at(c, r) = a.at(r, c);
        }
    }
    return out;
}

CMatrix conj_transposed(const CMatrix& a) {
    CMatrix out(a.cols, a.rows);
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) {
            out.at(c, r) = std::conj(a.at(r, c));
        }
    }
    return out;
}

CMatrix scaled(const CMatrix& a, Complex factor) {
    CMatrix out = a;
    for (auto& e : out.entries) {
        e *= factor;
    }
    return out;
}

double max_abs(const CMatrix& a) {
    double best = 0.0;
    for (const auto& e : a.entries) {
        best = std::max(best, std::abs(e));
    }
    return best;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        throw ShapeMismatchError("max_abs_diff shapes differ");
    }
    double best = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        best = std::max(best, std::abs(a.entries[i] - b.entries[i]));
    }
    return best;
}

bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
    return a.rows == b.rows && a.cols == b.cols && max_abs_diff(a, b) <= tol;
}

CMatrix hadamard() {
    CMatrix h(2, 2);
    h.at(0, 0) = M_SQRT1_2;
    h.at(0, 1) = M_SQRT1_2;
    h.at(1, 0) = M_SQRT1_2;
    h.at(1, 1) = -M_SQRT1_2;
    return h;
}

CMatrix hadamard_power(std::size_t k) {
    CMatrix acc = CMatrix::identity(1);
    for (std::size_t i = 0; i < k; ++i) {
        acc = kron(acc, hadamard());
    }
    return acc;
}

namespace {

Complex phase_factor(Angle a) {
    const double v = a.value();
    return {std::cos(v), std::sin(v)};
}

} // namespace

CMatrix z_matrix_direct(std::size_t n, std::size_t m, Angle a) {
    const std::size_t rows = std::size_t{1} << m;
    const std::size_t cols = std::size_t{1} << n;
    CMatrix out(rows, cols);
    out.at(0, 0) = 1.0;
    out.at(rows - 1, cols - 1) += phase_factor(a);
    return out;
}

CMatrix z_matrix_braket(std::size_t n, std::size_t m, Angle a) {
    auto ket_power = [](Complex lo, Complex hi, std::size_t k) {
        CMatrix basis(2, 1);
        basis.at(0, 0) = lo;
        basis.at(1, 0) = hi;
        CMatrix acc = CMatrix::identity(1);
        for (std::size_t i = 0; i < k; ++i) {
            acc = kron(acc, basis);
        }
        return acc;
    };
    const CMatrix ket0m = ket_power(1.0, 0.0, m);
    const CMatrix ket1m = ket_power(0.0, 1.0, m);
    const CMatrix bra0n = transposed(ket_power(1.0, 0.0, n));
    const CMatrix bra1n = transposed(ket_power(0.0, 1.0, n));
    return matadd(matmul(ket0m, bra0n), scaled(matmul(ket1m, bra1n), phase_factor(a)));
}

std::string format_complex(Complex value) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", value.real(), value.imag());
    return buf;
}

std::string dump(const CMatrix& a) {
    std::string out = std::to_string(a.rows) + " " + std::to_string(a.cols) + "\n";
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += format_complex(a.at(r, c));
        }
        out += '\n';
    }
    return out;
}

} // namespace zx
