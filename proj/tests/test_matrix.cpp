#include "zx/matrix.hpp"

#include <doctest.h>

using namespace zx;

TEST_CASE("kron has the 1x1 identity as a unit") {
    CMatrix m(2, 3);
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        m.entries[i] = Complex(static_cast<double>(i), 0.5);
    }
    CHECK(kron(CMatrix::identity(1), m) == m);
    CHECK(kron(m, CMatrix::identity(1)) == m);
}

TEST_CASE("kron index layout: row = a_row * b.rows + b_row") {
    const CMatrix hh = kron(hadamard(), hadamard());
    CHECK(hh.rows == 4);
    CHECK(hh.at(0, 3).real() == doctest::Approx(0.5));
    CHECK(hh.at(3, 3).real() == doctest::Approx(0.5));
    CHECK(hh.at(1, 3).real() == doctest::Approx(-0.5));
}

TEST_CASE("matmul against the identity and shape checking") {
    CMatrix m(2, 2);
    m.at(0, 0) = {1, 2};
    m.at(0, 1) = {3, 0};
    m.at(1, 0) = {0, -1};
    m.at(1, 1) = {2, 2};
    CHECK(matmul(CMatrix::identity(2), m) == m);
    CHECK(matmul(m, CMatrix::identity(2)) == m);
    CHECK_THROWS_AS(matmul(m, CMatrix(3, 2)), ShapeMismatchError);
}

TEST_CASE("z_matrix_direct places the two spider entries") {
    const CMatrix id = z_matrix_direct(1, 1, Angle::zero());
    CHECK(approx_equal(id, CMatrix::identity(2), 0.0));

    const CMatrix zero = z_matrix_direct(0, 0, Angle::pi());
    CHECK(zero.rows == 1);
    CHECK(std::abs(zero.at(0, 0)) < 1e-15);

    const CMatrix m = z_matrix_direct(2, 1, Angle::rational(1, 2));
    CHECK(m.rows == 2);
    CHECK(m.cols == 4);
    CHECK(m.at(0, 0) == Complex{1, 0});
    CHECK(m.at(1, 3).imag() == doctest::Approx(1.0));
    CHECK(std::abs(m.at(1, 3).real()) < 1e-15);
    CHECK(std::abs(m.at(0, 1)) == 0.0);
}

TEST_CASE("braket construction agrees with the direct one") {
    const Angle angles[] = {Angle::zero(), Angle::rational(1, 4), Angle::rational(1, 2),
                            Angle::pi(), Angle::rational(3, 2)};
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t m = 0; m <= 4; ++m) {
            for (const Angle& a : angles) {
                CAPTURE(n);
                CAPTURE(m);
                CHECK(max_abs_diff(z_matrix_braket(n, m, a), z_matrix_direct(n, m, a)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("braket state examples") {
    const CMatrix plus = z_matrix_braket(0, 1, Angle::zero());
    CHECK(plus.rows == 2);
    CHECK(plus.cols == 1);
    CHECK(plus.at(0, 0) == Complex{1, 0});
    CHECK(plus.at(1, 0) == Complex{1, 0});
}

TEST_CASE("dump format") {
    CMatrix m(1, 2);
    m.at(0, 0) = {1, 0};
    m.at(0, 1) = {0, -0.5};
    const std::string text = dump(m);
    CHECK(text.substr(0, 4) == "1 2\n");
    CHECK(text.find("1+0i") != std::string::npos);
    CHECK(text.find("0-0.5i") != std::string::npos);
}
