#pragma once

// Dense matrices over a finite field: product, reduced row echelon form,
// inversion, right kernel, conjugate transpose and the Hermitian inner
// product. Pivoting picks the first nonzero entry top-down, so every result
// is deterministic.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hermlcd/gf.hpp"

namespace hermlcd::linalg {

using Vec = std::vector<gf::elem>;

struct Matrix {
    gf::FieldPtr field;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<gf::elem> a;  // row-major

    Matrix() = default;
    Matrix(gf::FieldPtr f, std::size_t r, std::size_t c)
        : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {}

    gf::elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    gf::elem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    Vec row(std::size_t r) const {
        return Vec(a.begin() + r * cols, a.begin() + (r + 1) * cols);
    }

    static Matrix identity(gf::FieldPtr f, std::size_t n);

    bool operator==(const Matrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

Matrix mat_mul(const Matrix& A, const Matrix& B);
Matrix mat_add(const Matrix& A, const Matrix& B);

// Entry-wise conjugate of the transpose (the dagger of the recovery
// formulas); requires a square-extension field.
Matrix conj_transpose(const Matrix& A);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& A);
std::size_t rank(const Matrix& A);

Matrix mat_inv(const Matrix& A);  // Singular when not invertible

// Rows form a basis of the right kernel: A * v^T = 0 for every returned row.
Matrix null_space(const Matrix& A);

// x (length = A.rows) times A, as a row vector of length A.cols.
Vec row_vec_mul(const Vec& x, const Matrix& A);

Vec vec_add(const gf::Field& f, const Vec& u, const Vec& v);

// <u, v> = sum u_i * conj(v_i)
gf::elem hermitian_inner(const gf::Field& f, const Vec& u, const Vec& v);

// Text format: header "rows cols p k", then one row per line of integer
// element encodings separated by single spaces.
std::string matrix_to_text(const Matrix& A);
Matrix matrix_from_text(std::istream& in, gf::FieldPtr field = nullptr);

}  // namespace hermlcd::linalg
