#include "hermlcd/linalg.hpp"

#include <istream>
#include <sstream>

namespace hermlcd::linalg {

namespace {

void check_same_field(const Matrix& A, const Matrix& B) {
    require(A.field && B.field && A.field->same_field(*B.field), errc::field_mismatch,
            "matrices live in different fields");
}

}  // namespace

Matrix Matrix::identity(gf::FieldPtr f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix mat_mul(const Matrix& A, const Matrix& B) {
    check_same_field(A, B);
    require(A.cols == B.rows, errc::dimension_mismatch,
            "inner dimensions disagree in matrix product");
    const gf::Field& f = *A.field;
    Matrix C(A.field, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t t = 0; t < A.cols; ++t) {
            gf::elem aij = A.at(i, t);
            if (aij == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) {
                gf::elem prod = f.mul(aij, B.at(t, j));
                C.at(i, j) = f.add(C.at(i, j), prod);
            }
        }
    }
    return C;
}

Matrix mat_add(const Matrix& A, const Matrix& B) {
    check_same_field(A, B);
    require(A.rows == B.rows && A.cols == B.cols, errc::dimension_mismatch,
            "matrix sum needs equal shapes");
    const gf::Field& f = *A.field;
    Matrix C(A.field, A.rows, A.cols);
    for (std::size_t i = 0; i < A.a.size(); ++i) C.a[i] = f.add(A.a[i], B.a[i]);
    return C;
}

Matrix conj_transpose(const Matrix& A) {
    const gf::Field& f = *A.field;
    Matrix C(A.field, A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) C.at(j, i) = f.conj(A.at(i, j));
    return C;
}

RrefResult rref(const Matrix& A) {
    RrefResult res;
    res.reduced = A;
    Matrix& M = res.reduced;
    const gf::Field& f = *A.field;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < M.cols && pivot_row < M.rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < M.rows && M.at(sel, col) == 0) ++sel;
        if (sel == M.rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < M.cols; ++j)
                std::swap(M.at(sel, j), M.at(pivot_row, j));
        gf::elem inv_p = f.inv(M.at(pivot_row, col));
        for (std::size_t j = col; j < M.cols; ++j)
            M.at(pivot_row, j) = f.mul(M.at(pivot_row, j), inv_p);
        for (std::size_t r = 0; r < M.rows; ++r) {
            if (r == pivot_row) continue;
            gf::elem factor = M.at(r, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < M.cols; ++j) {
                gf::elem sub = f.mul(factor, M.at(pivot_row, j));
                M.at(r, j) = f.sub(M.at(r, j), sub);
            }
        }
        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const Matrix& A) { return rref(A).rank; }

Matrix mat_inv(const Matrix& A) {
    require(A.rows == A.cols, errc::dimension_mismatch, "inversion needs a square matrix");
    const std::size_t n = A.rows;
    Matrix aug(A.field, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    require(r.rank >= n && (n == 0 || r.pivot_cols[n - 1] == n - 1), errc::singular_matrix,
            "matrix is singular");
    Matrix inv(A.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

Matrix null_space(const Matrix& A) {
    const gf::Field& f = *A.field;
    RrefResult r = rref(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    Matrix basis(A.field, A.cols - r.rank, A.cols);
    std::size_t row = 0;
    for (std::size_t free_col = 0; free_col < A.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.at(row, free_col) = 1;
        for (std::size_t j = 0; j < r.rank; ++j)
            basis.at(row, r.pivot_cols[j]) = f.neg(r.reduced.at(j, free_col));
        ++row;
    }
    return basis;
}

Vec row_vec_mul(const Vec& x, const Matrix& A) {
    require(x.size() == A.rows, errc::dimension_mismatch,
            "row vector length must equal matrix row count");
    const gf::Field& f = *A.field;
    Vec out(A.cols, 0);
    for (std::size_t i = 0; i < A.rows; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < A.cols; ++j)
            out[j] = f.add(out[j], f.mul(x[i], A.at(i, j)));
    }
    return out;
}

Vec vec_add(const gf::Field& f, const Vec& u, const Vec& v) {
    require(u.size() == v.size(), errc::dimension_mismatch, "vector sum needs equal lengths");
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = f.add(u[i], v[i]);
    return out;
}

gf::elem hermitian_inner(const gf::Field& f, const Vec& u, const Vec& v) {
    require(u.size() == v.size(), errc::dimension_mismatch,
            "inner product needs equal lengths");
    gf::elem acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        acc = f.add(acc, f.mul(u[i], f.conj(v[i])));
    return acc;
}

std::string matrix_to_text(const Matrix& A) {
    std::ostringstream os;
    os << A.rows << ' ' << A.cols << ' ' << A.field->p() << ' ' << A.field->k() << '\n';
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) {
            if (j) os << ' ';
            os << A.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

Matrix matrix_from_text(std::istream& in, gf::FieldPtr field) {
    std::size_t rows = 0, cols = 0;
    std::uint64_t p = 0;
    unsigned k = 0;
    require(static_cast<bool>(in >> rows >> cols >> p >> k), errc::usage_error,
            "malformed matrix header, expected: rows cols p k");
    if (field) {
        require(field->p() == p && field->k() == k, errc::field_mismatch,
                "matrix header names a different field");
    } else {
        field = gf::Field::make(p, k);
    }
    Matrix M(field, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        std::uint64_t v = 0;
        require(static_cast<bool>(in >> v), errc::usage_error, "matrix body truncated");
        M.a[i] = field->element(v);
    }
    return M;
}

}  // namespace hermlcd::linalg
