#pragma once

#include <optional>
#include <vector>

#include "homcat/field.hpp"

namespace homcat {

// Dense matrix over an exact field.  Row/column counts may be zero; all the
// routines below are total on such degenerate shapes.
class Mat {
public:
    Mat(FieldSpec f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

    static Mat identity(FieldSpec f, int n);
    static Mat from_rows(FieldSpec f, const std::vector<Vec>& rows, int cols);
    static Mat from_cols(FieldSpec f, const std::vector<Vec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    FieldSpec field() const { return f_; }

    Scalar& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec row(int r) const;
    Vec col(int c) const;

private:
    FieldSpec f_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);

struct Rref {
    Mat mat;                 // reduced row echelon form
    std::vector<int> pivots; // pivot column per nonzero row
    int rank() const { return static_cast<int>(pivots.size()); }
};

Rref rref(Mat m);
int rank(const Mat& m);

// Canonical nullspace basis: one vector per free column (ascending), with a
// 1 in the free coordinate.
std::vector<Vec> nullspace(const Mat& m);

// One solution of A x = b (free variables set to 0), or nullopt.
std::optional<Vec> solve(const Mat& a, const Vec& b);

Scalar det(Mat m);

// Vector helpers.
Vec vec_zero(FieldSpec f, int n);
bool vec_is_zero(const Vec& v);
void vec_add_scaled(Vec& dst, const Scalar& c, const Vec& src);
Vec vec_scaled(const Vec& v, const Scalar& c);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);

// Row space kept in reduced echelon form under incremental inserts.  The
// stored rows are the canonical RREF of the span, so the result does not
// depend on insertion order.
class EchelonBasis {
public:
    EchelonBasis(FieldSpec f, int width) : f_(f), width_(width) {}

    // Returns true if v enlarged the span.
    bool insert(Vec v);
    // Residual of v after eliminating all pivots.
    Vec reduce(Vec v) const;
    // Coefficients of v in terms of rows(), or nullopt if v is outside the span.
    std::optional<Vec> coordinates(const Vec& v) const;
    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    int dim() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    FieldSpec field() const { return f_; }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    FieldSpec f_;
    int width_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_; // ascending
};

} // namespace homcat
