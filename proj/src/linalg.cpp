#include "homcat/linalg.hpp"

#include <algorithm>

namespace homcat {

Mat Mat::identity(FieldSpec f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Mat Mat::from_rows(FieldSpec f, const std::vector<Vec>& rows, int cols) {
    Mat m(f, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        if (static_cast<int>(rows[r].size()) != cols)
            throw StructuralError("from_rows: ragged row");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::from_cols(FieldSpec f, const std::vector<Vec>& cols, int rows) {
    Mat m(f, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        if (static_cast<int>(cols[c].size()) != rows)
            throw StructuralError("from_cols: ragged column");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v;
    v.reserve(cols_);
    for (int c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Vec Mat::col(int c) const {
    Vec v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw StructuralError("mat_mul: shape mismatch");
    Mat m(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                m.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return m;
}

Rref rref(Mat m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar k = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= k * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return Rref{std::move(m), std::move(pivots)};
}

int rank(const Mat& m) { return rref(m).rank(); }

std::vector<Vec> nullspace(const Mat& m) {
    Rref e = rref(m);
    const FieldSpec f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = vec_zero(f, m.cols());
        v[c] = Scalar::one(f);
        for (int r = 0; r < e.rank(); ++r)
            v[e.pivots[r]] = -e.mat.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw StructuralError("solve: rhs length mismatch");
    const FieldSpec f = a.field();
    Mat aug(f, a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    Rref e = rref(std::move(aug));
    Vec x = vec_zero(f, a.cols());
    for (int r = 0; r < e.rank(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt; // inconsistent
        x[e.pivots[r]] = e.mat.at(r, a.cols());
    }
    return x;
}

Scalar det(Mat m) {
    if (m.rows() != m.cols()) throw StructuralError("det: not square");
    const FieldSpec f = m.field();
    Scalar d = Scalar::one(f);
    for (int c = 0; c < m.cols(); ++c) {
        int pr = -1;
        for (int i = c; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) return Scalar::zero(f);
        if (pr != c) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (int i = c + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar k = m.at(i, c) * inv;
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= k * m.at(c, j);
        }
    }
    return d;
}

Vec vec_zero(FieldSpec f, int n) { return Vec(static_cast<std::size_t>(n), Scalar::zero(f)); }

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void vec_add_scaled(Vec& dst, const Scalar& c, const Vec& src) {
    if (dst.size() != src.size()) throw StructuralError("vec_add_scaled: length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
}

Vec vec_scaled(const Vec& v, const Scalar& c) {
    Vec r = v;
    for (auto& s : r) s *= c;
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    vec_add_scaled(r, Scalar::one(a.empty() ? FieldSpec::rationals() : a[0].field()), b);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw StructuralError("vec_sub: length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

bool EchelonBasis::insert(Vec v) {
    if (static_cast<int>(v.size()) != width_) throw StructuralError("EchelonBasis: width mismatch");
    v = reduce(std::move(v));
    int lead = -1;
    for (int i = 0; i < width_; ++i)
        if (!v[i].is_zero()) { lead = i; break; }
    if (lead < 0) return false;
    Scalar inv = v[lead].inverse();
    for (auto& s : v) s *= inv;
    // back-eliminate the new pivot from stored rows
    for (auto& row : rows_) {
        Scalar k = row[lead];
        if (!k.is_zero()) {
            for (int i = 0; i < width_; ++i) row[i] -= k * v[i];
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    auto idx = pos - pivots_.begin();
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

Vec EchelonBasis::reduce(Vec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar k = v[pivots_[r]];
        if (!k.is_zero()) {
            for (int i = 0; i < width_; ++i) v[i] -= k * rows_[r][i];
        }
    }
    return v;
}

std::optional<Vec> EchelonBasis::coordinates(const Vec& v) const {
    Vec w = v;
    Vec coeff = vec_zero(f_, dim());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar k = w[pivots_[r]];
        if (!k.is_zero()) {
            coeff[r] = k;
            for (int i = 0; i < width_; ++i) w[i] -= k * rows_[r][i];
        }
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return coeff;
}

} // namespace homcat
