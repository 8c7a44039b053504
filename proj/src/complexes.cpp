#include "homcat/complexes.hpp"

#include <algorithm>

namespace homcat {

bool MatAlg::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Vec& v) { return vec_is_zero(v); });
}

MatAlg mat_alg_mul(const FDAlgebra& a, const MatAlg& later, const MatAlg& earlier) {
    if (later.cols() != earlier.rows()) throw StructuralError("mat_alg_mul: shape mismatch");
    MatAlg r(a.field(), a.dim(), later.rows(), earlier.cols());
    for (int i = 0; i < later.rows(); ++i)
        for (int k = 0; k < later.cols(); ++k) {
            if (vec_is_zero(later.at(i, k))) continue;
            for (int j = 0; j < earlier.cols(); ++j) {
                if (vec_is_zero(earlier.at(k, j))) continue;
                Vec prod = a.mul(later.at(i, k), earlier.at(k, j));
                for (std::size_t u = 0; u < prod.size(); ++u) r.at(i, j)[u] += prod[u];
            }
        }
    return r;
}

MatAlg mat_alg_add(const MatAlg& a, const MatAlg& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("mat_alg_add: shape mismatch");
    MatAlg r = a;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            for (std::size_t u = 0; u < r.at(i, j).size(); ++u) r.at(i, j)[u] += b.at(i, j)[u];
    return r;
}

MatAlg mat_alg_scaled(const MatAlg& m, const Scalar& c) {
    MatAlg r = m;
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            for (auto& s : r.at(i, j)) s *= c;
    return r;
}

ProjComplex::ProjComplex(AlgebraPtr a) : alg_(std::move(a)), lo_(0), hi_(-1) {
    if (!alg_) throw StructuralError("complex without algebra");
}

ProjComplex::ProjComplex(AlgebraPtr a, int lo, std::vector<std::vector<int>> summands,
                         std::vector<MatAlg> diff)
    : alg_(std::move(a)), lo_(lo), hi_(lo + static_cast<int>(summands.size()) - 1),
      summands_(std::move(summands)), diff_(std::move(diff)) {
    if (!alg_) throw StructuralError("complex without algebra");
    normalize_and_validate();
}

void ProjComplex::normalize_and_validate() {
    const int len = static_cast<int>(summands_.size());
    if (static_cast<int>(diff_.size()) != (len == 0 ? 0 : len - 1))
        throw StructuralError("complex: differential count must be one less than term count");
    // trim empty boundary degrees
    int first = 0, last = len - 1;
    while (first <= last && summands_[first].empty()) ++first;
    while (last >= first && summands_[last].empty()) --last;
    if (first > last) {
        summands_.clear();
        diff_.clear();
        lo_ = 0;
        hi_ = -1;
        return;
    }
    lo_ += first;
    summands_ = std::vector<std::vector<int>>(summands_.begin() + first, summands_.begin() + last + 1);
    diff_ = std::vector<MatAlg>(diff_.begin() + first, diff_.begin() + last);
    hi_ = lo_ + static_cast<int>(summands_.size()) - 1;

    const int r = alg_->idempotent_count();
    for (const auto& deg : summands_)
        for (int idx : deg)
            if (idx < 0 || idx >= r) throw StructuralError("complex: idempotent index out of range");

    CornerTable corners(*alg_);
    for (int n = lo_; n < hi_; ++n) {
        const MatAlg& d = diff_[n - lo_];
        if (d.rows() != count(n + 1) || d.cols() != count(n))
            throw StructuralError("complex: differential shape mismatch at degree " + std::to_string(n));
        for (int t = 0; t < d.rows(); ++t)
            for (int s = 0; s < d.cols(); ++s)
                if (!corners.contains(idem_at(n + 1, t), idem_at(n, s), d.at(t, s)))
                    throw StructuralError("complex: differential entry outside its idempotent corner");
    }
    for (int n = lo_; n + 1 < hi_; ++n)
        if (!mat_alg_mul(*alg_, diff_at(n + 1), diff_at(n)).is_zero())
            throw StructuralError("complex: d^2 != 0 at degree " + std::to_string(n));
}

int ProjComplex::count(int n) const {
    if (n < lo_ || n > hi_) return 0;
    return static_cast<int>(summands_[n - lo_].size());
}

const std::vector<int>& ProjComplex::summands_at(int n) const {
    static const std::vector<int> empty;
    if (n < lo_ || n > hi_) return empty;
    return summands_[n - lo_];
}

MatAlg ProjComplex::diff_at(int n) const {
    if (n >= lo_ && n < hi_) return diff_[n - lo_];
    return MatAlg(alg_->field(), alg_->dim(), count(n + 1), count(n));
}

int ProjComplex::total_summands() const {
    int total = 0;
    for (const auto& deg : summands_) total += static_cast<int>(deg.size());
    return total;
}

bool operator==(const ProjComplex& a, const ProjComplex& b) {
    if (a.alg_ != b.alg_ || a.lo_ != b.lo_ || a.hi_ != b.hi_) return false;
    return a.summands_ == b.summands_ && a.diff_ == b.diff_;
}

ProjComplex stalk(AlgebraPtr a, std::vector<int> idempotents, int degree) {
    std::vector<std::vector<int>> summands{std::move(idempotents)};
    return ProjComplex(std::move(a), degree, std::move(summands), {});
}

ProjComplex shift(const ProjComplex& x, int k) {
    if (x.is_zero()) return x;
    std::vector<std::vector<int>> summands;
    std::vector<MatAlg> diff;
    for (int n = x.lo(); n <= x.hi(); ++n) summands.push_back(x.summands_at(n));
    const Scalar sign(x.algebra().field(), (k % 2 == 0) ? 1 : -1);
    for (int n = x.lo(); n < x.hi(); ++n) diff.push_back(mat_alg_scaled(x.diff_at(n), sign));
    return ProjComplex(x.algebra_ptr(), x.lo() - k, std::move(summands), std::move(diff));
}

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
    if (x.algebra_ptr() != y.algebra_ptr()) throw StructuralError("direct_sum: different base algebras");
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const int lo = std::min(x.lo(), y.lo());
    const int hi = std::max(x.hi(), y.hi());
    const FDAlgebra& a = x.algebra();
    std::vector<std::vector<int>> summands;
    std::vector<MatAlg> diff;
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> deg = x.summands_at(n);
        const auto& ys = y.summands_at(n);
        deg.insert(deg.end(), ys.begin(), ys.end());
        summands.push_back(std::move(deg));
    }
    for (int n = lo; n < hi; ++n) {
        MatAlg dx = x.diff_at(n), dy = y.diff_at(n);
        MatAlg d(a.field(), a.dim(), dx.rows() + dy.rows(), dx.cols() + dy.cols());
        for (int t = 0; t < dx.rows(); ++t)
            for (int s = 0; s < dx.cols(); ++s) d.at(t, s) = dx.at(t, s);
        for (int t = 0; t < dy.rows(); ++t)
            for (int s = 0; s < dy.cols(); ++s) d.at(dx.rows() + t, dx.cols() + s) = dy.at(t, s);
        diff.push_back(std::move(d));
    }
    return ProjComplex(x.algebra_ptr(), lo, std::move(summands), std::move(diff));
}

ProjComplex direct_sum_list(const std::vector<ProjComplex>& pieces) {
    if (pieces.empty()) throw StructuralError("direct_sum_list: empty list");
    ProjComplex total = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i) total = direct_sum(total, pieces[i]);
    return total;
}

MatAlg ChainMap::comp_at(int n) const {
    if (n >= source.lo() && n <= source.hi() && !comps.empty()) return comps[n - source.lo()];
    const FDAlgebra& a = source.algebra();
    return MatAlg(a.field(), a.dim(), target.count(n + degree), source.count(n));
}

ChainMap make_family(const ProjComplex& x, const ProjComplex& y, int degree) {
    if (x.algebra_ptr() != y.algebra_ptr()) throw StructuralError("family: different base algebras");
    ChainMap f{x, y, degree, {}};
    const FDAlgebra& a = x.algebra();
    for (int n = x.lo(); n <= x.hi(); ++n)
        f.comps.emplace_back(a.field(), a.dim(), y.count(n + degree), x.count(n));
    return f;
}

ChainMap identity_map(const ProjComplex& x) {
    ChainMap f = make_family(x, x, 0);
    for (int n = x.lo(); n <= x.hi(); ++n)
        for (int t = 0; t < x.count(n); ++t)
            f.comps[n - x.lo()].at(t, t) = x.algebra().idempotent(x.idem_at(n, t));
    return f;
}

ChainMap hom_differential(const ChainMap& f) {
    const FDAlgebra& a = f.source.algebra();
    ChainMap d = make_family(f.source, f.target, f.degree + 1);
    const Scalar sign(a.field(), (f.degree % 2 == 0) ? 1 : -1);
    for (int n = f.source.lo(); n <= f.source.hi(); ++n) {
        MatAlg term = mat_alg_mul(a, f.target.diff_at(n + f.degree), f.comp_at(n));
        MatAlg lag = mat_alg_mul(a, f.comp_at(n + 1), f.source.diff_at(n));
        d.comps[n - f.source.lo()] = mat_alg_add(term, mat_alg_scaled(lag, -sign));
    }
    return d;
}

bool is_chain_map(const ChainMap& f) {
    CornerTable corners(f.source.algebra());
    for (int n = f.source.lo(); n <= f.source.hi(); ++n) {
        const MatAlg m = f.comp_at(n);
        for (int t = 0; t < m.rows(); ++t)
            for (int s = 0; s < m.cols(); ++s)
                if (!corners.contains(f.target.idem_at(n + f.degree, t), f.source.idem_at(n, s), m.at(t, s)))
                    return false;
    }
    ChainMap d = hom_differential(f);
    return is_zero_map(d);
}

bool is_zero_map(const ChainMap& f) {
    return std::all_of(f.comps.begin(), f.comps.end(), [](const MatAlg& m) { return m.is_zero(); });
}

ChainMap compose(const ChainMap& f, const ChainMap& g) {
    if (!(f.target == g.source)) throw StructuralError("compose: target of first map != source of second");
    ChainMap r = make_family(f.source, g.target, f.degree + g.degree);
    const FDAlgebra& a = f.source.algebra();
    for (int n = f.source.lo(); n <= f.source.hi(); ++n)
        r.comps[n - f.source.lo()] = mat_alg_mul(a, g.comp_at(n + f.degree), f.comp_at(n));
    return r;
}

ChainMap cm_add(const ChainMap& f, const ChainMap& g) {
    if (!(f.source == g.source) || !(f.target == g.target) || f.degree != g.degree)
        throw StructuralError("cm_add: incompatible maps");
    ChainMap r = f;
    for (std::size_t i = 0; i < r.comps.size(); ++i) r.comps[i] = mat_alg_add(r.comps[i], g.comps[i]);
    return r;
}

ChainMap cm_scaled(const ChainMap& f, const Scalar& c) {
    ChainMap r = f;
    for (auto& m : r.comps) m = mat_alg_scaled(m, c);
    return r;
}

ChainMap cm_sub(const ChainMap& f, const ChainMap& g) {
    return cm_add(f, cm_scaled(g, Scalar(f.source.algebra().field(), -1)));
}

ChainMap reinterpret_into_shift(const ChainMap& f, int k) {
    ChainMap r{f.source, shift(f.target, k), f.degree - k, f.comps};
    return r;
}

ConeTriangle cone_triangle(const ChainMap& f) {
    if (f.degree != 0) throw StructuralError("cone: map must have degree 0");
    if (!is_chain_map(f)) throw StructuralError("cone: not a chain map");
    const ProjComplex& x = f.source;
    const ProjComplex& y = f.target;
    const FDAlgebra& a = x.algebra();
    const AlgebraPtr ap = x.algebra_ptr();

    if (x.is_zero()) {
        ProjComplex c = y;
        return ConeTriangle{c, identity_map(y), make_family(c, shift(x, 1), 0)};
    }
    const int lo = y.is_zero() ? x.lo() - 1 : std::min(x.lo() - 1, y.lo());
    const int hi = y.is_zero() ? x.hi() - 1 : std::max(x.hi() - 1, y.hi());

    std::vector<std::vector<int>> summands;
    std::vector<MatAlg> diff;
    for (int n = lo; n <= hi; ++n) {
        std::vector<int> deg = x.summands_at(n + 1);
        const auto& ys = y.summands_at(n);
        deg.insert(deg.end(), ys.begin(), ys.end());
        summands.push_back(std::move(deg));
    }
    for (int n = lo; n < hi; ++n) {
        const int xr = x.count(n + 2), xc = x.count(n + 1);
        const int yr = y.count(n + 1), yc = y.count(n);
        MatAlg d(a.field(), a.dim(), xr + yr, xc + yc);
        MatAlg dx = x.diff_at(n + 1);
        for (int t = 0; t < xr; ++t)
            for (int s = 0; s < xc; ++s) d.at(t, s) = vec_scaled(dx.at(t, s), Scalar(a.field(), -1));
        MatAlg fc = f.comp_at(n + 1);
        for (int t = 0; t < yr; ++t)
            for (int s = 0; s < xc; ++s) d.at(xr + t, s) = fc.at(t, s);
        MatAlg dy = y.diff_at(n);
        for (int t = 0; t < yr; ++t)
            for (int s = 0; s < yc; ++s) d.at(xr + t, xc + s) = dy.at(t, s);
        diff.push_back(std::move(d));
    }
    ProjComplex c(ap, lo, std::move(summands), std::move(diff));

    ChainMap incl = make_family(y, c, 0);
    for (int n = y.lo(); n <= y.hi(); ++n) {
        const int off = x.count(n + 1);
        for (int t = 0; t < y.count(n); ++t)
            incl.comps[n - y.lo()].at(off + t, t) = a.idempotent(y.idem_at(n, t));
    }
    ProjComplex x1 = shift(x, 1);
    ChainMap proj = make_family(c, x1, 0);
    for (int n = c.lo(); n <= c.hi(); ++n) {
        for (int t = 0; t < x.count(n + 1); ++t)
            proj.comps[n - c.lo()].at(t, t) = a.idempotent(x.idem_at(n + 1, t));
    }
    return ConeTriangle{std::move(c), std::move(incl), std::move(proj)};
}

ProjComplex cone(const ChainMap& f) { return cone_triangle(f).cone; }

namespace {

// Inverse of a inside the corner algebra e A e, or nullopt.
std::optional<Vec> corner_inverse(const FDAlgebra& alg, const CornerTable& corners, int e, const Vec& a) {
    const EchelonBasis& corner = corners.corner(e, e);
    const Vec idem = alg.idempotent(e);
    std::vector<Vec> cols;
    cols.reserve(corner.dim());
    for (const Vec& c : corner.rows()) cols.push_back(corners.coords_of(e, e, alg.mul(a, c)));
    Mat m = Mat::from_cols(alg.field(), cols, corner.dim());
    auto sol = solve(m, corners.coords_of(e, e, idem));
    if (!sol) return std::nullopt;
    Vec inv = corners.element_of(e, e, *sol);
    if (alg.mul(a, inv) != idem || alg.mul(inv, a) != idem) return std::nullopt;
    return inv;
}

struct Pivot {
    int n, t, s;
    Vec inv;
};

std::optional<Pivot> find_pivot(const ProjComplex& c, const CornerTable& corners) {
    const FDAlgebra& a = c.algebra();
    for (int n = c.lo(); n < c.hi(); ++n) {
        const MatAlg d = c.diff_at(n);
        for (int t = 0; t < d.rows(); ++t)
            for (int s = 0; s < d.cols(); ++s) {
                if (vec_is_zero(d.at(t, s))) continue;
                const int e = c.idem_at(n, s);
                if (e != c.idem_at(n + 1, t)) continue;
                auto inv = corner_inverse(a, corners, e, d.at(t, s));
                if (inv) return Pivot{n, t, s, std::move(*inv)};
            }
    }
    return std::nullopt;
}

} // namespace

Minimized minimize(const ProjComplex& x) {
    const FDAlgebra& alg = x.algebra();
    CornerTable corners(alg);
    ProjComplex cur = x;
    ChainMap inc = identity_map(x);
    ChainMap prj = identity_map(x);
    int steps = 0;

    while (!cur.is_zero()) {
        auto pivot = find_pivot(cur, corners);
        if (!pivot) break;
        const int n = pivot->n, t = pivot->t, s = pivot->s;
        const MatAlg dn = cur.diff_at(n);
        const Vec& ainv = pivot->inv;

        std::vector<std::vector<int>> summands;
        std::vector<MatAlg> diff;
        for (int m = cur.lo(); m <= cur.hi(); ++m) {
            std::vector<int> deg = cur.summands_at(m);
            if (m == n) deg.erase(deg.begin() + s);
            if (m == n + 1) deg.erase(deg.begin() + t);
            summands.push_back(std::move(deg));
        }
        for (int m = cur.lo(); m < cur.hi(); ++m) {
            MatAlg d = cur.diff_at(m);
            if (m == n) {
                MatAlg nd(alg.field(), alg.dim(), d.rows() - 1, d.cols() - 1);
                for (int tt = 0, ti = 0; tt < d.rows(); ++tt) {
                    if (tt == t) continue;
                    for (int ss = 0, si = 0; ss < d.cols(); ++ss) {
                        if (ss == s) continue;
                        Vec corr = alg.mul(alg.mul(d.at(tt, s), ainv), d.at(t, ss));
                        nd.at(ti, si) = vec_sub(d.at(tt, ss), corr);
                        ++si;
                    }
                    ++ti;
                }
                diff.push_back(std::move(nd));
            } else if (m == n - 1) {
                MatAlg nd(alg.field(), alg.dim(), d.rows() - 1, d.cols());
                for (int tt = 0, ti = 0; tt < d.rows(); ++tt) {
                    if (tt == s) continue;
                    for (int ss = 0; ss < d.cols(); ++ss) nd.at(ti, ss) = d.at(tt, ss);
                    ++ti;
                }
                diff.push_back(std::move(nd));
            } else if (m == n + 1) {
                MatAlg nd(alg.field(), alg.dim(), d.rows(), d.cols() - 1);
                for (int tt = 0; tt < d.rows(); ++tt)
                    for (int ss = 0, si = 0; ss < d.cols(); ++ss) {
                        if (ss == t) continue;
                        nd.at(tt, si) = d.at(tt, ss);
                        ++si;
                    }
                diff.push_back(std::move(nd));
            } else {
                diff.push_back(std::move(d));
            }
        }
        ProjComplex next(cur.algebra_ptr(), cur.lo(), std::move(summands), std::move(diff));

        // incl: next -> cur (identity away from the cancelled pair)
        ChainMap step_inc = make_family(next, cur, 0);
        for (int m = next.lo(); m <= next.hi(); ++m) {
            MatAlg& comp = step_inc.comps[m - next.lo()];
            if (m == n) {
                for (int j = 0, orig = 0; j < next.count(m); ++j, ++orig) {
                    if (orig == s) ++orig;
                    comp.at(orig, j) = alg.idempotent(next.idem_at(m, j));
                    Vec corr = alg.mul(ainv, dn.at(t, orig));
                    comp.at(s, j) = vec_scaled(corr, Scalar(alg.field(), -1));
                }
            } else if (m == n + 1) {
                for (int j = 0, orig = 0; j < next.count(m); ++j, ++orig) {
                    if (orig == t) ++orig;
                    comp.at(orig, j) = alg.idempotent(next.idem_at(m, j));
                }
            } else {
                for (int j = 0; j < next.count(m); ++j) comp.at(j, j) = alg.idempotent(next.idem_at(m, j));
            }
        }

        // proj: cur -> next
        ChainMap step_prj = make_family(cur, next, 0);
        for (int m = cur.lo(); m <= cur.hi(); ++m) {
            MatAlg& comp = step_prj.comps[m - cur.lo()];
            if (m == n) {
                for (int j = 0, orig = 0; j < next.count(m); ++j, ++orig) {
                    if (orig == s) ++orig;
                    comp.at(j, orig) = alg.idempotent(next.idem_at(m, j));
                }
            } else if (m == n + 1) {
                for (int j = 0, orig = 0; j < next.count(m); ++j, ++orig) {
                    if (orig == t) ++orig;
                    comp.at(j, orig) = alg.idempotent(next.idem_at(m, j));
                    Vec corr = alg.mul(dn.at(orig, s), ainv);
                    comp.at(j, t) = vec_scaled(corr, Scalar(alg.field(), -1));
                }
            } else {
                for (int j = 0; j < next.count(m); ++j) comp.at(j, j) = alg.idempotent(next.idem_at(m, j));
            }
        }

        inc = compose(step_inc, inc);
        prj = compose(prj, step_prj);
        cur = next;
        ++steps;
    }
    return Minimized{std::move(cur), std::move(inc), std::move(prj), steps};
}

std::vector<std::pair<int, std::vector<int>>> summand_profile(const ProjComplex& x) {
    std::vector<std::pair<int, std::vector<int>>> profile;
    for (int n = x.lo(); n <= x.hi(); ++n)
        if (x.count(n) > 0) profile.emplace_back(n, x.summands_at(n));
    return profile;
}

std::vector<ChainMap> split_identity_maps(const std::vector<ProjComplex>& pieces) {
    ProjComplex total = direct_sum_list(pieces);
    const FDAlgebra& a = total.algebra();
    std::vector<ChainMap> maps;
    maps.reserve(pieces.size());
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        ChainMap f = make_family(total, total, 0);
        for (int n = total.lo(); n <= total.hi(); ++n) {
            int off = 0;
            for (std::size_t k = 0; k < j; ++k) off += pieces[k].count(n);
            for (int t = 0; t < pieces[j].count(n); ++t)
                f.comps[n - total.lo()].at(off + t, off + t) = a.idempotent(pieces[j].idem_at(n, t));
        }
        maps.push_back(std::move(f));
    }
    return maps;
}

} // namespace homcat
