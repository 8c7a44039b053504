#include "homcat/dga.hpp"

#include <algorithm>

namespace homcat {

Vec DGAlgebra::mul(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim() || static_cast<int>(b.size()) != dim())
        throw StructuralError("dga mul: element dimension mismatch");
    Vec r = zero_element();
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (const auto& t : mult_[i][j]) r[t.index] += c * t.coeff;
        }
    }
    return r;
}

Vec DGAlgebra::apply_d(const Vec& a) const {
    Vec r = zero_element();
    for (int i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& t : dvec_[i]) r[t.index] += a[i] * t.coeff;
    }
    return r;
}

std::vector<std::vector<int>> DGAlgebra::degree_pattern(const std::vector<DGPosition>& order) const {
    const int n = static_cast<int>(order.size());
    std::vector<std::vector<int>> pattern(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) pattern[i][j] = order[i].n - order[j].n;
    return pattern;
}

Vec DGAlgebra::coords_of_family(const ChainMap& f) const {
    if (!(f.source == *complex_) || !(f.target == *complex_))
        throw StructuralError("coords_of_family: family is not an endomorphism of the underlying complex");
    Vec v = zero_element();
    for (int b = 0; b < dim(); ++b) {
        const Key& key = keys_[b];
        const DGPosition row = positions_[key.row_pos], col = positions_[key.col_pos];
        if (row.n != col.n + f.degree) continue;
        const Vec& entry = f.comp_at(col.n).at(row.idx, col.idx);
        Vec coords = corner_store_->coords_of(complex_->idem_at(row.n, row.idx),
                                              complex_->idem_at(col.n, col.idx), entry);
        v[b] = coords[key.k];
    }
    return v;
}

void DGAlgebra::validate() const {
    const FieldSpec f = field_;
    // d o d = 0 and the graded Leibniz rule on basis pairs
    for (int i = 0; i < dim(); ++i) {
        Vec e = zero_element();
        e[i] = Scalar::one(f);
        if (!vec_is_zero(apply_d(apply_d(e)))) throw StructuralError("dga: d^2 != 0");
        for (int j = 0; j < dim(); ++j) {
            Vec ej = zero_element();
            ej[j] = Scalar::one(f);
            Vec lhs = apply_d(mul(e, ej));
            Vec rhs = mul(apply_d(e), ej);
            const Scalar sign(f, degrees_[i] % 2 == 0 ? 1 : -1);
            vec_add_scaled(rhs, sign, mul(e, apply_d(ej)));
            if (lhs != rhs) throw StructuralError("dga: Leibniz rule fails on a basis pair");
        }
        if (mul(unit_, e) != e || mul(e, unit_) != e) throw StructuralError("dga: unit law fails");
        for (const auto& t : dvec_[i])
            if (degrees_[t.index] != degrees_[i] + 1) throw StructuralError("dga: differential degree != +1");
        for (int j = 0; j < dim(); ++j)
            for (const auto& t : mult_[i][j])
                if (degrees_[t.index] != degrees_[i] + degrees_[j])
                    throw StructuralError("dga: multiplication is not graded");
    }
}

DGAlgebra rhom_dga(const ProjComplex& c) {
    if (c.is_zero()) throw PreconditionError("rhom_dga: zero complex");
    DGAlgebra dga;
    dga.field_ = c.algebra().field();
    dga.complex_ = c;
    dga.corner_store_.emplace(c.algebra());
    const FDAlgebra& a = c.algebra();
    const CornerTable& corners = *dga.corner_store_;

    for (int n = c.lo(); n <= c.hi(); ++n)
        for (int idx = 0; idx < c.count(n); ++idx) dga.positions_.push_back({n, idx});
    const int npos = static_cast<int>(dga.positions_.size());
    auto pos_index = [&](int n, int idx) {
        for (int p = 0; p < npos; ++p)
            if (dga.positions_[p].n == n && dga.positions_[p].idx == idx) return p;
        throw StructuralError("rhom_dga: position lookup failed");
    };
    auto idem_of = [&](const DGPosition& p) { return c.idem_at(p.n, p.idx); };

    // basis ordered by (degree, row position, column position, corner index)
    struct Block {
        int deg, row, col, dim, offset;
    };
    std::vector<Block> blocks;
    {
        int lo_deg = c.lo() - c.hi(), hi_deg = c.hi() - c.lo();
        int offset = 0;
        for (int deg = lo_deg; deg <= hi_deg; ++deg)
            for (int r = 0; r < npos; ++r)
                for (int col = 0; col < npos; ++col) {
                    if (dga.positions_[r].n - dga.positions_[col].n != deg) continue;
                    const int d = corners.corner_dim(idem_of(dga.positions_[r]), idem_of(dga.positions_[col]));
                    if (d == 0) continue;
                    blocks.push_back({deg, r, col, d, offset});
                    for (int k = 0; k < d; ++k) {
                        dga.keys_.push_back({r, col, k});
                        dga.degrees_.push_back(deg);
                    }
                    offset += d;
                }
    }
    const int dim = static_cast<int>(dga.keys_.size());
    auto block_of = [&](int row, int col) -> const Block* {
        for (const auto& b : blocks)
            if (b.row == row && b.col == col) return &b;
        return nullptr;
    };
    auto scatter = [&](int row, int col, const Vec& elem, SparseVec& out, const Scalar& coeff) {
        if (vec_is_zero(elem) || coeff.is_zero()) return;
        const Block* b = block_of(row, col);
        if (!b) throw StructuralError("rhom_dga: product outside computed blocks");
        Vec coords = corners.coords_of(idem_of(dga.positions_[row]), idem_of(dga.positions_[col]), elem);
        for (int k = 0; k < b->dim; ++k)
            if (!coords[k].is_zero()) out.push_back({b->offset + k, coords[k] * coeff});
    };
    auto corner_elem = [&](const DGAlgebra::Key& key) {
        const EchelonBasis& corner =
            corners.corner(idem_of(dga.positions_[key.row_pos]), idem_of(dga.positions_[key.col_pos]));
        return corner.rows()[key.k];
    };

    // multiplication: (a o b) with b first; nonzero iff col(a) == row(b)
    dga.mult_.assign(dim, std::vector<SparseVec>(dim));
    for (int i = 0; i < dim; ++i) {
        const auto& ki = dga.keys_[i];
        for (int j = 0; j < dim; ++j) {
            const auto& kj = dga.keys_[j];
            if (ki.col_pos != kj.row_pos) continue;
            Vec prod = a.mul(corner_elem(ki), corner_elem(kj));
            scatter(ki.row_pos, kj.col_pos, prod, dga.mult_[i][j], Scalar::one(dga.field_));
        }
    }

    // differential d(f) = d_C o f - (-1)^{|f|} f o d_C
    dga.dvec_.assign(dim, SparseVec{});
    for (int i = 0; i < dim; ++i) {
        const auto& key = dga.keys_[i];
        const DGPosition row = dga.positions_[key.row_pos], col = dga.positions_[key.col_pos];
        const Vec elem = corner_elem(key);
        MatAlg dout = c.diff_at(row.n);
        for (int t = 0; t < dout.rows(); ++t)
            scatter(pos_index(row.n + 1, t), key.col_pos, a.mul(dout.at(t, row.idx), elem), dga.dvec_[i],
                    Scalar::one(dga.field_));
        if (col.n - 1 >= c.lo()) {
            MatAlg din = c.diff_at(col.n - 1);
            const Scalar sign(dga.field_, dga.degrees_[i] % 2 == 0 ? -1 : 1); // -(-1)^{|f|}
            for (int s = 0; s < din.cols(); ++s)
                scatter(key.row_pos, pos_index(col.n - 1, s), a.mul(elem, din.at(col.idx, s)), dga.dvec_[i],
                        sign);
        }
    }

    // unit: the identity family
    dga.unit_ = vec_zero(dga.field_, dim);
    {
        ChainMap id = identity_map(c);
        dga.unit_ = dga.coords_of_family(id);
    }

    dga.validate();
    return dga;
}

namespace {

struct DegreeSlice {
    std::vector<int> indices; // basis indices of this degree, ascending
};

} // namespace

Cohomology cohomology(const DGAlgebra& dga, const std::vector<Vec>& summand_identities) {
    const FieldSpec f = dga.field();
    const int dim = dga.dim();
    Cohomology result;
    if (dim == 0) return result;

    int lo = dga.degrees()[0], hi = dga.degrees()[0];
    for (int d : dga.degrees()) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    auto slice = [&](int deg) {
        DegreeSlice s;
        for (int i = 0; i < dim; ++i)
            if (dga.degrees()[i] == deg) s.indices.push_back(i);
        return s;
    };

    // cocycles, boundaries and canonical representatives per degree, in full
    // dga coordinates
    std::map<int, std::vector<Vec>> reps;
    std::map<int, EchelonBasis> boundaries;
    for (int deg = lo; deg <= hi; ++deg) boundaries.emplace(deg, EchelonBasis(f, dim));
    for (int deg = lo; deg <= hi; ++deg) {
        DegreeSlice s = slice(deg);
        for (int i : s.indices) {
            Vec e = dga.zero_element();
            e[i] = Scalar::one(f);
            Vec img = dga.apply_d(e);
            if (vec_is_zero(img)) continue;
            if (deg + 1 > hi) throw StructuralError("cohomology: boundary escapes the degree range");
            boundaries.at(deg + 1).insert(img);
        }
    }
    for (int deg = lo; deg <= hi; ++deg) {
        DegreeSlice s = slice(deg);
        if (s.indices.empty()) {
            result.dims[deg] = 0;
            continue;
        }
        // kernel of d restricted to this degree
        Mat dmat(f, dim, static_cast<int>(s.indices.size()));
        for (std::size_t cidx = 0; cidx < s.indices.size(); ++cidx) {
            Vec e = dga.zero_element();
            e[s.indices[cidx]] = Scalar::one(f);
            Vec img = dga.apply_d(e);
            for (int r = 0; r < dim; ++r) dmat.at(r, static_cast<int>(cidx)) = img[r];
        }
        std::vector<Vec> kernel = nullspace(dmat);
        EchelonBasis zspan(f, dim);
        for (const Vec& kvec : kernel) {
            Vec full = dga.zero_element();
            for (std::size_t cidx = 0; cidx < s.indices.size(); ++cidx) full[s.indices[cidx]] = kvec[cidx];
            zspan.insert(std::move(full));
        }
        EchelonBasis reducer = boundaries.at(deg);
        std::vector<Vec> degree_reps;
        for (const Vec& z : zspan.rows()) {
            Vec r = reducer.reduce(z);
            int lead = -1;
            for (int i = 0; i < dim; ++i)
                if (!r[i].is_zero()) { lead = i; break; }
            if (lead < 0) continue;
            Scalar inv = r[lead].inverse();
            for (auto& sc : r) sc *= inv;
            reducer.insert(r);
            degree_reps.push_back(std::move(r));
        }
        result.dims[deg] = static_cast<int>(degree_reps.size());
        reps[deg] = std::move(degree_reps);
    }

    // assemble H^* as an algebra on the representatives
    std::vector<Vec> basis;
    std::vector<int> grading;
    std::vector<std::string> labels;
    std::map<int, int> degree_offset;
    for (int deg = lo; deg <= hi; ++deg) {
        degree_offset[deg] = static_cast<int>(basis.size());
        for (std::size_t k = 0; k < reps[deg].size(); ++k) {
            basis.push_back(reps[deg][k]);
            grading.push_back(deg);
            labels.push_back("H@" + std::to_string(deg) + "#" + std::to_string(k));
        }
    }
    const int hdim = static_cast<int>(basis.size());
    if (hdim == 0) return result;

    static const std::vector<Vec> no_reps;
    auto reduce_in_degree = [&](int deg, const Vec& v) -> Vec {
        // coefficients in reps[deg] modulo boundaries; v must be a cocycle
        const std::vector<Vec>& r = reps.count(deg) ? reps.at(deg) : no_reps;
        std::vector<Vec> cols = r;
        for (const Vec& b : boundaries.at(deg).rows()) cols.push_back(b);
        Mat m = Mat::from_cols(f, cols, dim);
        auto sol = solve(m, v);
        if (!sol) throw StructuralError("cohomology: product representative escapes the cocycle space");
        return Vec(sol->begin(), sol->begin() + static_cast<int>(r.size()));
    };
    auto embed = [&](int deg, const Vec& coeffs) {
        Vec v = vec_zero(f, hdim);
        for (std::size_t k = 0; k < coeffs.size(); ++k) v[degree_offset[deg] + static_cast<int>(k)] = coeffs[k];
        return v;
    };

    std::vector<std::vector<SparseVec>> mult(hdim, std::vector<SparseVec>(hdim));
    for (int i = 0; i < hdim; ++i)
        for (int j = 0; j < hdim; ++j) {
            const int pdeg = grading[i] + grading[j];
            Vec prod = dga.mul(basis[i], basis[j]);
            if (pdeg < lo || pdeg > hi) {
                if (!vec_is_zero(prod)) throw StructuralError("cohomology: product outside degree range");
                continue;
            }
            Vec coeffs = reduce_in_degree(pdeg, prod);
            Vec full = embed(pdeg, coeffs);
            for (int k = 0; k < hdim; ++k)
                if (!full[k].is_zero()) mult[i][j].push_back({k, full[k]});
        }

    // representative-independence probe: perturb by one boundary
    for (int i = 0; i < hdim; ++i) {
        const int deg = grading[i];
        if (boundaries.at(deg).dim() == 0) continue;
        Vec perturbed = vec_add(basis[i], boundaries.at(deg).rows()[0]);
        for (int j = 0; j < hdim; ++j) {
            const int pdeg = deg + grading[j];
            if (pdeg < lo || pdeg > hi) continue;
            if (reduce_in_degree(pdeg, dga.mul(perturbed, basis[j])) !=
                reduce_in_degree(pdeg, dga.mul(basis[i], basis[j])))
                throw StructuralError("cohomology: induced product depends on the representative");
            if (reduce_in_degree(grading[j] + deg, dga.mul(basis[j], perturbed)) !=
                reduce_in_degree(grading[j] + deg, dga.mul(basis[j], basis[i])))
                throw StructuralError("cohomology: induced product depends on the representative");
        }
    }

    Vec unit = embed(0, reduce_in_degree(0, dga.unit()));
    std::vector<Vec> idems;
    if (summand_identities.empty()) {
        idems.push_back(unit);
    } else {
        for (const Vec& id : summand_identities) idems.push_back(embed(0, reduce_in_degree(0, id)));
    }
    result.total.emplace(f, labels, mult, unit, idems);
    result.grading = grading;

    // degree-0 subalgebra with the same idempotents
    if (reps.count(0) && !reps.at(0).empty()) {
        const int off = degree_offset[0];
        const int d0 = static_cast<int>(reps.at(0).size());
        for (int k = 0; k < d0; ++k) result.degree0_indices.push_back(off + k);
        std::vector<std::vector<SparseVec>> mult0(d0, std::vector<SparseVec>(d0));
        for (int i = 0; i < d0; ++i)
            for (int j = 0; j < d0; ++j)
                for (const auto& t : mult[off + i][off + j]) {
                    if (t.index < off || t.index >= off + d0)
                        throw StructuralError("cohomology: degree-0 part not closed");
                    mult0[i][j].push_back({t.index - off, t.coeff});
                }
        std::vector<std::string> labels0(labels.begin() + off, labels.begin() + off + d0);
        Vec unit0(unit.begin() + off, unit.begin() + off + d0);
        std::vector<Vec> idems0;
        for (const Vec& e : idems) idems0.emplace_back(e.begin() + off, e.begin() + off + d0);
        result.degree0.emplace(f, labels0, mult0, unit0, idems0);
    }
    return result;
}

} // namespace homcat
