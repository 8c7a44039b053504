#include "homcat/hom.hpp"

namespace homcat {

FamilyLayout FamilyLayout::build(const CornerTable& corners, const ProjComplex& x, const ProjComplex& y,
                                 int degree) {
    FamilyLayout layout;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        const int m = n + degree;
        if (x.count(n) == 0 || y.count(m) == 0) continue;
        for (int t = 0; t < y.count(m); ++t)
            for (int s = 0; s < x.count(n); ++s) {
                const int it = y.idem_at(m, t), is = x.idem_at(n, s);
                const int d = corners.corner_dim(it, is);
                if (d == 0) continue;
                layout.blocks.push_back({n, t, s, it, is, d, layout.total});
                layout.total += d;
            }
    }
    return layout;
}

HomSpace::HomSpace(const ProjComplex& x, const ProjComplex& y, int degree)
    : source_(x), target_(y), degree_(degree), corners_(x.algebra()),
      layout_(FamilyLayout::build(corners_, x, y, degree)),
      layout_below_(FamilyLayout::build(corners_, x, y, degree - 1)),
      boundary_map_(x.algebra().field(), layout_.total, layout_below_.total),
      boundary_span_(x.algebra().field(), layout_.total) {
    if (x.algebra_ptr() != y.algebra_ptr()) throw StructuralError("hom: different base algebras");
    const FieldSpec f = x.algebra().field();

    // cocycles: kernel of the Hom-complex differential into degree+1 families
    const FamilyLayout above = FamilyLayout::build(corners_, x, y, degree + 1);
    Mat d(f, above.total, layout_.total);
    for (int c = 0; c < layout_.total; ++c) {
        Vec unit = vec_zero(f, layout_.total);
        unit[c] = Scalar::one(f);
        ChainMap fam = unflatten(unit);
        ChainMap dfam = hom_differential(fam);
        for (const auto& b : above.blocks) {
            Vec coords = corners_.coords_of(b.idem_t, b.idem_s, dfam.comp_at(b.n).at(b.t, b.s));
            for (int k = 0; k < b.dim; ++k) d.at(b.offset + k, c) = coords[k];
        }
    }
    std::vector<Vec> cocycles = nullspace(d);
    chainmap_dim_ = static_cast<int>(cocycles.size());

    // boundaries: image of degree-1-lower families
    for (int c = 0; c < layout_below_.total; ++c) {
        Vec unit = vec_zero(f, layout_below_.total);
        unit[c] = Scalar::one(f);
        ChainMap fam = make_family(source_, target_, degree_ - 1);
        for (const auto& b : layout_below_.blocks) {
            Vec coords(unit.begin() + b.offset, unit.begin() + b.offset + b.dim);
            fam.comps[b.n - source_.lo()].at(b.t, b.s) = corners_.element_of(b.idem_t, b.idem_s, coords);
        }
        Vec img = flatten(hom_differential(fam));
        for (int r = 0; r < layout_.total; ++r) boundary_map_.at(r, c) = img[r];
        boundary_span_.insert(std::move(img));
    }
    homotopy_dim_ = boundary_span_.dim();

    // canonical representatives of cocycles modulo boundaries
    EchelonBasis zspan(f, layout_.total);
    for (auto& z : cocycles) zspan.insert(std::move(z));
    EchelonBasis reducer = boundary_span_;
    for (const Vec& z : zspan.rows()) {
        Vec r = reducer.reduce(z);
        int lead = -1;
        for (int i = 0; i < layout_.total; ++i)
            if (!r[i].is_zero()) { lead = i; break; }
        if (lead < 0) continue;
        Scalar inv = r[lead].inverse();
        for (auto& s : r) s *= inv;
        reducer.insert(r);
        reps_.push_back(std::move(r));
    }
    basis_.reserve(reps_.size());
    for (const Vec& r : reps_) basis_.push_back(unflatten(r));
}

Vec HomSpace::flatten(const ChainMap& f) const {
    if (!(f.source == source_) || !(f.target == target_) || f.degree != degree_)
        throw StructuralError("flatten: family does not match this Hom space");
    Vec v = vec_zero(source_.algebra().field(), layout_.total);
    for (const auto& b : layout_.blocks) {
        Vec coords = corners_.coords_of(b.idem_t, b.idem_s, f.comp_at(b.n).at(b.t, b.s));
        for (int k = 0; k < b.dim; ++k) v[b.offset + k] = coords[k];
    }
    return v;
}

ChainMap HomSpace::unflatten(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != layout_.total)
        throw StructuralError("unflatten: wrong coordinate length");
    ChainMap f = make_family(source_, target_, degree_);
    for (const auto& b : layout_.blocks) {
        Vec c(coords.begin() + b.offset, coords.begin() + b.offset + b.dim);
        f.comps[b.n - source_.lo()].at(b.t, b.s) = corners_.element_of(b.idem_t, b.idem_s, c);
    }
    return f;
}

HomSpace::Reduction HomSpace::reduce(const ChainMap& f) const {
    if (!is_chain_map(f)) throw InputError("reduce: the given family is not a chain map");
    const FieldSpec fld = source_.algebra().field();
    Vec v = flatten(f);

    // representatives and a basis of the boundary space are jointly
    // independent, so the decomposition is unique
    std::vector<Vec> cols = reps_;
    for (const Vec& b : boundary_span_.rows()) cols.push_back(b);
    Mat m = Mat::from_cols(fld, cols, layout_.total);
    auto sol = solve(m, v);
    if (!sol) throw StructuralError("reduce: cocycle outside cocycle space"); // unreachable for chain maps
    Vec coeffs(sol->begin(), sol->begin() + static_cast<int>(reps_.size()));

    Vec residual = v;
    for (std::size_t k = 0; k < reps_.size(); ++k) vec_add_scaled(residual, -coeffs[k], reps_[k]);
    auto hsol = solve(boundary_map_, residual);
    if (!hsol) throw StructuralError("reduce: residual is not a boundary"); // unreachable
    ChainMap homotopy = make_family(source_, target_, degree_ - 1);
    for (const auto& b : layout_below_.blocks) {
        Vec c(hsol->begin() + b.offset, hsol->begin() + b.offset + b.dim);
        homotopy.comps[b.n - source_.lo()].at(b.t, b.s) = corners_.element_of(b.idem_t, b.idem_s, c);
    }
    return Reduction{std::move(coeffs), std::move(homotopy)};
}

bool HomSpace::is_null_homotopic(const ChainMap& f) const {
    return vec_is_zero(reduce(f).coeffs);
}

HomSpace hom_k(const ProjComplex& x, const ProjComplex& y, int degree) { return HomSpace(x, y, degree); }

int hom_dim(const ProjComplex& x, const ProjComplex& y, int degree) {
    return HomSpace(x, y, degree).dim();
}

std::optional<std::pair<int, int>> support_window(const ProjComplex& x, const ProjComplex& y) {
    if (x.is_zero() || y.is_zero()) return std::nullopt;
    return std::make_pair(y.lo() - x.hi(), y.hi() - x.lo());
}

std::map<int, HomSpace> graded_hom(const ProjComplex& x, const ProjComplex& y) {
    std::map<int, HomSpace> spaces;
    auto window = support_window(x, y);
    if (!window) return spaces;
    for (int i = window->first; i <= window->second; ++i) spaces.emplace(i, HomSpace(x, y, i));
    return spaces;
}

int graded_hom_total_dim(const ProjComplex& x, const ProjComplex& y) {
    int total = 0;
    for (const auto& [i, h] : graded_hom(x, y)) total += h.dim();
    return total;
}

} // namespace homcat
