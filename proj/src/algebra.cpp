#include "homcat/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace homcat {

FDAlgebra::FDAlgebra(FieldSpec field, std::vector<std::string> basis_labels,
                     std::vector<std::vector<SparseVec>> mult, Vec unit,
                     std::vector<Vec> idempotents)
    : field_(field),
      dim_(static_cast<int>(basis_labels.size())),
      labels_(std::move(basis_labels)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      idempotents_(std::move(idempotents)) {
    if (dim_ <= 0) throw StructuralError("algebra dimension must be positive");
    if (static_cast<int>(mult_.size()) != dim_) throw StructuralError("mult table: wrong row count");
    for (const auto& row : mult_) {
        if (static_cast<int>(row.size()) != dim_) throw StructuralError("mult table: wrong column count");
        for (const auto& entry : row)
            for (const auto& t : entry)
                if (t.index < 0 || t.index >= dim_)
                    throw StructuralError("mult table: basis index out of range");
    }
    if (static_cast<int>(unit_.size()) != dim_) throw StructuralError("unit: wrong length");
    for (const auto& e : idempotents_)
        if (static_cast<int>(e.size()) != dim_) throw StructuralError("idempotent: wrong length");
    validate();
}

Vec FDAlgebra::basis_element(int i) const {
    Vec v = zero_element();
    v[i] = Scalar::one(field_);
    return v;
}

Vec FDAlgebra::mul(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw StructuralError("mul: element dimension mismatch");
    Vec r = zero_element();
    for (int i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (const auto& t : mult_[i][j]) r[t.index] += c * t.coeff;
        }
    }
    return r;
}

Mat FDAlgebra::left_mult_matrix(const Vec& a) const {
    Mat m(field_, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        for (int i = 0; i < dim_; ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& t : mult_[i][j]) m.at(t.index, j) += a[i] * t.coeff;
        }
    }
    return m;
}

void FDAlgebra::validate() const {
    // unit laws
    for (int i = 0; i < dim_; ++i) {
        Vec b = basis_element(i);
        if (mul(unit_, b) != b || mul(b, unit_) != b)
            throw StructuralError("unit law fails on basis element " + labels_[i]);
    }
    // associativity on basis triples
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            Vec ij = mul(basis_element(i), basis_element(j));
            for (int k = 0; k < dim_; ++k) {
                Vec jk = mul(basis_element(j), basis_element(k));
                if (mul(ij, basis_element(k)) != mul(basis_element(i), jk))
                    throw StructuralError("associativity fails on basis triple (" + labels_[i] + "," +
                                          labels_[j] + "," + labels_[k] + ")");
            }
        }
    }
    // idempotents: orthogonal, idempotent, complete
    if (!idempotents_.empty()) {
        Vec sum = zero_element();
        for (std::size_t a = 0; a < idempotents_.size(); ++a) {
            for (std::size_t b = 0; b < idempotents_.size(); ++b) {
                Vec prod = mul(idempotents_[a], idempotents_[b]);
                if (a == b) {
                    if (prod != idempotents_[a]) throw StructuralError("idempotent axiom fails");
                } else if (!vec_is_zero(prod)) {
                    throw StructuralError("idempotents not orthogonal");
                }
            }
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += idempotents_[a][i];
        }
        if (sum != unit_) throw StructuralError("idempotents do not sum to the unit");
    }
}

CornerTable::CornerTable(const FDAlgebra& a) {
    const int r = a.idempotent_count();
    corners_.reserve(r);
    for (int t = 0; t < r; ++t) {
        std::vector<EchelonBasis> row;
        row.reserve(r);
        for (int s = 0; s < r; ++s) {
            EchelonBasis basis(a.field(), a.dim());
            for (int k = 0; k < a.dim(); ++k)
                basis.insert(a.mul(a.mul(a.idempotent(t), a.basis_element(k)), a.idempotent(s)));
            row.push_back(std::move(basis));
        }
        corners_.push_back(std::move(row));
    }
}

Vec CornerTable::element_of(int t, int s, const Vec& coords) const {
    const EchelonBasis& basis = corners_[t][s];
    if (static_cast<int>(coords.size()) != basis.dim())
        throw StructuralError("corner coordinates: wrong length");
    Vec r = vec_zero(basis.field(), basis.width());
    for (int k = 0; k < basis.dim(); ++k) vec_add_scaled(r, coords[k], basis.rows()[k]);
    return r;
}

Vec CornerTable::coords_of(int t, int s, const Vec& element) const {
    auto c = corners_[t][s].coordinates(element);
    if (!c) throw StructuralError("element does not lie in idempotent corner");
    return *c;
}

std::vector<Vec> radical_basis(const FDAlgebra& a) {
    if (!a.field().is_rational())
        throw UnsupportedError("radical computation requires characteristic 0 (got " + a.field().name() + ")");
    const int d = a.dim();
    // Gram matrix of (x, y) |-> trace(L_{xy}); its radical is the Jacobson radical.
    Mat gram(a.field(), d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec prod = a.mul(a.basis_element(i), a.basis_element(j));
            Mat l = a.left_mult_matrix(prod);
            Scalar tr = Scalar::zero(a.field());
            for (int k = 0; k < d; ++k) tr += l.at(k, k);
            gram.at(i, j) = tr;
        }
    return nullspace(gram);
}

namespace {

std::vector<Vec> subspace_product(const FDAlgebra& a, const std::vector<Vec>& u, const std::vector<Vec>& v) {
    EchelonBasis span(a.field(), a.dim());
    for (const auto& x : u)
        for (const auto& y : v) span.insert(a.mul(x, y));
    return span.rows();
}

} // namespace

std::vector<int> radical_power_dims(const FDAlgebra& a) {
    std::vector<Vec> rad = radical_basis(a);
    std::vector<int> dims;
    std::vector<Vec> power = rad;
    while (!power.empty()) {
        dims.push_back(static_cast<int>(power.size()));
        power = subspace_product(a, power, rad);
        if (dims.size() > static_cast<std::size_t>(a.dim()))
            throw StructuralError("radical is not nilpotent"); // cannot happen for a true radical
    }
    return dims;
}

IntMat cartan_matrix(const FDAlgebra& a) {
    CornerTable corners(a);
    const int r = a.idempotent_count();
    IntMat c(r, std::vector<std::int64_t>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) c[i][j] = corners.corner_dim(i, j);
    return c;
}

std::string int_mat_det(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    Mat q(FieldSpec::rationals(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = Scalar(FieldSpec::rationals(), static_cast<long>(m[i][j]));
    return det(q).str();
}

IntMat canonical_int_mat(const IntMat& m) {
    const int n = static_cast<int>(m.size());
    if (n > 8) throw UnsupportedError("canonical matrix form supports at most 8 idempotents");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    IntMat best;
    do {
        IntMat cand(n, std::vector<std::int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cand[i][j] = m[perm[i]][perm[j]];
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

int center_dim(const FDAlgebra& a) {
    const int d = a.dim();
    // stack the commutation constraints [x, b_j] = 0 for all j
    Mat sys(a.field(), d * d, d);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            Vec lhs = a.mul(a.basis_element(i), a.basis_element(j));
            Vec rhs = a.mul(a.basis_element(j), a.basis_element(i));
            for (int k = 0; k < d; ++k) sys.at(j * d + k, i) = lhs[k] - rhs[k];
        }
    }
    return static_cast<int>(nullspace(sys).size());
}

int commutator_dim(const FDAlgebra& a) {
    EchelonBasis span(a.field(), a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            Vec c = vec_sub(a.mul(a.basis_element(i), a.basis_element(j)),
                            a.mul(a.basis_element(j), a.basis_element(i)));
            span.insert(std::move(c));
        }
    return span.dim();
}

Scalar apply_functional(const Vec& functional, const Vec& element) {
    if (functional.size() != element.size()) throw StructuralError("functional/element length mismatch");
    Scalar r = functional.empty() ? Scalar() : Scalar::zero(functional[0].field());
    for (std::size_t i = 0; i < functional.size(); ++i) r += functional[i] * element[i];
    return r;
}

Mat gram_matrix(const FDAlgebra& a, const Vec& functional) {
    const int d = a.dim();
    Mat g(a.field(), d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            g.at(i, j) = apply_functional(functional, a.mul(a.basis_element(i), a.basis_element(j)));
    return g;
}

std::optional<Vec> symmetrizing_form(const FDAlgebra& a) {
    const int d = a.dim();
    const FieldSpec f = a.field();
    // Space of symmetric functionals: l(b_i b_j - b_j b_i) = 0 for all pairs.
    Mat sys(f, d * d, d);
    int row = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec c = vec_sub(a.mul(a.basis_element(i), a.basis_element(j)),
                            a.mul(a.basis_element(j), a.basis_element(i)));
            for (int k = 0; k < d; ++k) sys.at(row, k) = c[k];
            ++row;
        }
    std::vector<Vec> sym = nullspace(sys);
    if (sym.empty()) return std::nullopt;
    const int s = static_cast<int>(sym.size());

    auto nondegenerate = [&](const Vec& l) { return !det(gram_matrix(a, l)).is_zero(); };
    auto combine = [&](const std::vector<long>& coeff) {
        Vec l = vec_zero(f, d);
        for (int k = 0; k < s; ++k) vec_add_scaled(l, Scalar(f, coeff[k]), sym[k]);
        return l;
    };

    // Deterministic search: single basis functionals, then prefix sums, then
    // geometric combinations sum t^k l_k for t = 1 .. dim+1, then a bounded
    // grid of small coefficients.  Failure means "not certified", not proof
    // of asymmetry.
    for (int k = 0; k < s; ++k)
        if (nondegenerate(sym[k])) return sym[k];
    {
        std::vector<long> coeff(s, 0);
        for (int k = 0; k < s; ++k) {
            coeff[k] = 1;
            Vec l = combine(coeff);
            if (nondegenerate(l)) return l;
        }
    }
    for (long t = 1; t <= d + 1; ++t) {
        std::vector<long> coeff(s);
        long power = 1;
        for (int k = 0; k < s; ++k) {
            coeff[k] = power;
            power *= t;
        }
        Vec l = combine(coeff);
        if (nondegenerate(l)) return l;
    }
    // bounded grid over {0, .., dim+1}^s, budgeted
    long budget = 20000;
    std::vector<long> coeff(s, 0);
    while (budget-- > 0) {
        int k = 0;
        while (k < s && coeff[k] == d + 1) coeff[k++] = 0;
        if (k == s) break;
        ++coeff[k];
        Vec l = combine(coeff);
        if (nondegenerate(l)) return l;
    }
    return std::nullopt;
}

Fingerprint fingerprint(const FDAlgebra& a) {
    Fingerprint fp;
    fp.dim = a.dim();
    fp.idempotents = a.idempotent_count();
    IntMat cartan = cartan_matrix(a);
    fp.cartan_canonical = canonical_int_mat(cartan);
    fp.cartan_det = int_mat_det(cartan);
    fp.radical_power_dims = radical_power_dims(a);
    fp.center_dim = center_dim(a);
    fp.commutator_dim = commutator_dim(a);
    fp.symmetric_certified = symmetrizing_form(a).has_value();
    return fp;
}

} // namespace homcat
