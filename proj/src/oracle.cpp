#include "homcat/oracle.hpp"

#include <vector>

namespace homcat {

namespace {

using u64 = std::uint64_t;
using ModVec = std::vector<unsigned>;

// Minimal mod-p kit, deliberately separate from the exact-field linear
// algebra used by hom_k.
struct ModAlg {
    unsigned p;
    int d;
    std::vector<unsigned> table; // c[i][j][k] flattened

    unsigned c(int i, int j, int k) const {
        return table[(static_cast<std::size_t>(i) * d + j) * d + k];
    }

    ModVec mul(const ModVec& a, const ModVec& b) const {
        ModVec r(d, 0);
        for (int i = 0; i < d; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < d; ++j) {
                if (!b[j]) continue;
                const u64 ab = static_cast<u64>(a[i]) * b[j] % p;
                if (!ab) continue;
                for (int k = 0; k < d; ++k) {
                    const unsigned ck = c(i, j, k);
                    if (ck) r[k] = static_cast<unsigned>((r[k] + ab * ck) % p);
                }
            }
        }
        return r;
    }
};

unsigned scalar_mod(const Scalar& s, unsigned p) {
    // prime-field scalars are canonical representatives with denominator 1
    mpz_class n = s.raw().get_num() % static_cast<long>(p);
    if (n < 0) n += static_cast<long>(p);
    return static_cast<unsigned>(n.get_ui());
}

ModVec to_mod(const Vec& v, unsigned p) {
    ModVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = scalar_mod(v[i], p);
    return r;
}

bool mod_is_zero(const ModVec& v) {
    for (unsigned x : v)
        if (x) return false;
    return true;
}

// Row echelon over F_p for the corner spans.
struct ModEchelon {
    unsigned p;
    int width;
    std::vector<ModVec> rows;
    std::vector<int> leads;

    unsigned inv(unsigned a) const { // p is prime, a != 0
        unsigned r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = static_cast<unsigned>(static_cast<u64>(r) * b % p);
            b = static_cast<unsigned>(static_cast<u64>(b) * b % p);
            e >>= 1;
        }
        return r;
    }

    void insert(ModVec v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const unsigned k = v[leads[r]];
            if (k)
                for (int i = 0; i < width; ++i)
                    v[i] = static_cast<unsigned>((v[i] + static_cast<u64>(p - k) * rows[r][i]) % p);
        }
        int lead = -1;
        for (int i = 0; i < width; ++i)
            if (v[i]) { lead = i; break; }
        if (lead < 0) return;
        const unsigned s = inv(v[lead]);
        for (int i = 0; i < width; ++i) v[i] = static_cast<unsigned>(static_cast<u64>(v[i]) * s % p);
        rows.push_back(std::move(v));
        leads.push_back(lead);
    }
};

struct Slot {
    int n, t, s;      // component position
    ModVec basis_elem; // corner basis element represented by this digit
};

// Coordinate slots of all degree-i families, corner bases computed mod p in
// a fixed order.
std::vector<Slot> build_slots(const ModAlg& alg, const std::vector<ModVec>& idems, const ProjComplex& x,
                              const ProjComplex& y, int degree) {
    std::vector<Slot> slots;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        const int m = n + degree;
        if (x.count(n) == 0 || y.count(m) == 0) continue;
        for (int t = 0; t < y.count(m); ++t)
            for (int s = 0; s < x.count(n); ++s) {
                ModEchelon corner{alg.p, alg.d, {}, {}};
                for (int k = 0; k < alg.d; ++k) {
                    ModVec bk(alg.d, 0);
                    bk[k] = 1;
                    corner.insert(alg.mul(alg.mul(idems[y.idem_at(m, t)], bk), idems[x.idem_at(n, s)]));
                }
                for (auto& row : corner.rows) slots.push_back({n, t, s, std::move(row)});
            }
    }
    return slots;
}

struct SparseImage {
    std::vector<std::pair<int, unsigned>> terms;
};

// Output coordinates: full coefficient arrays of the degree-(i+1) family
// d(f), ordered by (source degree, target, source, basis coefficient).
struct OutputSpace {
    int total = 0;
    std::vector<int> offsets; // per degree n - x.lo()
    std::vector<int> tcount;  // target count at n + degree + 1

    OutputSpace(const ProjComplex& x, const ProjComplex& y, int degree, int d) {
        offsets.resize(x.is_zero() ? 0 : x.hi() - x.lo() + 1, -1);
        tcount.resize(offsets.size(), 0);
        for (int n = x.lo(); n <= x.hi(); ++n) {
            offsets[n - x.lo()] = total;
            tcount[n - x.lo()] = y.count(n + degree + 1);
            total += y.count(n + degree + 1) * x.count(n) * d;
        }
    }

    int index(const ProjComplex& x, int d, int n, int t, int s, int k) const {
        return offsets[n - x.lo()] + (t * x.count(n) + s) * d + k;
    }
};

// Differential image of the unit family at one slot, as a sparse output
// vector: d(f)_n = d_Y f_n - (-1)^i f_{n+1} d_X.
SparseImage slot_image(const ModAlg& alg, const ProjComplex& x, const ProjComplex& y, int degree,
                       const Slot& slot, const OutputSpace& out) {
    SparseImage img;
    const unsigned p = alg.p;
    // d_Y o f at source degree n
    {
        const int n = slot.n;
        MatAlg dy = y.diff_at(n + degree);
        for (int t2 = 0; t2 < dy.rows(); ++t2) {
            ModVec prod = alg.mul(to_mod(dy.at(t2, slot.t), p), slot.basis_elem);
            for (int k = 0; k < alg.d; ++k)
                if (prod[k]) img.terms.emplace_back(out.index(x, alg.d, n, t2, slot.s, k), prod[k]);
        }
    }
    // -(-1)^i f o d_X at source degree n-1
    {
        const int n = slot.n - 1;
        if (n >= x.lo()) {
            MatAlg dx = x.diff_at(n);
            const unsigned sign = (degree % 2 == 0) ? p - 1 : 1; // -(-1)^i mod p
            for (int s2 = 0; s2 < dx.cols(); ++s2) {
                ModVec prod = alg.mul(slot.basis_elem, to_mod(dx.at(slot.s, s2), p));
                for (int k = 0; k < alg.d; ++k)
                    if (prod[k]) {
                        const unsigned v = static_cast<unsigned>(static_cast<u64>(prod[k]) * sign % p);
                        if (v) img.terms.emplace_back(out.index(x, alg.d, n, slot.t, s2, k), v);
                    }
            }
        }
    }
    return img;
}

// Counts assignments (c_0, .., c_{K-1}) in F_p^K with sum c_q img_q = 0 by
// walking the full odometer and maintaining the accumulated image.
u64 count_kernel(unsigned p, const std::vector<SparseImage>& imgs, int out_total, u64 total_assignments) {
    const int K = static_cast<int>(imgs.size());
    std::vector<unsigned> acc(out_total, 0);
    std::vector<unsigned> digit(K, 0);
    int nonzero = 0;
    auto add_image = [&](const SparseImage& img) {
        for (const auto& [idx, val] : img.terms) {
            const unsigned before = acc[idx];
            const unsigned after = static_cast<unsigned>((before + val) % p);
            acc[idx] = after;
            if (before == 0 && after != 0) ++nonzero;
            else if (before != 0 && after == 0) --nonzero;
        }
    };
    u64 count = 0;
    for (u64 visit = 0; visit < total_assignments; ++visit) {
        if (nonzero == 0) ++count;
        // odometer increment; adding img once per wrapped digit restores the
        // p-1 -> 0 rollover since p * img = 0
        int q = 0;
        while (q < K) {
            add_image(imgs[q]);
            if (digit[q] + 1 < p) {
                ++digit[q];
                break;
            }
            digit[q] = 0;
            ++q;
        }
    }
    return count;
}

int exact_log(u64 value, unsigned p) {
    int e = 0;
    while (value > 1) {
        if (value % p != 0) throw StructuralError("oracle: solution count is not a power of p");
        value /= p;
        ++e;
    }
    return e;
}

u64 checked_pow(unsigned p, std::size_t e, u64 max_count) {
    u64 r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > max_count / p)
            throw UnsupportedError("oracle: enumeration size exceeds the configured bound");
        r *= p;
    }
    return r;
}

u64 enumerate_side(const ModAlg& alg, const std::vector<ModVec>& idems, const ProjComplex& x,
                   const ProjComplex& y, int degree, u64 max_count) {
    std::vector<Slot> slots = build_slots(alg, idems, x, y, degree);
    const u64 total = checked_pow(alg.p, slots.size(), max_count);
    OutputSpace out(x, y, degree, alg.d);
    std::vector<SparseImage> imgs;
    imgs.reserve(slots.size());
    for (const auto& slot : slots) imgs.push_back(slot_image(alg, x, y, degree, slot, out));
    return count_kernel(alg.p, imgs, out.total, total);
}

} // namespace

OracleResult oracle_enumerate(const ProjComplex& x, const ProjComplex& y, int degree, u64 max_count) {
    const FDAlgebra& a = x.algebra();
    if (x.algebra_ptr() != y.algebra_ptr()) throw StructuralError("oracle: different base algebras");
    if (a.field().is_rational())
        throw PreconditionError("oracle_enumerate requires a prime field");
    const unsigned p = static_cast<unsigned>(a.field().characteristic());

    ModAlg alg{p, a.dim(), std::vector<unsigned>(static_cast<std::size_t>(a.dim()) * a.dim() * a.dim(), 0)};
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& term : a.mult_entry(i, j))
                alg.table[(static_cast<std::size_t>(i) * a.dim() + j) * a.dim() + term.index] =
                    scalar_mod(term.coeff, p);
    std::vector<ModVec> idems;
    idems.reserve(a.idempotent_count());
    for (int e = 0; e < a.idempotent_count(); ++e) idems.push_back(to_mod(a.idempotent(e), p));

    OracleResult res;
    res.cocycle_count = enumerate_side(alg, idems, x, y, degree, max_count);
    res.cocycle_dim = exact_log(res.cocycle_count, p);

    // boundaries: image size of d on degree-1-lower families, counted as
    // (number of lower families) / (kernel size)
    std::vector<Slot> below = build_slots(alg, idems, x, y, degree - 1);
    const u64 below_total = checked_pow(p, below.size(), max_count);
    const u64 kernel = enumerate_side(alg, idems, x, y, degree - 1, max_count);
    res.boundary_count = below_total / kernel;
    res.boundary_dim = exact_log(res.boundary_count, p);
    return res;
}

} // namespace homcat
