#include "homcat/tilting.hpp"

#include <algorithm>
#include <numeric>

namespace homcat {

namespace {

Approximation assemble(const ProjComplex& x, const std::vector<ProjComplex>& m,
                       const std::vector<ApproxComponent>& components,
                       const std::vector<std::map<int, HomSpace>>& homs) {
    if (components.empty()) {
        ProjComplex zero(x.algebra_ptr());
        ChainMap f = make_family(x, zero, 0);
        return Approximation{std::move(zero), std::move(f), components, true};
    }
    std::vector<ProjComplex> pieces;
    pieces.reserve(components.size());
    for (const auto& c : components) pieces.push_back(shift(m[c.m_index], c.shift_degree));
    ProjComplex m_prime = direct_sum_list(pieces);
    ChainMap f = make_family(x, m_prime, 0);
    for (int n = x.lo(); n <= x.hi(); ++n) {
        MatAlg& comp = f.comps[n - x.lo()];
        int row_off = 0;
        for (std::size_t k = 0; k < components.size(); ++k) {
            const auto& c = components[k];
            const ChainMap& basis_map = homs[c.m_index].at(c.shift_degree).basis()[c.basis_index];
            const MatAlg b = basis_map.comp_at(n); // rows = M_j.count(n + shift)
            for (int t = 0; t < b.rows(); ++t)
                for (int s = 0; s < b.cols(); ++s) comp.at(row_off + t, s) = b.at(t, s);
            row_off += pieces[k].count(n);
        }
    }
    return Approximation{std::move(m_prime), std::move(f), components, false};
}

} // namespace

Approximation left_approximation(const ProjComplex& x, const std::vector<ProjComplex>& m, ApproxMode mode) {
    if (x.is_zero()) throw PreconditionError("left_approximation: zero source");
    if (m.empty()) throw PreconditionError("left_approximation: empty target list");
    for (const auto& s : m)
        if (s.is_zero()) throw PreconditionError("left_approximation: zero summand in M");

    std::vector<std::map<int, HomSpace>> homs;
    homs.reserve(m.size());
    for (const auto& s : m) homs.push_back(graded_hom(x, s));

    std::vector<ApproxComponent> components;
    for (std::size_t j = 0; j < m.size(); ++j)
        for (const auto& [deg, h] : homs[j])
            for (int k = 0; k < h.dim(); ++k)
                components.push_back({static_cast<int>(j), deg, k});

    Approximation approx = assemble(x, m, components, homs);
    if (mode == ApproxMode::raw || approx.zero) return approx;

    // greedy removal in basis order; keep a component only if dropping it
    // breaks the approximation property
    std::vector<ApproxComponent> kept = components;
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<ApproxComponent> trial = kept;
        trial.erase(trial.begin() + i);
        Approximation cand = assemble(x, m, trial, homs);
        if (verify_left_approx(cand.f, m))
            kept = std::move(trial); // position i now holds the next candidate
        else
            ++i;
    }
    return assemble(x, m, kept, homs);
}

bool verify_left_approx(const ChainMap& f, const std::vector<ProjComplex>& m) {
    const ProjComplex& x = f.source;
    const ProjComplex& mp = f.target;
    for (const auto& s : m) {
        auto window = support_window(x, s);
        if (!window) continue;
        for (int i = window->first; i <= window->second; ++i) {
            HomSpace hx(x, s, i);
            if (hx.dim() == 0) continue;
            if (mp.is_zero()) return false;
            HomSpace hm(mp, s, i);
            std::vector<Vec> rows;
            rows.reserve(hm.dim());
            for (const ChainMap& g : hm.basis()) rows.push_back(hx.reduce(compose(f, g)).coeffs);
            Mat mat = Mat::from_rows(x.algebra().field(), rows, hx.dim());
            if (rank(mat) != hx.dim()) return false;
        }
    }
    return true;
}

bool verify_right_approx(const ChainMap& g, const std::vector<ProjComplex>& m) {
    const ProjComplex& mp = g.source;
    const ProjComplex& y = g.target;
    for (const auto& s : m) {
        auto window = support_window(s, y);
        if (!window) continue;
        for (int i = window->first; i <= window->second; ++i) {
            HomSpace hy(s, y, i);
            if (hy.dim() == 0) continue;
            if (mp.is_zero()) return false;
            HomSpace hm(s, mp, i);
            std::vector<Vec> rows;
            rows.reserve(hm.dim());
            for (const ChainMap& u : hm.basis()) rows.push_back(hy.reduce(compose(u, g)).coeffs);
            Mat mat = Mat::from_rows(s.algebra().field(), rows, hy.dim());
            if (rank(mat) != hy.dim()) return false;
        }
    }
    return true;
}

ExchangeResult exchange(const ProjComplex& x, const std::vector<ProjComplex>& m) {
    const FDAlgebra& a = x.algebra();
    if (!symmetrizing_form(a))
        throw PreconditionError("exchange requires a symmetric base algebra (no symmetrizing form certified)");

    Approximation approx = left_approximation(x, m, ApproxMode::reduced);
    ConeTriangle ct = cone_triangle(approx.f);
    Minimized min = minimize(ct.cone);

    std::vector<ProjComplex> lambda_list = m;
    lambda_list.push_back(x);
    std::vector<ProjComplex> gamma_list = m;
    if (!min.complex.is_zero()) gamma_list.push_back(min.complex);

    ExchangeResult res{
        approx,
        ct.cone,
        min.complex,
        compose(ct.incl, min.proj),
        compose(min.incl, ct.proj),
        end_graded(lambda_list),
        end_graded(gamma_list),
        end_degree0(lambda_list),
        end_degree0(gamma_list),
    };
    res.left_ok = verify_left_approx(approx.f, m);
    res.right_ok = verify_right_approx(res.tri_g, m);
    res.lambda_symmetric = symmetrizing_form(res.lambda.algebra()).has_value();
    res.gamma_symmetric = symmetrizing_form(res.gamma.algebra()).has_value();
    res.lambda0_symmetric = symmetrizing_form(res.lambda0.algebra()).has_value();
    res.gamma0_symmetric = symmetrizing_form(res.gamma0.algebra()).has_value();
    return res;
}

TiltingComplex build_tilting_complex(const GradedEndAlgebra& lambda, const Approximation& approx) {
    const AlgebraPtr base = lambda.algebra_ptr();
    const FDAlgebra& l = *base;
    const int x_index = lambda.find_summand(approx.f.source);
    if (x_index < 0) throw InputError("build_tilting_complex: approximation source is not a summand");

    TiltingComplex t{base, {}, ProjComplex(base), {x_index}, {}};
    for (int j = 0; j < lambda.summand_count(); ++j)
        if (j != x_index) t.summands.push_back(stalk(base, {j}, 0));

    if (approx.zero) {
        t.t2 = stalk(base, {x_index}, -1);
    } else {
        std::vector<int> row_idems;
        MatAlg d(l.field(), l.dim(), static_cast<int>(approx.components.size()), 1);
        for (std::size_t k = 0; k < approx.components.size(); ++k) {
            const auto& c = approx.components[k];
            const ChainMap& basis_map = lambda.hom(x_index, c.m_index, c.shift_degree).basis()[c.basis_index];
            d.at(static_cast<int>(k), 0) = lambda.element_of(basis_map);
            row_idems.push_back(c.m_index);
            t.mprime.emplace_back(c.m_index, c.shift_degree);
        }
        t.t2 = ProjComplex(base, -1, {{x_index}, row_idems}, {std::move(d)});
    }
    t.summands.push_back(t.t2);
    return t;
}

TiltingReport verify_tilting(const TiltingComplex& t) {
    TiltingReport report;
    ProjComplex total = t.total();

    report.hom_vanishing = true;
    if (auto window = support_window(total, total)) {
        for (int n = window->first; n <= window->second; ++n) {
            if (n == 0) continue;
            const int d = hom_dim(total, total, n);
            if (d != 0) {
                report.hom_vanishing = false;
                report.nonzero_degree_dims[n] = d;
            }
        }
    }

    // generation: recover the missing projectives as the minimized cone of
    // the evident map from the M'-profile stalk onto T2
    std::vector<int> recovered;
    if (t.t2.is_zero()) {
        report.generation = t.missing_idems.empty();
    } else {
        std::vector<int> profile_idems;
        for (const auto& [idem, deg] : t.mprime) profile_idems.push_back(idem);
        ProjComplex p = profile_idems.empty() ? ProjComplex(t.base) : stalk(t.base, profile_idems, 0);
        ChainMap g = make_family(p, t.t2, 0);
        if (!p.is_zero())
            for (std::size_t k = 0; k < profile_idems.size(); ++k)
                g.comps[0].at(static_cast<int>(k), static_cast<int>(k)) =
                    t.base->idempotent(profile_idems[k]);
        Minimized min = minimize(cone(g));
        report.cone_profile = summand_profile(min.complex);
        report.generation = report.cone_profile.size() == 1 && report.cone_profile[0].first == -1 &&
                            report.cone_profile[0].second == t.missing_idems;
        if (report.generation) recovered = t.missing_idems;
    }

    // all projectives must be reached by T1 summands or the recovery
    std::vector<int> reached = recovered;
    for (const auto& s : t.summands)
        for (int n = s.lo(); n <= s.hi(); ++n)
            for (int idx : s.summands_at(n)) reached.push_back(idx);
    std::sort(reached.begin(), reached.end());
    reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
    std::vector<int> all(t.base->idempotent_count());
    std::iota(all.begin(), all.end(), 0);
    if (reached != all) report.generation = false;

    return report;
}

FDAlgebra endring_of_tilting(const TiltingComplex& t) { return end_ungraded(t.summands); }

TiltingComplex prop21_tilting(const AlgebraPtr& a, const std::vector<int>& p_idems,
                              const std::vector<int>& q_idems) {
    if (q_idems.empty())
        throw PreconditionError("prop21_tilting: Q = 0 leaves no approximation target");
    if (!symmetrizing_form(*a))
        throw PreconditionError("prop21_tilting requires a symmetric algebra");
    std::vector<int> seen(a->idempotent_count(), 0);
    for (int i : p_idems) {
        if (i < 0 || i >= a->idempotent_count() || seen[i]++) throw InputError("prop21_tilting: bad P subset");
    }
    for (int i : q_idems) {
        if (i < 0 || i >= a->idempotent_count() || seen[i]++) throw InputError("prop21_tilting: bad Q subset");
    }
    for (int i = 0; i < a->idempotent_count(); ++i)
        if (!seen[i]) throw InputError("prop21_tilting: P and Q must split the regular module");

    TiltingComplex t{a, {}, ProjComplex(a), p_idems, {}};
    for (int q : q_idems) t.summands.push_back(stalk(a, {q}, 0));

    if (!p_idems.empty()) {
        ProjComplex x = stalk(a, p_idems, 0);
        std::vector<ProjComplex> m;
        m.reserve(q_idems.size());
        for (int q : q_idems) m.push_back(stalk(a, {q}, 0));
        Approximation approx = left_approximation(x, m, ApproxMode::raw);
        t.t2 = cone(approx.f);
        for (const auto& c : approx.components) t.mprime.emplace_back(q_idems[c.m_index], c.shift_degree);
        t.summands.push_back(t.t2);
    }
    return t;
}

} // namespace homcat
