#include "homcat/endalg.hpp"

#include <algorithm>

namespace homcat {

GradedEndAlgebra::GradedEndAlgebra(std::vector<ProjComplex> summands, bool graded)
    : summands_(std::move(summands)), graded_(graded) {
    if (summands_.empty()) throw PreconditionError("end algebra of an empty summand list");
    const AlgebraPtr base = summands_[0].algebra_ptr();
    for (const auto& s : summands_) {
        if (s.algebra_ptr() != base) throw StructuralError("end algebra: summands over different algebras");
        if (s.is_zero()) throw PreconditionError("end algebra: zero summand");
    }
    const FieldSpec f = base->field();
    const int nsum = static_cast<int>(summands_.size());

    homs_.resize(nsum);
    for (int a = 0; a < nsum; ++a) {
        homs_[a].resize(nsum);
        for (int b = 0; b < nsum; ++b) {
            if (graded_) {
                homs_[a][b] = graded_hom(summands_[a], summands_[b]);
            } else {
                homs_[a][b].emplace(0, HomSpace(summands_[a], summands_[b], 0));
            }
        }
    }

    // basis ordered by (source summand, target summand, degree, index)
    std::vector<std::string> labels;
    for (int a = 0; a < nsum; ++a)
        for (int b = 0; b < nsum; ++b)
            for (const auto& [deg, h] : homs_[a][b]) {
                if (h.dim() == 0) continue;
                block_offsets_[{a, b, deg}] = {static_cast<int>(keys_.size()), h.dim()};
                for (int k = 0; k < h.dim(); ++k) {
                    keys_.push_back({a, b, deg, k});
                    grading_.push_back(deg);
                    labels.push_back("h" + std::to_string(a + 1) + ">" + std::to_string(b + 1) + "@" +
                                     std::to_string(deg) + "#" + std::to_string(k));
                }
            }
    const int dim = static_cast<int>(keys_.size());

    auto scatter = [&](int a, int b, int deg, const Vec& coeffs) {
        Vec v = vec_zero(f, dim);
        auto it = block_offsets_.find({a, b, deg});
        if (it == block_offsets_.end()) {
            if (!vec_is_zero(coeffs)) throw StructuralError("end algebra: coefficients for missing block");
            return v;
        }
        for (int k = 0; k < it->second.second; ++k) v[it->second.first + k] = coeffs[k];
        return v;
    };

    // structure constants by compose + reduce; mult[u][v] = u o v (v first)
    std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
    for (int v = 0; v < dim; ++v) {
        const EndBasisKey& kv = keys_[v];
        const ChainMap& mv = homs_[kv.src][kv.dst].at(kv.deg).basis()[kv.idx];
        for (int u = 0; u < dim; ++u) {
            const EndBasisKey& ku = keys_[u];
            if (ku.src != kv.dst) continue;
            const ChainMap& mu = homs_[ku.src][ku.dst].at(ku.deg).basis()[ku.idx];
            ChainMap prod = compose(mv, mu);
            const int pdeg = ku.deg + kv.deg;
            const HomSpace* h = hom_ptr(kv.src, ku.dst, pdeg);
            Vec coeffs;
            if (h == nullptr) {
                if (!is_zero_map(prod))
                    throw StructuralError("end algebra: composite outside computed degrees");
                continue;
            }
            coeffs = h->reduce(prod).coeffs;
            Vec full = scatter(kv.src, ku.dst, pdeg, coeffs);
            for (int k = 0; k < dim; ++k)
                if (!full[k].is_zero()) mult[u][v].push_back({k, full[k]});
        }
    }

    // idempotents from identity maps
    std::vector<Vec> idems;
    Vec unit = vec_zero(f, dim);
    for (int a = 0; a < nsum; ++a) {
        const HomSpace& h = homs_[a][a].at(0);
        Vec coeffs = h.reduce(identity_map(summands_[a])).coeffs;
        Vec e = scatter(a, a, 0, coeffs);
        for (int k = 0; k < dim; ++k) unit[k] += e[k];
        idems.push_back(std::move(e));
    }

    alg_ = std::make_shared<FDAlgebra>(f, std::move(labels), std::move(mult), std::move(unit),
                                       std::move(idems));
}

const HomSpace* GradedEndAlgebra::hom_ptr(int src, int dst, int deg) const {
    auto it = homs_[src][dst].find(deg);
    return it == homs_[src][dst].end() ? nullptr : &it->second;
}

const HomSpace& GradedEndAlgebra::hom(int src, int dst, int deg) const {
    const HomSpace* h = hom_ptr(src, dst, deg);
    if (!h) throw InputError("end algebra: no Hom space at that degree");
    return *h;
}

int GradedEndAlgebra::find_summand(const ProjComplex& c) const {
    for (int a = 0; a < summand_count(); ++a)
        if (summands_[a] == c) return a;
    return -1;
}

Vec GradedEndAlgebra::element_of(const ChainMap& f) const {
    const int src = find_summand(f.source);
    const int dst = find_summand(f.target);
    if (src < 0 || dst < 0) throw InputError("element_of: map endpoints are not listed summands");
    const HomSpace* h = hom_ptr(src, dst, f.degree);
    Vec v = vec_zero(alg_->field(), alg_->dim());
    if (h == nullptr) {
        if (!is_zero_map(f)) throw InputError("element_of: map degree outside the computed grading");
        return v;
    }
    Vec coeffs = h->reduce(f).coeffs;
    auto it = block_offsets_.find({src, dst, f.degree});
    if (it != block_offsets_.end())
        for (int k = 0; k < it->second.second; ++k) v[it->second.first + k] = coeffs[k];
    return v;
}

GradedEndAlgebra end_graded(const std::vector<ProjComplex>& summands) {
    return GradedEndAlgebra(summands, true);
}

GradedEndAlgebra end_degree0(const std::vector<ProjComplex>& summands) {
    return GradedEndAlgebra(summands, false);
}

FDAlgebra end_ungraded(const std::vector<ProjComplex>& summands) {
    return end_degree0(summands).algebra();
}

namespace {

ChainMap evaluate_word(const std::map<std::string, ChainMap>& named, const std::vector<std::string>& word) {
    if (word.empty()) throw InputError("relation word is empty");
    auto lookup = [&](const std::string& name) -> const ChainMap& {
        auto it = named.find(name);
        if (it == named.end()) throw InputError("relation references unknown name '" + name + "'");
        return it->second;
    };
    ChainMap acc = lookup(word.back());
    for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i) acc = compose(acc, lookup(word[i]));
    return acc;
}

} // namespace

RelationReport verify_relations(const GradedEndAlgebra& e, const std::map<std::string, ChainMap>& named,
                                const std::vector<Relation>& relations) {
    const FieldSpec f = e.algebra().field();
    RelationReport report;
    for (const Relation& rel : relations) {
        RelationCheck check;
        check.display = rel.display;
        std::vector<ChainMap> terms;
        for (const RelationTerm& term : rel.terms) {
            ChainMap m = evaluate_word(named, term.word);
            if (term.coeff != 1) m = cm_scaled(m, Scalar(f, static_cast<long>(term.coeff)));
            if (!is_zero_map(m)) terms.push_back(std::move(m));
        }
        if (terms.empty()) {
            check.pass = true;
            check.trivially_zero = true;
        } else {
            ChainMap total = terms[0];
            for (std::size_t i = 1; i < terms.size(); ++i) {
                if (!(terms[i].source == total.source) || !(terms[i].target == total.target) ||
                    terms[i].degree != total.degree)
                    throw InputError("relation '" + rel.display + "' mixes non-composable terms");
                total = cm_add(total, terms[i]);
            }
            check.degree = total.degree;
            const int src = e.find_summand(total.source);
            const int dst = e.find_summand(total.target);
            const HomSpace* h = (src >= 0 && dst >= 0) ? e.hom_ptr(src, dst, total.degree) : nullptr;
            HomSpace fresh = h ? *h : HomSpace(total.source, total.target, total.degree);
            auto red = fresh.reduce(total);
            check.pass = vec_is_zero(red.coeffs);
            check.residual_coeffs = red.coeffs;
            if (check.pass) check.homotopy = red.homotopy;
        }
        report.all_pass = report.all_pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

bool spanning_check(const GradedEndAlgebra& e, const std::map<std::string, ChainMap>& named) {
    const FDAlgebra& a = e.algebra();
    std::vector<Vec> gens;
    for (const auto& [name, map] : named) gens.push_back(e.element_of(map));

    EchelonBasis span(a.field(), a.dim());
    std::vector<Vec> frontier;
    for (int s = 0; s < e.summand_count(); ++s) {
        Vec id = e.idempotent_element(s);
        if (span.insert(id)) frontier.push_back(id);
    }
    for (int len = 1; len <= a.dim() && !frontier.empty(); ++len) {
        std::vector<Vec> next;
        for (const Vec& g : gens)
            for (const Vec& x : frontier) {
                Vec prod = a.mul(g, x);
                if (span.insert(prod)) next.push_back(std::move(prod));
            }
        frontier = std::move(next);
    }
    return span.dim() == a.dim();
}

QuiverData quiver_data(const FDAlgebra& a) {
    std::vector<Vec> rad = radical_basis(a);
    std::vector<Vec> rad2;
    {
        EchelonBasis span(a.field(), a.dim());
        for (const auto& x : rad)
            for (const auto& y : rad) span.insert(a.mul(x, y));
        rad2 = span.rows();
    }
    const int r = a.idempotent_count();
    auto corner_dim_of = [&](const std::vector<Vec>& space, int t, int s) {
        EchelonBasis span(a.field(), a.dim());
        for (const auto& v : space) span.insert(a.mul(a.mul(a.idempotent(t), v), a.idempotent(s)));
        return span.dim();
    };
    QuiverData q;
    q.vertices = r;
    q.arrows.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            q.arrows[i][j] = corner_dim_of(rad, j, i) - corner_dim_of(rad2, j, i);
    return q;
}

} // namespace homcat
