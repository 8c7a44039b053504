#include "homcat/presets.hpp"

namespace homcat {

std::string preset_to_string(PresetId id) {
    switch (id) {
        case PresetId::example1: return "example1";
        case PresetId::example2: return "example2";
        case PresetId::example3: return "example3";
        case PresetId::dga_section7: return "dga_section7";
    }
    throw InputError("unknown preset id");
}

std::optional<PresetId> preset_from_string(const std::string& name) {
    if (name == "example1") return PresetId::example1;
    if (name == "example2") return PresetId::example2;
    if (name == "example3") return PresetId::example3;
    if (name == "dga_section7") return PresetId::dga_section7;
    return std::nullopt;
}

const ProjComplex& PresetInstance::complex(const std::string& name) const {
    auto it = complexes.find(name);
    if (it == complexes.end()) throw InputError("preset has no complex named '" + name + "'");
    return it->second;
}

std::vector<ProjComplex> PresetInstance::summand_list() const {
    std::vector<ProjComplex> list;
    list.reserve(end_summands.size());
    for (const auto& name : end_summands) list.push_back(complex(name));
    return list;
}

AlgebraPtr truncated_poly(int n, FieldSpec field) {
    if (n < 2) throw InputError("truncated_poly requires n >= 2");
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k)
        labels.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x^" + std::to_string(k)));
    std::vector<std::vector<SparseVec>> mult(n, std::vector<SparseVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) mult[i][j].push_back({i + j, Scalar::one(field)});
    Vec unit = vec_zero(field, n);
    unit[0] = Scalar::one(field);
    return std::make_shared<FDAlgebra>(field, std::move(labels), std::move(mult), unit,
                                       std::vector<Vec>{unit});
}

AlgebraPtr dihedral_base(int n, int s, FieldSpec field) {
    if (n < 2 || s < 2) throw InputError("dihedral_base requires n, s >= 2");
    const int dim = n + s;
    const int socle = dim - 1;
    // indices: 0 = 1, 1..n-1 = x^k, n..n+s-2 = y^j, n+s-1 = x^n = y^s
    std::vector<std::string> labels(dim);
    labels[0] = "1";
    for (int k = 1; k < n; ++k) labels[k] = k == 1 ? "x" : "x^" + std::to_string(k);
    for (int j = 1; j < s; ++j) labels[n - 1 + j] = j == 1 ? "y" : "y^" + std::to_string(j);
    labels[socle] = "x^" + std::to_string(n);

    auto xpow = [&](int e) -> int { return e == 0 ? 0 : (e < n ? e : (e == n ? socle : -1)); };
    auto ypow = [&](int e) -> int { return e == 0 ? 0 : (e < s ? n - 1 + e : (e == s ? socle : -1)); };
    auto kind = [&](int idx) -> std::pair<char, int> {
        if (idx == 0) return {'1', 0};
        if (idx == socle) return {'s', 0};
        if (idx < n) return {'x', idx};
        return {'y', idx - n + 1};
    };

    std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto [ti, ei] = kind(i);
            auto [tj, ej] = kind(j);
            int out = -1;
            if (ti == '1') out = j;
            else if (tj == '1') out = i;
            else if (ti == 's' || tj == 's') out = -1; // socle times radical vanishes
            else if (ti == 'x' && tj == 'x') out = xpow(ei + ej);
            else if (ti == 'y' && tj == 'y') out = ypow(ei + ej);
            else out = -1; // xy = yx = 0
            if (out >= 0) mult[i][j].push_back({out, Scalar::one(field)});
        }
    Vec unit = vec_zero(field, dim);
    unit[0] = Scalar::one(field);
    return std::make_shared<FDAlgebra>(field, std::move(labels), std::move(mult), unit,
                                       std::vector<Vec>{unit});
}

ProjComplex two_term_complex(const AlgebraPtr& a, const Vec& differential) {
    MatAlg d(a->field(), a->dim(), 1, 1);
    d.at(0, 0) = differential;
    return ProjComplex(a, -1, {{0}, {0}}, {std::move(d)});
}

namespace {

std::vector<std::string> pow_word(const std::string& name, int e) {
    return std::vector<std::string>(static_cast<std::size_t>(e), name);
}

std::vector<std::string> cat(std::initializer_list<std::vector<std::string>> parts) {
    std::vector<std::string> w;
    for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
    return w;
}

std::vector<std::string> repeat_word(const std::vector<std::string>& w, int e) {
    std::vector<std::string> r;
    for (int i = 0; i < e; ++i) r.insert(r.end(), w.begin(), w.end());
    return r;
}

std::string pow_str(const std::string& name, int e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

ChainMap entry_map(const ProjComplex& x, const ProjComplex& y, int degree, int at_degree, const Vec& value) {
    ChainMap f = make_family(x, y, degree);
    f.comps[at_degree - x.lo()].at(0, 0) = value;
    return f;
}

} // namespace

PresetInstance build_preset(PresetId id, PresetParams p, FieldSpec field) {
    PresetInstance inst;
    inst.id = id;
    inst.params = p;
    inst.field = field;

    if (id == PresetId::example1 || id == PresetId::example2) {
        const int n = p.n, m = p.m;
        if (n < 2 || m < 1 || m >= n) throw InputError("example preset requires n >= 2 and 1 <= m < n");
        AlgebraPtr a = truncated_poly(n, field);
        inst.algebra = a;
        auto x = [&](int e) {
            Vec v = vec_zero(field, n);
            if (e < n) v[e] = Scalar::one(field);
            return v;
        };
        ProjComplex t1 = stalk(a, {0}, 0);
        ProjComplex t2 = two_term_complex(a, x(m));

        if (id == PresetId::example1) {
            inst.complexes.emplace("T1", t1);
            inst.complexes.emplace("T2", t2);
            inst.complexes.emplace("T", direct_sum(t1, t2));
            inst.generators.emplace("alpha", entry_map(t1, t1, 0, 0, x(1)));
            inst.generators.emplace("beta", entry_map(t1, t2, 0, 0, x(0)));
            inst.generators.emplace("gamma", entry_map(t2, t1, 1, -1, x(0)));
            ChainMap delta = make_family(t2, t2, 0);
            delta.comps[0].at(0, 0) = x(1);
            delta.comps[1].at(0, 0) = x(1);
            inst.generators.emplace("delta", delta);
            inst.generators.emplace("epsilon", entry_map(t2, t2, -1, 0, x(n - m)));
            inst.generators.emplace("e1", identity_map(t1));
            inst.generators.emplace("e2", identity_map(t2));

            inst.relations = {
                {"beta*" + pow_str("alpha", m) + " = 0", {{1, cat({{"beta"}, pow_word("alpha", m)})}}},
                {"gamma*beta = 0", {{1, {"gamma", "beta"}}}},
                {pow_str("delta", m) + " = 0", {{1, pow_word("delta", m)}}},
                {"epsilon^2 = 0", {{1, pow_word("epsilon", 2)}}},
                {"beta*alpha = delta*beta", {{1, {"beta", "alpha"}}, {-1, {"delta", "beta"}}}},
                {"delta*epsilon = epsilon*delta",
                 {{1, {"delta", "epsilon"}}, {-1, {"epsilon", "delta"}}}},
                {"gamma*delta = alpha*gamma", {{1, {"gamma", "delta"}}, {-1, {"alpha", "gamma"}}}},
                {pow_str("alpha", n - m) + " = gamma*epsilon*beta",
                 {{1, pow_word("alpha", n - m)}, {-1, {"gamma", "epsilon", "beta"}}}},
                {pow_str("delta", n - m) + " = beta*gamma*epsilon + epsilon*beta*gamma",
                 {{1, pow_word("delta", n - m)},
                  {-1, {"beta", "gamma", "epsilon"}},
                  {-1, {"epsilon", "beta", "gamma"}}}},
            };
            inst.end_summands = {"T1", "T2"};
            inst.graded_end = true;
            inst.exchange_x = "T2";
            inst.exchange_m = {"T1"};
        } else {
            ProjComplex p1 = stalk(a, {0}, -1); // A[1]
            inst.complexes.emplace("P0", t1);
            inst.complexes.emplace("T2", t2);
            inst.complexes.emplace("P1", p1);
            inst.generators.emplace("alpha", entry_map(t1, t1, 0, 0, x(1)));
            inst.generators.emplace("alphap", entry_map(p1, p1, 0, -1, x(1)));
            inst.generators.emplace("beta", entry_map(t1, t2, 0, 0, x(0)));
            inst.generators.emplace("betap", entry_map(p1, t2, 0, -1, x(n - m)));
            inst.generators.emplace("gamma", entry_map(t2, p1, 0, -1, x(0)));
            inst.generators.emplace("gammap", entry_map(t2, t1, 0, 0, x(n - m)));
            ChainMap delta = make_family(t2, t2, 0);
            delta.comps[0].at(0, 0) = x(1);
            delta.comps[1].at(0, 0) = x(1);
            inst.generators.emplace("delta", delta);
            inst.generators.emplace("e1", identity_map(t1));
            inst.generators.emplace("e2", identity_map(t2));
            inst.generators.emplace("e3", identity_map(p1));

            inst.relations = {
                {"beta*" + pow_str("alpha", m) + " = 0", {{1, cat({{"beta"}, pow_word("alpha", m)})}}},
                {"betap*" + pow_str("alphap", m) + " = 0", {{1, cat({{"betap"}, pow_word("alphap", m)})}}},
                {pow_str("alpha", m) + "*gammap = 0", {{1, cat({pow_word("alpha", m), {"gammap"}})}}},
                {pow_str("alphap", m) + "*gamma = 0", {{1, cat({pow_word("alphap", m), {"gamma"}})}}},
                {"gamma*beta = 0", {{1, {"gamma", "beta"}}}},
                {"gammap*betap = 0", {{1, {"gammap", "betap"}}}},
                {pow_str("delta", m) + " = 0", {{1, pow_word("delta", m)}}},
                {pow_str("alpha", n - m) + " = gammap*beta",
                 {{1, pow_word("alpha", n - m)}, {-1, {"gammap", "beta"}}}},
                {pow_str("alphap", n - m) + " = gamma*betap",
                 {{1, pow_word("alphap", n - m)}, {-1, {"gamma", "betap"}}}},
                {pow_str("delta", n - m) + " = beta*gammap + betap*gamma",
                 {{1, pow_word("delta", n - m)},
                  {-1, {"beta", "gammap"}},
                  {-1, {"betap", "gamma"}}}},
                {"beta*alpha = delta*beta", {{1, {"beta", "alpha"}}, {-1, {"delta", "beta"}}}},
                {"betap*alphap = delta*betap", {{1, {"betap", "alphap"}}, {-1, {"delta", "betap"}}}},
                {"gamma*delta = alphap*gamma", {{1, {"gamma", "delta"}}, {-1, {"alphap", "gamma"}}}},
                {"gammap*delta = alpha*gammap", {{1, {"gammap", "delta"}}, {-1, {"alpha", "gammap"}}}},
            };
            inst.end_summands = {"P0", "T2", "P1"};
            inst.graded_end = false;
        }
        return inst;
    }

    // example3 and the section-7 dg instance share the dihedral base
    const int n = p.n, s = p.s;
    if (n < 2 || s < 2) throw InputError("dihedral presets require n, s >= 2");
    AlgebraPtr a = dihedral_base(n, s, field);
    inst.algebra = a;
    const int dim = n + s;
    auto elem = [&](int idx) {
        Vec v = vec_zero(field, dim);
        v[idx] = Scalar::one(field);
        return v;
    };
    const Vec one = elem(0), xe = elem(1), ye = elem(n);
    ProjComplex t1 = stalk(a, {0}, 0);
    ProjComplex t2x = two_term_complex(a, xe);
    ProjComplex t2y = two_term_complex(a, ye);

    if (id == PresetId::example3) {
        inst.complexes.emplace("T1", t1);
        inst.complexes.emplace("T2", t2x);
        inst.complexes.emplace("T2y", t2y);
        inst.complexes.emplace("T", direct_sum(t1, t2x));
        inst.generators.emplace("alpha", entry_map(t1, t1, 0, 0, xe));
        inst.generators.emplace("beta", entry_map(t1, t2x, 0, 0, one));
        inst.generators.emplace("gamma", entry_map(t2x, t1, 1, -1, one));
        inst.generators.emplace("epsilon", entry_map(t2x, t2x, -1, 0, ye));
        inst.generators.emplace("e1", identity_map(t1));
        inst.generators.emplace("e2", identity_map(t2x));

        const std::vector<std::string> geb = {"gamma", "epsilon", "beta"};
        const std::vector<std::string> ebg = {"epsilon", "beta", "gamma"};
        const std::vector<std::string> bge = {"beta", "gamma", "epsilon"};
        inst.relations = {
            {"alpha*gamma = 0", {{1, {"alpha", "gamma"}}}},
            {"gamma*beta = 0", {{1, {"gamma", "beta"}}}},
            {"beta*alpha = 0", {{1, {"beta", "alpha"}}}},
            {"epsilon^2 = 0", {{1, pow_word("epsilon", 2)}}},
            {pow_str("alpha", n) + " = (gamma*epsilon*beta)^" + std::to_string(s),
             {{1, pow_word("alpha", n)}, {-1, repeat_word(geb, s)}}},
            {"(epsilon*beta*gamma)^" + std::to_string(s) + " + (beta*gamma*epsilon)^" +
                 std::to_string(s) + " = 0",
             {{1, repeat_word(ebg, s)}, {1, repeat_word(bge, s)}}},
        };
        inst.end_summands = {"T1", "T2"};
        inst.graded_end = true;
        inst.exchange_x = "T2";
        inst.exchange_m = {"T1"};
    } else {
        inst.complexes.emplace("T1", t1);
        inst.complexes.emplace("T2x", t2x);
        inst.complexes.emplace("T2y", t2y);
        inst.complexes.emplace("Tx", direct_sum(t1, t2x));
        inst.complexes.emplace("Ty", direct_sum(t1, t2y));
        inst.end_summands = {"T1", "T2x"};
        inst.graded_end = false;
    }
    return inst;
}

} // namespace homcat
