#include "homcat/json_io.hpp"

#include <fstream>

namespace homcat {

json field_to_json(const FieldSpec& f) {
    if (f.is_rational()) return "Q";
    return json{{"Fp", f.characteristic()}};
}

FieldSpec field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec::rationals();
        throw InputError("unknown field '" + j.get<std::string>() + "' (expected \"Q\" or {\"Fp\": p})");
    }
    if (j.is_object() && j.contains("Fp")) return FieldSpec::prime_field(j.at("Fp").get<std::int64_t>());
    throw InputError("bad field specification");
}

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Scalar& s : v) a.push_back(s.str());
    return a;
}

Vec vec_from_json(const FieldSpec& f, const json& j, int expected_len) {
    if (!j.is_array()) throw InputError("expected an array of scalars");
    if (expected_len >= 0 && static_cast<int>(j.size()) != expected_len)
        throw InputError("scalar vector has length " + std::to_string(j.size()) + ", expected " +
                         std::to_string(expected_len));
    Vec v;
    v.reserve(j.size());
    for (const auto& e : j) {
        if (e.is_number_integer())
            v.push_back(Scalar(f, static_cast<long>(e.get<std::int64_t>())));
        else if (e.is_string())
            v.push_back(Scalar::parse(f, e.get<std::string>()));
        else
            throw InputError("scalar entries must be integers or \"num/den\" strings");
    }
    return v;
}

json algebra_to_json(const FDAlgebra& a) {
    json mult = json::array();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& t : a.mult_entry(i, j))
                mult.push_back(json::array({i, j, t.index, t.coeff.str()}));
    json idems = json::array();
    for (const Vec& e : a.idempotents()) idems.push_back(vec_to_json(e));
    return json{{"field", field_to_json(a.field())}, {"dim", a.dim()},      {"basis", a.labels()},
                {"mult", std::move(mult)},           {"unit", vec_to_json(a.unit())},
                {"idempotents", std::move(idems)}};
}

AlgebraPtr algebra_from_json(const json& j) {
    if (!j.is_object()) throw InputError("algebra: expected an object");
    const FieldSpec f = field_from_json(j.at("field"));
    const int dim = j.at("dim").get<int>();
    if (dim <= 0) throw InputError("algebra: dim must be positive");
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        labels = j.at("basis").get<std::vector<std::string>>();
        if (static_cast<int>(labels.size()) != dim) throw InputError("algebra: basis label count != dim");
    } else {
        for (int i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
    }
    std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
    for (const auto& triple : j.at("mult")) {
        if (!triple.is_array() || triple.size() != 4)
            throw InputError("algebra: mult entries must be [i, j, k, coeff]");
        const int i = triple[0].get<int>(), jj = triple[1].get<int>(), k = triple[2].get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw InputError("algebra: mult index out of range");
        Scalar c = triple[3].is_number_integer()
                       ? Scalar(f, static_cast<long>(triple[3].get<std::int64_t>()))
                       : Scalar::parse(f, triple[3].get<std::string>());
        mult[i][jj].push_back({k, std::move(c)});
    }
    Vec unit = vec_from_json(f, j.at("unit"), dim);
    std::vector<Vec> idems;
    for (const auto& e : j.at("idempotents")) idems.push_back(vec_from_json(f, e, dim));
    return std::make_shared<FDAlgebra>(f, std::move(labels), std::move(mult), std::move(unit),
                                       std::move(idems));
}

json complex_to_json(const ProjComplex& x) {
    json terms = json::object();
    json diff = json::object();
    for (int n = x.lo(); n <= x.hi(); ++n) {
        terms[std::to_string(n)] = x.summands_at(n);
        if (n < x.hi()) {
            MatAlg d = x.diff_at(n);
            json rows = json::array();
            for (int t = 0; t < d.rows(); ++t) {
                json row = json::array();
                for (int s = 0; s < d.cols(); ++s) row.push_back(vec_to_json(d.at(t, s)));
                rows.push_back(std::move(row));
            }
            diff[std::to_string(n)] = std::move(rows);
        }
    }
    return json{{"terms", std::move(terms)}, {"diff", std::move(diff)}};
}

ProjComplex complex_from_json(const AlgebraPtr& a, const json& j) {
    if (!j.is_object() || !j.contains("terms")) throw InputError("complex: expected {terms, diff}");
    std::map<int, std::vector<int>> terms;
    for (const auto& [key, value] : j.at("terms").items()) {
        int degree = 0;
        try {
            degree = std::stoi(key);
        } catch (const std::exception&) {
            throw InputError("complex: bad degree key '" + key + "'");
        }
        terms[degree] = value.get<std::vector<int>>();
    }
    if (terms.empty()) return ProjComplex(a);
    const int lo = terms.begin()->first, hi = terms.rbegin()->first;
    std::vector<std::vector<int>> summands;
    for (int n = lo; n <= hi; ++n) summands.push_back(terms.count(n) ? terms[n] : std::vector<int>{});
    std::vector<MatAlg> diff;
    const json& dj = j.contains("diff") ? j.at("diff") : json::object();
    for (int n = lo; n < hi; ++n) {
        const int rows = static_cast<int>(summands[n + 1 - lo].size());
        const int cols = static_cast<int>(summands[n - lo].size());
        MatAlg d(a->field(), a->dim(), rows, cols);
        const std::string key = std::to_string(n);
        if (dj.contains(key)) {
            const json& m = dj.at(key);
            if (static_cast<int>(m.size()) != rows) throw InputError("complex: diff row count mismatch");
            for (int t = 0; t < rows; ++t) {
                if (static_cast<int>(m[t].size()) != cols)
                    throw InputError("complex: diff column count mismatch");
                for (int s = 0; s < cols; ++s) d.at(t, s) = vec_from_json(a->field(), m[t][s], a->dim());
            }
        }
        diff.push_back(std::move(d));
    }
    return ProjComplex(a, lo, std::move(summands), std::move(diff));
}

json chain_map_to_json(const ChainMap& f) {
    json comps = json::object();
    for (int n = f.source.lo(); n <= f.source.hi(); ++n) {
        MatAlg m = f.comp_at(n);
        if (m.is_zero()) continue;
        json rows = json::array();
        for (int t = 0; t < m.rows(); ++t) {
            json row = json::array();
            for (int s = 0; s < m.cols(); ++s) row.push_back(vec_to_json(m.at(t, s)));
            rows.push_back(std::move(row));
        }
        comps[std::to_string(n)] = std::move(rows);
    }
    return json{{"degree", f.degree}, {"components", std::move(comps)}};
}

json int_mat_to_json(const IntMat& m) {
    json rows = json::array();
    for (const auto& r : m) rows.push_back(r);
    return rows;
}

json fingerprint_to_json(const Fingerprint& fp) {
    return json{{"dim", fp.dim},
                {"idempotents", fp.idempotents},
                {"cartan_canonical", int_mat_to_json(fp.cartan_canonical)},
                {"cartan_det", fp.cartan_det},
                {"radical_power_dims", fp.radical_power_dims},
                {"center_dim", fp.center_dim},
                {"commutator_dim", fp.commutator_dim},
                {"symmetric_certified", fp.symmetric_certified}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("JSON parse error in '" + path + "': " + e.what());
    }
}

} // namespace homcat
