#include "schurlab/json_io.hpp"

#include <fstream>
#include <iostream>

namespace schurlab {

namespace {

Json index_to_json(const MultiIndex& idx) {
    Json out = Json::array();
    for (int a : idx) out.push_back(a + 1);
    return out;
}

MultiIndex index_from_json(const Json& j, int n) {
    MultiIndex out;
    for (const auto& v : j) {
        const int a = v.get<int>();
        if (a < 1 || a > n) throw std::invalid_argument("json: axis out of range");
        out.push_back(a - 1);
    }
    if (!is_strictly_increasing(out))
        throw std::invalid_argument("json: multi-index not strictly increasing");
    return out;
}

}  // namespace

Json to_json(const ExactComplex& z) {
    return Json{{"re", rational_to_string(z.re)}, {"im", rational_to_string(z.im)}};
}

ExactComplex complex_from_json(const Json& j) {
    return ExactComplex(parse_rational(j.at("re").get<std::string>()),
                        parse_rational(j.at("im").get<std::string>()));
}

Json to_json(const Form& f) {
    Json coeffs = Json::array();
    for (const auto& [key, c] : f.coeffs)
        coeffs.push_back(Json{{"I", index_to_json(key.first)},
                              {"J", index_to_json(key.second)},
                              {"c", to_json(c)}});
    return Json{{"n", f.n}, {"p", f.p}, {"q", f.q}, {"coeffs", std::move(coeffs)}};
}

Form form_from_json(const Json& j) {
    Form f(j.at("n").get<int>(), j.at("p").get<int>(), j.at("q").get<int>());
    for (const auto& entry : j.at("coeffs"))
        f.add_term(index_from_json(entry.at("I"), f.n), index_from_json(entry.at("J"), f.n),
                   complex_from_json(entry.at("c")));
    return f;
}

Json to_json(const CurvatureTensor& R) {
    Json entries = Json::array();
    for (int i = 0; i < R.r; ++i)
        for (int j = 0; j < R.r; ++j)
            for (int a = 0; a < R.n; ++a)
                for (int b = 0; b < R.n; ++b) {
                    if (std::make_pair(i, a) > std::make_pair(j, b)) continue;  // lower half
                    const ExactComplex& c = R.at(i, j, a, b);
                    if (c.is_zero()) continue;
                    entries.push_back(Json{{"i", i + 1},
                                           {"j", j + 1},
                                           {"alpha", a + 1},
                                           {"beta", b + 1},
                                           {"c", to_json(c)}});
                }
    return Json{{"n", R.n}, {"r", R.r}, {"entries", std::move(entries)}};
}

CurvatureTensor curvature_from_json(const Json& j) {
    CurvatureTensor R(j.at("n").get<int>(), j.at("r").get<int>());
    for (const auto& e : j.at("entries")) {
        const int i = e.at("i").get<int>() - 1;
        const int jj = e.at("j").get<int>() - 1;
        const int a = e.at("alpha").get<int>() - 1;
        const int b = e.at("beta").get<int>() - 1;
        if (i < 0 || i >= R.r || jj < 0 || jj >= R.r || a < 0 || a >= R.n || b < 0 || b >= R.n)
            throw std::invalid_argument("json: curvature index out of range");
        const ExactComplex c = complex_from_json(e.at("c"));
        R.at(i, jj, a, b) = c;
        R.at(jj, i, b, a) = c.conj();
    }
    R.require_hermitian();
    return R;
}

Json to_json(const ABFactorization& f) {
    Json a_entries = Json::array();
    Json b_entries = Json::array();
    for (int i = 0; i < f.r; ++i)
        for (int p = 0; p < f.N; ++p)
            for (int al = 0; al < f.n; ++al) {
                if (!f.a(i, p, al).is_zero())
                    a_entries.push_back(Json{
                        {"i", i + 1}, {"p", p + 1}, {"alpha", al + 1}, {"c", to_json(f.a(i, p, al))}});
                if (!f.b(i, p, al).is_zero())
                    b_entries.push_back(Json{
                        {"i", i + 1}, {"p", p + 1}, {"beta", al + 1}, {"c", to_json(f.b(i, p, al))}});
            }
    return Json{{"n", f.n},
                {"r", f.r},
                {"N", f.N},
                {"A", std::move(a_entries)},
                {"B", std::move(b_entries)}};
}

ABFactorization ab_from_json(const Json& j) {
    ABFactorization f(j.at("n").get<int>(), j.at("r").get<int>(), j.at("N").get<int>());
    auto read = [&](const Json& arr, bool is_a) {
        const char* axis_key = is_a ? "alpha" : "beta";
        for (const auto& e : arr) {
            const int i = e.at("i").get<int>() - 1;
            const int p = e.at("p").get<int>() - 1;
            const int al = e.at(axis_key).get<int>() - 1;
            if (i < 0 || i >= f.r || p < 0 || p >= f.N || al < 0 || al >= f.n)
                throw std::invalid_argument("json: factorization index out of range");
            (is_a ? f.a(i, p, al) : f.b(i, p, al)) = complex_from_json(e.at("c"));
        }
    };
    read(j.at("A"), true);
    read(j.at("B"), false);
    return f;
}

Json to_json(const SplitSpec& s) {
    Json idx = Json::array();
    for (int i : s.indices) idx.push_back(i + 1);
    return Json{{"kind", s.kind == SplitSpec::Kind::TypeI ? "type1" : "type2"},
                {"indices", std::move(idx)}};
}

SplitSpec split_from_json(const Json& j) {
    SplitSpec s;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "type1") {
        s.kind = SplitSpec::Kind::TypeI;
    } else if (kind == "type2") {
        s.kind = SplitSpec::Kind::TypeII;
    } else {
        throw std::invalid_argument("json: unknown split kind");
    }
    for (const auto& v : j.at("indices")) s.indices.push_back(v.get<int>() - 1);
    if (!is_strictly_increasing(s.indices))
        throw std::invalid_argument("json: split indices not strictly increasing");
    return s;
}

namespace {

Json stats_to_json(const SampleStats& s) {
    return Json{{"restarts", s.restarts}, {"samples", s.samples}, {"seed", s.seed}};
}

}  // namespace

Json to_json(const PositivityVerdict& v) {
    Json out{{"level", to_string(v.level)}, {"margin", v.margin}};
    if (v.witness) out["witness"] = to_json(*v.witness);
    if (v.witness_covectors) {
        Json arr = Json::array();
        for (const Form& c : *v.witness_covectors) arr.push_back(to_json(c));
        out["witness_covectors"] = std::move(arr);
    }
    if (v.witness || v.witness_covectors)
        out["witness_value"] = rational_to_string(v.witness_value);
    out["stats"] = stats_to_json(v.stats);
    return out;
}

namespace {

Json vector_to_json(const VectorXec& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(to_json(v(i)));
    return arr;
}

}  // namespace

Json to_json(const ClassResult& r) {
    Json out{{"status", to_string(r.status)}, {"margin", r.margin}};
    if (r.split) out["split"] = to_json(*r.split);
    if (r.witness) out["witness"] = vector_to_json(*r.witness);
    if (r.witness_pair)
        out["witness_pair"] = Json{{"v", vector_to_json(r.witness_pair->first)},
                                   {"xi", vector_to_json(r.witness_pair->second)}};
    if (r.witness || r.witness_pair) out["witness_value"] = rational_to_string(r.witness_value);
    if (!r.note.empty()) out["note"] = r.note;
    out["stats"] = stats_to_json(r.stats);
    return out;
}

Json to_json(const ClassVerdict& v) {
    return Json{{"griffiths", to_json(v.griffiths)},
                {"nakano", to_json(v.nakano)},
                {"dual_nakano", to_json(v.dual_nakano)},
                {"decomposable", to_json(v.decomposable)},
                {"strongly_type1", to_json(v.strongly_type1)},
                {"strongly_type2", to_json(v.strongly_type2)}};
}

Json read_json_file(const std::string& path) {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return Json::parse(in);
}

void write_output(const Json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace schurlab
