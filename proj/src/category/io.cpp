#include "tqft/category/io.hpp"

#include <fstream>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

mpq_class parse_rational(const json& j) {
    try {
        if (j.is_number_integer()) return mpq_class(j.get<long>());
        if (j.is_string()) {
            mpq_class q(j.get<std::string>(), 10);
            q.canonicalize();
            return q;
        }
    } catch (const std::invalid_argument&) {
    }
    throw ParseError("expected an integer or a rational string, got " + j.dump());
}

int label_ref(const json& j, const PremodularData& c) {
    if (j.is_number_integer()) {
        int i = j.get<int>();
        if (i < 0 || i >= c.size()) throw ParseError("label index out of range: " + j.dump());
        return i;
    }
    if (j.is_string()) {
        int i = c.label_index(j.get<std::string>());
        if (i < 0) throw ParseError("unknown label " + j.dump());
        return i;
    }
    throw ParseError("bad label reference " + j.dump());
}

std::vector<CycloScalar> scalar_list(const json& j) {
    if (!j.is_array()) throw ParseError("expected a list of scalars");
    std::vector<CycloScalar> out;
    for (const auto& x : j) out.push_back(scalar_from_json(x));
    return out;
}

}  // namespace

json scalar_to_json(const CycloScalar& s) {
    if (!s.is_exact()) {
        auto z = s.to_complex();
        return {{"approx", {z.real(), z.imag()}}};
    }
    json coeffs = json::array();
    for (const auto& q : s.coeffs()) coeffs.push_back(q.get_str());
    return {{"N", s.root_order()}, {"coeffs", coeffs}};
}

CycloScalar scalar_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return CycloScalar::rational(parse_rational(j));
    if (!j.is_object()) throw ParseError("bad scalar " + j.dump());
    if (j.contains("approx")) {
        const auto& a = j["approx"];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
            throw ParseError("approx scalar needs [re, im]");
        return CycloScalar::approx({a[0].get<double>(), a[1].get<double>()});
    }
    if (!j.contains("N") || !j["N"].is_number_integer() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ParseError("scalar needs integer N and a coeffs list");
    int N = j["N"].get<int>();
    if (N < 1) throw Error("invalid-root-order", "root order must be positive");
    std::vector<mpq_class> raw;
    for (const auto& x : j["coeffs"]) raw.push_back(parse_rational(x));
    return CycloScalar::normalize(raw, N);
}

PremodularData category_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("category document must be an object");
    for (const char* key : {"labels", "dual", "fusion", "qdim", "twist"})
        if (!j.contains(key)) throw ParseError(std::string("category is missing '") + key + "'");
    PremodularData c;
    try {
        c.name = j.value("name", std::string("unnamed"));
        c.root_order = j.value("root_order", 1);
        for (const auto& l : j["labels"]) c.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
        for (const auto& d : j["dual"]) c.dual.push_back(label_ref(d, c));
        for (const auto& t : j["fusion"]) {
            if (!t.is_array() || t.size() != 3) throw ParseError("fusion entries are [i, j, k]");
            c.fusion.push_back({label_ref(t[0], c), label_ref(t[1], c), label_ref(t[2], c)});
        }
        c.qdim = scalar_list(j["qdim"]);
        c.twist = scalar_list(j["twist"]);
        for (const auto& e : j.value("F", json::array())) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 6)
                throw ParseError("F entries are [[a,b,c,d,e,f], scalar]");
            std::array<int, 6> k{};
            for (int i = 0; i < 6; ++i) k[i] = label_ref(e[0][i], c);
            c.F[k] = scalar_from_json(e[1]);
        }
        for (const auto& e : j.value("R", json::array())) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 3)
                throw ParseError("R entries are [[a,b,c], scalar]");
            c.R[{label_ref(e[0][0], c), label_ref(e[0][1], c), label_ref(e[0][2], c)}] = scalar_from_json(e[1]);
        }
        if (j.contains("sqrt_qdim") && !j["sqrt_qdim"].is_null()) c.sqrt_qdim = scalar_list(j["sqrt_qdim"]);
        if (j.contains("sqrtD") && !j["sqrtD"].is_null()) c.sqrtD = scalar_from_json(j["sqrtD"]);
        if (j.contains("kappa") && !j["kappa"].is_null()) c.kappa = scalar_from_json(j["kappa"]);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed category: ") + e.what());
    }
    return c;
}

json category_to_json(const PremodularData& c) {
    json j;
    j["name"] = c.name;
    j["root_order"] = c.root_order;
    j["labels"] = c.labels;
    j["dual"] = c.dual;
    json fusion = json::array();
    for (const auto& t : c.fusion) fusion.push_back({t[0], t[1], t[2]});
    j["fusion"] = fusion;
    json qd = json::array(), tw = json::array();
    for (const auto& x : c.qdim) qd.push_back(scalar_to_json(x));
    for (const auto& x : c.twist) tw.push_back(scalar_to_json(x));
    j["qdim"] = qd;
    j["twist"] = tw;
    json F = json::array(), R = json::array();
    for (const auto& [k, v] : c.F) F.push_back({json(k), scalar_to_json(v)});
    for (const auto& [k, v] : c.R) R.push_back({json(k), scalar_to_json(v)});
    j["F"] = F;
    j["R"] = R;
    if (c.sqrt_qdim) {
        json s = json::array();
        for (const auto& x : *c.sqrt_qdim) s.push_back(scalar_to_json(x));
        j["sqrt_qdim"] = s;
    }
    if (c.sqrtD) j["sqrtD"] = scalar_to_json(*c.sqrtD);
    if (c.kappa) j["kappa"] = scalar_to_json(*c.kappa);
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

CategoryPtr resolve_category(const std::string& selector) {
    for (const auto& n : builtin_names())
        if (n == selector) return builtin(selector);
    std::ifstream probe(selector);
    if (!probe) {
        if (selector.find('/') != std::string::npos || selector.find('.') != std::string::npos)
            throw ParseError("cannot open category file '" + selector + "'");
        throw Error("catalog-miss", "no built-in category named '" + selector + "'");
    }
    auto c = std::make_shared<PremodularData>(category_from_json(read_json_file(selector)));
    c->finalize();
    return c;
}

}  // namespace tqft
