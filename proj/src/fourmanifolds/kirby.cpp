#include "tqft/fourmanifolds/kirby.hpp"

#include <algorithm>

#include "tqft/category/invariants.hpp"
#include "tqft/errors.hpp"
#include "tqft/links/fixtures.hpp"
#include "tqft/links/rt.hpp"

namespace tqft {

KirbyPresentation kirby_from_json(const json& j) {
    if (!j.is_object() || !j.contains("link")) throw ParseError("Kirby document needs a 'link'");
    KirbyPresentation k;
    try {
        k.link = link_from_json(j["link"]);
        k.n0 = j.value("n0", 1);
        k.n3 = j.value("n3", 0);
        k.n4 = j.value("n4", 1);
        const auto& names = k.link.diagram.slot_names;
        for (const auto& dj : j.value("dotted", json::array())) {
            std::string nm = dj.is_string() ? dj.get<std::string>() : dj.dump();
            auto it = std::find(names.begin(), names.end(), nm);
            if (it == names.end()) throw ParseError("dotted component '" + nm + "' is not in the link");
            k.dotted.push_back(static_cast<int>(it - names.begin()));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed Kirby document: ") + e.what());
    }
    return k;
}

json kirby_to_json(const KirbyPresentation& k) {
    json dotted = json::array();
    for (int i : k.dotted) dotted.push_back(k.link.diagram.slot_names[i]);
    return {{"n0", k.n0}, {"dotted", dotted}, {"link", diagram_to_json(k.link.diagram, nullptr)}, {"n3", k.n3}, {"n4", k.n4}};
}

void check_kirby(const KirbyPresentation& k) {
    if (k.n0 < 0 || k.n3 < 0 || k.n4 < 0) throw Error("invalid-kirby", "negative handle count");
    if (k.n0 >= 1 && k.n4 < 1) throw Error("invalid-kirby", "a closed manifold needs a 4-handle");
    IntMatrix lk = linking_matrix(k.link);
    for (size_t a = 0; a < k.dotted.size(); ++a) {
        int i = k.dotted[a];
        if (i < 0 || i >= static_cast<int>(lk.size())) throw Error("invalid-kirby", "dotted index out of range");
        if (lk[i][i] != 0) throw Error("invalid-kirby", "dotted circle '" + k.link.diagram.slot_names[i] + "' is not 0-framed");
        for (size_t b = a + 1; b < k.dotted.size(); ++b)
            if (lk[i][k.dotted[b]] != 0) throw Error("invalid-kirby", "dotted circles are linked");
    }
}

int euler_char(const KirbyPresentation& k) {
    int two = static_cast<int>(k.link.size()) - static_cast<int>(k.dotted.size());
    return k.n0 - static_cast<int>(k.dotted.size()) + two - k.n3 + k.n4;
}

int sigma4(const KirbyPresentation& k) { return link_signature(k.link); }

CycloScalar zcy_closed(const KirbyPresentation& k, CategoryPtr c, int threads) {
    if (k.n0 != 1) throw Error("require-connected", "presentation must have exactly one 0-handle");
    require_modular(*c);
    check_kirby(k);
    CycloScalar omega = omega_evaluate(k.link, c, threads);
    return c->global_dim().pow(k.n4 - k.n3 - static_cast<long>(k.dotted.size())) * omega;
}

CycloScalar zcy_formula(const KirbyPresentation& k, CategoryPtr c) {
    require_modular(*c);
    return require_kappa(*c).pow(sigma4(k)) * require_sqrtD(*c).pow(euler_char(k));
}

KirbyPresentation connected_sum(const KirbyPresentation& a, const KirbyPresentation& b) {
    KirbyPresentation out;
    out.n0 = 1;
    out.link = disjoint_union(a.link, b.link);
    out.dotted = a.dotted;
    for (int i : b.dotted) out.dotted.push_back(i + static_cast<int>(a.link.size()));
    out.n3 = a.n3 + b.n3;
    out.n4 = a.n4 + b.n4 - 1;
    return out;
}

std::vector<std::string> kirby_fixture_names() { return {"S4", "CP2", "CP2bar", "S2xS2", "S1xS3", "CP2#CP2bar"}; }

KirbyPresentation kirby_fixture(const std::string& name) {
    KirbyPresentation k;
    if (name == "S4") {
        k.link = empty_link();
    } else if (name == "CP2") {
        k.link = unknot(1);
    } else if (name == "CP2bar") {
        k.link = unknot(-1);
    } else if (name == "S2xS2") {
        k.link = hopf(0, 0);
    } else if (name == "S1xS3") {
        k.link = unknot(0, "dot");
        k.dotted = {0};
        k.n3 = 1;
    } else if (name == "CP2#CP2bar") {
        return connected_sum(kirby_fixture("CP2"), kirby_fixture("CP2bar"));
    } else {
        throw Error("catalog-miss", "no Kirby fixture named '" + name + "'");
    }
    return k;
}

}  // namespace tqft
