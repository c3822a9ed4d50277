#include "tqft/statesum/triangulation.hpp"

#include <algorithm>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("invalid-triangulation", what); }

template <size_t N>
int intern(std::map<std::array<int, N>, int>& index, std::vector<std::array<int, N>>& list, const std::array<int, N>& key) {
    auto [it, fresh] = index.emplace(key, static_cast<int>(list.size()));
    if (fresh) list.push_back(key);
    return it->second;
}

// Sign of the permutation that sorts v.
int sort_sign(std::array<int, 5>& v) {
    int s = 1;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j + 1 < 5 - i; ++j)
            if (v[j] > v[j + 1]) {
                std::swap(v[j], v[j + 1]);
                s = -s;
            }
    return s;
}

}  // namespace

OrderedTriangulation::OrderedTriangulation(int vertex_count, std::vector<Pentachoron> pentachora)
    : n0_(vertex_count), pents_(std::move(pentachora)) {
    if (n0_ < 1) bad("vertex count must be positive");
    if (pents_.empty()) bad("no pentachora");
    std::map<std::array<int, 2>, int> eidx;
    std::map<std::array<int, 3>, int> tidx;
    std::map<std::array<int, 4>, int> qidx;
    // tetrahedron -> sum of induced orientations and number of incidences
    std::vector<std::array<int, 2>> tet_use;
    for (size_t p = 0; p < pents_.size(); ++p) {
        const auto& v = pents_[p].verts;
        for (int i = 0; i < 5; ++i) {
            if (v[i] < 0 || v[i] >= n0_) bad("pentachoron " + std::to_string(p) + " uses an unknown vertex");
            if (i > 0 && v[i - 1] >= v[i]) bad("pentachoron " + std::to_string(p) + " is not strictly increasing");
        }
        if (pents_[p].sign != 1 && pents_[p].sign != -1) bad("orientation signs must be +1 or -1");
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) intern(eidx, edges_, {v[a], v[b]});
        std::array<int, 5> pt{};
        for (int k = 0; k < 5; ++k) {
            std::array<int, 4> t{};
            for (int i = 0, m = 0; i < 5; ++i)
                if (i != k) t[m++] = v[i];
            pt[k] = intern(qidx, tets_, t);
            if (tet_use.size() < tets_.size()) tet_use.push_back({0, 0});
            // the face opposite v_k carries (-1)^k times the orientation of the pentachoron
            tet_use[pt[k]][0] += pents_[p].sign * (k % 2 ? -1 : 1);
            tet_use[pt[k]][1] += 1;
        }
        pent_tets_.push_back(pt);
        std::array<int, 25> tr{};
        tr.fill(-1);
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b) {
                std::array<int, 3> t{};
                for (int i = 0, m = 0; i < 5; ++i)
                    if (i != a && i != b) t[m++] = v[i];
                tr[a * 5 + b] = intern(tidx, tris_, t);
            }
        pent_tris_.push_back(tr);
    }
    for (size_t t = 0; t < tets_.size(); ++t) {
        if (tet_use[t][1] != 2 || tet_use[t][0] != 0) {
            std::string name;
            for (int x : tets_[t]) name += (name.empty() ? "" : ",") + std::to_string(x);
            bad("tetrahedron {" + name + "} is not shared by exactly two oppositely oriented pentachora");
        }
        std::array<int, 4> f{};
        for (int k = 0; k < 4; ++k) {
            std::array<int, 3> s{};
            for (int i = 0, m = 0; i < 4; ++i)
                if (i != k) s[m++] = tets_[t][i];
            f[k] = tidx.at(s);
        }
        tet_faces_.push_back(f);
    }
}

OrderedTriangulation triangulation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("pentachora"))
        throw ParseError("triangulation needs 'vertices' and 'pentachora'");
    try {
        int n = j["vertices"].get<int>();
        std::vector<Pentachoron> ps;
        for (const auto& e : j["pentachora"]) {
            Pentachoron p;
            const auto& v = e.at("verts");
            if (!v.is_array() || v.size() != 5) throw ParseError("pentachoron needs five vertices");
            for (int i = 0; i < 5; ++i) p.verts[i] = v[i].get<int>();
            p.sign = e.value("sign", 1);
            ps.push_back(p);
        }
        return OrderedTriangulation(n, std::move(ps));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed triangulation: ") + e.what());
    }
}

json triangulation_to_json(const OrderedTriangulation& t) {
    json ps = json::array();
    for (const auto& p : t.pentachora()) ps.push_back({{"verts", p.verts}, {"sign", p.sign}});
    return {{"vertices", t.vertex_count()}, {"pentachora", ps}};
}

OrderedTriangulation boundary_of_5_simplex() {
    std::vector<Pentachoron> ps;
    for (int i = 0; i < 6; ++i) {
        Pentachoron p;
        for (int v = 0, m = 0; v < 6; ++v)
            if (v != i) p.verts[m++] = v;
        p.sign = i % 2 ? -1 : 1;
        ps.push_back(p);
    }
    return OrderedTriangulation(6, std::move(ps));
}

OrderedTriangulation double_pentachoron() {
    return OrderedTriangulation(5, {Pentachoron{{0, 1, 2, 3, 4}, 1}, Pentachoron{{0, 1, 2, 3, 4}, -1}});
}

OrderedTriangulation relabel(const OrderedTriangulation& t, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != t.vertex_count()) bad("relabeling has the wrong length");
    std::vector<int> seen(perm.size(), 0);
    for (int x : perm) {
        if (x < 0 || x >= t.vertex_count() || seen[x]++) bad("relabeling is not a permutation");
    }
    std::vector<Pentachoron> ps;
    for (const auto& p : t.pentachora()) {
        Pentachoron q;
        for (int i = 0; i < 5; ++i) q.verts[i] = perm[p.verts[i]];
        q.sign = p.sign * sort_sign(q.verts);
        ps.push_back(q);
    }
    return OrderedTriangulation(t.vertex_count(), std::move(ps));
}

}  // namespace tqft
