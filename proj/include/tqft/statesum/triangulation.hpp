#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tqft/category/io.hpp"

namespace tqft {

struct Pentachoron {
    std::array<int, 5> verts{};  // strictly increasing
    int sign = 1;                // +1 when the ordering-orientation agrees with the manifold's
};

// Ordered triangulation of a closed oriented 4-manifold. Triangles and
// tetrahedra are derived; simplices are identified by their vertex sets, so
// two pentachora on the same five vertices are allowed (a singular gluing).
class OrderedTriangulation {
public:
    OrderedTriangulation() = default;
    // Throws Error("invalid-triangulation") unless closed and oriented.
    OrderedTriangulation(int vertex_count, std::vector<Pentachoron> pentachora);

    int vertex_count() const { return n0_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Pentachoron>& pentachora() const { return pents_; }
    const std::vector<std::array<int, 3>>& triangles() const { return tris_; }
    const std::vector<std::array<int, 4>>& tetrahedra() const { return tets_; }

    // Index of the face of pentachoron p opposite its k-th vertex.
    int tet_of(int p, int k) const { return pent_tets_[p][k]; }
    // Index of the triangle of pentachoron p missing its a-th and b-th vertices (a < b).
    int tri_of(int p, int a, int b) const { return pent_tris_[p][a * 5 + b]; }
    // Triangle of tetrahedron t opposite its k-th vertex.
    int face_of(int t, int k) const { return tet_faces_[t][k]; }

private:
    int n0_ = 0;
    std::vector<Pentachoron> pents_;
    std::vector<std::array<int, 2>> edges_;
    std::vector<std::array<int, 3>> tris_;
    std::vector<std::array<int, 4>> tets_;
    std::vector<std::array<int, 5>> pent_tets_;
    std::vector<std::array<int, 25>> pent_tris_;
    std::vector<std::array<int, 4>> tet_faces_;
};

// {"vertices": 6, "pentachora": [{"verts": [0,1,2,3,4], "sign": 1}, ...]}
OrderedTriangulation triangulation_from_json(const json& j);
json triangulation_to_json(const OrderedTriangulation& t);

// Boundary of the 5-simplex with its boundary orientation: a 6-vertex S^4.
OrderedTriangulation boundary_of_5_simplex();
// Two copies of one pentachoron glued along their whole boundary: a 5-vertex S^4.
OrderedTriangulation double_pentachoron();
// Vertex v becomes perm[v]; tuples are re-sorted and signs follow the sort.
OrderedTriangulation relabel(const OrderedTriangulation& t, const std::vector<int>& perm);

}  // namespace tqft
