#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "tricert/triangulation.hpp"

namespace tricert {

struct NotClosedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Union-find with a parity bit on each link (used for edge orientations and
// 2-colourings). merge() returns false when the requested relation
// contradicts the existing one.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0), rank_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    std::pair<int, int> find(int x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, p] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= p;
        return {root, parity_[x]};
    }

    int parity(int x) {
        find(x);
        return parity_[x];
    }

    // relation: parity(a) xor parity(b) == rel
    bool merge(int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        int link = pa ^ pb ^ rel;
        if (rank_[ra] < rank_[rb]) {
            parent_[ra] = rb;
            parity_[ra] = link;
        } else if (rank_[ra] > rank_[rb]) {
            parent_[rb] = ra;
            parity_[rb] = link;
        } else {
            parent_[rb] = ra;
            parity_[rb] = link;
            ++rank_[ra];
        }
        return true;
    }

private:
    std::vector<int> parent_, parity_, rank_;
};

}  // namespace detail

struct EdgeClass {
    std::vector<int> members;       // slot ids t*6+e, ascending
    std::vector<int> flips;         // per member: 0 if its ascending direction
                                    // matches the representative's, 1 if not
    int degree = 0;
    bool orientation_consistent = true;  // false: some identification reverses the edge
};

struct VertexClass {
    std::vector<int> members;  // slot ids t*4+v, ascending
};

struct FaceClass {
    std::vector<int> members;  // slot ids t*4+f, 2 per class when closed
};

struct SurfaceSummary {
    long euler_characteristic = 0;
    bool connected = false;
    bool orientable = false;
    long vertices = 0, edges = 0, faces = 0;

    bool is_sphere() const { return euler_characteristic == 2 && connected && orientable; }
};

// Reference to a directed edge of the quotient complex: class index plus a
// sign (+1: agrees with the representative's direction).
struct DirectedEdge {
    int edge_class = -1;
    int sign = 0;

    bool operator==(const DirectedEdge& o) const {
        return edge_class == o.edge_class && sign == o.sign;
    }
    bool operator!=(const DirectedEdge& o) const { return !(*this == o); }
    DirectedEdge reversed() const { return {edge_class, -sign}; }
};

struct NonOrientableWitness {
    // Gluing steps (tet, face) forming an odd-parity cycle.
    std::vector<std::pair<int, int>> cycle;
};

// Quotient cell structure of a closed triangulation: orbit classes of the
// tetrahedron vertices, edges and faces, together with edge orientation
// flags and tetrahedron orientations.
class Skeleton {
public:
    explicit Skeleton(Triangulation tri) : tri_(std::move(tri)), n_(tri_.tet_count()) {
        tri_.validate();
        check_closed();
        build_edge_classes();
        build_vertex_classes();
        build_face_classes();
        build_orientation();
    }

    const Triangulation& triangulation() const { return tri_; }
    int tet_count() const { return n_; }

    long vertex_count() const { return static_cast<long>(vertex_classes_.size()); }
    long edge_count() const { return static_cast<long>(edge_classes_.size()); }
    long face_count() const { return static_cast<long>(face_classes_.size()); }
    long euler_characteristic() const {
        return vertex_count() - edge_count() + face_count() - n_;
    }

    const std::vector<EdgeClass>& edge_classes() const { return edge_classes_; }
    const std::vector<VertexClass>& vertex_classes() const { return vertex_classes_; }
    const std::vector<FaceClass>& face_classes() const { return face_classes_; }

    int edge_class_of(int tet, int edge) const { return edge_class_of_[tet * 6 + edge]; }
    int vertex_class_of(int tet, int v) const { return vertex_class_of_[tet * 4 + v]; }
    int face_class_of(int tet, int face) const { return face_class_of_[tet * 4 + face]; }

    // Directed edge (u -> v) of tetrahedron `tet` as a directed class.
    DirectedEdge directed_edge(int tet, int u, int v) const {
        int e = edge_index_of(u, v);
        int slot = tet * 6 + e;
        int s = edge_flip_of_[slot] ? -1 : 1;
        if (u > v) s = -s;
        return {edge_class_of_[slot], s};
    }

    int edge_degree(int cls) const { return edge_classes_[cls].degree; }

    bool orientable() const { return tet_orientations_.has_value(); }
    const std::vector<int>& tet_orientations() const {
        if (!tet_orientations_) throw std::logic_error("triangulation is not orientable");
        return *tet_orientations_;
    }
    const std::optional<NonOrientableWitness>& nonorientable_witness() const {
        return witness_;
    }

    bool all_edges_orientation_consistent() const {
        for (const auto& ec : edge_classes_)
            if (!ec.orientation_consistent) return false;
        return true;
    }

    // Multiset of edge degrees, ascending.
    std::vector<int> edge_degree_multiset() const {
        std::vector<int> d;
        d.reserve(edge_classes_.size());
        for (const auto& ec : edge_classes_) d.push_back(ec.degree);
        std::sort(d.begin(), d.end());
        return d;
    }

private:
    Triangulation tri_;
    int n_;

    std::vector<int> edge_class_of_;
    std::vector<int> edge_flip_of_;
    std::vector<EdgeClass> edge_classes_;

    std::vector<int> vertex_class_of_;
    std::vector<VertexClass> vertex_classes_;

    std::vector<int> face_class_of_;
    std::vector<FaceClass> face_classes_;

    std::optional<std::vector<int>> tet_orientations_;
    std::optional<NonOrientableWitness> witness_;

    void check_closed() {
        if (n_ == 0) throw NotClosedError("empty triangulation");
        for (int t = 0; t < n_; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri_.gluing(t, f);
                if (!g)
                    throw NotClosedError("unglued face: tetrahedron " + std::to_string(t) +
                                         " face " + Triangulation::face_name(f));
                if (g->tet == t && Triangulation::target_face(f, g->perm) == f)
                    throw NotClosedError(
                        "face glued to itself (face class of size 1): tetrahedron " +
                        std::to_string(t) + " face " + Triangulation::face_name(f));
            }
    }

    void build_edge_classes() {
        detail::ParityUnionFind uf(n_ * 6);
        std::vector<char> inconsistent_root(n_ * 6, 0);
        for (int t = 0; t < n_; ++t) {
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri_.gluing(t, f);
                const Perm4& p = g->perm;
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        int u = face_vertex_table[f][i], v = face_vertex_table[f][j];  // u < v
                        int src = t * 6 + edge_index_of(u, v);
                        int dst = g->tet * 6 + edge_index_of(p[u], p[v]);
                        int rel = (p[u] < p[v]) ? 0 : 1;
                        if (!uf.merge(src, dst, rel)) {
                            inconsistent_root[uf.find(src).first] = 1;
                        }
                    }
            }
        }
        // Deterministic classes: slots grouped by root, then ordered by their
        // least member.
        std::map<int, std::vector<int>> groups;
        for (int s = 0; s < n_ * 6; ++s) groups[uf.find(s).first].push_back(s);
        std::vector<std::pair<int, int>> reps;  // (least member, root)
        for (auto& [root, members] : groups) {
            std::sort(members.begin(), members.end());
            reps.push_back({members.front(), root});
        }
        std::sort(reps.begin(), reps.end());
        edge_class_of_.assign(n_ * 6, -1);
        edge_flip_of_.assign(n_ * 6, 0);
        edge_classes_.clear();
        for (auto& [least, root] : reps) {
            EdgeClass ec;
            ec.members = groups[root];
            ec.degree = static_cast<int>(ec.members.size());
            ec.orientation_consistent = !inconsistent_root[root];
            int rep_parity = uf.parity(least);
            for (int m : ec.members) {
                edge_class_of_[m] = static_cast<int>(edge_classes_.size());
                int flip = uf.parity(m) ^ rep_parity;
                edge_flip_of_[m] = flip;
                ec.flips.push_back(flip);
            }
            edge_classes_.push_back(std::move(ec));
        }
    }

    void build_vertex_classes() {
        detail::ParityUnionFind uf(n_ * 4);
        for (int t = 0; t < n_; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri_.gluing(t, f);
                for (int i = 0; i < 3; ++i) {
                    int v = face_vertex_table[f][i];
                    uf.merge(t * 4 + v, g->tet * 4 + g->perm[v], 0);
                }
            }
        std::map<int, std::vector<int>> groups;
        for (int s = 0; s < n_ * 4; ++s) groups[uf.find(s).first].push_back(s);
        std::vector<std::pair<int, int>> reps;
        for (auto& [root, members] : groups) {
            std::sort(members.begin(), members.end());
            reps.push_back({members.front(), root});
        }
        std::sort(reps.begin(), reps.end());
        vertex_class_of_.assign(n_ * 4, -1);
        vertex_classes_.clear();
        for (auto& [least, root] : reps) {
            VertexClass vc;
            vc.members = groups[root];
            for (int m : vc.members) vertex_class_of_[m] = static_cast<int>(vertex_classes_.size());
            vertex_classes_.push_back(std::move(vc));
        }
    }

    void build_face_classes() {
        face_class_of_.assign(n_ * 4, -1);
        face_classes_.clear();
        for (int t = 0; t < n_; ++t)
            for (int f = 0; f < 4; ++f) {
                int slot = t * 4 + f;
                if (face_class_of_[slot] >= 0) continue;
                const auto& g = tri_.gluing(t, f);
                int other = g->tet * 4 + Triangulation::target_face(f, g->perm);
                FaceClass fc;
                fc.members = {slot, other};
                std::sort(fc.members.begin(), fc.members.end());
                face_class_of_[slot] = static_cast<int>(face_classes_.size());
                face_class_of_[other] = static_cast<int>(face_classes_.size());
                face_classes_.push_back(std::move(fc));
            }
    }

    void build_orientation() {
        // ε_t · ε_u = -sign(π) for each gluing. BFS 2-colouring; the first
        // violated gluing plus the tree paths gives an odd cycle.
        std::vector<int> sign(n_, 0), parent(n_, -1), parent_face(n_, -1);
        std::vector<int> order;
        for (int start = 0; start < n_; ++start) {
            if (sign[start]) continue;
            sign[start] = 1;
            order.push_back(start);
            std::vector<int> queue{start};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int t = queue[qi];
                for (int f = 0; f < 4; ++f) {
                    const auto& g = tri_.gluing(t, f);
                    int want = -g->perm.sign() * sign[t];
                    if (!sign[g->tet]) {
                        sign[g->tet] = want;
                        parent[g->tet] = t;
                        parent_face[g->tet] = f;
                        queue.push_back(g->tet);
                    }
                }
            }
        }
        for (int t = 0; t < n_; ++t)
            for (int f = 0; f < 4; ++f) {
                const auto& g = tri_.gluing(t, f);
                if (sign[g->tet] != -g->perm.sign() * sign[t]) {
                    NonOrientableWitness w;
                    w.cycle.push_back({t, f});
                    // walk both endpoints up to the root; the union of tree
                    // paths plus this gluing contains an odd cycle.
                    for (int x = t; parent[x] >= 0; x = parent[x])
                        w.cycle.push_back({parent[x], parent_face[x]});
                    for (int x = g->tet; parent[x] >= 0; x = parent[x])
                        w.cycle.push_back({parent[x], parent_face[x]});
                    witness_ = std::move(w);
                    return;
                }
            }
        tet_orientations_ = std::move(sign);
    }
};

inline Skeleton build_skeleton(const Triangulation& tri) { return Skeleton(tri); }

// ---- vertex links -----------------------------------------------------------

namespace detail {

// Germ encodings inside one tetrahedron corner.
inline int corner_faces(int v, int out[3]) {
    int k = 0;
    for (int f = 0; f < 4; ++f)
        if (f != 3 - v) out[k++] = f;
    return k;
}

inline void corner_edges(int v, int out[3]) {
    int k = 0;
    for (int e = 0; e < 6; ++e)
        if (edge_vertex_table[e][0] == v || edge_vertex_table[e][1] == v) out[k++] = e;
}

}  // namespace detail

// One summary per vertex class, in class order. The link of a vertex is the
// surface glued from the corner triangles.
inline std::vector<SurfaceSummary> vertex_links(const Skeleton& s) {
    const Triangulation& tri = s.triangulation();
    int n = s.tet_count();

    // Corner triangles: slots t*4+v. Link-vertex germs (t,v,e): t*24+v*6+e.
    // Link-edge germs (t,v,f): t*16+v*4+f.
    detail::ParityUnionFind vert_uf(n * 24);
    detail::ParityUnionFind edge_uf(n * 16);
    detail::ParityUnionFind conn_uf(n * 4);
    detail::ParityUnionFind orient_uf(n * 4);
    std::vector<char> nonorientable_class(s.vertex_classes().size(), 0);

    auto plus_dir = [](int v, int f, int& from, int& to) {
        // Direction induced on the face-germ (v,f) by the corner's +1
        // orientation: cycle of the three edges at v in ascending order.
        int edges[3];
        detail::corner_edges(v, edges);
        int a = -1, b = -1;
        for (int i = 0; i < 3; ++i) {
            int e = edges[i];
            int u = edge_vertex_table[e][0] == v ? edge_vertex_table[e][1] : edge_vertex_table[e][0];
            // edge e lies in face f iff both endpoints do
            if (u != 3 - f && v != 3 - f) {
                if (a < 0)
                    a = i;
                else
                    b = i;
            }
        }
        // cycle 0->1->2->0: pair {0,1}: 0->1; {1,2}: 1->2; {0,2}: 2->0
        if (a == 0 && b == 1) {
            from = edges[0];
            to = edges[1];
        } else if (a == 1 && b == 2) {
            from = edges[1];
            to = edges[2];
        } else {
            from = edges[2];
            to = edges[0];
        }
    };

    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = *tri.gluing(t, f);
            const Perm4& p = g.perm;
            int u = g.tet;
            int tf = Triangulation::target_face(f, p);
            for (int i = 0; i < 3; ++i) {
                int v = face_vertex_table[f][i];
                int pv = p[v];
                // link edges
                edge_uf.merge(t * 16 + v * 4 + f, u * 16 + pv * 4 + tf, 0);
                // link triangle adjacency
                conn_uf.merge(t * 4 + v, u * 4 + pv, 0);
                // link vertices: edges of face f at v
                for (int j = 0; j < 3; ++j) {
                    int w = face_vertex_table[f][j];
                    if (w == v) continue;
                    int e = edge_index_of(v, w);
                    int pe = edge_index_of(pv, p[w]);
                    vert_uf.merge(t * 24 + v * 6 + e, u * 24 + pv * 6 + pe, 0);
                }
                // orientability: compare induced directions on the shared germ
                int from1, to1, from2, to2;
                plus_dir(v, f, from1, to1);
                plus_dir(pv, tf, from2, to2);
                int img_from = edge_index_of(pv, p[edge_vertex_table[from1][0] == v
                                                      ? edge_vertex_table[from1][1]
                                                      : edge_vertex_table[from1][0]]);
                bool match = (img_from == from2);
                // match: the +1 orientations induce the same direction, so the
                // corner signs must differ for the surface to be orientable.
                if (!orient_uf.merge(t * 4 + v, u * 4 + pv, match ? 1 : 0)) {
                    nonorientable_class[s.vertex_class_of(t, v)] = 1;
                }
            }
        }
    }

    size_t nv = s.vertex_classes().size();
    std::vector<SurfaceSummary> out(nv);
    std::vector<std::vector<int>> corners_by_class(nv);
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) corners_by_class[s.vertex_class_of(t, v)].push_back(t * 4 + v);

    for (size_t c = 0; c < nv; ++c) {
        auto& corners = corners_by_class[c];
        SurfaceSummary& sum = out[c];
        sum.faces = static_cast<long>(corners.size());
        // link edges
        std::vector<int> edge_roots, vert_roots, conn_roots;
        for (int cs : corners) {
            int t = cs / 4, v = cs % 4;
            for (int f = 0; f < 4; ++f)
                if (f != 3 - v) edge_roots.push_back(edge_uf.find(t * 16 + v * 4 + f).first);
            int edges[3];
            detail::corner_edges(v, edges);
            for (int e : edges) vert_roots.push_back(vert_uf.find(t * 24 + v * 6 + e).first);
            conn_roots.push_back(conn_uf.find(cs).first);
        }
        auto uniq = [](std::vector<int>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            return static_cast<long>(v.size());
        };
        sum.edges = uniq(edge_roots);
        sum.vertices = uniq(vert_roots);
        sum.euler_characteristic = sum.vertices - sum.edges + sum.faces;
        sum.connected = uniq(conn_roots) == 1;
        sum.orientable = !nonorientable_class[c];
    }
    return out;
}

inline bool all_links_spheres(const Skeleton& s) {
    for (const auto& l : vertex_links(s))
        if (!l.is_sphere()) return false;
    return true;
}

// A closed gluing is a 3-manifold triangulation iff all vertex links are
// spheres and no edge is identified with itself in reverse.
inline bool is_manifold(const Skeleton& s) {
    return s.all_edges_orientation_consistent() && all_links_spheres(s);
}

}  // namespace tricert
