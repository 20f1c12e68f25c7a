#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <set>

#include "helpers.hpp"
#include "tricert/squares.hpp"

using namespace tricert;

namespace {

// Independent edge-orbit computation: iterative closure over plain sets, no
// union-find, no orientation bookkeeping.
std::map<int, int> edge_orbits_by_closure(const Triangulation& t) {
    int n = t.tet_count();
    std::vector<std::set<int>> orbits;
    for (int s = 0; s < 6 * n; ++s) orbits.push_back({s});
    auto orbit_of = [&](int s) {
        for (size_t i = 0; i < orbits.size(); ++i)
            if (orbits[i].count(s)) return static_cast<int>(i);
        throw std::logic_error("orbit_of");
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int tet = 0; tet < n; ++tet)
            for (int f = 0; f < 4; ++f) {
                const auto& g = *t.gluing(tet, f);
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        int u = face_vertex_table[f][i], v = face_vertex_table[f][j];
                        int a = tet * 6 + edge_index_of(u, v);
                        int b = g.tet * 6 + edge_index_of(g.perm[u], g.perm[v]);
                        int oa = orbit_of(a), ob = orbit_of(b);
                        if (oa != ob) {
                            orbits[oa].insert(orbits[ob].begin(), orbits[ob].end());
                            orbits.erase(orbits.begin() + ob);
                            changed = true;
                        }
                    }
            }
    }
    std::map<int, int> cls;
    for (size_t i = 0; i < orbits.size(); ++i)
        for (int s : orbits[i]) cls[s] = static_cast<int>(i);
    return cls;
}

// Independent partition-letter computation from an arbitrary class map.
char slot_partition_letter(const std::map<int, int>& cls, int tet, int quad) {
    std::vector<int> c;
    for (int i = 0; i < 4; ++i) {
        int u = square_boundary_table[quad][i][0], v = square_boundary_table[quad][i][1];
        c.push_back(cls.at(tet * 6 + edge_index_of(u, v)));
    }
    std::map<int, int> mult;
    for (int x : c) ++mult[x];
    std::vector<int> counts;
    for (auto& [k, v] : mult) counts.push_back(v);
    std::sort(counts.rbegin(), counts.rend());
    if (counts == std::vector<int>{1, 1, 1, 1}) return 'A';
    if (counts == std::vector<int>{2, 1, 1}) {
        for (int i = 0; i < 4; ++i)
            if (c[i] == c[(i + 2) % 4]) return 'B';
        return 'C';
    }
    if (counts == std::vector<int>{3, 1}) return 'E';
    if (counts == std::vector<int>{2, 2}) return (c[0] == c[2]) ? 'D' : 'F';
    return 'G';
}

}  // namespace

TEST_CASE("square boundaries follow the partition tables") {
    Skeleton s(testutil::golden_s3());
    auto sq = square_of(s, 0, 0);
    std::set<int> edges;
    for (const auto& slot : sq.boundary) edges.insert(slot.local_edge);
    REQUIRE(edges == std::set<int>{edge_index_of(0, 2), edge_index_of(1, 2), edge_index_of(1, 3),
                                   edge_index_of(0, 3)});
}

TEST_CASE("partition types match the independent closure oracle") {
    for (const Triangulation& t :
         {testutil::golden_s3(), testutil::pillow(), testutil::boundary_4_simplex()}) {
        Skeleton s(t);
        auto cls = edge_orbits_by_closure(t);
        for (int tet = 0; tet < s.tet_count(); ++tet)
            for (int q = 0; q < 3; ++q) {
                char expected = slot_partition_letter(cls, tet, q);
                REQUIRE(static_cast<char>(square_of(s, tet, q).partition_type) == expected);
            }
    }
}

TEST_CASE("all six edges distinct gives type AAA") {
    Skeleton s(testutil::boundary_4_simplex());
    for (int t = 0; t < s.tet_count(); ++t) {
        TetraType tt = tetra_type(s, t);
        REQUIRE(tt.label == "AAA");
        REQUIRE(tt.distinct_edge_count == 6);
        for (int q = 0; q < 3; ++q)
            REQUIRE(square_of(s, t, q).partition_type == PartitionType::A);
    }
}

TEST_CASE("golden tetra labels lie in the face-generic list") {
    Skeleton s(testutil::golden_s3());
    for (int t = 0; t < s.tet_count(); ++t) {
        TetraType tt = tetra_type(s, t);
        REQUIRE(tt.in_generic_list);
        REQUIRE(generic_tetra_labels().count(tt.label) == 1);
    }
}

TEST_CASE("topological type tables re-derived from identification spaces") {
    // type B: opposite pair identified; the quotient is an annulus or a
    // Mobius band depending on the traversal signs
    for (int d0 : {1, -1})
        for (int d2 : {1, -1}) {
            std::array<int, 4> letters{0, 1, 0, 2};
            std::array<int, 4> deltas{d0, 1, d2, 1};
            SquareQuotient q = square_identification_space(letters, deltas);
            REQUIRE(!q.closed);
            REQUIRE(q.chi == 0);
            SquareTopology table = topological_type_of(PartitionType::B, {0, 1, 0, 2},
                                                       {d0, 1, d2, 1});
            if (d0 * d2 < 0) {
                REQUIRE(q.boundary_components == 2);  // annulus
                REQUIRE(q.orientable);
                REQUIRE(table == SquareTopology::Annulus);
            } else {
                REQUIRE(q.boundary_components == 1);  // Mobius band
                REQUIRE(!q.orientable);
                REQUIRE(table == SquareTopology::Mobius);
            }
        }
    // type D: both opposite pairs identified; torus, Klein bottle or
    // projective plane
    for (int d2 : {1, -1})
        for (int d3 : {1, -1}) {
            std::array<int, 4> letters{0, 1, 0, 1};
            std::array<int, 4> deltas{1, 1, d2, d3};
            SquareQuotient q = square_identification_space(letters, deltas);
            REQUIRE(q.closed);
            SquareTopology table =
                topological_type_of(PartitionType::D, {0, 1, 0, 1}, {1, 1, d2, d3});
            if (d2 < 0 && d3 < 0) {
                REQUIRE(q.chi == 0);
                REQUIRE(q.orientable);
                REQUIRE(table == SquareTopology::Torus);
            } else if (d2 > 0 && d3 > 0) {
                REQUIRE(q.chi == 1);  // projective plane
                REQUIRE(table == SquareTopology::Projective);
            } else {
                REQUIRE(q.chi == 0);
                REQUIRE(!q.orientable);
                REQUIRE(table == SquareTopology::Klein);
            }
        }
}

namespace {

// Synthetic directed-edge assignment from a tetrahedron pattern: class of an
// edge is its pattern class, the first listed direction is the reference.
struct PatternEdges {
    std::map<int, std::pair<int, int>> dir_of_edge;  // edge index -> (class, sign of asc)

    explicit PatternEdges(const std::vector<std::vector<std::pair<int, int>>>& classes) {
        for (size_t c = 0; c < classes.size(); ++c)
            for (const auto& [u, v] : classes[c]) {
                int e = edge_index_of(u, v);
                int sign = (u < v) ? 1 : -1;  // listed direction vs ascending
                dir_of_edge[e] = {static_cast<int>(c), sign};
            }
    }

    DirectedEdge directed(int u, int v) const {
        auto [cls, asc_sign] = dir_of_edge.at(edge_index_of(u, v));
        int s = (u < v) ? asc_sign : -asc_sign;
        return {cls, s};
    }
};

char pattern_square_letterset(const PatternEdges& pe, int quad, std::array<int, 4>& cls,
                              std::array<int, 4>& sgn) {
    for (int i = 0; i < 4; ++i) {
        int u = square_boundary_table[quad][i][0], v = square_boundary_table[quad][i][1];
        DirectedEdge de = pe.directed(u, v);
        cls[i] = de.edge_class;
        sgn[i] = de.sign;
    }
    std::map<int, int> mult;
    for (int x : cls) ++mult[x];
    std::vector<int> counts;
    for (auto& [k, v] : mult) counts.push_back(v);
    std::sort(counts.rbegin(), counts.rend());
    if (counts == std::vector<int>{1, 1, 1, 1}) return 'A';
    if (counts == std::vector<int>{2, 1, 1}) return (cls[0] == cls[2] || cls[1] == cls[3]) ? 'B' : 'C';
    if (counts == std::vector<int>{3, 1}) return 'E';
    if (counts == std::vector<int>{2, 2}) return (cls[0] == cls[2]) ? 'D' : 'F';
    return 'G';
}

}  // namespace

TEST_CASE("frozen special-tetrahedron patterns satisfy the classification constraints") {
    // sBBD: two pairs of opposite edges coherently identified, torus D-square
    {
        PatternEdges pe({{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}}, {{1, 2}}});
        std::string label;
        std::array<int, 4> cls{}, sgn{};
        SquareTopology d_type = SquareTopology::None;
        for (int q = 0; q < 3; ++q) {
            char c = pattern_square_letterset(pe, q, cls, sgn);
            label += c;
            if (c == 'D')
                d_type = topological_type_of(PartitionType::D, cls, sgn);
        }
        std::sort(label.begin(), label.end());
        REQUIRE(label == "BBD");
        REQUIRE(d_type == SquareTopology::Torus);
    }
    // sBDE: spiral triple, opposite pair, torus D-square and no cone faces
    {
        PatternEdges pe({{{0, 2}, {1, 3}}, {{0, 1}, {1, 2}, {2, 3}}, {{0, 3}}});
        std::string label;
        std::array<int, 4> cls{}, sgn{};
        SquareTopology d_type = SquareTopology::None;
        for (int q = 0; q < 3; ++q) {
            char c = pattern_square_letterset(pe, q, cls, sgn);
            label += c;
            if (c == 'D')
                d_type = topological_type_of(PartitionType::D, cls, sgn);
        }
        std::sort(label.begin(), label.end());
        REQUIRE(label == "BDE");
        REQUIRE(d_type == SquareTopology::Torus);
        // no cone faces: for each face, any identified edge pair must be a
        // Mobius identification
        for (int f = 0; f < 4; ++f) {
            int a = face_vertex_table[f][0], b = face_vertex_table[f][1],
                c = face_vertex_table[f][2];
            auto dab = pe.directed(a, b), dac = pe.directed(a, c), dbc = pe.directed(b, c);
            auto check_pair = [&](DirectedEdge d1, DirectedEdge d2, int shared_sign1,
                                  int shared_sign2) {
                if (d1.edge_class != d2.edge_class) return;
                REQUIRE(shared_sign1 * d1.sign != shared_sign2 * d2.sign);  // not a cone
            };
            // pairs with their directions out of the shared vertex
            check_pair(dab, dac, 1, 1);    // shared a: a->b vs a->c
            check_pair(dab, dbc, -1, 1);   // shared b: b->a vs b->c
            check_pair(dac, dbc, -1, -1);  // shared c: c->a vs c->b
        }
    }
}
