#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "tricert/faces.hpp"
#include "tricert/skeleton.hpp"

namespace tricert {

enum class PartitionType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };
enum class SquareTopology { None, Annulus, Mobius, Torus, Klein, Projective };

inline const char* square_topology_name(SquareTopology t) {
    switch (t) {
        case SquareTopology::None: return "none";
        case SquareTopology::Annulus: return "annulus";
        case SquareTopology::Mobius: return "mobius";
        case SquareTopology::Torus: return "torus";
        case SquareTopology::Klein: return "klein";
        case SquareTopology::Projective: return "projective";
    }
    return "?";
}

// Boundary traversal of the three twisted squares: quad q separates the
// vertex pairs of partition q ({01|23}, {02|13}, {03|12}); its boundary runs
// through the other four edges. Entries are (from, to) vertices.
inline constexpr int square_boundary_table[3][4][2] = {
    {{0, 2}, {2, 1}, {1, 3}, {3, 0}},
    {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
    {{0, 1}, {1, 3}, {3, 2}, {2, 0}},
};

struct SquareSlot {
    int local_edge = -1;   // edge index 0..5 inside the tetrahedron
    DirectedEdge dir;      // directed class of the traversal direction
};

struct TwistedSquare {
    int tet = -1;
    int quad_index = -1;
    std::array<SquareSlot, 4> boundary{};
    PartitionType partition_type = PartitionType::A;
    SquareTopology topological_type = SquareTopology::None;
};

namespace detail {

inline PartitionType partition_type_of(const std::array<int, 4>& c) {
    std::set<int> distinct(c.begin(), c.end());
    switch (distinct.size()) {
        case 4: return PartitionType::A;
        case 3: {
            // find the equal pair
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (c[i] == c[j]) return (j - i == 2) ? PartitionType::B : PartitionType::C;
            break;
        }
        case 2: {
            int counts[2] = {0, 0};
            int first = c[0];
            for (int x : c) ++counts[x == first ? 0 : 1];
            if (counts[0] == 3 || counts[1] == 3) return PartitionType::E;
            if (c[0] == c[2] && c[1] == c[3]) return PartitionType::D;
            return PartitionType::F;
        }
        case 1: return PartitionType::G;
    }
    throw std::logic_error("partition_type_of");
}

}  // namespace detail

// Quotient space of a single square with boundary slots carrying letters and
// traversal signs; slots with equal letters are identified respecting the
// signs. Used to derive and re-check the topological-type tables.
struct SquareQuotient {
    int chi = 0;
    bool closed = false;
    bool orientable = false;
    int boundary_components = 0;
};

inline SquareQuotient square_identification_space(const std::array<int, 4>& letter,
                                                  const std::array<int, 4>& delta) {
    detail::ParityUnionFind corners(4);
    std::set<int> letters(letter.begin(), letter.end());
    auto is_free = [&](int i) {
        for (int j = 0; j < 4; ++j)
            if (j != i && letter[j] == letter[i]) return false;
        return true;
    };
    bool closed = true;
    bool orientable = true;
    for (int l : letters) {
        std::vector<int> slots;
        for (int i = 0; i < 4; ++i)
            if (letter[i] == l) slots.push_back(i);
        if (slots.size() == 1) closed = false;
        for (size_t k = 1; k < slots.size(); ++k) {
            int i = slots[0], j = slots[k];
            if (delta[i] == delta[j]) {
                // the 2-cell traverses the edge twice the same way
                corners.merge(i, j, 0);
                corners.merge((i + 1) % 4, (j + 1) % 4, 0);
                orientable = false;
            } else {
                corners.merge(i, (j + 1) % 4, 0);
                corners.merge((i + 1) % 4, j, 0);
            }
        }
    }
    std::set<int> roots;
    for (int i = 0; i < 4; ++i) roots.insert(corners.find(i).first);
    SquareQuotient q;
    q.chi = static_cast<int>(roots.size()) - static_cast<int>(letters.size()) + 1;
    q.closed = closed;
    q.orientable = orientable;
    // Boundary circles: free slots joined at corner orbits.
    if (!closed) {
        detail::ParityUnionFind comp(4);
        for (int i = 0; i < 4; ++i)
            if (is_free(i)) comp.merge(corners.find(i).first, corners.find((i + 1) % 4).first, 0);
        std::set<int> comp_roots;
        for (int i = 0; i < 4; ++i)
            if (is_free(i)) comp_roots.insert(comp.find(corners.find(i).first).first);
        q.boundary_components = static_cast<int>(comp_roots.size());
    }
    return q;
}

// Topological types of the B and D cases, by the products of traversal signs
// over the identified pairs. Derived from square_identification_space and
// frozen here; the derivation is re-run in the test suite.
inline SquareTopology topological_type_of(PartitionType pt, const std::array<int, 4>& cls,
                                          const std::array<int, 4>& sgn) {
    switch (pt) {
        case PartitionType::A:
        case PartitionType::E:
        case PartitionType::G:
            return SquareTopology::None;
        case PartitionType::C:
            return SquareTopology::Mobius;
        case PartitionType::F:
            return SquareTopology::Klein;
        case PartitionType::B: {
            int i = (cls[0] == cls[2]) ? 0 : 1;
            int r = sgn[i] * sgn[i + 2];
            return r > 0 ? SquareTopology::Mobius : SquareTopology::Annulus;
        }
        case PartitionType::D: {
            int r02 = sgn[0] * sgn[2];
            int r13 = sgn[1] * sgn[3];
            if (r02 < 0 && r13 < 0) return SquareTopology::Torus;
            if (r02 > 0 && r13 > 0) return SquareTopology::Projective;
            return SquareTopology::Klein;
        }
    }
    return SquareTopology::None;
}

inline TwistedSquare square_of(const Skeleton& s, int tet, int quad_index) {
    TwistedSquare sq;
    sq.tet = tet;
    sq.quad_index = quad_index;
    std::array<int, 4> cls{}, sgn{};
    for (int i = 0; i < 4; ++i) {
        int u = square_boundary_table[quad_index][i][0];
        int v = square_boundary_table[quad_index][i][1];
        DirectedEdge de = s.directed_edge(tet, u, v);
        sq.boundary[i] = {edge_index_of(u, v), de};
        cls[i] = de.edge_class;
        sgn[i] = de.sign;
    }
    sq.partition_type = detail::partition_type_of(cls);
    sq.topological_type = topological_type_of(sq.partition_type, cls, sgn);
    return sq;
}

inline std::array<TwistedSquare, 3> squares_of(const Skeleton& s, int tet) {
    return {square_of(s, tet, 0), square_of(s, tet, 1), square_of(s, tet, 2)};
}

inline std::vector<TwistedSquare> all_squares(const Skeleton& s) {
    std::vector<TwistedSquare> out;
    out.reserve(s.tet_count() * 3);
    for (int t = 0; t < s.tet_count(); ++t)
        for (int q = 0; q < 3; ++q) out.push_back(square_of(s, t, q));
    return out;
}

// ---- tetrahedron types ------------------------------------------------------

enum class RefinedTetraType { None, sBBD, sBDE, LST321 };

struct TetraType {
    std::string label;  // sorted multiset of the three squares' partition types
    int distinct_edge_count = 0;
    RefinedTetraType refined = RefinedTetraType::None;
    bool in_generic_list = true;  // false -> label is impossible in face-generic inputs
    std::string note;
};

namespace detail {

// Edge identification patterns of the two special tetrahedra, as classes of
// coherently directed model edges. Distinct classes must stay distinct.
struct TetPattern {
    std::vector<std::vector<std::pair<int, int>>> classes;
};

inline const TetPattern& sbbd_pattern() {
    static const TetPattern p{{
        {{0, 1}, {2, 3}},
        {{0, 2}, {1, 3}},
        {{0, 3}},
        {{1, 2}},
    }};
    return p;
}

inline const TetPattern& sbde_pattern() {
    static const TetPattern p{{
        {{0, 2}, {1, 3}},
        {{0, 1}, {1, 2}, {2, 3}},
        {{0, 3}},
    }};
    return p;
}

inline bool matches_pattern(const Skeleton& s, int tet, const TetPattern& pat) {
    for (const Perm4& rho : Perm4::all()) {
        bool ok = true;
        std::vector<int> class_ids;
        for (const auto& cls : pat.classes) {
            DirectedEdge first = s.directed_edge(tet, rho[cls[0].first], rho[cls[0].second]);
            for (size_t k = 1; k < cls.size() && ok; ++k)
                if (s.directed_edge(tet, rho[cls[k].first], rho[cls[k].second]) != first) ok = false;
            if (!ok) break;
            class_ids.push_back(first.edge_class);
        }
        if (!ok) continue;
        std::set<int> distinct(class_ids.begin(), class_ids.end());
        if (distinct.size() == class_ids.size()) return true;
    }
    return false;
}

}  // namespace detail

// The labels possible in a face-generic triangulation.
inline const std::set<std::string>& generic_tetra_labels() {
    static const std::set<std::string> labels{"AAA", "AAC", "ABB", "AAF", "ABE", "ACC",
                                              "BBC", "BBD", "BBF", "BDE", "DDD"};
    return labels;
}

inline TetraType tetra_type(const Skeleton& s, int tet) {
    auto sqs = squares_of(s, tet);
    std::string label;
    for (const auto& sq : sqs) label += static_cast<char>(sq.partition_type);
    std::sort(label.begin(), label.end());

    TetraType out;
    out.label = label;
    std::set<int> edges;
    for (int e = 0; e < 6; ++e) edges.insert(s.edge_class_of(tet, e));
    out.distinct_edge_count = static_cast<int>(edges.size());
    out.in_generic_list = generic_tetra_labels().count(label) > 0;
    if (!out.in_generic_list)
        out.note = "label outside the face-generic classification";

    auto d_square_is_torus = [&]() {
        for (const auto& sq : sqs)
            if (sq.partition_type == PartitionType::D &&
                sq.topological_type != SquareTopology::Torus)
                return false;
        return true;
    };

    if (label == "BBD" && d_square_is_torus() &&
        detail::matches_pattern(s, tet, detail::sbbd_pattern())) {
        out.refined = RefinedTetraType::sBBD;
    } else if (label == "BDE" && d_square_is_torus() &&
               detail::matches_pattern(s, tet, detail::sbde_pattern())) {
        bool cone_free = true;
        std::vector<int> mobius_classes;
        for (int f = 0; f < 4; ++f) {
            FaceType ft = classify_face(s, s.face_class_of(tet, f));
            if (ft.kind == FaceKind::Cone) cone_free = false;
            if (ft.kind == FaceKind::Mobius) mobius_classes.push_back(s.face_class_of(tet, f));
        }
        if (cone_free) {
            out.refined = RefinedTetraType::sBDE;
            if (mobius_classes.size() == 2 && mobius_classes[0] == mobius_classes[1])
                out.refined = RefinedTetraType::LST321;
        }
    }
    return out;
}

inline std::vector<TetraType> all_tetra_types(const Skeleton& s) {
    std::vector<TetraType> out;
    out.reserve(s.tet_count());
    for (int t = 0; t < s.tet_count(); ++t) out.push_back(tetra_type(s, t));
    return out;
}

}  // namespace tricert
