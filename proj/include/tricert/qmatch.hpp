#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tricert/exact.hpp"
#include "tricert/faces.hpp"
#include "tricert/skeleton.hpp"
#include "tricert/squares.hpp"

namespace tricert {

struct NonOrientableInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadRef {
    int tet = -1;
    int quad_index = -1;

    int column() const { return tet * 3 + quad_index; }
    bool operator==(const QuadRef& o) const { return tet == o.tet && quad_index == o.quad_index; }
    bool operator<(const QuadRef& o) const {
        return column() < o.column();
    }
    std::string str() const {
        return "q(" + std::to_string(tet) + "," + std::to_string(quad_index) + ")";
    }
};

inline QuadRef quad_of_column(int col) { return {col / 3, col % 3}; }

// Sign of the corner of quadrilateral type `quad` at edge {a,b} of an
// oriented tetrahedron: order the complement {x,y} so that (a,b,x,y) is a
// positive ordering of the tetrahedron's vertices; then the quad pairing a
// with x gets +1 and the quad pairing a with y gets -1, both multiplied by
// the tetrahedron's orientation sign.
inline int corner_sign(int tet_orientation, int quad, int edge) {
    int a = edge_vertex_table[edge][0], b = edge_vertex_table[edge][1];
    if (quad == quad_index_of_pair(a, b))
        throw std::domain_error("corner_sign: quadrilateral has no corner on this edge");
    int x = quad_partner(quad, a);
    int y = quad_partner(quad, b);
    return tet_orientation * ordering_sign(a, b, x, y);
}

// Sign conventions a Q-matching matrix is built with: a +-1 per edge class
// (row signs; the choice of edge orientation) and a +-1 per tetrahedron
// (relative to the coherent orientation; negates the tetrahedron's three
// columns). All detection results are independent of these choices.
struct QMatchConventions {
    std::vector<int> row_signs;
    std::vector<int> tet_signs;

    static QMatchConventions standard(const Skeleton& s) {
        QMatchConventions c;
        c.row_signs.assign(s.edge_count(), 1);
        c.tet_signs.assign(s.tet_count(), 1);
        return c;
    }
};

struct QMatchSystem {
    IntMatrix matrix;  // rows: edge classes; cols: 3 per tetrahedron
    QMatchConventions conventions;
    std::vector<std::vector<std::pair<int, Int>>> sparse_columns;  // (row, entry), entry != 0

    int edge_count() const { return matrix.rows; }
    int quad_count() const { return matrix.cols; }
    int tet_count() const { return matrix.cols / 3; }

    bool column_zero(int c) const { return sparse_columns[c].empty(); }

    // col(a) + t * col(b) == 0 for a unique nonzero rational t, if any.
    std::optional<Rat> dependence(int a, int b) const {
        const auto& ca = sparse_columns[a];
        const auto& cb = sparse_columns[b];
        if (ca.empty() || cb.empty() || ca.size() != cb.size()) return std::nullopt;
        for (size_t i = 0; i < ca.size(); ++i)
            if (ca[i].first != cb[i].first) return std::nullopt;
        Rat t = -Rat(ca[0].second) / Rat(cb[0].second);
        for (size_t i = 1; i < ca.size(); ++i)
            if (Rat(ca[i].second) + t * Rat(cb[i].second) != 0) return std::nullopt;
        return t;
    }
};

// Builds the Q-matching equations: one row per edge class, one column per
// quadrilateral type; the entry is the total corner weight of the quad at
// the edge, summed over the members of the edge class.
inline QMatchSystem build_q_system(const Skeleton& s, const QMatchConventions& conv) {
    if (!s.orientable())
        throw NonOrientableInputError("Q-matching equations need an orientable triangulation");
    if (!s.all_edges_orientation_consistent())
        throw InternalConsistencyError("orientable triangulation with a reversed edge");
    const auto& eps = s.tet_orientations();

    QMatchSystem sys;
    sys.conventions = conv;
    sys.matrix = IntMatrix(static_cast<int>(s.edge_count()), 3 * s.tet_count());
    for (int e = 0; e < sys.matrix.rows; ++e) {
        for (int m : s.edge_classes()[e].members) {
            int t = m / 6, le = m % 6;
            for (int q = 0; q < 3; ++q) {
                if (q == quad_index_of_pair(edge_vertex_table[le][0], edge_vertex_table[le][1]))
                    continue;
                sys.matrix.at(e, 3 * t + q) +=
                    conv.row_signs[e] * conv.tet_signs[t] * corner_sign(eps[t], q, le);
            }
        }
    }
    sys.sparse_columns.resize(sys.matrix.cols);
    for (int c = 0; c < sys.matrix.cols; ++c)
        for (int r = 0; r < sys.matrix.rows; ++r)
            if (sys.matrix.at(r, c) != 0) sys.sparse_columns[c].push_back({r, sys.matrix.at(r, c)});
    return sys;
}

inline QMatchSystem build_q_system(const Skeleton& s) {
    return build_q_system(s, QMatchConventions::standard(s));
}

// Quads supporting a 1-quad type solution: exactly the zero columns. The
// result is cross-validated against the combinatorial criterion (the dual
// square has partition type F or G); a mismatch means the implementation
// disagrees with itself and is reported as such.
inline std::vector<QuadRef> one_quad_solutions(const QMatchSystem& sys, const Skeleton& s) {
    std::vector<QuadRef> out;
    for (int c = 0; c < sys.quad_count(); ++c) {
        QuadRef q = quad_of_column(c);
        bool zero = sys.column_zero(c);
        PartitionType pt = square_of(s, q.tet, q.quad_index).partition_type;
        bool combinatorial = (pt == PartitionType::F || pt == PartitionType::G);
        if (zero != combinatorial)
            throw InternalConsistencyError(
                "1-quad criterion mismatch at " + q.str() + ": zero column = " +
                (zero ? "yes" : "no") + ", square type = " + std::string(1, static_cast<char>(pt)));
        if (zero) out.push_back(q);
    }
    return out;
}

struct TwoQuadSolution {
    QuadRef a, b;  // a < b in column order; x(a) = 1, x(b) = t
    Rat t;

    bool operator<(const TwoQuadSolution& o) const {
        if (!(a == o.a)) return a < o.a;
        return b < o.b;
    }
    bool operator==(const TwoQuadSolution& o) const { return a == o.a && b == o.b && t == o.t; }
};

// All unordered pairs of quads with nonzero, linearly dependent columns.
inline std::vector<TwoQuadSolution> two_quad_solutions(const QMatchSystem& sys) {
    std::vector<TwoQuadSolution> out;
    for (int a = 0; a < sys.quad_count(); ++a) {
        if (sys.column_zero(a)) continue;
        for (int b = a + 1; b < sys.quad_count(); ++b) {
            if (sys.column_zero(b)) continue;
            if (auto t = sys.dependence(a, b))
                out.push_back({quad_of_column(a), quad_of_column(b), *t});
        }
    }
    return out;
}

struct TwoQuadInOneTetFinding {
    int tet = -1;
    TwoQuadSolution solution;
    std::vector<std::string> flags;  // S3 / L5 annotations for non-face-generic inputs
};

struct TwoQuadInOneTetReport {
    bool applicable = false;  // requires that there is no 1-quad type solution
    bool consistency_violation = false;
    std::vector<TwoQuadInOneTetFinding> findings;
};

// 2-quad type solutions supported inside a single tetrahedron. In a
// face-generic triangulation without 1-quad solutions these cannot exist;
// otherwise each finding is annotated with what it certifies.
inline TwoQuadInOneTetReport two_quad_in_one_tet(const QMatchSystem& sys, const Skeleton& s) {
    TwoQuadInOneTetReport rep;
    rep.applicable = one_quad_solutions(sys, s).empty();
    if (!rep.applicable) return rep;
    bool fg = is_face_generic(s).value;
    for (int t = 0; t < sys.tet_count(); ++t) {
        for (int qa = 0; qa < 3; ++qa) {
            for (int qb = qa + 1; qb < 3; ++qb) {
                int a = 3 * t + qa, b = 3 * t + qb;
                if (sys.column_zero(a) || sys.column_zero(b)) continue;
                auto dep = sys.dependence(a, b);
                if (!dep) continue;
                TwoQuadInOneTetFinding f;
                f.tet = t;
                f.solution = {quad_of_column(a), quad_of_column(b), *dep};
                bool cone = false;
                for (int face = 0; face < 4; ++face)
                    if (classify_face(s, s.face_class_of(t, face)).kind == FaceKind::Cone)
                        cone = true;
                if (cone) f.flags.push_back("S3");
                if (tetra_type(s, t).label == "DEE") f.flags.push_back("L5");
                rep.findings.push_back(std::move(f));
            }
        }
    }
    if (fg && !rep.findings.empty()) rep.consistency_violation = true;
    return rep;
}

struct ClusterWitness {
    QuadRef quad;
    bool one_quad = false;           // witnessed by a zero column
    std::optional<TwoQuadSolution> pair;  // otherwise the first 2-quad solution through it
};

struct Cluster {
    int tet = -1;
    std::array<ClusterWitness, 3> witnesses;
    bool coincident_witnesses = false;  // two of the witnessing solutions coincide
};

// Tetrahedra whose three quadrilateral types are all covered by solutions
// with at most two nonzero coordinates.
inline std::vector<Cluster> clusters_of_three(const QMatchSystem& sys, const Skeleton& s) {
    auto ones = one_quad_solutions(sys, s);
    auto twos = two_quad_solutions(sys);
    std::set<int> one_cols;
    for (const auto& q : ones) one_cols.insert(q.column());
    std::vector<std::vector<const TwoQuadSolution*>> through(sys.quad_count());
    for (const auto& t2 : twos) {
        through[t2.a.column()].push_back(&t2);
        through[t2.b.column()].push_back(&t2);
    }
    std::vector<Cluster> out;
    for (int t = 0; t < sys.tet_count(); ++t) {
        Cluster cl;
        cl.tet = t;
        bool all = true;
        for (int q = 0; q < 3 && all; ++q) {
            int col = 3 * t + q;
            ClusterWitness& w = cl.witnesses[q];
            w.quad = {t, q};
            if (one_cols.count(col)) {
                w.one_quad = true;
            } else if (!through[col].empty()) {
                w.pair = *through[col].front();
            } else {
                all = false;
            }
        }
        if (!all) continue;
        for (int i = 0; i < 3 && !cl.coincident_witnesses; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (cl.witnesses[i].pair && cl.witnesses[j].pair &&
                    *cl.witnesses[i].pair == *cl.witnesses[j].pair)
                    cl.coincident_witnesses = true;
        out.push_back(std::move(cl));
    }
    return out;
}

// ---- Haken's matching equations ---------------------------------------------

// Classical matching equations in 7T coordinates (4 triangle types then 3
// quad types per tetrahedron): for each face class and each normal arc type,
// the incident disc counts agree on both sides.
inline IntMatrix build_haken_system(const Skeleton& s) {
    const Triangulation& tri = s.triangulation();
    IntMatrix m(3 * static_cast<int>(s.face_count()), 7 * s.tet_count());
    for (int fc = 0; fc < static_cast<int>(s.face_count()); ++fc) {
        int slot = s.face_classes()[fc].members.front();
        int t = slot / 4, f = slot % 4;
        const auto& g = *tri.gluing(t, f);
        int u = g.tet;
        int tf = Triangulation::target_face(f, g.perm);
        for (int i = 0; i < 3; ++i) {
            int v = face_vertex_table[f][i];
            int pv = g.perm[v];
            int row = 3 * fc + i;
            m.at(row, 7 * t + v) += 1;
            m.at(row, 7 * t + 4 + quad_index_of_pair(v, face_opposite_vertex(f))) += 1;
            m.at(row, 7 * u + pv) -= 1;
            m.at(row, 7 * u + 4 + quad_index_of_pair(pv, face_opposite_vertex(tf))) -= 1;
        }
    }
    return m;
}

// Quad-coordinate projections of a spanning set of the Haken kernel must
// satisfy the Q-matching equations; returns true when they do.
inline bool haken_projections_satisfy_q(const Skeleton& s, const QMatchSystem& sys) {
    IntMatrix haken = build_haken_system(s);
    auto basis = rational_kernel_basis(haken);
    for (const auto& vec : basis) {
        for (int r = 0; r < sys.matrix.rows; ++r) {
            Rat acc = 0;
            for (int t = 0; t < sys.tet_count(); ++t)
                for (int q = 0; q < 3; ++q) {
                    const Int& coeff = sys.matrix.at(r, 3 * t + q);
                    if (coeff != 0) acc += Rat(coeff) * vec[7 * t + 4 + q];
                }
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace tricert
