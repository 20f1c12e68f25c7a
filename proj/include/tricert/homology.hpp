#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "tricert/exact.hpp"
#include "tricert/skeleton.hpp"

namespace tricert {

// ---- chain complex of the quotient cell structure ---------------------------

// d2: rows = edge classes, cols = face classes. The boundary of face (a,b,c)
// with a<b<c is  bc - ac + ab, each edge taken with its class direction sign.
inline IntMatrix boundary2(const Skeleton& s) {
    IntMatrix m(static_cast<int>(s.edge_count()), static_cast<int>(s.face_count()));
    for (int fc = 0; fc < m.cols; ++fc) {
        int slot = s.face_classes()[fc].members.front();
        int t = slot / 4, f = slot % 4;
        int a = face_vertex_table[f][0], b = face_vertex_table[f][1], c = face_vertex_table[f][2];
        const std::pair<std::pair<int, int>, int> terms[3] = {
            {{b, c}, +1}, {{a, c}, -1}, {{a, b}, +1}};
        for (const auto& [edge, coeff] : terms) {
            DirectedEdge de = s.directed_edge(t, edge.first, edge.second);
            m.at(de.edge_class, fc) += coeff * de.sign;
        }
    }
    return m;
}

// d1: rows = vertex classes, cols = edge classes; boundary of u->v is v - u,
// taken on the representative slot in its representative direction.
inline IntMatrix boundary1(const Skeleton& s) {
    IntMatrix m(static_cast<int>(s.vertex_count()), static_cast<int>(s.edge_count()));
    for (int ec = 0; ec < m.cols; ++ec) {
        int slot = s.edge_classes()[ec].members.front();
        int t = slot / 6, e = slot % 6;
        int u = edge_vertex_table[e][0], v = edge_vertex_table[e][1];
        m.at(s.vertex_class_of(t, v), ec) += 1;
        m.at(s.vertex_class_of(t, u), ec) -= 1;
    }
    return m;
}

// d3: rows = face classes, cols = tetrahedra. The boundary of [0123] is
// [123] - [023] + [013] - [012]; the sign at a face class member depends on
// the parity of the identification of the slot with the class representative.
inline IntMatrix boundary3(const Skeleton& s) {
    IntMatrix m(static_cast<int>(s.face_count()), s.tet_count());
    const Triangulation& tri = s.triangulation();
    for (int t = 0; t < s.tet_count(); ++t) {
        for (int f = 0; f < 4; ++f) {
            // d[0123] = [123] - [023] + [013] - [012]
            int coeff = (f == 1 || f == 3) ? 1 : -1;
            int fc = s.face_class_of(t, f);
            int rep = s.face_classes()[fc].members.front();
            int rel_sign = 1;
            if (rep != t * 4 + f) {
                // orientation of the identification with the representative
                // slot: parity of the image triple of the face's vertices
                const auto& g = *tri.gluing(t, f);
                int im[3];
                for (int i = 0; i < 3; ++i) im[i] = g.perm[face_vertex_table[f][i]];
                int inv = (im[0] > im[1]) + (im[0] > im[2]) + (im[1] > im[2]);
                rel_sign = (inv % 2 == 0) ? 1 : -1;
            }
            m.at(fc, t) += coeff * rel_sign;
        }
    }
    return m;
}

// ---- Smith normal form -------------------------------------------------------

struct SmithNormalForm {
    IntMatrix d;  // diagonal
    IntMatrix u;  // row transform, |det| = 1
    IntMatrix v;  // column transform, |det| = 1
    std::vector<Int> diagonal;

    int rank() const {
        int r = 0;
        for (const auto& x : diagonal)
            if (x != 0) ++r;
        return r;
    }
};

// Exact Smith normal form with recorded unimodular transforms, smallest-pivot
// elimination. u * input * v == d holds on return.
inline SmithNormalForm smith_normal_form(const IntMatrix& input) {
    SmithNormalForm out;
    IntMatrix& d = out.d;
    d = input;
    out.u = IntMatrix::identity(input.rows);
    out.v = IntMatrix::identity(input.cols);
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto add_row = [&](int dst, int src, const Int& f) {  // row dst += f * row src
        for (int c = 0; c < d.cols; ++c) d.at(dst, c) += f * d.at(src, c);
        for (int c = 0; c < u.cols; ++c) u.at(dst, c) += f * u.at(src, c);
    };
    auto add_col = [&](int dst, int src, const Int& f) {
        for (int r = 0; r < d.rows; ++r) d.at(r, dst) += f * d.at(r, src);
        for (int r = 0; r < v.rows; ++r) v.at(r, dst) += f * v.at(r, src);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < d.cols; ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    };

    int t = 0;
    int limit = std::min(d.rows, d.cols);
    while (t < limit) {
        // smallest nonzero entry of the trailing submatrix
        int pr = -1, pc = -1;
        for (int r = t; r < d.rows; ++r)
            for (int c = t; c < d.cols; ++c) {
                if (d.at(r, c) == 0) continue;
                if (pr < 0 || abs(d.at(r, c)) < abs(d.at(pr, pc))) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = true;
        for (int r = t + 1; r < d.rows; ++r) {
            if (d.at(r, t) == 0) continue;
            Int q = d.at(r, t) / d.at(t, t);
            add_row(r, t, -q);
            if (d.at(r, t) != 0) clean = false;
        }
        for (int c = t + 1; c < d.cols; ++c) {
            if (d.at(t, c) == 0) continue;
            Int q = d.at(t, c) / d.at(t, t);
            add_col(c, t, -q);
            if (d.at(t, c) != 0) clean = false;
        }
        if (!clean) continue;  // remainder left; pick a smaller pivot next round
        if (d.at(t, t) < 0) negate_row(t);
        ++t;
    }

    // Enforce the divisibility chain d_i | d_{i+1}.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i) {
            if (d.at(i + 1, i + 1) % d.at(i, i) == 0) continue;
            changed = true;
            add_col(i, i + 1, 1);
            // re-eliminate the 2x2 block at (i, i)
            while (d.at(i + 1, i) != 0) {
                Int q = d.at(i, i) / d.at(i + 1, i);
                add_row(i, i + 1, -q);
                if (d.at(i, i) == 0) {
                    swap_rows(i, i + 1);
                    continue;
                }
                if (d.at(i + 1, i) != 0) {
                    q = d.at(i + 1, i) / d.at(i, i);
                    add_row(i + 1, i, -q);
                }
            }
            if (d.at(i, i + 1) != 0) {
                Int q = d.at(i, i + 1) / d.at(i, i);
                add_col(i + 1, i, -q);
            }
            if (d.at(i, i) < 0) negate_row(i);
            if (d.at(i + 1, i + 1) < 0) negate_row(i + 1);
        }
    }

    for (int i = 0; i < limit; ++i) out.diagonal.push_back(d.at(i, i));
    return out;
}

inline bool verify_snf(const IntMatrix& input, const SmithNormalForm& snf) {
    IntMatrix prod = snf.u * input * snf.v;
    if (!(prod == snf.d)) return false;
    for (size_t i = 0; i + 1 < snf.diagonal.size(); ++i) {
        if (snf.diagonal[i] == 0 && snf.diagonal[i + 1] != 0) return false;
        if (snf.diagonal[i] != 0 && snf.diagonal[i + 1] != 0 &&
            snf.diagonal[i + 1] % snf.diagonal[i] != 0)
            return false;
    }
    for (int r = 0; r < snf.d.rows; ++r)
        for (int c = 0; c < snf.d.cols; ++c)
            if (r != c && snf.d.at(r, c) != 0) return false;
    return true;
}

// ---- H1 ----------------------------------------------------------------------

struct AbelianInvariants {
    long rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility chain

    bool trivial() const { return rank == 0 && torsion.empty(); }

    bool operator==(const AbelianInvariants& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
    bool operator<(const AbelianInvariants& o) const {
        if (rank != o.rank) return rank < o.rank;
        return torsion < o.torsion;
    }

    std::string str() const {
        if (trivial()) return "0";
        std::string s;
        for (long i = 0; i < rank; ++i) s += (s.empty() ? "Z" : " + Z");
        for (const auto& t : torsion) s += (s.empty() ? "Z/" : " + Z/") + t.str();
        return s;
    }
};

// H1 = ker d1 / im d2, from the 2-skeleton. rank = E - rank(d1) - rank(d2);
// torsion = invariant factors of d2 greater than 1.
inline AbelianInvariants h1(const Skeleton& s) {
    IntMatrix d1 = boundary1(s);
    IntMatrix d2 = boundary2(s);
    SmithNormalForm snf2 = smith_normal_form(d2);
    int r1 = rational_rank(d1);
    AbelianInvariants inv;
    inv.rank = s.edge_count() - r1 - snf2.rank();
    for (const auto& x : snf2.diagonal)
        if (x > 1) inv.torsion.push_back(x);
    return inv;
}

// Betti numbers over GF(2), used as a Poincare duality sanity check.
inline std::pair<long, long> mod2_betti_b1_b2(const Skeleton& s) {
    IntMatrix d1 = boundary1(s), d2 = boundary2(s), d3 = boundary3(s);
    long r1 = gf2_rank(d1), r2 = gf2_rank(d2), r3 = gf2_rank(d3);
    long b1 = s.edge_count() - r1 - r2;
    long b2 = s.face_count() - r2 - r3;
    return {b1, b2};
}

}  // namespace tricert
