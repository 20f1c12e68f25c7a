#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tricert/faces.hpp"
#include "tricert/qmatch.hpp"
#include "tricert/patterns.hpp"
#include "tricert/squares.hpp"

namespace tricert {

// Identification space of a square-tuple pattern, with pinch points
// resolved: a vertex whose link graph is disconnected counts once per
// component.
struct ResolvedComplex {
    int faces = 0;
    int edges = 0;  // letters
    int vertices_abstract = 0;
    int vertices_resolved = 0;
    int pinch_count = 0;
    bool closed = false;     // every letter covered by exactly two slots
    bool connected = false;  // through shared letters
    bool orientable = false;
    long chi = 0;  // of the resolved surface

    SurfaceSummary summary() const {
        SurfaceSummary s;
        s.euler_characteristic = chi;
        s.connected = connected;
        s.orientable = orientable;
        s.vertices = vertices_resolved;
        s.edges = edges;
        s.faces = faces;
        return s;
    }
};

inline ResolvedComplex resolve_pattern(const TuplePattern& raw) {
    TuplePattern p = detail::normalize_letters(raw);  // dense letter ids
    ResolvedComplex out;
    out.faces = p.square_count;
    int nslots = p.slots();
    int nletters = 0;
    for (int l : p.letter) nletters = std::max(nletters, l + 1);
    out.edges = nletters;

    std::vector<std::vector<int>> slots_of(nletters);
    for (int i = 0; i < nslots; ++i) slots_of[p.letter[i]].push_back(i);

    out.closed = true;
    for (const auto& v : slots_of)
        if (v.size() != 2) out.closed = false;

    // Corner c of square i sits between slots 4i+(c+3)%4 and 4i+c.
    auto corner_of_slot_start = [&](int s) { return s; };
    auto corner_of_slot_end = [&](int s) { return (s / 4) * 4 + (s % 4 + 1) % 4; };
    // tail/head corners of a slot with respect to its letter's direction
    auto tail_corner = [&](int s) {
        return p.delta[s] > 0 ? corner_of_slot_start(s) : corner_of_slot_end(s);
    };
    auto head_corner = [&](int s) {
        return p.delta[s] > 0 ? corner_of_slot_end(s) : corner_of_slot_start(s);
    };

    // abstract vertices: corners identified along the letter gluings
    detail::ParityUnionFind corner_uf(nslots);
    for (const auto& v : slots_of)
        for (size_t k = 1; k < v.size(); ++k) {
            corner_uf.merge(tail_corner(v[0]), tail_corner(v[k]), 0);
            corner_uf.merge(head_corner(v[0]), head_corner(v[k]), 0);
        }
    std::set<int> corner_roots;
    for (int c = 0; c < nslots; ++c) corner_roots.insert(corner_uf.find(c).first);
    out.vertices_abstract = static_cast<int>(corner_roots.size());

    // resolved vertices: components of the germ-end graph. Nodes are letter
    // ends (2 per letter); each corner joins the ends its two slots meet.
    detail::ParityUnionFind germ_uf(2 * nletters);
    auto end_node = [&](int slot, bool at_start_corner) {
        bool tail = (p.delta[slot] > 0) == at_start_corner;
        return 2 * p.letter[slot] + (tail ? 0 : 1);
    };
    // map each germ component to the vertex orbit it sits at
    std::vector<int> germ_vertex(2 * nletters, -1);
    for (int i = 0; i < p.square_count; ++i) {
        for (int c = 0; c < 4; ++c) {
            int s_in = 4 * i + (c + 3) % 4;  // ends at corner 4i+c
            int s_out = 4 * i + c;           // starts at corner 4i+c
            germ_uf.merge(end_node(s_in, false), end_node(s_out, true), 0);
            int orbit = corner_uf.find(4 * i + c).first;
            germ_vertex[end_node(s_in, false)] = orbit;
            germ_vertex[end_node(s_out, true)] = orbit;
        }
    }
    std::map<int, std::set<int>> components_at_vertex;
    for (int g = 0; g < 2 * nletters; ++g) {
        if (germ_vertex[g] < 0) continue;  // letter end not incident to any corner
        components_at_vertex[corner_uf.find(germ_vertex[g]).first].insert(germ_uf.find(g).first);
    }
    out.vertices_resolved = 0;
    out.pinch_count = 0;
    for (const auto& [vtx, comps] : components_at_vertex) {
        out.vertices_resolved += static_cast<int>(comps.size());
        if (comps.size() > 1) ++out.pinch_count;
    }
    out.chi = out.vertices_resolved - out.edges + out.faces;

    // connectivity and orientability across squares
    detail::ParityUnionFind face_conn(p.square_count);
    detail::ParityUnionFind face_orient(p.square_count);
    bool orientable = true;
    for (const auto& v : slots_of)
        for (size_t a = 0; a < v.size(); ++a)
            for (size_t b = a + 1; b < v.size(); ++b) {
                int sa = v[a], sb = v[b];
                face_conn.merge(sa / 4, sb / 4, 0);
                if (sa / 4 == sb / 4) {
                    if (p.delta[sa] == p.delta[sb]) orientable = false;
                } else {
                    // opposite traversal needs equal 2-cell signs
                    int rel = (p.delta[sa] == p.delta[sb]) ? 1 : 0;
                    if (!face_orient.merge(sa / 4, sb / 4, rel)) orientable = false;
                }
            }
    std::set<int> face_roots;
    for (int i = 0; i < p.square_count; ++i) face_roots.insert(face_conn.find(i).first);
    out.connected = face_roots.size() == 1;
    out.orientable = orientable;
    return out;
}

// ---- capped 2-square surfaces -------------------------------------------------

struct TwoSquarePatch {
    std::pair<int, int> square_a, square_b;  // (tet, quad_index), tets distinct
    TuplePattern pattern;                    // slot pairing with orientation bits
    ResolvedComplex resolved;
    bool has_intra_pairs = false;  // some edge of the surface lies on one square only
    int pinch_count = 0;
};

// All pairs of squares in distinct tetrahedra whose 8 boundary slots fall
// into exactly 4 edge classes with 2 slots each, no further coincidences.
// The resolved identification space is a closed surface built from the two
// squares.
inline std::vector<TwoSquarePatch> capped_two_square_surfaces(const Skeleton& s) {
    std::vector<TwistedSquare> squares = all_squares(s);
    int ns = static_cast<int>(squares.size());

    std::vector<std::vector<int>> by_class(s.edge_count());
    for (int i = 0; i < ns; ++i) {
        std::set<int> cls;
        for (const auto& slot : squares[i].boundary) cls.insert(slot.dir.edge_class);
        for (int c : cls) by_class[c].push_back(i);
    }
    std::set<std::pair<int, int>> pairs;
    for (const auto& lst : by_class)
        for (size_t x = 0; x < lst.size(); ++x)
            for (size_t y = x + 1; y < lst.size(); ++y)
                if (squares[lst[x]].tet != squares[lst[y]].tet)
                    pairs.insert({lst[x], lst[y]});

    std::vector<TwoSquarePatch> out;
    for (const auto& [a, b] : pairs) {
        std::map<int, int> class_count;
        for (const auto& slot : squares[a].boundary) ++class_count[slot.dir.edge_class];
        for (const auto& slot : squares[b].boundary) ++class_count[slot.dir.edge_class];
        if (class_count.size() != 4) continue;
        bool all_two = true;
        for (const auto& [cls, cnt] : class_count)
            if (cnt != 2) all_two = false;
        if (!all_two) continue;

        TwoSquarePatch patch;
        patch.square_a = {squares[a].tet, squares[a].quad_index};
        patch.square_b = {squares[b].tet, squares[b].quad_index};
        patch.pattern = pattern_of_squares({&squares[a], &squares[b]});
        patch.resolved = resolve_pattern(patch.pattern);
        if (!patch.resolved.connected) continue;  // two disjoint one-square spaces
        patch.pinch_count = patch.resolved.pinch_count;
        for (int l = 0; l < 4; ++l) {
            bool cross = false;
            for (int m = 0; m < 4; ++m)
                if (patch.pattern.letter[4 + m] == patch.pattern.letter[l]) cross = true;
            if (!cross) patch.has_intra_pairs = true;
        }
        out.push_back(std::move(patch));
    }
    return out;
}

// Parity test for non-separation of a closed patch: each patch tetrahedron
// splits into two sides along its square (a face sits on the side of the
// partition-pair edge it contains); face pairings are parity-0 edges and the
// two sides of a split tetrahedron are joined by a parity-1 edge. The capped
// surface is non-separating iff some cycle has odd parity. Vertex caps do
// not change crossing parity.
inline bool is_nonseparating(const Skeleton& s, const TwoSquarePatch& patch) {
    if (!patch.resolved.closed) throw std::domain_error("is_nonseparating: patch is not closed");
    int n = s.tet_count();
    std::map<int, int> quad_of_tet;
    quad_of_tet[patch.square_a.first] = patch.square_a.second;
    quad_of_tet[patch.square_b.first] = patch.square_b.second;

    // node ids: tet t -> t (side 0 / unsplit), n + t -> side 1
    auto side_of_face = [&](int t, int f) {
        auto it = quad_of_tet.find(t);
        if (it == quad_of_tet.end()) return t;
        int q = it->second;
        int w = 3 - f;
        // pair 0 of quad q contains vertex 0
        bool w_in_pair0 = (w == 0 || w == quad_partner(q, 0));
        // the face contains the pair edge it does NOT meet at w
        int side = w_in_pair0 ? 1 : 0;
        return side == 0 ? t : n + t;
    };

    detail::ParityUnionFind uf(2 * n);
    bool odd_cycle = false;
    for (const auto& t : quad_of_tet)
        if (!uf.merge(t.first, n + t.first, 1)) odd_cycle = true;
    const Triangulation& tri = s.triangulation();
    for (int t = 0; t < n && !odd_cycle; ++t)
        for (int f = 0; f < 4 && !odd_cycle; ++f) {
            const auto& g = *tri.gluing(t, f);
            int tf = Triangulation::target_face(f, g.perm);
            if (g.tet * 4 + tf < t * 4 + f) continue;  // each face class once
            if (!uf.merge(side_of_face(t, f), side_of_face(g.tet, tf), 0)) odd_cycle = true;
        }
    return odd_cycle;
}

// ---- Theorem hypotheses --------------------------------------------------------

struct HypothesisResult {
    bool pass = true;
    std::vector<std::string> witnesses;
};

struct Theorem51Report {
    std::array<HypothesisResult, 5> hypothesis;
    bool applicable = false;  // face-pair-reduced and face-generic
    bool enough_tets = false; // the conclusion needs at least 3 tetrahedra
    bool cluster_free_certified = false;
    std::string conclusion;
};

// The five hypotheses: no Klein squares; no two-square catalog match; no
// three-square catalog match; no capped 2-square surface that is a
// non-separating torus; no non-orientable capped 2-square surface.
inline Theorem51Report check_theorem51(const Skeleton& s, const PatternCatalog& catalog) {
    if (!s.orientable())
        throw NonOrientableInputError("theorem hypotheses require an orientable triangulation");
    Theorem51Report rep;

    for (const auto& sq : all_squares(s)) {
        if (sq.topological_type == SquareTopology::Klein) {
            rep.hypothesis[0].pass = false;
            rep.hypothesis[0].witnesses.push_back(
                "klein square q(" + std::to_string(sq.tet) + "," + std::to_string(sq.quad_index) +
                ") type " + std::string(1, static_cast<char>(sq.partition_type)));
        }
    }

    auto matches = match_catalog(s, catalog);
    for (const auto& m : matches) {
        const auto& e = catalog.entries()[m.entry];
        int h = e.source == "fig8" ? 1 : 2;
        std::string w = e.source + "(" + e.id + ")";
        for (const auto& [tet, quad] : m.squares)
            w += " q(" + std::to_string(tet) + "," + std::to_string(quad) + ")";
        rep.hypothesis[h].pass = false;
        rep.hypothesis[h].witnesses.push_back(w);
    }

    auto patches = capped_two_square_surfaces(s);
    for (const auto& p : patches) {
        std::string which = "squares q(" + std::to_string(p.square_a.first) + "," +
                            std::to_string(p.square_a.second) + ") q(" +
                            std::to_string(p.square_b.first) + "," +
                            std::to_string(p.square_b.second) + ")";
        if (p.resolved.orientable && p.resolved.chi == 0 && is_nonseparating(s, p)) {
            rep.hypothesis[3].pass = false;
            rep.hypothesis[3].witnesses.push_back("non-separating torus: " + which);
        }
        if (!p.resolved.orientable) {
            rep.hypothesis[4].pass = false;
            rep.hypothesis[4].witnesses.push_back(
                "non-orientable capped surface (chi " + std::to_string(p.resolved.chi) + "): " +
                which);
        }
    }

    rep.applicable = is_face_generic(s).value && is_face_pair_reduced(s).value;
    rep.enough_tets = s.tet_count() >= 3;
    bool all_pass = true;
    for (const auto& h : rep.hypothesis) all_pass = all_pass && h.pass;
    rep.cluster_free_certified = rep.applicable && rep.enough_tets && all_pass;
    if (rep.cluster_free_certified)
        rep.conclusion = "no cluster of three 2-quad type solutions";
    else if (!rep.applicable)
        rep.conclusion = "not applicable: triangulation is not face-pair-reduced and face-generic";
    else if (!rep.enough_tets)
        rep.conclusion = "not applicable: fewer than 3 tetrahedra";
    else
        rep.conclusion = "hypotheses fail; no conclusion";
    return rep;
}

}  // namespace tricert
