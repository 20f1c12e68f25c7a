#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tricert/skeleton.hpp"

namespace tricert {

enum class FaceKind { Triangle, Cone, Mobius, ThreeFold, Dunce };

inline const char* face_kind_name(FaceKind k) {
    switch (k) {
        case FaceKind::Triangle: return "triangle";
        case FaceKind::Cone: return "cone";
        case FaceKind::Mobius: return "mobius";
        case FaceKind::ThreeFold: return "threefold";
        case FaceKind::Dunce: return "dunce";
    }
    return "?";
}

struct FaceType {
    FaceKind kind = FaceKind::Triangle;
    // For Mobius faces: the doubled edge class and the remaining edge class.
    int core_edge = -1;
    int boundary_edge = -1;
};

// Classification of one face class by the edge identifications of its
// representative slot (vertex identifications are ignored).
inline FaceType classify_face(const Skeleton& s, int face_class) {
    const auto& fc = s.face_classes()[face_class];
    int slot = fc.members.front();
    int t = slot / 4, f = slot % 4;
    int a = face_vertex_table[f][0], b = face_vertex_table[f][1], c = face_vertex_table[f][2];

    DirectedEdge dab = s.directed_edge(t, a, b);
    DirectedEdge dac = s.directed_edge(t, a, c);
    DirectedEdge dbc = s.directed_edge(t, b, c);

    FaceType out;
    if (dab.edge_class != dac.edge_class && dab.edge_class != dbc.edge_class &&
        dac.edge_class != dbc.edge_class) {
        out.kind = FaceKind::Triangle;
        return out;
    }
    if (dab.edge_class == dac.edge_class && dab.edge_class == dbc.edge_class) {
        // All three edges identified. Head-to-tail cycle a->b ~ b->c ~ c->a
        // gives a 3-fold; any other orientation pattern gives a dunce hat.
        int s1 = dab.sign, s2 = dbc.sign, s3 = -dac.sign;
        out.kind = (s1 == s2 && s2 == s3) ? FaceKind::ThreeFold : FaceKind::Dunce;
        return out;
    }
    // Exactly one pair identified; the pair shares a vertex. With shared
    // vertex s and far endpoints p, q: identifying s->p with s->q folds the
    // triangle to a cone with tip s, the reverse identification gives a
    // Mobius band whose boundary is the third edge.
    int sp_sign, sq_sign, core, boundary;
    if (dab.edge_class == dac.edge_class) {
        sp_sign = dab.sign;  // a->b
        sq_sign = dac.sign;  // a->c
        core = dab.edge_class;
        boundary = dbc.edge_class;
    } else if (dab.edge_class == dbc.edge_class) {
        sp_sign = -dab.sign;  // b->a
        sq_sign = dbc.sign;   // b->c
        core = dab.edge_class;
        boundary = dac.edge_class;
    } else {
        sp_sign = -dac.sign;  // c->a
        sq_sign = -dbc.sign;  // c->b
        core = dac.edge_class;
        boundary = dab.edge_class;
    }
    if (sp_sign == sq_sign) {
        out.kind = FaceKind::Cone;
        out.core_edge = core;
        out.boundary_edge = boundary;
    } else {
        out.kind = FaceKind::Mobius;
        out.core_edge = core;
        out.boundary_edge = boundary;
    }
    return out;
}

inline std::vector<FaceType> classify_all_faces(const Skeleton& s) {
    std::vector<FaceType> out;
    out.reserve(s.face_classes().size());
    for (size_t i = 0; i < s.face_classes().size(); ++i)
        out.push_back(classify_face(s, static_cast<int>(i)));
    return out;
}

struct Witness {
    std::string kind;
    std::vector<int> faces;
    std::vector<int> tets;
    std::string detail;
};

struct PredicateReport {
    bool value = true;
    std::vector<Witness> witnesses;
};

// A triangulation is face-generic when every face is a triangle or a Mobius
// band and no tetrahedron has more than two Mobius faces.
inline PredicateReport is_face_generic(const Skeleton& s) {
    PredicateReport rep;
    auto kinds = classify_all_faces(s);
    for (size_t i = 0; i < kinds.size(); ++i) {
        if (kinds[i].kind != FaceKind::Triangle && kinds[i].kind != FaceKind::Mobius) {
            rep.value = false;
            rep.witnesses.push_back({"bad-face-kind",
                                     {static_cast<int>(i)},
                                     {},
                                     std::string(face_kind_name(kinds[i].kind))});
        }
    }
    for (int t = 0; t < s.tet_count(); ++t) {
        int mobius = 0;
        for (int f = 0; f < 4; ++f)
            if (kinds[s.face_class_of(t, f)].kind == FaceKind::Mobius) ++mobius;
        if (mobius > 2) {
            rep.value = false;
            rep.witnesses.push_back({"too-many-mobius-faces",
                                     {},
                                     {t},
                                     std::to_string(mobius) + " mobius faces"});
        }
    }
    return rep;
}

namespace detail {

// The six vertex orderings of a face's representative triangle together with
// the two consecutive directed edges they induce.
struct CornerGerm {
    DirectedEdge first, second;  // A->B, B->C
    std::array<int, 3> order;    // vertices (A, B, C) of the representative slot
};

inline std::vector<CornerGerm> corner_germs(const Skeleton& s, int face_class) {
    const auto& fc = s.face_classes()[face_class];
    int slot = fc.members.front();
    int t = slot / 4, f = slot % 4;
    const int* fv = face_vertex_table[f];
    std::vector<CornerGerm> out;
    int idx[3] = {0, 1, 2};
    std::sort(idx, idx + 3);
    do {
        int A = fv[idx[0]], B = fv[idx[1]], C = fv[idx[2]];
        out.push_back({s.directed_edge(t, A, B), s.directed_edge(t, B, C), {A, B, C}});
    } while (std::next_permutation(idx, idx + 3));
    return out;
}

}  // namespace detail

// Def.: every 2-triangle disc mapped with distinct image faces must send both
// interior edges to one edge, with both images Mobius faces having distinct
// boundary edges. Enumerates all <= 36 configurations per ordered face pair.
// Cone and dunce faces rule the property out directly; the disc enumeration
// alone can miss them when the two forced faces coincide in M (the 2-vertex
// one-tetrahedron 3-sphere is such a case).
inline PredicateReport is_face_pair_reduced(const Skeleton& s) {
    PredicateReport rep;
    auto kinds = classify_all_faces(s);
    for (size_t i = 0; i < kinds.size(); ++i) {
        if (kinds[i].kind == FaceKind::Cone || kinds[i].kind == FaceKind::Dunce) {
            rep.value = false;
            rep.witnesses.push_back({"reducing-face-kind",
                                     {static_cast<int>(i)},
                                     {},
                                     std::string(face_kind_name(kinds[i].kind))});
        }
    }
    size_t nf = s.face_classes().size();
    std::vector<std::vector<detail::CornerGerm>> germs(nf);
    for (size_t i = 0; i < nf; ++i) germs[i] = detail::corner_germs(s, static_cast<int>(i));

    for (size_t f1 = 0; f1 < nf; ++f1) {
        for (size_t f2 = f1 + 1; f2 < nf; ++f2) {
            for (const auto& g1 : germs[f1]) {
                for (const auto& g2 : germs[f2]) {
                    if (g1.first != g2.first || g1.second != g2.second) continue;
                    // A disc map exists with interior edges g1.first, g1.second.
                    bool ok = g1.first.edge_class == g1.second.edge_class &&
                              kinds[f1].kind == FaceKind::Mobius &&
                              kinds[f2].kind == FaceKind::Mobius &&
                              kinds[f1].boundary_edge != kinds[f2].boundary_edge;
                    if (!ok) {
                        rep.value = false;
                        std::string det = "corner (" + std::to_string(g1.order[0]) + "," +
                                          std::to_string(g1.order[1]) + "," +
                                          std::to_string(g1.order[2]) + ")/(" +
                                          std::to_string(g2.order[0]) + "," +
                                          std::to_string(g2.order[1]) + "," +
                                          std::to_string(g2.order[2]) + ") edges " +
                                          std::to_string(g1.first.edge_class) + "," +
                                          std::to_string(g1.second.edge_class);
                        rep.witnesses.push_back({"face-pair",
                                                 {static_cast<int>(f1), static_cast<int>(f2)},
                                                 {},
                                                 det});
                    }
                }
            }
        }
    }
    return rep;
}

enum class SmallManifoldFlag { L3, L4_or_L5, SimplifiableOrSmall };

inline const char* small_flag_name(SmallManifoldFlag f) {
    switch (f) {
        case SmallManifoldFlag::L3: return "L3";
        case SmallManifoldFlag::L4_or_L5: return "L4_OR_L5";
        case SmallManifoldFlag::SimplifiableOrSmall: return "SIMPLIFIABLE_OR_SMALL";
    }
    return "?";
}

// Small-manifold flags from the face classification: a 3-fold face pins the
// manifold to L(3); a tetrahedron with three or more Mobius faces gives L(4)
// or L(5); cone or dunce faces mean the triangulation simplifies or the
// manifold is one of S^3, RP^3, L(3).
inline std::vector<SmallManifoldFlag> small_manifold_flags(const Skeleton& s) {
    std::vector<SmallManifoldFlag> flags;
    auto kinds = classify_all_faces(s);
    bool threefold = false, conedunce = false;
    for (const auto& k : kinds) {
        if (k.kind == FaceKind::ThreeFold) threefold = true;
        if (k.kind == FaceKind::Cone || k.kind == FaceKind::Dunce) conedunce = true;
    }
    bool many_mobius = false;
    for (int t = 0; t < s.tet_count(); ++t) {
        int mobius = 0;
        for (int f = 0; f < 4; ++f)
            if (kinds[s.face_class_of(t, f)].kind == FaceKind::Mobius) ++mobius;
        if (mobius >= 3) many_mobius = true;
    }
    if (threefold) flags.push_back(SmallManifoldFlag::L3);
    if (many_mobius) flags.push_back(SmallManifoldFlag::L4_or_L5);
    if (conedunce) flags.push_back(SmallManifoldFlag::SimplifiableOrSmall);
    return flags;
}

// In a face-generic, face-pair-reduced triangulation every face is uniquely
// determined by an ordered pair of consecutive distinct oriented boundary
// edges. Returns false if two faces share such a pair.
inline bool unique_corner_characterisation(const Skeleton& s) {
    std::map<std::array<int, 4>, int> seen;
    for (size_t fcls = 0; fcls < s.face_classes().size(); ++fcls) {
        for (const auto& g : detail::corner_germs(s, static_cast<int>(fcls))) {
            if (g.first.edge_class == g.second.edge_class) continue;
            std::array<int, 4> key{g.first.edge_class, g.first.sign, g.second.edge_class,
                                   g.second.sign};
            auto [it, inserted] = seen.insert({key, static_cast<int>(fcls)});
            if (!inserted && it->second != static_cast<int>(fcls)) return false;
        }
    }
    return true;
}

}  // namespace tricert
