#pragma once

#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tricert/patterns.hpp"
#include "tricert/surfaces.hpp"

namespace tricert {
namespace catgen {

// One square with concrete letters and traversal signs.
struct ConcreteSquare {
    std::array<int, 4> letter{};
    std::array<int, 4> delta{};
};

inline TuplePattern tuple_of(const std::vector<ConcreteSquare>& squares) {
    TuplePattern p;
    p.square_count = static_cast<int>(squares.size());
    for (const auto& sq : squares) {
        for (int l = 0; l < 4; ++l) {
            p.letter.push_back(sq.letter[l]);
            p.delta.push_back(sq.delta[l]);
        }
    }
    return p;
}

// Intra-square templates. Corner weights alternate around the boundary, so a
// letter's weight is the alternating sum over its slots (up to the square's
// global profile sign).
inline std::vector<ConcreteSquare> square_templates(char type) {
    switch (type) {
        case 'A': return {{{0, 1, 2, 3}, {1, 1, 1, 1}}};
        case 'B':  // opposite pair; annulus and Mobius variants
            return {{{0, 1, 0, 2}, {1, 1, -1, 1}}, {{0, 1, 0, 2}, {1, 1, 1, 1}}};
        case 'C':  // adjacent pair, Mobius
            return {{{0, 0, 1, 2}, {1, 1, 1, 1}}};
        case 'D':  // torus square
            return {{{0, 1, 0, 1}, {1, 1, -1, -1}}};
        case 'E':  // spiral triple
            return {{{0, 0, 0, 1}, {1, 1, 1, 1}}};
        default: throw std::invalid_argument("square_templates");
    }
}

inline std::vector<int> letter_weights(const ConcreteSquare& sq) {
    int n = 0;
    for (int l : sq.letter) n = std::max(n, l + 1);
    std::vector<int> w(n, 0);
    for (int i = 0; i < 4; ++i) w[sq.letter[i]] += (i % 2 == 0) ? 1 : -1;
    return w;
}

// All identification patterns of two squares of the given types that can
// carry a 2-quad type solution: merged letters must cancel for a single
// nonzero rational weight ratio, and every letter of nonzero weight must be
// merged. Returns canonical patterns, deduplicated.
inline std::vector<TuplePattern> enumerate_pairs(char type1, char type2) {
    std::set<TuplePattern> dedup;
    for (const auto& t1 : square_templates(type1)) {
        for (const auto& t2raw : square_templates(type2)) {
            int l1 = 0;
            for (int l : t1.letter) l1 = std::max(l1, l + 1);
            int l2 = 0;
            for (int l : t2raw.letter) l2 = std::max(l2, l + 1);
            auto w1 = letter_weights(t1);
            auto w2 = letter_weights(t2raw);

            // merge maps: per letter of square 2, either -1 (keep) or a
            // letter of square 1; injective on merged pairs
            std::vector<int> merge(l2, -1);
            std::function<void(int)> rec = [&](int pos) {
                if (pos == l2) {
                    // every nonzero-weight letter merged?
                    std::vector<bool> used(l1, false);
                    for (int j = 0; j < l2; ++j)
                        if (merge[j] >= 0) used[merge[j]] = true;
                    for (int i = 0; i < l1; ++i)
                        if (w1[i] != 0 && !used[i]) return;
                    for (int j = 0; j < l2; ++j)
                        if (w2[j] != 0 && merge[j] < 0) return;
                    // one consistent ratio over merged pairs with nonzero weights
                    std::pair<int, int> ratio{0, 0};  // w1 : w2
                    for (int j = 0; j < l2; ++j) {
                        if (merge[j] < 0) continue;
                        int a = w1[merge[j]], b = w2[j];
                        if ((a == 0) != (b == 0)) return;  // 0 + t*w != 0
                        if (a == 0) continue;
                        if (ratio.second == 0)
                            ratio = {a, b};
                        else if (ratio.first * b != ratio.second * a)
                            return;
                    }
                    // relative direction bit per merged letter
                    std::vector<int> merged;
                    for (int j = 0; j < l2; ++j)
                        if (merge[j] >= 0) merged.push_back(j);
                    for (int bits = 0; bits < (1 << merged.size()); ++bits) {
                        ConcreteSquare s2 = t2raw;
                        for (int i = 0; i < 4; ++i) {
                            int j = t2raw.letter[i];
                            if (merge[j] >= 0) {
                                s2.letter[i] = merge[j];
                                size_t k = std::find(merged.begin(), merged.end(), j) -
                                           merged.begin();
                                if (bits >> k & 1) s2.delta[i] = -s2.delta[i];
                            } else {
                                s2.letter[i] = l1 + j;
                            }
                        }
                        dedup.insert(canonicalize(tuple_of({t1, s2})));
                    }
                    return;
                }
                merge[pos] = -1;
                rec(pos + 1);
                for (int i = 0; i < l1; ++i) {
                    bool taken = false;
                    for (int j = 0; j < pos; ++j)
                        if (merge[j] == i) taken = true;
                    if (taken) continue;
                    merge[pos] = i;
                    rec(pos + 1);
                    merge[pos] = -1;
                }
            };
            rec(0);
        }
    }
    // drop patterns without any merged letter (disjoint squares)
    std::vector<TuplePattern> out;
    for (const auto& p : dedup) {
        std::set<int> sq1(p.letter.begin(), p.letter.begin() + 4);
        bool shared = false;
        for (int i = 4; i < 8; ++i)
            if (sq1.count(p.letter[i])) shared = true;
        if (shared) out.push_back(p);
    }
    return out;
}

// ---- surgery evaluation --------------------------------------------------------

struct SurgeryAnalysis {
    bool applicable = false;  // a letter of degree >= 3 exists and all others have degree 2
    int red_letter = -1;
    int red_degree = 0;
    std::vector<int> curve_wraps;     // |longitudinal degree| per curve through red
    std::vector<int> oriented_wraps;  // signed degrees w.r.t. a coherent orientation
    long chi_final = 0;
    bool nonorientable_final = false;
    bool parallel_pair = false;  // two parallel curves joined by an annulus
};

// Cuts the complex open along the max-degree letter, computes the boundary
// curves and their classes in the first homology of the edge neighbourhood,
// and caps: degree 0 with a disc, degree 2n with the one-boundary
// non-orientable surface of genus n, two degree-1 curves with an annulus.
inline SurgeryAnalysis evaluate_surgery(const TuplePattern& p, int red) {
    SurgeryAnalysis out;
    int nslots = p.slots();
    int nletters = 0;
    for (int l : p.letter) nletters = std::max(nletters, l + 1);
    std::vector<std::vector<int>> slots_of(nletters);
    for (int i = 0; i < nslots; ++i) slots_of[p.letter[i]].push_back(i);
    out.red_letter = red;
    out.red_degree = static_cast<int>(slots_of[red].size());
    if (out.red_degree < 3) return out;
    for (int l = 0; l < nletters; ++l)
        if (l != red && slots_of[l].size() != 2) return out;
    out.applicable = true;

    // graph on slot-ends: 2*slot (start corner side), 2*slot+1 (end corner side)
    auto start_node = [](int s) { return 2 * s; };
    auto end_node = [](int s) { return 2 * s + 1; };
    std::vector<int> partner(2 * nslots, -1);  // corner arcs + identification arcs
    auto link = [&](std::vector<int>& tab, int a, int b) {
        tab[a] = b;
        tab[b] = a;
    };
    for (int sq = 0; sq < p.square_count; ++sq)
        for (int c = 0; c < 4; ++c) {
            int s_in = 4 * sq + (c + 3) % 4;
            int s_out = 4 * sq + c;
            link(partner, end_node(s_in), start_node(s_out));
        }
    std::vector<int> ident(2 * nslots, -1);
    for (int l = 0; l < nletters; ++l) {
        if (l == red) continue;
        int a = slots_of[l][0], b = slots_of[l][1];
        if (p.delta[a] == p.delta[b]) {
            link(ident, start_node(a), start_node(b));
            link(ident, end_node(a), end_node(b));
        } else {
            link(ident, start_node(a), end_node(b));
            link(ident, end_node(a), start_node(b));
        }
    }

    // X cut along red: resolved vertices = components of corner+ident arcs
    {
        detail::ParityUnionFind uf(2 * nslots);
        for (int v = 0; v < 2 * nslots; ++v) {
            if (partner[v] >= 0) uf.merge(v, partner[v], 0);
            if (ident[v] >= 0) uf.merge(v, ident[v], 0);
        }
        std::set<int> comps;
        for (int v = 0; v < 2 * nslots; ++v) comps.insert(uf.find(v).first);
        long v_cut = static_cast<long>(comps.size());
        long e_cut = (nletters - 1) + out.red_degree;
        out.chi_final = v_cut - e_cut + p.square_count;
    }

    // orientability of the cut surface and coherent 2-cell signs
    bool cut_orientable = true;
    std::vector<int> cell_sign(p.square_count, 1);
    {
        detail::ParityUnionFind uf(p.square_count);
        for (int l = 0; l < nletters; ++l) {
            if (l == red) continue;
            int a = slots_of[l][0], b = slots_of[l][1];
            if (a / 4 == b / 4) {
                if (p.delta[a] == p.delta[b]) cut_orientable = false;
            } else if (!uf.merge(a / 4, b / 4, p.delta[a] == p.delta[b] ? 1 : 0)) {
                cut_orientable = false;
            }
        }
        if (cut_orientable)
            for (int i = 0; i < p.square_count; ++i) cell_sign[i] = uf.parity(i) ? -1 : 1;
    }

    // trace the boundary curves through the red slots
    std::vector<char> visited(nslots, 0);
    for (int s0 : slots_of[red]) {
        if (visited[s0]) continue;
        int wrap = 0;
        int walk_vs_induced = 0;  // constant along the curve when orientable
        int node = start_node(s0);
        // walk: body arc along a red slot, then corner/ident arcs to the
        // next red slot
        int guard = 0;
        do {
            int slot = node / 2;
            visited[slot] = 1;
            // body arc: start -> end means along traversal; +delta along red
            bool from_start = (node % 2 == 0);
            wrap += from_start ? p.delta[slot] : -p.delta[slot];
            if (cut_orientable) {
                int rel = (from_start ? 1 : -1) * cell_sign[slot / 4];
                if (walk_vs_induced == 0) walk_vs_induced = rel;
                // the induced boundary orientation is consistent on an
                // orientable cut surface
                if (walk_vs_induced != rel)
                    throw std::logic_error("inconsistent induced boundary orientation");
            }
            node = from_start ? end_node(slot) : start_node(slot);
            // cross corners and interior edges until the next red slot
            node = partner[node];
            int inner_guard = 0;
            while (ident[node] >= 0) {
                node = ident[node];
                node = partner[node];
                if (++inner_guard > 2 * nslots)
                    throw std::logic_error("surgery trace stuck between red slots");
            }
            if (++guard > 4 * nslots) throw std::logic_error("surgery trace did not close");
        } while (node != start_node(s0));
        out.curve_wraps.push_back(std::abs(wrap));
        out.oriented_wraps.push_back(cut_orientable ? walk_vs_induced * wrap : wrap);
    }
    std::sort(out.curve_wraps.begin(), out.curve_wraps.end());

    out.nonorientable_final = !cut_orientable;

    // caps: curves of wrap 0 bound discs; a single curve of wrap 2n bounds a
    // non-orientable surface of genus n in the edge neighbourhood; two
    // parallel nonzero curves cobound an annulus instead (two disjoint
    // Mobius-style surfaces cannot coexist in one solid torus), and the
    // gluing is orientation-reversing unless their induced degrees cancel.
    std::vector<int> nonzero;
    for (size_t i = 0; i < out.oriented_wraps.size(); ++i) {
        int w = out.oriented_wraps[i];
        if (w == 0)
            out.chi_final += 1;  // disc
        else
            nonzero.push_back(w);
    }
    if (nonzero.size() == 1) {
        int w = std::abs(nonzero[0]);
        if (w % 2 == 1) {
            out.applicable = false;  // a single odd curve bounds nothing in N
            return out;
        }
        out.chi_final += 1 - w / 2;
        out.nonorientable_final = true;
    } else if (nonzero.size() == 2) {
        out.parallel_pair = true;
        // annulus: chi contribution 0
        if (nonzero[0] + nonzero[1] != 0) out.nonorientable_final = true;
    } else if (!nonzero.empty()) {
        out.applicable = false;  // not a configuration this analysis covers
        return out;
    }
    return out;
}

// ---- classification -------------------------------------------------------------

enum class PatternClass { Detector, Companion, Excluded, Capped };

// Forced face identifications: corners of the two squares with equal
// directed edge germs force their supporting faces to be identified
// (face-pair-reduced); inconsistent forced gluings mean the pattern cannot
// occur in an oriented face-pair-reduced triangulation.
//
// Squares are instantiated as quad 0 of two standard tetrahedra.
inline PatternClass classify_pair_pattern(const TuplePattern& p) {
    int nletters = 0;
    for (int l : p.letter) nletters = std::max(nletters, l + 1);
    std::vector<std::vector<int>> slots_of(nletters);
    for (int i = 0; i < p.slots(); ++i) slots_of[p.letter[i]].push_back(i);
    int maxdeg = 0;
    for (const auto& v : slots_of) maxdeg = std::max(maxdeg, static_cast<int>(v.size()));

    if (maxdeg <= 2) return PatternClass::Capped;

    SurgeryAnalysis best;
    for (int l = 0; l < nletters; ++l) {
        if (static_cast<int>(slots_of[l].size()) < 3) continue;
        SurgeryAnalysis an = evaluate_surgery(p, l);
        if (an.applicable && an.nonorientable_final) return PatternClass::Detector;
        if (an.applicable) best = an;
    }

    // Non-detector: separate the companion from the patterns that are
    // impossible in an oriented face-pair-reduced triangulation with at
    // least 3 tetrahedra.
    // Forced gluings: corner c of square i lies in the tetrahedron face
    // spanned by its two boundary edges.
    struct Forced {
        int f1, f2;
        Perm4 perm;
        bool operator<(const Forced& o) const {
            if (f1 != o.f1) return f1 < o.f1;
            if (f2 != o.f2) return f2 < o.f2;
            return perm < o.perm;
        }
    };
    std::set<Forced> forced;
    // quad 0 of the standard tetrahedron: boundary vertices in traversal order
    auto corner_vertices = [&](int c, int& prev, int& mid, int& next) {
        // corner c of a square joins slot (c+3)%4 and slot c
        static constexpr int path[4] = {0, 2, 1, 3};  // vertex path of quad 0
        prev = path[(c + 3) % 4];
        mid = path[c];
        next = path[(c + 1) % 4];
    };
    bool contradiction = false;
    for (int c1 = 0; c1 < 4 && !contradiction; ++c1) {
        for (int c2 = 0; c2 < 4 && !contradiction; ++c2) {
            // germ of square 0 corner c1 vs square 1 corner c2, both
            // traversal orders
            int s1_in = (c1 + 3) % 4, s1_out = c1;
            int s2_in = 4 + (c2 + 3) % 4, s2_out = 4 + c2;
            for (int orient = 0; orient < 2; ++orient) {
                int a_in = s2_in, a_out = s2_out;
                int sgn = 1;
                if (orient) {
                    std::swap(a_in, a_out);
                    sgn = -1;
                }
                if (p.letter[s1_in] != p.letter[a_in] || p.letter[s1_out] != p.letter[a_out])
                    continue;
                if (p.delta[s1_in] != sgn * p.delta[a_in] ||
                    p.delta[s1_out] != sgn * p.delta[a_out])
                    continue;
                // matched: faces must be identified, mapping the corner path
                int u1, v1, w1, u2, v2, w2;
                corner_vertices(c1, u1, v1, w1);
                corner_vertices(c2, u2, v2, w2);
                if (orient) std::swap(u2, w2);
                std::array<int, 4> img{-1, -1, -1, -1};
                img[u1] = u2;
                img[v1] = v2;
                img[w1] = w2;
                int miss_src = 0 + 1 + 2 + 3 - u1 - v1 - w1;
                img[miss_src] = 0 + 1 + 2 + 3 - u2 - v2 - w2;
                Perm4 perm(img);
                int f1 = face_index_of_vertices(u1, v1, w1);
                int f2 = face_index_of_vertices(u2, v2, w2);
                forced.insert({f1, f2, perm});
            }
        }
    }
    // a face forced to glue in two different ways is impossible
    std::map<int, std::pair<int, Perm4>> by_face, by_target;
    int parity = 0;  // required sign of eps1*eps2, via -sgn(perm)
    for (const auto& f : forced) {
        auto it = by_face.find(f.f1);
        if (it != by_face.end() &&
            (it->second.first != f.f2 || !(it->second.second == f.perm))) {
            contradiction = true;
            break;
        }
        auto jt = by_target.find(f.f2);
        if (jt != by_target.end() &&
            (jt->second.first != f.f1 || !(jt->second.second == f.perm))) {
            contradiction = true;
            break;
        }
        by_face[f.f1] = {f.f2, f.perm};
        by_target[f.f2] = {f.f1, f.perm};
        int need = -f.perm.sign();
        if (parity == 0)
            parity = need;
        else if (parity != need)
            contradiction = true;
    }
    if (contradiction) return PatternClass::Excluded;
    // forced gluings covering all four faces of both tetrahedra would close
    // the triangulation with two tetrahedra
    if (by_face.size() == 4) return PatternClass::Excluded;
    return PatternClass::Companion;
}

// ---- companion instantiation and the three-square patterns ---------------------

// All partner squares Q' such that (q, Q') realizes the given 2-square
// pattern. Companion patterns merge every letter, so the partner uses only
// q's letters.
inline std::vector<ConcreteSquare> companion_partners(const TuplePattern& pattern,
                                                      const ConcreteSquare& q) {
    std::vector<ConcreteSquare> out;
    std::set<std::pair<std::array<int, 4>, std::array<int, 4>>> seen;
    for (int swap = 0; swap < 2; ++swap) {
        for (int d0 = 0; d0 < 8; ++d0) {
            for (int d1 = 0; d1 < 8; ++d1) {
                // transformed pattern: square `swap` becomes slots 0..3
                auto src_slot = [&](int sq, int l) {
                    int d = sq == 0 ? d0 : d1;
                    int rot = d % 4;
                    bool mirror = d >= 4;
                    int within = mirror ? ((rot - l) % 4 + 4) % 4 : (l + rot) % 4;
                    int which = (sq == 0) == (swap == 0) ? 0 : 1;
                    return 4 * which + within;
                };
                auto delta_at = [&](int sq, int l) {
                    int d = sq == 0 ? d0 : d1;
                    return (d >= 4 ? -1 : 1) * pattern.delta[src_slot(sq, l)];
                };
                std::map<int, int> letter_map;  // pattern letter -> q letter
                std::map<int, int> flip;        // pattern letter -> +-1
                std::set<int> used;
                bool ok = true;
                for (int l = 0; l < 4 && ok; ++l) {
                    int pl = pattern.letter[src_slot(0, l)];
                    int ql = q.letter[l];
                    auto it = letter_map.find(pl);
                    if (it == letter_map.end()) {
                        if (used.count(ql)) {
                            ok = false;
                            break;
                        }
                        letter_map[pl] = ql;
                        used.insert(ql);
                        flip[pl] = delta_at(0, l) * q.delta[l];
                    } else {
                        if (it->second != ql) ok = false;
                        if (ok && flip[pl] != delta_at(0, l) * q.delta[l]) ok = false;
                    }
                }
                if (!ok) continue;
                ConcreteSquare partner;
                for (int l = 0; l < 4 && ok; ++l) {
                    int pl = pattern.letter[src_slot(1, l)];
                    auto it = letter_map.find(pl);
                    if (it == letter_map.end()) {
                        ok = false;  // not a fully merged (companion) pattern
                        break;
                    }
                    partner.letter[l] = it->second;
                    partner.delta[l] = delta_at(1, l) * flip[pl];
                }
                if (!ok) continue;
                if (seen.insert({partner.letter, partner.delta}).second) out.push_back(partner);
            }
        }
    }
    return out;
}

struct GeneratedCatalog {
    std::vector<std::pair<TuplePattern, std::vector<std::string>>> fig8;  // pattern, tags
    std::vector<std::pair<TuplePattern, std::vector<std::string>>> fig9;
    TuplePattern companion_aa, companion_bb, companion_cc, companion_cd;
};

// The concrete model tetrahedra used to assemble the three-square patterns.
// Edge letters and traversal signs realise the ABE, AAC and AAA patterns; the
// spiral directions are forced by the absence of cone faces.
inline std::array<ConcreteSquare, 3> model_abe() {
    return {ConcreteSquare{{0, 0, 0, 1}, {1, 1, 1, -1}},
            ConcreteSquare{{2, 0, 3, 1}, {1, -1, 1, -1}},
            ConcreteSquare{{2, 0, 3, 0}, {1, 1, -1, -1}}};
}
inline std::array<ConcreteSquare, 3> model_aac() {
    return {ConcreteSquare{{0, 0, 1, 2}, {1, 1, 1, -1}},
            ConcreteSquare{{3, 0, 4, 2}, {1, -1, 1, -1}},
            ConcreteSquare{{3, 1, 4, 0}, {1, 1, -1, -1}}};
}
inline std::array<ConcreteSquare, 3> model_aaa() {
    return {ConcreteSquare{{1, 3, 4, 2}, {1, -1, 1, -1}},
            ConcreteSquare{{0, 3, 5, 2}, {1, 1, 1, -1}},
            ConcreteSquare{{0, 4, 5, 1}, {1, 1, -1, -1}}};
}

// A pattern is a pinched or surgered projective plane when the resolution
// (all edges of degree 2) or the surgery at the maximal-degree edge yields a
// closed non-orientable surface of Euler characteristic 1.
inline bool is_projective_plane_complex(const TuplePattern& p) {
    int nletters = 0;
    for (int l : p.letter) nletters = std::max(nletters, l + 1);
    std::vector<int> deg(nletters, 0);
    for (int l : p.letter) ++deg[l];
    int maxdeg = 0;
    for (int d : deg) maxdeg = std::max(maxdeg, d);
    for (int d : deg)
        if (d != 2 && d != maxdeg) return false;
    if (maxdeg == 2) {
        ResolvedComplex rc = resolve_pattern(p);
        return rc.closed && rc.connected && !rc.orientable && rc.chi == 1;
    }
    for (int l = 0; l < nletters; ++l) {
        if (deg[l] < 3) continue;
        SurgeryAnalysis an = evaluate_surgery(p, l);
        if (an.applicable && an.nonorientable_final && an.chi_final == 1) return true;
    }
    return false;
}

// Assembles the full catalog: the 13 two-square patterns classified as
// detectors, with tags from their surgery profiles, plus the three
// projective-plane triples built from the companion identifications.
inline GeneratedCatalog generate_catalog() {
    GeneratedCatalog out;

    // companions
    for (const auto& p : enumerate_pairs('A', 'A')) {
        ResolvedComplex rc = resolve_pattern(p);
        if (rc.closed && rc.connected && rc.orientable && rc.chi == 0) out.companion_aa = p;
    }
    auto pick_companion = [&](char t1, char t2) {
        for (const auto& p : enumerate_pairs(t1, t2))
            if (classify_pair_pattern(p) == PatternClass::Companion) return p;
        throw std::logic_error("companion not found");
    };
    out.companion_bb = pick_companion('B', 'B');
    out.companion_cc = pick_companion('C', 'C');
    out.companion_cd = pick_companion('C', 'D');

    // fig8: detectors with tags from genus and curve structure
    struct Entry {
        TuplePattern p;
        std::vector<std::string> tags;
        int genus;
        bool parallel;
        int maxwrap;
    };
    auto family_entries = [&](char t1, char t2) {
        std::vector<Entry> list;
        for (const auto& p : enumerate_pairs(t1, t2)) {
            if (classify_pair_pattern(p) != PatternClass::Detector) continue;
            int nletters = 0;
            for (int l : p.letter) nletters = std::max(nletters, l + 1);
            std::vector<int> deg(nletters, 0);
            for (int l : p.letter) ++deg[l];
            for (int l = 0; l < nletters; ++l) {
                if (deg[l] < 3) continue;
                SurgeryAnalysis an = evaluate_surgery(p, l);
                if (!an.applicable || !an.nonorientable_final) continue;
                Entry e;
                e.p = p;
                e.genus = static_cast<int>(2 - an.chi_final);
                e.parallel = an.parallel_pair;
                e.maxwrap = an.curve_wraps.empty() ? 0 : an.curve_wraps.back();
                if (e.genus == 1) e.tags = {"P", "LENS(2)"};
                if (e.genus == 2) e.tags = {"P2"};
                if (e.genus == 3) e.tags = {"P3"};
                if (e.parallel) e.tags.push_back("KLEIN");
                list.push_back(std::move(e));
                break;
            }
        }
        return list;
    };

    auto cc = family_entries('C', 'C');
    auto ce = family_entries('C', 'E');
    auto bb = family_entries('B', 'B');
    auto ee = family_entries('E', 'E');
    if (cc.size() != 4 || ce.size() != 2 || bb.size() != 6 || ee.size() != 1)
        throw std::logic_error("unexpected detector counts");

    // family-specific extra tags
    for (auto& e : cc)
        if (e.genus == 2 && !e.parallel) e.tags.push_back("LENS(4)");
    for (auto& e : ee) e.tags.push_back("LENS(6)");

    auto by_rank = [](std::vector<Entry>& v) {
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
            if (a.genus != b.genus) return a.genus > b.genus;
            if (a.parallel != b.parallel) return a.parallel < b.parallel;
            return pattern_signature(a.p) < pattern_signature(b.p);
        });
    };
    by_rank(cc);
    by_rank(ce);
    by_rank(bb);

    // caption order: a P3, b P2+L4, c P+L2, d P2 parallel (C,C); e P3, f P2
    // (C,E); g/j/k P+L2, h P3, i P2 parallel, l P2 (B,B); m P3+L6 (E,E)
    auto find_cc = [&](int genus, bool parallel) -> Entry& {
        for (auto& e : cc)
            if (e.genus == genus && e.parallel == parallel) return e;
        throw std::logic_error("missing CC entry");
    };
    out.fig8.push_back({find_cc(3, false).p, find_cc(3, false).tags});
    out.fig8.push_back({find_cc(2, false).p, find_cc(2, false).tags});
    out.fig8.push_back({find_cc(1, false).p, find_cc(1, false).tags});
    out.fig8.push_back({find_cc(2, true).p, find_cc(2, true).tags});
    out.fig8.push_back({ce[0].p, ce[0].tags});  // P3
    out.fig8.push_back({ce[1].p, ce[1].tags});  // P2
    // B,B in caption order g..l: P, P3, P2-parallel, P, P, P2
    std::vector<Entry*> bb_p, bb_p2, bb_p3;
    for (auto& e : bb) (e.genus == 1 ? bb_p : e.genus == 2 ? bb_p2 : bb_p3).push_back(&e);
    if (bb_p.size() != 3 || bb_p2.size() != 2 || bb_p3.size() != 1)
        throw std::logic_error("unexpected BB genus profile");
    Entry* bb_i = bb_p2[0]->parallel ? bb_p2[0] : bb_p2[1];
    Entry* bb_l = bb_p2[0]->parallel ? bb_p2[1] : bb_p2[0];
    out.fig8.push_back({bb_p[0]->p, bb_p[0]->tags});      // g
    out.fig8.push_back({bb_p3[0]->p, bb_p3[0]->tags});    // h
    out.fig8.push_back({bb_i->p, bb_i->tags});            // i
    out.fig8.push_back({bb_p[1]->p, bb_p[1]->tags});      // j
    out.fig8.push_back({bb_p[2]->p, bb_p[2]->tags});      // k
    out.fig8.push_back({bb_l->p, bb_l->tags});            // l
    out.fig8.push_back({ee[0].p, ee[0].tags});            // m

    // fig9 triples from the companion identifications
    auto compose = [&](const std::vector<std::pair<const TuplePattern*, ConcreteSquare>>& plan,
                       const std::vector<ConcreteSquare>& own) {
        std::set<TuplePattern> results;
        std::vector<std::vector<ConcreteSquare>> choices;
        for (const auto& [pat, q] : plan) choices.push_back(companion_partners(*pat, q));
        std::vector<size_t> idx(choices.size(), 0);
        while (true) {
            std::vector<ConcreteSquare> squares = own;
            for (size_t i = 0; i < choices.size(); ++i) squares.push_back(choices[i][idx[i]]);
            TuplePattern trip = canonicalize(tuple_of(squares));
            if (is_projective_plane_complex(trip)) results.insert(trip);
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
        if (results.size() != 1)
            throw std::logic_error("three-square pattern is not unique: " +
                                   std::to_string(results.size()));
        return *results.begin();
    };

    auto abe = model_abe();
    out.fig9.push_back({compose({{&out.companion_aa, abe[1]}, {&out.companion_bb, abe[2]}},
                                {abe[0]}),
                        {"PROJECTIVE_PLANE"}});
    auto aac = model_aac();
    out.fig9.push_back({compose({{&out.companion_cc, aac[0]},
                                 {&out.companion_aa, aac[1]},
                                 {&out.companion_aa, aac[2]}},
                                {}),
                        {"PROJECTIVE_PLANE"}});
    auto aaa = model_aaa();
    out.fig9.push_back({compose({{&out.companion_aa, aaa[0]},
                                 {&out.companion_aa, aaa[1]},
                                 {&out.companion_aa, aaa[2]}},
                                {}),
                        {"PROJECTIVE_PLANE"}});
    return out;
}

inline PatternCatalog build_generated_catalog() {
    GeneratedCatalog g = generate_catalog();
    PatternCatalog cat;
    const char* ids8 = "abcdefghijklm";
    for (size_t i = 0; i < g.fig8.size(); ++i) {
        CatalogEntry e;
        e.source = "fig8";
        e.id = std::string(1, ids8[i]);
        e.pattern = g.fig8[i].first;
        e.tags = g.fig8[i].second;
        cat.add(std::move(e));
    }
    const char* ids9 = "abc";
    for (size_t i = 0; i < g.fig9.size(); ++i) {
        CatalogEntry e;
        e.source = "fig9";
        e.id = std::string(1, ids9[i]);
        e.pattern = g.fig9[i].first;
        e.tags = g.fig9[i].second;
        cat.add(std::move(e));
    }
    return cat;
}

}  // namespace catgen
}  // namespace tricert
