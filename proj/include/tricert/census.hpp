#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "tricert/skeleton.hpp"
#include "tricert/triangulation.hpp"

namespace tricert {

// Canonical relabeling of a connected triangulation: breadth-first labeling
// from every (root, root vertex labeling) choice, gluing permutations
// normalised to the identity on discovery; the lexicographically least
// encoding wins. Two triangulations are related by a relabeling iff their
// canonical encodings agree.
inline std::string canonical_encoding(const Triangulation& tri) {
    int n = tri.tet_count();
    std::string best;
    for (int root = 0; root < n; ++root) {
        for (const Perm4& rho0 : Perm4::all()) {
            std::vector<int> new_of_old(n, -1);
            std::vector<int> old_of_new;
            std::vector<Perm4> rho(n);
            new_of_old[root] = 0;
            old_of_new.push_back(root);
            rho[root] = rho0;
            std::string enc;
            bool abort = false;
            for (size_t idx = 0; idx < old_of_new.size() && !abort; ++idx) {
                int ot = old_of_new[idx];
                for (int f = 0; f < 4; ++f) {
                    int f_old = 3 - rho[ot].inverse()[3 - f];
                    const auto& g = tri.gluing(ot, f_old);
                    if (!g) {
                        enc += '-';
                        continue;
                    }
                    if (new_of_old[g->tet] < 0) {
                        new_of_old[g->tet] = static_cast<int>(old_of_new.size());
                        old_of_new.push_back(g->tet);
                        rho[g->tet] = rho[ot] * g->perm.inverse();
                    }
                    enc += static_cast<char>('A' + new_of_old[g->tet]);
                    enc += (rho[g->tet] * g->perm * rho[ot].inverse()).str();
                }
                // a strict prefix compares below its extensions, so this
                // abandons exactly the roots that can no longer win
                if (!best.empty() && enc > best) abort = true;
            }
            if (abort) continue;
            if (static_cast<int>(old_of_new.size()) != n)
                throw std::invalid_argument("canonical_encoding needs a connected triangulation");
            if (best.empty() || enc < best) best = std::move(enc);
        }
    }
    return best;
}

// The member of the relabeling class with the least encoding, rebuilt as a
// triangulation.
inline Triangulation canonical_form(const Triangulation& tri) {
    int n = tri.tet_count();
    std::string best;
    std::vector<int> best_map;
    std::vector<Perm4> best_rho;
    for (int root = 0; root < n; ++root) {
        for (const Perm4& rho0 : Perm4::all()) {
            std::vector<int> new_of_old(n, -1);
            std::vector<int> old_of_new;
            std::vector<Perm4> rho(n);
            new_of_old[root] = 0;
            old_of_new.push_back(root);
            rho[root] = rho0;
            std::string enc;
            for (size_t idx = 0; idx < old_of_new.size(); ++idx) {
                int ot = old_of_new[idx];
                for (int f = 0; f < 4; ++f) {
                    int f_old = 3 - rho[ot].inverse()[3 - f];
                    const auto& g = tri.gluing(ot, f_old);
                    if (!g) {
                        enc += '-';
                        continue;
                    }
                    if (new_of_old[g->tet] < 0) {
                        new_of_old[g->tet] = static_cast<int>(old_of_new.size());
                        old_of_new.push_back(g->tet);
                        rho[g->tet] = rho[ot] * g->perm.inverse();
                    }
                    enc += static_cast<char>('A' + new_of_old[g->tet]);
                    enc += (rho[g->tet] * g->perm * rho[ot].inverse()).str();
                }
            }
            if (static_cast<int>(old_of_new.size()) != n)
                throw std::invalid_argument("canonical_form needs a connected triangulation");
            if (best.empty() || enc < best) {
                best = enc;
                best_map = new_of_old;
                best_rho = rho;
            }
        }
    }
    return relabel(tri, best_map, best_rho);
}

struct CensusFilter {
    bool require_closed = true;       // always enforced by the enumerator
    bool require_sphere_links = false;
    bool require_orientable = false;
    int max_tets = 2;
};

// Exhaustively enumerates connected closed gluings with at most max_tets
// tetrahedra, one canonical representative per relabeling class, in
// canonical-encoding order. max_tets <= 3; the search space beyond that is
// refused.
inline std::vector<Triangulation> enumerate_census(const CensusFilter& filter) {
    if (filter.max_tets > 3)
        throw std::invalid_argument("census enumeration is limited to max_tets <= 3");
    std::vector<Triangulation> out;
    if (filter.max_tets < 1) return out;

    std::set<std::string> seen;
    std::vector<std::pair<std::string, Triangulation>> found;

    int max_tets = filter.max_tets;
    Triangulation tri(max_tets);  // tets >= introduced are untouched
    int introduced = 1;

    std::function<void()> dfs = [&]() {
        int st = -1, sf = -1;
        for (int t = 0; t < introduced && st < 0; ++t)
            for (int f = 0; f < 4; ++f)
                if (!tri.gluing(t, f)) {
                    st = t;
                    sf = f;
                    break;
                }
        if (st < 0) {
            // complete closed gluing on `introduced` tetrahedra
            Triangulation sub(introduced);
            for (int t = 0; t < introduced; ++t)
                for (int f = 0; f < 4; ++f) {
                    const auto& g = tri.gluing(t, f);
                    sub.set_gluing(t, f, g->tet, g->perm);
                }
            std::string enc = canonical_encoding(sub);
            if (seen.insert(enc).second) found.push_back({enc, canonical_form(sub)});
            return;
        }
        // glue (st, sf) to an existing unglued slot...
        for (int u = 0; u < introduced; ++u) {
            for (int g = 0; g < 4; ++g) {
                if (u == st && g == sf) continue;  // no self-identified faces
                if (tri.gluing(u, g)) continue;
                for (const Perm4& p : Perm4::all()) {
                    if (3 - p[3 - sf] != g) continue;  // must map face sf onto face g
                    tri.set_gluing(st, sf, u, p);
                    tri.set_gluing(u, g, st, p.inverse());
                    dfs();
                    tri.clear_gluing(st, sf);
                    tri.clear_gluing(u, g);
                }
            }
        }
        // ... or to face 0 of a fresh tetrahedron; one vertex map suffices up
        // to relabeling of the fresh tetrahedron.
        if (introduced < max_tets) {
            int u = introduced;
            std::array<int, 4> img{};
            for (int i = 0; i < 3; ++i) img[face_vertex_table[sf][i]] = i;
            img[3 - sf] = 3;
            Perm4 p(img);
            ++introduced;
            tri.set_gluing(st, sf, u, p);
            tri.set_gluing(u, 0, st, p.inverse());
            dfs();
            tri.clear_gluing(st, sf);
            tri.clear_gluing(u, 0);
            --introduced;
        }
    };
    dfs();

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [enc, t] : found) {
        if (filter.require_sphere_links || filter.require_orientable) {
            Skeleton s(t);
            if (filter.require_orientable && !s.orientable()) continue;
            if (filter.require_sphere_links && !all_links_spheres(s)) continue;
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace tricert
