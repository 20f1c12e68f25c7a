#pragma once

#include "tricert/triangulation.hpp"

namespace tricert {

// Barycentric subdivision: each tetrahedron splits into 24 flag tetrahedra,
// indexed by the permutations of its vertices. Flag (s0,s1,s2,s3) spans the
// barycenters of vertex s0, edge s0s1, face s0s1s2 and the tetrahedron;
// vertex i of the small tetrahedron is the dimension-i barycenter. All
// induced gluings are identity maps in these coordinates.
inline Triangulation barycentric_subdivision(const Triangulation& tri) {
    const auto& perms = Perm4::all();
    auto perm_index = [&](const Perm4& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw std::logic_error("perm_index");
    };

    int n = tri.tet_count();
    Triangulation out(24 * n);
    for (int t = 0; t < n; ++t) {
        for (int pi = 0; pi < 24; ++pi) {
            const Perm4& sigma = perms[pi];
            int self = 24 * t + pi;
            // face 123 (across the vertex barycenter): swap s0, s1
            {
                Perm4 tau(sigma[1], sigma[0], sigma[2], sigma[3]);
                out.set_gluing(self, 3, 24 * t + perm_index(tau), Perm4());
            }
            // face 023 (across the edge barycenter): swap s1, s2
            {
                Perm4 tau(sigma[0], sigma[2], sigma[1], sigma[3]);
                out.set_gluing(self, 2, 24 * t + perm_index(tau), Perm4());
            }
            // face 013 (across the face barycenter): swap s2, s3
            {
                Perm4 tau(sigma[0], sigma[1], sigma[3], sigma[2]);
                out.set_gluing(self, 1, 24 * t + perm_index(tau), Perm4());
            }
            // face 012 (on the old face s0s1s2): follows the old gluing
            {
                const auto& g = tri.gluing(t, face_index_of_vertices(sigma[0], sigma[1], sigma[2]));
                if (g) {
                    Perm4 tau(g->perm[sigma[0]], g->perm[sigma[1]], g->perm[sigma[2]],
                              g->perm[sigma[3]]);
                    out.set_gluing(self, 0, 24 * g->tet + perm_index(tau), Perm4());
                }
            }
        }
    }
    out.validate();
    return out;
}

}  // namespace tricert
