// Exploration scratch tool (not part of the deliverable test suite).
#include <iostream>
#include <map>

#include "tricert/census.hpp"
#include "tricert/faces.hpp"
#include "tricert/homology.hpp"
#include "tricert/qmatch.hpp"
#include "tricert/squares.hpp"

using namespace tricert;

int main(int argc, char** argv) {
    int max_tets = argc > 1 ? std::atoi(argv[1]) : 2;
    CensusFilter f;
    f.max_tets = max_tets;
    auto census = enumerate_census(f);
    std::cout << "census size: " << census.size() << "\n";

    int orientable = 0, lemma41_ok = 0, haken_ok = 0, kernel_ok = 0;
    int reversed_edge_orientable = 0;
    int clusters_found = 0, rp3_clusters = 0;
    for (const auto& t : census) {
        Skeleton s(t);
        if (!s.orientable()) continue;
        ++orientable;
        if (!s.all_edges_orientation_consistent()) {
            ++reversed_edge_orientable;
            continue;
        }
        QMatchSystem sys = build_q_system(s);
        // tetrahedral solutions in kernel
        bool kernel = true;
        for (int tt = 0; tt < s.tet_count(); ++tt)
            for (int r = 0; r < sys.matrix.rows; ++r) {
                Int sum = sys.matrix.at(r, 3 * tt) + sys.matrix.at(r, 3 * tt + 1) +
                          sys.matrix.at(r, 3 * tt + 2);
                if (sum != 0) kernel = false;
            }
        if (kernel) ++kernel_ok;
        try {
            auto ones = one_quad_solutions(sys, s);
            ++lemma41_ok;
        } catch (const InternalConsistencyError& e) {
            std::cout << "LEMMA 4.1 MISMATCH: " << e.what() << "\n" << t.to_table() << "\n";
        }
        if (haken_projections_satisfy_q(s, sys)) ++haken_ok;
        else std::cout << "HAKEN MISMATCH:\n" << t.to_table() << "\n";

        auto cl = clusters_of_three(sys, s);
        if (!cl.empty()) ++clusters_found;
        if (t.tet_count() == 2 && all_links_spheres(s) && h1(s).str() == "Z/2" && !cl.empty())
            ++rp3_clusters;
    }
    std::cout << "orientable: " << orientable << " lemma41_ok: " << lemma41_ok
              << " haken_ok: " << haken_ok << " kernel_ok: " << kernel_ok << "\n";
    std::cout << "orientable with reversed edge: " << reversed_edge_orientable << "\n";
    std::cout << "members with clusters: " << clusters_found
              << " rp3 clusters: " << rp3_clusters << "\n";

    // pillow check
    {
        Triangulation pil(2);
        for (int ff = 0; ff < 4; ++ff) {
            pil.set_gluing(0, ff, 1, Perm4());
            pil.set_gluing(1, ff, 0, Perm4());
        }
        Skeleton s(pil);
        QMatchSystem sys = build_q_system(s);
        auto cl = clusters_of_three(sys, s);
        std::cout << "pillow clusters: " << cl.size() << " two-quad: "
                  << two_quad_solutions(sys).size() << "\n";
    }
    return 0;
}
