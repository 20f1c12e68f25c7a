#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "helpers.hpp"
#include "tricert/census.hpp"
#include "tricert/faces.hpp"
#include "tricert/homology.hpp"
#include "tricert/squares.hpp"
#include "tricert/subdivide.hpp"

using namespace tricert;

TEST_CASE("canonical form is idempotent and relabeling-invariant") {
    Triangulation t = testutil::golden_s3();
    Triangulation c = canonical_form(t);
    REQUIRE(canonical_encoding(t) == canonical_encoding(c));
    REQUIRE(canonical_form(c) == c);

    std::vector<int> tet_map{2, 3, 1, 0};
    std::vector<Perm4> vmaps{Perm4(1, 2, 3, 0), Perm4(3, 1, 0, 2), Perm4(), Perm4(0, 3, 2, 1)};
    Triangulation r = relabel(t, tet_map, vmaps);
    REQUIRE(canonical_encoding(r) == canonical_encoding(t));
    REQUIRE(canonical_form(r) == c);
}

TEST_CASE("zero tetrahedra gives an empty stream; too many are refused") {
    CensusFilter f;
    f.max_tets = 0;
    REQUIRE(enumerate_census(f).empty());
    f.max_tets = 4;
    REQUIRE_THROWS_AS(enumerate_census(f), std::invalid_argument);
}

TEST_CASE("census members are canonical, closed and duplicate-free") {
    CensusFilter f;
    f.max_tets = 2;
    auto census = enumerate_census(f);
    REQUIRE(census.size() == 184);
    std::set<std::string> encodings;
    for (const auto& t : census) {
        REQUIRE(t.closed());
        t.validate();
        REQUIRE(canonical_form(t) == t);
        REQUIRE(encodings.insert(canonical_encoding(t)).second);
        // serialize-reparse round trip preserves the canonical form
        Triangulation back = parse_table(t.to_table());
        REQUIRE(back == t);
    }
}

TEST_CASE("sphere-link and orientability filters") {
    CensusFilter f;
    f.max_tets = 2;
    f.require_sphere_links = true;
    auto manifolds = enumerate_census(f);
    for (const auto& t : manifolds) REQUIRE(all_links_spheres(Skeleton(t)));
    f.require_orientable = true;
    auto orient = enumerate_census(f);
    REQUIRE(orient.size() <= manifolds.size());
    for (const auto& t : orient) REQUIRE(Skeleton(t).orientable());
}

TEST_CASE("the one-vertex one-tetrahedron sphere appears in the census") {
    CensusFilter f;
    f.max_tets = 1;
    f.require_sphere_links = true;
    f.require_orientable = true;
    bool found = false;
    for (const auto& t : enumerate_census(f)) {
        Skeleton s(t);
        if (s.vertex_count() == 1 && h1(s).trivial()) {
            REQUIRE(s.edge_count() == 2);
            found = true;
        }
    }
    REQUIRE(found);
}

TEST_CASE("some one-tetrahedron closed gluing fails the sphere-link test") {
    CensusFilter f;
    f.max_tets = 1;
    bool saw_bad_link = false;
    for (const auto& t : enumerate_census(f)) {
        Skeleton s(t);
        for (const auto& l : vertex_links(s))
            if (l.euler_characteristic != 2) saw_bad_link = true;
    }
    REQUIRE(saw_bad_link);
}

TEST_CASE("H1 values over the small census include the expected groups") {
    CensusFilter f;
    f.max_tets = 2;
    f.require_sphere_links = true;
    f.require_orientable = true;
    std::set<std::string> groups;
    for (const auto& t : enumerate_census(f)) {
        Skeleton s(t);
        if (!s.all_edges_orientation_consistent()) continue;
        groups.insert(h1(s).str());
    }
    for (const char* g :
         {"0", "Z/2", "Z/3", "Z/4", "Z/5", "Z/7", "Z/8", "Z/2 + Z/2"})
        REQUIRE(groups.count(g) == 1);
}

TEST_CASE("remark 5.2: the two minimal projective-space triangulations") {
    CensusFilter f;
    f.max_tets = 2;
    f.require_sphere_links = true;
    std::vector<Triangulation> rp3;
    for (const auto& t : enumerate_census(f)) {
        if (t.tet_count() != 2) continue;
        Skeleton s(t);
        if (!s.orientable()) continue;
        if (h1(s).str() == "Z/2") rp3.push_back(t);
    }
    REQUIRE(rp3.size() == 2);
    int generic_not_reduced = 0, not_generic = 0;
    for (const auto& t : rp3) {
        Skeleton s(t);
        bool fg = is_face_generic(s).value;
        bool fpr = is_face_pair_reduced(s).value;
        if (fg && !fpr) ++generic_not_reduced;
        if (!fg) ++not_generic;
    }
    REQUIRE(generic_not_reduced == 1);
    REQUIRE(not_generic == 1);
}

TEST_CASE("face-generic census members have tetra labels from the classification") {
    CensusFilter f;
    f.max_tets = 2;
    int generic_members = 0;
    for (const auto& t : enumerate_census(f)) {
        Skeleton s(t);
        if (!is_face_generic(s).value) continue;
        ++generic_members;
        for (int tet = 0; tet < s.tet_count(); ++tet) {
            TetraType tt = tetra_type(s, tet);
            REQUIRE(tt.in_generic_list);
            // no square of type G in a face-generic triangulation
            for (const auto& sq : squares_of(s, tet))
                REQUIRE(sq.partition_type != PartitionType::G);
        }
    }
    REQUIRE(generic_members > 0);
}

TEST_CASE("barycentric subdivision preserves the topology") {
    for (const Triangulation& t : {testutil::golden_s3(), testutil::pillow()}) {
        Triangulation sub = barycentric_subdivision(t);
        REQUIRE(sub.tet_count() == 24 * t.tet_count());
        Skeleton s0(t), s(sub);
        REQUIRE(s.euler_characteristic() == 0);
        REQUIRE(s.orientable() == s0.orientable());
        REQUIRE(all_links_spheres(s) == all_links_spheres(s0));
        REQUIRE(h1(s) == h1(s0));
    }
}

TEST_CASE("barycentric subdivisions of small census manifolds keep H1") {
    CensusFilter f;
    f.max_tets = 2;
    f.require_sphere_links = true;
    f.require_orientable = true;
    int checked = 0;
    for (const auto& t : enumerate_census(f)) {
        if (checked >= 4) break;  // keep the suite fast
        ++checked;
        Triangulation sub = barycentric_subdivision(t);
        Skeleton s0(t), s(sub);
        REQUIRE(h1(s) == h1(s0));
        REQUIRE(is_face_generic(s).value);  // all faces of a subdivision are triangles
    }
    REQUIRE(checked == 4);
}
