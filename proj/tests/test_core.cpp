#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tricert/skeleton.hpp"
#include "tricert/triangulation.hpp"

using namespace tricert;

TEST_CASE("table parsing and round trip") {
    Triangulation t = testutil::golden_s3();
    REQUIRE(t.tet_count() == 4);
    REQUIRE(t.closed());

    Triangulation again = parse_table(t.to_table());
    REQUIRE(t == again);

    Triangulation from_json = parse_json(t.to_json().dump());
    REQUIRE(t == from_json);
}

TEST_CASE("parse errors") {
    REQUIRE_THROWS_AS(parse_table(""), ParseError);
    REQUIRE_THROWS_AS(parse_table("# only a comment\n"), ParseError);
    REQUIRE_THROWS_AS(parse_table("0: 1 (012) - - -\n"), ParseError);  // target out of range
    REQUIRE_THROWS_AS(parse_table("0: 0 (012) - - -\n"), ValidationError);  // identity self-gluing

    // involution violation: 0 points at 1 but 1 points at 2
    std::string bad =
        "0: 1 (012) - - -\n"
        "1: 2 (012) - - -\n"
        "2: 1 (012) - - -\n";
    REQUIRE_THROWS_AS(parse_table(bad), ValidationError);

    REQUIRE_THROWS_AS(parse_table("0: 1 (011) - - -\n"), ParseError);  // not injective
}

TEST_CASE("partial tables parse; skeleton needs closed input") {
    Triangulation t = parse_table("0: - - - -\n");
    REQUIRE(!t.closed());
    REQUIRE_THROWS_AS(Skeleton(t), NotClosedError);
}

TEST_CASE("golden skeleton counts") {
    Skeleton s(testutil::golden_s3());
    REQUIRE(s.face_count() == 8);
    REQUIRE(s.edge_count() - s.vertex_count() == 4);
    REQUIRE(s.euler_characteristic() == 0);
    REQUIRE(s.orientable());
    REQUIRE(s.all_edges_orientation_consistent());

    auto links = vertex_links(s);
    long total_triangles = 0;
    for (const auto& l : links) {
        REQUIRE(l.euler_characteristic == 2);
        REQUIRE(l.connected);
        REQUIRE(l.orientable);
        total_triangles += l.faces;
    }
    REQUIRE(total_triangles == 16);
}

TEST_CASE("pillow skeleton") {
    Skeleton s(testutil::pillow());
    REQUIRE(s.vertex_count() == 4);
    REQUIRE(s.edge_count() == 6);
    REQUIRE(s.face_count() == 4);
    REQUIRE(s.euler_characteristic() == 0);
    REQUIRE(s.orientable());
    REQUIRE(all_links_spheres(s));
}

TEST_CASE("boundary of the 4-simplex") {
    Skeleton s(testutil::boundary_4_simplex());
    REQUIRE(s.vertex_count() == 5);
    REQUIRE(s.edge_count() == 10);
    REQUIRE(s.face_count() == 10);
    REQUIRE(s.tet_count() == 5);
    REQUIRE(s.orientable());
    REQUIRE(all_links_spheres(s));
}

TEST_CASE("non-orientable gluing is detected with a witness") {
    Triangulation t(1);
    {
        // 012 -> 013 via 0,1,2 -> 0,1,3 (odd extension, consistent)
        std::array<int, 4> img{0, 1, 3, 2};
        t.set_gluing(0, 0, 0, Perm4(img));
        t.set_gluing(0, 1, 0, Perm4(img).inverse());
    }
    {
        // 023 -> 123 via 0,2,3 -> 2,1,3 (even extension, parity contradiction)
        std::array<int, 4> img{2, 0, 1, 3};
        t.set_gluing(0, 2, 0, Perm4(img));
        t.set_gluing(0, 3, 0, Perm4(img).inverse());
    }
    t.validate();
    Skeleton s(t);
    REQUIRE(!s.orientable());
    REQUIRE(s.nonorientable_witness().has_value());
    REQUIRE(!s.nonorientable_witness()->cycle.empty());
}

TEST_CASE("relabeling keeps the class structure") {
    Triangulation t = testutil::golden_s3();
    std::vector<int> tet_map{2, 0, 3, 1};
    std::vector<Perm4> vmaps{Perm4(1, 0, 3, 2), Perm4(2, 3, 0, 1), Perm4(0, 2, 1, 3), Perm4()};
    Triangulation r = relabel(t, tet_map, vmaps);
    r.validate();
    Skeleton s1(t), s2(r);
    REQUIRE(s1.edge_degree_multiset() == s2.edge_degree_multiset());
    REQUIRE(s1.vertex_count() == s2.vertex_count());
    REQUIRE(s1.face_count() == s2.face_count());
    REQUIRE(s1.orientable() == s2.orientable());
}

TEST_CASE("every link edge has two incident link triangles") {
    for (const Triangulation& t :
         {testutil::golden_s3(), testutil::pillow(), testutil::boundary_4_simplex()}) {
        Skeleton s(t);
        for (const auto& l : vertex_links(s)) {
            REQUIRE(2 * l.edges == 3 * l.faces);
        }
    }
}
