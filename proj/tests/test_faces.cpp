#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tricert/faces.hpp"

using namespace tricert;

namespace {

// The 2-vertex one-tetrahedron 3-sphere: both faces are cones.
Triangulation one_tet_s3_two_vertices() {
    Triangulation t(1);
    t.set_gluing(0, 0, 0, Perm4(0, 1, 3, 2));
    t.set_gluing(0, 1, 0, Perm4(0, 1, 3, 2).inverse());
    t.set_gluing(0, 2, 0, Perm4(1, 0, 2, 3));
    t.set_gluing(0, 3, 0, Perm4(1, 0, 2, 3).inverse());
    t.validate();
    return t;
}

}  // namespace

TEST_CASE("golden input: face-generic but not face-pair-reduced") {
    Skeleton s(testutil::golden_s3());
    auto kinds = classify_all_faces(s);
    for (const auto& k : kinds) {
        bool ok = k.kind == FaceKind::Triangle || k.kind == FaceKind::Mobius;
        REQUIRE(ok);
    }
    REQUIRE(is_face_generic(s).value);
    auto fpr = is_face_pair_reduced(s);
    REQUIRE(!fpr.value);
    REQUIRE(!fpr.witnesses.empty());
    REQUIRE(small_manifold_flags(s).empty());
}

TEST_CASE("face kind counts partition all faces") {
    for (const Triangulation& t :
         {testutil::golden_s3(), testutil::pillow(), testutil::boundary_4_simplex()}) {
        Skeleton s(t);
        auto kinds = classify_all_faces(s);
        REQUIRE(static_cast<long>(kinds.size()) == s.face_count());
    }
}

TEST_CASE("simplicial triangulations are face-pair-reduced and face-generic") {
    Skeleton s(testutil::boundary_4_simplex());
    for (const auto& k : classify_all_faces(s)) REQUIRE(k.kind == FaceKind::Triangle);
    REQUIRE(is_face_generic(s).value);
    REQUIRE(is_face_pair_reduced(s).value);
    REQUIRE(unique_corner_characterisation(s));
}

TEST_CASE("pillow: triangles only, reduced and generic") {
    Skeleton s(testutil::pillow());
    for (const auto& k : classify_all_faces(s)) REQUIRE(k.kind == FaceKind::Triangle);
    REQUIRE(is_face_generic(s).value);
    REQUIRE(is_face_pair_reduced(s).value);
}

TEST_CASE("cone faces of the 2-vertex one-tetrahedron sphere") {
    Skeleton s(one_tet_s3_two_vertices());
    REQUIRE(s.orientable());
    REQUIRE(all_links_spheres(s));
    REQUIRE(s.vertex_count() == 2);

    auto kinds = classify_all_faces(s);
    REQUIRE(kinds.size() == 2);
    for (const auto& k : kinds) REQUIRE(k.kind == FaceKind::Cone);

    auto fg = is_face_generic(s);
    REQUIRE(!fg.value);
    auto fpr = is_face_pair_reduced(s);
    REQUIRE(!fpr.value);

    auto flags = small_manifold_flags(s);
    REQUIRE(std::count(flags.begin(), flags.end(), SmallManifoldFlag::SimplifiableOrSmall) == 1);
    REQUIRE(std::count(flags.begin(), flags.end(), SmallManifoldFlag::L3) == 0);
}

TEST_CASE("degree-one edge forces a cone or dunce face") {
    Skeleton s(one_tet_s3_two_vertices());
    bool has_degree_one = false;
    for (const auto& ec : s.edge_classes())
        if (ec.degree == 1) has_degree_one = true;
    REQUIRE(has_degree_one);
    REQUIRE(!is_face_generic(s).value);
}

TEST_CASE("predicates are invariant under relabeling") {
    Triangulation t = testutil::golden_s3();
    std::vector<int> tet_map{3, 1, 0, 2};
    std::vector<Perm4> vmaps{Perm4(2, 0, 1, 3), Perm4(), Perm4(1, 3, 2, 0), Perm4(0, 1, 3, 2)};
    Skeleton s1(t), s2(relabel(t, tet_map, vmaps));
    REQUIRE(is_face_generic(s1).value == is_face_generic(s2).value);
    REQUIRE(is_face_pair_reduced(s1).value == is_face_pair_reduced(s2).value);
}
