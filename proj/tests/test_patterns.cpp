#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"
#include "tricert/catalog_gen.hpp"
#include "tricert/census.hpp"
#include "tricert/homology.hpp"
#include "tricert/patterns.hpp"

using namespace tricert;

namespace {

PatternCatalog load_catalog() {
    return catalog_from_text(testutil::read_file(testutil::data_dir() + "/catalog.txt"));
}

TuplePattern random_transform(const TuplePattern& p, std::mt19937& rng) {
    int k = p.square_count;
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    int nletters = 0;
    for (int l : p.letter) nletters = std::max(nletters, l + 1);
    std::vector<int> flip(nletters);
    for (auto& f : flip) f = (rng() & 1) ? 1 : -1;
    TuplePattern out;
    out.square_count = k;
    out.letter.resize(4 * k);
    out.delta.resize(4 * k);
    for (int i = 0; i < k; ++i) {
        int rot = rng() % 4;
        bool mirror = rng() & 1;
        for (int l = 0; l < 4; ++l) {
            int src = mirror ? ((rot - l) % 4 + 4) % 4 : (l + rot) % 4;
            out.letter[4 * i + l] = p.letter[4 * perm[i] + src];
            out.delta[4 * i + l] = (mirror ? -1 : 1) * p.delta[4 * perm[i] + src] *
                                   flip[p.letter[4 * perm[i] + src]];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("canonicalization is idempotent and transform-invariant") {
    std::mt19937 rng(991);
    PatternCatalog cat = load_catalog();
    for (const auto& e : cat.entries()) {
        TuplePattern c = canonicalize(e.pattern);
        REQUIRE(canonicalize(c) == c);
        for (int trial = 0; trial < 20; ++trial) {
            TuplePattern t = random_transform(e.pattern, rng);
            REQUIRE(canonicalize(t) == c);
        }
    }
}

TEST_CASE("catalog file loads with 13 + 3 validated entries") {
    PatternCatalog cat = load_catalog();
    REQUIRE(cat.entries().size() == 16);
    int fig8 = 0, fig9 = 0;
    std::set<std::string> signatures;
    std::map<std::string, int> families;
    for (const auto& e : cat.entries()) {
        REQUIRE(signatures.insert(pattern_signature(e.pattern)).second);  // pairwise distinct
        if (e.source == "fig8") {
            ++fig8;
            REQUIRE(e.pattern.square_count == 2);
            ++families[pattern_type_string(e.pattern)];
        } else {
            ++fig9;
            REQUIRE(e.pattern.square_count == 3);
        }
    }
    REQUIRE(fig8 == 13);
    REQUIRE(fig9 == 3);
    // square types per caption family
    REQUIRE(families["CC"] == 4);
    REQUIRE(families["CE"] == 2);
    REQUIRE(families["BB"] == 6);
    REQUIRE(families["EE"] == 1);
    // three-square entries use pairwise distinct squares of the right types
    std::set<std::string> fig9_types;
    for (const auto& e : cat.entries())
        if (e.source == "fig9") fig9_types.insert(pattern_type_string(e.pattern));
    REQUIRE(fig9_types == std::set<std::string>{"ABE", "AAC", "AAA"});
}

TEST_CASE("catalog text round-trips") {
    PatternCatalog cat = load_catalog();
    std::string text = catalog_to_text(cat);
    PatternCatalog again = catalog_from_text(text);
    REQUIRE(again.entries().size() == cat.entries().size());
    for (size_t i = 0; i < cat.entries().size(); ++i) {
        REQUIRE(again.entries()[i].source == cat.entries()[i].source);
        REQUIRE(again.entries()[i].id == cat.entries()[i].id);
        REQUIRE(again.entries()[i].tags == cat.entries()[i].tags);
        REQUIRE(pattern_signature(again.entries()[i].pattern) ==
                pattern_signature(cat.entries()[i].pattern));
    }
}

TEST_CASE("malformed catalog entries are rejected") {
    REQUIRE_THROWS_AS(catalog_from_text("fig7 a 2 0,4|1,5|2,6|3,7 ++++++++ all P"),
                      CatalogLoadError);
    REQUIRE_THROWS_AS(catalog_from_text("fig8 a 2 0,4|1,5|2,6 ++++++++ all P"),
                      CatalogLoadError);  // slot 3 not covered
    REQUIRE_THROWS_AS(catalog_from_text("fig8 a 2 0,4|1,5|2,6|3,9 ++++++++ all P"),
                      CatalogLoadError);  // slot out of range
    REQUIRE_THROWS_AS(catalog_from_text("fig8 a 2 0,4|1,5|2,6|3,7 +++++ all P"),
                      CatalogLoadError);  // short orientation bits
    REQUIRE_THROWS_AS(
        catalog_from_text("fig8 a 2 0,4|1,5|2,6|3,7 ++++++++ all P\n"
                          "fig8 b 2 4,0|5,1|6,2|7,3 ++++++++ all P"),
        CatalogLoadError);  // duplicate up to canonicalization
}

TEST_CASE("the catalog regenerates from the derivation") {
    PatternCatalog cat = load_catalog();
    PatternCatalog fresh = catgen::build_generated_catalog();
    REQUIRE(fresh.entries().size() == cat.entries().size());
    for (size_t i = 0; i < cat.entries().size(); ++i) {
        REQUIRE(fresh.entries()[i].source == cat.entries()[i].source);
        REQUIRE(fresh.entries()[i].id == cat.entries()[i].id);
        REQUIRE(fresh.entries()[i].tags == cat.entries()[i].tags);
        REQUIRE(pattern_signature(fresh.entries()[i].pattern) ==
                pattern_signature(cat.entries()[i].pattern));
    }
}

TEST_CASE("pair enumeration counts match the case analysis") {
    using namespace catgen;
    auto count = [&](char a, char b, PatternClass cls) {
        int n = 0;
        for (const auto& p : enumerate_pairs(a, b))
            if (classify_pair_pattern(p) == cls) ++n;
        return n;
    };
    // two squares of type A: a hexagonal torus, a sphere, and their
    // same-sign variants; all with every edge of degree two
    REQUIRE(enumerate_pairs('A', 'A').size() == 6);
    REQUIRE(count('A', 'A', PatternClass::Capped) == 6);
    // C,C: three identification spaces without the core merge, six with;
    // of the six, four detect surfaces, one is the companion, one cannot
    // occur face-pair-reduced in an oriented triangulation
    REQUIRE(enumerate_pairs('C', 'C').size() == 9);
    REQUIRE(count('C', 'C', PatternClass::Capped) == 3);
    REQUIRE(count('C', 'C', PatternClass::Detector) == 4);
    REQUIRE(count('C', 'C', PatternClass::Companion) == 1);
    REQUIRE(count('C', 'C', PatternClass::Excluded) == 1);
    // C,E: both possibilities detect surfaces
    REQUIRE(count('C', 'E', PatternClass::Detector) == 2);
    // B,B: nine in all, six detectors, one companion (annulus squares),
    // two excluded
    REQUIRE(enumerate_pairs('B', 'B').size() == 9);
    REQUIRE(count('B', 'B', PatternClass::Detector) == 6);
    REQUIRE(count('B', 'B', PatternClass::Companion) == 1);
    REQUIRE(count('B', 'B', PatternClass::Excluded) == 2);
    // C,D: exactly one identification up to equivalence, the companion
    REQUIRE(enumerate_pairs('C', 'D').size() == 1);
    REQUIRE(count('C', 'D', PatternClass::Companion) == 1);
    // E,E: one detector
    REQUIRE(count('E', 'E', PatternClass::Detector) == 1);
}

TEST_CASE("surgery on a coherent type-G square yields a Klein bottle") {
    // the boundary of the square runs along one edge four times coherently:
    // a 4-curve bounding a one-boundary non-orientable genus-2 surface,
    // capped with the rest of the square
    TuplePattern p;
    p.square_count = 1;
    p.letter = {0, 0, 0, 0};
    p.delta = {1, 1, 1, 1};
    auto an = catgen::evaluate_surgery(p, 0);
    REQUIRE(an.applicable);
    REQUIRE(an.curve_wraps == std::vector<int>{4});
    REQUIRE(an.chi_final == 0);
    REQUIRE(an.nonorientable_final);  // genus 2: the Klein bottle
}

TEST_CASE("specific entries carry the expected tags") {
    PatternCatalog cat = load_catalog();
    auto find = [&](const std::string& src, const std::string& id) -> const CatalogEntry& {
        for (const auto& e : cat.entries())
            if (e.source == src && e.id == id) return e;
        throw std::runtime_error("entry not found");
    };
    REQUIRE(find("fig8", "b").tags == std::vector<std::string>{"P2", "LENS(4)"});
    REQUIRE(find("fig8", "m").tags == std::vector<std::string>{"P3", "LENS(6)"});
    REQUIRE(find("fig9", "c").tags == std::vector<std::string>{"PROJECTIVE_PLANE"});
    for (const char* id : {"c", "g", "j", "k"}) {
        auto tags = find("fig8", id).tags;
        REQUIRE(std::find(tags.begin(), tags.end(), "LENS(2)") != tags.end());
    }
}

TEST_CASE("matching against real skeletons") {
    PatternCatalog cat = load_catalog();
    // simplicial input: only type-A squares, no matches possible
    REQUIRE(match_catalog(Skeleton(testutil::boundary_4_simplex()), cat).empty());

    // the face-generic minimal projective-space triangulation realizes a
    // two-square pattern tagged with its own topology
    CensusFilter f;
    f.max_tets = 2;
    f.require_sphere_links = true;
    f.require_orientable = true;
    bool checked = false;
    for (const auto& t : enumerate_census(f)) {
        if (t.tet_count() != 2) continue;
        Skeleton s(t);
        if (h1(s).str() != "Z/2" || !is_face_generic(s).value) continue;
        auto ms = match_catalog(s, cat);
        REQUIRE(!ms.empty());
        for (const auto& m : ms) {
            const auto& e = cat.entries()[m.entry];
            REQUIRE(std::find(e.tags.begin(), e.tags.end(), "LENS(2)") != e.tags.end());
            // squares in distinct tetrahedra
            REQUIRE(m.squares[0].first != m.squares[1].first);
        }
        checked = true;
    }
    REQUIRE(checked);
}

TEST_CASE("match results are deterministic and sorted") {
    PatternCatalog cat = load_catalog();
    CensusFilter f;
    f.max_tets = 2;
    f.require_orientable = true;
    for (const auto& t : enumerate_census(f)) {
        Skeleton s(t);
        auto a = match_catalog(s, cat);
        auto b = match_catalog(s, cat);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i + 1 < a.size(); ++i) REQUIRE(a[i] < a[i + 1]);
    }
}
