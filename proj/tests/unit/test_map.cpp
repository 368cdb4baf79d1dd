#include <doctest.h>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "tpm/map.hpp"

using namespace tpm;

namespace {

const char* kRow13 =
    "[10, 0, -1, 1,4,5,2, -1, 2,5,6,3, -1, 6,8,4,3, -1, 4,1,7,3, -1, 2,9,10,1, -1, 10,9,6,5, -1, "
    "4,8,10,5, -1, 8,7,1,10, -1, 3,7,9,2, -1, 7,8,6,9, -1]";

ViolationKind violation_of(int n, std::vector<Face> faces) {
    try {
        TorusMap m(n, std::move(faces));
    } catch (const MapError& e) {
        return e.kind();
    }
    FAIL("expected a MapError");
    return ViolationKind::EmptyMap;
}

}  // namespace

TEST_CASE("parse row 13") {
    auto m = parse_serial(kRow13);
    CHECK(m.vertex_count() == 10);
    CHECK(m.face_count() == 10);
    CHECK(m.edge_count() == 20);
    CHECK(oracle::edge_list(m).size() == 20);
    CHECK(euler_characteristic(m) == 0);
}

TEST_CASE("serialize round trip") {
    for (const auto& e : catalog::load()) {
        auto m = e.map();
        auto again = parse_serial(serialize(m));
        CHECK(again == m);
    }
    CHECK(serialize(fixture::catalog(1)) == catalog::entry(1).serial);
}

TEST_CASE("edge counts by direct count") {
    CHECK(oracle::edge_list(fixture::catalog(1)).size() == 21);
    CHECK(edges(fixture::catalog(1)).size() == 21);
    CHECK(edges(fixture::catalog(53)).size() == 21);
    CHECK(edges(fixture::catalog(13)).size() == 20);
    for (const auto& e : edges(fixture::catalog(13))) {
        auto m = fixture::catalog(13);
        const auto& f = m.face(e.forward.face);
        CHECK(f[static_cast<std::size_t>(e.forward.pos)] == e.u);
        CHECK(f[(static_cast<std::size_t>(e.forward.pos) + 1) % f.size()] == e.v);
    }
}

TEST_CASE("distributions") {
    CHECK(valence_distribution(fixture::catalog(1)) == std::vector<int>{0, 0, 0, 7});
    CHECK(valence_distribution(fixture::catalog(13)) == std::vector<int>{0, 10});
    CHECK(valence_distribution(fixture::catalog(53)) == std::vector<int>{14});
    CHECK(face_size_distribution(fixture::catalog(1)) == std::vector<int>{14});
    CHECK(face_size_distribution(fixture::catalog(47)) == std::vector<int>{0, 2, 4, 2});
    for (const auto& e : catalog::load()) {
        auto m = e.map();
        CHECK(face_size_distribution(dual(m)) == valence_distribution(m));
    }
}

TEST_CASE("invariant violations") {
    CHECK(violation_of(4, {{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}}) == ViolationKind::EulerNonZero);
    auto faces = fixture::catalog(13).faces();
    faces[1] = {1, 4, 6, 3};  // 1->4 now appears twice
    CHECK(violation_of(10, faces) == ViolationKind::DuplicateEdgeDirection);
    CHECK(violation_of(3, {{1, 2}}) == ViolationKind::FaceTooShort);
    CHECK(violation_of(3, {{1, 2, 2}}) == ViolationKind::RepeatedVertexInFace);
    CHECK(violation_of(0, {}) == ViolationKind::EmptyMap);
    CHECK_THROWS_AS(parse_serial("[10, 0, -1, 1, 2"), ParseError);
    CHECK_THROWS_AS(parse_serial("[10, 1, -1, 1,2,3, -1]"), ParseError);
    CHECK_THROWS_AS(parse_serial("ten"), ParseError);
}

TEST_CASE("rotation system round trip") {
    for (int n : {1, 13, 47, 53}) {
        auto m = fixture::catalog(n);
        auto rot = rotation_system(m);
        CHECK(oracle::face_set(faces_from_rotation(rot)) == oracle::face_set(m.faces()));
        for (VertexId v = 1; v <= m.vertex_count(); ++v) {
            CHECK(static_cast<int>(rot[static_cast<std::size_t>(v)].size()) == m.valence(v));
        }
    }
}

TEST_CASE("dual is an involution up to isomorphism") {
    for (int n : {1, 13, 47, 53}) {
        auto m = fixture::catalog(n);
        auto d = dual(m);
        CHECK(d.vertex_count() == m.face_count());
        CHECK(d.face_count() == m.vertex_count());
        CHECK(d.edge_count() == m.edge_count());
    }
    auto m = fixture::catalog(47);
    CHECK(oracle::brute_force_map_iso(dual(dual(m)), m));
}

TEST_CASE("marks") {
    auto marks = parse_marks("1-4,2-5,3-6");
    CHECK(marks.size() == 3);
    CHECK(format_marks(marks) == "1-4,2-5,3-6");
    auto m = seed_band_map();
    CHECK(m.marks().size() == 3);
    CHECK_THROWS_AS(m.with_marks({{1, 2, 3, 1}}), MapError);
}

TEST_CASE("relabel and mirror") {
    std::mt19937 rng(7);
    auto m = fixture::catalog(13);
    auto p = oracle::random_permutation(m.vertex_count(), rng);
    auto r = m.relabeled(p);
    CHECK(oracle::image(m, p, false) == oracle::face_set(r.faces()));
    CHECK(oracle::face_set(m.mirrored().mirrored().faces()) == oracle::face_set(m.faces()));
}
