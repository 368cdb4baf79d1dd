#include <doctest.h>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "tpm/generation.hpp"
#include "tpm/topology.hpp"

using namespace tpm;

namespace {

int subdivisions(const ChordSpec& c) { return (c.a % 2) + (c.b % 2); }

int faces_with_both(const TorusMap& m, VertexId b, VertexId c) {
    int k = 0;
    for (const auto& f : m.faces()) {
        k += std::find(f.begin(), f.end(), b) != f.end() && std::find(f.begin(), f.end(), c) != f.end();
    }
    return k;
}

bool consecutive(const Face& f, VertexId x, VertexId y) {
    for (std::size_t k = 0; k < f.size(); ++k) {
        auto p = f[k], q = f[(k + 1) % f.size()];
        if ((p == x && q == y) || (p == y && q == x)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("chord counts match the direct count") {
    for (int n : {1, 13, 47, 53}) {
        auto m = fixture::catalog(n);
        for (int f = 0; f < m.face_count(); ++f) {
            auto chords = enumerate_edge_additions(m, f);
            oracle::ChordCount got;
            for (const auto& c : chords) {
                switch (kind(c)) {
                case ChordKind::VV: ++got.vv; break;
                case ChordKind::VE: ++got.ve; break;
                case ChordKind::EE: ++got.ee; break;
                }
            }
            auto want = oracle::count_chords(m, f);
            CHECK(got.vv == want.vv);
            CHECK(got.ve == want.ve);
            CHECK(got.ee == want.ee);
        }
    }
}

TEST_CASE("a triangle has six chords") {
    auto m = fixture::catalog(1);
    auto chords = enumerate_edge_additions(m, 0);
    CHECK(chords.size() == 6);
    CHECK(std::count_if(chords.begin(), chords.end(), [](auto& c) { return kind(c) == ChordKind::VV; }) == 0);
    CHECK(std::count_if(chords.begin(), chords.end(), [](auto& c) { return kind(c) == ChordKind::VE; }) == 3);
    CHECK(std::count_if(chords.begin(), chords.end(), [](auto& c) { return kind(c) == ChordKind::EE; }) == 3);
}

TEST_CASE("quadrilateral diagonals") {
    auto m = seed_band_map();
    auto chords = enumerate_edge_additions(m, 0);
    int vv = 0;
    for (const auto& c : chords) vv += kind(c) == ChordKind::VV;
    int want = !m.adjacent(m.face(0)[0], m.face(0)[2]) + !m.adjacent(m.face(0)[1], m.face(0)[3]);
    CHECK(vv == want);
    CHECK(chord_problem(m, {0, 0, 4}).has_value() == m.adjacent(m.face(0)[0], m.face(0)[2]));
    CHECK(chord_problem(m, {0, 0, 2}));
}

TEST_CASE("add_edge conservation") {
    for (int n : {13, 53}) {
        auto m = fixture::catalog(n);
        for (const auto& c : enumerate_edge_additions(m)) {
            auto r = add_edge(m, c);
            const int s = subdivisions(c);
            CHECK(r.vertex_count() == m.vertex_count() + s);
            CHECK(r.edge_count() == m.edge_count() + 1 + s);
            CHECK(r.face_count() == m.face_count() + 1);
            CHECK(euler_characteristic(r) == 0);
        }
    }
}

TEST_CASE("invalid chords are rejected") {
    auto m = fixture::catalog(1);
    CHECK(chord_problem(m, {0, 0, 2}));  // adjacent vertices
    CHECK(chord_problem(m, {0, 0, 1}));  // vertex on its own edge
    CHECK_THROWS_AS(add_edge(m, {0, 0, 2}), MapError);
    CHECK_THROWS_AS(add_edge(m, {99, 0, 3}), MapError);
}

TEST_CASE("marked edges follow subdivision") {
    auto m = seed_band_map();
    for (const auto& c : enumerate_edge_additions(m)) {
        auto r = add_edge(m, c);
        REQUIRE(r.marks().size() == 3);
        std::size_t total = 0;
        for (const auto& p : r.marks()) total += p.size();
        CHECK(total >= 6);
        CHECK(total <= 8);
    }
}

TEST_CASE("add then remove is the identity") {
    std::mt19937 rng(17);
    int done = 0;
    for (int trial = 0; trial < 40; ++trial) {
        auto m = fixture::catalog(1 + (trial * 7) % catalog::kEntryCount);
        auto chords = enumerate_edge_additions(m);
        auto c = chords[std::uniform_int_distribution<std::size_t>(0, chords.size() - 1)(rng)];
        auto r = add_edge(m, c);
        const auto& f = r.face(c.face);
        const auto& g = r.faces().back();
        // the new edge is the one shared by the two halves
        VertexId u = 0, v = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
            VertexId x = f[i], y = f[(i + 1) % f.size()];
            if (consecutive(g, x, y)) u = x, v = y;
        }
        REQUIRE(u != 0);
        auto back = remove_edge(r, u, v);
        CHECK(are_map_isomorphic(back.map, m));
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("split vertex") {
    auto k7 = fixture::catalog(1);
    auto s = split_vertex(k7, {1, 0, 3, false, false});
    CHECK(s.vertex_count() == 8);
    CHECK(s.valence(1) == 4);
    CHECK(s.valence(8) == 4);
    auto m13 = fixture::catalog(13);
    auto t = split_vertex(m13, {1, 0, 2, false, false});
    CHECK(t.valence(1) == 3);
    CHECK(t.valence(11) == 3);
    CHECK_THROWS_AS(split_vertex(m13, {1, 0, 1, false, false}), MapError);
}

TEST_CASE("split then shrink is the identity") {
    int done = 0;
    for (int n = 1; n <= catalog::kEntryCount && done < 60; ++n) {
        auto m = fixture::catalog(n);
        for (VertexId x = 1; x <= m.vertex_count() && done < 60; x += 3) {
            const int val = m.valence(x);
            for (int count = 2; count <= val - 2; ++count) {
                TorusMap s = m;
                try {
                    s = split_vertex(m, {x, count % val, count, false, false});
                } catch (const MapError&) {
                    continue;
                }
                auto back = shrink_edge(s, x, m.vertex_count() + 1);
                CHECK(are_map_isomorphic(back.map, m));
                ++done;
            }
        }
    }
    CHECK(done >= 40);
}

TEST_CASE("vertex splitting is dual to edge adding") {
    std::mt19937 rng(23);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 10; ++trial) {
        auto m = fixture::catalog(1 + trial % catalog::kEntryCount);
        auto d = dual(m);
        std::uniform_int_distribution<int> pickv(1, d.vertex_count());
        VertexId x = pickv(rng);
        const int val = d.valence(x);
        VertexSplitSpec spec{x, std::uniform_int_distribution<int>(0, val - 1)(rng),
                             std::uniform_int_distribution<int>(1, val - 1)(rng), trial % 2 == 0, trial % 3 == 0};
        TorusMap s = d;
        try {
            s = split_vertex(d, spec);
        } catch (const MapError&) {
            continue;
        } catch (const std::invalid_argument&) {
            continue;
        }
        auto back = dual(s);
        bool found = false;
        for (const auto& c : enumerate_edge_additions(m, x - 1)) {
            if (are_map_isomorphic(add_edge(m, c), back)) {
                found = true;
                break;
            }
        }
        CHECK(found);
        ++checked;
    }
    CHECK(checked == 10);
}

TEST_CASE("seed set") {
    auto r = build_seed_set();
    CHECK(r.first_edge_orbits == std::array<int, 3>{2, 2, 2});
    CHECK(r.seeds.size() == static_cast<std::size_t>(r.distinct - r.pruned_three_bands));
    CHECK(r.text().find("published 359") != std::string::npos);
    for (const auto& s : r.seeds) {
        CHECK(s.map.marks() == std::vector<MarkedPath>{{1, 4}, {2, 5}, {3, 6}});
        CHECK(euler_characteristic(s.map) == 0);
    }
    for (std::size_t i = 0; i < r.seeds.size(); i += 25) {
        const auto& m = r.seeds[i].map;
        auto d = find_band_decomposition(m, 2);
        REQUIRE(d);
        for (const auto& b : d->bands) CHECK(disjoint_cross_paths(m, b) >= 2);
        CHECK_FALSE(find_band_decomposition(m, 3));
    }
}

TEST_CASE("pinch expansions separate the two shared vertices") {
    int pairs = 0;
    for (const auto& s : build_seed_set().seeds) {
        auto imp = first_improper_pair(s.map);
        if (!imp || imp->shared.size() != 2) continue;
        const auto& fa = s.map.face(imp->face_a);
        const auto& fb = s.map.face(imp->face_b);
        VertexId b = imp->shared[0], c = imp->shared[1];
        if (consecutive(fa, b, c) || consecutive(fb, b, c)) continue;
        auto succ = improper_pair_expansions(s.map);
        CHECK_FALSE(succ.empty());
        for (const auto& x : succ) {
            CHECK(x.map.face_count() == s.map.face_count() + 1);
            CHECK(faces_with_both(x.map, b, c) == 1);
        }
        if (++pairs >= 10) break;
    }
    CHECK(pairs > 0);
}

TEST_CASE("shared edge expansions include two-chord successors") {
    bool two = false;
    int cases = 0;
    for (const auto& s : build_seed_set().seeds) {
        auto imp = first_improper_pair(s.map);
        if (!imp || imp->shared.size() != 3) continue;
        auto succ = improper_pair_expansions(s.map);
        for (const auto& x : succ) {
            CHECK(x.map.face_count() > s.map.face_count());
            if (x.via.find('+') != std::string::npos) {
                two = true;
                CHECK(x.map.face_count() == s.map.face_count() + 2);
            }
        }
        if (++cases >= 20) break;
    }
    CHECK(cases > 0);
    CHECK(two);
}

TEST_CASE("over-approximation is a superset") {
    auto s = build_seed_set().seeds.front().map;
    KeyOptions marked{Symmetry::WithReflections, true};
    std::set<CanonicalKey> normal, over;
    for (const auto& x : improper_pair_expansions(s)) normal.insert(canonical_key(x.map, marked));
    for (const auto& x : improper_pair_expansions(s, {true})) over.insert(canonical_key(x.map, marked));
    CHECK(std::includes(over.begin(), over.end(), normal.begin(), normal.end()));
    CHECK(improper_pair_expansions(fixture::catalog(13)).empty());
}

TEST_CASE("prune") {
    for (const auto& e : catalog::load()) CHECK_FALSE(prune(e.map()));
    CHECK(prune(fixture::wheel_gadget()) == PruneReason::HasEIC);
    auto w = fixture::wheel_gadget();
    CHECK(dual_has_eic(w));
    CHECK(prune(dual(w)));
    auto seed = seed_band_map();
    CHECK_FALSE(prune(seed));
    CHECK(prune(seed.with_marks({{1, 4}, {2, 5}})) == PruneReason::MissingMarkedEdges);
    CHECK(to_string(PruneReason::ThreeBands) == "THREE_BANDS");
}
