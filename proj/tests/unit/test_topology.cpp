#include <doctest.h>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "tpm/topology.hpp"

using namespace tpm;

namespace {

/// Simple cycles of length <= max_len through vertex 1 (each listed once per
/// direction, which is fine for a cross-check).
std::vector<Cycle> short_cycles(const TorusMap& m, std::size_t max_len) {
    std::vector<Cycle> out;
    Cycle path{1};
    std::vector<bool> on(static_cast<std::size_t>(m.vertex_count()) + 1, false);
    on[1] = true;
    auto dfs = [&](auto&& self) -> void {
        VertexId v = path.back();
        for (VertexId w = 2; w <= m.vertex_count(); ++w) {
            if (!m.adjacent(v, w) || on[static_cast<std::size_t>(w)]) continue;
            path.push_back(w);
            on[static_cast<std::size_t>(w)] = true;
            if (path.size() >= 3 && m.adjacent(w, 1)) out.push_back(path);
            if (path.size() < max_len) self(self);
            on[static_cast<std::size_t>(w)] = false;
            path.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

}  // namespace

TEST_CASE("planar cycles agree with homology") {
    for (int n : {1, 13, 53}) {
        auto m = fixture::catalog(n);
        int planar = 0, other = 0;
        for (const auto& c : short_cycles(m, n == 53 ? 8 : 5)) {
            auto disk = is_planar_cycle(m, c);
            CHECK(disk.has_value() == oracle::null_homologous(m, c));
            (disk ? planar : other) += 1;
        }
        CHECK(planar > 0);
        CHECK(other > 0);
    }
}

TEST_CASE("face boundaries bound their face") {
    auto m = fixture::catalog(13);
    for (int i = 0; i < m.face_count(); ++i) {
        auto disk = is_planar_cycle(m, m.face(i));
        REQUIRE(disk);
        CHECK(*disk == std::vector<int>{i});
    }
}

TEST_CASE("seed cycle does not bound a disk") {
    auto m = seed_band_map();
    CHECK_FALSE(is_planar_cycle(m, {1, 2, 3}));
    CHECK_FALSE(oracle::null_homologous(m, {1, 2, 3}));
    CHECK_THROWS_AS(is_planar_cycle(m, {1, 5, 3, 6}), std::invalid_argument);
}

TEST_CASE("wheel gadget has an edge inside a contractible cycle") {
    auto m = fixture::wheel_gadget();
    auto w = has_eic(m);
    REQUIRE(w);
    CHECK(is_planar_cycle(m, w->cycle).has_value());
    CHECK(oracle::null_homologous(m, w->cycle));
    CHECK(std::find(w->cycle.begin(), w->cycle.end(), w->edge.first) == w->cycle.end());
    CHECK(std::find(w->cycle.begin(), w->cycle.end(), w->edge.second) == w->cycle.end());
    CHECK(m.adjacent(w->edge.first, w->edge.second));
    CHECK(dual_has_eic(dual(m)).has_value());
}

TEST_CASE("catalog maps have no edge inside a contractible cycle") {
    for (const auto& e : catalog::load()) {
        auto m = e.map();
        CAPTURE(e.number);
        CHECK_FALSE(has_eic(m));
        CHECK_FALSE(dual_has_eic(m));
    }
}

TEST_CASE("edge adding keeps an edge inside a contractible cycle") {
    std::mt19937 rng(5);
    auto base = fixture::wheel_gadget();
    auto dbase = dual(base);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = fixture::random_descendant(base, 1 + trial % 3, rng);
        CHECK(has_eic(m));
        auto d = fixture::random_descendant(dbase, 1 + trial % 3, rng);
        CHECK(dual_has_eic(d));
    }
}

TEST_CASE("noncontractible cycles") {
    auto m = fixture::catalog(1);
    auto cycles = noncontractible_cycles(m);
    CHECK_FALSE(cycles.empty());
    for (const auto& c : cycles) CHECK_FALSE(oracle::null_homologous(m, c));
}

TEST_CASE("band decompositions") {
    auto seed = seed_band_map();
    auto d = find_band_decomposition(seed, 2);
    REQUIRE(d);
    CHECK(d->bands.size() == 2);
    for (const auto& b : d->bands) CHECK(disjoint_cross_paths(seed, b) == 3);
    std::size_t faces = 0;
    for (const auto& b : d->bands) faces += b.faces.size();
    CHECK(faces == static_cast<std::size_t>(seed.face_count()));
    CHECK_THROWS_AS(find_band_decomposition(seed, 1), std::invalid_argument);
    for (int n : {1, 13, 47, 53}) CHECK(find_band_decomposition(fixture::catalog(n), 2));
}
