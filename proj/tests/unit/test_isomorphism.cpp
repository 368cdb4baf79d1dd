#include <doctest.h>

#include <map>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "tpm/isomorphism.hpp"

using namespace tpm;

namespace {

bool is_bijection_iso(const TorusMap& a, const TorusMap& b, const Bijection& f) {
    auto target = oracle::face_set(b.faces());
    std::vector<int> perm(f.begin(), f.end());
    return oracle::image(a, perm, false) == target || oracle::image(a, perm, true) == target;
}

/// Brute-force marked classification: over all vertex bijections that are map
/// isomorphisms fixing the marked dart, look where the fore face goes.
MarkedIsomorphism brute_marked(const MarkedMap& a, const MarkedMap& b) {
    if (a.map.vertex_count() != b.map.vertex_count()) return MarkedIsomorphism::None;
    const auto target = oracle::face_set(b.map.faces());
    const auto fa = fore_rear_faces(a);
    const auto fb = fore_rear_faces(b);
    const auto fore_b = oracle::rotate_min(b.map.face(fb.fore));
    std::vector<int> perm(static_cast<std::size_t>(a.map.vertex_count()) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    bool complexly = false;
    do {
        if (perm[static_cast<std::size_t>(a.first)] != b.first) continue;
        if (perm[static_cast<std::size_t>(a.second)] != b.second) continue;
        for (bool rev : {false, true}) {
            if (oracle::image(a.map, perm, rev) != target) continue;
            auto f = a.map.face(fa.fore);
            for (auto& v : f) v = perm[static_cast<std::size_t>(v)];
            if (rev) std::reverse(f.begin(), f.end());
            if (oracle::rotate_min(f) == fore_b) return MarkedIsomorphism::Simply;
            complexly = true;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return complexly ? MarkedIsomorphism::Complexly : MarkedIsomorphism::None;
}

}  // namespace

TEST_CASE("isomorphic to a relabeled copy") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + trial % catalog::kEntryCount;
        auto m = fixture::catalog(n);
        auto p = oracle::random_permutation(m.vertex_count(), rng);
        auto r = m.relabeled(p);
        if (trial % 3 == 0) r = r.mirrored();
        auto f = are_map_isomorphic(m, r);
        REQUIRE(f);
        CHECK(is_bijection_iso(m, r, *f));
        CHECK(canonical_key(m) == canonical_key(r));
        CHECK(canonical_map(m) == canonical_map(r));
    }
}

TEST_CASE("map isomorphism agrees with brute force on small maps") {
    std::vector<TorusMap> small;
    for (const auto& s : build_seed_set().seeds) {
        if (s.map.vertex_count() <= 8) small.push_back(s.map.with_marks({}));
        if (small.size() >= 24) break;
    }
    small.push_back(fixture::catalog(1));
    int agreements = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
        for (std::size_t j = i; j < small.size(); ++j) {
            const auto& a = small[i];
            const auto& b = small[j];
            if (!(invariant_signature(a) == invariant_signature(b))) continue;
            bool fast = are_map_isomorphic(a, b).has_value();
            CHECK(fast == oracle::brute_force_map_iso(a, b));
            CHECK(fast == (canonical_key(a) == canonical_key(b)));
            ++agreements;
        }
    }
    CHECK(agreements >= static_cast<int>(small.size()));
}

TEST_CASE("orientation preserving isomorphism") {
    auto m = fixture::catalog(1);
    auto mirror = m.mirrored();
    bool fast = are_map_isomorphic(m, mirror, Symmetry::OrientationPreserving).has_value();
    CHECK(fast == oracle::brute_force_map_iso(m, mirror, false));
    CHECK(are_map_isomorphic(m, mirror));
    KeyOptions op{Symmetry::OrientationPreserving, false};
    CHECK((canonical_key(m, op) == canonical_key(mirror, op)) == fast);
}

TEST_CASE("keys separate all catalog maps") {
    std::map<CanonicalKey, int> seen;
    for (const auto& e : catalog::load()) {
        auto [it, fresh] = seen.emplace(canonical_key(e.map()), e.number);
        CHECK(fresh);
    }
    const auto& es = catalog::load();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto a = es[i].map();
            auto b = es[j].map();
            if (!(invariant_signature(a) == invariant_signature(b))) continue;
            CHECK_FALSE(are_map_isomorphic(a, b));
        }
    }
}

TEST_CASE("graph isomorphism without map isomorphism") {
    auto a = fixture::catalog(6);
    auto b = fixture::catalog(7);
    auto g = graph_isomorphism(a, b);
    REQUIRE(g);
    CHECK(oracle::brute_force_graph_iso(a, b));
    CHECK_FALSE(are_map_isomorphic(a, b));
    CHECK_FALSE(oracle::brute_force_map_iso(a, b));
    auto ea = oracle::edge_list(a);
    for (auto [u, v] : ea) CHECK(b.adjacent((*g)[static_cast<std::size_t>(u)], (*g)[static_cast<std::size_t>(v)]));
}

TEST_CASE("key hex") {
    auto k = canonical_key(fixture::catalog(13));
    auto h = k.hex();
    CHECK(h.size() == 2 * k.code.size());
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
    CanonicalKey wide{{1, 300}};
    CHECK(wide.hex() == "w000000010000012c");
}

TEST_CASE("marks change the marked key only") {
    auto m = seed_band_map();
    auto plain = m.with_marks({});
    CHECK(canonical_key(m) == canonical_key(plain));
    KeyOptions marked{Symmetry::WithReflections, true};
    CHECK_FALSE(canonical_key(m, marked) == canonical_key(plain, marked));
}

TEST_CASE("fore and rear faces") {
    auto m = seed_band_map();
    auto fr = fore_rear_faces({m, 1, 4});
    const auto& fore = m.face(fr.fore);
    auto it = std::find(fore.begin(), fore.end(), 1);
    REQUIRE(it != fore.end());
    CHECK(fore[(static_cast<std::size_t>(it - fore.begin()) + 1) % fore.size()] == 4);
    CHECK(fr.fore != fr.rear);
    CHECK_THROWS_AS(fore_rear_faces({m, 1, 1}), std::invalid_argument);
}

TEST_CASE("simply and complexly isomorphic agree with brute force") {
    auto seeds = build_seed_set().seeds;
    int simply = 0, complexly = 0;
    std::vector<MarkedMap> marked;
    for (const auto& s : seeds) {
        if (s.map.vertex_count() > 7) continue;
        for (auto [x, y] : {std::pair{1, 4}, std::pair{2, 5}, std::pair{3, 6}}) {
            marked.push_back({s.map.with_marks({}), x, y});
            marked.push_back({s.map.with_marks({}).mirrored(), x, y});
        }
        if (marked.size() >= 30) break;
    }
    marked.push_back({seed_band_map(), 1, 4});
    marked.push_back({seed_band_map().mirrored(), 1, 4});
    for (std::size_t i = 0; i < marked.size(); ++i) {
        for (std::size_t j = i; j < marked.size(); ++j) {
            auto got = classify_marked_isomorphism(marked[i], marked[j]);
            CHECK(got == brute_marked(marked[i], marked[j]));
            simply += got == MarkedIsomorphism::Simply;
            complexly += got == MarkedIsomorphism::Complexly;
        }
    }
    CHECK(simply > 0);
    CHECK(complexly > 0);
    CHECK(to_string(MarkedIsomorphism::Complexly) == "complexly");
}
