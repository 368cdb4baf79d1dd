#include <doctest.h>

#include <set>

#include "../fixtures.hpp"
#include "tpm/catalog.hpp"
#include "tpm/isomorphism.hpp"

using namespace tpm;

TEST_CASE("rows") {
    const auto& es = catalog::load();
    CHECK(es.size() == 53);
    const auto& one = catalog::entry(1);
    CHECK(one.order == 7);
    CHECK(one.size == 14);
    CHECK(catalog::entry(53).order == 14);
    CHECK(catalog::entry(53).size == 7);
    CHECK_THROWS_AS(catalog::entry(0), std::out_of_range);
    CHECK_THROWS_AS(catalog::entry(54), std::out_of_range);
}

TEST_CASE("small maps are the rows with fewer than ten faces") {
    std::set<int> small;
    for (const auto& e : catalog::load()) {
        CHECK(e.map().face_count() == e.size);
        if (e.size <= 9) small.insert(e.number);
    }
    CHECK(small == std::set<int>{32, 33, 34, 35, 36, 47, 48, 49, 50, 51, 52, 53});
}

TEST_CASE("dual table is an involution with the published fixed points") {
    const auto& t = catalog::dual_table();
    std::set<int> fixed;
    for (int i = 1; i <= 53; ++i) {
        CHECK(t[static_cast<std::size_t>(t[static_cast<std::size_t>(i)])] == i);
        if (t[static_cast<std::size_t>(i)] == i) fixed.insert(i);
    }
    CHECK(fixed == std::set<int>{13, 16, 17, 18, 21, 22, 46});
    auto sd = catalog::self_dual_numbers();
    CHECK(std::set<int>(sd.begin(), sd.end()) == fixed);
    CHECK(are_map_isomorphic(dual(fixture::catalog(2)), fixture::catalog(47)));
}

TEST_CASE("full verification passes") {
    auto r = catalog::verify();
    INFO(r.text());
    CHECK(r.all_pass());
    CHECK(r.diminimal_count == 53);
    CHECK(r.dual_mismatches == 0);
    CHECK(r.distinct_keys == 53);
    CHECK(r.text().find("53/53 diminimal") != std::string::npos);
}

TEST_CASE("tampering is flagged") {
    auto rows = catalog::raw_entries();
    SUBCASE("valence column") {
        rows[9].vertices_by_valence[0] += 1;
    }
    SUBCASE("one integer of a serial form") {
        auto& s = rows[20].serial;
        auto pos = s.find(", 3,");
        REQUIRE(pos != std::string::npos);
        s.replace(pos, 4, ", 4,");
    }
    auto r = catalog::verify(rows);
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("complete graph on seven vertices") {
    auto m = fixture::catalog(1);
    CHECK(m.edge_count() == 21);
    for (VertexId a = 1; a <= 7; ++a) {
        for (VertexId b = a + 1; b <= 7; ++b) CHECK(m.adjacent(a, b));
    }
}

TEST_CASE("graph twins") {
    auto pairs = catalog::find_graph_twin_pairs();
    CHECK(std::find(pairs.begin(), pairs.end(), std::pair{6, 7}) != pairs.end());
    for (auto [a, b] : pairs) {
        CHECK(a < b);
        CHECK(catalog::entry(a).order == catalog::entry(b).order);
    }
    CHECK(catalog::find_graph_twin_pair() == std::pair{6, 7});
}

TEST_CASE("export") {
    auto text = catalog::export_lines();
    CHECK(std::count(text.begin(), text.end(), '\n') == 53);
    CHECK(text.rfind(catalog::entry(1).serial, 0) == 0);
}
