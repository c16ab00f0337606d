#include <doctest.h>

#include <map>
#include <vector>

#include "hicat/catalan.hpp"
#include "hicat/gluing.hpp"

using namespace hicat;

namespace {

// Census fixtures computed by an independent implementation and frozen before
// this library existed.  Every (nu, j) with 2*nu*j <= 16 is covered.
struct CensusFixture {
    int nu;
    int j;
    long long total;
    long long disconnected;
    std::map<int, long long> counts;
};

const std::vector<CensusFixture>& census_fixtures() {
    static const std::vector<CensusFixture> fixtures = {
        {2, 1, 3, 0, {{0, 2}, {1, 1}}},
        {2, 2, 105, 9, {{0, 36}, {1, 60}}},
        {2, 3, 10395, 891, {{0, 1728}, {1, 6336}, {2, 1440}}},
        {2, 4, 2027025, 146961, {{0, 145152}, {1, 964224}, {2, 770688}}},
        {3, 1, 15, 0, {{0, 5}, {1, 10}}},
        {3, 2, 10395, 225, {{0, 600}, {1, 4800}, {2, 4770}}},
        {4, 1, 105, 0, {{0, 14}, {1, 70}, {2, 21}}},
        {4, 2, 2027025, 11025, {{0, 9800}, {1, 215600}, {2, 1009400}, {3, 781200}}},
        {5, 1, 945, 0, {{0, 42}, {1, 420}, {2, 483}}},
        {6, 1, 10395, 0, {{0, 132}, {1, 2310}, {2, 6468}, {3, 1485}}},
        {7, 1, 135135, 0, {{0, 429}, {1, 12012}, {2, 66066}, {3, 56628}}},
        {8, 1, 2027025, 0, {{0, 1430}, {1, 60060}, {2, 570570}, {3, 1169740}, {4, 225225}}},
    };
    return fixtures;
}

GluingDiagram diagram(int nu, int j, std::vector<int> partner) {
    return GluingDiagram{nu, j, std::move(partner)};
}

// Face count with the two permutations composed the other way round; the
// count must be independent of the convention.
int count_faces_reversed(const GluingDiagram& d) {
    const int n = d.dart_count();
    const int valence = 2 * d.nu;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int faces = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++faces;
        int dart = start;
        while (!seen[static_cast<size_t>(dart)]) {
            seen[static_cast<size_t>(dart)] = 1;
            int s = (dart / valence) * valence + (dart % valence + 1) % valence;
            dart = d.partner[static_cast<size_t>(s)];
        }
    }
    return faces;
}

}  // namespace

TEST_SUITE("gluing") {

TEST_CASE("matching counts") {
    CHECK(count_matchings(2, 1) == 3);
    CHECK(count_matchings(3, 1) == 15);
    CHECK(count_matchings(2, 2) == 105);
    CHECK(count_matchings(4, 2) == 2027025);
}

TEST_CASE("enumeration is exhaustive, deterministic, pair-lowest-first") {
    std::vector<std::vector<int>> seen;
    enumerate_matchings(2, 1, kDefaultDartGuard,
                        [&](const GluingDiagram& d) { seen.push_back(d.partner); });
    REQUIRE(seen.size() == 3);
    CHECK(seen[0] == std::vector<int>{1, 0, 3, 2});
    CHECK(seen[1] == std::vector<int>{2, 3, 0, 1});
    CHECK(seen[2] == std::vector<int>{3, 2, 1, 0});

    long long count = 0;
    enumerate_matchings(3, 2, kDefaultDartGuard, [&](const GluingDiagram&) { ++count; });
    CHECK(Integer(count) == count_matchings(3, 2));

    CHECK_THROWS_AS(enumerate_matchings(3, 3, kDefaultDartGuard, [](const GluingDiagram&) {}),
                    GuardError);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(diagram(2, 1, {1, 0, 3, 2})));
    CHECK_FALSE(is_connected(diagram(2, 2, {1, 0, 3, 2, 5, 4, 7, 6})));
    CHECK(is_connected(diagram(2, 2, {4, 5, 6, 7, 0, 1, 2, 3})));
}

TEST_CASE("faces and genus of one-vertex gluings") {
    GluingDiagram planar = diagram(2, 1, {1, 0, 3, 2});
    CHECK(count_faces(planar) == 3);
    CHECK(genus(planar) == 0);

    GluingDiagram crossing = diagram(2, 1, {2, 3, 0, 1});
    CHECK(count_faces(crossing) == 1);
    CHECK(genus(crossing) == 1);

    CHECK_THROWS_AS(genus(diagram(2, 2, {1, 0, 3, 2, 5, 4, 7, 6})), std::invalid_argument);
}

TEST_CASE("face count is independent of the composition convention") {
    enumerate_matchings(2, 2, kDefaultDartGuard, [](const GluingDiagram& d) {
        CHECK(count_faces(d) == count_faces_reversed(d));
    });
}

TEST_CASE("census matches the frozen fixtures") {
    for (const CensusFixture& fx : census_fixtures()) {
        // Spread the three largest runs over worker threads; results must not
        // depend on the thread count.
        int threads = fx.total > 1000000 ? 4 : 1;
        GenusCountTable table = count_maps_oracle(fx.nu, fx.j, kDefaultDartGuard, threads);
        CAPTURE(fx.nu);
        CAPTURE(fx.j);
        CHECK(table.total_matchings == fx.total);
        CHECK(table.disconnected == fx.disconnected);
        REQUIRE(table.counts.size() == fx.counts.size());
        for (const auto& [g, c] : fx.counts) {
            REQUIRE(table.counts.count(g) == 1);
            CHECK(table.counts.at(g) == c);
        }
        CHECK(table.connected_total() + table.disconnected == table.total_matchings);
        CHECK(table.total_matchings == count_matchings(fx.nu, fx.j));
        for (const auto& [g, c] : table.counts)
            if (c != 0) CHECK(2 * g <= (fx.nu - 1) * fx.j + 1);
    }
}

TEST_CASE("one-vertex planar gluings are non-crossing matchings") {
    for (int nu = 2; nu <= 8; ++nu) {
        GenusCountTable table = count_maps_oracle(nu, 1, kDefaultDartGuard, nu >= 7 ? 4 : 1);
        CHECK(table.disconnected == 0);
        CHECK(table.counts.at(0) == higher_catalan(2, nu));
    }
}

TEST_CASE("sharded and single-shard censuses agree") {
    GenusCountTable single = count_maps_oracle(2, 3, kDefaultDartGuard, 1);
    GenusCountTable sharded = count_maps_oracle(2, 3, kDefaultDartGuard, 4);
    CHECK(single.total_matchings == sharded.total_matchings);
    CHECK(single.disconnected == sharded.disconnected);
    CHECK(single.counts == sharded.counts);
}

TEST_CASE("guard rejects oversized censuses") {
    CHECK_THROWS_AS(count_maps_oracle(2, 5, kDefaultDartGuard), GuardError);
    CHECK_THROWS_AS(count_maps_oracle(9, 1, kDefaultDartGuard), GuardError);
}

TEST_CASE("json form") {
    GenusCountTable table = count_maps_oracle(2, 2);
    CHECK(genus_table_json(table) ==
          R"({"nu":2,"j":2,"total":"105","disconnected":"9","counts":{"0":"36","1":"60"}})");
}

}  // TEST_SUITE
