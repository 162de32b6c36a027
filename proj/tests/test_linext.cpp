#include "doctest.h"

#include "common.hpp"
#include "extlab/linext.hpp"

using namespace extlab;

namespace {

std::vector<Poset> sample_posets(std::uint64_t seed, int count, int max_n)
{
    oracle::Gen g(seed);
    std::vector<Poset> out;
    for (int rep = 0; rep < count; ++rep) {
        int n = g.uniform(1, max_n);
        out.push_back(Poset::from_relations(n, g.dag(n, g.uniform(0, 6) / 10.0)));
    }
    return out;
}

}

TEST_CASE("extensions match filtered permutations")
{
    CHECK(count_extensions(chain(3)) == 1);
    CHECK(count_extensions(antichain(3)) == 6);
    CHECK(count_extensions(two_chains(2, 2)) == 6);
    CHECK(count_extensions(Poset(0)) == 1);
    for (auto& p : sample_posets(1, 150, 7)) {
        auto want = oracle::extensions(rel_of(p));
        std::vector<std::vector<int>> got;
        for (auto& l : enumerate_extensions(p)) got.push_back(l.labels);
        auto sorted = got;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == want);
        CHECK(count_extensions(p) == want.size());
        CHECK(extension_upper_bound(p) >= count_extensions(p));
        ExtensionSet es(p);
        REQUIRE(es.count() == got.size());
        for (size_t e = 0; e < es.count(); ++e) CHECK(es.extension(e).labels == got[e]);
    }
}

TEST_CASE("extension order inverts labels")
{
    LinearExtension l{{3, 1, 2}};
    CHECK(l.order() == std::vector<int>{1, 2, 0});
}

TEST_CASE("weights")
{
    ChainDecomposition empty{{}, {0, 1, 2}};
    CHECK(weight(LinearExtension{{1, 2, 3}}, empty) == 0);
    ChainDecomposition all{{0, 1, 2, 3}, {}};
    CHECK(weight(LinearExtension{{1, 2, 3, 4}}, all) == 10);
    ChainDecomposition one{{0}, {1}};
    CHECK(weight(LinearExtension{{1, 2}}, one) == 1);
}

TEST_CASE("correlation tables match the permutation oracle")
{
    for (auto& p : sample_posets(2, 80, 6)) {
        int n = p.size();
        if (n < 3) continue;
        std::optional<ChainDecomposition> d;
        std::vector<int> c1;
        if (width(p) <= 2) {
            d = chain_decomposition_width_two(p);
            c1 = d->c1;
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (x == y || y == z || x == z) continue;
                    auto want = oracle::table(rel_of(p), x, y, z, c1);
                    CorrelationTable t = correlation_table(p, d, {x, y, z}, true);
                    CHECK(t.total() == count_extensions(p));
                    CHECK(t.entries.size() == want.size());
                    for (auto& [key, poly] : want) {
                        QPoly q;
                        for (auto [e, c] : poly) q.add_term(e, c);
                        CHECK(t.at(key.first, key.second) == q);
                    }
                    CorrelationTable u = correlation_table(p, d, {x, y, z}, false);
                    for (auto& [key, poly] : u.entries) {
                        CHECK(key.first >= 1);
                        CHECK(key.second >= 1);
                    }
                }
    }
}

TEST_CASE("correlation table examples")
{
    CorrelationTable c = correlation_table(chain(3), std::nullopt, {0, 1, 2}, false);
    CHECK(c.entries.size() == 1);
    CHECK(c.count(1, 1) == 1);
    CorrelationTable a = correlation_table(antichain(3), std::nullopt, {0, 1, 2}, true);
    CHECK(a.entries.size() == 6);
    for (auto& [key, poly] : a.entries) CHECK(poly.at_one() == 1);
    CHECK(c.to_json() == "{\"1,1\":\"1\"}");
}

TEST_CASE("Kahn-Saks vectors")
{
    auto c = kahn_saks_vector(chain(2), std::nullopt, 0, 1);
    CHECK(c.entries.size() == 1);
    CHECK(c.count(1) == 1);
    auto a = kahn_saks_vector(antichain(2), std::nullopt, 0, 1);
    CHECK(a.count(1) == 1);
    CHECK(a.count(-1) == 1);
    auto v = kahn_saks_vector(two_chains(2, 2), std::nullopt, 0, 1);
    CHECK(v.count(1) == 3);
    CHECK(v.count(2) == 2);
    CHECK(v.count(3) == 1);
    for (auto& p : sample_posets(3, 60, 6)) {
        if (p.size() < 2) continue;
        auto ext = oracle::extensions(rel_of(p));
        std::map<int, long> want;
        for (auto& L : ext) want[L[1] - L[0]]++;
        auto got = kahn_saks_vector(p, std::nullopt, 0, 1);
        CHECK(got.entries.size() == want.size());
        for (auto [k, c] : want) CHECK(got.count(k) == c);
    }
}

TEST_CASE("R table, q vector, r vector")
{
    auto rc = r_table(chain(2), 0, 1);
    CHECK(rc.size() == 1);
    CHECK(rc.at({1, 2}) == 1);
    auto ra = r_table(antichain(2), 0, 1);
    CHECK(ra.at({1, 2}) == 1);
    CHECK(ra.at({2, 1}) == 1);
    auto qc = q_vector(chain(4), 2);
    CHECK(qc.size() == 1);
    CHECK(qc.at(3) == 1);
    auto qa = q_vector(antichain(2), 0);
    CHECK(qa.at(1) == 1);
    CHECK(qa.at(2) == 1);
    auto [v, m] = adjoin_global_min(antichain(2));
    auto qv = q_vector(v, 0);
    CHECK(qv.size() == 2);
    CHECK(qv.at(2) == 1);
    CHECK(qv.at(3) == 1);

    ChainDecomposition c02{{}, {0, 1}};
    auto r2 = r_vector(chain(2), c02, 1, 2, 2);
    CHECK(r2.size() == 1);
    CHECK(r2.at(1) == 1);
    Poset p = two_chains(2, 2);
    ChainDecomposition d{{0, 1}, {2, 3}};
    for (auto [i, c] : r_vector(p, d, 1, 2, 4)) {
        CHECK(i >= 1);
        CHECK(i <= 3);
        CHECK(c > 0);
    }
    BigInt total = 0;
    for (int t = 1; t <= 4; ++t)
        for (auto [i, c] : r_vector(p, d, 1, 2, t)) total += c;
    CHECK(total == 6);

    for (auto& q : sample_posets(4, 40, 6)) {
        if (q.size() < 2) continue;
        BigInt s = 0;
        for (auto& [key, c] : r_table(q, 0, 1)) s += c;
        CHECK(s == count_extensions(q));
    }
}

TEST_CASE("event probabilities")
{
    CHECK(event_probability(chain(3), [](const LinearExtension&) { return true; }) == 1);
    CHECK(event_probability(antichain(2), [](const LinearExtension& l) { return l[0] < l[1]; }) == Rational(1, 2));
    Poset p = Poset::from_relations(3, {{0, 1}});
    CHECK(event_probability(p, [](const LinearExtension& l) { return l[2] < l[1]; }) == Rational(2, 3));
    ChainDecomposition d{{0}, {1}};
    CHECK(event_probability(antichain(2), forward_event(d, {})) == 1);
    CHECK(event_probability(antichain(2), forward_event(d, {{1, 1}})) == Rational(1, 2));
}

TEST_CASE("one-third statistic")
{
    CHECK(one_third_statistic(antichain(2)).delta == Rational(1, 2));
    CHECK(one_third_statistic(Poset::from_relations(3, {{0, 1}})).delta == Rational(1, 3));
    CHECK_THROWS_AS(one_third_statistic(chain(3)), TotalOrderError);
}
