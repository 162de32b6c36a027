#include "doctest.h"

#include "common.hpp"
#include "extlab/linext.hpp"

using namespace extlab;

TEST_CASE("cover relations are closed")
{
    Poset a = poset_from_cover_relations(2, {});
    CHECK_FALSE(a.comparable(0, 1));
    Poset c = poset_from_cover_relations(3, {{0, 1}, {1, 2}});
    CHECK(c.less(0, 2));
    CHECK_THROWS_AS(poset_from_cover_relations(3, {{0, 1}, {1, 0}}), CycleError);
    CHECK_THROWS_AS(poset_from_cover_relations(2, {{0, 0}}), CycleError);
}

TEST_CASE("closure matches the Warshall oracle on random relations")
{
    oracle::Gen g(11);
    for (int rep = 0; rep < 300; ++rep) {
        int n = g.uniform(1, 9);
        auto pr = g.dag(n, 0.3);
        Poset p = Poset::from_relations(n, pr);
        CHECK(rel_of(p) == oracle::closure(n, pr));
        auto cov = p.covers();
        CHECK(rel_of(poset_from_cover_relations(n, cov)) == rel_of(p));
    }
}

TEST_CASE("width")
{
    CHECK(width(chain(5)) == 1);
    CHECK(width(antichain(4)) == 4);
    CHECK(width(two_chains(3, 3)) == 2);
    CHECK(width(Poset(0)) == 0);
}

TEST_CASE("width agrees with a brute-force largest antichain")
{
    oracle::Gen g(5);
    for (int rep = 0; rep < 200; ++rep) {
        int n = g.uniform(1, 8);
        Poset p = Poset::from_relations(n, g.dag(n, 0.35));
        int best = 0;
        for (int m = 1; m < (1 << n); ++m) {
            bool anti = true;
            for (int x = 0; x < n && anti; ++x)
                for (int y = 0; y < n && anti; ++y)
                    if ((m >> x & 1) && (m >> y & 1) && p.less(x, y)) anti = false;
            if (anti) best = std::max(best, __builtin_popcount(m));
        }
        CHECK(width(p) == best);
    }
}

TEST_CASE("two-chain decomposition")
{
    auto d = chain_decomposition_width_two(two_chains(2, 2));
    CHECK(valid_decomposition(two_chains(2, 2), d));
    CHECK(d.a() == 2);
    CHECK(d.b() == 2);
    auto c = chain_decomposition_width_two(chain(4));
    CHECK(c.a() == 4);
    CHECK(c.b() == 0);
    CHECK_THROWS_AS(chain_decomposition_width_two(antichain(3)), WidthError);

    oracle::Gen g(8);
    for (int rep = 0; rep < 300; ++rep) {
        int n = g.uniform(1, 10);
        Poset p = Poset::from_relations(n, g.dag(n, 0.5));
        if (width(p) > 2) {
            CHECK_THROWS_AS(chain_decomposition_width_two(p), WidthError);
            continue;
        }
        auto dd = chain_decomposition_width_two(p);
        CHECK(valid_decomposition(p, dd));
        CHECK(dd == chain_decomposition_width_two(p));
    }
}

TEST_CASE("dual and restriction")
{
    CHECK(dual(antichain(3)) == antichain(3));
    Poset c = dual(chain(3));
    CHECK(c.less(2, 1));
    CHECK(c.less(1, 0));
    oracle::Gen g(3);
    for (int rep = 0; rep < 100; ++rep) {
        int n = g.uniform(0, 8);
        Poset p = Poset::from_relations(n, g.dag(n, 0.4));
        CHECK(dual(dual(p)) == p);
        CHECK(restrict_to(p, p.all()) == p);
        CHECK(count_extensions(dual(p)) == count_extensions(p));
    }
    Poset r = restrict_to(chain(3), 0b101);
    CHECK(r.size() == 2);
    CHECK(r.less(0, 1));
    CHECK(restrict_to(antichain(3), 0b010).size() == 1);
}

TEST_CASE("adjoining elements")
{
    auto [one, id] = adjoin_incomparable(Poset(0));
    CHECK(one.size() == 1);
    CHECK(id == 0);
    CHECK(width(adjoin_incomparable(chain(2)).first) == 2);
    auto [v, m] = adjoin_global_min(antichain(2));
    CHECK(count_extensions(v) == 2);
    CHECK(v.less(m, 0));
    oracle::Gen g(21);
    for (int rep = 0; rep < 60; ++rep) {
        int n = g.uniform(1, 7);
        Poset p = Poset::from_relations(n, g.dag(n, 0.3));
        CHECK(count_extensions(adjoin_incomparable(p).first) == count_extensions(p) * (n + 1));
        CHECK(count_extensions(adjoin_global_min(p).first) == count_extensions(p));
        CHECK(width(adjoin_global_min(p).first) == width(p));
    }
}

TEST_CASE("less and incomparable counts")
{
    CHECK(less_count(chain(3), 2) == 2);
    CHECK(inc_count(chain(3), 2) == 0);
    for (int x = 0; x < 3; ++x) {
        CHECK(less_count(antichain(3), x) == 0);
        CHECK(inc_count(antichain(3), x) == 2);
    }
    for (int x = 0; x < 4; ++x) CHECK(inc_count(two_chains(2, 2), x) == 2);
}

TEST_CASE("width-two enumeration equals the brute-force labeled set")
{
    CHECK(enumerate_width_two_posets(1, 1).size() == 3);
    CHECK(enumerate_width_two_posets(0, 4).size() == 1);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            if (a + b == 0) continue;
            std::set<oracle::Rel> got;
            for (auto& w : enumerate_width_two_posets(a, b)) {
                CHECK(valid_decomposition(w.poset, w.chains));
                got.insert(rel_of(w.poset));
            }
            CHECK(got.size() == enumerate_width_two_posets(a, b).size());
            CHECK(got == oracle::width_two_labeled(a, b));
        }
    CHECK_THROWS_AS(enumerate_width_two_posets(6, 6), CapError);
}

TEST_CASE("isomorphism classes match the brute-force count")
{
    const int known[] = {1, 1, 2, 5, 16, 63, 318, 2045};
    for (int n = 0; n <= 5; ++n) {
        auto reps = all_posets(n);
        CHECK(static_cast<int>(reps.size()) == known[n]);
        CHECK(reps.size() == oracle::unlabeled_posets(n).size());
    }
    CHECK(all_posets(6).size() == 318);
    CHECK(all_posets(7).size() == 2045);
}

TEST_CASE("canonical form is a complete isomorphism invariant")
{
    oracle::Gen g(99);
    for (int rep = 0; rep < 150; ++rep) {
        int n = g.uniform(1, 6);
        Poset p = Poset::from_relations(n, g.dag(n, 0.4));
        Poset q = relabel(p, g.permutation(n));
        CHECK(canonical_form(p) == canonical_form(q));
        Poset r = Poset::from_relations(n, g.dag(n, 0.4));
        CHECK((canonical_form(p) == canonical_form(r)) == oracle::isomorphic(rel_of(p), rel_of(r)));
    }
}

TEST_CASE("random posets")
{
    CHECK(random_poset(5, 0.0, 1) == antichain(5));
    CHECK(width(random_poset(6, 1.0, 1)) == 1);
    CHECK(random_poset(8, 0.3, 42) == random_poset(8, 0.3, 42));
}

TEST_CASE("text format round trip")
{
    oracle::Gen g(4);
    for (int rep = 0; rep < 100; ++rep) {
        int n = g.uniform(0, 9);
        Poset p = Poset::from_relations(n, g.dag(n, 0.3));
        CHECK(parse_poset(to_text(p)) == p);
    }
    CHECK(to_text(chain(3)) == "3;0<1,1<2");
    CHECK_THROWS_AS(parse_poset("3"), ParseError);
    CHECK_THROWS_AS(parse_poset("3;0<5"), ParseError);
    CHECK_THROWS_AS(parse_poset("2;0<1,1<0"), CycleError);
    CHECK_THROWS_AS(parse_poset("x;"), ParseError);
}
