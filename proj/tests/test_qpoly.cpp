#include "doctest.h"

#include "extlab/qpoly.hpp"
#include "oracles.hpp"

using namespace extlab;

namespace {

// dense reference: coefficient vector from exponent 0
using Dense = std::vector<long>;

QPoly from_dense(const Dense& d)
{
    QPoly p;
    for (size_t i = 0; i < d.size(); ++i) p.add_term(static_cast<int>(i), d[i]);
    return p;
}

Dense mul(const Dense& a, const Dense& b)
{
    Dense c(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Dense random_dense(oracle::Gen& g)
{
    Dense d(g.uniform(0, 6));
    for (auto& x : d) x = g.coin(0.4) ? 0 : g.uniform(-9, 9);
    return d;
}

}

TEST_CASE("sparse arithmetic agrees with dense vectors")
{
    oracle::Gen g(17);
    for (int rep = 0; rep < 500; ++rep) {
        Dense a = random_dense(g), b = random_dense(g);
        QPoly pa = from_dense(a), pb = from_dense(b);
        CHECK(pa * pb == from_dense(mul(a, b)));
        Dense s(std::max(a.size(), b.size()), 0);
        for (size_t i = 0; i < a.size(); ++i) s[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) s[i] += b[i];
        CHECK(pa + pb == from_dense(s));
        CHECK((pa - pa).is_zero());
        CHECK(pa * pb == pb * pa);
        long at1 = 0;
        for (long x : a) at1 += x;
        CHECK(pa.at_one() == at1);
        for (auto& [e, c] : pa.terms()) CHECK(c != 0);
    }
}

TEST_CASE("ring laws on random polynomials")
{
    oracle::Gen g(23);
    for (int rep = 0; rep < 300; ++rep) {
        QPoly a = from_dense(random_dense(g)), b = from_dense(random_dense(g)), c = from_dense(random_dense(g));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.shifted(3).shifted(-3) == a);
        if (!a.is_zero() && a.min_exp() >= 0) CHECK(a.reversed(a.max_exp()).reversed(a.max_exp()) == a);
    }
}

TEST_CASE("string form")
{
    CHECK(QPoly().str() == "0");
    QPoly p;
    p.add_term(0, 1);
    p.add_term(2, 3);
    p.add_term(1, -2);
    CHECK(p.str() == "1 - 2*q + 3*q^2");
    CHECK(QPoly::parse(p.str()) == p);
    oracle::Gen g(29);
    for (int rep = 0; rep < 200; ++rep) {
        QPoly a = from_dense(random_dense(g));
        CHECK(QPoly::parse(a.str()) == a);
    }
}

TEST_CASE("coefficient order")
{
    QPoly a = QPoly::monomial(1, 2) + QPoly::monomial(3, 1);
    QPoly b = QPoly::monomial(1, 1);
    CHECK(coeff_geq(a, b));
    CHECK_FALSE(coeff_geq(b, a));
    CHECK(a.nonnegative());
    CHECK((b - a).nonpositive());
    CHECK(coeff_geq(QPoly(), QPoly()));
}

TEST_CASE("exact product comparison")
{
    const std::uint64_t big = ~std::uint64_t(0);
    CHECK(product_leq(big, big, big, big));
    CHECK_FALSE(product_leq(big, big, big, big - 1));
    CHECK(product_leq(0, big, 0, 0));
    oracle::Gen g(31);
    for (int rep = 0; rep < 1000; ++rep) {
        std::uint64_t a = g.uniform(0, 1000), b = g.uniform(0, 1000), c = g.uniform(0, 1000), d = g.uniform(0, 1000);
        CHECK(product_leq(a, b, c, d) == (a * b <= c * d));
    }
}
