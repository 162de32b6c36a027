#ifndef EXTLAB_TESTS_COMMON_HPP
#define EXTLAB_TESTS_COMMON_HPP

#include "extlab/poset.hpp"
#include "oracles.hpp"

inline oracle::Rel rel_of(const extlab::Poset& p)
{
    int n = p.size();
    oracle::Rel r(n, std::vector<bool>(n, false));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) r[x][y] = p.less(x, y);
    return r;
}

inline extlab::Poset chain(int n)
{
    std::vector<std::pair<int, int>> c;
    for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
    return extlab::Poset::from_relations(n, c);
}

inline extlab::Poset antichain(int n) { return extlab::Poset(n); }

// C_a + C_b: alpha 0..a-1, beta a..a+b-1
inline extlab::Poset two_chains(int a, int b)
{
    std::vector<std::pair<int, int>> c;
    for (int i = 0; i + 1 < a; ++i) c.emplace_back(i, i + 1);
    for (int i = 0; i + 1 < b; ++i) c.emplace_back(a + i, a + i + 1);
    return extlab::Poset::from_relations(a + b, c);
}

inline extlab::Poset relabel(const extlab::Poset& p, const std::vector<int>& s)
{
    std::vector<std::pair<int, int>> r;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.less(x, y)) r.emplace_back(s[x], s[y]);
    return extlab::Poset::from_relations(p.size(), r);
}

#endif
