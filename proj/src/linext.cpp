#include "extlab/linext.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace extlab {

std::vector<int> LinearExtension::order() const
{
    std::vector<int> o(labels.size());
    for (size_t x = 0; x < labels.size(); ++x) o[labels[x] - 1] = static_cast<int>(x);
    return o;
}

std::uint64_t enumeration_cap()
{
    if (const char* s = std::getenv("EXTLAB_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && end != s) return v;
        throw std::invalid_argument(std::string("EXTLAB_CAP is not an integer: ") + s);
    }
    return 10000000ULL;
}

BigInt extension_upper_bound(const Poset& p)
{
    int n = p.size();
    std::vector<int> order(n);
    for (int x = 0; x < n; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return less_count(p, x) < less_count(p, y); });
    std::vector<int> top, len;
    for (int x : order) {
        size_t c = 0;
        while (c < top.size() && !p.less(top[c], x)) ++c;
        if (c == top.size()) {
            top.push_back(x);
            len.push_back(1);
        } else {
            top[c] = x;
            ++len[c];
        }
    }
    BigInt bound;
    mpz_fac_ui(bound.get_mpz_t(), n);
    for (int l : len) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), l);
        bound /= f;
    }
    return bound;
}

static void check_cap(const Poset& p)
{
    BigInt bound = extension_upper_bound(p);
    BigInt cap(std::to_string(enumeration_cap()));
    if (bound > cap)
        throw CapError("extension bound " + bound.get_str() + " exceeds cap " + cap.get_str() +
                       " (set EXTLAB_CAP to raise it)");
}

void for_each_extension(const Poset& p, const std::function<void(const std::vector<int>&)>& fn)
{
    check_cap(p);
    int n = p.size();
    std::vector<int> pos(n, 0);
    std::function<void(int, Mask)> rec = [&](int t, Mask placed) {
        if (t > n) {
            fn(pos);
            return;
        }
        for (int x = 0; x < n; ++x) {
            if ((placed >> x) & 1) continue;
            if (p.below(x) & ~placed) continue;
            pos[x] = t;
            rec(t + 1, placed | bit(x));
        }
        };
    rec(1, 0);
}

std::vector<LinearExtension> enumerate_extensions(const Poset& p)
{
    std::vector<LinearExtension> out;
    for_each_extension(p, [&](const std::vector<int>& pos) { out.push_back(LinearExtension{pos}); });
    return out;
}

BigInt count_extensions(const Poset& p)
{
    std::uint64_t c = 0;
    for_each_extension(p, [&](const std::vector<int>&) { ++c; });
    return BigInt(std::to_string(c));
}

ExtensionSet::ExtensionSet(const Poset& p) : n_(p.size())
{
    for_each_extension(p, [&](const std::vector<int>& pos) {
        for (int x = 0; x < n_; ++x) pos_.push_back(static_cast<std::uint8_t>(pos[x]));
        ++count_;
    });
}

LinearExtension ExtensionSet::extension(std::size_t e) const
{
    LinearExtension l;
    l.labels.assign(row(e), row(e) + n_);
    return l;
}

int weight(const LinearExtension& l, const ChainDecomposition& d)
{
    int w = 0;
    for (int x : d.c1) w += l[x];
    return w;
}

static BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

QPoly CorrelationTable::at(int i, int j) const
{
    auto it = entries.find({i, j});
    return it == entries.end() ? QPoly() : it->second;
}

BigInt CorrelationTable::total() const
{
    BigInt s = 0;
    for (auto& kv : entries) s += kv.second.at_one();
    return s;
}

std::string CorrelationTable::to_json() const
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (auto& kv : entries) j[std::to_string(kv.first.first) + "," + std::to_string(kv.first.second)] = kv.second.str();
    return j.dump();
}

namespace {

// packs (cell, weight) for sort-and-count accumulation
struct Tally {
    std::vector<std::uint64_t> keys;
    void add(int i, int j, int w)
    {
        keys.push_back((std::uint64_t(std::uint32_t(i + 512)) << 42) | (std::uint64_t(std::uint32_t(j + 512)) << 21) |
                       std::uint64_t(w));
    }
    template <class F>
    void drain(F&& f)
    {
        std::sort(keys.begin(), keys.end());
        for (size_t s = 0; s < keys.size();) {
            size_t e = s;
            while (e < keys.size() && keys[e] == keys[s]) ++e;
            std::uint64_t k = keys[s];
            f(int((k >> 42) & 0x1FFFFF) - 512, int((k >> 21) & 0x1FFFFF) - 512, int(k & 0x1FFFFF), e - s);
            s = e;
        }
    }
};

int row_weight(const std::uint8_t* row, const ChainDecomposition& d)
{
    int w = 0;
    for (int x : d.c1) w += row[x];
    return w;
}

}

CorrelationTable correlation_table(const ExtensionSet& es, const std::optional<ChainDecomposition>& d,
                                   const ElementTriple& t, bool signed_offsets)
{
    CorrelationTable tab;
    tab.triple = t;
    tab.has_q = d.has_value();
    Tally tally;
    for (std::size_t e = 0; e < es.count(); ++e) {
        const std::uint8_t* r = es.row(e);
        int i = int(r[t.z2]) - int(r[t.z1]);
        int j = int(r[t.z3]) - int(r[t.z2]);
        if (!signed_offsets && (i < 1 || j < 1)) continue;
        tally.add(i, j, d ? row_weight(r, *d) : 0);
    }
    tally.drain([&](int i, int j, int w, std::uint64_t c) { tab.entries[{i, j}].add_term(w, big(c)); });
    return tab;
}

CorrelationTable correlation_table(const Poset& p, const std::optional<ChainDecomposition>& d,
                                   const ElementTriple& t, bool signed_offsets)
{
    if (t.z1 == t.z2 || t.z2 == t.z3 || t.z1 == t.z3) throw std::invalid_argument("triple elements must be distinct");
    return correlation_table(ExtensionSet(p), d, t, signed_offsets);
}

QPoly KahnSaksVector::at(int k) const
{
    auto it = entries.find(k);
    return it == entries.end() ? QPoly() : it->second;
}

KahnSaksVector kahn_saks_vector(const ExtensionSet& es, const std::optional<ChainDecomposition>& d, int x, int y)
{
    if (x == y) throw std::invalid_argument("kahn_saks_vector needs x != y");
    KahnSaksVector v;
    v.x = x;
    v.y = y;
    Tally tally;
    for (std::size_t e = 0; e < es.count(); ++e) {
        const std::uint8_t* r = es.row(e);
        tally.add(int(r[y]) - int(r[x]), 0, d ? row_weight(r, *d) : 0);
    }
    tally.drain([&](int k, int, int w, std::uint64_t c) { v.entries[k].add_term(w, big(c)); });
    return v;
}

KahnSaksVector kahn_saks_vector(const Poset& p, const std::optional<ChainDecomposition>& d, int x, int y)
{
    return kahn_saks_vector(ExtensionSet(p), d, x, y);
}

std::map<std::pair<int, int>, BigInt> r_table(const Poset& p, int x, int z)
{
    if (x == z) throw std::invalid_argument("r_table needs x != z");
    std::map<std::pair<int, int>, std::uint64_t> c;
    for_each_extension(p, [&](const std::vector<int>& pos) { ++c[{pos[x], pos[z]}]; });
    std::map<std::pair<int, int>, BigInt> out;
    for (auto& kv : c) out[kv.first] = big(kv.second);
    return out;
}

std::map<int, BigInt> q_vector(const ExtensionSet& es, int x)
{
    std::vector<std::uint64_t> c(es.n() + 1, 0);
    for (std::size_t e = 0; e < es.count(); ++e) ++c[es.pos(e, x)];
    std::map<int, BigInt> out;
    for (int i = 1; i <= es.n(); ++i)
        if (c[i]) out[i] = big(c[i]);
    return out;
}

std::map<int, BigInt> q_vector(const Poset& p, int x) { return q_vector(ExtensionSet(p), x); }

std::map<int, BigInt> r_vector(const Poset& p, const ChainDecomposition& d, int k, int l, int t)
{
    if (k < 1 || l < 1 || k > d.b() || l > d.b() || k > l) throw IndexError("r_vector: chain index out of range");
    int bk = d.c2[k - 1], bl = d.c2[l - 1];
    std::map<int, std::uint64_t> c;
    for_each_extension(p, [&](const std::vector<int>& pos) {
        if (pos[bl] == t) ++c[pos[bk]];
    });
    std::map<int, BigInt> out;
    for (auto& kv : c) out[kv.first] = big(kv.second);
    return out;
}

Rational event_probability(const Poset& p, const Event& event)
{
    std::uint64_t hit = 0, total = 0;
    for_each_extension(p, [&](const std::vector<int>& pos) {
        ++total;
        if (event(LinearExtension{pos})) ++hit;
    });
    if (total == 0) throw EmptyError("poset has no linear extensions");
    Rational r(big(hit), big(total));
    r.canonicalize();
    return r;
}

Event forward_event(const ChainDecomposition& d, const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<std::pair<int, int>> ids;
    for (auto [i, j] : pairs) {
        if (i < 1 || i > d.a() || j < 1 || j > d.b()) throw IndexError("forward_event: index out of range");
        ids.emplace_back(d.c1[i - 1], d.c2[j - 1]);
    }
    return [ids](const LinearExtension& l) {
        for (auto [x, y] : ids)
            if (l[x] >= l[y]) return false;
        return true;
    };
}

OneThird one_third_statistic(const Poset& p)
{
    ExtensionSet es(p);
    int n = p.size();
    bool found = false;
    OneThird best{{0, 0}, Rational(0)};
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (p.comparable(x, y)) continue;
            std::uint64_t below = 0;
            for (std::size_t e = 0; e < es.count(); ++e)
                if (es.pos(e, x) < es.pos(e, y)) ++below;
            std::uint64_t m = std::min<std::uint64_t>(below, es.count() - below);
            Rational r(big(m), big(es.count()));
            r.canonicalize();
            if (!found || r > best.delta) {
                best = {{x, y}, r};
                found = true;
            }
        }
    if (!found) throw TotalOrderError("poset is a total order");
    return best;
}

}
