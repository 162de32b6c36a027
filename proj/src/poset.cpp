#include "extlab/poset.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace extlab {

Poset::Poset(int n) : n_(n), below_(n, 0), above_(n, 0)
{
    if (n < 0 || n > kMaxElements) throw std::invalid_argument("poset size out of range");
}

Poset Poset::from_relations(int n, const std::vector<std::pair<int, int>>& rel)
{
    Poset p(n);
    for (auto [x, y] : rel) {
        if (x < 0 || y < 0 || x >= n || y >= n) throw IndexError("relation element out of range");
        if (x == y) throw CycleError("reflexive relation " + std::to_string(x) + "<" + std::to_string(x));
        p.below_[y] |= bit(x);
    }
    for (int k = 0; k < n; ++k)
        for (int y = 0; y < n; ++y)
            if ((p.below_[y] >> k) & 1) p.below_[y] |= p.below_[k];
    for (int y = 0; y < n; ++y)
        if ((p.below_[y] >> y) & 1) throw CycleError("relations contain a cycle through " + std::to_string(y));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            if ((p.below_[y] >> x) & 1) p.above_[x] |= bit(y);
    p.assert_valid();
    return p;
}

void Poset::assert_valid() const
{
    for (int x = 0; x < n_; ++x) {
        if ((below_[x] >> x) & 1) throw CycleError("irreflexivity violated");
        for (int y = 0; y < n_; ++y) {
            if (less(x, y) && less(y, x)) throw CycleError("antisymmetry violated");
            if (less(x, y) && (below_[x] & ~below_[y])) throw std::logic_error("relation not closed");
        }
    }
}

bool operator<(const Poset& a, const Poset& b)
{
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.below_ < b.below_;
}

std::vector<std::vector<bool>> Poset::relation_table() const
{
    std::vector<std::vector<bool>> t(n_, std::vector<bool>(n_, false));
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) t[x][y] = less(x, y);
    return t;
}

std::vector<std::pair<int, int>> Poset::covers() const
{
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
            if (less(x, y) && (above_[x] & below_[y]) == 0) out.emplace_back(x, y);
    return out;
}

bool ChainDecomposition::in_c1(int x) const
{
    return std::find(c1.begin(), c1.end(), x) != c1.end();
}

int ChainDecomposition::rank(int x) const
{
    for (int i = 0; i < a(); ++i)
        if (c1[i] == x) return i + 1;
    for (int i = 0; i < b(); ++i)
        if (c2[i] == x) return i + 1;
    throw IndexError("element not in decomposition");
}

std::string ChainDecomposition::str() const
{
    std::ostringstream os;
    for (size_t i = 0; i < c1.size(); ++i) os << (i ? " " : "") << c1[i];
    os << "|";
    for (size_t i = 0; i < c2.size(); ++i) os << (i ? " " : "") << c2[i];
    return os.str();
}

bool valid_decomposition(const Poset& p, const ChainDecomposition& d)
{
    if (d.a() + d.b() != p.size()) return false;
    Mask seen = 0;
    for (auto* c : {&d.c1, &d.c2}) {
        for (size_t i = 0; i < c->size(); ++i) {
            int x = (*c)[i];
            if (x < 0 || x >= p.size() || (seen & bit(x))) return false;
            seen |= bit(x);
            if (i > 0 && !p.less((*c)[i - 1], x)) return false;
        }
    }
    return seen == p.all();
}

Poset poset_from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers)
{
    return Poset::from_relations(n, covers);
}

static int max_antichain(const Poset& p, Mask cand)
{
    if (!cand) return 0;
    int x = __builtin_ctzll(cand);
    Mask rest = cand & ~bit(x);
    int without = max_antichain(p, rest);
    int with = 1 + max_antichain(p, rest & ~(p.below(x) | p.above(x)));
    return std::max(with, without);
}

int width(const Poset& p)
{
    if (p.size() > 20) throw CapError("width: brute force limited to n <= 20");
    return max_antichain(p, p.all());
}

ChainDecomposition chain_decomposition_width_two(const Poset& p)
{
    int n = p.size();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y) {
                if (y == x || p.comparable(x, y)) continue;
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    stack.push_back(y);
                } else if (color[y] == color[x]) {
                    throw WidthError("poset has width greater than two");
                }
            }
        }
    }
    ChainDecomposition d;
    for (int x = 0; x < n; ++x) (color[x] == 0 ? d.c1 : d.c2).push_back(x);
    auto by_order = [&](int x, int y) { return less_count(p, x) < less_count(p, y); };
    std::sort(d.c1.begin(), d.c1.end(), by_order);
    std::sort(d.c2.begin(), d.c2.end(), by_order);
    return d;
}

Poset dual(const Poset& p)
{
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.less(x, y)) rel.emplace_back(y, x);
    return Poset::from_relations(p.size(), rel);
}

Poset restrict_to(const Poset& p, Mask subset)
{
    std::vector<int> idx(p.size(), -1);
    int m = 0;
    for (int x = 0; x < p.size(); ++x)
        if ((subset >> x) & 1) idx[x] = m++;
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (idx[x] >= 0 && idx[y] >= 0 && p.less(x, y)) rel.emplace_back(idx[x], idx[y]);
    return Poset::from_relations(m, rel);
}

static std::vector<std::pair<int, int>> all_relations(const Poset& p)
{
    std::vector<std::pair<int, int>> rel;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.less(x, y)) rel.emplace_back(x, y);
    return rel;
}

std::pair<Poset, int> adjoin_incomparable(const Poset& p)
{
    return {Poset::from_relations(p.size() + 1, all_relations(p)), p.size()};
}

std::pair<Poset, int> adjoin_global_min(const Poset& p)
{
    auto rel = all_relations(p);
    for (int x = 0; x < p.size(); ++x) rel.emplace_back(p.size(), x);
    return {Poset::from_relations(p.size() + 1, rel), p.size()};
}

int less_count(const Poset& p, int x) { return __builtin_popcountll(p.below(x)); }

int inc_count(const Poset& p, int x)
{
    return p.size() - 1 - __builtin_popcountll(p.below(x) | p.above(x));
}

std::optional<Poset> normalize_triple(const Poset& p, const ElementTriple& t)
{
    auto rel = all_relations(p);
    rel.emplace_back(t.z1, t.z2);
    rel.emplace_back(t.z2, t.z3);
    try {
        return Poset::from_relations(p.size(), rel);
    } catch (const CycleError&) {
        return std::nullopt;
    }
}

void for_each_width_two_poset(int a, int b, const std::function<void(const WidthTwoInstance&)>& fn, int cap)
{
    if (a < 0 || b < 0) throw std::invalid_argument("negative chain size");
    if (a + b > cap) throw CapError("a+b = " + std::to_string(a + b) + " exceeds cap " + std::to_string(cap));
    ChainDecomposition d;
    for (int h = 0; h < a; ++h) d.c1.push_back(h);
    for (int k = 0; k < b; ++k) d.c2.push_back(a + k);
    std::vector<std::pair<int, int>> base;
    for (int h = 1; h < a; ++h) base.emplace_back(h - 1, h);
    for (int k = 1; k < b; ++k) base.emplace_back(a + k - 1, a + k);

    // up[h]: least k with alpha_h < beta_k (b+1 if none)
    // dn[h]: largest k with beta_k < alpha_h (0 if none)
    // both nondecreasing in h, dn[h] < up[h]
    std::vector<int> up(a), dn(a);
    std::function<void(int)> rec_dn;
    std::function<void(int)> rec_up = [&](int h) {
        if (h == a) {
            rec_dn(0);
            return;
        }
        for (int u = h ? up[h - 1] : 1; u <= b + 1; ++u) {
            up[h] = u;
            rec_up(h + 1);
        }
    };
    rec_dn = [&](int h) {
        if (h == a) {
            auto rel = base;
            for (int i = 0; i < a; ++i) {
                if (up[i] <= b) rel.emplace_back(i, a + up[i] - 1);
                if (dn[i] >= 1) rel.emplace_back(a + dn[i] - 1, i);
            }
            fn(WidthTwoInstance{Poset::from_relations(a + b, rel), d});
            return;
        }
        for (int v = h ? dn[h - 1] : 0; v < up[h]; ++v) {
            dn[h] = v;
            rec_dn(h + 1);
        }
    };
    rec_up(0);
}

std::vector<WidthTwoInstance> enumerate_width_two_posets(int a, int b, int cap)
{
    std::vector<WidthTwoInstance> out;
    for_each_width_two_poset(a, b, [&](const WidthTwoInstance& w) { out.push_back(w); }, cap);
    return out;
}

std::vector<WidthTwoInstance> width_two_posets_of_size(int n, int cap)
{
    std::vector<WidthTwoInstance> out;
    for (int a = 0; a <= n; ++a)
        for_each_width_two_poset(a, n - a, [&](const WidthTwoInstance& w) { out.push_back(w); }, cap);
    return out;
}

Poset random_poset(int n, double edge_prob, std::uint64_t seed)
{
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw std::invalid_argument("edge_prob outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < edge_prob) rel.emplace_back(i, j);
        }
    return Poset::from_relations(n, rel);
}

namespace {

// Relation code read in shell order: element k contributes one symbol per
// earlier element j, encoding (pi_j < pi_k, pi_k < pi_j).
struct Canonicalizer {
    const Poset& p;
    int n;
    std::vector<int> perm;
    std::string cur, best;
    bool have = false;

    explicit Canonicalizer(const Poset& q) : p(q), n(q.size()) {}

    bool twin_of_smaller(int c, Mask used) const
    {
        for (int o = 0; o < c; ++o) {
            if ((used >> o) & 1) continue;
            if (!p.comparable(o, c) && p.below(o) == p.below(c) && p.above(o) == p.above(c)) return true;
        }
        return false;
    }

    void dfs(int k, Mask used)
    {
        if (k == n) {
            if (!have || cur < best) {
                best = cur;
                have = true;
            }
            return;
        }
        std::vector<std::pair<std::string, int>> cands;
        for (int c = 0; c < n; ++c) {
            if ((used >> c) & 1) continue;
            if (twin_of_smaller(c, used)) continue;
            std::string seg(k, '0');
            for (int j = 0; j < k; ++j) seg[j] = static_cast<char>('0' + 2 * p.less(perm[j], c) + p.less(c, perm[j]));
            cands.emplace_back(std::move(seg), c);
        }
        std::string m = cands[0].first;
        for (auto& c : cands) m = std::min(m, c.first);
        size_t len = cur.size();
        cur += m;
        if (have && cur > best.substr(0, cur.size())) {
            cur.resize(len);
            return;
        }
        for (auto& c : cands) {
            if (c.first != m) continue;
            perm.push_back(c.second);
            dfs(k + 1, used | bit(c.second));
            perm.pop_back();
        }
        cur.resize(len);
    }
};

}

std::string canonical_form(const Poset& p)
{
    if (p.size() > 10) throw CapError("canonical form limited to n <= 10");
    Canonicalizer c(p);
    c.dfs(0, 0);
    return std::to_string(p.size()) + ":" + c.best;
}

std::vector<Poset> all_posets(int n)
{
    if (n > 9) throw CapError("all_posets limited to n <= 9");
    std::vector<Poset> level{Poset(0)};
    for (int k = 0; k < n; ++k) {
        std::map<std::string, Poset> next;
        for (const auto& q : level) {
            for (Mask s = 0; s < bit(k); ++s) {
                bool ideal = true;
                for (int x = 0; x < k && ideal; ++x)
                    if (((s >> x) & 1) && (q.below(x) & ~s)) ideal = false;
                if (!ideal) continue;
                auto rel = all_relations(q);
                for (int x = 0; x < k; ++x)
                    if ((s >> x) & 1) rel.emplace_back(x, k);
                Poset r = Poset::from_relations(k + 1, rel);
                next.emplace(canonical_form(r), std::move(r));
            }
        }
        level.clear();
        for (auto& kv : next) level.push_back(std::move(kv.second));
    }
    return level;
}

std::string to_text(const Poset& p)
{
    std::ostringstream os;
    os << p.size() << ";";
    bool first = true;
    for (auto [x, y] : p.covers()) {
        os << (first ? "" : ",") << x << "<" << y;
        first = false;
    }
    return os.str();
}

Poset parse_poset(const std::string& line)
{
    std::string s;
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto semi = s.find(';');
    if (semi == std::string::npos) throw ParseError("missing ';' in poset line: " + line);
    auto read_int = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a nonnegative integer, got '" + t + "'");
        return std::stoi(t);
    };
    int n = read_int(s.substr(0, semi));
    if (n > kMaxElements) throw ParseError("poset too large");
    std::vector<std::pair<int, int>> rel;
    std::string rest = s.substr(semi + 1);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        auto lt = item.find('<');
        if (lt == std::string::npos) throw ParseError("expected x<y, got '" + item + "'");
        int x = read_int(item.substr(0, lt)), y = read_int(item.substr(lt + 1));
        if (x >= n || y >= n) throw ParseError("element out of range in '" + item + "'");
        rel.emplace_back(x, y);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Poset::from_relations(n, rel);
}

}
