#include "extlab/inequality.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace extlab {

Verdict Verdict::fail(std::string indices, std::string lhs, std::string rhs)
{
    Verdict v;
    v.holds = false;
    v.witness = Witness{"", "", "", std::move(indices), std::move(lhs), std::move(rhs)};
    return v;
}

std::string element_name(int x, const std::optional<ChainDecomposition>& d)
{
    std::string s = std::to_string(x);
    if (!d) return s;
    return s + "(" + (d->in_c1(x) ? "α" : "β") + std::to_string(d->rank(x)) + ")";
}

std::string triple_name(const ElementTriple& t, const std::optional<ChainDecomposition>& d)
{
    return element_name(t.z1, d) + "," + element_name(t.z2, d) + "," + element_name(t.z3, d);
}

Verdict& annotate(Verdict& v, const Poset& p, const std::optional<ChainDecomposition>& d,
                  const std::optional<ElementTriple>& t)
{
    if (!v.witness) return v;
    v.witness->poset = to_text(p);
    if (d) v.witness->decomposition = d->str();
    if (t) v.witness->triple = triple_name(*t, d);
    return v;
}

namespace {

// counts of a table on [-n..n]^2, for the tight loops
struct Grid {
    int n = 0;
    std::vector<std::uint64_t> v;
    explicit Grid(const CorrelationTable& t)
    {
        for (auto& [key, poly] : t.entries) n = std::max({n, std::abs(key.first), std::abs(key.second)});
        n += 1;
        v.assign(static_cast<size_t>(2 * n + 1) * (2 * n + 1), 0);
        for (auto& [key, poly] : t.entries) {
            BigInt c = poly.at_one();
            if (!c.fits_ulong_p()) throw std::overflow_error("table entry exceeds 64 bits");
            v[idx(key.first, key.second)] = c.get_ui();
        }
    }
    size_t idx(int i, int j) const { return static_cast<size_t>(i + n) * (2 * n + 1) + (j + n); }
    std::uint64_t at(int i, int j) const
    {
        if (i < -n || i > n || j < -n || j > n) return 0;
        return v[idx(i, j)];
    }
};

std::string u128(unsigned __int128 x)
{
    if (x == 0) return "0";
    std::string s;
    while (x) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    return s;
}

}

static std::string quad(int i, int j, int k, int l)
{
    return "i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k) + ",l=" + std::to_string(l);
}

static std::string pair_str(int k, int l) { return "k=" + std::to_string(k) + ",l=" + std::to_string(l); }

Verdict check_cpc(const CorrelationTable& t, int k, int l)
{
    if (k < 1 || l < 1) throw std::invalid_argument("check_cpc needs k,l >= 1");
    BigInt lhs = t.count(k, l) * t.count(k + 1, l + 1);
    BigInt rhs = t.count(k, l + 1) * t.count(k + 1, l);
    if (lhs <= rhs) return Verdict::pass();
    return Verdict::fail(pair_str(k, l), to_string(lhs), to_string(rhs));
}

Verdict check_gcpc(const CorrelationTable& t, int i, int j, int k, int l, bool signed_form)
{
    BigInt lhs, rhs;
    if (signed_form) {
        if (i > k || j > l) throw std::invalid_argument("signed check_gcpc needs i <= k and j <= l");
        lhs = t.count(i, j) * t.count(k, l);
        rhs = t.count(i, l) * t.count(k, j);
    } else {
        if (i < 1 || j < 1 || k < 1 || l < 1) throw std::invalid_argument("check_gcpc needs i,j,k,l >= 1");
        lhs = t.count(k, l) * t.count(k + i, l + j);
        rhs = t.count(k, l + j) * t.count(k + i, l);
    }
    if (lhs <= rhs) return Verdict::pass();
    return Verdict::fail(quad(i, j, k, l), to_string(lhs), to_string(rhs));
}

bool centered_quadruple(int i, int j, int k, int l)
{
    return (i > 0) == (j > 0) && (k > 0) == (l > 0);
}

Verdict check_gcpc_all(const CorrelationTable& t, GcpcRange range)
{
    // only quadruples whose left side is nonzero can fail
    Grid g(t);
    bool signed_form = range != GcpcRange::Positive;
    std::vector<std::pair<int, int>> nz;
    for (auto& [key, poly] : t.entries) {
        if (!signed_form && (key.first < 1 || key.second < 1)) continue;
        if (g.at(key.first, key.second)) nz.push_back(key);
    }
    for (auto [i, j] : nz)
        for (auto [k, l] : nz) {
            if (i >= k || j >= l) continue;
            if (range == GcpcRange::Centered && !centered_quadruple(i, j, k, l)) continue;
            unsigned __int128 lhs = static_cast<unsigned __int128>(g.at(i, j)) * g.at(k, l);
            unsigned __int128 rhs = static_cast<unsigned __int128>(g.at(i, l)) * g.at(k, j);
            if (lhs <= rhs) continue;
            if (signed_form) return Verdict::fail(quad(i, j, k, l), u128(lhs), u128(rhs));
            return Verdict::fail(quad(k - i, l - j, i, j), u128(lhs), u128(rhs));
        }
    return Verdict::pass();
}

Verdict check_qcpc(const CorrelationTable& t, int k, int l)
{
    if (k < 1 || l < 1) throw std::invalid_argument("check_qcpc needs k,l >= 1");
    QPoly lhs = t.at(k, l) * t.at(k + 1, l + 1);
    QPoly rhs = t.at(k, l + 1) * t.at(k + 1, l);
    if (coeff_geq(rhs, lhs)) return Verdict::pass();
    return Verdict::fail(pair_str(k, l), lhs.str(), rhs.str());
}

Verdict check_kahn_saks(const KahnSaksVector& v, int k, bool q_mode)
{
    if (k <= 1) throw std::invalid_argument("check_kahn_saks needs k > 1");
    if (q_mode) {
        QPoly lhs = v.at(k) * v.at(k);
        QPoly rhs = v.at(k - 1) * v.at(k + 1);
        if (coeff_geq(lhs, rhs)) return Verdict::pass();
        return Verdict::fail("k=" + std::to_string(k), lhs.str(), rhs.str());
    }
    BigInt f = v.count(k);
    BigInt lhs = f * f, rhs = v.count(k - 1) * v.count(k + 1);
    if (lhs >= rhs) return Verdict::pass();
    return Verdict::fail("k=" + std::to_string(k), to_string(lhs), to_string(rhs));
}

Verdict cpc_to_ks_reduction(const Poset& p, int x, int z)
{
    if (x == z) throw std::invalid_argument("cpc_to_ks_reduction needs x != z");
    int n = p.size();
    auto [q, y] = adjoin_incomparable(p);
    KahnSaksVector fp = kahn_saks_vector(p, std::nullopt, x, z);
    CorrelationTable fq = correlation_table(q, std::nullopt, {x, y, z}, false);
    for (auto& [key, poly] : fq.entries)
        if (fp.count(key.first + key.second - 1) != poly.at_one())
            return Verdict::fail(pair_str(key.first, key.second), to_string(fp.count(key.first + key.second - 1)),
                                 to_string(poly.at_one()));
    for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
            if (fp.count(k + l - 1) != fq.count(k, l))
                return Verdict::fail(pair_str(k, l), to_string(fp.count(k + l - 1)), to_string(fq.count(k, l)));
    // CPC on Q at (1, m-1) is Kahn-Saks on P at m
    for (int m = 2; m < n; ++m) {
        Verdict c = check_cpc(fq, 1, m - 1);
        Verdict ks = check_kahn_saks(fp, m, false);
        if (!c.holds) return c;
        if (!ks.holds) return ks;
    }
    return Verdict::pass();
}

static BigInt get(const std::map<int, BigInt>& q, int i)
{
    auto it = q.find(i);
    return it == q.end() ? BigInt(0) : it->second;
}

Verdict check_stanley(const std::map<int, BigInt>& q)
{
    if (q.empty()) return Verdict::pass();
    // whole support range, so internal zeros are caught
    for (int i = q.begin()->first; i <= q.rbegin()->first; ++i) {
        BigInt v = get(q, i);
        BigInt lhs = v * v, rhs = get(q, i - 1) * get(q, i + 1);
        if (lhs < rhs) return Verdict::fail("i=" + std::to_string(i), to_string(lhs), to_string(rhs));
    }
    return Verdict::pass();
}

Verdict check_stanley_equality(const std::map<int, BigInt>& q)
{
    for (auto& [i, v] : q) {
        if (v == 0) continue;
        BigInt a = get(q, i - 1), c = get(q, i + 1);
        if (v * v == a * c && !(a == v && v == c))
            return Verdict::fail("i=" + std::to_string(i), to_string(BigInt(v * v)), to_string(BigInt(a * c)));
    }
    return Verdict::pass();
}

std::string CpcEquality::case_name() const
{
    std::string s;
    if (cases & CaseA) s += "a";
    if (cases & CaseB) s += "b";
    if (cases & CaseC) s += "c";
    if (cases & CaseD) s += "d";
    return s.empty() ? "none" : s;
}

CpcEquality classify_cpc_equality(const QPoly& f00, const QPoly& f10, const QPoly& f01, const QPoly& f11, bool y_fixed,
                                  int k, int l)
{
    CpcEquality r;
    BigInt c00 = f00.at_one(), c10 = f10.at_one(), c01 = f01.at_one(), c11 = f11.at_one();
    if (c00 == c10 && c01 == c11) r.cases |= CaseA;
    if (c00 == c01 && c10 == c11) r.cases |= CaseB;
    if (c10 * c01 == 0) r.cases |= CaseC;
    if (y_fixed) r.cases |= CaseD;
    r.equality = c00 * c11 == c01 * c10;
    QPoly lhs = f00 * f11;
    r.q_equality = r.equality && lhs == f01 * f10;
    r.displayed_q = lhs == f01 * f11;
    if (r.equality != (r.cases != 0))
        r.verdict = Verdict::fail(pair_str(k, l) + ",case=" + r.case_name(), to_string(BigInt(c00 * c11)),
                                  to_string(BigInt(c01 * c10)));
    else if (r.equality != r.q_equality)
        r.verdict = Verdict::fail(pair_str(k, l) + ",q-form", lhs.str(), (f01 * f10).str());
    return r;
}

CpcEquality classify_cpc_equality(const CorrelationTable& tq, bool y_fixed, int k, int l)
{
    return classify_cpc_equality(tq.at(k, l), tq.at(k + 1, l), tq.at(k, l + 1), tq.at(k + 1, l + 1), y_fixed, k, l);
}

CpcEquality classify_cpc_equality(const Poset& p, const ChainDecomposition& d, const ElementTriple& t, int k, int l)
{
    if (width(p) > 2) throw WidthError("the equality classification is for width two");
    int n = p.size();
    if (k < 1 || l < 1 || k > n - 1 || l > n - 1) throw std::invalid_argument("classify_cpc_equality needs 1 <= k,l <= n-1");
    CpcEquality r = classify_cpc_equality(correlation_table(p, d, t, false), inc_count(p, t.z2) == 0, k, l);
    annotate(r.verdict, p, d, t);
    return r;
}

static bool atoms_hold(const std::uint8_t* row, const ChainDecomposition& d, const AtomList& a)
{
    for (auto [i, j] : a)
        if (row[d.c1[i - 1]] >= row[d.c2[j - 1]]) return false;
    return true;
}

static Verdict correlation_verdict(std::uint64_t nab, std::uint64_t na, std::uint64_t nb, std::uint64_t e,
                                   bool strict, const std::string& idx)
{
    // P[AB] >= P[A]P[B]  <=>  |AB| e >= |A||B|
    bool ok = strict ? !product_leq(nab, e, na, nb) : product_leq(na, nb, nab, e);
    if (ok) return Verdict::pass();
    Rational lhs(static_cast<unsigned long>(nab), static_cast<unsigned long>(e));
    Rational rhs = Rational(static_cast<unsigned long>(na), static_cast<unsigned long>(e)) *
                   Rational(static_cast<unsigned long>(nb), static_cast<unsigned long>(e));
    lhs.canonicalize();
    rhs.canonicalize();
    return Verdict::fail(idx, to_string(lhs), to_string(rhs));
}

static std::string atoms_str(const AtomList& a)
{
    std::string s;
    for (auto [i, j] : a) s += (s.empty() ? "" : "&") + ("α" + std::to_string(i) + "<β" + std::to_string(j));
    return s.empty() ? "true" : s;
}

Verdict check_gyy(const ExtensionSet& es, const ChainDecomposition& d, const AtomList& a, const AtomList& b)
{
    for (const AtomList* ev : {&a, &b})
        for (auto [i, j] : *ev)
            if (i < 1 || i > d.a() || j < 1 || j > d.b()) throw IndexError("forward event index out of range");
    std::uint64_t na = 0, nb = 0, nab = 0;
    for (size_t e = 0; e < es.count(); ++e) {
        bool ia = atoms_hold(es.row(e), d, a), ib = atoms_hold(es.row(e), d, b);
        na += ia;
        nb += ib;
        nab += ia && ib;
    }
    return correlation_verdict(nab, na, nb, es.count(), false, "A=" + atoms_str(a) + ",B=" + atoms_str(b));
}

Verdict check_gyy(const Poset& p, const ChainDecomposition& d, const AtomList& a, const AtomList& b)
{
    if (width(p) > 2) throw WidthError("GYY is checked on width-two posets");
    if (!valid_decomposition(p, d)) throw std::invalid_argument("invalid chain decomposition");
    Verdict v = check_gyy(ExtensionSet(p), d, a, b);
    return annotate(v, p, d);
}

Verdict check_xyz(const ExtensionSet& es, const Poset& p, int x, int y, int z, bool strict_if_antichain)
{
    if (x == y || y == z || x == z) throw std::invalid_argument("check_xyz needs distinct elements");
    std::uint64_t na = 0, nb = 0, nab = 0;
    for (size_t e = 0; e < es.count(); ++e) {
        const std::uint8_t* r = es.row(e);
        bool ia = r[x] < r[y], ib = r[x] < r[z];
        na += ia;
        nb += ib;
        nab += ia && ib;
    }
    bool antichain = !p.comparable(x, y) && !p.comparable(y, z) && !p.comparable(x, z);
    Verdict v = correlation_verdict(nab, na, nb, es.count(), strict_if_antichain && antichain,
                                    "x=" + std::to_string(x) + ",y=" + std::to_string(y) + ",z=" + std::to_string(z));
    return annotate(v, p, std::nullopt);
}

Verdict check_xyz(const Poset& p, int x, int y, int z, bool strict_if_antichain)
{
    return check_xyz(ExtensionSet(p), p, x, y, z, strict_if_antichain);
}

std::vector<XyzTerm> xyz_gcpc_terms(const CorrelationTable& t)
{
    Grid g(t);
    std::set<int> neg_i, pos_k, neg_j, pos_l;
    for (auto& [key, poly] : t.entries) {
        if (!g.at(key.first, key.second)) continue;
        if (key.first != 0) (key.first < 0 ? neg_i : pos_k).insert(key.first);
        if (key.second != 0) (key.second < 0 ? neg_j : pos_l).insert(key.second);
    }
    std::vector<XyzTerm> out;
    for (int i : neg_i)
        for (int j : neg_j)
            for (int k : pos_k)
                for (int l : pos_l) {
                    __int128 v = static_cast<__int128>(g.at(i, l)) * g.at(k, j) -
                                 static_cast<__int128>(g.at(i, j)) * g.at(k, l);
                    if (v == 0) continue;
                    BigInt b(u128(static_cast<unsigned __int128>(v < 0 ? -v : v)));
                    out.push_back({i, j, k, l, v < 0 ? BigInt(-b) : b});
                }
    return out;
}

std::vector<XyzTerm> xyz_gcpc_terms(const Poset& p, int x, int y, int z)
{
    return xyz_gcpc_terms(correlation_table(p, std::nullopt, {y, x, z}, true));
}

BigInt xyz_gap(const Poset& p, int x, int y, int z)
{
    BigInt na = 0, nb = 0, nab = 0, e = 0;
    for_each_extension(p, [&](const std::vector<int>& pos) {
        bool ia = pos[x] < pos[y], ib = pos[x] < pos[z];
        na += ia;
        nb += ib;
        nab += ia && ib;
        e += 1;
    });
    return e * nab - na * nb;
}

Verdict xyz_from_gcpc_decomposition(const ExtensionSet& es, const Poset& p, int x, int y, int z)
{
    if (x == y || y == z || x == z) throw std::invalid_argument("xyz_from_gcpc_decomposition needs distinct elements");
    BigInt sum = 0;
    Verdict v;
    for (auto& t : xyz_gcpc_terms(correlation_table(es, std::nullopt, {y, x, z}, true))) {
        if (t.value < 0 && v.holds) v = Verdict::fail(quad(t.i, t.j, t.k, t.l), "0", to_string(t.value));
        sum += t.value;
    }
    std::uint64_t na = 0, nb = 0, nab = 0;
    for (size_t e = 0; e < es.count(); ++e) {
        const std::uint8_t* r = es.row(e);
        bool ia = r[x] < r[y], ib = r[x] < r[z];
        na += ia;
        nb += ib;
        nab += ia && ib;
    }
    BigInt gap = BigInt(std::to_string(es.count())) * BigInt(std::to_string(nab)) -
                 BigInt(std::to_string(na)) * BigInt(std::to_string(nb));
    if (v.holds && sum != gap) v = Verdict::fail("quadrant-sum", to_string(sum), to_string(gap));
    return annotate(v, p, std::nullopt, ElementTriple{y, x, z});
}

Verdict xyz_from_gcpc_decomposition(const Poset& p, int x, int y, int z)
{
    if (width(p) > 2) throw WidthError("the quadrant decomposition is checked on width-two posets");
    return xyz_from_gcpc_decomposition(ExtensionSet(p), p, x, y, z);
}

int telescoping_holes(const CorrelationTable& t)
{
    int K = 0, L = 0;
    for (auto& [key, poly] : t.entries)
        if (key.first >= 1 && key.second >= 1 && !poly.is_zero()) {
            K = std::max(K, key.first);
            L = std::max(L, key.second);
        }
    if (K == 0) return 0;
    std::vector<std::vector<char>> nz(K + 2, std::vector<char>(L + 2, 0)), sw = nz, ne = nz;
    for (auto& [key, poly] : t.entries)
        if (key.first >= 1 && key.second >= 1 && !poly.is_zero()) nz[key.first][key.second] = 1;
    for (int k = 1; k <= K; ++k)
        for (int l = 1; l <= L; ++l) sw[k][l] = nz[k][l] | sw[k - 1][l] | sw[k][l - 1];
    for (int k = K; k >= 1; --k)
        for (int l = L; l >= 1; --l) ne[k][l] = nz[k][l] | ne[k + 1][l] | ne[k][l + 1];
    int holes = 0;
    for (int k = 1; k <= K; ++k)
        for (int l = 1; l <= L; ++l)
            if (!nz[k][l] && sw[k][l] && ne[k][l]) ++holes;
    return holes;
}

}
