#include "extlab/charmatrix.hpp"

#include <sstream>

#include "json.hpp"

namespace extlab {

BigInt Matrix::get(int i, int j) const
{
    if (i < 1 || j < 1 || i > rows_ || j > cols_) return 0;
    return (*this)(i, j);
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw DimError("matrix dimensions do not match");
    Matrix c(a.rows_, b.cols_);
    for (int i = 1; i <= a.rows_; ++i)
        for (int k = 1; k <= a.cols_; ++k) {
            const BigInt& x = a(i, k);
            if (x == 0) continue;
            for (int j = 1; j <= b.cols_; ++j) {
                const BigInt& y = b(k, j);
                if (y != 0) mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            }
        }
    return c;
}

bool Matrix::is_banded() const
{
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j + 1 < i && j <= cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

bool Matrix::agrees_with(const Matrix& o) const
{
    int r = std::max(rows_, o.rows_), c = std::max(cols_, o.cols_);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j)
            if (get(i, j) != o.get(i, j)) return false;
    return true;
}

std::string Matrix::to_json() const
{
    nlohmann::json j = nlohmann::json::array();
    for (int i = 1; i <= rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= cols_; ++c) row.push_back((*this)(i, c).get_str());
        j.push_back(row);
    }
    return j.dump();
}

Matrix build_S(int N)
{
    Matrix m = Matrix::square(N);
    for (int i = 2; i <= N; ++i) m(i, i - 1) = 1;
    return m;
}

Matrix build_T(int N)
{
    Matrix m = Matrix::square(N);
    for (int i = 1; i <= N; ++i)
        for (int j = i; j <= N; ++j) m(i, j) = 1;
    return m;
}

Matrix build_Wk(int N, int k)
{
    if (k < 0) throw std::invalid_argument("W_k needs k >= 0");
    Matrix m = Matrix::square(N);
    for (int i = 1; i <= std::min(k, N); ++i) m(i, i) = 1;
    return m;
}

Matrix build_U(int N)
{
    Matrix m = Matrix::square(N);
    for (int i = 2; i <= N; ++i) m(i, i) = 1;
    return m;
}

Vec apply(const Matrix& m, const Vec& v)
{
    if (static_cast<int>(v.size()) != m.cols()) throw DimError("vector length does not match matrix");
    Vec out(m.rows());
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            if (m(i, j) != 0 && v[j - 1] != 0) mpz_addmul(out[i - 1].get_mpz_t(), m(i, j).get_mpz_t(), v[j - 1].get_mpz_t());
    return out;
}

LinearExtension minimal_extension(const Poset& p, const ChainDecomposition& d)
{
    if (!valid_decomposition(p, d)) throw std::invalid_argument("invalid chain decomposition");
    LinearExtension l;
    l.labels.assign(p.size(), 0);
    Mask placed = 0;
    size_t ia = 0, ib = 0;
    for (int t = 1; t <= p.size(); ++t) {
        int x;
        if (ib < d.c2.size() && (p.below(d.c2[ib]) & ~placed) == 0) x = d.c2[ib++];
        else x = d.c1[ia++];
        l.labels[x] = t;
        placed |= bit(x);
    }
    return l;
}

CharSequence characteristic_sequence(const Poset& p, const ChainDecomposition& d, int N)
{
    if (d.b() == 0) throw EmptyChainError("characteristic sequence needs a nonempty second chain");
    if (N <= 0) N = p.size() + 2;
    LinearExtension lo = minimal_extension(p, d);
    std::vector<int> order = lo.order();
    int last = d.c2.back();
    CharSequence seq;
    seq.d = lo[last];
    seq.dim = N;
    Matrix T = build_T(N);
    for (int i = 1; i <= seq.d; ++i) {
        int x = order[i - 1];
        if (d.in_c1(x)) {
            seq.mats.push_back({CharSequence::Kind::S, 0, build_S(N)});
        } else {
            int k = inc_count(p, x) + 1;
            if (x != last) seq.mats.push_back({CharSequence::Kind::WT, k, build_Wk(N, k) * T});
            else seq.mats.push_back({CharSequence::Kind::W, k, build_Wk(N, k)});
        }
    }
    return seq;
}

Matrix n_matrix_product(const CharSequence& seq)
{
    if (seq.mats.empty()) throw EmptyChainError("empty characteristic sequence");
    for (auto& f : seq.mats)
        if (f.m.rows() != seq.dim || f.m.cols() != seq.dim) throw DimError("mismatched truncation sizes");
    // right to left keeps every partial product supported on rows <= n,
    // so truncation loses nothing
    Matrix acc = seq.mats.back().m;
    for (int i = static_cast<int>(seq.mats.size()) - 2; i >= 0; --i) acc = seq.mats[i].m * acc;
    return acc;
}

Matrix n_matrix_bruteforce(const Poset& p, const ChainDecomposition& d, int N)
{
    if (d.b() == 0) throw EmptyChainError("N_P needs a nonempty second chain");
    if (N <= 0) N = p.size() + 2;
    int b1 = d.c2.front(), bb = d.c2.back();
    int shift = less_count(p, bb);
    Matrix m = Matrix::square(N);
    std::vector<std::uint64_t> c(static_cast<size_t>(N) * N, 0);
    for_each_extension(p, [&](const std::vector<int>& pos) {
        int i = pos[b1], j = pos[bb] - shift;
        if (i >= 1 && j >= 1 && i <= N && j <= N) ++c[static_cast<size_t>(i - 1) * N + (j - 1)];
    });
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (auto v = c[static_cast<size_t>(i - 1) * N + (j - 1)]) m(i, j) = BigInt(std::to_string(v));
    return m;
}

bool is_admissible(const Vec& v)
{
    int first = -1, last = -1;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
        if (v[i] < 0) return false;
        if (v[i] > 0) {
            if (first < 0) first = i;
            last = i;
        }
    }
    for (int i = first; i >= 0 && i <= last; ++i)
        if (v[i] == 0) return false;
    return true;
}

bool cc_leq(const Vec& v, const Vec& w)
{
    if (v.size() != w.size()) throw std::invalid_argument("cc_leq: length mismatch");
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] * w[j] < v[j] * w[i]) return false;
    return true;
}

static Matrix gap_matrix(const Poset& p, int from, int via, bool before)
{
    int n = p.size();
    Matrix m = Matrix::square(n);
    std::vector<std::uint64_t> c(static_cast<size_t>(n) * n, 0);
    for_each_extension(p, [&](const std::vector<int>& pos) {
        int t = pos[via];
        int i = before ? t - pos[from] : pos[from] - t;
        if (i >= 1) ++c[static_cast<size_t>(i - 1) * n + (t - 1)];
    });
    for (int i = 1; i <= n; ++i)
        for (int t = 1; t <= n; ++t)
            if (auto v = c[static_cast<size_t>(i - 1) * n + (t - 1)]) m(i, t) = BigInt(std::to_string(v));
    return m;
}

Matrix g_matrix(const Poset& p, const ElementTriple& t) { return gap_matrix(p, t.z1, t.z2, true); }

Matrix h_matrix(const Poset& p, const ElementTriple& t) { return gap_matrix(p, t.z3, t.z2, false); }

static int index_in(Mask subset, int x) { return __builtin_popcountll(subset & (bit(x) - 1)); }

Factorization factorize(const Poset& p, const ElementTriple& t)
{
    if (!p.less(t.z1, t.z2) || !p.less(t.z2, t.z3)) throw PreconditionError("factorize needs z1 < z2 < z3");
    Mask x1 = p.all() & ~p.above(t.z2);
    Mask x2 = p.all() & ~p.below(t.z2);
    Factorization f;
    f.q = restrict_to(p, x1);
    f.r = restrict_to(p, x2);
    f.tq = {index_in(x1, t.z1), index_in(x1, t.z2), index_in(x1, t.z2)};
    f.tr = {index_in(x2, t.z2), index_in(x2, t.z2), index_in(x2, t.z3)};
    f.c = less_count(p, t.z2);
    f.gq = g_matrix(f.q, f.tq);
    f.hr = h_matrix(f.r, f.tr);
    return f;
}

Matrix factorized_f(const Factorization& f, int n)
{
    Matrix out = Matrix::square(n);
    for (int i = 1; i <= f.gq.rows(); ++i)
        for (int j = 1; j <= f.hr.rows(); ++j) {
            if (i > n || j > n) continue;
            BigInt s = 0;
            for (int t = 1; t <= f.gq.cols(); ++t) {
                int u = t - f.c;
                if (u < 1 || u > f.hr.cols()) continue;
                mpz_addmul(s.get_mpz_t(), f.gq(i, t).get_mpz_t(), f.hr(j, u).get_mpz_t());
            }
            out(i, j) = s;
        }
    return out;
}

bool factorization_check(const Poset& p, const ChainDecomposition&, const ElementTriple& t)
{
    auto pn = normalize_triple(p, t);
    if (!pn) return true;
    Factorization f = factorize(*pn, t);
    Matrix fm = factorized_f(f, p.size());
    CorrelationTable tab = correlation_table(*pn, std::nullopt, t, false);
    Matrix direct = Matrix::square(p.size());
    for (auto& kv : tab.entries) {
        auto [i, j] = kv.first;
        if (i > p.size() || j > p.size()) return false;
        direct(i, j) = kv.second.at_one();
    }
    return fm == direct;
}

BigInt minor2(const Matrix& m, int i, int j, int k, int l)
{
    return m(i, j) * m(k, l) - m(i, l) * m(k, j);
}

std::optional<MinorIndex> minor_sign_scan(const Matrix& m, Sign expected)
{
    bool small = true;
    std::vector<std::int64_t> v(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 1; i <= m.rows() && small; ++i)
        for (int j = 1; j <= m.cols(); ++j) {
            if (!m(i, j).fits_slong_p()) {
                small = false;
                break;
            }
            v[static_cast<size_t>(i - 1) * m.cols() + (j - 1)] = m(i, j).get_si();
        }
    auto at = [&](int i, int j) { return static_cast<__int128>(v[static_cast<size_t>(i - 1) * m.cols() + (j - 1)]); };
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            for (int k = i + 1; k <= m.rows(); ++k)
                for (int l = j + 1; l <= m.cols(); ++l) {
                    int s;
                    if (small) {
                        __int128 d = at(i, j) * at(k, l) - at(i, l) * at(k, j);
                        s = d < 0 ? -1 : d > 0;
                    } else {
                        s = sgn(minor2(m, i, j, k, l));
                    }
                    if (expected == Sign::NonNegative ? s < 0 : s > 0) return MinorIndex{i, j, k, l};
                }
    return std::nullopt;
}

}
