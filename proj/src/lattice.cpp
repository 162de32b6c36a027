#include "extlab/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "extlab/charmatrix.hpp"

namespace extlab {

Point LatticePath::end() const
{
    Point p = start;
    for (char s : steps) p = p + (s == 'E' ? e1 : e2);
    return p;
}

std::vector<Point> LatticePath::points() const
{
    std::vector<Point> pts{start};
    for (char s : steps) pts.push_back(pts.back() + (s == 'E' ? e1 : e2));
    return pts;
}

LatticePath translated(const LatticePath& p, Point by) { return {p.start + by, p.steps}; }

bool LatticeRegion::contains(Point p) const
{
    if (p.x < 0 || p.y < 0 || p.x > a || p.y > b) return false;
    return lo[p.x] <= p.y && p.y <= hi[p.x];
}

bool LatticeRegion::contains_path(const LatticePath& path) const
{
    for (Point q : path.points())
        if (!contains(q)) return false;
    return true;
}

std::vector<std::string> LatticeRegion::render(const std::optional<LatticePath>& overlay) const
{
    int W = 2 * a + 1, H = 2 * b + 1;
    std::vector<std::string> g(H, std::string(W, ' '));
    auto cell = [&](int cx, int cy) -> char& { return g[H - 1 - cy][cx]; };
    for (int h = 1; h <= a; ++h)
        for (int k = 1; k <= b; ++k) cell(2 * h - 1, 2 * k - 1) = forbidden[h - 1][k - 1] ? '#' : '.';
    for (int x = 0; x <= a; ++x)
        for (int y = 0; y <= b; ++y) cell(2 * x, 2 * y) = contains(Point{x, y}) ? '+' : ' ';
    if (overlay) {
        auto pts = overlay->points();
        for (size_t i = 0; i < pts.size(); ++i) {
            cell(2 * pts[i].x, 2 * pts[i].y) = '*';
            if (i + 1 < pts.size()) cell(pts[i].x + pts[i + 1].x, pts[i].y + pts[i + 1].y) = '*';
        }
    }
    return g;
}

static bool is_down_set(const Poset& p, const ChainDecomposition& d, int h, int k)
{
    Mask s = 0;
    for (int i = 0; i < h; ++i) s |= bit(d.c1[i]);
    for (int j = 0; j < k; ++j) s |= bit(d.c2[j]);
    for (int i = 0; i < h; ++i)
        if (p.below(d.c1[i]) & ~s) return false;
    for (int j = 0; j < k; ++j)
        if (p.below(d.c2[j]) & ~s) return false;
    return true;
}

LatticeRegion region_of(const Poset& p, const ChainDecomposition& d)
{
    if (!valid_decomposition(p, d)) throw std::invalid_argument("invalid chain decomposition");
    LatticeRegion r;
    r.a = d.a();
    r.b = d.b();
    r.lo.assign(r.a + 1, r.b + 1);
    r.hi.assign(r.a + 1, -1);
    for (int x = 0; x <= r.a; ++x)
        for (int y = 0; y <= r.b; ++y)
            if (is_down_set(p, d, x, y)) {
                r.lo[x] = std::min(r.lo[x], y);
                r.hi[x] = std::max(r.hi[x], y);
            }
    r.forbidden.assign(r.a, std::vector<int>(r.b, 0));
    for (int h = 1; h <= r.a; ++h)
        for (int k = 1; k <= r.b; ++k) {
            if (p.less(d.c1[h - 1], d.c2[k - 1])) r.forbidden[h - 1][k - 1] = 1;
            else if (p.less(d.c2[k - 1], d.c1[h - 1])) r.forbidden[h - 1][k - 1] = -1;
        }
    r.upper = path_of_extension(minimal_extension(p, d), d);
    r.lower = path_of_extension(minimal_extension(p, d.swapped()), d);
    return r;
}

LatticePath path_of_extension(const LinearExtension& l, const ChainDecomposition& d)
{
    LatticePath g;
    for (int x : l.order()) g.steps += d.in_c1(x) ? 'E' : 'N';
    return g;
}

LinearExtension extension_of_path(const LatticePath& g, const Poset& p, const ChainDecomposition& d)
{
    if (g.start != Point{0, 0} || g.end() != Point{d.a(), d.b()})
        throw OutOfRegionError("path does not run from (0,0) to (a,b)");
    if (!region_of(p, d).contains_path(g)) throw OutOfRegionError("path leaves the region");
    LinearExtension l;
    l.labels.assign(p.size(), 0);
    int h = 0, k = 0, t = 1;
    for (char s : g.steps) l.labels[s == 'E' ? d.c1[h++] : d.c2[k++]] = t++;
    return l;
}

int path_weight(const LatticePath& g)
{
    int w = 0;
    Point p = g.start;
    for (char s : g.steps) {
        if (s == 'E') {
            w += p.y;
            p = p + e1;
        } else {
            p = p + e2;
        }
    }
    return w;
}

static std::vector<QPoly> dp_from(const LatticeRegion& r, Point A, bool q)
{
    int H = r.b + 1;
    std::vector<QPoly> dp(static_cast<size_t>(r.a + 1) * H);
    if (!r.contains(A)) return dp;
    for (int x = A.x; x <= r.a; ++x)
        for (int y = A.y; y <= r.b; ++y) {
            Point P{x, y};
            if (!r.contains(P)) continue;
            QPoly& cur = dp[x * H + y];
            if (P == A) {
                cur = QPoly(1);
                continue;
            }
            if (x > A.x && r.contains(P - e1)) cur += q ? dp[(x - 1) * H + y].shifted(y) : dp[(x - 1) * H + y];
            if (y > A.y && r.contains(P - e2)) cur += dp[x * H + y - 1];
        }
    return dp;
}

QPoly count_paths(const LatticeRegion& r, Point A, Point B, bool q)
{
    if (!r.contains(A) || !r.contains(B) || B.x < A.x || B.y < A.y) return QPoly();
    return dp_from(r, A, q)[B.x * (r.b + 1) + B.y];
}

std::vector<LatticePath> enumerate_paths(const LatticeRegion& r, Point A, Point B)
{
    std::vector<LatticePath> out;
    if (!r.contains(A) || !r.contains(B)) return out;
    std::string steps;
    std::function<void(Point)> rec = [&](Point P) {
        if (P == B) {
            out.push_back({A, steps});
            return;
        }
        for (char s : {'E', 'N'}) {
            Point Q = P + (s == 'E' ? e1 : e2);
            if (Q.x > B.x || Q.y > B.y || !r.contains(Q)) continue;
            steps.push_back(s);
            rec(Q);
            steps.pop_back();
        }
    };
    rec(A);
    return out;
}

PathCounter::PathCounter(const LatticeRegion& r, bool q) : r_(r), q_(q)
{
    int npts = (r_.a + 1) * (r_.b + 1);
    table_.resize(npts);
    for (int x = 0; x <= r_.a; ++x)
        for (int y = 0; y <= r_.b; ++y)
            if (r_.contains(Point{x, y})) table_[idx({x, y})] = dp_from(r_, {x, y}, q_);
}

const QPoly& PathCounter::K(Point A, Point B) const
{
    if (!r_.contains(A) || !r_.contains(B) || B.x < A.x || B.y < A.y) return zero_;
    return table_[idx(A)][idx(B)];
}

namespace {

struct Surgery {
    Point shift;     // zeta' = zeta + shift
    bool head_swap;  // first intersection, swap heads; else last intersection, swap tails
};

std::optional<Point> meet(const LatticePath& g, const LatticePath& z, bool first)
{
    auto gp = g.points();
    std::set<Point> on_g(gp.begin(), gp.end());
    std::optional<Point> found;
    for (Point p : z.points()) {
        if (!on_g.count(p)) continue;
        found = p;
        if (first) break;
    }
    return found;
}

LatticePath head(const LatticePath& p, Point upto)
{
    LatticePath out{p.start, ""};
    Point cur = p.start;
    for (char s : p.steps) {
        if (cur == upto) break;
        out.steps += s;
        cur = cur + (s == 'E' ? e1 : e2);
    }
    return out;
}

std::string tail_steps(const LatticePath& p, Point from)
{
    Point cur = p.start;
    size_t i = 0;
    while (cur != from && i < p.steps.size()) cur = cur + (p.steps[i++] == 'E' ? e1 : e2);
    return p.steps.substr(i);
}

std::optional<PathPair> apply_surgery(const LatticePath& g, const LatticePath& z, const Surgery& s)
{
    LatticePath zp = translated(z, s.shift);
    auto E = meet(g, zp, s.head_swap);
    if (!E) return std::nullopt;
    Point Eb = *E - s.shift;  // the matching point on zeta and on gamma - shift
    LatticePath gm = translated(g, Point{0, 0} - s.shift);
    PathPair out;
    if (s.head_swap) {
        out.gamma = head(zp, *E);
        out.gamma.steps += tail_steps(g, *E);
        out.zeta = head(gm, Eb);
        out.zeta.steps += tail_steps(z, Eb);
    } else {
        out.gamma = head(g, *E);
        out.gamma.steps += tail_steps(zp, *E);
        out.zeta = head(z, Eb);
        out.zeta.steps += tail_steps(gm, Eb);
    }
    return out;
}

InjectionTable run_injection(const LatticeRegion& r, Point A, Point B, Point C, Point D, Point A2, Point B2,
                             Point C2, Point D2, const Surgery& s)
{
    InjectionTable tab;
    auto gs = enumerate_paths(r, A, C);
    auto zs = enumerate_paths(r, B, D);
    std::vector<PathPair> images;
    for (auto& g : gs)
        for (auto& z : zs) {
            auto img = apply_surgery(g, z, s);
            tab.map.push_back({PathPair{g, z}, img});
            if (!img) {
                tab.in_target = false;
                continue;
            }
            if (img->gamma.start != A2 || img->gamma.end() != C2 || img->zeta.start != B2 || img->zeta.end() != D2 ||
                !r.contains_path(img->gamma) || !r.contains_path(img->zeta))
                tab.in_target = false;
            if (path_weight(g) + path_weight(z) != path_weight(img->gamma) + path_weight(img->zeta))
                tab.weight_preserved = false;
            images.push_back(*img);
        }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) tab.injective = false;
    return tab;
}

void check_vertical(const LatticeRegion& r, Point A, Point B, Point C, Point D, KappaCase c)
{
    for (Point p : {A, B, C, D})
        if (!r.contains(p)) throw PreconditionError("kappa: point outside the region");
    if (A.x != B.x || C.x != D.x || C.x < A.x || A.y < B.y || C.y < D.y)
        throw PreconditionError("kappa_vertical: A above B on one vertical line, C above D on a line to the right");
    int ab = A.y - B.y, cd = C.y - D.y;
    if (c == KappaCase::A ? !(ab > cd) : !(cd > ab)) throw PreconditionError("kappa_vertical: case constraint fails");
}

void check_horizontal(const LatticeRegion& r, Point A, Point B, Point C, Point D, KappaCase c)
{
    for (Point p : {A, B, C, D})
        if (!r.contains(p)) throw PreconditionError("kappa: point outside the region");
    if (A.y != B.y || A.x > B.x || C.x != D.x || C.y > D.y || C.y < A.y)
        throw PreconditionError("kappa_horizontal: A left of B on one horizontal line, C below D above it");
    if (c == KappaCase::A ? !(B.x - A.x > 0) : !(D.y - C.y > 0))
        throw PreconditionError("kappa_horizontal: case constraint fails");
}

}

InjectionTable kappa_vertical(const LatticeRegion& r, Point A, Point B, Point C, Point D, KappaCase c)
{
    check_vertical(r, A, B, C, D, c);
    if (c == KappaCase::A)
        return run_injection(r, A, B, C, D, A - e2, B + e2, C, D, {Point{0, A.y - B.y - 1}, true});
    return run_injection(r, A, B, C, D, A, B, C - e2, D + e2, {Point{0, C.y - D.y - 1}, false});
}

InjectionTable kappa_horizontal(const LatticeRegion& r, Point A, Point B, Point C, Point D, KappaCase c)
{
    check_horizontal(r, A, B, C, D, c);
    if (c == KappaCase::A)
        return run_injection(r, A, B, C, D, A + e1, B - e1, C, D, {Point{-(B.x - A.x - 1), 0}, true});
    return run_injection(r, A, B, C, D, A, B, C + e2, D - e2, {Point{0, -(D.y - C.y - 1)}, false});
}

bool equality_dichotomy(const PathCounter& k, Point A, Point B, Point C, Point D, KappaCase c)
{
    check_vertical(k.region(), A, B, C, D, c);
    auto K = [&](Point p, Point q) { return k.K(p, q).at_one(); };
    BigInt rhs = K(A, C) * K(B, D);
    if (c == KappaCase::A) {
        BigInt lhs = K(A - e2, C) * K(B + e2, D);
        if (lhs != rhs) return true;
        return rhs == 0 || (K(A - e2, C) == K(A, C) && K(B + e2, D) == K(B, D) && K(B, D) == K(A, D));
    }
    BigInt lhs = K(A, C - e2) * K(B, D + e2);
    if (lhs != rhs) return true;
    return rhs == 0 || (K(A, C - e2) == K(A, C) && K(A, C) == K(A, D) && K(B, D + e2) == K(B, D));
}

CrossDecomposition::CrossDecomposition(const Poset& p, const ChainDecomposition& d, const ElementTriple& t)
    : n_(p.size()),
      swapped_(!d.in_c1(t.z2)),
      d_(swapped_ ? d.swapped() : d),
      t_(t),
      counter_(region_of(p, d_), true),
      ell_(d_.rank(t.z2))
{
    if (t.z1 == t.z2 || t.z2 == t.z3 || t.z1 == t.z3) throw std::invalid_argument("triple elements must be distinct");
}

QPoly CrossDecomposition::g_q(int i, Point Y) const
{
    const LatticeRegion& r = region();
    if (!r.contains(Y)) return QPoly();
    int k = d_.rank(t_.z1);
    Point I, U;
    if (d_.in_c1(t_.z1)) {
        I = {Y.x - k + 1, i - Y.x + k - 1};
        U = e1;
    } else {
        I = {i - Y.y + k - 1, Y.y - k + 1};
        U = e2;
    }
    Point P1 = Y - I, P2 = P1 + U;
    if (!r.contains(P1) || !r.contains(P2)) return QPoly();
    QPoly head = counter_.K({0, 0}, P1);
    if (U == e1) head = head.shifted(P1.y);
    return head * counter_.K(P2, Y);
}

QPoly CrossDecomposition::h_q(int j, Point Y) const
{
    const LatticeRegion& r = region();
    Point Y1 = Y + e1;
    if (!r.contains(Y) || !r.contains(Y1)) return QPoly();
    int m = d_.rank(t_.z3);
    Point J, U;
    if (d_.in_c1(t_.z3)) {
        J = {m - Y.x - 1, j + Y.x - m + 1};
        U = e1;
    } else {
        J = {j + Y.y - m + 1, m - Y.y - 1};
        U = e2;
    }
    Point Q1 = Y + J, Q2 = Q1 + U;
    if (!r.contains(Q1) || !r.contains(Q2)) return QPoly();
    QPoly mid = counter_.K(Y1, Q1);
    if (U == e1) mid = mid.shifted(Q1.y);
    return mid * counter_.K(Q2, {r.a, r.b});
}

void CrossDecomposition::check_column(Point Y, Point V) const
{
    if (Y.x != V.x || Y.y > V.y) throw GeometryError("Y and V must share a vertical line with Y below V");
}

QPoly CrossDecomposition::gcp_q(int i, Point Y, Point V) const
{
    check_column(Y, V);
    return g_q(i, Y) * g_q(i + 1, V) - g_q(i + 1, Y) * g_q(i, V);
}

QPoly CrossDecomposition::hcp_q(int j, Point Y, Point V) const
{
    check_column(Y, V);
    return h_q(j, Y) * h_q(j + 1, V) - h_q(j + 1, Y) * h_q(j, V);
}

QPoly CrossDecomposition::f_q_raw(int i, int j) const
{
    int a = d_.a();
    QPoly s;
    for (int u = ell_; u <= ell_ + d_.b(); ++u) {
        Point Yu = Y(u);
        QPoly g = g_q(i, Yu);
        if (g.is_zero()) continue;
        s += (g * h_q(j, Yu)).shifted(u - ell_);
    }
    return s.shifted(a * (a + 1) / 2);
}

QPoly CrossDecomposition::f_q(int i, int j) const
{
    QPoly raw = f_q_raw(i, j);
    return swapped_ ? raw.reversed(n_ * (n_ + 1) / 2) : raw;
}

QPoly CrossDecomposition::cross_difference_raw(int i, int j) const
{
    int a = d_.a();
    QPoly s;
    for (int u = ell_; u <= ell_ + d_.b(); ++u)
        for (int w = u + 1; w <= ell_ + d_.b(); ++w) {
            QPoly g = gcp_q(i, Y(u), Y(w));
            if (g.is_zero()) continue;
            s += (g * hcp_q(j, Y(u), Y(w))).shifted(u + w - 2 * ell_);
        }
    return s.shifted(a * (a + 1));
}

}
