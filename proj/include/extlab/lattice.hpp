#ifndef EXTLAB_LATTICE_HPP
#define EXTLAB_LATTICE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extlab/linext.hpp"
#include "extlab/poset.hpp"
#include "extlab/qpoly.hpp"

namespace extlab {

struct OutOfRegionError : std::runtime_error { using std::runtime_error::runtime_error; };
struct GeometryError : std::runtime_error { using std::runtime_error::runtime_error; };

struct Point {
    int x = 0, y = 0;
    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Point a, Point b) { return !(a == b); }
    friend bool operator<(Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

constexpr Point e1{1, 0};
constexpr Point e2{0, 1};

struct LatticePath {
    Point start;
    std::string steps;  // 'E' or 'N'

    Point end() const;
    std::vector<Point> points() const;
    friend bool operator==(const LatticePath& a, const LatticePath& b)
    {
        return a.start == b.start && a.steps == b.steps;
    }
    friend bool operator<(const LatticePath& a, const LatticePath& b)
    {
        return a.start != b.start ? a.start < b.start : a.steps < b.steps;
    }
};

LatticePath translated(const LatticePath& p, Point by);

// Points (h,k) such that {alpha_1..alpha_h, beta_1..beta_k} is a down-set;
// column x is the interval [lo[x], hi[x]] (empty when lo > hi).
struct LatticeRegion {
    int a = 0, b = 0;
    LatticePath lower, upper;
    std::vector<int> lo, hi;
    // forbidden squares, indexed [h-1][k-1]: +1 above the region, -1 below
    std::vector<std::vector<int>> forbidden;

    bool contains(Point p) const;
    bool contains_path(const LatticePath& path) const;
    std::vector<std::string> render(const std::optional<LatticePath>& overlay = std::nullopt) const;
};

LatticeRegion region_of(const Poset& p, const ChainDecomposition& d);

LatticePath path_of_extension(const LinearExtension& l, const ChainDecomposition& d);
LinearExtension extension_of_path(const LatticePath& g, const Poset& p, const ChainDecomposition& d);

// sum over E steps of the height of the step
int path_weight(const LatticePath& g);

QPoly count_paths(const LatticeRegion& r, Point A, Point B, bool q);
std::vector<LatticePath> enumerate_paths(const LatticeRegion& r, Point A, Point B);

// Cached K_q(A,B) for every pair of region points.
class PathCounter {
public:
    PathCounter(const LatticeRegion& r, bool q);
    const QPoly& K(Point A, Point B) const;
    const LatticeRegion& region() const { return r_; }

private:
    int idx(Point p) const { return p.x * (r_.b + 1) + p.y; }
    LatticeRegion r_;
    bool q_;
    std::vector<std::vector<QPoly>> table_;
    QPoly zero_;
};

enum class KappaCase { A, B };

struct PathPair {
    LatticePath gamma, zeta;
    friend bool operator==(const PathPair& x, const PathPair& y) { return x.gamma == y.gamma && x.zeta == y.zeta; }
    friend bool operator<(const PathPair& x, const PathPair& y)
    {
        return x.gamma == y.gamma ? x.zeta < y.zeta : x.gamma < y.gamma;
    }
};

struct InjectionTable {
    std::vector<std::pair<PathPair, std::optional<PathPair>>> map;  // nullopt: construction failed
    bool injective = true;
    bool weight_preserved = true;
    bool in_target = true;
    bool ok() const { return injective && weight_preserved && in_target; }
};

InjectionTable kappa_vertical(const LatticeRegion& r, Point A, Point B, Point C, Point D, KappaCase c);
InjectionTable kappa_horizontal(const LatticeRegion& r, Point A, Point B, Point C, Point D, KappaCase c);

// equality dichotomy for the vertical lemma, evaluated on plain counts
bool equality_dichotomy(const PathCounter& k, Point A, Point B, Point C, Point D, KappaCase c);

// Half-path decomposition of F_q for a fixed triple. When z2 lies in C2 the
// chains are swapped first; raw polynomials use the swapped weight.
class CrossDecomposition {
public:
    CrossDecomposition(const Poset& p, const ChainDecomposition& d, const ElementTriple& t);

    bool swapped() const { return swapped_; }
    const ChainDecomposition& chains() const { return d_; }
    const LatticeRegion& region() const { return counter_.region(); }
    int ell() const { return ell_; }
    Point Y(int u) const { return {ell_ - 1, u - ell_}; }

    QPoly g_q(int i, Point Y) const;
    QPoly h_q(int j, Point Y) const;
    QPoly gcp_q(int i, Point Y, Point V) const;
    QPoly hcp_q(int j, Point Y, Point V) const;

    QPoly f_q_raw(int i, int j) const;
    // in the original decomposition's weight
    QPoly f_q(int i, int j) const;
    // F(i,j)F(i+1,j+1) - F(i+1,j)F(i,j+1) via the GCP/HCP expansion, raw weight
    QPoly cross_difference_raw(int i, int j) const;

private:
    void check_column(Point Y, Point V) const;

    int n_;
    bool swapped_;
    ChainDecomposition d_;
    ElementTriple t_;
    PathCounter counter_;
    int ell_;
};

}

#endif
