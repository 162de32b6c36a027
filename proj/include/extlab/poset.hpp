#ifndef EXTLAB_POSET_HPP
#define EXTLAB_POSET_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extlab {

struct CycleError : std::runtime_error { using std::runtime_error::runtime_error; };
struct WidthError : std::runtime_error { using std::runtime_error::runtime_error; };
struct CapError : std::runtime_error { using std::runtime_error::runtime_error; };
struct IndexError : std::out_of_range { using std::out_of_range::out_of_range; };
struct ParseError : std::runtime_error { using std::runtime_error::runtime_error; };

constexpr int kMaxElements = 64;

using Mask = std::uint64_t;

inline Mask bit(int x) { return Mask(1) << x; }

// Strict partial order on {0..n-1}, stored transitively closed as bitmasks.
class Poset {
public:
    Poset() = default;
    explicit Poset(int n);

    int size() const { return n_; }
    bool less(int x, int y) const { return (below_[y] >> x) & 1; }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
    Mask below(int x) const { return below_[x]; }
    Mask above(int x) const { return above_[x]; }
    Mask all() const { return n_ == 64 ? ~Mask(0) : bit(n_) - 1; }

    std::vector<std::vector<bool>> relation_table() const;
    // cover pairs (x,y), sorted
    std::vector<std::pair<int, int>> covers() const;

    friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.below_ == b.below_; }
    friend bool operator!=(const Poset& a, const Poset& b) { return !(a == b); }
    friend bool operator<(const Poset& a, const Poset& b);

    // builds from arbitrary relation pairs; closes and checks for cycles
    static Poset from_relations(int n, const std::vector<std::pair<int, int>>& rel);

private:
    void assert_valid() const;

    int n_ = 0;
    std::vector<Mask> below_;
    std::vector<Mask> above_;
};

struct ChainDecomposition {
    std::vector<int> c1;  // alpha_1 < ... < alpha_a
    std::vector<int> c2;  // beta_1 < ... < beta_b

    int a() const { return static_cast<int>(c1.size()); }
    int b() const { return static_cast<int>(c2.size()); }
    bool in_c1(int x) const;
    // 1-based rank inside its own chain
    int rank(int x) const;
    ChainDecomposition swapped() const { return {c2, c1}; }
    std::string str() const;

    friend bool operator==(const ChainDecomposition& x, const ChainDecomposition& y)
    {
        return x.c1 == y.c1 && x.c2 == y.c2;
    }
};

struct ElementTriple {
    int z1 = 0, z2 = 1, z3 = 2;
};

bool valid_decomposition(const Poset& p, const ChainDecomposition& d);

Poset poset_from_cover_relations(int n, const std::vector<std::pair<int, int>>& covers);
int width(const Poset& p);
ChainDecomposition chain_decomposition_width_two(const Poset& p);
Poset dual(const Poset& p);
Poset restrict_to(const Poset& p, Mask subset);
std::pair<Poset, int> adjoin_incomparable(const Poset& p);
std::pair<Poset, int> adjoin_global_min(const Poset& p);
int less_count(const Poset& p, int x);
int inc_count(const Poset& p, int x);

// adds z1 < z2 < z3; nullopt when that would create a cycle
std::optional<Poset> normalize_triple(const Poset& p, const ElementTriple& t);

struct WidthTwoInstance {
    Poset poset;
    ChainDecomposition chains;
};

// alpha_h gets id h-1, beta_k gets id a+k-1
void for_each_width_two_poset(int a, int b, const std::function<void(const WidthTwoInstance&)>& fn,
                              int cap = 10);
std::vector<WidthTwoInstance> enumerate_width_two_posets(int a, int b, int cap = 10);
// all (a,b) with a+b == n, a ascending
std::vector<WidthTwoInstance> width_two_posets_of_size(int n, int cap = 10);

Poset random_poset(int n, double edge_prob, std::uint64_t seed);

// lexicographically minimal relation code over all relabelings
std::string canonical_form(const Poset& p);
// one representative per isomorphism class, sorted by canonical form
std::vector<Poset> all_posets(int n);

// "n;x<y,x<y" with cover relations
std::string to_text(const Poset& p);
Poset parse_poset(const std::string& line);

}

#endif
