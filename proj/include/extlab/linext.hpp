#ifndef EXTLAB_LINEXT_HPP
#define EXTLAB_LINEXT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "extlab/poset.hpp"
#include "extlab/qpoly.hpp"

namespace extlab {

struct EmptyError : std::runtime_error { using std::runtime_error::runtime_error; };
struct TotalOrderError : std::runtime_error { using std::runtime_error::runtime_error; };

// labels[x] is the position of x, in 1..n
struct LinearExtension {
    std::vector<int> labels;

    int size() const { return static_cast<int>(labels.size()); }
    int operator[](int x) const { return labels[x]; }
    std::vector<int> order() const;  // order()[t-1] = element at position t
    friend bool operator==(const LinearExtension& a, const LinearExtension& b) { return a.labels == b.labels; }
};

// default 10^7, overridden by EXTLAB_CAP
std::uint64_t enumeration_cap();
// multinomial bound n!/prod |chain|! over a greedy chain cover
BigInt extension_upper_bound(const Poset& p);

// visits in the deterministic order: backtracking over minimal elements by id.
// The callback gets the position array (1-based positions, indexed by element).
void for_each_extension(const Poset& p, const std::function<void(const std::vector<int>&)>& fn);
std::vector<LinearExtension> enumerate_extensions(const Poset& p);
BigInt count_extensions(const Poset& p);

// Flat cache of all extensions, for sweeps that query many statistics.
class ExtensionSet {
public:
    explicit ExtensionSet(const Poset& p);
    int n() const { return n_; }
    std::size_t count() const { return count_; }
    int pos(std::size_t e, int x) const { return pos_[e * n_ + x]; }
    const std::uint8_t* row(std::size_t e) const { return &pos_[e * n_]; }
    LinearExtension extension(std::size_t e) const;

private:
    int n_;
    std::size_t count_ = 0;
    std::vector<std::uint8_t> pos_;
};

int weight(const LinearExtension& l, const ChainDecomposition& d);

// Sparse table of F_q(i,j), keyed by signed offsets.
struct CorrelationTable {
    ElementTriple triple;
    bool has_q = false;
    std::map<std::pair<int, int>, QPoly> entries;

    QPoly at(int i, int j) const;
    BigInt count(int i, int j) const { return at(i, j).at_one(); }
    BigInt total() const;
    std::string to_json() const;
};

// signed=false keeps only i,j >= 1. With no decomposition the entries are
// plain counts (constant polynomials).
CorrelationTable correlation_table(const Poset& p, const std::optional<ChainDecomposition>& d,
                                   const ElementTriple& t, bool signed_offsets);
CorrelationTable correlation_table(const ExtensionSet& es, const std::optional<ChainDecomposition>& d,
                                   const ElementTriple& t, bool signed_offsets);

struct KahnSaksVector {
    int x = 0, y = 1;
    std::map<int, QPoly> entries;  // k = L(y) - L(x)

    QPoly at(int k) const;
    BigInt count(int k) const { return at(k).at_one(); }
};

KahnSaksVector kahn_saks_vector(const Poset& p, const std::optional<ChainDecomposition>& d, int x, int y);
KahnSaksVector kahn_saks_vector(const ExtensionSet& es, const std::optional<ChainDecomposition>& d, int x, int y);

std::map<std::pair<int, int>, BigInt> r_table(const Poset& p, int x, int z);
std::map<int, BigInt> q_vector(const Poset& p, int x);
std::map<int, BigInt> q_vector(const ExtensionSet& es, int x);
// r_t(i) = #{L : L(beta_k) = i, L(beta_l) = t}; k,l are 1-based chain ranks
std::map<int, BigInt> r_vector(const Poset& p, const ChainDecomposition& d, int k, int l, int t);

using Event = std::function<bool(const LinearExtension&)>;

Rational event_probability(const Poset& p, const Event& event);
// L(alpha_i) < L(beta_j) for every listed (i,j), 1-based
Event forward_event(const ChainDecomposition& d, const std::vector<std::pair<int, int>>& pairs);

struct OneThird {
    std::pair<int, int> pair;
    Rational delta;
};
OneThird one_third_statistic(const Poset& p);

}

#endif
