#ifndef EXTLAB_INEQUALITY_HPP
#define EXTLAB_INEQUALITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "extlab/linext.hpp"
#include "extlab/poset.hpp"
#include "extlab/qpoly.hpp"

namespace extlab {

struct Witness {
    std::string poset;          // poset text format, replayable
    std::string decomposition;  // "c1 ids|c2 ids", empty when unused
    std::string triple;
    std::string indices;
    std::string lhs, rhs;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string indices, std::string lhs, std::string rhs);
};

// fills the poset/decomposition/triple fields of a witness, if present
Verdict& annotate(Verdict& v, const Poset& p, const std::optional<ChainDecomposition>& d,
                  const std::optional<ElementTriple>& t = std::nullopt);
std::string element_name(int x, const std::optional<ChainDecomposition>& d);
std::string triple_name(const ElementTriple& t, const std::optional<ChainDecomposition>& d);

// F(k,l)F(k+1,l+1) <= F(k,l+1)F(k+1,l), at q = 1
Verdict check_cpc(const CorrelationTable& t, int k, int l);
// unsigned: F(k,l)F(k+i,l+j) <= F(k,l+j)F(k+i,l), all >= 1
// signed:   F(i,j)F(k,l) <= F(i,l)F(k,j), i <= k and j <= l
Verdict check_gcpc(const CorrelationTable& t, int i, int j, int k, int l, bool signed_form);
enum class GcpcRange {
    Positive,   // i,j,k,l >= 1
    Centered,   // sign(i) == sign(j) and sign(k) == sign(l): y between x and z at both diagonal corners
    AllSigned,  // any i <= k, j <= l; fails already on three elements
};
bool centered_quadruple(int i, int j, int k, int l);
// every quadruple of the range over the table's support
Verdict check_gcpc_all(const CorrelationTable& t, GcpcRange range);
// coefficient-wise
Verdict check_qcpc(const CorrelationTable& t, int k, int l);
Verdict check_kahn_saks(const KahnSaksVector& v, int k, bool q_mode);
Verdict cpc_to_ks_reduction(const Poset& p, int x, int z);
Verdict check_stanley(const std::map<int, BigInt>& q);
// equality at i with q(i) > 0 forces q(i-1) = q(i) = q(i+1)
Verdict check_stanley_equality(const std::map<int, BigInt>& q);

enum CpcCase : unsigned { CaseA = 1, CaseB = 2, CaseC = 4, CaseD = 8 };

struct CpcEquality {
    unsigned cases = 0;         // CpcCase bits
    bool equality = false;      // plain counts
    bool q_equality = false;    // F_q(k,l)F_q(k+1,l+1) = F_q(k,l+1)F_q(k+1,l)
    bool displayed_q = false;   // F_q(k,l)F_q(k+1,l+1) = F_q(k,l+1)F_q(k+1,l+1)
    Verdict verdict;
    std::string case_name() const;  // "a", "b", "c", "d", combinations like "ac", or "none"
};

// y_fixed: L(y) is the same in every extension
CpcEquality classify_cpc_equality(const CorrelationTable& tq, bool y_fixed, int k, int l);
CpcEquality classify_cpc_equality(const QPoly& f00, const QPoly& f10, const QPoly& f01, const QPoly& f11, bool y_fixed,
                                  int k, int l);
// width two only; the table is built from d
CpcEquality classify_cpc_equality(const Poset& p, const ChainDecomposition& d, const ElementTriple& t, int k, int l);

using AtomList = std::vector<std::pair<int, int>>;  // (i,j): L(alpha_i) < L(beta_j)
Verdict check_gyy(const Poset& p, const ChainDecomposition& d, const AtomList& a, const AtomList& b);
Verdict check_gyy(const ExtensionSet& es, const ChainDecomposition& d, const AtomList& a, const AtomList& b);

// P[L(x)<L(y), L(x)<L(z)] >= P[L(x)<L(y)] P[L(x)<L(z)]
Verdict check_xyz(const Poset& p, int x, int y, int z, bool strict_if_antichain);
Verdict check_xyz(const ExtensionSet& es, const Poset& p, int x, int y, int z, bool strict_if_antichain);

struct XyzTerm {
    int i, j, k, l;
    BigInt value;  // F(i,l)F(k,j) - F(i,j)F(k,l)
};
// quadrant terms i,j < 0 < k,l with a nonzero product, from the signed table of (y, x, z)
std::vector<XyzTerm> xyz_gcpc_terms(const Poset& p, int x, int y, int z);
std::vector<XyzTerm> xyz_gcpc_terms(const CorrelationTable& signed_yxz);
// e |A and B| - |A| |B|
BigInt xyz_gap(const Poset& p, int x, int y, int z);
// width two: termwise nonnegative and the sum equals the direct gap
Verdict xyz_from_gcpc_decomposition(const Poset& p, int x, int y, int z);
// no width check
Verdict xyz_from_gcpc_decomposition(const ExtensionSet& es, const Poset& p, int x, int y, int z);

// zero entries F(k,l) = 0, k,l >= 1, with nonzero entries weakly below-left and weakly above-right
int telescoping_holes(const CorrelationTable& t);

}

#endif
