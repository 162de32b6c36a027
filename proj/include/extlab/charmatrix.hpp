#ifndef EXTLAB_CHARMATRIX_HPP
#define EXTLAB_CHARMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "extlab/linext.hpp"
#include "extlab/poset.hpp"
#include "extlab/qpoly.hpp"

namespace extlab {

struct DimError : std::runtime_error { using std::runtime_error::runtime_error; };
struct EmptyChainError : std::runtime_error { using std::runtime_error::runtime_error; };
struct PreconditionError : std::runtime_error { using std::runtime_error::runtime_error; };

// Dense rows x cols integer matrix, 1-based indexing.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
    static Matrix square(int n) { return Matrix(n, n); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& operator()(int i, int j) { return data_[static_cast<size_t>(i - 1) * cols_ + (j - 1)]; }
    const BigInt& operator()(int i, int j) const { return data_[static_cast<size_t>(i - 1) * cols_ + (j - 1)]; }
    // zero outside the stored range
    BigInt get(int i, int j) const;

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    // no entry at (i,j) with i > j+1
    bool is_banded() const;
    // same entries on the common top-left block, zeros elsewhere
    bool agrees_with(const Matrix& o) const;
    std::string to_json() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> data_;
};

using Vec = std::vector<BigInt>;  // entry v(i) at index i-1

Matrix build_S(int N);
Matrix build_T(int N);
Matrix build_Wk(int N, int k);
Matrix build_U(int N);
Vec apply(const Matrix& m, const Vec& v);

LinearExtension minimal_extension(const Poset& p, const ChainDecomposition& d);

struct CharSequence {
    enum class Kind { S, WT, W };
    struct Factor {
        Kind kind;
        int k;  // W_k index; unused for S
        Matrix m;
    };
    std::vector<Factor> mats;
    int d = 0;
    int dim = 0;
};

// N defaults to n+2
CharSequence characteristic_sequence(const Poset& p, const ChainDecomposition& d, int N = 0);
Matrix n_matrix_product(const CharSequence& seq);
Matrix n_matrix_bruteforce(const Poset& p, const ChainDecomposition& d, int N = 0);

bool is_admissible(const Vec& v);
bool cc_leq(const Vec& v, const Vec& w);

// rows are offsets i = 1..n-1 (stored 1..n), columns positions t = 1..n
Matrix g_matrix(const Poset& p, const ElementTriple& t);
Matrix h_matrix(const Poset& p, const ElementTriple& t);

struct Factorization {
    Poset q, r;
    ElementTriple tq, tr;  // triple re-indexed inside Q and R
    int c = 0;             // less_count(P, z2)
    Matrix gq, hr;
};
// p must already contain z1 < z2 < z3
Factorization factorize(const Poset& p, const ElementTriple& t);
// F(i,j) = sum_t G_Q(i,t) H_R(j,t-c)
Matrix factorized_f(const Factorization& f, int n);
bool factorization_check(const Poset& p, const ChainDecomposition& d, const ElementTriple& t);

struct MinorIndex {
    int i, j, k, l;  // rows i<k, columns j<l
    friend bool operator==(const MinorIndex& a, const MinorIndex& b)
    {
        return a.i == b.i && a.j == b.j && a.k == b.k && a.l == b.l;
    }
};
enum class Sign { NonNegative, NonPositive };
BigInt minor2(const Matrix& m, int i, int j, int k, int l);
std::optional<MinorIndex> minor_sign_scan(const Matrix& m, Sign expected);

}

#endif
