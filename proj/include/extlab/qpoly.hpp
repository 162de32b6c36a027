#ifndef EXTLAB_QPOLY_HPP
#define EXTLAB_QPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace extlab {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

// Polynomial in q with integer coefficients. Terms are kept sorted by
// exponent with no zero coefficients stored.
class QPoly {
public:
    using Term = std::pair<int, BigInt>;

    QPoly() = default;
    explicit QPoly(const BigInt& c);
    static QPoly monomial(int exp, const BigInt& c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    BigInt coeff(int exp) const;
    int min_exp() const;
    int max_exp() const;
    BigInt at_one() const;

    void add_term(int exp, const BigInt& c);

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b);
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    // multiply by q^k
    QPoly shifted(int k) const;
    // q^shift * p(1/q); shift must be >= max_exp()
    QPoly reversed(int shift) const;

    bool nonnegative() const;  // every coefficient >= 0
    bool nonpositive() const;

    // "c0 + c1*q + c2*q^2", zero prints as "0"
    std::string str() const;
    static QPoly parse(const std::string& s);

private:
    std::vector<Term> terms_;
};

// coefficient-wise a >= b
bool coeff_geq(const QPoly& a, const QPoly& b);

// exact test of a*b <= c*d on nonnegative integers, without allocation when
// the products fit in 128 bits
bool product_leq(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

}

#endif
