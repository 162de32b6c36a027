#include "extlab/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace extlab {

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

QPoly::QPoly(const BigInt& c)
{
    if (c != 0) terms_.emplace_back(0, c);
}

QPoly QPoly::monomial(int exp, const BigInt& c)
{
    if (exp < 0) throw std::invalid_argument("negative exponent");
    QPoly p;
    if (c != 0) p.terms_.emplace_back(exp, c);
    return p;
}

BigInt QPoly::coeff(int exp) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

int QPoly::min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }

int QPoly::max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

BigInt QPoly::at_one() const
{
    BigInt s = 0;
    for (auto& t : terms_) s += t.second;
    return s;
}

void QPoly::add_term(int exp, const BigInt& c)
{
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term(exp, c));
    }
}

static std::vector<QPoly::Term> merge(const std::vector<QPoly::Term>& a,
                                      const std::vector<QPoly::Term>& b, int sign)
{
    std::vector<QPoly::Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, sign > 0 ? BigInt(b[j].second) : BigInt(-b[j].second));
            ++j;
        } else {
            BigInt c = sign > 0 ? BigInt(a[i].second + b[j].second) : BigInt(a[i].second - b[j].second);
            if (c != 0) out.emplace_back(a[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

QPoly& QPoly::operator+=(const QPoly& o)
{
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o)
{
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b)
{
    QPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    int lo = a.min_exp() + b.min_exp();
    int hi = a.max_exp() + b.max_exp();
    std::vector<BigInt> acc(hi - lo + 1);
    for (auto& s : a.terms_)
        for (auto& t : b.terms_)
            mpz_addmul(acc[s.first + t.first - lo].get_mpz_t(), s.second.get_mpz_t(), t.second.get_mpz_t());
    for (int e = lo; e <= hi; ++e)
        if (acc[e - lo] != 0) r.terms_.emplace_back(e, std::move(acc[e - lo]));
    return r;
}

bool operator==(const QPoly& a, const QPoly& b) { return a.terms_ == b.terms_; }

QPoly QPoly::shifted(int k) const
{
    QPoly r = *this;
    for (auto& t : r.terms_) {
        t.first += k;
        if (t.first < 0) throw std::invalid_argument("negative exponent");
    }
    return r;
}

QPoly QPoly::reversed(int shift) const
{
    if (!terms_.empty() && max_exp() > shift) throw std::invalid_argument("reverse shift too small");
    QPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.emplace_back(shift - it->first, it->second);
    return r;
}

bool QPoly::nonnegative() const
{
    for (auto& t : terms_)
        if (t.second < 0) return false;
    return true;
}

bool QPoly::nonpositive() const
{
    for (auto& t : terms_)
        if (t.second > 0) return false;
    return true;
}

std::string QPoly::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        BigInt c = t.second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        os << c.get_str();
        if (t.first == 1) os << "*q";
        else if (t.first > 1) os << "*q^" << t.first;
    }
    return os.str();
}

QPoly QPoly::parse(const std::string& s)
{
    // accepts the output of str(); bare "q" and "q^k" also allowed
    QPoly r;
    size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto fail = [&] { throw std::invalid_argument("bad polynomial: " + s); };
    int sign = 1;
    skip();
    if (i < s.size() && s[i] == '-') {
        sign = -1;
        ++i;
    }
    while (true) {
        skip();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        BigInt c = 1;
        int e = 0;
        if (!digits.empty()) c = BigInt(digits);
        skip();
        bool have_q = false;
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip();
            if (i >= s.size() || s[i] != 'q') fail();
        }
        if (i < s.size() && s[i] == 'q') {
            have_q = true;
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string ed;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
                if (ed.empty()) fail();
                e = std::stoi(ed);
            }
        }
        if (digits.empty() && !have_q) fail();
        r.add_term(e, sign * c);
        skip();
        if (i >= s.size()) break;
        if (s[i] == '+') sign = 1;
        else if (s[i] == '-') sign = -1;
        else fail();
        ++i;
    }
    return r;
}

bool coeff_geq(const QPoly& a, const QPoly& b) { return (a - b).nonnegative(); }

bool product_leq(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
{
    using u128 = unsigned __int128;
    return static_cast<u128>(a) * b <= static_cast<u128>(c) * d;
}

}
