#pragma once

#include <complex>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alcomb/detail.hpp"

namespace alcomb {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer-coefficient polynomial, index = exponent.  Canonical form
// trims trailing zero coefficients; the zero polynomial has degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return monomial(0, 1); }
    static IntPolynomial monomial(std::size_t exp, BigInt c) {
        std::vector<BigInt> v(exp + 1);
        v[exp] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    // -1 is the sentinel degree of the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const BigInt& coeff(std::size_t exp) const {
        static const BigInt kZero = 0;
        return exp < coeffs_.size() ? coeffs_[exp] : kZero;
    }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    BigInt value_at_one() const {
        BigInt s = 0;
        for (const BigInt& c : coeffs_) s += c;
        return s;
    }

    std::complex<double> evaluate(std::complex<double> q) const {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * q + std::complex<double>(coeffs_[i].convert_to<double>(), 0.0);
        return acc;
    }

    IntPolynomial operator+(const IntPolynomial& rhs) const {
        std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + rhs.coeff(i);
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator-(const IntPolynomial& rhs) const {
        std::vector<BigInt> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - rhs.coeff(i);
        return IntPolynomial(std::move(v));
    }

    IntPolynomial operator*(const IntPolynomial& rhs) const {
        if (is_zero() || rhs.is_zero()) return zero();
        std::vector<BigInt> v(coeffs_.size() + rhs.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
                v[i + j] += coeffs_[i] * rhs.coeffs_[j];
        return IntPolynomial(std::move(v));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            BigInt c = coeffs_[i];
            if (first) {
                if (c < 0) out << "-", c = -c;
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            if (i == 0) out << c;
            else {
                if (c != 1) out << c << "*";
                out << "q";
                if (i > 1) out << "^" << i;
            }
            first = false;
        }
        return out.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<BigInt> coeffs_;
};

// Long division by a monic divisor; quotient and remainder stay integral.
struct PolyDivResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

inline PolyDivResult poly_divmod_monic(const IntPolynomial& num, const IntPolynomial& divisor) {
    detail::require(!divisor.is_zero(), "poly_divmod_monic: division by zero");
    detail::require(divisor.coeffs().back() == 1, "poly_divmod_monic: divisor must be monic");
    std::vector<BigInt> rem = num.coeffs();
    const int dd = divisor.degree();
    std::vector<BigInt> quo(num.degree() >= dd ? num.degree() - dd + 1 : 0);
    for (int i = num.degree(); i >= dd; --i) {
        BigInt c = rem[i];
        if (c == 0) continue;
        quo[i - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * divisor.coeffs()[j];
    }
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

// W_m^k(q) = prod_{i=1}^{k} (1 + q^i + q^{2i} + ... + q^{(m-1)i}).  Each
// factor is the geometric closed form of (1-q^{mi})/(1-q^i), so the product
// is assembled without any polynomial division.  Value at q=1 is m^k.
inline IntPolynomial w_poly(int m, int k) {
    detail::require(m >= 1 && k >= 0, "w_poly: need m >= 1, k >= 0");
    IntPolynomial acc = IntPolynomial::one();
    for (int i = 1; i <= k; ++i) {
        std::vector<BigInt> factor(static_cast<std::size_t>(m - 1) * i + 1);
        for (int j = 0; j < m; ++j) factor[static_cast<std::size_t>(j) * i] = 1;
        acc = acc * IntPolynomial(std::move(factor));
    }
    return acc;
}

// d-th cyclotomic polynomial, by exact division of q^d - 1 by the product
// of cyclotomic(e) over proper divisors e of d.
inline IntPolynomial cyclotomic(int d) {
    detail::require(d >= 1, "cyclotomic: need d >= 1");
    std::vector<BigInt> qd(d + 1);
    qd[0] = -1;
    qd[d] = 1;
    IntPolynomial num{std::move(qd)};
    IntPolynomial den = IntPolynomial::one();
    for (int e = 1; e < d; ++e)
        if (d % e == 0) den = den * cyclotomic(e);
    auto [quot, rem] = poly_divmod_monic(num, den);
    detail::ensure(rem.is_zero(), "cyclotomic: division left a remainder");
    return quot;
}

// Decides exactly whether p(omega^c) == target, omega a primitive n-th root
// of unity.  With g = gcd(n,c) and d = n/g, fold each exponent j to the
// residue j*(c/g) mod d, subtract the target from the constant term, and
// test divisibility by cyclotomic(d).  No floating point is involved.
inline bool equals_at_root(const IntPolynomial& p, int n, int c, long long target) {
    detail::require(n >= 1, "equals_at_root: need n >= 1");
    detail::require(c >= 0 && c < n, "equals_at_root: rotation amount outside [0, n)");
    const int g = std::gcd(n, c);
    const int d = c == 0 ? 1 : n / g;
    const int e = c == 0 ? 0 : c / g;
    std::vector<BigInt> folded(d);
    for (int j = 0; j <= p.degree(); ++j)
        folded[(static_cast<long long>(j) * e) % d] += p.coeff(j);
    folded[0] -= target;
    IntPolynomial f{std::move(folded)};
    if (d == 1) return f.is_zero();
    if (f.is_zero()) return true;
    return poly_divmod_monic(f, cyclotomic(d)).remainder.is_zero();
}

struct CspRow {
    int c = 0;
    long long fixed = 0;
    bool match = false;
    std::complex<double> float_value{0.0, 0.0};
};

struct CspReport {
    int n = 0;
    std::vector<CspRow> rows;

    bool all_match() const {
        for (const CspRow& r : rows)
            if (!r.match) return false;
        return true;
    }

    std::string to_json() const {
        std::ostringstream out;
        out << "{\"n\":" << n << ",\"rows\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0) out << ",";
            out << "{\"c\":" << rows[i].c << ",\"fixed\":" << rows[i].fixed
                << ",\"match\":" << (rows[i].match ? "true" : "false") << "}";
        }
        out << "]}";
        return out.str();
    }

    std::string to_table() const {
        std::ostringstream out;
        out << "  c      fixed  exact     float\n";
        for (const CspRow& r : rows) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%3d %10lld  %-5s %9.4f%+.4fi\n", r.c, r.fixed,
                          r.match ? "match" : "DIFF", r.float_value.real(), r.float_value.imag());
            out << buf;
        }
        return out.str();
    }
};

// Counts fixed points of every power of the action and tests each count
// against the exact polynomial evaluation at the matching root of unity.
// The float column is advisory; the cyclotomic test is the verdict.
template <class T, class Action>
CspReport csp_check(const std::vector<T>& elements, Action action, int n,
                    const IntPolynomial& poly) {
    detail::require(n >= 1, "csp_check: need n >= 1");
    std::vector<long long> fixed(n, 0);
    fixed[0] = static_cast<long long>(elements.size());
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        T cur = elements[idx];
        for (int c = 1; c < n; ++c) {
            cur = action(cur);
            if (cur == elements[idx]) ++fixed[c];
        }
        cur = action(cur);
        if (cur != elements[idx])
            throw std::invalid_argument("csp_check: action order does not divide n at element " +
                                        std::to_string(idx));
    }
    CspReport report;
    report.n = n;
    const double tau = 6.283185307179586476925287;
    for (int c = 0; c < n; ++c) {
        CspRow row;
        row.c = c;
        row.fixed = fixed[c];
        row.match = equals_at_root(poly, n, c, fixed[c]);
        row.float_value = poly.evaluate(std::polar(1.0, tau * c / n));
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace alcomb
