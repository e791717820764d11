#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skein {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q^{1/2} with arbitrary-precision integer
/// coefficients. Exponents are stored doubled, so the key m represents
/// q^{m/2}; the value for a key is never zero.
class HalfLaurent {
public:
    HalfLaurent() = default;
    explicit HalfLaurent(Int constant);
    explicit HalfLaurent(std::vector<std::pair<int, Int>> pairs);

    static HalfLaurent q_half_power(int doubled_exp, Int coeff = 1);
    static HalfLaurent alpha();  // q + q^{-1}

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    HalfLaurent& operator+=(const HalfLaurent& other);
    HalfLaurent& operator-=(const HalfLaurent& other);
    HalfLaurent operator+(const HalfLaurent& other) const;
    HalfLaurent operator-(const HalfLaurent& other) const;
    HalfLaurent operator*(const HalfLaurent& other) const;
    HalfLaurent operator-() const;
    bool operator==(const HalfLaurent& other) const { return coeffs_ == other.coeffs_; }

    /// q^{1/2} -> q^{-1/2}
    HalfLaurent bar() const;

    /// Evaluate at q^{1/2} = sign, sign in {+1,-1}.
    Int eval_at_sign(int sign) const;

    /// Exact division test: if alpha divides *this, set quotient and
    /// return true, else return false.
    bool try_divide_alpha(HalfLaurent& quotient) const;

    /// Exact division by an arbitrary nonzero polynomial over the
    /// integers; fails unless the quotient exists with integer
    /// coefficients.
    bool try_divide(const HalfLaurent& divisor, HalfLaurent& quotient) const;

    /// Largest k with alpha^k dividing *this (zero input returns 0), and
    /// the corresponding cofactor.
    int alpha_valuation(HalfLaurent& cofactor) const;

    /// True when the polynomial is a single term +-q^{m/2}.
    bool is_monomial_unit(int& doubled_exp, bool& negative) const;

private:
    void insert_term(int doubled_exp, const Int& c);
    std::map<int, Int> coeffs_;
};

/// Element of the coefficient ring R = Z[q^{+-1/2}, beta] where
/// beta = (q + q^{-1})^{-1}. Stored as num / alpha^k in canonical form:
/// when k > 0, alpha does not divide num; zero is (0, 0).
class RingElem {
public:
    RingElem() = default;

    /// Construct from term list and a nonnegative alpha-denominator power.
    static RingElem make(const std::vector<std::pair<int, Int>>& num_pairs, int alpha_pow);

    static RingElem zero() { return RingElem(); }
    static RingElem one() { return from_int(1); }
    static RingElem from_int(Int v);
    static RingElem q_power(int doubled_exp);  // q^{m/2} for doubled exponent m
    static RingElem alpha();
    static RingElem beta();

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return *this == one(); }
    const HalfLaurent& num() const { return num_; }
    int alpha_pow() const { return alpha_pow_; }

    RingElem operator+(const RingElem& other) const;
    RingElem operator-(const RingElem& other) const;
    RingElem operator*(const RingElem& other) const;
    RingElem operator-() const;
    RingElem& operator+=(const RingElem& other) { return *this = *this + other; }
    RingElem& operator-=(const RingElem& other) { return *this = *this - other; }
    RingElem& operator*=(const RingElem& other) { return *this = *this * other; }
    bool operator==(const RingElem& other) const;
    bool operator!=(const RingElem& other) const { return !(*this == other); }

    /// Mirror involution on coefficients: q^{1/2} -> q^{-1/2}.
    RingElem bar() const;

    /// Specialize q^{1/2} := sign (+1 or -1); alpha becomes 2.
    Rational spec_q1(int sign = 1) const;

    /// Units of R are +-q^{m/2} alpha^p. Returns true and fills the
    /// inverse when *this is a unit.
    bool try_unit_inverse(RingElem& inverse) const;

    /// Exact division within R; true iff *this = q * divisor for some
    /// q in R, in which case q is returned.
    bool try_divide(const RingElem& divisor, RingElem& quotient) const;

    RingElem pow(int e) const;  // e >= 0

    std::string to_string() const;

private:
    void canonicalize();
    HalfLaurent num_;
    int alpha_pow_ = 0;
};

}  // namespace skein
