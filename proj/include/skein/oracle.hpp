#pragma once

#include "skein/algebra.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace skein {

/// 2x2 matrix over exact rationals.
struct Mat2 {
    Rational a{0}, b{0}, c{0}, d{0};

    static Mat2 identity() { return {1, 0, 0, 1}; }
    Rational trace() const { return a + d; }
    Rational det() const { return a * d - b * c; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 scaled(const Rational& s) const { return {a * s, b * s, c * s, d * s}; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool operator==(const Mat2& o) const = default;
};

/// Traceless part x - (tr x / 2) e.
Mat2 traceless_part(const Mat2& x);

/// Deterministic product of `complexity` integer elementary matrices
/// [[1,b],[0,1]] / [[1,0],[c,1]] with |b|,|c| <= 5; det is 1 by
/// construction. complexity must be >= 1.
Mat2 random_sl2(std::mt19937_64& rng, int complexity);
Mat2 random_sl2(uint64_t seed, int complexity);

/// n-tuple of SL(2,Q) matrices with cached traceless parts. Tuples are
/// reproducible from the seed; make_generic resamples until no tr(x_i)
/// equals +-2 and no pair has tr(xv_i xv_j) = 0.
struct MatrixTuple {
    std::vector<Mat2> x;
    std::vector<Mat2> xv;  // traceless parts
    uint64_t seed = 0;

    static MatrixTuple sample(int n, uint64_t seed, int complexity = 6);
    static MatrixTuple make_generic(int n, uint64_t seed, int complexity = 6);
};

/// t_i = -tr(x_i); s_J = -tr(prod of xv over J). Exact.
Rational eval_gen(const Gen& g, const MatrixTuple& tup);

/// Per-tuple evaluation cache for generator values.
class EvalContext {
public:
    explicit EvalContext(const MatrixTuple& tup) : tup_(tup) {}
    const MatrixTuple& tuple() const { return tup_; }
    Rational gen_value(const Gen& g);

private:
    const MatrixTuple& tup_;
    std::map<Gen, Rational> cache_;
};

/// Evaluate an element at q^{1/2} = sign (so q = 1); generator values
/// commute, so word order is irrelevant here.
Rational eval_element_q1(const Element& e, EvalContext& ctx, int sign = 1);
Rational eval_element_q1(const Element& e, const MatrixTuple& tup, int sign = 1);

/// One checked trace/matrix identity.
struct IdentityCheck {
    std::string name;
    bool passed;
    int trials;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// Verifies the classical trace identities behind the relation catalog on
/// random traceless matrices: the anticommutation rule, the triple-product
/// expansion, skew symmetry, the four-factor trace identity, the exchange
/// identity, the three six-factor trace identities, and the classical
/// determinant / alternating-sum relation shapes.
IdentityReport check_matrix_identities(int trials, uint64_t seed);

/// Derives a per-trial seed from a master seed.
uint64_t derive_seed(uint64_t master, uint64_t index);

}  // namespace skein
