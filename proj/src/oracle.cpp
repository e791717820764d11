#include "skein/oracle.hpp"

namespace skein {

Mat2 traceless_part(const Mat2& x) {
    Rational h = x.trace() / 2;
    return {x.a - h, x.b, x.c, x.d - h};
}

uint64_t derive_seed(uint64_t master, uint64_t index) {
    // splitmix64 step over master ^ index keeps per-trial seeds decorrelated
    uint64_t z = master ^ (index + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Mat2 random_sl2(std::mt19937_64& rng, int complexity) {
    if (complexity < 1) throw std::invalid_argument("random_sl2: complexity must be >= 1");
    Mat2 m = Mat2::identity();
    for (int step = 0; step < complexity; ++step) {
        // entries drawn by plain modulo so results are identical across
        // standard library implementations
        int v = static_cast<int>(rng() % 11) - 5;  // -5..5
        bool upper = (rng() & 1) != 0;
        Mat2 e = Mat2::identity();
        if (upper)
            e.b = v;
        else
            e.c = v;
        m = m * e;
    }
    return m;
}

Mat2 random_sl2(uint64_t seed, int complexity) {
    std::mt19937_64 rng(seed);
    return random_sl2(rng, complexity);
}

MatrixTuple MatrixTuple::sample(int n, uint64_t seed, int complexity) {
    MatrixTuple t;
    t.seed = seed;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        t.x.push_back(random_sl2(rng, complexity));
        t.xv.push_back(traceless_part(t.x.back()));
    }
    return t;
}

MatrixTuple MatrixTuple::make_generic(int n, uint64_t seed, int complexity) {
    for (uint64_t attempt = 0;; ++attempt) {
        MatrixTuple t = sample(n, derive_seed(seed, attempt), complexity);
        t.seed = seed;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Rational tr = t.x[static_cast<size_t>(i)].trace();
            if (tr == 2 || tr == -2) ok = false;
        }
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                Rational tr = (t.xv[static_cast<size_t>(i)] * t.xv[static_cast<size_t>(j)]).trace();
                if (tr == 0) ok = false;
            }
        if (ok) return t;
    }
}

Rational eval_gen(const Gen& g, const MatrixTuple& tup) {
    auto at = [&](int label) -> const Mat2& {
        if (label < 1 || label > static_cast<int>(tup.x.size()))
            throw std::out_of_range("generator label outside matrix tuple");
        return tup.xv[static_cast<size_t>(label - 1)];
    };
    if (g.kind() == GenKind::T) {
        if (g.index(0) < 1 || g.index(0) > static_cast<int>(tup.x.size()))
            throw std::out_of_range("generator label outside matrix tuple");
        return -tup.x[static_cast<size_t>(g.index(0) - 1)].trace();
    }
    Mat2 prod = at(g.index(0));
    for (int p = 1; p < g.size(); ++p) prod = prod * at(g.index(p));
    return -prod.trace();
}

Rational EvalContext::gen_value(const Gen& g) {
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
    Rational v = eval_gen(g, tup_);
    cache_.emplace(g, v);
    return v;
}

Rational eval_element_q1(const Element& e, EvalContext& ctx, int sign) {
    Rational total = 0;
    for (const auto& [w, c] : e.terms()) {
        Rational prod = c.spec_q1(sign);
        if (prod == 0) continue;
        for (const auto& g : w.gens()) prod *= ctx.gen_value(g);
        total += prod;
    }
    return total;
}

Rational eval_element_q1(const Element& e, const MatrixTuple& tup, int sign) {
    EvalContext ctx(tup);
    return eval_element_q1(e, ctx, sign);
}

// ---------------------------------------------------------------------------

namespace {

Rational neg_tr(const std::vector<Mat2>& v, std::initializer_list<int> idx) {
    Mat2 prod = Mat2::identity();
    for (int i : idx) prod = prod * v[static_cast<size_t>(i - 1)];
    return -prod.trace();
}

}  // namespace

IdentityReport check_matrix_identities(int trials, uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("check_matrix_identities: trials must be >= 1");
    IdentityReport report;
    auto record = [&](const std::string& name, bool ok) {
        report.checks.push_back({name, ok, trials});
    };

    bool anticommutation = true;      // ab+ba = tr(b)a + tr(a)b + (tr(ab)-tr(a)tr(b))e
    bool triple_product = true;       // 2 u1u2u3 expansion for traceless factors
    bool skew = true;                 // tr(u1u2u3) + tr(u2u1u3) = 0
    bool exchange = true;             // r123 v4 - r13 v2v4 + r12 v3v4 = r234 v1 + ...
    bool four_factor = true;          // 2 r1234 = r13r24 - r12r34 - r14r23
    bool six_factor_1 = true;
    bool six_factor_2 = true;
    bool six_factor_3 = true;
    bool det_relation = true;         // 2 r123 r456 = det[(r_{i,j+3})]
    bool alternating_sum = true;      // r15r234 - r25r134 + r35r124 - r45r123 = 0

    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<uint64_t>(t)));
        Mat2 a = random_sl2(rng, 6);
        Mat2 b = random_sl2(rng, 6);
        Mat2 e = Mat2::identity();
        {
            Mat2 lhs = a * b + b * a;
            Mat2 rhs = a.scaled(b.trace()) + b.scaled(a.trace()) +
                       e.scaled((a * b).trace() - a.trace() * b.trace());
            if (!(lhs == rhs)) anticommutation = false;
        }

        std::vector<Mat2> v;
        for (int i = 0; i < 6; ++i) v.push_back(traceless_part(random_sl2(rng, 6)));
        auto r = [&](std::initializer_list<int> idx) { return neg_tr(v, idx); };

        {
            Mat2 lhs = (v[0] * v[1] * v[2]).scaled(2);
            // with r = -tr, the expansion reads 2 u1u2u3 = -(r23 u1 - r13 u2 + r12 u3 + r123 e)
            Mat2 rhs = (v[0].scaled(r({2, 3})) - v[1].scaled(r({1, 3})) + v[2].scaled(r({1, 2})) +
                        e.scaled(r({1, 2, 3})))
                           .scaled(-1);
            if (!(lhs == rhs)) triple_product = false;
        }
        {
            if ((v[0] * v[1] * v[2]).trace() + (v[1] * v[0] * v[2]).trace() != 0) skew = false;
        }
        {
            Mat2 lhs = v[3].scaled(r({1, 2, 3})) - (v[1] * v[3]).scaled(r({1, 3})) +
                       (v[2] * v[3]).scaled(r({1, 2}));
            Mat2 rhs = v[0].scaled(r({2, 3, 4})) + (v[0] * v[1]).scaled(r({3, 4})) -
                       (v[0] * v[2]).scaled(r({2, 4}));
            if (!(lhs == rhs)) exchange = false;
        }
        {
            Rational lhs = 2 * r({1, 2, 3, 4});
            Rational rhs = r({1, 3}) * r({2, 4}) - r({1, 2}) * r({3, 4}) - r({1, 4}) * r({2, 3});
            if (lhs != rhs) four_factor = false;
        }
        {
            Rational lhs = 2 * (r({1, 5, 6}) * r({2, 3, 4}) - r({1, 2, 3}) * r({4, 5, 6}));
            Rational rhs = r({1, 6}) * (r({2, 5}) * r({3, 4}) - r({2, 4}) * r({3, 5})) +
                           r({2, 6}) * (r({1, 3}) * r({4, 5}) - r({1, 5}) * r({3, 4})) +
                           r({3, 6}) * (r({1, 5}) * r({2, 4}) - r({1, 2}) * r({4, 5})) +
                           r({4, 6}) * (r({1, 2}) * r({3, 5}) - r({1, 3}) * r({2, 5}));
            if (lhs != rhs) six_factor_1 = false;
        }
        {
            Rational lhs = 2 * (r({2, 5, 6}) * r({1, 3, 4}) + r({1, 2, 3}) * r({4, 5, 6}));
            Rational rhs = r({2, 6}) * (r({1, 5}) * r({3, 4}) - r({1, 4}) * r({3, 5})) +
                           r({1, 6}) * (r({2, 3}) * r({4, 5}) - r({2, 5}) * r({3, 4})) +
                           r({3, 6}) * (r({2, 5}) * r({1, 4}) - r({1, 2}) * r({4, 5})) +
                           r({4, 6}) * (r({1, 2}) * r({3, 5}) - r({2, 3}) * r({1, 5}));
            if (lhs != rhs) six_factor_2 = false;
        }
        {
            Rational lhs = 2 * (r({1, 3, 4}) * r({2, 5, 6}) - r({1, 5, 6}) * r({2, 3, 4}));
            Rational rhs = r({1, 6}) * (r({4, 5}) * r({2, 3}) - r({2, 4}) * r({3, 5})) +
                           r({4, 6}) * (r({1, 3}) * r({2, 5}) - r({1, 5}) * r({2, 3})) +
                           r({3, 6}) * (r({1, 5}) * r({2, 4}) - r({1, 4}) * r({2, 5})) +
                           r({2, 6}) * (r({1, 4}) * r({3, 5}) - r({1, 3}) * r({4, 5}));
            if (lhs != rhs) six_factor_3 = false;
        }
        {
            Rational m[3][3];
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) m[i][j] = r({i + 1, j + 4});
            Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            if (2 * r({1, 2, 3}) * r({4, 5, 6}) != det) det_relation = false;
        }
        {
            Rational sum = r({1, 5}) * r({2, 3, 4}) - r({2, 5}) * r({1, 3, 4}) +
                           r({3, 5}) * r({1, 2, 4}) - r({4, 5}) * r({1, 2, 3});
            if (sum != 0) alternating_sum = false;
        }
    }

    record("anticommutation", anticommutation);
    record("triple_product", triple_product);
    record("skew_symmetry", skew);
    record("exchange", exchange);
    record("four_factor_trace", four_factor);
    record("six_factor_trace_1", six_factor_1);
    record("six_factor_trace_2", six_factor_2);
    record("six_factor_trace_3", six_factor_3);
    record("determinant_relation", det_relation);
    record("alternating_sum", alternating_sum);
    return report;
}

}  // namespace skein
