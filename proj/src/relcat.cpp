#include "skein/relcat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace skein {

const char* family_name(Family f) {
    switch (f) {
        case Family::Central: return "central";
        case Family::Disjoint22: return "disjoint_22";
        case Family::Disjoint23: return "disjoint_23";
        case Family::Disjoint33: return "disjoint_33";
        case Family::PairShare: return "pair_share";
        case Family::PairLinked: return "pair_linked";
        case Family::TriplePairShare2: return "triple_pair_share2";
        case Family::TriplePairShare1A: return "triple_pair_share1_a";
        case Family::TriplePairShare1B: return "triple_pair_share1_b";
        case Family::TriplePairShare1C: return "triple_pair_share1_c";
        case Family::TriplePairLinked: return "triple_pair_linked";
        case Family::Type2Distinct: return "type2_distinct";
        case Family::Type2Repeated: return "type2_repeated";
        case Family::Type1Exchange: return "type1_exchange";
        case Family::Type1Split: return "type1_split";
        case Family::Type1Mixed: return "type1_mixed";
        case Family::Type1Alternating: return "type1_alternating";
        case Family::Type1Overlap1A: return "type1_overlap1_a";
        case Family::Type1Overlap1B: return "type1_overlap1_b";
        case Family::Type1Overlap1C: return "type1_overlap1_c";
        case Family::Type1Overlap2A: return "type1_overlap2_a";
        case Family::Type1Overlap2B: return "type1_overlap2_b";
        case Family::Type1Square: return "type1_square";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::vector<Family> all = {
        Family::Central,          Family::Disjoint22,       Family::Disjoint23,
        Family::Disjoint33,       Family::PairShare,        Family::PairLinked,
        Family::TriplePairShare2, Family::TriplePairShare1A, Family::TriplePairShare1B,
        Family::TriplePairShare1C, Family::TriplePairLinked, Family::Type2Distinct,
        Family::Type2Repeated,    Family::Type1Exchange,    Family::Type1Split,
        Family::Type1Mixed,       Family::Type1Alternating, Family::Type1Overlap1A,
        Family::Type1Overlap1B,   Family::Type1Overlap1C,   Family::Type1Overlap2A,
        Family::Type1Overlap2B,   Family::Type1Square};
    for (Family f : all)
        if (name == family_name(f)) return f;
    return std::nullopt;
}

namespace {

// --- coefficient shorthands -------------------------------------------------

RingElem Q(int k) { return RingElem::q_power(2 * k); }  // q^k
RingElem N(long v) { return RingElem::from_int(Int(v)); }
const RingElem kOne = RingElem::one();
RingElem A() { return RingElem::alpha(); }
RingElem B() { return RingElem::beta(); }
RingElem qmqbar() { return Q(1) - Q(-1); }            // q - q^{-1}
RingElem q2mqbar2() { return Q(2) - Q(-2); }          // q^2 - q^{-2}
RingElem sq_qmqbar() { return qmqbar() * qmqbar(); }  // (q - q^{-1})^2

// --- template word shorthands ----------------------------------------------

TplGen T(int i) { return {TplGen::T, {i, 0, 0}}; }
TplGen S(int i, int j) { return {TplGen::S2, {i, j, 0}}; }
TplGen S(int i, int j, int k) { return {TplGen::S3, {i, j, k}}; }
TplGen SII(int i) { return {TplGen::Sii, {i, 0, 0}}; }

struct TemplateBuilder {
    RelationTemplate tpl;
    TemplateBuilder(Family f, int arity, std::string source) {
        tpl.family = f;
        tpl.arity = arity;
        tpl.source = std::move(source);
    }
    TemplateBuilder& term(RingElem c, std::vector<TplGen> gens) {
        tpl.body.push_back({std::move(c), std::move(gens)});
        return *this;
    }
};

std::vector<RelationTemplate> build_catalog() {
    std::vector<RelationTemplate> out;

    {
        TemplateBuilder b(Family::Central, 1, "loops around single punctures are central");
        out.push_back(b.tpl);  // schema; handled specially when instantiating
    }
    {
        TemplateBuilder b(Family::Disjoint22, 4, "disjoint pair curves commute");
        b.term(kOne, {S(3, 4), S(1, 2)}).term(-kOne, {S(1, 2), S(3, 4)});
        out.push_back(b.tpl);
    }
    {
        TemplateBuilder b(Family::Disjoint23, 5, "disjoint pair and triple curves commute");
        b.term(kOne, {S(3, 4, 5), S(1, 2)}).term(-kOne, {S(1, 2), S(3, 4, 5)});
        out.push_back(b.tpl);
    }
    {
        TemplateBuilder b(Family::Disjoint33, 6, "disjoint triple curves commute");
        b.term(kOne, {S(1, 2, 3), S(4, 5, 6)}).term(-kOne, {S(4, 5, 6), S(1, 2, 3)});
        out.push_back(b.tpl);
    }
    {
        // q s23 s12 - qbar s12 s23 = (q - qbar)(s22 s13 + t2 s123)
        TemplateBuilder b(Family::PairShare, 3, "commutator of pair curves sharing a puncture");
        b.term(Q(1), {S(2, 3), S(1, 2)})
            .term(-Q(-1), {S(1, 2), S(2, 3)})
            .term(-qmqbar(), {SII(2), S(1, 3)})
            .term(-qmqbar(), {T(2), S(1, 2, 3)});
        out.push_back(b.tpl);
    }
    {
        // s24 s13 - s13 s24 = (q^2 - qbar^2)(s14 s23 - s12 s34)
        TemplateBuilder b(Family::PairLinked, 4, "commutator of interleaved pair curves");
        b.term(kOne, {S(2, 4), S(1, 3)})
            .term(-kOne, {S(1, 3), S(2, 4)})
            .term(-q2mqbar2(), {S(1, 4), S(2, 3)})
            .term(q2mqbar2(), {S(1, 2), S(3, 4)});
        out.push_back(b.tpl);
    }
    {
        // s123 s12 - s12 s123 = (q^2-qbar^2)( q t2 (s12 s13 - s11 s23 - t1 s123)
        //                                    - qbar t1 (s12 s23 - s22 s13 - t2 s123) )
        TemplateBuilder b(Family::TriplePairShare2, 3,
                          "commutator of a triple with a pair curve on two shared punctures");
        RingElem d = q2mqbar2();
        b.term(kOne, {S(1, 2, 3), S(1, 2)})
            .term(-kOne, {S(1, 2), S(1, 2, 3)})
            .term(-d * Q(1), {T(2), S(1, 2), S(1, 3)})
            .term(d * Q(1), {T(2), SII(1), S(2, 3)})
            .term(d * Q(1), {T(2), T(1), S(1, 2, 3)})
            .term(d * Q(-1), {T(1), S(1, 2), S(2, 3)})
            .term(-d * Q(-1), {T(1), SII(2), S(1, 3)})
            .term(-d * Q(-1), {T(1), T(2), S(1, 2, 3)});
        out.push_back(b.tpl);
    }
    {
        // q s234 s12 - qbar s12 s234
        //   = (q-qbar)( s22 s134 + b t2 (s13 s24 + (1-q^2) s12 s34 - qbar^2 s14 s23) )
        TemplateBuilder b(Family::TriplePairShare1A, 4,
                          "commutator of a triple with a pair curve, shared puncture leading");
        RingElem d = qmqbar();
        b.term(Q(1), {S(2, 3, 4), S(1, 2)})
            .term(-Q(-1), {S(1, 2), S(2, 3, 4)})
            .term(-d, {SII(2), S(1, 3, 4)})
            .term(-d * B(), {T(2), S(1, 3), S(2, 4)})
            .term(-d * B() * (kOne - Q(2)), {T(2), S(1, 2), S(3, 4)})
            .term(d * B() * Q(-2), {T(2), S(1, 4), S(2, 3)});
        out.push_back(b.tpl);
    }
    {
        // qbar s134 s12 - q s12 s134
        //   = (qbar-q)( s11 s234 + b t1 (s13 s24 + (1-q^2) s12 s34 - qbar^2 s14 s23) )
        TemplateBuilder b(Family::TriplePairShare1B, 4,
                          "commutator of a triple with a pair curve, shared puncture smallest");
        RingElem d = -qmqbar();  // qbar - q
        b.term(Q(-1), {S(1, 3, 4), S(1, 2)})
            .term(-Q(1), {S(1, 2), S(1, 3, 4)})
            .term(-d, {SII(1), S(2, 3, 4)})
            .term(-d * B(), {T(1), S(1, 3), S(2, 4)})
            .term(-d * B() * (kOne - Q(2)), {T(1), S(1, 2), S(3, 4)})
            .term(d * B() * Q(-2), {T(1), S(1, 4), S(2, 3)});
        out.push_back(b.tpl);
    }
    {
        // s124 s13 - s13 s124 = (q-qbar)( qbar s14 s123 - q s12 s134 + (q-qbar) s11 s234
        //   + b t1 ((q-qbar) s13 s24 + (2q-q^3) s12 s34 + (qbar^3-2qbar) s14 s23) )
        TemplateBuilder b(Family::TriplePairShare1C, 4,
                          "commutator of a triple with an interleaved pair curve on a shared puncture");
        RingElem d = qmqbar();
        b.term(kOne, {S(1, 2, 4), S(1, 3)})
            .term(-kOne, {S(1, 3), S(1, 2, 4)})
            .term(-d * Q(-1), {S(1, 4), S(1, 2, 3)})
            .term(d * Q(1), {S(1, 2), S(1, 3, 4)})
            .term(-d * d, {SII(1), S(2, 3, 4)})
            .term(-d * B() * d, {T(1), S(1, 3), S(2, 4)})
            .term(-d * B() * (N(2) * Q(1) - Q(3)), {T(1), S(1, 2), S(3, 4)})
            .term(-d * B() * (Q(-3) - N(2) * Q(-1)), {T(1), S(1, 4), S(2, 3)});
        out.push_back(b.tpl);
    }
    {
        // s245 s13 - s13 s245 = (q^2-qbar^2)(s23 s145 - s12 s345)
        TemplateBuilder b(Family::TriplePairLinked, 5,
                          "commutator of disjoint but interleaved triple and pair curves");
        b.term(kOne, {S(2, 4, 5), S(1, 3)})
            .term(-kOne, {S(1, 3), S(2, 4, 5)})
            .term(-q2mqbar2(), {S(2, 3), S(1, 4, 5)})
            .term(q2mqbar2(), {S(1, 2), S(3, 4, 5)});
        out.push_back(b.tpl);
    }
    {
        // q^2 s15 s234 - s25 s134 + s35 s124 - qbar^2 s45 s123
        //   = (q-qbar)(qbar s12 s345 + q s34 s125)
        TemplateBuilder b(Family::Type2Distinct, 5,
                          "alternating four-term relation on five distinct punctures");
        b.term(Q(2), {S(1, 5), S(2, 3, 4)})
            .term(-kOne, {S(2, 5), S(1, 3, 4)})
            .term(kOne, {S(3, 5), S(1, 2, 4)})
            .term(-Q(-2), {S(4, 5), S(1, 2, 3)})
            .term(-qmqbar() * Q(-1), {S(1, 2), S(3, 4, 5)})
            .term(-qmqbar() * Q(1), {S(3, 4), S(1, 2, 5)});
        out.push_back(b.tpl);
    }
    {
        // q^2 s12 s134 - s13 s124 + qbar^2 s14 s123 - (q^2+qbar^2-1) s11 s234
        //   = (q-qbar)^2 b t1 (s13 s24 - q^2 s12 s34 - qbar^2 s14 s23)
        TemplateBuilder b(Family::Type2Repeated, 4,
                          "alternating four-term relation with a repeated puncture");
        RingElem d2b = sq_qmqbar() * B();
        b.term(Q(2), {S(1, 2), S(1, 3, 4)})
            .term(-kOne, {S(1, 3), S(1, 2, 4)})
            .term(Q(-2), {S(1, 4), S(1, 2, 3)})
            .term(-(Q(2) + Q(-2) - kOne), {SII(1), S(2, 3, 4)})
            .term(-d2b, {T(1), S(1, 3), S(2, 4)})
            .term(d2b * Q(2), {T(1), S(1, 2), S(3, 4)})
            .term(d2b * Q(-2), {T(1), S(1, 4), S(2, 3)});
        out.push_back(b.tpl);
    }
    {
        // s24 s36 s15 - s13 s25 s46 = a (s234 s156 - s123 s456)
        //   + (q^2-qbar^2)(s23 s46 s15 - s56 s13 s24) + q^2 (s16 s24 s35 - s12 s35 s46)
        //   + qbar^2 (s34 s15 s26 - s45 s26 s13) + qbar^4 (s12 s36 s45 - s16 s25 s34)
        //   + (q^2-qbar^2)^2 (s12 s34 s56 - s16 s23 s45)
        TemplateBuilder b(Family::Type1Exchange, 6,
                          "exchange between two interleaved pair-triple products");
        RingElem d = q2mqbar2();
        b.term(kOne, {S(2, 4), S(3, 6), S(1, 5)})
            .term(-kOne, {S(1, 3), S(2, 5), S(4, 6)})
            .term(-A(), {S(2, 3, 4), S(1, 5, 6)})
            .term(A(), {S(1, 2, 3), S(4, 5, 6)})
            .term(-d, {S(2, 3), S(4, 6), S(1, 5)})
            .term(d, {S(5, 6), S(1, 3), S(2, 4)})
            .term(-Q(2), {S(1, 6), S(2, 4), S(3, 5)})
            .term(Q(2), {S(1, 2), S(3, 5), S(4, 6)})
            .term(-Q(-2), {S(3, 4), S(1, 5), S(2, 6)})
            .term(Q(-2), {S(4, 5), S(2, 6), S(1, 3)})
            .term(-Q(-4), {S(1, 2), S(3, 6), S(4, 5)})
            .term(Q(-4), {S(1, 6), S(2, 5), S(3, 4)})
            .term(-d * d, {S(1, 2), S(3, 4), S(5, 6)})
            .term(d * d, {S(1, 6), S(2, 3), S(4, 5)});
        out.push_back(b.tpl);
    }
    {
        // s14 s25 s36 - (q^3+qbar^3) s123 s456 = qbar^2 (s24 s36 s15 + s35 s14 s26)
        //   - s34 s15 s26 - s16 s24 s35 + qbar^6 s16 s25 s34
        //   + (1-qbar^2)(s13 s25 s46 + s45 s26 s13 - q^2 s12 s35 s46 - qbar^2 s23 s46 s15)
        //   + (q^4-2q^2+2qbar^2-qbar^6) s12 s34 s56
        //   + (2-q^2-qbar^4)(s56 s13 s24 + s16 s23 s45)
        //   + (q^2+qbar^4-2qbar^2)(s14 s23 s56 + s12 s36 s45)
        TemplateBuilder b(Family::Type1Split, 6,
                          "fully linked pair-triple against consecutive split triples");
        RingElem u = kOne - Q(-2);
        b.term(kOne, {S(1, 4), S(2, 5), S(3, 6)})
            .term(-(Q(3) + Q(-3)), {S(1, 2, 3), S(4, 5, 6)})
            .term(-Q(-2), {S(2, 4), S(3, 6), S(1, 5)})
            .term(-Q(-2), {S(3, 5), S(1, 4), S(2, 6)})
            .term(kOne, {S(3, 4), S(1, 5), S(2, 6)})
            .term(kOne, {S(1, 6), S(2, 4), S(3, 5)})
            .term(-Q(-6), {S(1, 6), S(2, 5), S(3, 4)})
            .term(-u, {S(1, 3), S(2, 5), S(4, 6)})
            .term(-u, {S(4, 5), S(2, 6), S(1, 3)})
            .term(u * Q(2), {S(1, 2), S(3, 5), S(4, 6)})
            .term(u * Q(-2), {S(2, 3), S(4, 6), S(1, 5)})
            .term(-(Q(4) - N(2) * Q(2) + N(2) * Q(-2) - Q(-6)), {S(1, 2), S(3, 4), S(5, 6)})
            .term(-(N(2) - Q(2) - Q(-4)), {S(5, 6), S(1, 3), S(2, 4)})
            .term(-(N(2) - Q(2) - Q(-4)), {S(1, 6), S(2, 3), S(4, 5)})
            .term(-(Q(2) + Q(-4) - N(2) * Q(-2)), {S(1, 4), S(2, 3), S(5, 6)})
            .term(-(Q(2) + Q(-4) - N(2) * Q(-2)), {S(1, 2), S(3, 6), S(4, 5)});
        out.push_back(b.tpl);
    }
    {
        // a s124 s356 = s13 s25 s46 + qbar^2 (s34 s26 s15 - s23 s15 s46 - s45 s13 s26)
        //   + (2-qbar^4) s16 s23 s45 - qbar^4 s16 s34 s25
        //   + (q^2-1)( a s123 s456 + (q^2-qbar^2-1) s12 s34 s56
        //              - s12 s35 s46 - s56 s13 s24 - qbar^4 (s12 s36 s45 + s56 s14 s23) )
        TemplateBuilder b(Family::Type1Mixed, 6,
                          "disjoint triple-triple product, mixed interleaving pattern");
        RingElem w = Q(2) - kOne;
        b.term(A(), {S(1, 2, 4), S(3, 5, 6)})
            .term(-kOne, {S(1, 3), S(2, 5), S(4, 6)})
            .term(-Q(-2), {S(3, 4), S(2, 6), S(1, 5)})
            .term(Q(-2), {S(2, 3), S(1, 5), S(4, 6)})
            .term(Q(-2), {S(4, 5), S(1, 3), S(2, 6)})
            .term(-(N(2) - Q(-4)), {S(1, 6), S(2, 3), S(4, 5)})
            .term(Q(-4), {S(1, 6), S(3, 4), S(2, 5)})
            .term(-w * A(), {S(1, 2, 3), S(4, 5, 6)})
            .term(-w * (Q(2) - Q(-2) - kOne), {S(1, 2), S(3, 4), S(5, 6)})
            .term(w, {S(1, 2), S(3, 5), S(4, 6)})
            .term(w, {S(5, 6), S(1, 3), S(2, 4)})
            .term(w * Q(-4), {S(1, 2), S(3, 6), S(4, 5)})
            .term(w * Q(-4), {S(5, 6), S(1, 4), S(2, 3)});
        out.push_back(b.tpl);
    }
    {
        // a s135 s246 = q^2 s14 s25 s36 + (q^2+q^4-q^6) s12 s34 s56 - s16 s25 s34
        //   + (2q^4-2q^2+2qbar^2-1) s16 s23 s45
        //   + (1-qbar^2-q^4)(s14 s23 s56 + s12 s36 s45)
        //   + (1-q^2)( q^2 a s123 s456 - q^2 (s12 s35 s46 + s56 s13 s24)
        //              + s13 s25 s46 + s23 s46 s15 + s45 s26 s13 - qbar a s34 s15 s26 )
        TemplateBuilder b(Family::Type1Alternating, 6,
                          "disjoint triple-triple product, alternating interleaving pattern");
        RingElem w = kOne - Q(2);
        b.term(A(), {S(1, 3, 5), S(2, 4, 6)})
            .term(-Q(2), {S(1, 4), S(2, 5), S(3, 6)})
            .term(-(Q(2) + Q(4) - Q(6)), {S(1, 2), S(3, 4), S(5, 6)})
            .term(kOne, {S(1, 6), S(2, 5), S(3, 4)})
            .term(-(N(2) * Q(4) - N(2) * Q(2) + N(2) * Q(-2) - kOne), {S(1, 6), S(2, 3), S(4, 5)})
            .term(-(kOne - Q(-2) - Q(4)), {S(1, 4), S(2, 3), S(5, 6)})
            .term(-(kOne - Q(-2) - Q(4)), {S(1, 2), S(3, 6), S(4, 5)})
            .term(-w * Q(2) * A(), {S(1, 2, 3), S(4, 5, 6)})
            .term(w * Q(2), {S(1, 2), S(3, 5), S(4, 6)})
            .term(w * Q(2), {S(5, 6), S(1, 3), S(2, 4)})
            .term(-w, {S(1, 3), S(2, 5), S(4, 6)})
            .term(-w, {S(2, 3), S(4, 6), S(1, 5)})
            .term(-w, {S(4, 5), S(2, 6), S(1, 3)})
            .term(w * Q(-1) * A(), {S(3, 4), S(1, 5), S(2, 6)});
        out.push_back(b.tpl);
    }
    {
        // a s123 s345 = s13 s24 s35 + qbar^2 (s14 s25 s33 - s13 s25 s34 - s14 s23 s35)
        //   + qbar^4 (s15 s23 s34 - s15 s24 s33) + (1-q^2) s33 s12 s45
        //   + (qbar^2-1) t3 (s13 s245 - qbar^2 s23 s145 + (q^2-1) s45 s123)
        TemplateBuilder b(Family::Type1Overlap1A, 5,
                          "product of triples sharing their middle puncture");
        RingElem w = Q(-2) - kOne;
        b.term(A(), {S(1, 2, 3), S(3, 4, 5)})
            .term(-kOne, {S(1, 3), S(2, 4), S(3, 5)})
            .term(-Q(-2), {S(1, 4), S(2, 5), SII(3)})
            .term(Q(-2), {S(1, 3), S(2, 5), S(3, 4)})
            .term(Q(-2), {S(1, 4), S(2, 3), S(3, 5)})
            .term(-Q(-4), {S(1, 5), S(2, 3), S(3, 4)})
            .term(Q(-4), {S(1, 5), S(2, 4), SII(3)})
            .term(-(kOne - Q(2)), {SII(3), S(1, 2), S(4, 5)})
            .term(-w, {T(3), S(1, 3), S(2, 4, 5)})
            .term(w * Q(-2), {T(3), S(2, 3), S(1, 4, 5)})
            .term(-w * (Q(2) - kOne), {T(3), S(4, 5), S(1, 2, 3)});
        out.push_back(b.tpl);
    }
    {
        // a s135 s234 = s13 s25 s34 - s25 s14 s33 + s35 s14 s23 - q^2 s35 s12 s34
        //   + qbar^2 (s45 s12 s33 - s45 s13 s23) + (1-qbar^2) s33 s15 s24
        //   + (q^2-1) t3 (s34 s125 - qbar^2 s23 s145 + (qbar^2-1) s15 s234)
        TemplateBuilder b(Family::Type1Overlap1B, 5,
                          "product of triples sharing a puncture, alternating supports");
        RingElem w = Q(2) - kOne;
        b.term(A(), {S(1, 3, 5), S(2, 3, 4)})
            .term(-kOne, {S(1, 3), S(2, 5), S(3, 4)})
            .term(kOne, {S(2, 5), S(1, 4), SII(3)})
            .term(-kOne, {S(3, 5), S(1, 4), S(2, 3)})
            .term(Q(2), {S(3, 5), S(1, 2), S(3, 4)})
            .term(-Q(-2), {S(4, 5), S(1, 2), SII(3)})
            .term(Q(-2), {S(4, 5), S(1, 3), S(2, 3)})
            .term(-(kOne - Q(-2)), {SII(3), S(1, 5), S(2, 4)})
            .term(-w, {T(3), S(3, 4), S(1, 2, 5)})
            .term(w * Q(-2), {T(3), S(2, 3), S(1, 4, 5)})
            .term(-w * (Q(-2) - kOne), {T(3), S(1, 5), S(2, 3, 4)});
        out.push_back(b.tpl);
    }
    {
        // a s134 s235 = s13 s24 s35 + q^2 (s33 s12 s45 - s12 s34 s35 - s13 s23 s45)
        //   + qbar^2 (s15 s23 s34 - s33 s15 s24) + (1-qbar^2) s33 s14 s25
        //   + (1-qbar^2) t3 (s23 s145 - q^2 s45 s123 + s134 s25)
        TemplateBuilder b(Family::Type1Overlap1C, 5,
                          "product of triples sharing a puncture, nested supports");
        RingElem w = kOne - Q(-2);
        b.term(A(), {S(1, 3, 4), S(2, 3, 5)})
            .term(-kOne, {S(1, 3), S(2, 4), S(3, 5)})
            .term(-Q(2), {SII(3), S(1, 2), S(4, 5)})
            .term(Q(2), {S(1, 2), S(3, 4), S(3, 5)})
            .term(Q(2), {S(1, 3), S(2, 3), S(4, 5)})
            .term(-Q(-2), {S(1, 5), S(2, 3), S(3, 4)})
            .term(Q(-2), {SII(3), S(1, 5), S(2, 4)})
            .term(-w, {SII(3), S(1, 4), S(2, 5)})
            .term(-w, {T(3), S(2, 3), S(1, 4, 5)})
            .term(w * Q(2), {T(3), S(4, 5), S(1, 2, 3)})
            .term(-w, {T(3), S(1, 3, 4), S(2, 5)});
        out.push_back(b.tpl);
    }
    {
        // a s123 s234 = qbar^2 (s12 s23 s34 - s14 s23^2 + s22 s33 s14 - s33 s12 s24)
        //   + s23 s13 s24 + (1-q^2-qbar^2) s22 s13 s34
        //   + (q^2-1) t2 ((1-q^2) s34 s123 - qbar^2 s23 s124 + (q-qbar)^2 s33 s124)
        //   + (1-qbar^2) t3 (s12 s234 - s22 s134)
        //   + (q^2-1) b t2 t3 ((q-qbar)^2 (s13 s24 - qbar^2 s14 s23) + (3q^2-q^4-4) s12 s34)
        TemplateBuilder b(Family::Type1Overlap2A, 4,
                          "product of triples sharing two punctures, consecutive supports");
        RingElem w = Q(2) - kOne;
        RingElem u = kOne - Q(-2);
        RingElem d2 = sq_qmqbar();
        b.term(A(), {S(1, 2, 3), S(2, 3, 4)})
            .term(-Q(-2), {S(1, 2), S(2, 3), S(3, 4)})
            .term(Q(-2), {S(1, 4), S(2, 3), S(2, 3)})
            .term(-Q(-2), {SII(2), SII(3), S(1, 4)})
            .term(Q(-2), {SII(3), S(1, 2), S(2, 4)})
            .term(-kOne, {S(2, 3), S(1, 3), S(2, 4)})
            .term(-(kOne - Q(2) - Q(-2)), {SII(2), S(1, 3), S(3, 4)})
            .term(-w * (kOne - Q(2)), {T(2), S(3, 4), S(1, 2, 3)})
            .term(w * Q(-2), {T(2), S(2, 3), S(1, 2, 4)})
            .term(-w * d2, {T(2), SII(3), S(1, 2, 4)})
            .term(-u, {T(3), S(1, 2), S(2, 3, 4)})
            .term(u, {T(3), SII(2), S(1, 3, 4)})
            .term(-w * B() * d2, {T(2), T(3), S(1, 3), S(2, 4)})
            .term(w * B() * d2 * Q(-2), {T(2), T(3), S(1, 4), S(2, 3)})
            .term(-w * B() * (N(3) * Q(2) - Q(4) - N(4)), {T(2), T(3), S(1, 2), S(3, 4)});
        out.push_back(b.tpl);
    }
    {
        // a s123 s134 = (q^4-q^2+1) s11 s23 s34 - s11 s24 s33 + s13^2 s24
        //   - q^4 s12 s13 s34 + s12 s14 s33 - qbar^2 s13 s14 s23
        //   + (q^2-1) t1 (qbar^2 s23 s134 + q^4 s34 s123 + (q^2-q^4-qbar^2) s33 s124)
        //   + (q^2-1) t3 (s11 s234 - s12 s134)
        //   - (q^2-1)^2 b t1 t3 ((q^2-qbar^2)(s13 s24 - qbar^2 s14 s23) + (1+q^2-q^4) s12 s34)
        TemplateBuilder b(Family::Type1Overlap2B, 4,
                          "product of triples sharing two punctures, interleaved supports");
        RingElem w = Q(2) - kOne;
        b.term(A(), {S(1, 2, 3), S(1, 3, 4)})
            .term(-(Q(4) - Q(2) + kOne), {SII(1), S(2, 3), S(3, 4)})
            .term(kOne, {SII(1), S(2, 4), SII(3)})
            .term(-kOne, {S(1, 3), S(1, 3), S(2, 4)})
            .term(Q(4), {S(1, 2), S(1, 3), S(3, 4)})
            .term(-kOne, {S(1, 2), S(1, 4), SII(3)})
            .term(Q(-2), {S(1, 3), S(1, 4), S(2, 3)})
            .term(-w * Q(-2), {T(1), S(2, 3), S(1, 3, 4)})
            .term(-w * Q(4), {T(1), S(3, 4), S(1, 2, 3)})
            .term(-w * (Q(2) - Q(4) - Q(-2)), {T(1), SII(3), S(1, 2, 4)})
            .term(-w, {T(3), SII(1), S(2, 3, 4)})
            .term(w, {T(3), S(1, 2), S(1, 3, 4)})
            .term(w * w * B() * q2mqbar2(), {T(1), T(3), S(1, 3), S(2, 4)})
            .term(-w * w * B() * q2mqbar2() * Q(-2), {T(1), T(3), S(1, 4), S(2, 3)})
            .term(w * w * B() * (kOne + Q(2) - Q(4)), {T(1), T(3), S(1, 2), S(3, 4)});
        out.push_back(b.tpl);
    }
    {
        // a s123^2 = qbar a s12 s23 s13 + s11 s22 s33 - q^2 s11 s23^2 - qbar^2 s22 s13^2
        //   - qbar^2 s33 s12^2
        //   + (qbar^2-1)(q^2 t1 s23 - t2 s13 - t3 s12 - (q-qbar)^2 b t1 t2 t3) s123
        //   + (q-qbar)^2 b (t2 t3 s11 s23 + t1 t3 s22 s13 - qbar^2 t1 t2 s33 s12
        //                   + qbar a t1 t2 s23 s13)
        TemplateBuilder b(Family::Type1Square, 3, "square of a triple curve class");
        RingElem w = Q(-2) - kOne;
        RingElem d2b = sq_qmqbar() * B();
        b.term(A(), {S(1, 2, 3), S(1, 2, 3)})
            .term(-Q(-1) * A(), {S(1, 2), S(2, 3), S(1, 3)})
            .term(-kOne, {SII(1), SII(2), SII(3)})
            .term(Q(2), {SII(1), S(2, 3), S(2, 3)})
            .term(Q(-2), {SII(2), S(1, 3), S(1, 3)})
            .term(Q(-2), {SII(3), S(1, 2), S(1, 2)})
            .term(-w * Q(2), {T(1), S(2, 3), S(1, 2, 3)})
            .term(w, {T(2), S(1, 3), S(1, 2, 3)})
            .term(w, {T(3), S(1, 2), S(1, 2, 3)})
            .term(w * d2b, {T(1), T(2), T(3), S(1, 2, 3)})
            .term(-d2b, {T(2), T(3), SII(1), S(2, 3)})
            .term(-d2b, {T(1), T(3), SII(2), S(1, 3)})
            .term(d2b * Q(-2), {T(1), T(2), SII(3), S(1, 2)})
            .term(-d2b * Q(-1) * A(), {T(1), T(2), S(2, 3), S(1, 3)});
        out.push_back(b.tpl);
    }

    return out;
}

}  // namespace

const std::vector<RelationTemplate>& catalog() {
    static const std::vector<RelationTemplate> cat = build_catalog();
    return cat;
}

const RelationTemplate& find_template(Family f) {
    for (const auto& t : catalog())
        if (t.family == f) return t;
    throw std::logic_error("unknown relation family");
}

RelationInstance instantiate(const RelationTemplate& tpl, const std::vector<int>& tuple,
                             int shift, bool mirrored) {
    const int m = tpl.arity;
    if (static_cast<int>(tuple.size()) != m)
        throw std::invalid_argument("instantiate: tuple length must match template arity");
    for (size_t i = 0; i + 1 < tuple.size(); ++i)
        if (tuple[i] >= tuple[i + 1])
            throw std::invalid_argument("instantiate: tuple must be strictly increasing");
    if (shift < 0 || shift >= m) throw std::invalid_argument("instantiate: shift out of range");

    auto label = [&](int formal) { return tuple[static_cast<size_t>((formal - 1 + shift) % m)]; };

    Element total;
    for (const auto& term : tpl.body) {
        Element prod = Element::unit(term.coeff);
        for (const auto& tg : term.gens) {
            switch (tg.kind) {
                case TplGen::T:
                    prod = prod * Element::gen(Gen::t(label(tg.idx[0])));
                    break;
                case TplGen::S2:
                    prod = prod * Element::gen(
                                      Gen::make(GenKind::S2, {label(tg.idx[0]), label(tg.idx[1])}));
                    break;
                case TplGen::S3:
                    prod = prod * Element::gen(Gen::make(GenKind::S3, {label(tg.idx[0]),
                                                                       label(tg.idx[1]),
                                                                       label(tg.idx[2])}));
                    break;
                case TplGen::Sii:
                    prod = prod * expand_sii(label(tg.idx[0]));
                    break;
            }
        }
        total = total + prod;
    }
    if (mirrored) total = total.mirror();

    RelationInstance inst;
    inst.family = tpl.family;
    inst.tuple = tuple;
    inst.shift = shift;
    inst.mirrored = mirrored;
    inst.element = std::move(total);
    return inst;
}

namespace {

void for_each_combination(int n, int m, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> c(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) c[static_cast<size_t>(i)] = i + 1;
    while (true) {
        fn(c);
        int i = m - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<Gen> all_generators(int n) {
    std::vector<Gen> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(Gen::t(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(Gen::s2(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) gens.push_back(Gen::s3(i, j, k));
    return gens;
}

}  // namespace

std::vector<RelationInstance> all_instances(int n, const InstanceOptions& opts) {
    if (n < 1) throw std::invalid_argument("all_instances: n must be >= 1");
    auto wanted = [&](Family f) {
        if (!opts.families) return true;
        for (Family g : *opts.families)
            if (g == f) return true;
        return false;
    };

    std::vector<RelationInstance> out;
    std::set<std::string> seen;
    auto push = [&](RelationInstance inst) {
        if (inst.element.is_zero()) return;
        if (opts.deduplicate) {
            std::string key = inst.element.to_string();
            if (!seen.insert(std::move(key)).second) return;
        }
        out.push_back(std::move(inst));
    };

    for (const auto& tpl : catalog()) {
        if (!wanted(tpl.family)) continue;
        if (tpl.family == Family::Central) {
            for (int i = 1; i <= n; ++i) {
                for (const Gen& g : all_generators(n)) {
                    Word tw({Gen::t(i)});
                    Word gw({g});
                    Element e = Element::single(tw.concat(gw)) - Element::single(gw.concat(tw));
                    if (e.is_zero()) continue;
                    RelationInstance inst;
                    inst.family = Family::Central;
                    std::set<int> labels{i};
                    for (int p = 0; p < g.size(); ++p) labels.insert(g.index(p));
                    inst.tuple.assign(labels.begin(), labels.end());
                    inst.shift = 0;
                    inst.mirrored = false;
                    inst.element = std::move(e);
                    push(std::move(inst));
                }
            }
            continue;
        }
        if (tpl.arity > n) continue;
        for_each_combination(n, tpl.arity, [&](const std::vector<int>& tuple) {
            for (int shift = 0; shift < tpl.arity; ++shift) {
                push(instantiate(tpl, tuple, shift, false));
                if (opts.include_mirrors) push(instantiate(tpl, tuple, shift, true));
            }
        });
    }
    return out;
}

// ---------------------------------------------------------------------------

Element classical_type_one(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    // 2 s_{a1a2a3} s_{b1b2b3} - det[(s_{a_i b_j})], with s_ii = 2 - beta t_i^2.
    auto entry = [&](int i, int j) -> Element {
        int x = a[static_cast<size_t>(i)];
        int y = b[static_cast<size_t>(j)];
        if (x == y) {
            Element e = Element::unit(RingElem::from_int(2));
            e.add_term(Word({Gen::t(x), Gen::t(x)}), -RingElem::beta());
            return e;
        }
        return Element::gen(Gen::make(GenKind::S2, {x, y}));
    };
    Element det;
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
    for (int p = 0; p < 6; ++p) {
        Element prod = entry(0, perms[p][0]) * entry(1, perms[p][1]) * entry(2, perms[p][2]);
        det = (p < 3) ? det + prod : det - prod;
    }
    Element lhs = Element::gen(Gen::make(GenKind::S3, {a[0], a[1], a[2]})) *
                  Element::gen(Gen::make(GenKind::S3, {b[0], b[1], b[2]}));
    return lhs.scaled(RingElem::from_int(2)) - det;
}

Element classical_type_two(int c, const std::array<int, 4>& a) {
    auto s2 = [&](int x, int y) -> Element {
        if (x == y) {
            Element e = Element::unit(RingElem::from_int(2));
            e.add_term(Word({Gen::t(x), Gen::t(x)}), -RingElem::beta());
            return e;
        }
        return Element::gen(Gen::make(GenKind::S2, {x, y}));
    };
    auto s3 = [&](int x, int y, int z) { return Element::gen(Gen::make(GenKind::S3, {x, y, z})); };
    Element e;
    e = e + s2(a[0], c) * s3(a[1], a[2], a[3]);
    e = e - s2(a[1], c) * s3(a[0], a[2], a[3]);
    e = e + s2(a[2], c) * s3(a[0], a[1], a[3]);
    e = e - s2(a[3], c) * s3(a[0], a[1], a[2]);
    return e;
}

std::optional<Element> classical_counterpart(Family f) {
    switch (f) {
        case Family::Type2Distinct:
            return classical_type_two(5, {1, 2, 3, 4});
        case Family::Type2Repeated:
            return -classical_type_two(1, {1, 2, 3, 4});
        case Family::Type1Exchange:
            return classical_type_one({2, 3, 4}, {1, 5, 6}) - classical_type_one({1, 2, 3}, {4, 5, 6});
        case Family::Type1Split:
            return classical_type_one({1, 2, 3}, {4, 5, 6});
        case Family::Type1Mixed:
            return classical_type_one({1, 2, 4}, {3, 5, 6});
        case Family::Type1Alternating:
            return classical_type_one({1, 3, 5}, {2, 4, 6});
        case Family::Type1Overlap1A:
            return classical_type_one({1, 2, 3}, {3, 4, 5});
        case Family::Type1Overlap1B:
            return classical_type_one({1, 3, 5}, {2, 3, 4});
        case Family::Type1Overlap1C:
            return classical_type_one({1, 3, 4}, {2, 3, 5});
        case Family::Type1Overlap2A:
            return classical_type_one({1, 2, 3}, {2, 3, 4});
        case Family::Type1Overlap2B:
            return classical_type_one({1, 2, 3}, {1, 3, 4});
        case Family::Type1Square:
            return classical_type_one({1, 2, 3}, {1, 2, 3});
        default:
            return std::nullopt;
    }
}

}  // namespace skein
