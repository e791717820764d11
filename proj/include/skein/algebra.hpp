#pragma once

#include "skein/qring.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace skein {

struct InvalidSymbol : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GenKind : uint8_t { T = 0, S2 = 1, S3 = 2 };

/// One generator symbol: t_i, s_ij (i<j) or s_ijk (i<j<k). Indices are
/// puncture labels, stored strictly increasing. s_ii is not a generator
/// (it expands to a - b t_i^2).
class Gen {
public:
    static Gen t(int i) { return make(GenKind::T, {i}); }
    static Gen s2(int i, int j) { return make(GenKind::S2, {i, j}); }
    static Gen s3(int i, int j, int k) { return make(GenKind::S3, {i, j, k}); }

    /// Sorts the raw indices; throws InvalidSymbol on repeats or labels < 1.
    static Gen make(GenKind kind, std::vector<int> raw_indices);

    GenKind kind() const { return kind_; }
    int size() const { return kind_ == GenKind::T ? 1 : (kind_ == GenKind::S2 ? 2 : 3); }
    int index(int pos) const { return idx_[static_cast<size_t>(pos)]; }
    int max_index() const { return idx_[static_cast<size_t>(size() - 1)]; }

    int reduced_degree() const { return kind_ == GenKind::T ? 0 : size(); }

    auto operator<=>(const Gen& other) const = default;

    std::string to_string() const;
    static Gen from_string(const std::string& token);

private:
    GenKind kind_ = GenKind::T;
    std::array<int, 3> idx_{0, 0, 0};
};

/// Ordered sequence of generators; the empty word is the identity.
/// Reduced degree and the crossing measure are computed on construction.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Gen> gens);

    const std::vector<Gen>& gens() const { return gens_; }
    bool empty() const { return gens_.empty(); }
    size_t length() const { return gens_.size(); }

    int reduced_degree() const { return reduced_degree_; }
    int crossing_number() const { return crossing_number_; }
    /// Occurrence count of each label 1..n.
    std::vector<int> multidegree(int n) const;

    Word concat(const Word& other) const;
    Word reversed() const;
    Word subword(size_t pos, size_t len) const;
    Word replace(size_t pos, size_t len, const Word& replacement) const;

    bool operator==(const Word& other) const { return gens_ == other.gens_; }

    std::string to_string() const;

private:
    std::vector<Gen> gens_;
    int reduced_degree_ = 0;
    int crossing_number_ = 0;
};

/// Crossing contribution of an unordered generator pair: twice the number
/// of strictly interleaved index pairs between the two supports, plus a
/// fixed surcharge of 6 when both factors are 3-index symbols with
/// overlapping support (those products always resolve into lower terms,
/// and the surcharge ranks them above their resolutions).
int pair_crossing(const Gen& a, const Gen& b);

/// Total order on words: by reduced degree, then crossing number, then
/// shorter-word-first at equal measures, then lexicographic on generators.
/// Returns <0, 0, >0.
int word_compare(const Word& a, const Word& b);

struct WordGreater {
    bool operator()(const Word& a, const Word& b) const { return word_compare(a, b) > 0; }
};

/// Finite R-linear combination of words in the free algebra on the
/// generator set. Terms are kept in descending word order and never have
/// zero coefficients.
class Element {
public:
    using TermMap = std::map<Word, RingElem, WordGreater>;

    Element() = default;
    static Element zero() { return Element(); }
    static Element unit(RingElem c = RingElem::one());
    static Element single(Word w, RingElem c = RingElem::one());
    static Element gen(const Gen& g, RingElem c = RingElem::one());

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    /// Leading (greatest) term; element must be nonzero.
    const std::pair<const Word, RingElem>& leading() const;

    RingElem coeff(const Word& w) const;
    void add_term(const Word& w, const RingElem& c);

    Element operator+(const Element& other) const;
    Element operator-(const Element& other) const;
    Element operator*(const Element& other) const;  // bilinear concatenation
    Element operator-() const;
    Element scaled(const RingElem& c) const;
    bool operator==(const Element& other) const { return terms_ == other.terms_; }
    bool operator!=(const Element& other) const { return !(*this == other); }

    /// Mirror: reverses every word and bars every coefficient;
    /// antihomomorphism and involution.
    Element mirror() const;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// s_ii = a - b t_i^2.
Element expand_sii(int i);

/// s_{ijkl} = b (s_ik s_jl - q^2 s_ij s_kl - q^{-2} s_jk s_il) for i<j<k<l.
Element s4_macro(int i, int j, int k, int l);

struct WordMeasures {
    int reduced_degree;
    std::vector<int> multidegree;
    int crossing_number;
};

WordMeasures word_measures(const Word& w, int n);

}  // namespace skein
