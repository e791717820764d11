#pragma once

#include "skein/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace skein {

enum class Family {
    Central,
    Disjoint22,
    Disjoint23,
    Disjoint33,
    PairShare,        // two 2-index symbols sharing one puncture
    PairLinked,       // two 2-index symbols with interleaved supports
    TriplePairShare2, // 3-index against 2-index sharing two punctures
    TriplePairShare1A,
    TriplePairShare1B,
    TriplePairShare1C,
    TriplePairLinked,
    Type2Distinct,    // alternating four-term relation, five punctures
    Type2Repeated,    // alternating four-term relation with a repeated puncture
    Type1Exchange,    // exchange of two interleaved pair-triples
    Type1Split,       // fully linked pair-triple against split triples
    Type1Mixed,       // disjoint triple-triple, mixed interleaving
    Type1Alternating, // disjoint triple-triple, alternating interleaving
    Type1Overlap1A,   // triple-triple sharing one puncture
    Type1Overlap1B,
    Type1Overlap1C,
    Type1Overlap2A,   // triple-triple sharing two punctures
    Type1Overlap2B,
    Type1Square,      // square of a 3-index symbol
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Generator pattern inside a template: indices are formal variables
/// 1..arity; Sii is the s_ii macro token, expanded at instantiation.
struct TplGen {
    enum Kind { T, S2, S3, Sii } kind;
    std::array<int, 3> idx{0, 0, 0};
};

struct TplTerm {
    RingElem coeff;
    std::vector<TplGen> gens;
};

struct RelationTemplate {
    Family family;
    int arity;
    std::vector<TplTerm> body;  // asserted to sum to zero
    std::string source;
};

struct RelationInstance {
    Family family;
    std::vector<int> tuple;
    int shift = 0;
    bool mirrored = false;
    Element element;  // asserted zero in the skein algebra
};

/// The complete template catalog: one centrality schema, three
/// disjoint-commuting shapes, the pair/triple commutator shapes, two
/// four-term (type II) shapes and ten determinant-type (type I) shapes.
const std::vector<RelationTemplate>& catalog();

const RelationTemplate& find_template(Family f);

/// Substitute tuple labels shifted cyclically into the formal variables,
/// sort each symbol's indices, expand s_ii macros, then mirror if asked.
RelationInstance instantiate(const RelationTemplate& tpl, const std::vector<int>& tuple,
                             int shift, bool mirrored);

struct InstanceOptions {
    bool include_mirrors = true;
    bool deduplicate = true;
    std::optional<std::vector<Family>> families;  // default: all
};

/// All instances over puncture labels 1..n in deterministic order:
/// families in catalog order, tuples ascending, then shift, then mirror
/// flag. Instances whose elements coincide with an earlier one are
/// dropped when deduplication is on.
std::vector<RelationInstance> all_instances(int n, const InstanceOptions& opts = {});

/// Classical relations used for the q = 1 cross-checks. One half is
/// written as beta (which specializes to 1/2); s_ii enters as 2 - b t_i^2.
Element classical_type_one(const std::array<int, 3>& a, const std::array<int, 3>& b);
Element classical_type_two(int c, const std::array<int, 4>& a);

/// The classical combination recovered from a quantized type I / type II
/// template at q = 1, on the reference tuple (1..arity). Empty for other
/// families.
std::optional<Element> classical_counterpart(Family f);

}  // namespace skein
