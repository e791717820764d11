#pragma once

#include "skein/algebra.hpp"
#include "skein/relcat.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace skein {

struct RewriteLimitExceeded : std::runtime_error {
    long steps;
    explicit RewriteLimitExceeded(long s)
        : std::runtime_error("rewrite step cap exceeded"), steps(s) {}
};

/// Raised when a rewrite step would not strictly decrease the word key;
/// indicates a broken orientation, never expected on catalog rules.
struct RewriteOrderViolation : std::logic_error {
    using std::logic_error::logic_error;
};

constexpr long kDefaultStepCap = 100000;

/// Move t-generators to the front of the word, sorted; t's are central so
/// the coefficient is unchanged.
Word t_normalize(const Word& w);
Element t_normalize(const Element& e);

/// An oriented rule. The lhs is t-normalized; it matches a word whose
/// t-prefix contains the rule's t-prefix as a sub-multiset and whose
/// s-part contains the rule's s-part as a contiguous subword (t's are
/// central, so this is ordinary subword matching up to centrality).
struct Rule {
    Word lhs;
    std::vector<Gen> t_prefix;
    std::vector<Gen> s_part;
    Element rhs;  // every word strictly smaller than lhs
    std::string origin;
};

class RuleSet {
public:
    void add(Rule r);
    const std::vector<Rule>* find_s_part(const std::vector<Gen>& pattern) const;
    const std::set<size_t>& s_lengths() const { return s_lengths_; }
    size_t size() const { return count_; }
    const std::map<std::vector<Gen>, std::vector<Rule>>& rules() const { return by_s_part_; }

private:
    std::map<std::vector<Gen>, std::vector<Rule>> by_s_part_;
    std::set<size_t> s_lengths_;
    size_t count_ = 0;
};

struct OrientStats {
    size_t accepted = 0;
    size_t redundant = 0;                 // instances reducing to zero
    std::vector<std::string> excluded;    // non-unit leading coefficient etc.
};

/// Builds the oriented ruleset. Instances are processed in ascending
/// order of their leading words and normalized against the rules
/// collected so far before being oriented, so commuted variants of the
/// same relation collapse instead of colliding.
RuleSet orient_rules(const std::vector<RelationInstance>& instances, OrientStats* stats = nullptr,
                     long cap = kDefaultStepCap);

struct TraceEntry {
    std::string rule_origin;
    size_t position;
};

struct NormalFormReport {
    Element result;
    long steps = 0;
    std::vector<TraceEntry> trace;
    bool unverified_window = false;
};

/// Exhaustive oriented rewriting: repeatedly rewrites the greatest
/// reducible word at its greatest redex (leftmost on ties) until nothing
/// applies. Throws RewriteLimitExceeded past the cap.
NormalFormReport normal_form(const Element& e, const RuleSet& rules, long cap = kDefaultStepCap,
                             bool want_trace = false);

bool reduces_to_zero(const Element& e, const RuleSet& rules, long cap = kDefaultStepCap);

struct SpanningCase {
    std::string name;
    int n;
    std::vector<int> md_bound;
    int top_degree;
    std::vector<Word> basis;
    std::vector<Word> products;
};

/// The concrete spanning shapes checked by the acceptance suite.
const std::vector<SpanningCase>& spanning_cases();

struct UnknownCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SpanningReport {
    std::string name;
    size_t basis_count = 0;
    size_t products_checked = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

/// Reduces every product named by the case and verifies each normal form
/// lies in the span of the basis words plus lower reduced degree, with
/// the value at q = 1 preserved on seeded generic tuples.
SpanningReport spanning_check(int n, const std::vector<int>& md_bound, const RuleSet& rules,
                              long cap = kDefaultStepCap, int oracle_trials = 5,
                              uint64_t seed = 1);
SpanningReport spanning_check(const SpanningCase& sc, const RuleSet& rules,
                              long cap = kDefaultStepCap, int oracle_trials = 5,
                              uint64_t seed = 1);

struct FuzzReport {
    long trials = 0;
    long divergences = 0;
    std::vector<std::string> witnesses;
    bool passed() const { return divergences == 0; }
};

/// Randomized-strategy confluence check: random inputs bounded by n and
/// degree_bound, random redex choices, all compared against the canonical
/// strategy's normal form.
FuzzReport confluence_fuzz(int n, int degree_bound, int trials, uint64_t seed,
                           const RuleSet& rules, long cap = kDefaultStepCap);

}  // namespace skein
