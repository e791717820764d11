#include "skein/rewrite.hpp"

#include "skein/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace skein {

Word t_normalize(const Word& w) {
    std::vector<Gen> ts, rest;
    for (const auto& g : w.gens()) {
        if (g.kind() == GenKind::T)
            ts.push_back(g);
        else
            rest.push_back(g);
    }
    if (ts.empty()) return w;
    std::sort(ts.begin(), ts.end());
    ts.insert(ts.end(), rest.begin(), rest.end());
    return Word(std::move(ts));
}

Element t_normalize(const Element& e) {
    Element out;
    for (const auto& [w, c] : e.terms()) out.add_term(t_normalize(w), c);
    return out;
}

void RuleSet::add(Rule r) {
    s_lengths_.insert(r.s_part.size());
    auto& bucket = by_s_part_[r.s_part];
    for (const auto& existing : bucket)
        if (existing.lhs == r.lhs)
            throw std::logic_error("duplicate rule lhs: " + r.lhs.to_string());
    bucket.push_back(std::move(r));
    ++count_;
}

const std::vector<Rule>* RuleSet::find_s_part(const std::vector<Gen>& pattern) const {
    auto it = by_s_part_.find(pattern);
    return it == by_s_part_.end() ? nullptr : &it->second;
}

namespace {

/// multiset inclusion of sorted generator vectors
bool t_subset(const std::vector<Gen>& sub, const std::vector<Gen>& super) {
    size_t i = 0, j = 0;
    while (i < sub.size() && j < super.size()) {
        if (sub[i] == super[j]) {
            ++i;
            ++j;
        } else if (super[j] < sub[i]) {
            ++j;
        } else {
            return false;
        }
    }
    return i == sub.size();
}

struct Redex {
    const Rule* rule;
    size_t pos;  // position within the word's s-part
};

void split_word(const Word& w, std::vector<Gen>& ts, std::vector<Gen>& ss) {
    ts.clear();
    ss.clear();
    for (const auto& g : w.gens()) {
        if (g.kind() == GenKind::T)
            ts.push_back(g);
        else
            ss.push_back(g);
    }
}

/// Greatest applicable rule, leftmost occurrence on ties. Words must be
/// t-normalized.
bool find_redex(const Word& w, const RuleSet& rules, Redex& out) {
    std::vector<Gen> ts, ss;
    split_word(w, ts, ss);
    const Rule* best = nullptr;
    size_t best_pos = 0;
    for (size_t len : rules.s_lengths()) {
        if (len > ss.size()) continue;
        for (size_t pos = 0; pos + len <= ss.size(); ++pos) {
            std::vector<Gen> pat(ss.begin() + static_cast<long>(pos),
                                 ss.begin() + static_cast<long>(pos + len));
            const auto* bucket = rules.find_s_part(pat);
            if (!bucket) continue;
            for (const Rule& r : *bucket) {
                if (!r.t_prefix.empty() && !t_subset(r.t_prefix, ts)) continue;
                if (!best) {
                    best = &r;
                    best_pos = pos;
                    continue;
                }
                int cmp = word_compare(r.lhs, best->lhs);
                if (cmp > 0 || (cmp == 0 && pos < best_pos)) {
                    best = &r;
                    best_pos = pos;
                }
            }
        }
    }
    if (!best) return false;
    out = {best, best_pos};
    return true;
}

void apply_redex(Element& work, const Word w, const RingElem c, const Redex& rx) {
    // w and c are taken by value: the first add_term below may erase the
    // map node that the caller's references pointed into.
    std::vector<Gen> ts, ss;
    split_word(w, ts, ss);
    std::vector<Gen> ts_left = ts;
    for (const auto& tg : rx.rule->t_prefix) {
        auto it = std::find(ts_left.begin(), ts_left.end(), tg);
        ts_left.erase(it);  // guaranteed present by the match
    }
    const size_t len = rx.rule->s_part.size();
    work.add_term(w, -c);
    for (const auto& [rw, rc] : rx.rule->rhs.terms()) {
        std::vector<Gen> gens = ts_left;
        gens.insert(gens.end(), ss.begin(), ss.begin() + static_cast<long>(rx.pos));
        gens.insert(gens.end(), rw.gens().begin(), rw.gens().end());
        gens.insert(gens.end(), ss.begin() + static_cast<long>(rx.pos + len), ss.end());
        Word replaced = t_normalize(Word(std::move(gens)));
        if (word_compare(replaced, w) >= 0)
            throw RewriteOrderViolation("rewrite step failed to decrease: " + w.to_string() +
                                        " -> " + replaced.to_string());
        work.add_term(replaced, c * rc);
    }
}

}  // namespace

NormalFormReport normal_form(const Element& e, const RuleSet& rules, long cap, bool want_trace) {
    if (cap <= 0) throw std::invalid_argument("normal_form: cap must be positive");
    NormalFormReport report;
    Element work = t_normalize(e);

    int max_label = 0, max_rd = 0;
    for (const auto& [w, c] : work.terms()) {
        max_rd = std::max(max_rd, w.reduced_degree());
        for (const auto& g : w.gens()) max_label = std::max(max_label, g.max_index());
    }
    report.unverified_window = (max_label > 6 || max_rd > 9);

    std::set<std::vector<Gen>> irreducible;
    while (true) {
        bool acted = false;
        for (const auto& [w, c] : work.terms()) {
            if (irreducible.count(w.gens())) continue;
            Redex rx;
            if (!find_redex(w, rules, rx)) {
                irreducible.insert(w.gens());
                continue;
            }
            if (report.steps >= cap) throw RewriteLimitExceeded(report.steps);
            ++report.steps;
            if (want_trace) report.trace.push_back({rx.rule->origin, rx.pos});
            apply_redex(work, w, c, rx);
            acted = true;
            break;  // term map changed; restart the scan from the top
        }
        if (!acted) break;
    }
    report.result = std::move(work);
    return report;
}

bool reduces_to_zero(const Element& e, const RuleSet& rules, long cap) {
    return normal_form(e, rules, cap).result.is_zero();
}

// ---------------------------------------------------------------------------

namespace {

std::string instance_origin(const RelationInstance& inst) {
    std::ostringstream out;
    out << family_name(inst.family) << "(";
    for (size_t i = 0; i < inst.tuple.size(); ++i) {
        if (i) out << ",";
        out << inst.tuple[i];
    }
    out << ")v" << inst.shift;
    if (inst.mirrored) out << "m";
    return out.str();
}

}  // namespace

RuleSet orient_rules(const std::vector<RelationInstance>& instances, OrientStats* stats,
                     long cap) {
    struct Candidate {
        Element element;
        std::string origin;
    };
    std::vector<Candidate> cands;
    for (const auto& inst : instances) {
        Element e = t_normalize(inst.element);
        if (e.is_zero()) {
            if (stats) ++stats->redundant;
            continue;
        }
        cands.push_back({std::move(e), instance_origin(inst)});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        return word_compare(a.element.leading().first, b.element.leading().first) < 0;
    });

    RuleSet rules;
    for (auto& cand : cands) {
        Element f = normal_form(cand.element, rules, cap).result;
        if (f.is_zero()) {
            if (stats) ++stats->redundant;
            continue;
        }
        const auto& [lead, coeff] = f.leading();
        RingElem inv;
        Element rhs;
        bool orientable = false;
        if (coeff.try_unit_inverse(inv)) {
            Element rest = f;
            rest.add_term(lead, -coeff);
            rhs = (-rest).scaled(inv);
            orientable = true;
        } else {
            // Scaled relation: the skein module is free, so dividing out a
            // common coefficient factor yields an equally valid relation.
            Element divided;
            orientable = true;
            for (const auto& [w, c] : f.terms()) {
                if (w == lead) continue;
                RingElem quot;
                if (!c.try_divide(coeff, quot)) {
                    orientable = false;
                    break;
                }
                divided.add_term(w, quot);
            }
            if (orientable) rhs = -divided;
        }
        if (!orientable) {
            if (stats)
                stats->excluded.push_back(cand.origin + ": non-unit leading coefficient " +
                                          coeff.to_string());
            continue;
        }
        Rule rule;
        rule.lhs = lead;
        split_word(lead, rule.t_prefix, rule.s_part);
        if (rule.s_part.empty()) {
            if (stats) stats->excluded.push_back(cand.origin + ": pure-t leading word");
            continue;
        }
        rule.rhs = std::move(rhs);
        for (const auto& [w, c] : rule.rhs.terms()) {
            if (word_compare(w, lead) >= 0)
                throw RewriteOrderViolation("oriented rule not decreasing at " + cand.origin);
        }
        rule.origin = cand.origin;
        rules.add(std::move(rule));
        if (stats) ++stats->accepted;
    }
    return rules;
}

// ---------------------------------------------------------------------------

namespace {

Word sw(std::initializer_list<Gen> gens) { return Word(std::vector<Gen>(gens)); }

Gen g2(int i, int j) { return Gen::make(GenKind::S2, {i, j}); }
Gen g3(int i, int j, int k) { return Gen::make(GenKind::S3, {i, j, k}); }

void append_pairing_orders(std::vector<Word>& out, const std::vector<Gen>& gens) {
    std::vector<size_t> idx(gens.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end());
    std::set<std::vector<Gen>> seen;
    do {
        std::vector<Gen> word;
        for (size_t i : idx) word.push_back(gens[i]);
        if (seen.insert(word).second) out.push_back(Word(word));
    } while (std::next_permutation(idx.begin(), idx.end()));
}

/// All products of disjoint 2-index symbols realizing the given label
/// multiset, in every factor order.
void append_pair_triples(std::vector<Word>& out, const std::vector<std::array<int, 2>>& pairing) {
    std::vector<Gen> gens;
    for (const auto& p : pairing) gens.push_back(g2(p[0], p[1]));
    append_pairing_orders(out, gens);
}

std::vector<SpanningCase> build_spanning_cases() {
    std::vector<SpanningCase> cases;

    {
        SpanningCase sc;
        sc.name = "six_distinct";
        sc.n = 6;
        sc.md_bound = {1, 1, 1, 1, 1, 1};
        sc.top_degree = 6;
        sc.basis = {
            sw({g2(1, 3), g2(2, 5), g2(4, 6)}), sw({g2(1, 2), g2(3, 5), g2(4, 6)}),
            sw({g2(1, 5), g2(2, 3), g2(4, 6)}), sw({g2(1, 5), g2(2, 6), g2(3, 4)}),
            sw({g2(1, 3), g2(2, 6), g2(4, 5)}), sw({g2(1, 3), g2(2, 4), g2(5, 6)}),
            sw({g2(1, 6), g2(2, 4), g2(3, 5)}), sw({g3(1, 2, 3), g3(4, 5, 6)}),
            sw({g3(1, 5, 6), g3(2, 3, 4)}),     sw({g3(1, 2, 6), g3(3, 4, 5)}),
            sw({g2(1, 2), g2(3, 4), g2(5, 6)}), sw({g2(1, 6), g2(2, 3), g2(4, 5)}),
            sw({g2(1, 4), g2(2, 3), g2(5, 6)}), sw({g2(1, 6), g2(2, 5), g2(3, 4)}),
            sw({g2(1, 2), g2(3, 6), g2(4, 5)})};
        // every ordered product of two complementary triples
        std::vector<std::array<int, 3>> subsets;
        for (int a = 1; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b)
                for (int c = b + 1; c <= 6; ++c) subsets.push_back({a, b, c});
        for (const auto& s : subsets) {
            std::vector<int> rest;
            for (int v = 1; v <= 6; ++v)
                if (v != s[0] && v != s[1] && v != s[2]) rest.push_back(v);
            sc.products.push_back(sw({g3(s[0], s[1], s[2]), g3(rest[0], rest[1], rest[2])}));
        }
        // every ordered triple-pair product over a perfect matching of 1..6
        std::vector<std::vector<std::array<int, 2>>> matchings;
        std::vector<int> labels = {1, 2, 3, 4, 5, 6};
        std::function<void(std::vector<int>, std::vector<std::array<int, 2>>)> rec =
            [&](std::vector<int> left, std::vector<std::array<int, 2>> acc) {
                if (left.empty()) {
                    matchings.push_back(acc);
                    return;
                }
                int first = left[0];
                for (size_t i = 1; i < left.size(); ++i) {
                    std::vector<int> next;
                    for (size_t j = 1; j < left.size(); ++j)
                        if (j != i) next.push_back(left[j]);
                    auto acc2 = acc;
                    acc2.push_back({first, left[i]});
                    rec(next, acc2);
                }
            };
        rec(labels, {});
        for (const auto& m : matchings) append_pair_triples(sc.products, m);
        cases.push_back(std::move(sc));
    }
    {
        SpanningCase sc;
        sc.name = "five_middle_doubled";
        sc.n = 5;
        sc.md_bound = {1, 1, 2, 1, 1};
        sc.top_degree = 6;
        sc.basis = {sw({g2(1, 3), g2(2, 5), g2(3, 4)}), sw({g2(1, 3), g2(2, 4), g2(3, 5)}),
                    sw({g2(1, 4), g2(2, 3), g2(3, 5)}), sw({g2(1, 2), g2(3, 4), g2(3, 5)}),
                    sw({g2(1, 3), g2(2, 3), g2(4, 5)}), sw({g2(1, 5), g2(2, 3), g2(3, 4)})};
        const int others[4] = {1, 2, 4, 5};
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                std::vector<int> first = {3, others[a], others[b]};
                std::vector<int> second = {3};
                for (int k = 0; k < 4; ++k)
                    if (k != a && k != b) second.push_back(others[k]);
                std::sort(first.begin(), first.end());
                std::sort(second.begin(), second.end());
                sc.products.push_back(
                    sw({g3(first[0], first[1], first[2]), g3(second[0], second[1], second[2])}));
            }
        cases.push_back(std::move(sc));
    }
    {
        SpanningCase sc;
        sc.name = "four_two_doubled_adjacent";
        sc.n = 4;
        sc.md_bound = {1, 2, 2, 1};
        sc.top_degree = 6;
        sc.basis = {sw({g2(1, 4), g2(2, 3), g2(2, 3)}), sw({g2(1, 2), g2(2, 3), g2(3, 4)}),
                    sw({g2(1, 3), g2(2, 3), g2(2, 4)})};
        sc.products.push_back(sw({g3(1, 2, 3), g3(2, 3, 4)}));
        sc.products.push_back(sw({g3(2, 3, 4), g3(1, 2, 3)}));
        append_pair_triples(sc.products, {{1, 2}, {2, 3}, {3, 4}});
        append_pair_triples(sc.products, {{1, 3}, {2, 3}, {2, 4}});
        append_pair_triples(sc.products, {{1, 4}, {2, 3}, {2, 3}});
        cases.push_back(std::move(sc));
    }
    {
        SpanningCase sc;
        sc.name = "four_two_doubled_split";
        sc.n = 4;
        sc.md_bound = {2, 1, 2, 1};
        sc.top_degree = 6;
        sc.basis = {sw({g2(1, 2), g2(1, 3), g2(3, 4)}), sw({g2(1, 3), g2(1, 4), g2(2, 3)}),
                    sw({g2(1, 3), g2(1, 3), g2(2, 4)})};
        sc.products.push_back(sw({g3(1, 2, 3), g3(1, 3, 4)}));
        sc.products.push_back(sw({g3(1, 3, 4), g3(1, 2, 3)}));
        append_pair_triples(sc.products, {{1, 2}, {1, 3}, {3, 4}});
        append_pair_triples(sc.products, {{1, 3}, {1, 4}, {2, 3}});
        append_pair_triples(sc.products, {{1, 3}, {1, 3}, {2, 4}});
        cases.push_back(std::move(sc));
    }
    {
        SpanningCase sc;
        sc.name = "five_distinct";
        sc.n = 5;
        sc.md_bound = {1, 1, 1, 1, 1};
        sc.top_degree = 5;
        sc.basis = {sw({g2(1, 2), g3(3, 4, 5)}), sw({g2(2, 3), g3(1, 4, 5)}),
                    sw({g2(3, 4), g3(1, 2, 5)}), sw({g2(4, 5), g3(1, 2, 3)}),
                    sw({g2(1, 5), g3(2, 3, 4)}), sw({g2(1, 3), g3(2, 4, 5)})};
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b) {
                std::vector<int> rest;
                for (int v = 1; v <= 5; ++v)
                    if (v != a && v != b) rest.push_back(v);
                Gen pair = g2(a, b);
                Gen triple = g3(rest[0], rest[1], rest[2]);
                sc.products.push_back(sw({pair, triple}));
                sc.products.push_back(sw({triple, pair}));
            }
        cases.push_back(std::move(sc));
    }
    {
        SpanningCase sc;
        sc.name = "four_one_doubled";
        sc.n = 4;
        sc.md_bound = {2, 1, 1, 1};
        sc.top_degree = 5;
        sc.basis = {sw({g2(1, 2), g3(1, 3, 4)}), sw({g2(1, 3), g3(1, 2, 4)}),
                    sw({g2(1, 4), g3(1, 2, 3)})};
        for (int i = 2; i <= 4; ++i) {
            std::vector<int> rest;
            for (int v = 2; v <= 4; ++v)
                if (v != i) rest.push_back(v);
            Gen pair = g2(1, i);
            Gen triple = g3(1, rest[0], rest[1]);
            sc.products.push_back(sw({pair, triple}));
            sc.products.push_back(sw({triple, pair}));
        }
        cases.push_back(std::move(sc));
    }
    return cases;
}

}  // namespace

const std::vector<SpanningCase>& spanning_cases() {
    static const std::vector<SpanningCase> cases = build_spanning_cases();
    return cases;
}

SpanningReport spanning_check(int n, const std::vector<int>& md_bound, const RuleSet& rules,
                              long cap, int oracle_trials, uint64_t seed) {
    for (const auto& sc : spanning_cases())
        if (sc.n == n && sc.md_bound == md_bound) return spanning_check(sc, rules, cap, oracle_trials, seed);
    throw UnknownCase("no spanning case for the given puncture-degree pattern");
}

SpanningReport spanning_check(const SpanningCase& sc, const RuleSet& rules, long cap,
                              int oracle_trials, uint64_t seed) {
    SpanningReport report;
    report.name = sc.name;
    report.basis_count = sc.basis.size();

    std::set<std::vector<Gen>> basis_keys;
    for (const auto& b : sc.basis) basis_keys.insert(b.gens());

    std::vector<MatrixTuple> tuples;
    for (int t = 0; t < oracle_trials; ++t)
        tuples.push_back(MatrixTuple::make_generic(sc.n, derive_seed(seed, static_cast<uint64_t>(t))));

    for (const auto& p : sc.products) {
        ++report.products_checked;
        Element in = Element::single(p);
        Element nf = normal_form(in, rules, cap).result;
        for (const auto& [w, c] : nf.terms()) {
            if (w.reduced_degree() < sc.top_degree) continue;
            if (w.reduced_degree() > sc.top_degree) {
                report.failures.push_back(p.to_string() + ": normal form raised degree at " +
                                          w.to_string());
                continue;
            }
            std::vector<Gen> s_only;
            for (const auto& g : w.gens())
                if (g.kind() != GenKind::T) s_only.push_back(g);
            if (!basis_keys.count(s_only))
                report.failures.push_back(p.to_string() + ": word outside basis span: " +
                                          w.to_string());
        }
        for (auto& tup : tuples) {
            EvalContext ctx(tup);
            for (int sign : {+1, -1}) {
                if (eval_element_q1(in, ctx, sign) != eval_element_q1(nf, ctx, sign)) {
                    report.failures.push_back(p.to_string() + ": value changed under reduction");
                    break;
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

FuzzReport confluence_fuzz(int n, int degree_bound, int trials, uint64_t seed,
                           const RuleSet& rules, long cap) {
    FuzzReport report;
    if (n < 2) throw std::invalid_argument("confluence_fuzz: n must be >= 2");
    if (degree_bound > 9 || n > 6)
        throw std::invalid_argument("confluence_fuzz: verified window is n <= 6, degree <= 9");

    std::vector<Gen> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(Gen::t(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) gens.push_back(g2(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) gens.push_back(g3(i, j, k));

    const std::vector<RingElem> coeff_pool = {
        RingElem::one(),        -RingElem::one(),       RingElem::q_power(2),
        RingElem::q_power(-2),  RingElem::alpha(),      RingElem::beta(),
        RingElem::q_power(1),   RingElem::q_power(-1)};

    for (int t = 0; t < trials; ++t) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<uint64_t>(t)));
        auto rand_word = [&]() {
            while (true) {
                size_t len = 1 + rng() % 3;
                std::vector<Gen> ws;
                int rd = 0;
                for (size_t i = 0; i < len; ++i) {
                    const Gen& g = gens[rng() % gens.size()];
                    ws.push_back(g);
                    rd += g.reduced_degree();
                }
                if (rd <= degree_bound) return Word(std::move(ws));
            }
        };
        Element input;
        size_t words = 1 + rng() % 2;
        for (size_t i = 0; i < words; ++i)
            input.add_term(rand_word(), coeff_pool[rng() % coeff_pool.size()]);
        if (input.is_zero()) continue;

        Element canonical = normal_form(input, rules, cap).result;

        // randomized strategy: pick any redex anywhere
        Element work = t_normalize(input);
        long steps = 0;
        while (true) {
            struct Site {
                Word word;
                RingElem coeff;
                Redex rx;
            };
            std::vector<Site> sites;
            for (const auto& [w, c] : work.terms()) {
                std::vector<Gen> ts, ss;
                split_word(w, ts, ss);
                for (size_t len : rules.s_lengths()) {
                    if (len > ss.size()) continue;
                    for (size_t pos = 0; pos + len <= ss.size(); ++pos) {
                        std::vector<Gen> pat(ss.begin() + static_cast<long>(pos),
                                             ss.begin() + static_cast<long>(pos + len));
                        const auto* bucket = rules.find_s_part(pat);
                        if (!bucket) continue;
                        for (const Rule& r : *bucket)
                            if (r.t_prefix.empty() || t_subset(r.t_prefix, ts))
                                sites.push_back({w, c, {&r, pos}});
                    }
                }
            }
            if (sites.empty()) break;
            if (steps++ > cap) throw RewriteLimitExceeded(steps);
            const Site& s = sites[rng() % sites.size()];
            apply_redex(work, s.word, s.coeff, s.rx);
        }
        ++report.trials;
        if (!(work == canonical)) {
            ++report.divergences;
            if (report.witnesses.size() < 10)
                report.witnesses.push_back("input " + input.to_string() + " reached " +
                                           work.to_string() + " vs " + canonical.to_string());
        }
    }
    return report;
}

}  // namespace skein
