#include "skein/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

Gen Gen::make(GenKind kind, std::vector<int> raw_indices) {
    const size_t want = kind == GenKind::T ? 1 : (kind == GenKind::S2 ? 2 : 3);
    if (raw_indices.size() != want) throw InvalidSymbol("generator arity mismatch");
    std::sort(raw_indices.begin(), raw_indices.end());
    for (size_t i = 0; i < raw_indices.size(); ++i) {
        if (raw_indices[i] < 1) throw InvalidSymbol("puncture labels start at 1");
        if (i > 0 && raw_indices[i] == raw_indices[i - 1])
            throw InvalidSymbol("repeated index in generator symbol");
    }
    Gen g;
    g.kind_ = kind;
    for (size_t i = 0; i < raw_indices.size(); ++i) g.idx_[i] = raw_indices[i];
    return g;
}

std::string Gen::to_string() const {
    std::ostringstream out;
    out << (kind_ == GenKind::T ? "t" : "s");
    bool multi = false;
    for (int p = 0; p < size(); ++p)
        if (index(p) > 9) multi = true;
    if (multi) {
        out << "{";
        for (int p = 0; p < size(); ++p) {
            if (p) out << ",";
            out << index(p);
        }
        out << "}";
    } else {
        for (int p = 0; p < size(); ++p) out << index(p);
    }
    return out.str();
}

Gen Gen::from_string(const std::string& token) {
    if (token.size() < 2) throw InvalidSymbol("bad generator token: " + token);
    char head = token[0];
    if (head != 't' && head != 's') throw InvalidSymbol("bad generator token: " + token);
    std::vector<int> idx;
    if (token[1] == '{') {
        if (token.back() != '}') throw InvalidSymbol("unterminated index list: " + token);
        std::string inner = token.substr(2, token.size() - 3);
        std::istringstream in(inner);
        std::string part;
        while (std::getline(in, part, ',')) {
            if (part.empty()) throw InvalidSymbol("empty index in: " + token);
            idx.push_back(std::stoi(part));
        }
    } else {
        for (size_t i = 1; i < token.size(); ++i) {
            if (token[i] < '0' || token[i] > '9') throw InvalidSymbol("bad index digit: " + token);
            idx.push_back(token[i] - '0');
        }
    }
    if (head == 't') {
        if (idx.size() != 1) throw InvalidSymbol("t takes one index: " + token);
        return t(idx[0]);
    }
    if (idx.size() == 2) return make(GenKind::S2, idx);
    if (idx.size() == 3) return make(GenKind::S3, idx);
    throw InvalidSymbol("s takes two or three indices: " + token);
}

// ---------------------------------------------------------------------------

namespace {

bool interleaved(int a, int b, int c, int d) {
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

int pair_crossing(const Gen& a, const Gen& b) {
    if (a.kind() == GenKind::T || b.kind() == GenKind::T) return 0;
    int links = 0;
    for (int p = 0; p < a.size(); ++p)
        for (int q = p + 1; q < a.size(); ++q)
            for (int r = 0; r < b.size(); ++r)
                for (int s = r + 1; s < b.size(); ++s)
                    if (interleaved(a.index(p), a.index(q), b.index(r), b.index(s))) ++links;
    int cn = 2 * links;
    if (a.kind() == GenKind::S3 && b.kind() == GenKind::S3) {
        bool share = false;
        for (int p = 0; p < 3 && !share; ++p)
            for (int r = 0; r < 3; ++r)
                if (a.index(p) == b.index(r)) {
                    share = true;
                    break;
                }
        if (share) cn += 6;
    }
    return cn;
}

Word::Word(std::vector<Gen> gens) : gens_(std::move(gens)) {
    for (const auto& g : gens_) reduced_degree_ += g.reduced_degree();
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            crossing_number_ += pair_crossing(gens_[i], gens_[j]);
}

std::vector<int> Word::multidegree(int n) const {
    std::vector<int> md(static_cast<size_t>(n), 0);
    for (const auto& g : gens_)
        for (int p = 0; p < g.size(); ++p) {
            int v = g.index(p);
            if (v >= 1 && v <= n) ++md[static_cast<size_t>(v - 1)];
        }
    return md;
}

Word Word::concat(const Word& other) const {
    std::vector<Gen> gs = gens_;
    gs.insert(gs.end(), other.gens_.begin(), other.gens_.end());
    return Word(std::move(gs));
}

Word Word::reversed() const {
    std::vector<Gen> gs(gens_.rbegin(), gens_.rend());
    return Word(std::move(gs));
}

Word Word::subword(size_t pos, size_t len) const {
    std::vector<Gen> gs(gens_.begin() + static_cast<long>(pos),
                        gens_.begin() + static_cast<long>(pos + len));
    return Word(std::move(gs));
}

Word Word::replace(size_t pos, size_t len, const Word& replacement) const {
    std::vector<Gen> gs;
    gs.reserve(gens_.size() - len + replacement.length());
    gs.insert(gs.end(), gens_.begin(), gens_.begin() + static_cast<long>(pos));
    gs.insert(gs.end(), replacement.gens().begin(), replacement.gens().end());
    gs.insert(gs.end(), gens_.begin() + static_cast<long>(pos + len), gens_.end());
    return Word(std::move(gs));
}

std::string Word::to_string() const {
    if (gens_.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out << " ";
        out << gens_[i].to_string();
    }
    return out.str();
}

int word_compare(const Word& a, const Word& b) {
    if (a.reduced_degree() != b.reduced_degree())
        return a.reduced_degree() < b.reduced_degree() ? -1 : 1;
    if (a.crossing_number() != b.crossing_number())
        return a.crossing_number() < b.crossing_number() ? -1 : 1;
    if (a.length() != b.length()) return a.length() > b.length() ? -1 : 1;  // shorter is greater
    for (size_t i = 0; i < a.length(); ++i) {
        if (a.gens()[i] != b.gens()[i]) return a.gens()[i] < b.gens()[i] ? -1 : 1;
    }
    return 0;
}

// ---------------------------------------------------------------------------

Element Element::unit(RingElem c) { return single(Word(), std::move(c)); }

Element Element::single(Word w, RingElem c) {
    Element e;
    if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
    return e;
}

Element Element::gen(const Gen& g, RingElem c) { return single(Word({g}), std::move(c)); }

const std::pair<const Word, RingElem>& Element::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero element");
    return *terms_.begin();
}

RingElem Element::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RingElem::zero() : it->second;
}

void Element::add_term(const Word& w, const RingElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator+(const Element& other) const {
    Element r = *this;
    for (const auto& [w, c] : other.terms_) r.add_term(w, c);
    return r;
}

Element Element::operator-(const Element& other) const {
    Element r = *this;
    for (const auto& [w, c] : other.terms_) r.add_term(w, -c);
    return r;
}

Element Element::operator*(const Element& other) const {
    Element r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : other.terms_) r.add_term(w1.concat(w2), c1 * c2);
    return r;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Element Element::scaled(const RingElem& c) const {
    Element r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) {
        RingElem prod = k * c;
        if (!prod.is_zero()) r.terms_.emplace(w, prod);
    }
    return r;
}

Element Element::mirror() const {
    Element r;
    for (const auto& [w, c] : terms_) r.add_term(w.reversed(), c.bar());
    return r;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.to_string();
        bool negative = cs.size() > 1 && cs[0] == '-' && cs.find(" - ") == std::string::npos &&
                        cs.find(" + ") == std::string::npos;
        if (first) {
            first = false;
            if (negative) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            if (negative) {
                out << " - ";
                cs = cs.substr(1);
            } else {
                out << " + ";
            }
        }
        bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (w.empty()) {
            out << (compound ? "(" + cs + ")" : cs);
        } else if (cs == "1") {
            out << w.to_string();
        } else {
            out << (compound ? "(" + cs + ")" : cs) << " * " << w.to_string();
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------

Element expand_sii(int i) {
    if (i < 1) throw InvalidSymbol("puncture labels start at 1");
    Element e = Element::unit(RingElem::alpha());
    Word tt({Gen::t(i), Gen::t(i)});
    e.add_term(tt, -RingElem::beta());
    return e;
}

Element s4_macro(int i, int j, int k, int l) {
    if (!(i < j && j < k && k < l))
        throw InvalidSymbol("four-index symbol needs strictly increasing labels");
    auto w = [](Gen a, Gen b) { return Word({a, b}); };
    Element e;
    e.add_term(w(Gen::s2(i, k), Gen::s2(j, l)), RingElem::one());
    e.add_term(w(Gen::s2(i, j), Gen::s2(k, l)), -RingElem::q_power(4));
    e.add_term(w(Gen::s2(j, k), Gen::s2(i, l)), -RingElem::q_power(-4));
    return e.scaled(RingElem::beta());
}

WordMeasures word_measures(const Word& w, int n) {
    return WordMeasures{w.reduced_degree(), w.multidegree(n), w.crossing_number()};
}

}  // namespace skein
