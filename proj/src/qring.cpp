#include "skein/qring.hpp"

#include <sstream>

namespace skein {

HalfLaurent::HalfLaurent(Int constant) {
    if (constant != 0) coeffs_[0] = std::move(constant);
}

HalfLaurent::HalfLaurent(std::vector<std::pair<int, Int>> pairs) {
    for (auto& [e, c] : pairs) insert_term(e, c);
}

HalfLaurent HalfLaurent::q_half_power(int doubled_exp, Int coeff) {
    HalfLaurent p;
    p.insert_term(doubled_exp, coeff);
    return p;
}

HalfLaurent HalfLaurent::alpha() {
    return HalfLaurent({{2, 1}, {-2, 1}});
}

void HalfLaurent::insert_term(int doubled_exp, const Int& c) {
    if (c == 0) return;
    auto it = coeffs_.find(doubled_exp);
    if (it == coeffs_.end()) {
        coeffs_.emplace(doubled_exp, c);
    } else {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
    for (const auto& [e, c] : other.coeffs_) insert_term(e, c);
    return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) {
    for (const auto& [e, c] : other.coeffs_) insert_term(e, -c);
    return *this;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& other) const {
    HalfLaurent r = *this;
    r += other;
    return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& other) const {
    HalfLaurent r = *this;
    r -= other;
    return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& other) const {
    HalfLaurent r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : other.coeffs_) r.insert_term(e1 + e2, c1 * c2);
    return r;
}

HalfLaurent HalfLaurent::operator-() const {
    HalfLaurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

HalfLaurent HalfLaurent::bar() const {
    HalfLaurent r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

Int HalfLaurent::eval_at_sign(int sign) const {
    Int total = 0;
    for (const auto& [e, c] : coeffs_) {
        bool odd = (e % 2) != 0;
        total += (sign < 0 && odd) ? -c : c;
    }
    return total;
}

bool HalfLaurent::try_divide_alpha(HalfLaurent& quotient) const {
    // Long division by q + q^{-1} from the top exponent down. Any quotient
    // exponent must lie in [bottom+2, top-2], which bounds the loop.
    if (is_zero()) {
        quotient = HalfLaurent();
        return true;
    }
    const int bottom = coeffs_.begin()->first;
    std::map<int, Int> rem = coeffs_;
    std::map<int, Int> quot;
    while (!rem.empty()) {
        const int e = rem.rbegin()->first;
        if (e - 2 < bottom + 2) return false;
        const Int c = rem.rbegin()->second;
        quot[e - 2] += c;
        if (quot[e - 2] == 0) quot.erase(e - 2);
        rem.erase(e);
        auto lower = rem.find(e - 4);
        if (lower == rem.end()) {
            rem[e - 4] = -c;
        } else {
            lower->second -= c;
            if (lower->second == 0) rem.erase(lower);
        }
    }
    HalfLaurent q;
    q.coeffs_ = std::move(quot);
    quotient = std::move(q);
    return true;
}

bool HalfLaurent::try_divide(const HalfLaurent& divisor, HalfLaurent& quotient) const {
    if (divisor.is_zero()) return false;
    if (is_zero()) {
        quotient = HalfLaurent();
        return true;
    }
    const int quot_bottom = coeffs_.begin()->first - divisor.coeffs_.begin()->first;
    const int div_top = divisor.coeffs_.rbegin()->first;
    const Int& div_top_coeff = divisor.coeffs_.rbegin()->second;
    std::map<int, Int> rem = coeffs_;
    std::map<int, Int> quot;
    while (!rem.empty()) {
        const int e = rem.rbegin()->first;
        const Int c = rem.rbegin()->second;
        if (c % div_top_coeff != 0) return false;
        const int qe = e - div_top;
        if (qe < quot_bottom) return false;
        const Int qc = c / div_top_coeff;
        quot[qe] = qc;
        for (const auto& [de, dc] : divisor.coeffs_) {
            auto it = rem.find(qe + de);
            if (it == rem.end()) {
                rem[qe + de] = -qc * dc;
                if (rem[qe + de] == 0) rem.erase(qe + de);
            } else {
                it->second -= qc * dc;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    HalfLaurent q;
    q.coeffs_ = std::move(quot);
    quotient = std::move(q);
    return true;
}

int HalfLaurent::alpha_valuation(HalfLaurent& cofactor) const {
    cofactor = *this;
    if (is_zero()) return 0;
    int v = 0;
    HalfLaurent quotient;
    while (cofactor.try_divide_alpha(quotient)) {
        cofactor = quotient;
        ++v;
    }
    return v;
}

bool HalfLaurent::is_monomial_unit(int& doubled_exp, bool& negative) const {
    if (coeffs_.size() != 1) return false;
    const auto& [e, c] = *coeffs_.begin();
    if (c != 1 && c != -1) return false;
    doubled_exp = e;
    negative = (c < 0);
    return true;
}

// ---------------------------------------------------------------------------

RingElem RingElem::make(const std::vector<std::pair<int, Int>>& num_pairs, int alpha_pow) {
    if (alpha_pow < 0) throw std::invalid_argument("RingElem: negative alpha power");
    RingElem r;
    r.num_ = HalfLaurent(num_pairs);
    r.alpha_pow_ = alpha_pow;
    r.canonicalize();
    return r;
}

RingElem RingElem::from_int(Int v) {
    RingElem r;
    r.num_ = HalfLaurent(std::move(v));
    return r;
}

RingElem RingElem::q_power(int doubled_exp) {
    RingElem r;
    r.num_ = HalfLaurent::q_half_power(doubled_exp);
    return r;
}

RingElem RingElem::alpha() {
    RingElem r;
    r.num_ = HalfLaurent::alpha();
    return r;
}

RingElem RingElem::beta() {
    RingElem r;
    r.num_ = HalfLaurent(Int(1));
    r.alpha_pow_ = 1;
    return r;
}

void RingElem::canonicalize() {
    if (num_.is_zero()) {
        alpha_pow_ = 0;
        return;
    }
    HalfLaurent quotient;
    while (alpha_pow_ > 0 && num_.try_divide_alpha(quotient)) {
        num_ = quotient;
        --alpha_pow_;
    }
}

RingElem RingElem::operator+(const RingElem& other) const {
    RingElem r;
    int k = std::max(alpha_pow_, other.alpha_pow_);
    HalfLaurent a = num_;
    for (int i = alpha_pow_; i < k; ++i) a = a * HalfLaurent::alpha();
    HalfLaurent b = other.num_;
    for (int i = other.alpha_pow_; i < k; ++i) b = b * HalfLaurent::alpha();
    r.num_ = a + b;
    r.alpha_pow_ = k;
    r.canonicalize();
    return r;
}

RingElem RingElem::operator-(const RingElem& other) const { return *this + (-other); }

RingElem RingElem::operator*(const RingElem& other) const {
    RingElem r;
    r.num_ = num_ * other.num_;
    r.alpha_pow_ = alpha_pow_ + other.alpha_pow_;
    r.canonicalize();
    return r;
}

RingElem RingElem::operator-() const {
    RingElem r;
    r.num_ = -num_;
    r.alpha_pow_ = alpha_pow_;
    return r;
}

bool RingElem::operator==(const RingElem& other) const {
    return alpha_pow_ == other.alpha_pow_ && num_ == other.num_;
}

RingElem RingElem::bar() const {
    RingElem r;
    r.num_ = num_.bar();
    r.alpha_pow_ = alpha_pow_;
    // bar fixes alpha, so canonical form is preserved as-is.
    return r;
}

Rational RingElem::spec_q1(int sign) const {
    Rational numerator(num_.eval_at_sign(sign));
    Rational denom = 1;
    for (int i = 0; i < alpha_pow_; ++i) denom *= 2;
    return numerator / denom;
}

bool RingElem::try_unit_inverse(RingElem& inverse) const {
    if (num_.is_zero()) return false;
    HalfLaurent reduced = num_;
    int extra_alpha = 0;  // factors of alpha inside num
    HalfLaurent quotient;
    while (reduced.try_divide_alpha(quotient)) {
        reduced = quotient;
        ++extra_alpha;
    }
    int e = 0;
    bool neg = false;
    if (!reduced.is_monomial_unit(e, neg)) return false;
    // *this = (+-1) q^{e/2} alpha^{extra_alpha - alpha_pow_}
    RingElem inv = q_power(-e);
    if (neg) inv = -inv;
    int net = extra_alpha - alpha_pow_;
    if (net > 0) {
        inv = inv * beta().pow(net);
    } else if (net < 0) {
        inv = inv * alpha().pow(-net);
    }
    inverse = inv;
    return true;
}

bool RingElem::try_divide(const RingElem& divisor, RingElem& quotient) const {
    if (divisor.is_zero()) return false;
    if (is_zero()) {
        quotient = zero();
        return true;
    }
    HalfLaurent m1, m2;
    const int v1 = num_.alpha_valuation(m1);
    const int v2 = divisor.num_.alpha_valuation(m2);
    HalfLaurent u;
    if (!m1.try_divide(m2, u)) return false;
    // *this / divisor = u * alpha^{(v1 - k1) - (v2 - k2)}
    const int e = (v1 - alpha_pow_) - (v2 - divisor.alpha_pow_);
    RingElem out;
    out.num_ = u;
    out.alpha_pow_ = 0;
    if (e >= 0) {
        for (int i = 0; i < e; ++i) out.num_ = out.num_ * HalfLaurent::alpha();
    } else {
        out.alpha_pow_ = -e;
    }
    out.canonicalize();
    quotient = out;
    return true;
}

RingElem RingElem::pow(int e) const {
    if (e < 0) throw std::invalid_argument("RingElem::pow: negative exponent");
    RingElem r = one();
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string RingElem::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    auto render_num = [](const HalfLaurent& p) {
        std::ostringstream s;
        bool first = true;
        // descending exponent order reads naturally
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
            Int c = it->second;
            int e = it->first;
            if (first) {
                if (c < 0) {
                    s << "-";
                    c = -c;
                }
            } else {
                s << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            bool unit_coeff = (c == 1) && e != 0;
            if (!unit_coeff) s << c.str();
            if (e != 0) {
                if (!unit_coeff) s << "*";
                if (e % 2 == 0) {
                    int w = e / 2;
                    if (w == 1)
                        s << "q";
                    else
                        s << "q^" << w;
                } else {
                    s << "q^{" << e << "/2}";
                }
            }
        }
        return s.str();
    };
    if (alpha_pow_ == 0) {
        out << render_num(num_);
    } else {
        out << "b";
        if (alpha_pow_ > 1) out << "^" << alpha_pow_;
        std::string n = render_num(num_);
        if (num_.coeffs().size() == 1 && n.find('-') == std::string::npos && n.find(' ') == std::string::npos) {
            if (n != "1") out << "*" << n;
        } else {
            out << "*(" << n << ")";
        }
    }
    return out.str();
}

}  // namespace skein
