#include "cutjoin/psymring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cutjoin {

PMonomial PMonomial::p(int k, int e) {
    if (k < 1 || e < 1) throw std::invalid_argument("p_k: index and exponent must be >= 1");
    PMonomial m;
    m.exps_.emplace_back(k, e);
    return m;
}

PMonomial PMonomial::from_partition(const Partition& lambda) {
    PMonomial m;
    auto exps = lambda.exponents();             // parts descending
    std::reverse(exps.begin(), exps.end());     // indices ascending
    m.exps_ = std::move(exps);
    return m;
}

int PMonomial::exponent_of(int k) const {
    for (const auto& [i, e] : exps_)
        if (i == k) return e;
    return 0;
}

int PMonomial::weight() const {
    int w = 0;
    for (const auto& [i, e] : exps_) w += i * e;
    return w;
}

int PMonomial::total_degree() const {
    int d = 0;
    for (const auto& [i, e] : exps_) d += e;
    return d;
}

Partition PMonomial::to_partition() const {
    std::vector<int> parts;
    for (const auto& [i, e] : exps_)
        for (int r = 0; r < e; ++r) parts.push_back(i);
    return make_partition(std::move(parts));
}

PMonomial PMonomial::operator*(const PMonomial& o) const {
    PMonomial out;
    auto a = exps_.begin();
    auto b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
            out.exps_.push_back(*a++);
        } else if (a == exps_.end() || b->first < a->first) {
            out.exps_.push_back(*b++);
        } else {
            out.exps_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

PMonomial PMonomial::divided_by_p(int k) const {
    PMonomial out;
    bool found = false;
    for (const auto& [i, e] : exps_) {
        if (i == k) {
            found = true;
            if (e > 1) out.exps_.emplace_back(i, e - 1);
        } else {
            out.exps_.emplace_back(i, e);
        }
    }
    if (!found) throw std::invalid_argument("divided_by_p: monomial has no such factor");
    return out;
}

std::string PMonomial::to_string() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [i, e] : exps_) {
        if (!s.empty()) s += '*';
        s += 'p' + std::to_string(i);
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

PPolynomial::PPolynomial(const Rat& c) {
    if (c != 0) terms_.emplace(PMonomial::unit(), c);
}

PPolynomial::PPolynomial(const PMonomial& m, const Rat& c) {
    if (c != 0) terms_.emplace(m, c);
}

Rat PPolynomial::coefficient(const PMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int PPolynomial::max_weight() const {
    int w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
    return w;
}

void PPolynomial::add_term(const PMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

PPolynomial& PPolynomial::operator+=(const PPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PPolynomial& PPolynomial::operator-=(const PPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PPolynomial& PPolynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

PPolynomial PPolynomial::operator+(const PPolynomial& o) const {
    PPolynomial out = *this;
    out += o;
    return out;
}

PPolynomial PPolynomial::operator-(const PPolynomial& o) const {
    PPolynomial out = *this;
    out -= o;
    return out;
}

PPolynomial PPolynomial::operator*(const PPolynomial& o) const {
    PPolynomial out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

PPolynomial PPolynomial::operator*(const Rat& c) const {
    PPolynomial out = *this;
    out *= c;
    return out;
}

PPolynomial operator*(const Rat& c, const PPolynomial& f) { return f * c; }

PPolynomial PPolynomial::differentiate(int k) const {
    PPolynomial out;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent_of(k);
        if (e == 0) continue;
        out.add_term(m.divided_by_p(k), c * e);
    }
    return out;
}

PPolynomial PPolynomial::truncate_weight(int w) const {
    PPolynomial out;
    for (const auto& [m, c] : terms_)
        if (m.weight() <= w) out.add_term(m, c);
    return out;
}

std::string PPolynomial::to_string() const { return format_ppolynomial(*this); }

PMonomial phi(const Permutation& g) {
    return PMonomial::from_partition(cycle_type(g));
}

PPolynomial phi_linear(const GroupAlgebraElement& x) {
    PPolynomial out;
    for (const auto& [g, c] : x.terms) out.add_term(phi(g), c);
    return out;
}

ZSeries::ZSeries(int k_max, int w_max) : k_max_(k_max), w_max_(w_max) {
    if (k_max < 0 || w_max < 0) throw std::invalid_argument("truncation bounds must be >= 0");
}

const PPolynomial& ZSeries::level(int k) const {
    static const PPolynomial kZero;
    auto it = levels_.find(k);
    return it == levels_.end() ? kZero : it->second;
}

Rat ZSeries::coefficient(int k, const PMonomial& m) const {
    return level(k).coefficient(m);
}

void ZSeries::add(int k, const PMonomial& m, const Rat& c) {
    if (k > k_max_ || m.weight() > w_max_ || c == 0) return;
    auto& lvl = levels_[k];
    lvl.add_term(m, c);
    if (lvl.is_zero()) levels_.erase(k);
}

void ZSeries::add_level(int k, const PPolynomial& f) {
    for (const auto& [m, c] : f.terms()) add(k, m, c);
}

bool ZSeries::is_zero() const { return levels_.empty(); }

ZSeries ZSeries::operator+(const ZSeries& o) const {
    ZSeries out(std::min(k_max_, o.k_max_), std::min(w_max_, o.w_max_));
    for (const auto& [k, f] : levels_) out.add_level(k, f);
    for (const auto& [k, f] : o.levels_) out.add_level(k, f);
    return out;
}

ZSeries ZSeries::operator-(const ZSeries& o) const {
    return *this + o * Rat(-1);
}

ZSeries ZSeries::operator*(const ZSeries& o) const {
    ZSeries out(std::min(k_max_, o.k_max_), std::min(w_max_, o.w_max_));
    for (const auto& [k1, f1] : levels_) {
        for (const auto& [k2, f2] : o.levels_) {
            if (k1 + k2 > out.k_max_) continue;
            out.add_level(k1 + k2, (f1 * f2).truncate_weight(out.w_max_));
        }
    }
    return out;
}

ZSeries ZSeries::operator*(const Rat& c) const {
    ZSeries out(k_max_, w_max_);
    if (c == 0) return out;
    for (const auto& [k, f] : levels_) out.add_level(k, f * c);
    return out;
}

bool ZSeries::operator==(const ZSeries& o) const {
    return k_max_ == o.k_max_ && w_max_ == o.w_max_ && levels_ == o.levels_;
}

ZSeries ZSeries::ddz() const {
    ZSeries out(k_max_ > 0 ? k_max_ - 1 : 0, w_max_);
    for (const auto& [k, f] : levels_) {
        if (k == 0) continue;
        out.add_level(k - 1, f * Rat(k));
    }
    return out;
}

ZSeries series_exp(const ZSeries& s) {
    if (s.coefficient(0, PMonomial::unit()) != 0)
        throw std::invalid_argument("series_exp: constant term must be 0");
    ZSeries out(s.k_max(), s.w_max());
    out.add(0, PMonomial::unit(), 1);
    ZSeries power = out;  // s^0
    Rat inv_factorial = 1;
    // Each term of s has z-order + weight >= 1, so s^m dies past the bound.
    const int m_max = s.k_max() + s.w_max();
    for (int m = 1; m <= m_max; ++m) {
        power = power * s;
        if (power.is_zero()) break;
        inv_factorial /= m;
        out = out + power * inv_factorial;
    }
    return out;
}

ZSeries series_log(const ZSeries& s) {
    if (s.coefficient(0, PMonomial::unit()) != 1)
        throw std::invalid_argument("series_log: constant term must be 1");
    ZSeries u = s;
    u.add(0, PMonomial::unit(), -1);  // u = s - 1
    ZSeries out(s.k_max(), s.w_max());
    ZSeries power(s.k_max(), s.w_max());
    power.add(0, PMonomial::unit(), 1);
    const int m_max = s.k_max() + s.w_max();
    for (int m = 1; m <= m_max; ++m) {
        power = power * u;
        if (power.is_zero()) break;
        out = out + power * Rat(m % 2 == 1 ? 1 : -1, m);
    }
    return out;
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer at position " +
                                                      std::to_string(start));
        return Int(text.substr(start, pos - start));
    }

    // [coefficient] [* p-factor]* ; a bare coefficient or a bare monomial is fine.
    PPolynomial term() {
        Rat coeff = 1;
        PMonomial mono;
        bool saw_factor = false;
        bool pending_star = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = integer();
            if (eat('/'))
                coeff = Rat(num, integer());
            else
                coeff = Rat(num);
            saw_factor = true;
            pending_star = eat('*');
            if (!pending_star && (peek() == 'p' || peek() == 'P'))
                throw std::invalid_argument("expected '*' between coefficient and monomial");
        }
        while (peek() == 'p' || peek() == 'P') {
            ++pos;
            const Int idx = integer();
            if (idx < 1 || idx > 1'000'000) throw std::invalid_argument("p index out of range");
            int e = 1;
            if (eat('^')) {
                const Int ee = integer();
                if (ee < 1 || ee > 1'000'000) throw std::invalid_argument("exponent out of range");
                e = static_cast<int>(ee);
            }
            mono = mono * PMonomial::p(static_cast<int>(idx), e);
            saw_factor = true;
            pending_star = eat('*');
            if (!pending_star) break;
        }
        if (pending_star) throw std::invalid_argument("dangling '*' at position " +
                                                      std::to_string(pos));
        if (!saw_factor) throw std::invalid_argument("expected term at position " +
                                                     std::to_string(pos));
        return PPolynomial(mono, coeff);
    }

    PPolynomial poly() {
        PPolynomial out;
        bool negative = eat('-');
        if (!negative) eat('+');
        while (true) {
            PPolynomial t = term();
            out += negative ? t * Rat(-1) : t;
            skip_ws();
            if (pos >= text.size()) break;
            if (eat('+'))
                negative = false;
            else if (eat('-'))
                negative = true;
            else
                throw std::invalid_argument("unexpected character at position " +
                                            std::to_string(pos));
        }
        return out;
    }
};

}  // namespace

PPolynomial parse_ppolynomial(const std::string& text) {
    Parser p{text};
    p.skip_ws();
    if (p.pos >= text.size()) throw std::invalid_argument("empty polynomial");
    return p.poly();
}

std::string format_ppolynomial(const PPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : f.terms()) {
        const bool neg = c < 0;
        const Rat abs_c = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m.is_unit()) {
            s += rat_to_string(abs_c);
        } else if (abs_c == 1) {
            s += m.to_string();
        } else {
            s += rat_to_string(abs_c) + "*" + m.to_string();
        }
    }
    return s;
}

}  // namespace cutjoin
