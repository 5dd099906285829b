#include "cutjoin/xmatrix.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cutjoin {

XMonomial XMonomial::var(int a, int b, int e) {
    if (a < 1 || b < 1 || e < 1) throw std::invalid_argument("bad X variable");
    XMonomial m;
    m.exps_.emplace_back(std::make_pair(a, b), e);
    return m;
}

int XMonomial::exponent_of(int a, int b) const {
    for (const auto& [key, e] : exps_)
        if (key == std::make_pair(a, b)) return e;
    return 0;
}

int XMonomial::total_degree() const {
    int d = 0;
    for (const auto& [key, e] : exps_) d += e;
    return d;
}

int XMonomial::max_index() const {
    int m = 0;
    for (const auto& [key, e] : exps_) m = std::max({m, key.first, key.second});
    return m;
}

XMonomial XMonomial::operator*(const XMonomial& o) const {
    XMonomial out;
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

XMonomial XMonomial::divided_by(int a, int b) const {
    XMonomial out;
    bool found = false;
    for (const auto& [key, e] : exps_) {
        if (key == std::make_pair(a, b)) {
            found = true;
            if (e > 1) out.exps_.emplace_back(key, e - 1);
        } else {
            out.exps_.emplace_back(key, e);
        }
    }
    if (!found) throw std::invalid_argument("divided_by: monomial has no such factor");
    return out;
}

std::string XMonomial::to_string() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [key, e] : exps_) {
        if (!s.empty()) s += '*';
        s += "X[" + std::to_string(key.first) + "," + std::to_string(key.second) + "]";
        if (e > 1) s += '^' + std::to_string(e);
    }
    return s;
}

XPolynomial::XPolynomial(int N) : N_(N) {
    if (N < 1) throw std::invalid_argument("truncation must be >= 1");
}

XPolynomial::XPolynomial(int N, const XMonomial& m, const Rat& c) : XPolynomial(N) {
    add_term(m, c);
}

Rat XPolynomial::coefficient(const XMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void XPolynomial::add_term(const XMonomial& m, const Rat& c) {
    if (m.max_index() > N_)
        throw std::invalid_argument("monomial index exceeds the truncation bound");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& o) {
    if (o.N_ != N_) throw std::invalid_argument("truncation bounds differ");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& o) {
    if (o.N_ != N_) throw std::invalid_argument("truncation bounds differ");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
    XPolynomial out = *this;
    out += o;
    return out;
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const {
    XPolynomial out = *this;
    out -= o;
    return out;
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
    if (o.N_ != N_) throw std::invalid_argument("truncation bounds differ");
    XPolynomial out(N_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

XPolynomial XPolynomial::operator*(const Rat& c) const {
    XPolynomial out(N_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

XPolynomial XPolynomial::differentiate(int a, int b) const {
    XPolynomial out(N_);
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent_of(a, b);
        if (e == 0) continue;
        out.add_term(m.divided_by(a, b), c * e);
    }
    return out;
}

std::string XPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rat abs_c = neg ? Rat(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (m.is_unit())
            s += rat_to_string(abs_c);
        else if (abs_c == 1)
            s += m.to_string();
        else
            s += rat_to_string(abs_c) + "*" + m.to_string();
    }
    return s;
}

XPolynomial trace_power(int N, int k) {
    if (k < 1) throw std::invalid_argument("trace power needs k >= 1");
    XPolynomial out(N);
    std::vector<int> idx(k, 1);
    while (true) {
        XMonomial m;
        for (int i = 0; i < k; ++i) m = m * XMonomial::var(idx[i], idx[(i + 1) % k]);
        out.add_term(m, 1);
        int i = k - 1;
        while (i >= 0 && idx[i] == N) idx[i--] = 1;
        if (i < 0) break;
        ++idx[i];
    }
    return out;
}

XPolynomial apply_D(int a, int b, const XPolynomial& f) {
    const int N = f.truncation();
    if (a < 1 || a > N || b < 1 || b > N)
        throw std::invalid_argument("apply_D: index out of truncation");
    XPolynomial out(N);
    for (int c = 1; c <= N; ++c) {
        XPolynomial df = f.differentiate(b, c);
        if (df.is_zero()) continue;
        out += XPolynomial(N, XMonomial::var(a, c)) * df;
    }
    return out;
}

namespace {

// One monomial through the normal-ordered D_{(a_1..a_d)}: derivative columns
// e_i range over columns actually present in row a_{i+1} of m.
void apply_D_tuple_monomial(const std::vector<int>& a, const XMonomial& m, const Rat& c,
                            XPolynomial& out) {
    const int d = static_cast<int>(a.size());
    std::vector<std::vector<int>> column_choices(d);
    for (int i = 0; i < d; ++i) {
        const int row = a[(i + 1) % d];
        for (const auto& [key, e] : m.exponents())
            if (key.first == row) column_choices[i].push_back(key.second);
        if (column_choices[i].empty()) return;
    }
    std::vector<int> e(d);
    std::function<void(int, const XMonomial&, const Rat&)> rec =
        [&](int i, const XMonomial& cur, const Rat& coeff) {
            if (i == d) {
                XMonomial full = cur;
                for (int j = 0; j < d; ++j) full = full * XMonomial::var(a[j], e[j]);
                out.add_term(full, coeff);
                return;
            }
            for (int col : column_choices[i]) {
                const int exp = cur.exponent_of(a[(i + 1) % d], col);
                if (exp == 0) continue;
                e[i] = col;
                rec(i + 1, cur.divided_by(a[(i + 1) % d], col), coeff * exp);
            }
        };
    rec(0, m, c);
}

}  // namespace

XPolynomial apply_D_tuple(const std::vector<int>& a, const XPolynomial& f) {
    const int N = f.truncation();
    for (int ai : a)
        if (ai < 1 || ai > N)
            throw std::invalid_argument("apply_D_tuple: index out of truncation");
    if (a.empty()) throw std::invalid_argument("apply_D_tuple: empty tuple");
    XPolynomial out(N);
    for (const auto& [m, c] : f.terms()) apply_D_tuple_monomial(a, m, c, out);
    return out;
}

XPolynomial apply_w_truncated(int d, const XPolynomial& f) {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    const int N = f.truncation();
    XPolynomial out(N);
    for (const auto& [m, c] : f.terms()) {
        // Rows absent from m are annihilated, so index tuples range over the
        // rows of m only.
        std::set<int> row_set;
        for (const auto& [key, e] : m.exponents()) row_set.insert(key.first);
        const std::vector<int> rows(row_set.begin(), row_set.end());
        if (rows.empty()) continue;  // constant term dies for every d >= 1
        std::vector<int> a(d);
        std::function<void(int)> rec = [&](int i) {
            if (i == d) {
                apply_D_tuple_monomial(a, m, c, out);
                return;
            }
            for (int r : rows) {
                a[i] = r;
                rec(i + 1);
            }
        };
        rec(0);
    }
    XPolynomial scaled = out * Rat(1, d);
    return scaled;
}

XMonomial x_monomial_of_permutation(const Permutation& g, const std::vector<int>& labels,
                                    int N) {
    if (static_cast<int>(labels.size()) != g.degree())
        throw std::invalid_argument("labels length must equal the degree");
    XMonomial m;
    for (int i = 1; i <= g.degree(); ++i) {
        const int from = labels[i - 1];
        const int to = labels[g(i) - 1];
        if (from < 1 || from > N || to < 1 || to > N)
            throw std::invalid_argument("label out of truncation");
        m = m * XMonomial::var(from, to);
    }
    return m;
}

XPolynomial p_to_x_subst(const PPolynomial& f, int N) {
    XPolynomial out(N);
    std::map<int, XPolynomial> trace_cache;
    for (const auto& [m, c] : f.terms()) {
        XPolynomial term(N, XMonomial::unit(), c);
        for (const auto& [k, e] : m.exponents()) {
            auto it = trace_cache.find(k);
            if (it == trace_cache.end())
                it = trace_cache.emplace(k, trace_power(N, k)).first;
            for (int r = 0; r < e; ++r) term = term * it->second;
        }
        out += term;
    }
    return out;
}

}  // namespace cutjoin
