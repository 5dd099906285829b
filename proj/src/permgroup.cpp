#include "cutjoin/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cutjoin {

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 1);
    return p;
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("images are not a bijection of {1..n}");
        seen[v - 1] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    std::vector<bool> used(n, false);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int a = cyc[i];
            const int b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > n) throw std::invalid_argument("cycle point out of range");
            if (used[a - 1]) throw std::invalid_argument("cycles are not disjoint");
            used[a - 1] = true;
            p.images_[a - 1] = b;
        }
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (int x = 1; x <= degree(); ++x) p.images_[images_[x - 1] - 1] = x;
    return p;
}

bool Permutation::is_identity() const {
    for (int x = 1; x <= degree(); ++x)
        if (images_[x - 1] != x) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 1; start <= degree(); ++start) {
        if (seen[start - 1]) continue;
        std::vector<int> cyc;
        int x = start;
        do {
            seen[x - 1] = true;
            cyc.push_back(x);
            x = images_[x - 1];
        } while (x != start);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::cycle_notation() const {
    std::string s;
    for (const auto& cyc : cycles()) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(cyc[i]);
        }
        s += ')';
    }
    return s;
}

Permutation operator*(const Permutation& s, const Permutation& g) {
    if (s.degree() != g.degree())
        throw std::invalid_argument("compose: ambient degrees differ");
    std::vector<int> images(s.degree());
    for (int x = 1; x <= s.degree(); ++x) images[x - 1] = s(g(x));
    return Permutation::from_images(std::move(images));
}

Partition cycle_type(const Permutation& g) {
    std::vector<int> parts;
    for (const auto& cyc : g.cycles()) parts.push_back(static_cast<int>(cyc.size()));
    return make_partition(std::move(parts));
}

Permutation canonical_of_type(const Partition& lambda) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : lambda.parts()) {
        std::vector<int> cyc(part);
        std::iota(cyc.begin(), cyc.end(), next);
        next += part;
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(lambda.weight(), cycles);
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& f) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    do {
        f(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

namespace {

// Builds every permutation of the given cycle type once: the smallest unused
// point always opens a cycle, the cycle length is drawn from the remaining
// multiset of parts, and the rest of the cycle is an ordered arrangement of
// unused points.
struct TypeEnumerator {
    int n;
    std::vector<int> images;
    std::vector<bool> used;
    std::vector<std::pair<int, int>> remaining;  // (part length, multiplicity)
    const std::function<void(const Permutation&)>& f;

    void run() {
        int start = 1;
        while (start <= n && used[start - 1]) ++start;
        if (start > n) {
            f(Permutation::from_images(images));
            return;
        }
        for (auto& [len, mult] : remaining) {
            if (mult == 0) continue;
            --mult;
            used[start - 1] = true;
            extend_cycle(start, start, len - 1);
            used[start - 1] = false;
            ++mult;
        }
    }

    void extend_cycle(int first, int prev, int left) {
        if (left == 0) {
            images[prev - 1] = first;
            run();
            return;
        }
        for (int x = first + 1; x <= n; ++x) {
            if (used[x - 1]) continue;
            used[x - 1] = true;
            images[prev - 1] = x;
            extend_cycle(first, x, left - 1);
            used[x - 1] = false;
        }
    }
};

}  // namespace

void for_each_of_type(const Partition& lambda, int n,
                      const std::function<void(const Permutation&)>& f) {
    if (lambda.weight() != n)
        throw std::invalid_argument("for_each_of_type: weight mismatch");
    TypeEnumerator e{n, std::vector<int>(n), std::vector<bool>(n, false),
                     lambda.exponents(), f};
    e.run();
}

void GroupAlgebraElement::add(const Permutation& g, const Rat& c) {
    if (g.degree() != degree)
        throw std::invalid_argument("group algebra: ambient degree mismatch");
    auto it = terms.find(g);
    if (it == terms.end()) {
        if (c != 0) terms.emplace(g, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms.erase(it);
}

GroupAlgebraElement multiply_class_left(const Partition& lambda, const Permutation& g) {
    if (lambda.weight() != g.degree())
        throw std::invalid_argument("multiply_class_left: weight does not match degree");
    GroupAlgebraElement out(g.degree());
    for_each_of_type(lambda, g.degree(),
                     [&](const Permutation& sigma) { out.add(sigma * g, 1); });
    return out;
}

bool is_transitive(const std::vector<Permutation>& gens, int n) {
    for (const auto& g : gens)
        if (g.degree() != n) throw std::invalid_argument("is_transitive: degree mismatch");
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int x = 1; x <= n; ++x) parent[find(x)] = find(g(x));
    const int root = find(1);
    for (int x = 2; x <= n; ++x)
        if (find(x) != root) return false;
    return true;
}

CycleTuple::CycleTuple(std::vector<int> pts, int n) : points(std::move(pts)), degree(n) {
    if (points.empty()) throw std::invalid_argument("tuple must be nonempty");
    std::vector<bool> seen(n, false);
    for (int p : points) {
        if (p < 1 || p > n || seen[p - 1])
            throw std::invalid_argument("tuple points must be distinct and within 1..n");
        seen[p - 1] = true;
    }
}

Permutation CycleTuple::as_cycle() const {
    return Permutation::from_cycles(degree, {points});
}

void for_each_cycle_tuple(int n, int d, const std::function<void(const CycleTuple&)>& f) {
    if (d > n) return;
    std::vector<int> pts;
    std::vector<bool> used(n, false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(pts.size()) == d) {
            f(CycleTuple(pts, n));
            return;
        }
        for (int x = 1; x <= n; ++x) {
            if (used[x - 1]) continue;
            used[x - 1] = true;
            pts.push_back(x);
            rec();
            pts.pop_back();
            used[x - 1] = false;
        }
    };
    rec();
}

int dist(int j, const Permutation& alpha, const std::vector<int>& marked) {
    std::vector<bool> is_marked(alpha.degree(), false);
    bool j_ok = false;
    for (int m : marked) {
        if (m < 1 || m > alpha.degree())
            throw std::invalid_argument("dist: marked point out of range");
        is_marked[m - 1] = true;
        j_ok |= (m == j);
    }
    if (!j_ok) throw std::invalid_argument("dist: j is not a marked point");
    int x = alpha(j);
    int l = 1;
    while (!is_marked[x - 1]) {
        x = alpha(x);
        ++l;
    }
    return l;
}

TupleClassification classify_tuple(const Permutation& alpha, const CycleTuple& tuple) {
    const int d = tuple.length();
    const auto& marked = tuple.points;
    std::vector<int> index_of(alpha.degree() + 1, 0);  // point -> k with j_k == point
    for (int k = 1; k <= d; ++k) index_of[tuple.point_j(k)] = k;

    std::vector<int> tau_images(d), distances(d);
    for (int k = 1; k <= d; ++k) {
        const int jk = tuple.point_j(k);
        int x = alpha(jk);
        int l = 1;
        while (index_of[x] == 0) {
            x = alpha(x);
            ++l;
        }
        distances[k - 1] = l;
        tau_images[k - 1] = index_of[x];
    }
    return TupleClassification{Permutation::from_images(std::move(tau_images)),
                               std::move(distances)};
}

std::vector<CycleTuple> cbar_subset(const Permutation& alpha, const Permutation& tau,
                                    const std::vector<int>& distances) {
    const int d = tau.degree();
    if (static_cast<int>(distances.size()) != d)
        throw std::invalid_argument("cbar_subset: distance vector length != d");
    std::vector<CycleTuple> out;
    for_each_cycle_tuple(alpha.degree(), d, [&](const CycleTuple& t) {
        const auto cls = classify_tuple(alpha, t);
        if (cls.type_tau == tau && cls.distances == distances) out.push_back(t);
    });
    return out;
}

}  // namespace cutjoin
