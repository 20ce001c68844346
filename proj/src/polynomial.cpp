#include "schub/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace schub {

int Monomial::total_degree() const {
    return std::accumulate(x.begin(), x.end(), 0) + std::accumulate(y.begin(), y.end(), 0);
}

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("polynomial ambient size must be positive");
}

Polynomial Polynomial::constant(int n, Int c) {
    Polynomial p(n);
    p.add_term(Monomial{std::vector<int>(n, 0), std::vector<int>(n, 0)}, c);
    return p;
}

Polynomial Polynomial::x(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("variable index out of range");
    Polynomial p(n);
    Monomial m{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    m.x[i - 1] = 1;
    p.add_term(std::move(m), 1);
    return p;
}

Polynomial Polynomial::y(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("variable index out of range");
    Polynomial p(n);
    Monomial m{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    m.y[j - 1] = 1;
    p.add_term(std::move(m), 1);
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

void Polynomial::add_term(Monomial m, const Int& c) {
    if (c == 0) return;
    assert(static_cast<int>(m.x.size()) == n_ && static_cast<int>(m.y.size()) == n_);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
}

void Polynomial::check_same(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ambient size mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r(*this);
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r(*this);
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same(o);
    Polynomial r(n_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (int i = 0; i < n_; ++i) {
                m.x[i] += mb.x[i];
                m.y[i] += mb.y[i];
            }
            r.add_term(std::move(m), ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Int& c) const {
    Polynomial r(n_);
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::embedded(int m) const {
    if (m < n_) throw std::invalid_argument("cannot embed into smaller ambient size");
    Polynomial r(m);
    for (const auto& [mono, c] : terms_) {
        Monomial mm{std::vector<int>(m, 0), std::vector<int>(m, 0)};
        std::copy(mono.x.begin(), mono.x.end(), mm.x.begin());
        std::copy(mono.y.begin(), mono.y.end(), mm.y.begin());
        r.add_term(std::move(mm), c);
    }
    return r;
}

Polynomial act(const Permutation& w, const Polynomial& P) {
    if (w.size() != P.ambient()) throw std::invalid_argument("ambient size mismatch");
    const int n = P.ambient();
    Polynomial r(n);
    for (const auto& [m, c] : P.terms()) {
        Monomial mm{std::vector<int>(n, 0), m.y};
        for (int i = 1; i <= n; ++i) mm.x[w(i) - 1] = m.x[i - 1];
        r.add_term(std::move(mm), c);
    }
    return r;
}

Polynomial divided_difference(int a, int b, const Polynomial& P) {
    const int n = P.ambient();
    if (a == b || a < 1 || b < 1 || a > n || b > n)
        throw std::invalid_argument("divided difference needs two distinct indices in range");
    Polynomial r(n);
    for (const auto& [m, c] : P.terms()) {
        const int p = m.x[a - 1];
        const int q = m.x[b - 1];
        if (p == q) continue;  // symmetric in x_a, x_b: annihilated
        // (x_a^p x_b^q - x_a^q x_b^p) / (x_a - x_b) as an exact geometric sum
        Monomial base = m;
        if (p > q) {
            for (int ra = q; ra <= p - 1; ++ra) {
                base.x[a - 1] = ra;
                base.x[b - 1] = p + q - 1 - ra;
                r.add_term(base, c);
            }
        } else {
            for (int ra = p; ra <= q - 1; ++ra) {
                base.x[a - 1] = ra;
                base.x[b - 1] = p + q - 1 - ra;
                r.add_term(base, -c);
            }
        }
    }
    return r;
}

Polynomial twisted_op(int i, const Polynomial& P) {
    if (i < 1 || i >= P.ambient()) throw std::invalid_argument("twisted operator index out of range");
    return act(Permutation::simple(P.ambient(), i), P) + divided_difference(i, P);
}

Polynomial substitute_x_by_y(const Polynomial& P, const Permutation& w) {
    if (w.size() != P.ambient()) throw std::invalid_argument("ambient size mismatch");
    const int n = P.ambient();
    Polynomial r(n);
    for (const auto& [m, c] : P.terms()) {
        Monomial mm{std::vector<int>(n, 0), m.y};
        for (int j = 1; j <= n; ++j) mm.y[w(j) - 1] += m.x[j - 1];
        r.add_term(std::move(mm), c);
    }
    return r;
}

Polynomial specialize_y_zero(const Polynomial& P) {
    const int n = P.ambient();
    Polynomial r(n);
    for (const auto& [m, c] : P.terms()) {
        if (std::any_of(m.y.begin(), m.y.end(), [](int e) { return e > 0; })) continue;
        r.add_term(m, c);
    }
    return r;
}

bool is_monomial_nonnegative(const Polynomial& P) {
    for (const auto& [m, c] : P.terms())
        if (c < 0) return false;
    return true;
}

Polynomial min_degree_part(const Polynomial& P) {
    if (P.is_zero()) throw std::invalid_argument("min_degree_part of the zero polynomial");
    int dmin = -1;
    for (const auto& [m, c] : P.terms()) {
        const int d = m.total_degree();
        if (dmin < 0 || d < dmin) dmin = d;
    }
    Polynomial r(P.ambient());
    for (const auto& [m, c] : P.terms())
        if (m.total_degree() == dmin) r.add_term(m, c);
    return r;
}

Polynomial elementary(int m, const std::vector<int>& A, int n) {
    Polynomial r(n);
    if (m < 0 || m > static_cast<int>(A.size())) return r;
    std::vector<int> idx(A);
    std::sort(idx.begin(), idx.end());
    // iterate over m-subsets of idx
    std::vector<int> pick(m);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == m) {
            Monomial mono{std::vector<int>(n, 0), std::vector<int>(n, 0)};
            for (int t = 0; t < m; ++t) mono.x[pick[t] - 1] += 1;
            r.add_term(std::move(mono), 1);
            return;
        }
        for (int s = start; s < static_cast<int>(idx.size()); ++s) {
            pick[depth] = idx[s];
            self(self, s + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return r;
}

Polynomial homogeneous(int m, const std::vector<int>& A, int n) {
    Polynomial r(n);
    if (m < 0) return r;
    if (m == 0) return Polynomial::constant(n, 1);
    if (A.empty()) return r;
    std::vector<int> idx(A);
    std::sort(idx.begin(), idx.end());
    std::vector<int> pick(m);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == m) {
            Monomial mono{std::vector<int>(n, 0), std::vector<int>(n, 0)};
            for (int t = 0; t < m; ++t) mono.x[pick[t] - 1] += 1;
            r.add_term(std::move(mono), 1);
            return;
        }
        for (int s = start; s < static_cast<int>(idx.size()); ++s) {
            pick[depth] = idx[s];
            self(self, s, depth + 1);  // weakly increasing
        }
    };
    rec(rec, 0, 0);
    return r;
}

Polynomial elementary_prefix(int m, int k, int n) {
    std::vector<int> A(k);
    std::iota(A.begin(), A.end(), 1);
    return elementary(m, A, n);
}

Polynomial homogeneous_prefix(int m, int k, int n) {
    std::vector<int> A(k);
    std::iota(A.begin(), A.end(), 1);
    return homogeneous(m, A, n);
}

Polynomial staircase_monomial(int n) {
    Polynomial p(n);
    Monomial m{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    for (int i = 0; i < n - 1; ++i) m.x[i] = n - 1 - i;
    p.add_term(std::move(m), 1);
    return p;
}

Polynomial staircase_double_product(int n) {
    Polynomial p = Polynomial::constant(n, 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) p = p * (Polynomial::x(n, i) - Polynomial::y(n, j));
    return p;
}

}  // namespace schub
