#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <vector>

#include "schub/permutation.hpp"

namespace schub {

/// Exact arbitrary-precision integer coefficients.
using Int = boost::multiprecision::cpp_int;

/// Exponent vectors for x_1..x_n and y_1..y_n, both of fixed length n.
struct Monomial {
    std::vector<int> x;
    std::vector<int> y;

    int total_degree() const;
    auto operator<=>(const Monomial&) const = default;
};

/// Sparse polynomial over the integers in x_1..x_n, y_1..y_n.
///
/// Canonical by construction: the term map never stores zero coefficients,
/// so equal polynomials compare equal. The ambient size n travels with the
/// value and is checked on every binary operation; twisted Schubert
/// polynomials are n-dependent, so silently mixing sizes would be a bug.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int n);  // zero

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, Int c);
    static Polynomial x(int n, int i);  // x_i, 1-indexed
    static Polynomial y(int n, int j);

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial

    void add_term(Monomial m, const Int& c);
    Int coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Int& c) const;

    /// Re-embed into ambient size m >= n (pad exponent vectors with zeros).
    Polynomial embedded(int m) const;

    bool operator==(const Polynomial&) const = default;

private:
    void check_same(const Polynomial& o) const;

    int n_ = 0;
    std::map<Monomial, Int> terms_;
};

/// (w P)(x) = P(x_{w(1)}, ..., x_{w(n)}); acts on the x-variables only.
Polynomial act(const Permutation& w, const Polynomial& P);

/// Divided difference (P - s_ab P)/(x_a - x_b), computed per monomial pair
/// by the closed geometric-sum identity, so the quotient is exact by
/// construction and never leaves the integer coefficient ring.
Polynomial divided_difference(int a, int b, const Polynomial& P);
inline Polynomial divided_difference(int i, const Polynomial& P) {
    return divided_difference(i, i + 1, P);
}

/// Twisted operator s_i P + d_i P.
Polynomial twisted_op(int i, const Polynomial& P);

/// Substitute x_j -> y_{w(j)} for every j; the result involves y only.
Polynomial substitute_x_by_y(const Polynomial& P, const Permutation& w);

/// Set every y_j to zero.
Polynomial specialize_y_zero(const Polynomial& P);

bool is_monomial_nonnegative(const Polynomial& P);

/// Terms of minimal total degree. Throws on the zero polynomial.
Polynomial min_degree_part(const Polynomial& P);

/// Elementary symmetric polynomial e_m(A) in the x-variables indexed by A.
/// e_0 = 1; zero for m < 0 or m > |A|.
Polynomial elementary(int m, const std::vector<int>& A, int n);
/// Complete homogeneous polynomial h_m(A); h_0 = 1, zero for m < 0.
Polynomial homogeneous(int m, const std::vector<int>& A, int n);
/// e_m^{(k)} = e_m({1,...,k}) and h_m^{(k)}.
Polynomial elementary_prefix(int m, int k, int n);
Polynomial homogeneous_prefix(int m, int k, int n);

/// x_1^{n-1} x_2^{n-2} ... x_{n-1}.
Polynomial staircase_monomial(int n);
/// prod_{i+j <= n} (x_i - y_j).
Polynomial staircase_double_product(int n);

}  // namespace schub
