#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schub/permutation.hpp"
#include "schub/polynomial.hpp"

namespace schub {

/// One summand of a formal operator expression: an integer multiple of an
/// optional leading permutation action followed (to the right) by a word of
/// divided differences d_{ab}. The word composes with the left symbol
/// outermost, so apply() evaluates it right to left.
struct OperatorTerm {
    long long coeff = 0;
    std::optional<Permutation> leading;
    std::vector<std::pair<int, int>> word;  // pairs (a,b), a != b

    auto operator<=>(const OperatorTerm&) const = default;
};

/// Formal integer combination of words in the d_{ab} alphabet.
///
/// Expressions are kept formal: no rewriting modulo the nil-Coxeter-type
/// relations is attempted. Pairs are normalized to a < b (flipping the sign
/// via d_{ba} = -d_{ab}), like terms are merged, zero terms dropped, and the
/// term list is sorted, so structurally equal expressions compare equal.
/// Semantic equality of distinct forms is decided by apply_equal().
class OperatorExpr {
public:
    OperatorExpr() = default;
    explicit OperatorExpr(int n) : n_(n) {}

    static OperatorExpr zero(int n) { return OperatorExpr(n); }
    static OperatorExpr identity(int n);
    static OperatorExpr single(int n, std::vector<std::pair<int, int>> word, long long coeff = 1);

    int ambient() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<OperatorTerm>& terms() const { return terms_; }

    void add_term(OperatorTerm t);
    OperatorExpr operator+(const OperatorExpr& o) const;
    /// d_{ab} * this (prepends one letter to every term; terms with a leading
    /// permutation are not supported here).
    OperatorExpr left_compose(int a, int b) const;

    /// True when every pair satisfies a < b, every coefficient is positive,
    /// and no term carries a leading permutation.
    bool positive_form() const;

    bool operator==(const OperatorExpr&) const = default;

private:
    void canonicalize();

    int n_ = 0;
    std::vector<OperatorTerm> terms_;
};

/// Evaluate the expression on a polynomial.
Polynomial apply(const OperatorExpr& e, const Polynomial& P);

/// d_w P along a reduced word of w.
Polynomial divided_difference_word(const Permutation& w, const Polynomial& P);
/// T_w P = T_{i_1} ... T_{i_l} P along a reduced word of w.
Polynomial twisted_word_action(const Permutation& w, const Polynomial& P);

/// Macdonald's skew divided difference d_{w/v}: subwords of a reduced word
/// of w that are reduced words of v, with the permutation factors commuted
/// to the left and cancelled against v^{-1}. Zero unless v <= w in Bruhat
/// order.
OperatorExpr skew_divided_difference(const Permutation& w, const Permutation& v);
OperatorExpr skew_divided_difference(const Permutation& w, const Permutation& v,
                                     const ReducedWord& word_of_w);

/// Twisted skew operator: same construction, except the subword products
/// need not be reduced.
OperatorExpr twisted_skew(const Permutation& w, const Permutation& v);
OperatorExpr twisted_skew(const Permutation& w, const Permutation& v,
                          const ReducedWord& word_of_w);

/// Manifestly positive form of the twisted skew operator, built from a
/// reduced word of w0*v: one term prod_{j not in J} d_{alpha_j beta_j} for
/// every subword J of it multiplying (not necessarily reducedly) to w0*w.
OperatorExpr twisted_skew_positive(const Permutation& w, const Permutation& v);
OperatorExpr twisted_skew_positive(const Permutation& w, const Permutation& v,
                                   const ReducedWord& word_of_w0v);

/// Right-hand side of the twisted Leibniz rule:
/// sum_v v(tskew_{w/v} P) * T_v Q. Serves as an independent oracle for
/// twisted_word_action(w, P*Q).
Polynomial leibniz_expand(const Permutation& w, const Polynomial& P, const Polynomial& Q);

/// All monomials in x_1..x_n of total degree <= maxdeg, as polynomials.
std::vector<Polynomial> monomial_basket(int n, int maxdeg);

/// Operator equality certified by application to the degree n(n-1)/2
/// monomial basket (operators in scope never raise degree, so the basket
/// spans every relevant graded piece).
bool apply_equal(const OperatorExpr& a, const OperatorExpr& b);

}  // namespace schub
