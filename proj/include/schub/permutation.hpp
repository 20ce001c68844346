#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace schub {

/// Element of the finite symmetric group S_n in one-line notation.
///
/// Values are stored 0-indexed internally; every public interface that
/// talks about points, images or letters is 1-indexed. Composition is
/// (u*v)(i) = u(v(i)), and w * s_ab (right multiplication) swaps the
/// entries of w at positions a and b.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);  // identity

    static Permutation identity(int n);
    static Permutation longest(int n);  // n n-1 ... 2 1
    static Permutation simple(int n, int i);
    static Permutation transposition(int n, int a, int b);
    /// One-line notation with 1-indexed images, e.g. {2,4,3,1}.
    static Permutation from_one_line(const std::vector<int>& images);
    static Permutation from_lehmer_code(const std::vector<int>& code, int n);

    int size() const { return static_cast<int>(img_.size()); }
    /// w(i), both 1-indexed.
    int operator()(int i) const { return img_[i - 1] + 1; }
    bool is_identity() const;

    Permutation operator*(const Permutation& v) const;
    Permutation inverse() const;
    Permutation right_transposition(int a, int b) const;  // w * s_ab
    Permutation left_simple(int i) const;                 // s_i * w

    /// Number of inversions.
    int length() const;
    std::vector<std::pair<int, int>> inversion_set() const;  // pairs a<b, w(a)>w(b)
    /// Nontrivial cycles, each rotated to start at its smallest element,
    /// sorted by that element.
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> lehmer_code() const;

    /// Re-embed into S_m, m >= n, fixing the new letters.
    Permutation embedded(int m) const;
    /// True if w fixes every letter > m.
    bool fixes_beyond(int m) const;

    std::vector<int> one_line() const;  // 1-indexed images
    std::uint64_t key() const;          // injective encoding for n <= 16, for hashing
    std::string to_string() const;      // "2431" for n<=9, else comma-separated

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;  // img_[i] = w(i+1)-1
};

/// Sequence of simple-transposition letters i_1,...,i_l, each in [n-1].
using ReducedWord = std::vector<int>;

/// Left-to-right product s_{i_1} s_{i_2} ... s_{i_l} in S_n.
Permutation word_product(const ReducedWord& word, int n);
bool is_reduced(const ReducedWord& word, int n);

/// Lexicographically smallest reduced word, by repeatedly taking the
/// smallest left descent.
ReducedWord canonical_reduced_word(const Permutation& w);
/// Every reduced word of w. Only sensible at desk scale.
std::vector<ReducedWord> all_reduced_words(const Permutation& w);

/// The wiring-diagram pairs (alpha_m, beta_m) of a reduced word: at the
/// m-th crossing the wires alpha_m < beta_m (numbered on the right) cross.
/// Throws std::invalid_argument if the word is not reduced.
std::vector<std::pair<int, int>> crossing_pairs(const ReducedWord& word, int n);

/// Strong Bruhat order. Sorted-prefix (Ehresmann) criterion; the subword
/// definition is exercised against it in the test suite.
bool bruhat_leq(const Permutation& v, const Permutation& w);

/// All subsets J of word positions (0-indexed, ascending) whose left-to-right
/// product equals target; with require_reduced, only those with |J| equal to
/// the length of target. Prunes on suffix reachability.
std::vector<std::vector<int>> subwords_with_product(const ReducedWord& word, int n,
                                                    const Permutation& target,
                                                    bool require_reduced);

/// Product of the letters selected by J (0-indexed positions), left to right.
Permutation subword_product(const ReducedWord& word, int n, const std::vector<int>& J);

/// The factored form w * prod_{j not in J} s_{alpha_j beta_j} of the subword
/// product, where w is the full product of the reduced word. Agrees with
/// subword_product on reduced words; the implementation asserts as much.
Permutation complement_factorization(const ReducedWord& word, int n, const std::vector<int>& J);

}  // namespace schub
