#include "schub/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace schub {

Permutation::Permutation(int n) : img_(n) {
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::identity(int n) { return Permutation(n); }

Permutation Permutation::longest(int n) {
    Permutation w(n);
    std::reverse(w.img_.begin(), w.img_.end());
    return w;
}

Permutation Permutation::simple(int n, int i) { return transposition(n, i, i + 1); }

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw std::invalid_argument("transposition indices out of range");
    Permutation w(n);
    std::swap(w.img_[a - 1], w.img_[b - 1]);
    return w;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    Permutation w(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        int v = images[i];
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("one-line notation is not a bijection");
        seen[v - 1] = true;
        w.img_[i] = v - 1;
    }
    return w;
}

Permutation Permutation::from_lehmer_code(const std::vector<int>& code, int n) {
    if (static_cast<int>(code.size()) > n)
        throw std::invalid_argument("Lehmer code longer than ambient size");
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> images;
    images.reserve(n);
    for (int i = 0; i < n; ++i) {
        int c = i < static_cast<int>(code.size()) ? code[i] : 0;
        if (c < 0 || c >= static_cast<int>(avail.size()))
            throw std::invalid_argument("invalid Lehmer code entry");
        images.push_back(avail[c]);
        avail.erase(avail.begin() + c);
    }
    return from_one_line(images);
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& v) const {
    if (size() != v.size()) throw std::invalid_argument("size mismatch in composition");
    Permutation r(size());
    for (int i = 0; i < size(); ++i) r.img_[i] = img_[v.img_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(size());
    for (int i = 0; i < size(); ++i) r.img_[img_[i]] = i;
    return r;
}

Permutation Permutation::right_transposition(int a, int b) const {
    Permutation r(*this);
    std::swap(r.img_[a - 1], r.img_[b - 1]);
    return r;
}

Permutation Permutation::left_simple(int i) const {
    Permutation r(*this);
    for (auto& v : r.img_) {
        if (v == i - 1)
            v = i;
        else if (v == i)
            v = i - 1;
    }
    return r;
}

int Permutation::length() const {
    int inv = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (img_[a] > img_[b]) ++inv;
    return inv;
}

std::vector<std::pair<int, int>> Permutation::inversion_set() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (img_[a] > img_[b]) out.emplace_back(a + 1, b + 1);
    return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (int s = 0; s < size(); ++s) {
        if (seen[s] || img_[s] == s) continue;
        std::vector<int> cyc;
        int c = s;
        while (!seen[c]) {
            seen[c] = true;
            cyc.push_back(c + 1);
            c = img_[c];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<int> Permutation::lehmer_code() const {
    std::vector<int> code(size(), 0);
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (img_[b] < img_[a]) ++code[a];
    return code;
}

Permutation Permutation::embedded(int m) const {
    if (m < size()) throw std::invalid_argument("cannot embed into smaller group");
    Permutation r(m);
    for (int i = 0; i < size(); ++i) r.img_[i] = img_[i];
    return r;
}

bool Permutation::fixes_beyond(int m) const {
    for (int i = m; i < size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(size());
    for (int i = 0; i < size(); ++i) out[i] = img_[i] + 1;
    return out;
}

std::uint64_t Permutation::key() const {
    std::uint64_t k = 0;
    for (int i = 0; i < size(); ++i) k = (k << 4) | static_cast<std::uint64_t>(img_[i]);
    return k;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int i = 0; i < size(); ++i) os << img_[i] + 1;
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) os << ',';
            os << img_[i] + 1;
        }
    }
    return os.str();
}

Permutation word_product(const ReducedWord& word, int n) {
    Permutation w(n);
    for (int letter : word) {
        if (letter < 1 || letter >= n) throw std::invalid_argument("letter out of range");
        w = w.right_transposition(letter, letter + 1);
    }
    return w;
}

bool is_reduced(const ReducedWord& word, int n) {
    return word_product(word, n).length() == static_cast<int>(word.size());
}

ReducedWord canonical_reduced_word(const Permutation& w) {
    ReducedWord word;
    Permutation cur = w;
    Permutation curinv = w.inverse();
    while (!cur.is_identity()) {
        int i = 0;
        for (int c = 1; c < cur.size(); ++c) {
            if (curinv(c) > curinv(c + 1)) {
                i = c;
                break;
            }
        }
        assert(i > 0);
        word.push_back(i);
        cur = cur.left_simple(i);
        curinv = cur.inverse();
    }
    return word;
}

namespace {

void reduced_words_rec(const Permutation& cur, ReducedWord& prefix,
                       std::vector<ReducedWord>& out) {
    if (cur.is_identity()) {
        out.push_back(prefix);
        return;
    }
    const Permutation inv = cur.inverse();
    for (int i = 1; i < cur.size(); ++i) {
        if (inv(i) > inv(i + 1)) {
            prefix.push_back(i);
            reduced_words_rec(cur.left_simple(i), prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace

std::vector<ReducedWord> all_reduced_words(const Permutation& w) {
    std::vector<ReducedWord> out;
    ReducedWord prefix;
    reduced_words_rec(w, prefix, out);
    return out;
}

std::vector<std::pair<int, int>> crossing_pairs(const ReducedWord& word, int n) {
    if (!is_reduced(word, n)) throw std::invalid_argument("crossing_pairs: word is not reduced");
    const int l = static_cast<int>(word.size());
    std::vector<std::pair<int, int>> pairs(l);
    for (int m = 0; m < l; ++m) {
        int a = word[m];
        int b = word[m] + 1;
        // alpha_m = s_{i_l} ... s_{i_{m+1}}(i_m): the rightmost factor acts first.
        for (int q = m + 1; q < l; ++q) {
            const int s = word[q];
            if (a == s)
                a = s + 1;
            else if (a == s + 1)
                a = s;
            if (b == s)
                b = s + 1;
            else if (b == s + 1)
                b = s;
        }
        assert(a < b);
        pairs[m] = {a, b};
    }
    return pairs;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("size mismatch in Bruhat comparison");
    const int n = v.size();
    std::vector<int> pv, pw;
    pv.reserve(n);
    pw.reserve(n);
    for (int i = 1; i <= n; ++i) {
        pv.push_back(v(i));
        pw.push_back(w(i));
        std::vector<int> sv = pv, sw = pw;
        std::sort(sv.begin(), sv.end());
        std::sort(sw.begin(), sw.end());
        for (std::size_t t = 0; t < sv.size(); ++t)
            if (sv[t] > sw[t]) return false;
    }
    return true;
}

namespace {

void subwords_rec(const ReducedWord& word, int pos, const Permutation& acc,
                  const Permutation& target,
                  const std::vector<std::unordered_set<std::uint64_t>>& reach,
                  bool require_reduced, int target_len, std::vector<int>& J,
                  std::vector<std::vector<int>>& out) {
    const int l = static_cast<int>(word.size());
    if (pos == l) {
        if (acc == target && (!require_reduced || static_cast<int>(J.size()) == target_len))
            out.push_back(J);
        return;
    }
    const Permutation needed = acc.inverse() * target;
    if (!reach[pos].count(needed.key())) return;
    if (require_reduced && static_cast<int>(J.size()) > target_len) return;
    // skip letter pos
    subwords_rec(word, pos + 1, acc, target, reach, require_reduced, target_len, J, out);
    // take letter pos
    J.push_back(pos);
    subwords_rec(word, pos + 1, acc.right_transposition(word[pos], word[pos] + 1), target, reach,
                 require_reduced, target_len, J, out);
    J.pop_back();
}

}  // namespace

std::vector<std::vector<int>> subwords_with_product(const ReducedWord& word, int n,
                                                    const Permutation& target,
                                                    bool require_reduced) {
    const int l = static_cast<int>(word.size());
    // reach[p] = products achievable by subwords of positions p..l-1
    std::vector<std::unordered_set<std::uint64_t>> reach(l + 1);
    std::vector<Permutation> frontier{Permutation::identity(n)};
    reach[l].insert(frontier[0].key());
    for (int p = l - 1; p >= 0; --p) {
        std::vector<Permutation> next = frontier;
        for (const auto& z : frontier) next.push_back(Permutation::simple(n, word[p]) * z);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
        for (const auto& z : frontier) reach[p].insert(z.key());
    }
    std::vector<std::vector<int>> out;
    std::vector<int> J;
    subwords_rec(word, 0, Permutation::identity(n), target, reach, require_reduced,
                 target.length(), J, out);
    return out;
}

Permutation subword_product(const ReducedWord& word, int n, const std::vector<int>& J) {
    Permutation w(n);
    for (int j : J) w = w.right_transposition(word[j], word[j] + 1);
    return w;
}

Permutation complement_factorization(const ReducedWord& word, int n, const std::vector<int>& J) {
    const auto pairs = crossing_pairs(word, n);
    std::vector<bool> in_J(word.size(), false);
    for (int j : J) in_J[j] = true;
    Permutation w = word_product(word, n);
    for (std::size_t j = 0; j < word.size(); ++j)
        if (!in_J[j]) w = w.right_transposition(pairs[j].first, pairs[j].second);
    assert(w == subword_product(word, n, J));
    return w;
}

}  // namespace schub
