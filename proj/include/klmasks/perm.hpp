#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace klmasks {

inline constexpr int kMaxRank = 24;

using Word = std::vector<int>;  // generator indices, s_i <-> i

// Permutation of {1..n} in one-line notation. Composition is functional:
// (a*b)(i) = a(b(i)), so w*s_i swaps positions i and i+1 of the one-line word.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n);
    static Perm from_oneline(const std::vector<int>& w);
    static Perm from_word(int n, const Word& word);
    static Perm generator(int n, int i);

    int n() const { return n_; }
    int operator()(int i) const { return w_[i - 1]; }
    std::vector<int> oneline() const;

    int length() const;
    Perm inverse() const;
    Perm times_s(int i) const;  // w * s_i
    Perm s_times(int i) const;  // s_i * w
    bool right_descent(int i) const { return w_[i - 1] > w_[i]; }
    bool left_descent(int i) const;

    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

    // "4231" when n < 10, otherwise comma separated.
    std::string str() const;

private:
    std::uint8_t n_ = 0;
    std::array<std::uint8_t, kMaxRank> w_{};
};

enum class Side { left, right };

struct PermLengthLess {
    bool operator()(const Perm& a, const Perm& b) const;
};

Perm parse_perm(const std::string& s);
Word parse_word(const std::string& s);
std::string word_str(const Word& w);

std::vector<int> descents(const Perm& w, Side side);
std::vector<int> ascents(const Perm& w, Side side);

// r[i][j] = #{k <= j : w(k) <= i}, 1-based with row/column 0 all zero.
std::vector<std::vector<int>> rank_matrix(const Perm& w);
bool bruhat_leq(const Perm& x, const Perm& w);

// All reduced words, lexicographically sorted.
std::vector<Word> reduced_words(const Perm& w);
// Lexicographically smallest reduced word.
Word reduced_word(const Perm& w);
bool is_reduced(int n, const Word& word);

// Throws std::invalid_argument when the preconditions x < w, s_i in D_R(w),
// s_i not in D_R(x) fail; otherwise returns whether both lifting
// conclusions hold.
bool lifting_check(const Perm& x, const Perm& w, int i);

// w = v*u with u in W_J and v minimal in its coset vW_J.
std::pair<Perm, Perm> parabolic_decompose(const Perm& w, const std::vector<int>& J);
Perm parabolic_longest(const std::vector<int>& J, int n);
std::vector<int> complement_generators(int n, const std::vector<int>& J);

bool is_cograssmannian(const Perm& w);
bool is_grassmannian(const Perm& w);
bool is_covexillary(const Perm& w);

// Every element of S_n, sorted by length then lexicographically.
const std::vector<Perm>& all_perms(int n);
// Elements of [1, w].
std::vector<Perm> bruhat_interval_below(const Perm& w);

}  // namespace klmasks
