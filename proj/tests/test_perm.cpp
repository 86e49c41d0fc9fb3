#include <gtest/gtest.h>

#include <set>

#include "klmasks/perm.hpp"

using namespace klmasks;

namespace {

// Subword characterization of Bruhat order over one fixed reduced word.
std::set<Perm> subword_products(const Perm& w)
{
    Word word = reduced_word(w);
    std::set<Perm> out;
    std::size_t p = word.size();
    for (std::uint32_t m = 0; m < (1u << p); ++m) {
        Word sub;
        for (std::size_t j = 0; j < p; ++j)
            if (m >> j & 1)
                sub.push_back(word[j]);
        out.insert(Perm::from_word(w.n(), sub));
    }
    return out;
}

}  // namespace

TEST(Perm, MultiplyByGenerator)
{
    Perm w = parse_perm("3412");
    Perm r = w * Perm::generator(4, 2);
    EXPECT_EQ(r.str(), "3142");
    EXPECT_EQ(w.length(), 4);
    EXPECT_EQ(r.length(), 3);
    EXPECT_EQ(w * Perm(4), w);
    Perm s1 = Perm::generator(3, 1);
    EXPECT_EQ(s1 * s1, Perm(3));
    EXPECT_EQ(w.times_s(2), r);
    EXPECT_THROW(Perm(3) * Perm(4), std::invalid_argument);
}

TEST(Perm, ReducedWords)
{
    auto rw = reduced_words(parse_perm("3412"));
    ASSERT_EQ(rw.size(), 2u);
    EXPECT_EQ(rw[0], (Word{2, 1, 3, 2}));
    EXPECT_EQ(rw[1], (Word{2, 3, 1, 2}));
    auto id = reduced_words(Perm(4));
    ASSERT_EQ(id.size(), 1u);
    EXPECT_TRUE(id[0].empty());
    auto w0 = reduced_words(parse_perm("321"));
    EXPECT_EQ(w0, (std::vector<Word>{{1, 2, 1}, {2, 1, 2}}));
}

TEST(Perm, ReducedWordsMultiplyBack)
{
    for (const Perm& w : all_perms(5))
        for (const Word& word : reduced_words(w)) {
            EXPECT_EQ(static_cast<int>(word.size()), w.length());
            EXPECT_EQ(Perm::from_word(5, word), w);
        }
}

TEST(Perm, BruhatMatchesSubwordOracle)
{
    for (int n = 2; n <= 5; ++n)
        for (const Perm& w : all_perms(n)) {
            auto below = subword_products(w);
            for (const Perm& x : all_perms(n))
                ASSERT_EQ(bruhat_leq(x, w), below.count(x) > 0) << x.str() << " " << w.str();
        }
    EXPECT_TRUE(bruhat_leq(parse_perm("3412"), parse_perm("4321")));
    EXPECT_FALSE(bruhat_leq(parse_perm("321"), parse_perm("312")));
}

TEST(Perm, LengthChangesByOne)
{
    for (const Perm& w : all_perms(5))
        for (int i = 1; i < 5; ++i)
            EXPECT_EQ(std::abs(w.times_s(i).length() - w.length()), 1);
}

TEST(Perm, Descents)
{
    EXPECT_EQ(descents(parse_perm("4231"), Side::right), (std::vector<int>{1, 3}));
    EXPECT_TRUE(descents(Perm(4), Side::right).empty());
    EXPECT_EQ(descents(parse_perm("321"), Side::right), (std::vector<int>{1, 2}));
    for (const Perm& w : all_perms(4))
        EXPECT_EQ(descents(w, Side::left), descents(w.inverse(), Side::right));
}

TEST(Perm, LiftingLemmaExhaustiveS4)
{
    int checked = 0;
    for (const Perm& w : all_perms(4))
        for (const Perm& x : all_perms(4))
            for (int i = 1; i < 4; ++i) {
                if (x == w || !bruhat_leq(x, w) || !w.right_descent(i) || x.right_descent(i))
                    continue;
                EXPECT_TRUE(lifting_check(x, w, i));
                ++checked;
            }
    EXPECT_GT(checked, 0);
    EXPECT_TRUE(lifting_check(Perm(2), Perm::generator(2, 1), 1));
    EXPECT_TRUE(lifting_check(Perm::generator(3, 2), Perm::from_word(3, {2, 1}), 1));
    EXPECT_THROW(lifting_check(Perm(3), Perm(3), 1), std::invalid_argument);
}

TEST(Perm, ParabolicDecomposition)
{
    auto [v, u] = parabolic_decompose(parse_perm("4231"), {1, 3});
    EXPECT_EQ(v.str(), "2413");
    EXPECT_EQ(u.str(), "2143");
    for (const Perm& w : all_perms(5))
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<int> J;
            for (int i = 1; i <= 4; ++i)
                if (mask >> (i - 1) & 1)
                    J.push_back(i);
            auto [v2, u2] = parabolic_decompose(w, J);
            EXPECT_EQ(v2 * u2, w);
            EXPECT_EQ(v2.length() + u2.length(), w.length());
            for (int j : J)
                EXPECT_FALSE(v2.right_descent(j));
            EXPECT_EQ(parabolic_decompose(u2, J).first, Perm(5));
        }
}

TEST(Perm, RunningExampleDecomposition)
{
    Perm v = Perm::from_word(8, {1, 5, 7, 2, 4, 6, 3, 5, 4});
    Perm u = Perm::from_word(8, {1, 2, 3, 1, 2, 1, 7, 6, 5, 7, 6, 7});
    Perm w = v * u;
    auto [v2, u2] = parabolic_decompose(w, complement_generators(8, {4}));
    EXPECT_EQ(v2, v);
    EXPECT_EQ(u2, u);
    EXPECT_EQ(u2, parabolic_longest(complement_generators(8, {4}), 8));
}

TEST(Perm, ParabolicLongest)
{
    EXPECT_EQ(parabolic_longest({1, 2}, 3).str(), "321");
    EXPECT_EQ(parabolic_longest({1, 3}, 4).str(), "2143");
    // Maximal length inside W_J, checked by search.
    for (int n = 3; n <= 5; ++n)
        for (int z = 1; z < n; ++z) {
            auto J = complement_generators(n, {z});
            Perm w0J = parabolic_longest(J, n);
            int best = -1;
            for (const Perm& x : all_perms(n))
                if (parabolic_decompose(x, J).first == Perm(n))
                    best = std::max(best, x.length());
            EXPECT_EQ(w0J.length(), best);
        }
}

TEST(Perm, PatternPredicates)
{
    EXPECT_TRUE(is_cograssmannian(parse_perm("4231")));
    EXPECT_EQ(ascents(parse_perm("4231"), Side::right), std::vector<int>{2});
    EXPECT_TRUE(is_grassmannian(Perm(4)));
    EXPECT_FALSE(is_cograssmannian(Perm(4)));
    EXPECT_FALSE(is_covexillary(parse_perm("3412")));
    EXPECT_TRUE(is_covexillary(parse_perm("4231")));
}

TEST(Perm, RankMatrix)
{
    auto r = rank_matrix(parse_perm("4231"));
    for (int j = 0; j <= 4; ++j)
        EXPECT_EQ(r[4][j], j);
    EXPECT_EQ(r[1][4], 1);
    EXPECT_EQ(r[1][3], 0);
}

TEST(Perm, Parsing)
{
    EXPECT_EQ(parse_perm("4,2,3,1"), parse_perm("4231"));
    EXPECT_THROW(parse_perm("4221"), std::invalid_argument);
    EXPECT_EQ(parse_word("2,3,1,2,4"), (Word{2, 3, 1, 2, 4}));
    EXPECT_EQ(Perm::from_oneline({1, 2, 3, 4, 5, 6, 7, 8, 10, 9}).str(), "1,2,3,4,5,6,7,8,10,9");
}
