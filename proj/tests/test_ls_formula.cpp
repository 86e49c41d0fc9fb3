#include <gtest/gtest.h>

#include "klmasks/ls_formula.hpp"

using namespace klmasks;

namespace {

Perm running_example()
{
    return Perm::from_word(8, {1, 5, 7, 2, 4, 6, 3, 5, 4, 1, 2, 3, 1, 2, 1, 7, 6, 5, 7, 6, 7});
}

std::vector<Perm> cograssmannian(int n)
{
    std::vector<Perm> out;
    for (const Perm& w : all_perms(n))
        if (is_cograssmannian(w))
            out.push_back(w);
    return out;
}

}  // namespace

TEST(LSTree, RunningExampleShape)
{
    LSTree t = ls_tree(running_example());
    ASSERT_EQ(t.size(), 4);
    EXPECT_EQ(t.nodes[1].parent, 0);
    EXPECT_EQ(t.nodes[2].parent, 1);
    EXPECT_EQ(t.nodes[3].parent, 0);
    EXPECT_EQ(t.leaves, (std::vector<int>{2, 3}));
    EXPECT_EQ(t.nodes[2].column, 3);
    EXPECT_EQ(t.nodes[3].column, 6);
}

TEST(LSTree, RunningExampleLabelings)
{
    auto ls = enumerate_labelings(ls_tree(running_example()));
    std::vector<std::vector<int>> got;
    for (const auto& t : ls)
        got.push_back(t.labels);
    std::vector<std::vector<int>> expect{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0},
                                         {0, 0, 1, 1}, {0, 1, 1, 0}, {0, 1, 1, 1}};
    EXPECT_EQ(got, expect);
}

TEST(LSTree, LabelingsRespectOrderAndCapacity)
{
    for (const Perm& w : cograssmannian(6)) {
        LSTree tree = ls_tree(w);
        for (const auto& t : enumerate_labelings(tree)) {
            for (int v = 1; v < tree.size(); ++v)
                EXPECT_GE(t.labels[v], t.labels[tree.nodes[v].parent]);
            for (int leaf : tree.leaves)
                EXPECT_LE(t.labels[leaf], tree.nodes[leaf].capacity);
        }
    }
}

TEST(LSFormula, MatchesOracleThroughS5)
{
    for (int n = 2; n <= 5; ++n)
        for (const Perm& w : cograssmannian(n))
            for (const Perm& x : all_perms(n))
                ASSERT_EQ(ls_kl(x, w), kl_polynomial(x, w)) << x.str() << " " << w.str();
}

TEST(LSFormula, Example4231)
{
    EXPECT_EQ(ls_kl(Perm(4), parse_perm("4231")).str(), "1+q");
    EXPECT_EQ(ls_kl(parse_perm("2143"), parse_perm("4231")).str(), "1+q");
    EXPECT_EQ(ls_kl(parse_perm("4231"), parse_perm("4231")).str(), "1");
    EXPECT_TRUE(ls_kl(parse_perm("4321"), parse_perm("4231")).is_zero());
}

TEST(LSFormula, GammaOfZeroLabelingIsAllOnes)
{
    for (const Perm& w : cograssmannian(5)) {
        LSTree tree = ls_tree(w);
        EdgeLabeling zero{std::vector<int>(tree.size(), 0)};
        GammaX g = gamma_and_x(w, zero);
        EXPECT_EQ(g.x, w);
        EXPECT_EQ(g.gamma, Bits(w.length(), 1));
    }
}

TEST(BprimeExpansion, RunningExampleExponents)
{
    auto terms = cog_bprime_expansion(running_example());
    std::vector<int> exps;
    for (const auto& t : terms)
        exps.push_back(t.v_exponent);
    EXPECT_EQ(exps, (std::vector<int>{0, -1, -3, -3, -1, -1}));
    EXPECT_EQ(terms[0].x, running_example());
    EXPECT_EQ(terms[2].x, terms[4].x);
}

TEST(BprimeExpansion, EqualsCprimeThroughS5)
{
    for (int n = 2; n <= 5; ++n)
        for (const Perm& w : cograssmannian(n))
            ASSERT_EQ(bprime_sum(n, cog_bprime_expansion(w)), cprime_element(w)) << w.str();
}

TEST(BprimeExpansion, PrincipalIdeals)
{
    for (int n = 2; n <= 4; ++n)
        for (const Perm& w : cograssmannian(n))
            EXPECT_TRUE(check_principal_ideals(w)) << w.str();
}

TEST(Cograssmannianize, IsMaximalInCoset)
{
    for (const Perm& x : all_perms(4)) {
        Perm y = cograssmannianize(x, 2);
        EXPECT_TRUE(bruhat_leq(x, y));
        for (int i : {1, 3})
            EXPECT_TRUE(y.right_descent(i));
    }
}
