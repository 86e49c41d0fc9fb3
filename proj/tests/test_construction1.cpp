#include <gtest/gtest.h>

#include <random>
#include <set>

#include "klmasks/construction1.hpp"

using namespace klmasks;

namespace {

std::vector<Perm> cograssmannian(int n)
{
    std::vector<Perm> out;
    for (const Perm& w : all_perms(n))
        if (is_cograssmannian(w))
            out.push_back(w);
    return out;
}

bool strictly_decreasing(const std::vector<int>& a)
{
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] <= a[i + 1])
            return false;
    return true;
}

}  // namespace

TEST(Partitions, SmallCases)
{
    PartitionQuad a = derive_partitions({2, 1}, 0);
    EXPECT_EQ(a.lambda_prime, std::vector<int>{1});
    PartitionQuad b = derive_partitions({2, 2}, 1);
    EXPECT_EQ(b.lambda_dag, (std::vector<int>{2, 2}));
    EXPECT_EQ(b.nu, (std::vector<int>{2, 1}));
    EXPECT_EQ(b.eta, std::vector<int>{1});
    PartitionQuad c = derive_partitions({0}, 3);
    EXPECT_TRUE(c.lambda_prime.empty());
    EXPECT_TRUE(c.nu.empty());
    EXPECT_TRUE(c.eta.empty());
    EXPECT_EQ(transpose_partition({3, 1}), (std::vector<int>{2, 1, 1}));
}

TEST(Partitions, DerivedPartsAreDistinct)
{
    std::mt19937 rng(4);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> lambda;
        int cur = 1 + static_cast<int>(rng() % 7);
        for (int k = 0; k < 6; ++k) {
            lambda.push_back(cur);
            cur = static_cast<int>(rng() % (cur + 1));
        }
        PartitionQuad pq = derive_partitions(lambda, static_cast<int>(rng() % 4));
        EXPECT_TRUE(strictly_decreasing(pq.lambda_prime));
        EXPECT_TRUE(strictly_decreasing(pq.nu));
        EXPECT_TRUE(strictly_decreasing(pq.eta));
    }
}

TEST(Construction1, ZeroLabelingGivesAllOnes)
{
    for (const Perm& w : cograssmannian(5)) {
        LSTree tree = ls_tree(w);
        EdgeLabeling zero{std::vector<int>(tree.size(), 0)};
        SigmaT s = build_sigma_t(w, zero);
        EXPECT_EQ(s.sigma.bits, Bits(w.length(), 1));
        EXPECT_TRUE(s.P.empty());
        for (int leaf : tree.leaves)
            EXPECT_EQ(valley_stats(w, zero, tree.nodes[leaf].column).p, 0);
    }
}

TEST(Construction1, Example4231)
{
    Perm w = parse_perm("4231");
    EdgeLabeling t{{0, 1}};
    ValleyStats st = valley_stats(w, t, 2);
    EXPECT_EQ(st.p, 1);
    EXPECT_EQ(st.q, 1);
    // Diagonals are counted up to max(p, q + 1), so the one starting in
    // column v + 1 counts too.
    EXPECT_EQ(st.r, 2);
    SigmaT s = build_sigma_t(w, t);
    EXPECT_EQ(bits_str(s.sigma.bits), "01010");
    EXPECT_EQ(s.P, DefectSet{5});
    EXPECT_EQ(s.x, parse_perm("2143"));
    EXPECT_THROW(valley_stats(w, t, 1), std::invalid_argument);
}

TEST(Construction1, ValueDefectsAndRoundTripThroughS6)
{
    for (int n = 2; n <= 6; ++n)
        for (const Perm& w : cograssmannian(n)) {
            std::set<DefectSet> seen;
            for (const auto& t : enumerate_labelings(ls_tree(w))) {
                SigmaT s = build_sigma_t(w, t);
                DefectProfile d = defect_profile(s.sigma);
                EXPECT_EQ(d.value, gamma_and_x(w, t).x);
                EXPECT_EQ(d.d, t.size());
                EXPECT_TRUE(seen.insert(s.P).second) << w.str();
                auto back = recover_labeling(w, s.P);
                ASSERT_TRUE(back.has_value()) << w.str();
                EXPECT_EQ(back->labels, t.labels);
            }
        }
}

TEST(Construction1, SegmentsAreDisjoint)
{
    for (const Perm& w : cograssmannian(6))
        for (const auto& t : enumerate_labelings(ls_tree(w))) {
            std::set<int> used;
            for (const auto& s : segment_regions(w, t)) {
                EXPECT_LE(s.stats.r, static_cast<int>(s.diagonals.size()));
                for (int e : s.all())
                    EXPECT_TRUE(used.insert(e).second) << w.str();
            }
        }
}

TEST(Construction1, RecoverRejectsForeignDefectSets)
{
    Perm w = parse_perm("4231");
    EXPECT_FALSE(recover_labeling(w, {1}).has_value());
    EXPECT_FALSE(recover_labeling(w, {9}).has_value());
    auto zero = recover_labeling(w, {});
    ASSERT_TRUE(zero.has_value());
    EXPECT_EQ(zero->labels, (std::vector<int>{0, 0}));
}

TEST(Construction1, EachPartIsAScaledBprime)
{
    for (int n = 3; n <= 5; ++n)
        for (const Perm& w : cograssmannian(n)) {
            Construction1 c = construction1_set(w);
            for (const SigmaT& s : c.parts) {
                MaskSet part = construction1_part(n, c.word, s.P, s.x);
                int e = 2 * s.t.size() + s.x.length() - w.length();
                EXPECT_EQ(prototype(part).h, bprime_element(s.x) * LPoly::monomial(1, e)) << w.str();
            }
        }
}

TEST(Construction1, DeodharThroughS5)
{
    for (int n = 2; n <= 5; ++n)
        for (const Perm& w : cograssmannian(n)) {
            DeodharResult r = deodhar_check(construction1_set(w).set);
            EXPECT_TRUE(r.ok()) << w.str() << ": " << r.detail;
        }
}

TEST(Construction1, RationallySmoothGivesDefectFreeMasks)
{
    for (const Perm& w : cograssmannian(5)) {
        if (enumerate_labelings(ls_tree(w)).size() != 1)
            continue;
        Construction1 c = construction1_set(w);
        EXPECT_EQ(c.set.masks, fwp_ideal(5, c.word, {}).masks);
    }
}

TEST(Construction1, DownStepVariant)
{
    Construction1Variant down{true};
    for (int n = 2; n <= 5; ++n)
        for (const Perm& w : cograssmannian(n)) {
            Construction1 c = construction1_set(w, down);
            EXPECT_EQ(Perm::from_word(n, c.word), w);
            for (const SigmaT& s : c.parts) {
                DefectProfile d = defect_profile(s.sigma);
                EXPECT_EQ(d.value, gamma_and_x(w, s.t).x);
                EXPECT_EQ(d.d, s.t.size());
            }
            EXPECT_TRUE(deodhar_check(c.set, n <= 4).ok()) << w.str();
        }
}

TEST(StringMove, PreservesValue)
{
    std::mt19937 rng(11);
    int moves = 0;
    for (const Perm& w : all_perms(5)) {
        if (rng() % 3)
            continue;
        Word word = reduced_word(w);
        Heap h = build_heap(5, word);
        for (int trial = 0; trial < 4; ++trial) {
            Bits m(word.size());
            for (int& b : m)
                b = static_cast<int>(rng() % 2);
            Perm val = mask_value(5, word, m);
            for (int j = 0; j < h.size(); ++j)
                for (int k : string_move_partners(h, m, j)) {
                    EXPECT_EQ(mask_value(5, word, string_move(h, m, j, k)), val);
                    ++moves;
                }
        }
    }
    EXPECT_GT(moves, 50);
    Heap h = build_heap(3, {1, 2});
    EXPECT_THROW(string_move(h, {1, 1}, 0, 1), std::invalid_argument);
}
