#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "klmasks/bott_samelson.hpp"

using namespace klmasks;

namespace {

const Word kS121{1, 2, 1};

struct Row {
    const char* mask;
    const char* e;
    Word value;
    int d;
    std::vector<IndexSet> v;
};

// Eight masks on s1 s2 s1 with encoding, value, defects and fixed point.
const std::vector<Row> kTable{
    {"000", "---", {}, 0, {{1}, {1, 2}, {1}}},
    {"001", "--+", {1}, 0, {{1}, {1, 2}, {2}}},
    {"010", "-+-", {2}, 0, {{1}, {1, 3}, {1}}},
    {"100", "+-+", {1}, 1, {{2}, {1, 2}, {2}}},
    {"101", "+--", {}, 1, {{2}, {1, 2}, {1}}},
    {"110", "++-", {1, 2}, 0, {{2}, {2, 3}, {2}}},
    {"011", "-++", {2, 1}, 0, {{1}, {1, 3}, {3}}},
    {"111", "+++", {1, 2, 1}, 0, {{2}, {2, 3}, {3}}},
};

}  // namespace

TEST(BottSamelson, Indexing)
{
    BSIndexing ix = bs_indexing(4, {2, 1, 3, 2});
    EXPECT_EQ(ix.lpred, (std::vector<int>{-1, -1, 0, 1}));
    EXPECT_EQ(ix.rpred, (std::vector<int>{-1, 0, -1, 2}));
    EXPECT_EQ(ix.last, (std::vector<int>{-1, 1, 3, 2}));
    EXPECT_THROW(bs_indexing(3, {3}), std::invalid_argument);
}

TEST(BottSamelson, TableForS121)
{
    for (const Row& r : kTable) {
        Mask m = make_mask(3, kS121, r.mask);
        EXPECT_EQ(encode_pm(m), r.e) << r.mask;
        DefectProfile d = defect_profile(m);
        EXPECT_EQ(d.value, Perm::from_word(3, r.value)) << r.mask;
        EXPECT_EQ(d.d, r.d) << r.mask;
        EXPECT_EQ(fixed_point(m).v, r.v) << r.mask;
        EXPECT_EQ(pi_image(m), staircase(d.value));
    }
    EXPECT_EQ(cell_dimension(make_mask(3, kS121, "111")), 3);
    EXPECT_EQ(cell_dimension(make_mask(3, kS121, "000")), 0);
}

TEST(BottSamelson, EncodingRoundTrip)
{
    for (int n = 2; n <= 4; ++n)
        for (const Perm& w : all_perms(n))
            for (const Word& word : reduced_words(w))
                for (const Bits& b : all_masks(n, word).masks) {
                    Mask m{n, word, b};
                    ASSERT_EQ(decode_pm(n, word, encode_pm(m)).bits, b);
                }
    Mask ones{4, {1, 2, 3}, {1, 1, 1}};
    EXPECT_EQ(encode_pm(ones), "+++");
    EXPECT_THROW(decode_pm(3, kS121, "+-"), std::invalid_argument);
}

TEST(BottSamelson, FixedPointsSatisfyChainsAndAreInjective)
{
    for (int n = 2; n <= 4; ++n)
        for (const Perm& w : all_perms(n))
            for (const Word& word : reduced_words(w)) {
                std::set<BSFixedPoint> seen;
                for (const Bits& b : all_masks(n, word).masks) {
                    Mask m{n, word, b};
                    BSFixedPoint p = fixed_point(m);
                    ASSERT_TRUE(satisfies_chains(n, word, p));
                    EXPECT_TRUE(seen.insert(p).second);
                    EXPECT_EQ(pi_image(m), staircase(mask_value(n, word, b)));
                    auto back = mask_of_fixed_point(n, word, p);
                    ASSERT_TRUE(back.has_value());
                    EXPECT_EQ(back->bits, b);
                }
            }
}

TEST(BottSamelson, EveryChainDatumComesFromAMask)
{
    // Enumerate all coordinate subspaces position by position and keep the
    // chain-satisfying tuples.
    for (const Perm& w : all_perms(3))
        for (const Word& word : reduced_words(w)) {
            int n = 3;
            std::vector<IndexSet> subsets[3];
            for (int mask = 0; mask < (1 << n); ++mask) {
                IndexSet s;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1)
                        s.push_back(i + 1);
                if (!s.empty() && static_cast<int>(s.size()) < n)
                    subsets[s.size()].push_back(s);
            }
            int count = 0;
            BSFixedPoint p;
            std::function<void(std::size_t)> rec = [&](std::size_t j) {
                if (j == word.size()) {
                    if (satisfies_chains(n, word, p)) {
                        ++count;
                        EXPECT_TRUE(mask_of_fixed_point(n, word, p).has_value());
                    }
                    return;
                }
                for (const IndexSet& s : subsets[word[j]]) {
                    p.v.push_back(s);
                    rec(j + 1);
                    p.v.pop_back();
                }
            };
            rec(0);
            EXPECT_EQ(count, 1 << word.size());
        }
}

TEST(BottSamelson, PlusCountIsLengthPlusDefects)
{
    for (const Perm& w : all_perms(4))
        for (const Word& word : reduced_words(w))
            for (const Bits& b : all_masks(4, word).masks) {
                Mask m{4, word, b};
                DefectProfile d = defect_profile(m);
                ASSERT_EQ(cell_dimension(m), d.value.length() + d.d);
            }
}

TEST(BottSamelson, Fibers)
{
    FiberProfile f = fiber_profile(3, kS121, Perm(3));
    EXPECT_EQ(f.poly.str(), "1+q");
    EXPECT_EQ(f.max_defect, 1);
    EXPECT_FALSE(f.small);
    FiberProfile top = fiber_profile(3, kS121, parse_perm("321"));
    EXPECT_EQ(top.poly.str(), "1");
    EXPECT_EQ(top.max_defect, 0);
    EXPECT_TRUE(fiber_profile(3, {1, 2}, Perm(3)).small);
    EXPECT_THROW(fiber_profile(3, {1, 1}, Perm(3)), std::invalid_argument);
}
