#include <gtest/gtest.h>

#include <random>
#include <set>

#include "klmasks/mask.hpp"

using namespace klmasks;

namespace {

const Word kS121{1, 2, 1};
const Word kFwpWord{2, 1, 3, 2, 3};

Hecke cprime_product(int n, const Word& word)
{
    Hecke h = Hecke::t(Perm(n));
    for (int i : word)
        h = h * cprime_element(Perm::generator(n, i));
    return h;
}

std::vector<Bits> brute_filter(int n, const Word& word, const DefectSet& P, const Perm* x)
{
    std::vector<Bits> out;
    for (const Bits& b : all_masks(n, word).masks) {
        DefectProfile d = defect_profile(n, word, b);
        if (d.defects == P && (!x || d.value == *x))
            out.push_back(b);
    }
    return out;
}

}  // namespace

TEST(Mask, DefectProfileTableRows)
{
    DefectProfile d = defect_profile(make_mask(3, kS121, "100"));
    EXPECT_EQ(d.defects, DefectSet{3});
    EXPECT_EQ(d.d, 1);
    EXPECT_EQ(d.kind[2], EntryKind::zero_defect);
    EXPECT_EQ(d.value, Perm::generator(3, 1));
    DefectProfile e = defect_profile(make_mask(3, kS121, "101"));
    EXPECT_EQ(e.d, 1);
    EXPECT_EQ(e.kind[2], EntryKind::one_defect);
    EXPECT_EQ(e.value, Perm(3));
    for (const Perm& w : all_perms(4))
        for (const Word& word : reduced_words(w))
            EXPECT_EQ(defect_profile(4, word, Bits(word.size(), 1)).d, 0);
}

TEST(Mask, DefectStatusIgnoresOwnBit)
{
    for (const Bits& b : all_masks(4, {1, 2, 3, 1, 2, 1}).masks)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Bits f = b;
            f[j] ^= 1;
            auto d1 = defect_profile(4, {1, 2, 3, 1, 2, 1}, b);
            auto d2 = defect_profile(4, {1, 2, 3, 1, 2, 1}, f);
            bool in1 = std::count(d1.defects.begin(), d1.defects.end(), static_cast<int>(j) + 1) > 0;
            bool in2 = std::count(d2.defects.begin(), d2.defects.end(), static_cast<int>(j) + 1) > 0;
            EXPECT_EQ(in1, in2);
        }
}

TEST(Mask, PrototypeAllMasks)
{
    Prototype pr = prototype(all_masks(3, kS121));
    EXPECT_EQ(pr.poly[Perm(3)], LPoly(1) + LPoly::monomial(1, 1));
    EXPECT_EQ(pr.h, cprime_product(3, kS121));
    MaskSet ones{3, kS121, {Bits{1, 1, 1}}};
    Prototype p1 = prototype(ones);
    EXPECT_EQ(p1.poly.size(), 1u);
    EXPECT_EQ(p1.poly[parse_perm("321")], LPoly(1));
}

TEST(Mask, AllMasksGiveCprimeProduct)
{
    std::mt19937 rng(1);
    for (int n = 3; n <= 5; ++n)
        for (const Perm& w : all_perms(n)) {
            if (w.length() > 8 || rng() % 4 != 0)
                continue;
            Word word = reduced_words(w).back();
            EXPECT_EQ(prototype(all_masks(n, word)).h, cprime_product(n, word)) << word_str(word);
        }
}

TEST(Mask, AdmissibleAndBounded)
{
    MaskSet all = all_masks(3, kS121);
    EXPECT_TRUE(is_admissible(all));
    EXPECT_FALSE(is_bounded(all));
    MaskSet small{2, {1}, {Bits{1}, Bits{0}}};
    EXPECT_TRUE(is_admissible(small));
    EXPECT_TRUE(is_bounded(small));
    EXPECT_TRUE(deodhar_check(small).ok());
    MaskSet missing{2, {1}, {Bits{1}}};
    EXPECT_FALSE(is_admissible(missing));
    EXPECT_EQ(deodhar_check(missing).status, DeodharStatus::not_admissible);
    EXPECT_EQ(deodhar_check(all).status, DeodharStatus::not_bounded);
}

TEST(Mask, DefectFreeSetIsDeodharForRationallySmooth)
{
    MaskSet e = fwp_ideal(3, kS121, {});
    EXPECT_EQ(e.masks.size(), 6u);
    EXPECT_TRUE(deodhar_check(e).ok());
}

TEST(Mask, FwpExample)
{
    Perm x = Perm::from_word(5, {2, 1});
    auto m = fwp_mask(5, kFwpWord, {5}, x);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(bits_str(m->bits), "11101");
    auto r = fwp_trace(5, kFwpWord, {5}, x);
    std::vector<Perm> expect{x,
                             Perm::from_word(5, {2, 1, 3}),
                             Perm::from_word(5, {2, 1, 3}),
                             Perm::from_word(5, {2, 1}),
                             Perm::from_word(5, {2}),
                             Perm(5)};
    EXPECT_EQ(r, expect);
    Perm w = Perm::from_word(5, kFwpWord);
    EXPECT_FALSE(fwp_mask(5, kFwpWord, {5}, w).has_value());
    auto ones = fwp_mask(5, kFwpWord, {}, w);
    ASSERT_TRUE(ones.has_value());
    EXPECT_EQ(bits_str(ones->bits), "11111");
}

TEST(Mask, FwpIdealExample)
{
    MaskSet e = fwp_ideal(5, kFwpWord, {5});
    std::vector<Perm> values;
    for (const Bits& b : e.masks)
        values.push_back(mask_value(5, kFwpWord, b));
    std::set<Perm> distinct(values.begin(), values.end());
    EXPECT_EQ(distinct.size(), values.size());
    std::vector<Perm> expect{Perm::from_word(5, {2, 1, 3}), Perm::from_word(5, {2, 3, 2})};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(bruhat_maximal(values), expect);
    MaskSet none = fwp_ideal(5, kFwpWord, {});
    std::set<Perm> vals;
    for (const Bits& b : none.masks)
        vals.insert(mask_value(5, kFwpWord, b));
    auto interval = bruhat_interval_below(Perm::from_word(5, kFwpWord));
    EXPECT_EQ(vals, std::set<Perm>(interval.begin(), interval.end()));
}

TEST(Mask, FwpAgreesWithBruteForce)
{
    std::mt19937 rng(9);
    for (const Perm& w : all_perms(4)) {
        Word word = reduced_word(w);
        int p = static_cast<int>(word.size());
        for (int trial = 0; trial < 10 && p >= 2; ++trial) {
            DefectSet P;
            for (int i = 2; i <= p; ++i)
                if (rng() % 3 == 0)
                    P.push_back(i);
            auto ideal = fwp_ideal(4, word, P);
            EXPECT_EQ(ideal.masks, brute_filter(4, word, P, nullptr));
            std::set<Perm> vals;
            for (const Bits& b : ideal.masks)
                vals.insert(mask_value(4, word, b));
            for (const Perm& x : all_perms(4)) {
                auto m = fwp_mask(4, word, P, x);
                auto bf = brute_filter(4, word, P, &x);
                ASSERT_LE(bf.size(), 1u);
                EXPECT_EQ(m.has_value(), !bf.empty());
                if (m)
                    EXPECT_EQ(m->bits, bf.front());
                if (vals.count(x))
                    for (const Perm& y : all_perms(4))
                        if (bruhat_leq(y, x))
                            EXPECT_TRUE(vals.count(y));
            }
        }
    }
}

TEST(Mask, BruteForceGuard)
{
    Word longw(23, 1);
    EXPECT_THROW(all_masks(3, longw), std::length_error);
}
