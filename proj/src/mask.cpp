#include "klmasks/mask.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace klmasks {

Mask make_mask(int n, const Word& word, const std::string& bits)
{
    if (bits.size() != word.size())
        throw std::invalid_argument("mask length differs from word length");
    Mask m{n, word, {}};
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("mask must be a 0/1 string");
        m.bits.push_back(c - '0');
    }
    return m;
}

std::string bits_str(const Bits& b)
{
    std::string s;
    for (int x : b)
        s += x ? '1' : '0';
    return s;
}

Perm mask_value(int n, const Word& word, const Bits& bits)
{
    Perm p(n);
    for (std::size_t j = 0; j < word.size(); ++j)
        if (bits[j])
            p = p.times_s(word[j]);
    return p;
}

DefectProfile defect_profile(int n, const Word& word, const Bits& bits)
{
    if (bits.size() != word.size())
        throw std::invalid_argument("mask length differs from word length");
    DefectProfile d;
    Perm cur(n);
    for (std::size_t j = 0; j < word.size(); ++j) {
        bool defect = cur.right_descent(word[j]);
        if (defect) {
            d.defects.push_back(static_cast<int>(j) + 1);
            ++d.d;
        }
        if (bits[j]) {
            d.kind.push_back(defect ? EntryKind::one_defect : EntryKind::plain_one);
            cur = cur.times_s(word[j]);
        } else {
            d.kind.push_back(defect ? EntryKind::zero_defect : EntryKind::plain_zero);
        }
    }
    d.value = cur;
    return d;
}

DefectProfile defect_profile(const Mask& m) { return defect_profile(m.n, m.word, m.bits); }

char entry_char(EntryKind k)
{
    switch (k) {
    case EntryKind::plain_zero:
        return '0';
    case EntryKind::plain_one:
        return '1';
    case EntryKind::zero_defect:
        return 'D';
    case EntryKind::one_defect:
        return 'd';
    }
    return '?';
}

MaskSet all_masks(int n, const Word& word)
{
    int p = static_cast<int>(word.size());
    if (p > kBruteForceMaxLength)
        throw std::length_error("all_masks: word longer than " + std::to_string(kBruteForceMaxLength));
    MaskSet e{n, word, {}};
    e.masks.reserve(std::size_t{1} << p);
    for (std::uint32_t m = 0; m < (1u << p); ++m) {
        Bits b(p);
        for (int j = 0; j < p; ++j)
            b[j] = (m >> (p - 1 - j)) & 1;
        e.masks.push_back(std::move(b));
    }
    return e;
}

Prototype prototype(const MaskSet& e)
{
    Prototype out;
    out.h = Hecke(e.n);
    int l = static_cast<int>(e.word.size());
    for (const Bits& b : e.masks) {
        DefectProfile d = defect_profile(e.n, e.word, b);
        out.poly[d.value] += LPoly::monomial(1, d.d);
    }
    for (const auto& [x, p] : out.poly)
        out.h.add(x, p.dilate(2).shifted(-l));
    return out;
}

namespace {

Perm word_product(const MaskSet& e)
{
    if (!is_reduced(e.n, e.word))
        throw std::invalid_argument("mask set word is not reduced");
    return Perm::from_word(e.n, e.word);
}

bool structural_admissible(const MaskSet& e)
{
    std::vector<Bits> sorted = e.masks;
    std::sort(sorted.begin(), sorted.end());
    Bits ones(e.word.size(), 1);
    if (!std::binary_search(sorted.begin(), sorted.end(), ones))
        return false;
    for (const Bits& b : sorted) {
        if (b.empty())
            continue;
        Bits f = b;
        f.back() ^= 1;
        if (!std::binary_search(sorted.begin(), sorted.end(), f))
            return false;
    }
    return true;
}

bool bounded_from(const Prototype& pr, const Perm& w)
{
    for (const auto& [x, p] : pr.poly) {
        if (x == w)
            continue;
        if (2 * p.high() > w.length() - x.length() - 1)
            return false;
    }
    return true;
}

}  // namespace

bool is_admissible(const MaskSet& e)
{
    word_product(e);
    if (!structural_admissible(e))
        return false;
    Prototype pr = prototype(e);
    return bar(pr.h) == pr.h;
}

bool is_bounded(const MaskSet& e) { return bounded_from(prototype(e), word_product(e)); }

std::string to_string(DeodharStatus s)
{
    switch (s) {
    case DeodharStatus::ok:
        return "ok";
    case DeodharStatus::not_bounded:
        return "precondition failed: not bounded";
    case DeodharStatus::not_admissible:
        return "precondition failed: not admissible";
    case DeodharStatus::mismatch:
        return "mismatch";
    }
    return "?";
}

DeodharResult deodhar_check(const MaskSet& e, bool admissibility_hecke)
{
    Perm w = word_product(e);
    Prototype pr = prototype(e);
    if (!bounded_from(pr, w))
        return {DeodharStatus::not_bounded, "degree bound violated"};
    if (!structural_admissible(e))
        return {DeodharStatus::not_admissible, "missing all-ones mask or not closed under last-bit flip"};
    if (admissibility_hecke && bar(pr.h) != pr.h)
        return {DeodharStatus::not_admissible, "h(E) is not bar invariant"};
    for (const Perm& x : bruhat_interval_below(w)) {
        LPoly kl = kl_polynomial(x, w);
        auto it = pr.poly.find(x);
        LPoly got = it == pr.poly.end() ? LPoly() : it->second;
        if (got != kl)
            return {DeodharStatus::mismatch, "P_x(E) = " + got.str() + " but P_{x,w} = " + kl.str() + " at x = " + x.str()};
    }
    if (pr.poly.size() != bruhat_interval_below(w).size())
        return {DeodharStatus::mismatch, "mask values outside [1,w]"};
    if (pr.h != cprime_element(w))
        return {DeodharStatus::mismatch, "h(E) differs from C'_w"};
    return {};
}

std::vector<Perm> fwp_trace(int n, const Word& word, const DefectSet& P, const Perm& x)
{
    int p = static_cast<int>(word.size());
    std::vector<bool> inP(p + 2, false);
    for (int i : P) {
        if (i < 1 || i > p)
            throw std::invalid_argument("defect position out of range");
        inP[i] = true;
    }
    std::vector<Perm> r{x};
    Perm cur = x;
    for (int i = p; i >= 1; --i) {
        bool desc = cur.right_descent(word[i - 1]);
        bool zero = inP[i] ? desc : !desc;
        if (!zero)
            cur = cur.times_s(word[i - 1]);
        r.push_back(cur);
    }
    (void)n;
    return r;
}

std::optional<Mask> fwp_mask(int n, const Word& word, const DefectSet& P, const Perm& x)
{
    int p = static_cast<int>(word.size());
    std::vector<bool> inP(p + 2, false);
    for (int i : P) {
        if (i < 1 || i > p)
            throw std::invalid_argument("defect position out of range");
        inP[i] = true;
    }
    Mask m{n, word, Bits(p, 0)};
    Perm cur = x;
    for (int i = p; i >= 1; --i) {
        bool desc = cur.right_descent(word[i - 1]);
        bool zero = inP[i] ? desc : !desc;
        if (!zero) {
            m.bits[i - 1] = 1;
            cur = cur.times_s(word[i - 1]);
        }
    }
    if (cur != Perm(n))
        return std::nullopt;
    return m;
}

MaskSet fwp_ideal(int n, const Word& word, const DefectSet& P)
{
    int p = static_cast<int>(word.size());
    std::vector<bool> inP(p + 2, false);
    for (int i : P) {
        if (i < 1 || i > p)
            throw std::invalid_argument("defect position out of range");
        inP[i] = true;
    }
    MaskSet e{n, word, {}};
    Bits cur(p, 0);
    std::uint64_t nodes = 0;
    const std::uint64_t guard = std::uint64_t{1} << 26;
    std::function<void(int, const Perm&)> rec = [&](int j, const Perm& val) {
        if (++nodes > guard)
            throw std::length_error("fwp_ideal: search guard exceeded");
        if (j == p) {
            e.masks.push_back(cur);
            return;
        }
        if (val.right_descent(word[j]) != inP[j + 1])
            return;
        cur[j] = 0;
        rec(j + 1, val);
        cur[j] = 1;
        rec(j + 1, val.times_s(word[j]));
        cur[j] = 0;
    };
    rec(0, Perm(n));
    return e;
}

std::vector<Perm> bruhat_maximal(const std::vector<Perm>& xs)
{
    std::vector<Perm> out;
    for (const Perm& x : xs) {
        bool maximal = true;
        for (const Perm& y : xs)
            if (y != x && bruhat_leq(x, y)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace klmasks
