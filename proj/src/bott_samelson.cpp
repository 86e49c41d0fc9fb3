#include "klmasks/bott_samelson.hpp"

#include <algorithm>
#include <stdexcept>

namespace klmasks {

BSIndexing bs_indexing(int n, const Word& word)
{
    BSIndexing ix;
    ix.word = word;
    std::vector<int> latest(n + 1, -1);
    for (std::size_t j = 0; j < word.size(); ++j) {
        int d = word[j];
        if (d < 1 || d >= n)
            throw std::invalid_argument("generator out of range");
        ix.lpred.push_back(latest[d - 1]);
        ix.rpred.push_back(d + 1 < n ? latest[d + 1] : -1);
        latest[d] = static_cast<int>(j);
    }
    ix.last = latest;
    ix.last.resize(n);
    ix.last[0] = -1;
    return ix;
}

std::string encode_pm(const Mask& m)
{
    DefectProfile d = defect_profile(m);
    std::string e;
    for (EntryKind k : d.kind)
        e += (k == EntryKind::zero_defect || k == EntryKind::plain_one) ? '+' : '-';
    return e;
}

Mask decode_pm(int n, const Word& word, const std::string& e)
{
    if (e.size() != word.size())
        throw std::invalid_argument("encoding length differs from word length");
    Mask m{n, word, Bits(word.size(), 0)};
    Perm cur(n);
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (e[j] != '+' && e[j] != '-')
            throw std::invalid_argument("encoding must use + and -");
        bool defect = cur.right_descent(word[j]);
        bool plus = e[j] == '+';
        m.bits[j] = plus != defect;
        if (m.bits[j])
            cur = cur.times_s(word[j]);
    }
    return m;
}

namespace {

IndexSet first_values(const Perm& u, int d)
{
    IndexSet s;
    for (int i = 1; i <= d; ++i)
        s.push_back(u(i));
    std::sort(s.begin(), s.end());
    return s;
}

IndexSet standard(int d)
{
    IndexSet s;
    for (int i = 1; i <= d; ++i)
        s.push_back(i);
    return s;
}

bool subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

BSFixedPoint fixed_point(const Mask& m)
{
    BSFixedPoint p;
    Perm cur(m.n);
    for (std::size_t j = 0; j < m.word.size(); ++j) {
        if (m.bits[j])
            cur = cur.times_s(m.word[j]);
        p.v.push_back(first_values(cur, m.word[j]));
    }
    return p;
}

bool satisfies_chains(int n, const Word& word, const BSFixedPoint& p)
{
    BSIndexing ix = bs_indexing(n, word);
    if (p.v.size() != word.size())
        return false;
    for (std::size_t j = 0; j < word.size(); ++j) {
        int d = word[j];
        if (static_cast<int>(p.v[j].size()) != d)
            return false;
        const IndexSet lo = ix.lpred[j] >= 0 ? p.v[ix.lpred[j]] : standard(d - 1);
        const IndexSet hi = ix.rpred[j] >= 0 ? p.v[ix.rpred[j]] : standard(d + 1);
        if (!subset(lo, p.v[j]) || !subset(p.v[j], hi))
            return false;
    }
    return true;
}

std::optional<Mask> mask_of_fixed_point(int n, const Word& word, const BSFixedPoint& p)
{
    if (!satisfies_chains(n, word, p))
        return std::nullopt;
    Mask m{n, word, Bits(word.size(), 0)};
    Perm cur(n);
    for (std::size_t j = 0; j < word.size(); ++j) {
        int d = word[j];
        if (p.v[j] == first_values(cur, d)) {
            m.bits[j] = 0;
        } else if (p.v[j] == first_values(cur.times_s(d), d)) {
            m.bits[j] = 1;
            cur = cur.times_s(d);
        } else {
            return std::nullopt;
        }
    }
    return m;
}

std::vector<IndexSet> pi_image(const Mask& m)
{
    BSIndexing ix = bs_indexing(m.n, m.word);
    BSFixedPoint p = fixed_point(m);
    std::vector<IndexSet> out;
    for (int d = 1; d < m.n; ++d)
        out.push_back(ix.last[d] >= 0 ? p.v[ix.last[d]] : standard(d));
    return out;
}

std::vector<IndexSet> staircase(const Perm& x)
{
    std::vector<IndexSet> out;
    for (int d = 1; d < x.n(); ++d)
        out.push_back(first_values(x, d));
    return out;
}

int cell_dimension(const Mask& m)
{
    std::string e = encode_pm(m);
    return static_cast<int>(std::count(e.begin(), e.end(), '+'));
}

FiberProfile fiber_profile(int n, const Word& word, const Perm& x)
{
    if (!is_reduced(n, word))
        throw std::invalid_argument("fiber_profile needs a reduced word");
    Perm w = Perm::from_word(n, word);
    int lw = w.length();
    FiberProfile f;
    for (const Bits& b : all_masks(n, word).masks) {
        DefectProfile d = defect_profile(n, word, b);
        if (d.value == x) {
            f.poly += LPoly::monomial(1, d.d);
            f.max_defect = std::max(f.max_defect, d.d);
        }
        if (d.value != w && 2 * d.d >= lw - d.value.length())
            f.small = false;
    }
    return f;
}

}  // namespace klmasks
