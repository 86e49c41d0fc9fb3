#include "klmasks/heap.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace klmasks {

namespace {

bool dependent(int a, int b) { return std::abs(a - b) <= 1; }

}  // namespace

Heap build_heap(int n, const Word& word)
{
    Heap h;
    h.n = n;
    h.word = word;
    int p = static_cast<int>(word.size());
    for (int i : word)
        if (i < 1 || i >= n)
            throw std::invalid_argument("build_heap: generator out of range");
    h.order.assign(p, std::vector<bool>(p, false));
    for (int k = p - 1; k >= 0; --k)
        for (int j = k - 1; j >= 0; --j) {
            if (dependent(word[j], word[k])) {
                h.order[j][k] = true;
                continue;
            }
            for (int m = j + 1; m < k; ++m)
                if (dependent(word[j], word[m]) && h.order[m][k]) {
                    h.order[j][k] = true;
                    break;
                }
        }
    for (int j = 0; j < p; ++j)
        for (int k = j + 1; k < p; ++k) {
            if (!h.order[j][k])
                continue;
            bool direct = true;
            for (int m = j + 1; m < k && direct; ++m)
                if (h.order[j][m] && h.order[m][k])
                    direct = false;
            if (direct)
                h.covers.emplace_back(j, k);
        }
    h.level.assign(p, 0);
    for (int j = p - 1; j >= 0; --j)
        for (int k = j + 1; k < p; ++k) {
            if (word[k] == word[j])
                h.level[j] = std::max(h.level[j], h.level[k] + 2);
            else if (dependent(word[j], word[k]))
                h.level[j] = std::max(h.level[j], h.level[k] + 1);
        }
    return h;
}

Word commutation_normal_form(int n, const Word& word)
{
    Heap h = build_heap(n, word);
    int p = h.size();
    std::vector<int> depth(p, 0);
    for (int k = 0; k < p; ++k)
        for (int j = 0; j < k; ++j)
            if (h.order[j][k])
                depth[k] = std::max(depth[k], depth[j] + 1);
    std::vector<int> idx(p);
    for (int j = 0; j < p; ++j)
        idx[j] = j;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return depth[a] != depth[b] ? depth[a] < depth[b] : word[a] < word[b];
    });
    Word out;
    for (int j : idx)
        out.push_back(word[j]);
    return out;
}

std::vector<Word> linear_extensions(const Heap& h, std::size_t cap)
{
    int p = h.size();
    std::vector<Word> out;
    std::vector<bool> used(p, false);
    Word cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == p) {
            if (out.size() >= cap)
                throw std::length_error("linear_extensions: cap exceeded");
            out.push_back(cur);
            return;
        }
        for (int k = 0; k < p; ++k) {
            if (used[k])
                continue;
            bool ready = true;
            for (int j = 0; j < k && ready; ++j)
                if (!used[j] && h.order[j][k])
                    ready = false;
            if (!ready)
                continue;
            used[k] = true;
            cur.push_back(h.word[k]);
            rec();
            cur.pop_back();
            used[k] = false;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

StringDiagram strings(const Heap& h, const std::vector<int>& mask)
{
    if (static_cast<int>(mask.size()) != h.size())
        throw std::invalid_argument("strings: mask length differs from word length");
    StringDiagram d;
    int p = h.size();
    std::vector<int> cur(h.n);
    for (int i = 0; i < h.n; ++i)
        cur[i] = i + 1;
    d.nw.resize(p);
    d.ne.resize(p);
    d.sw.resize(p);
    d.se.resize(p);
    for (int j = 0; j < p; ++j) {
        d.orders.push_back(cur);
        int i = h.word[j];
        d.nw[j] = cur[i - 1];
        d.ne[j] = cur[i];
        if (mask[j])
            std::swap(cur[i - 1], cur[i]);
        d.sw[j] = cur[i - 1];
        d.se[j] = cur[i];
    }
    d.orders.push_back(cur);
    return d;
}

CogDecomposition cog_decompose(const Perm& w)
{
    auto asc = ascents(w, Side::right);
    if (asc.size() > 1)
        throw std::invalid_argument("not cograssmannian: " + w.str());
    CogDecomposition d;
    d.w = w;
    d.n = w.n();
    d.z = asc.empty() ? w.n() : asc.front();
    std::vector<int> J = complement_generators(d.n, {d.z});
    auto [v, u] = parabolic_decompose(w, J);
    d.v = v;
    d.w0J = parabolic_longest(J, d.n);
    if (u != d.w0J)
        throw std::logic_error("cograssmannian decomposition failed for " + w.str());
    for (int k = 1; k < d.z; ++k)
        for (int c = 1; c <= d.z - k; ++c)
            d.w0J_word.push_back(c);
    for (int k = 1; d.z + k <= d.n - 1; ++k)
        for (int c = d.n - 1; c >= d.z + k; --c)
            d.w0J_word.push_back(c);
    Heap hv = build_heap(d.n, reduced_word(v));
    std::vector<int> idx(hv.size());
    for (int j = 0; j < hv.size(); ++j)
        idx[j] = j;
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return hv.level[a] != hv.level[b] ? hv.level[a] > hv.level[b] : hv.word[a] < hv.word[b];
    });
    for (int j : idx)
        d.v_word.push_back(hv.word[j]);
    d.word = d.v_word;
    d.word.insert(d.word.end(), d.w0J_word.begin(), d.w0J_word.end());
    if (Perm::from_word(d.n, d.word) != w || static_cast<int>(d.word.size()) != w.length())
        throw std::logic_error("canonical word does not reproduce " + w.str());
    return d;
}

Word canonical_cog_word(const Perm& w) { return cog_decompose(w).word; }

int CogHeap::entry(int c, int yy) const
{
    auto it = at.find({c, yy});
    return it == at.end() ? -1 : it->second;
}

int CogHeap::entry_ab(int a, int b) const
{
    if (a < 0 || b < 0)
        return -1;
    int j = entry(d.z - a + b, a + b);
    return j >= 0 && j < d.v_len() ? j : -1;
}

int CogHeap::column_size(int c) const
{
    int k = 0;
    for (int j = 0; j < d.v_len(); ++j)
        k += heap.col(j) == c;
    return k;
}

CogHeap cog_heap(const Perm& w)
{
    CogHeap ch;
    ch.d = cog_decompose(w);
    ch.heap = build_heap(ch.d.n, ch.d.word);
    int vl = ch.d.v_len();
    int z = ch.d.z;
    ch.y.assign(ch.heap.size(), 0);
    ch.cell.assign(ch.heap.size(), {-1, -1});
    Heap hv = build_heap(ch.d.n, ch.d.v_word);
    for (int j = 0; j < vl; ++j) {
        int c = ch.heap.col(j);
        int yy = hv.level[j];
        if ((yy - c + z) % 2 != 0)
            throw std::logic_error("grassmannian heap is not a partition shape");
        ch.y[j] = yy;
        ch.cell[j] = {(yy - c + z) / 2, (yy + c - z) / 2};
    }
    int j = vl;
    for (int k = 1; k < z; ++k)
        for (int c = 1; c <= z - k; ++c)
            ch.y[j++] = z - 2 * k - c;
    for (int k = 1; z + k <= ch.d.n - 1; ++k)
        for (int c = ch.d.n - 1; c >= z + k; --c)
            ch.y[j++] = c - z - 2 * k;
    for (int e = 0; e < ch.heap.size(); ++e)
        if (!ch.at.emplace(std::make_pair(ch.heap.col(e), ch.y[e]), e).second)
            throw std::logic_error("lattice collision in cograssmannian heap");
    for (auto [a, b] : ch.heap.covers)
        if (ch.y[a] - ch.y[b] != 1 || std::abs(ch.heap.col(a) - ch.heap.col(b)) != 1)
            throw std::logic_error("cograssmannian heap cover is not a unit diagonal step");
    return ch;
}

Ridgeline ridgeline(const Perm& w)
{
    CogHeap ch = cog_heap(w);
    Ridgeline r;
    int vl = ch.d.v_len();
    if (vl == 0)
        return r;
    int lo = ch.d.n, hi = 0;
    for (int j = 0; j < vl; ++j) {
        lo = std::min(lo, ch.heap.col(j));
        hi = std::max(hi, ch.heap.col(j));
    }
    r.first_col = lo;
    r.top.assign(hi - lo + 1, -1);
    r.top_entry.assign(hi - lo + 1, -1);
    for (int j = 0; j < vl; ++j) {
        int k = ch.heap.col(j) - lo;
        if (ch.y[j] > r.top[k]) {
            r.top[k] = ch.y[j];
            r.top_entry[k] = j;
        }
    }
    for (std::size_t k = 0; k + 1 < r.top.size(); ++k)
        r.parens += r.top[k + 1] < r.top[k] ? '(' : ')';
    return r;
}

std::vector<Valley> valleys(const Perm& w)
{
    Ridgeline r = ridgeline(w);
    CogHeap ch = cog_heap(w);
    std::vector<Valley> out;
    for (std::size_t k = 0; k + 1 < r.parens.size(); ++k)
        if (r.parens[k] == '(' && r.parens[k + 1] == ')') {
            int c = r.first_col + static_cast<int>(k) + 1;
            out.push_back({c, ch.column_size(c), static_cast<int>(k)});
        }
    return out;
}

std::vector<int> peak_entries(const CogHeap& ch)
{
    std::vector<int> out;
    int vl = ch.d.v_len();
    for (int j = 0; j < vl; ++j) {
        bool top = true;
        for (int i = 0; i < j && top; ++i)
            if (ch.heap.order[i][j])
                top = false;
        if (top)
            out.push_back(j);
    }
    std::sort(out.begin(), out.end(), [&](int a, int b) { return ch.heap.col(a) < ch.heap.col(b); });
    return out;
}

}  // namespace klmasks
