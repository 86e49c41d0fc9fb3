#include "klmasks/construction1.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace klmasks {

std::vector<int> SegmentRegions::all() const
{
    std::vector<int> out = region1;
    out.insert(out.end(), region2.begin(), region2.end());
    out.insert(out.end(), region3.begin(), region3.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> transpose_partition(const std::vector<int>& lambda)
{
    int m = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
    std::vector<int> out(m, 0);
    for (int part : lambda)
        for (int i = 0; i < part; ++i)
            ++out[i];
    return out;
}

namespace {

// Positive parts of a - shift(i), stopping at the first nonpositive one.
std::vector<int> positive_prefix(const std::vector<int>& a, int base, int step)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = a[i] - base - step * static_cast<int>(i);
        if (d <= 0)
            break;
        out.push_back(d);
    }
    return out;
}

}  // namespace

PartitionQuad derive_partitions(const std::vector<int>& lambda, int r)
{
    PartitionQuad pq;
    pq.lambda = lambda;
    pq.lambda_dag = transpose_partition(lambda);
    pq.lambda_prime = positive_prefix(lambda, 1, 1);
    pq.nu = positive_prefix(pq.lambda_dag, 0, 1);
    pq.eta = positive_prefix(pq.nu, r, 0);
    return pq;
}

namespace {

struct Context {
    CogHeap ch;
    Ridgeline rl;
    LSTree tree;

    explicit Context(const Perm& w) : ch(cog_heap(w)), rl(ridgeline(w)), tree(ls_tree(w)) {}

    int n() const { return ch.d.n; }
    int top_y(int c) const { return rl.top[c - rl.first_col]; }
    // v entry of column c at the given depth below the ridgeline, or -1.
    int at_depth(int c, int depth) const
    {
        if (c < rl.first_col || c >= rl.first_col + static_cast<int>(rl.top.size()))
            return -1;
        int e = ch.entry(c, top_y(c) - 2 * depth);
        return e >= 0 && e < ch.d.v_len() ? e : -1;
    }
    // Up-steps starting at the valley column.
    int up_steps(int c) const
    {
        int k = c - rl.first_col, q = 0;
        while (k + q < static_cast<int>(rl.parens.size()) && rl.parens[k + q] == ')')
            ++q;
        return q;
    }
    // Label of the parenthesis at index k (0 when unmatched).
    int paren_label(const EdgeLabeling& t, int k) const
    {
        for (int v = 1; v < tree.size(); ++v)
            if (tree.nodes[v].close == k)
                return t.labels[v];
        return 0;
    }
    std::vector<int> lambda(const EdgeLabeling& t, int c) const
    {
        std::vector<int> out;
        int q = up_steps(c);
        for (int k = 1; k <= q; ++k)
            out.push_back(paren_label(t, c - rl.first_col + k - 1));
        return out;
    }
};

// Geometry of the segment of the valley in column c, given gamma.
SegmentRegions segment_geometry(const Context& cx, const Bits& gamma, int c)
{
    SegmentRegions s;
    s.stats.column = c;
    int vl = cx.ch.d.v_len();
    for (int j = 0; j < vl; ++j)
        s.stats.p += cx.ch.heap.col(j) == c && gamma[j] == 0;
    s.stats.q = cx.up_steps(c);
    int p = s.stats.p, q = s.stats.q;
    for (int j = 0; j <= q; ++j)
        for (int d = 0; d < p; ++d) {
            int e = cx.at_depth(c + j, d);
            if (e < 0)
                throw std::logic_error("region 1 leaves the heap");
            s.region1.push_back(e);
        }
    std::set<int> r1(s.region1.begin(), s.region1.end());
    bool zeroed = false;
    // Diagonals past the p-th start at the bottom of region 1 in column v+i-1.
    int count = p == 0 ? 0 : std::max(p, q + 1);
    for (int i = 1; i <= count; ++i) {
        std::vector<int> diag;
        int cc = i <= p ? c : c + i - 1;
        int yy = i <= p ? cx.top_y(c) - 2 * (p - i) : cx.top_y(cc) - 2 * (p - 1);
        for (int e = cx.ch.entry(cc, yy); e >= 0; e = cx.ch.entry(++cc, --yy))
            diag.push_back(e);
        std::vector<int> below;
        for (int e : diag)
            if (!r1.count(e))
                below.push_back(e);
        bool z = !below.empty() && gamma[below.front()] == 0;
        if (!z && zeroed)
            throw std::logic_error("zeroed-out valley diagonals are not a suffix");
        zeroed = zeroed || z;
        if (!z)
            ++s.stats.r;
        std::vector<int> part;
        for (int e : below)
            if (!z || cx.ch.heap.col(e) <= c + q)
                part.push_back(e);
        (z ? s.region3 : s.region2).insert((z ? s.region3 : s.region2).end(), part.begin(), part.end());
        s.diagonals.push_back(diag);
        s.d_part.push_back(part);
    }
    s.cross.assign(count, {});
    return s;
}

// Follows the strand leaving entry `start` on its SE side. Returns the
// entries it crosses while travelling SW after its first turn.
std::vector<int> trace_sw_run(const Heap& h, const StringDiagram& sd, const Bits& m, int start)
{
    int label = sd.se[start];
    bool moving_se = true;
    std::vector<int> out;
    for (int j = start + 1; j < h.size(); ++j) {
        bool from_nw = sd.nw[j] == label;
        if (!from_nw && sd.ne[j] != label)
            continue;
        if (moving_se) {
            if (from_nw) {
                if (m[j] == 0)
                    moving_se = false;  // bounce, the bounce entry itself is a zero
                continue;
            }
            moving_se = false;  // came off the right wall
        } else if (from_nw) {
            break;
        }
        if (m[j] == 0)
            break;
        out.push_back(j);
    }
    return out;
}

void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw std::logic_error("construction 1: " + what);
}

SigmaT build_up_steps(const Context& cx, const EdgeLabeling& t)
{
    int n = cx.n();
    const Word& word = cx.ch.d.word;
    GammaX gx = gamma_and_x(cx.ch, cx.tree, t);
    SigmaT out;
    out.t = t;
    out.x = gx.x;
    Bits m = gx.gamma;
    std::vector<std::pair<int, int>> planned;  // (entry, kind) kind 0 zero-defect, 1 one-defect
    for (int leaf : cx.tree.leaves) {
        int c = cx.tree.nodes[leaf].column;
        SegmentRegions s = segment_geometry(cx, gx.gamma, c);
        PartitionQuad pq = derive_partitions(cx.lambda(t, c), s.stats.r);
        int p = s.stats.p, q = s.stats.q, r = s.stats.r;
        expect(pq.lambda.empty() || pq.lambda.front() <= p, "lambda_1 exceeds p");
        for (int e : s.region1)
            m[e] = 0;
        for (std::size_t k = 0; k < pq.lambda_prime.size(); ++k) {
            int i = static_cast<int>(k) + 1;
            for (int d = p - pq.lambda_prime[k]; d < p; ++d)
                planned.push_back({cx.at_depth(c + i, d), 0});
        }
        for (std::size_t k = 0; k < pq.nu.size(); ++k) {
            int i = static_cast<int>(k) + 1;
            int lp = k < pq.lambda_prime.size() ? pq.lambda_prime[k] : 0;
            int depth = lp > 0 ? p - 1 - lp : p - 1;
            expect(i + pq.nu[k] - 1 <= q && depth >= 0, "nu row leaves region 1");
            for (int j = i; j < i + pq.nu[k]; ++j)
                m[cx.at_depth(c + j, depth)] = 1;
        }
        for (std::size_t k = 0; k < pq.eta.size(); ++k) {
            int i = static_cast<int>(k) + 1;
            expect(r + i <= static_cast<int>(s.d_part.size()), "eta row has no diagonal");
            const auto& part = s.d_part[r + i - 1];
            expect(static_cast<int>(part.size()) >= pq.eta[k], "eta row leaves region 3");
            for (int j = 0; j < pq.eta[k]; ++j) {
                m[part[j]] = 1;
                s.feasible.push_back(part[j]);
            }
            for (int j = 0; j < pq.eta[k]; ++j)
                planned.push_back({s.d_part[i - 1][j], 1});
        }
        out.segments.push_back(std::move(s));
        out.partitions.push_back(std::move(pq));
    }
    // Cross-diagonal entries are read off the strands of the mask built so far.
    StringDiagram sd = strings(cx.ch.heap, m);
    for (std::size_t v = 0; v < out.segments.size(); ++v) {
        SegmentRegions& s = out.segments[v];
        const PartitionQuad& pq = out.partitions[v];
        int p = s.stats.p, q = s.stats.q, r = s.stats.r, c = s.stats.column;
        // Strands leave the lower boundary of region 1 going SE, one per
        // column; the one leaving column v+j runs along diagonal j+1.
        int lim = std::min(q + 1, r + static_cast<int>(pq.eta.size()) + 1);
        std::vector<std::set<int>> cross(s.diagonals.size());
        for (int src = 1; src <= lim && p > 0; ++src) {
            std::set<int> run;
            for (int e : trace_sw_run(cx.ch.heap, sd, m, cx.at_depth(c + src - 1, p - 1)))
                run.insert(e);
            for (int i = 1; i < src && i <= static_cast<int>(s.diagonals.size()); ++i)
                for (int e : s.d_part[i - 1])
                    if (run.count(e))
                        cross[i - 1].insert(e);
        }
        for (int i = 1; i <= static_cast<int>(s.diagonals.size()); ++i)
            for (int e : s.d_part[i - 1])
                if (cross[i - 1].count(e))
                    s.cross[i - 1].push_back(e);
        for (std::size_t k = 0; k < pq.nu.size(); ++k) {
            int i = static_cast<int>(k) + 1;
            int eta = k < pq.eta.size() ? pq.eta[k] : 0;
            int need = pq.nu[k] - eta;
            const auto& cr = s.cross[i - 1];
            expect(static_cast<int>(cr.size()) >= need, "too few cross-diagonal entries");
            for (int j = static_cast<int>(cr.size()) - need; j < static_cast<int>(cr.size()); ++j)
                planned.push_back({cr[j], 0});
        }
    }
    for (auto [e, kind] : planned)
        if (kind == 0)
            m[e] = 0;
    DefectProfile prof = defect_profile(n, word, m);
    out.sigma = Mask{n, word, m};
    out.P = prof.defects;
    DefectSet want;
    for (auto [e, kind] : planned) {
        expect(m[e] == kind, "planned defect overwritten");
        want.push_back(e + 1);
    }
    std::sort(want.begin(), want.end());
    expect(std::adjacent_find(want.begin(), want.end()) == want.end(), "defect planned twice");
    expect(prof.defects == want, "defect set differs from the planned one");
    expect(prof.value == out.x, "value differs from x(t)");
    expect(prof.d == t.size(), "defect count differs from |t|");
    for (std::size_t v = 0; v < out.segments.size(); ++v) {
        const auto& s = out.segments[v];
        const auto& dag = out.partitions[v].lambda_dag;
        for (int i = 1; i <= static_cast<int>(s.diagonals.size()); ++i) {
            int cnt = 0;
            for (int e : s.diagonals[i - 1]) {
                bool seg = std::count(s.region1.begin(), s.region1.end(), e) ||
                           std::count(s.d_part[i - 1].begin(), s.d_part[i - 1].end(), e);
                cnt += seg && std::binary_search(out.P.begin(), out.P.end(), e + 1);
            }
            int want_i = i <= static_cast<int>(dag.size()) ? dag[i - 1] : 0;
            expect(cnt == want_i, "valley diagonal defect count differs from lambda-dagger");
        }
    }
    std::set<int> used;
    for (const auto& s : out.segments)
        for (int e : s.all())
            expect(used.insert(e).second, "segments overlap");
    auto fwp = fwp_mask(n, word, out.P, out.x);
    expect(fwp && fwp->bits == m, "mask is not the one determined by P(t) and x(t)");
    return out;
}

}  // namespace

ValleyStats valley_stats(const Perm& w, const EdgeLabeling& t, int valley_column)
{
    Context cx(w);
    for (int leaf : cx.tree.leaves)
        if (cx.tree.nodes[leaf].column == valley_column)
            return segment_geometry(cx, gamma_and_x(cx.ch, cx.tree, t).gamma, valley_column).stats;
    throw std::invalid_argument("not a valley column: " + std::to_string(valley_column));
}

PartitionQuad edge_label_partition(const Perm& w, const EdgeLabeling& t, int valley_column)
{
    ValleyStats st = valley_stats(w, t, valley_column);
    return derive_partitions(Context(w).lambda(t, valley_column), st.r);
}

std::vector<SegmentRegions> segment_regions(const Perm& w, const EdgeLabeling& t)
{
    return build_sigma_t(w, t).segments;
}

SigmaT build_sigma_t(const Perm& w, const EdgeLabeling& t) { return build_up_steps(Context(w), t); }

EdgeLabeling mirror_labeling(const LSTree& from, const LSTree& to, int parens_len, const EdgeLabeling& t)
{
    // Mirroring reverses the parenthesis string, so (open, close) becomes
    // (L-1-close, L-1-open).
    if (from.size() != to.size())
        throw std::invalid_argument("mirror_labeling: trees differ in size");
    EdgeLabeling out{std::vector<int>(to.size(), 0)};
    for (int v = 1; v < from.size(); ++v) {
        int o = parens_len - 1 - from.nodes[v].close;
        bool found = false;
        for (int u = 1; u < to.size(); ++u)
            if (to.nodes[u].open == o) {
                out.labels[u] = t.labels[v];
                found = true;
            }
        if (!found)
            throw std::invalid_argument("mirror_labeling: trees are not mirror images");
    }
    return out;
}

Perm conjugate_w0(const Perm& w)
{
    int n = w.n();
    std::vector<int> o(n);
    for (int i = 1; i <= n; ++i)
        o[i - 1] = n + 1 - w(n + 1 - i);
    return Perm::from_oneline(o);
}

Word construction1_word(const Perm& w, Construction1Variant variant)
{
    if (!variant.down_steps)
        return canonical_cog_word(w);
    Word word = canonical_cog_word(conjugate_w0(w));
    for (int& g : word)
        g = w.n() - g;
    return word;
}

SigmaT build_sigma_t(const Perm& w, const EdgeLabeling& t, Construction1Variant variant)
{
    if (!variant.down_steps)
        return build_sigma_t(w, t);
    int n = w.n();
    Perm wm = conjugate_w0(w);
    Context cw(w), cm(wm);
    int len = static_cast<int>(cw.rl.parens.size());
    SigmaT out = build_up_steps(cm, mirror_labeling(cw.tree, cm.tree, len, t));
    // Same positions, mirrored letters: only the value and the labels change.
    out.t = t;
    out.x = conjugate_w0(out.x);
    out.sigma.word = construction1_word(w, variant);
    for (auto& s : out.segments)
        s.stats.column = n - s.stats.column;
    std::reverse(out.segments.begin(), out.segments.end());
    std::reverse(out.partitions.begin(), out.partitions.end());
    DefectProfile prof = defect_profile(out.sigma);
    expect(prof.defects == out.P, "mirrored defect set differs");
    expect(prof.value == out.x, "mirrored value differs");
    expect(out.x == gamma_and_x(cw.ch, cw.tree, t).x, "mirrored x(t) differs from the gamma construction");
    return out;
}

MaskSet construction1_part(int n, const Word& word, const DefectSet& P, const Perm& x)
{
    MaskSet all = fwp_ideal(n, word, P);
    MaskSet out{n, word, {}};
    for (const Bits& b : all.masks)
        if (bruhat_leq(mask_value(n, word, b), x))
            out.masks.push_back(b);
    return out;
}

Construction1 construction1_set(const Perm& w, Construction1Variant variant)
{
    Construction1 c;
    c.w = w;
    c.word = construction1_word(w, variant);
    c.set = MaskSet{w.n(), c.word, {}};
    std::set<DefectSet> seen;
    for (const EdgeLabeling& t : enumerate_labelings(ls_tree(w))) {
        SigmaT s = build_sigma_t(w, t, variant);
        expect(seen.insert(s.P).second, "two labelings share a defect set");
        MaskSet part = construction1_part(w.n(), c.word, s.P, s.x);
        for (Bits& b : part.masks) {
            c.set.masks.push_back(std::move(b));
            c.part_of.push_back(c.parts.size());
        }
        c.parts.push_back(std::move(s));
    }
    return c;
}

std::optional<EdgeLabeling> recover_labeling(const Perm& w, const DefectSet& P)
{
    Context cx(w);
    const Word& word = cx.ch.d.word;
    int len = static_cast<int>(word.size());
    std::vector<bool> defect(len, false);
    for (int i : P) {
        if (i < 1 || i > len)
            return std::nullopt;
        defect[i - 1] = true;
    }
    // Leaf labels of primitive valleys, read from the defect run in the
    // column right of the valley.
    EdgeLabeling probe{std::vector<int>(cx.tree.size(), 0)};
    for (int leaf : cx.tree.leaves) {
        int c = cx.tree.nodes[leaf].column;
        int cap = cx.tree.nodes[leaf].capacity;
        int k = 0;
        for (int e = cx.at_depth(c + 1, 1); e >= 0 && defect[e]; e = cx.at_depth(c + 1, k + 1))
            ++k;
        // Walk SE from the lattice point at depth k of the valley column; the
        // point itself may lie below the heap.
        bool below = false;
        for (int cc = c + 1, yy = cx.top_y(c) - 2 * k - 1; cc < cx.n(); ++cc, --yy) {
            int e = cx.ch.entry(cc, yy);
            below = below || (e >= 0 && defect[e]);
        }
        probe.labels[leaf] = std::min(cap, below ? k + 1 : k);
    }
    // The union of the primitive cones is gamma(t); non-primitive probes sit
    // inside it as long as they do not exceed p(v).
    Bits gamma = gamma_and_x(cx.ch, cx.tree, probe).gamma;
    EdgeLabeling t{std::vector<int>(cx.tree.size(), 0)};
    for (int leaf : cx.tree.leaves) {
        int c = cx.tree.nodes[leaf].column;
        SegmentRegions s;
        try {
            s = segment_geometry(cx, gamma, c);
        } catch (const std::logic_error&) {
            return std::nullopt;
        }
        std::set<int> r1(s.region1.begin(), s.region1.end());
        std::vector<int> dag;
        for (int i = 1; i <= s.stats.p; ++i) {
            int cnt = 0;
            for (int e : s.diagonals[i - 1])
                if (r1.count(e) || std::count(s.d_part[i - 1].begin(), s.d_part[i - 1].end(), e))
                    cnt += defect[e];
            dag.push_back(cnt);
        }
        while (!dag.empty() && dag.back() == 0)
            dag.pop_back();
        std::vector<int> lambda = transpose_partition(dag);
        if (static_cast<int>(lambda.size()) > s.stats.q)
            return std::nullopt;
        for (std::size_t k = 0; k < lambda.size(); ++k) {
            int idx = c - cx.rl.first_col + static_cast<int>(k);
            bool matched = false;
            for (int v = 1; v < cx.tree.size(); ++v)
                if (cx.tree.nodes[v].close == idx) {
                    t.labels[v] = lambda[k];
                    matched = true;
                }
            if (!matched)
                return std::nullopt;
        }
    }
    // Validate against the forward map.
    for (int v = 1; v < cx.tree.size(); ++v)
        if (t.labels[v] < t.labels[cx.tree.nodes[v].parent])
            return std::nullopt;
    for (int leaf : cx.tree.leaves)
        if (t.labels[leaf] > cx.tree.nodes[leaf].capacity)
            return std::nullopt;
    try {
        if (build_up_steps(cx, t).P != P)
            return std::nullopt;
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return t;
}

std::vector<int> string_move_partners(const Heap& h, const Bits& mask, int j)
{
    StringDiagram sd = strings(h, mask);
    std::vector<int> out;
    int a = sd.nw[j], b = sd.ne[j];
    for (int k = j + 1; k < h.size(); ++k) {
        bool ha = sd.nw[k] == a || sd.ne[k] == a;
        bool hb = sd.nw[k] == b || sd.ne[k] == b;
        if (ha && hb) {
            out.push_back(k);
            break;
        }
    }
    return out;
}

Bits string_move(const Heap& h, const Bits& mask, int j, int k)
{
    auto partners = string_move_partners(h, mask, j);
    if (std::find(partners.begin(), partners.end(), k) == partners.end())
        throw std::invalid_argument("string_move: strands at the two entries differ");
    Bits out = mask;
    out[j] ^= 1;
    out[k] ^= 1;
    return out;
}

}  // namespace klmasks
