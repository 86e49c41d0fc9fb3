#include "klmasks/zelevinsky.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "klmasks/parallel.hpp"

namespace klmasks {

namespace {

bool at_or_above(const Heap& h, int j, int k) { return j == k || h.above(j, k); }

IndexSet standard(int d)
{
    IndexSet s(d);
    std::iota(s.begin(), s.end(), 1);
    return s;
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b)
{
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool in_young_subgroup(const Perm& x, int z)
{
    for (int i = 1; i <= z; ++i)
        if (x(i) > z)
            return false;
    return true;
}

// Grassmannian permutation listing Fz in increasing order, then the rest.
Perm grassmannian_of(int n, const IndexSet& Fz)
{
    std::vector<int> line = Fz;
    IndexSet rest = set_minus(standard(n), Fz);
    line.insert(line.end(), rest.begin(), rest.end());
    return Perm::from_oneline(line);
}

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

// W_p, or E_z when v has no entries.
const IndexSet& top_subspace(const PeakOrdering& o, const std::vector<IndexSet>& W, IndexSet& scratch)
{
    if (!W.empty())
        return W.back();
    scratch = standard(o.z());
    return scratch;
}

}  // namespace

std::string partition_str(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::vector<int> PeakOrdering::columns() const
{
    std::vector<int> out;
    for (const Rectangle& r : rect)
        out.push_back(ch->heap.col(r.peak));
    return out;
}

PeakOrdering make_ordering(std::shared_ptr<const CogHeap> ch, const std::vector<int>& peak_columns)
{
    const Heap& h = ch->heap;
    std::map<int, int> by_column;
    for (int e : peak_entries(*ch))
        by_column[h.col(e)] = e;
    std::vector<int> peaks;
    for (int c : peak_columns) {
        auto it = by_column.find(c);
        if (it == by_column.end())
            throw std::invalid_argument("no peak in column " + std::to_string(c));
        peaks.push_back(it->second);
        by_column.erase(it);
    }
    if (!by_column.empty())
        throw std::invalid_argument("ordering must list every peak once");

    PeakOrdering o;
    o.ch = ch;
    int p = static_cast<int>(peaks.size());
    int vl = ch->d.v_len();
    for (int j = 0; j < p; ++j) {
        Rectangle r;
        r.peak = peaks[j];
        for (int f = 0; f < vl; ++f) {
            if (!at_or_above(h, peaks[j], f))
                continue;
            bool later = false;
            for (int k = j + 1; k < p && !later; ++k)
                later = at_or_above(h, peaks[k], f);
            if (!later)
                r.entries.push_back(f);
        }
        if (r.entries.empty())
            throw std::logic_error("empty rectangle");
        r.a0 = r.b0 = 1 << 20;
        r.a1 = r.b1 = -1;
        for (int f : r.entries) {
            auto [a, b] = ch->cell[f];
            r.a0 = std::min(r.a0, a);
            r.a1 = std::max(r.a1, a);
            r.b0 = std::min(r.b0, b);
            r.b1 = std::max(r.b1, b);
        }
        if (static_cast<int>(r.entries.size()) != (r.a1 - r.a0 + 1) * (r.b1 - r.b0 + 1) ||
            ch->cell[r.peak] != std::pair{r.a1, r.b1})
            throw std::logic_error("region below a peak is not a rectangle");
        r.bottom = ch->entry_ab(r.a0, r.b0);
        r.d = h.col(r.bottom);
        r.height = r.a1 + r.b1;
        r.ldim = h.col(ch->entry_ab(r.a1, r.b0)) - 1;
        r.rdim = h.col(ch->entry_ab(r.a0, r.b1)) + 1;
        auto pred_of = [&](int cell_entry) {
            if (cell_entry < 0)
                return -1;
            for (int k = 0; k < j; ++k)
                if (o.rect[k].bottom == cell_entry)
                    return k;
            throw std::logic_error("rectangle corner is not next to a bottom entry");
        };
        r.lpred = pred_of(ch->entry_ab(r.a1 + 1, r.b0));
        r.rpred = pred_of(ch->entry_ab(r.a0, r.b1 + 1));
        o.rect.push_back(r);
    }
    return o;
}

PeakOrdering make_ordering(const Perm& w, const std::vector<int>& peak_columns)
{
    if (!is_cograssmannian(w))
        throw std::invalid_argument("w must be cograssmannian");
    return make_ordering(std::make_shared<const CogHeap>(cog_heap(w)), peak_columns);
}

std::vector<PeakOrdering> enumerate_orderings(const Perm& w)
{
    if (!is_cograssmannian(w))
        throw std::invalid_argument("w must be cograssmannian");
    auto ch = std::make_shared<const CogHeap>(cog_heap(w));
    std::vector<int> cols;
    for (int e : peak_entries(*ch))
        cols.push_back(ch->heap.col(e));
    std::sort(cols.begin(), cols.end());
    std::vector<PeakOrdering> out;
    do {
        out.push_back(make_ordering(ch, cols));
    } while (std::next_permutation(cols.begin(), cols.end()));
    return out;
}

bool is_neat(const PeakOrdering& o)
{
    for (const Rectangle& r : o.rect) {
        if (r.lpred >= 0 && r.height < o.rect[r.lpred].height)
            return false;
        if (r.rpred >= 0 && r.height < o.rect[r.rpred].height)
            return false;
    }
    return true;
}

PeakOrdering default_ordering(const Perm& w)
{
    for (PeakOrdering& o : enumerate_orderings(w))
        if (is_neat(o))
            return o;
    throw std::logic_error("no neat ordering");
}

std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int)> rec = [&](int cap) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == rows)
            return;
        for (int part = 1; part <= cap; ++part) {
            cur.push_back(part);
            rec(part);
            cur.pop_back();
        }
    };
    rec(cols);
    return out;
}

std::vector<std::vector<Partition>> partition_tuples(const PeakOrdering& o)
{
    std::vector<std::vector<Partition>> choices;
    for (const Rectangle& r : o.rect)
        choices.push_back(partitions_in_box(r.max_parts(), r.max_part()));
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == choices.size()) {
            out.push_back(cur);
            return;
        }
        for (const Partition& part : choices[j]) {
            cur.push_back(part);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<Perm> young_subgroup(int n, int z)
{
    std::vector<Perm> out;
    const std::vector<Perm> left = z > 0 ? all_perms(z) : std::vector<Perm>{};
    const std::vector<Perm> right = n - z > 0 ? all_perms(n - z) : std::vector<Perm>{};
    std::vector<Perm> l = left.empty() ? std::vector<Perm>{Perm()} : left;
    std::vector<Perm> r = right.empty() ? std::vector<Perm>{Perm()} : right;
    for (const Perm& a : l)
        for (const Perm& b : r) {
            std::vector<int> line;
            for (int i = 1; i <= z; ++i)
                line.push_back(a(i));
            for (int i = 1; i <= n - z; ++i)
                line.push_back(z + b(i));
            out.push_back(Perm::from_oneline(line));
        }
    return out;
}

std::vector<TauDatum> enumerate_tau(const PeakOrdering& o)
{
    std::vector<TauDatum> out;
    std::vector<Perm> xs = young_subgroup(o.n(), o.z());
    for (const auto& parts : partition_tuples(o))
        for (const Perm& x : xs)
            out.push_back({parts, x});
    return out;
}

std::size_t count_tau(const PeakOrdering& o)
{
    std::size_t c = 1;
    for (const Rectangle& r : o.rect)
        c *= partitions_in_box(r.max_parts(), r.max_part()).size();
    for (int i = 2; i <= o.z(); ++i)
        c *= i;
    for (int i = 2; i <= o.n() - o.z(); ++i)
        c *= i;
    return c;
}

namespace {

// W_1..W_p and the A/T/D sets from the partitions alone.
void subspaces_of(const PeakOrdering& o, const std::vector<Partition>& parts, ZelFixedPoint& fp)
{
    int p = o.p();
    if (static_cast<int>(parts.size()) != p)
        throw std::invalid_argument("one partition per rectangle expected");
    fp.W.assign(p, {});
    fp.A.assign(p, {});
    fp.T.assign(p, {});
    fp.D.assign(p, {});
    for (int j = 0; j < p; ++j) {
        const Rectangle& r = o.rect[j];
        const Partition& tau = parts[j];
        if (static_cast<int>(tau.size()) > r.max_parts() || (!tau.empty() && tau[0] > r.max_part()))
            throw std::invalid_argument("partition does not fit its rectangle");
        IndexSet lo = r.lpred >= 0 ? fp.W[r.lpred] : standard(r.ldim);
        IndexSet hi = r.rpred >= 0 ? fp.W[r.rpred] : standard(r.rdim);
        fp.A[j] = set_minus(hi, lo);
        if (static_cast<int>(fp.A[j].size()) != r.rdim - r.ldim)
            throw std::logic_error("A(j) has the wrong size");
        std::vector<int> desc(fp.A[j].rbegin(), fp.A[j].rend());
        IndexSet T;
        for (int k = 1; k <= r.max_parts(); ++k) {
            int part = k <= static_cast<int>(tau.size()) ? tau[k - 1] : 0;
            T.push_back(desc[k + (r.max_part() - part) - 1]);
        }
        std::sort(T.begin(), T.end());
        fp.T[j] = T;
        fp.D[j] = set_minus(fp.A[j], T);
        fp.W[j] = set_union(lo, T);
    }
}

}  // namespace

ZelFixedPoint tau_fixed_point(const PeakOrdering& o, const TauDatum& tau)
{
    ZelFixedPoint fp;
    subspaces_of(o, tau.parts, fp);
    if (tau.x_tau.n() != o.n() || !in_young_subgroup(tau.x_tau, o.z()))
        throw std::invalid_argument("x_tau must lie in S_z x S_{n-z}");
    IndexSet scratch;
    fp.u = grassmannian_of(o.n(), top_subspace(o, fp.W, scratch));
    fp.x = fp.u * tau.x_tau;
    if (!fp.W.empty())
        fp.point.W.assign(fp.W.begin(), fp.W.end() - 1);
    fp.point.F = staircase(fp.x);
    return fp;
}

TauDatum tau_of_subspaces(const PeakOrdering& o, const std::vector<IndexSet>& W, const Perm& x)
{
    int p = o.p();
    if (static_cast<int>(W.size()) != p)
        throw std::invalid_argument("one subspace per peak expected");
    TauDatum tau;
    for (int j = 0; j < p; ++j) {
        const Rectangle& r = o.rect[j];
        IndexSet lo = r.lpred >= 0 ? W[r.lpred] : standard(r.ldim);
        IndexSet hi = r.rpred >= 0 ? W[r.rpred] : standard(r.rdim);
        if (!std::includes(W[j].begin(), W[j].end(), lo.begin(), lo.end()) ||
            !std::includes(hi.begin(), hi.end(), W[j].begin(), W[j].end()) ||
            static_cast<int>(W[j].size()) != r.d)
            throw std::invalid_argument("subspaces violate the containment conditions");
        IndexSet A = set_minus(hi, lo), T = set_minus(W[j], lo), D = set_minus(A, T);
        Partition part;
        for (auto it = T.rbegin(); it != T.rend(); ++it) {
            int c = static_cast<int>(std::lower_bound(D.begin(), D.end(), *it) - D.begin());
            if (c > 0)
                part.push_back(c);
        }
        tau.parts.push_back(part);
    }
    IndexSet scratch;
    Perm u = grassmannian_of(o.n(), top_subspace(o, W, scratch));
    tau.x_tau = u.inverse() * x;
    if (!in_young_subgroup(tau.x_tau, o.z()))
        throw std::invalid_argument("flag is not compatible with W_p");
    return tau;
}

int tau_dimension(const TauDatum& tau)
{
    int dim = tau.x_tau.length();
    for (const Partition& p : tau.parts)
        dim += size_of(p);
    return dim;
}

LPoly tau_polynomial(const Perm& x, const PeakOrdering& o)
{
    if (x.n() != o.n())
        throw std::invalid_argument("rank mismatch");
    LPoly out;
    for (const auto& parts : partition_tuples(o)) {
        ZelFixedPoint fp;
        subspaces_of(o, parts, fp);
        IndexSet scratch;
        Perm xt = grassmannian_of(o.n(), top_subspace(o, fp.W, scratch)).inverse() * x;
        if (!in_young_subgroup(xt, o.z()))
            continue;
        int dim = xt.length();
        for (const Partition& p : parts)
            dim += size_of(p);
        out += LPoly::monomial(1, dim - x.length());
    }
    return out;
}

LPoly zelevinsky_kl(const Perm& x, const Perm& w, const PeakOrdering& o)
{
    if (w != o.w())
        throw std::invalid_argument("ordering belongs to a different permutation");
    if (!is_neat(o))
        throw std::invalid_argument("ordering is not neat");
    return tau_polynomial(x, o);
}

int choose_exit(const std::vector<int>& C, const std::vector<int>& A, const std::vector<int>& D)
{
    std::vector<int> a = A;
    std::sort(a.begin(), a.end());
    auto g = [&](int k) {
        int below = 0;
        for (int m : C)
            below += m < k;
        for (int m : D)
            below -= m < k;
        return below;
    };
    int tail = static_cast<int>(C.size()) - static_cast<int>(D.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        int next = i + 1 < a.size() ? g(a[i + 1]) : tail;
        if (g(a[i]) == 0 && next == 1)
            return a[i];
    }
    throw std::logic_error("no exit label for diagonal");
}

DiagonalDirection parse_direction(const std::string& s)
{
    if (s == "ne-sw")
        return DiagonalDirection::ne_sw;
    if (s == "nw-se")
        return DiagonalDirection::nw_se;
    throw std::invalid_argument("direction must be ne-sw or nw-se");
}

std::string to_string(DiagonalDirection d) { return d == DiagonalDirection::ne_sw ? "ne-sw" : "nw-se"; }

namespace {

struct Builder {
    const PeakOrdering& o;
    const Heap& h;
    Bits bits;

    explicit Builder(const PeakOrdering& ord) : o(ord), h(ord.ch->heap), bits(ord.word().size(), 0) {}

    // Labels on the two strands meeting at e (NW, NE), from the entries above e.
    std::pair<int, int> entering(int e) const
    {
        std::vector<int> lab(o.n() + 2);
        std::iota(lab.begin(), lab.end(), 0);
        for (int j = 0; j < e; ++j)
            if (bits[j] && h.above(j, e))
                std::swap(lab[h.col(j)], lab[h.col(j) + 1]);
        return {lab[h.col(e)], lab[h.col(e) + 1]};
    }

    // Fill one diagonal so that label k leaves through its far end. When
    // moving_sw the strand travels SW and the long side is NW, otherwise it
    // travels SE with the long side NE. Returns the number of '+' placed.
    int fill(const std::vector<int>& diag, bool moving_sw, int k)
    {
        auto first = entering(diag.front());
        int edge = moving_sw ? first.second : first.first;
        auto before = [&](int m) { return moving_sw ? m < k : m > k; };
        int plus_count = 0;
        int out = -1;
        for (int e : diag) {
            auto [nw, ne] = entering(e);
            int lng = moving_sw ? nw : ne;
            bool plus = before(lng) || (lng == k && before(edge));
            bits[e] = plus != (nw > ne);
            plus_count += plus;
            out = moving_sw ? (bits[e] ? ne : nw) : (bits[e] ? nw : ne);
        }
        if (out != k)
            throw std::logic_error("diagonal did not route its exit label");
        return plus_count;
    }

    // Labels entering a diagonal: the edge strand at its first entry and the
    // long-side strand at every entry.
    std::vector<int> inputs(const std::vector<int>& diag, bool moving_sw) const
    {
        auto first = entering(diag.front());
        std::vector<int> C{moving_sw ? first.second : first.first};
        for (int e : diag) {
            auto lab = entering(e);
            C.push_back(moving_sw ? lab.first : lab.second);
        }
        return C;
    }
};

std::vector<std::vector<int>> rectangle_diagonals(const CogHeap& ch, const Rectangle& r, DiagonalDirection dir)
{
    std::vector<std::vector<int>> out;
    if (dir == DiagonalDirection::ne_sw) {
        for (int a = r.a1; a >= r.a0; --a) {
            out.emplace_back();
            for (int b = r.b1; b >= r.b0; --b)
                out.back().push_back(ch.entry_ab(a, b));
        }
    } else {
        for (int b = r.b1; b >= r.b0; --b) {
            out.emplace_back();
            for (int a = r.a1; a >= r.a0; --a)
                out.back().push_back(ch.entry_ab(a, b));
        }
    }
    return out;
}

// Strands entering R_j across its NW and NE edges.
std::vector<int> rectangle_inputs(const Builder& bld, const CogHeap& ch, const Rectangle& r)
{
    std::set<int> in;
    for (int a = r.a0; a <= r.a1; ++a)
        in.insert(bld.entering(ch.entry_ab(a, r.b1)).second);
    for (int b = r.b0; b <= r.b1; ++b)
        in.insert(bld.entering(ch.entry_ab(r.a1, b)).first);
    return {in.begin(), in.end()};
}

}  // namespace

Mask sigma_of_tau(const PeakOrdering& o, const TauDatum& tau, DiagonalDirection dir)
{
    const CogHeap& ch = *o.ch;
    ZelFixedPoint fp = tau_fixed_point(o, tau);
    Builder bld(o);
    for (int j = 0; j < o.p(); ++j) {
        const Rectangle& r = o.rect[j];
        if (rectangle_inputs(bld, ch, r) != fp.A[j])
            throw std::logic_error("strands entering a rectangle differ from A(j)");
        int plus = 0;
        for (const auto& diag : rectangle_diagonals(ch, r, dir)) {
            bool sw = dir == DiagonalDirection::ne_sw;
            std::vector<int> C = bld.inputs(diag, sw);
            int k;
            if (sw) {
                k = choose_exit(C, fp.A[j], fp.D[j]);
            } else {
                // Mirror image: pick from D(j) scanning downwards.
                auto neg = [](std::vector<int> v) {
                    for (int& m : v)
                        m = -m;
                    return v;
                };
                k = -choose_exit(neg(C), neg(fp.A[j]), neg(fp.T[j]));
            }
            plus += bld.fill(diag, sw, k);
        }
        if (plus != size_of(tau.parts[j]))
            throw std::logic_error("rectangle plus count differs from |tau_j|");
    }

    // w0^J part: runs of the canonical word after v.
    const Word& word = o.word();
    int z = o.z(), n = o.n();
    std::vector<std::vector<int>> left, right;
    for (int j = ch.d.v_len(); j < static_cast<int>(word.size()); ++j) {
        int g = word[j];
        auto& side = g < z ? left : right;
        bool extends = !side.empty() && !side.back().empty() &&
                       word[side.back().back()] == (g < z ? g - 1 : g + 1) && side.back().back() == j - 1;
        if (!extends)
            side.emplace_back();
        side.back().push_back(j);
    }
    for (std::size_t i = 0; i < left.size(); ++i)
        bld.fill(left[i], false, fp.x(z - static_cast<int>(i)));
    for (std::size_t i = 0; i < right.size(); ++i)
        bld.fill(right[i], true, fp.x(z + 1 + static_cast<int>(i)));

    Mask m{n, word, bld.bits};
    if (mask_value(n, word, m.bits) != fp.x)
        throw std::logic_error("sigma(tau) has the wrong value");
    if (cell_dimension(m) != tau_dimension(tau))
        throw std::logic_error("sigma(tau) has the wrong plus count");
    if (rho_image(m, o) != fp.point)
        throw std::logic_error("rho(sigma(tau)) differs from p_tau");
    return m;
}

Bits transport_bits(int n, const Word& from, const Bits& bits, const Word& to)
{
    if (from.size() != bits.size() || from.size() != to.size())
        throw std::invalid_argument("length mismatch");
    if (from == to)
        return bits;
    if (commutation_normal_form(n, from) != commutation_normal_form(n, to))
        throw std::invalid_argument("words have different heaps");
    std::map<std::pair<int, int>, int> slot;
    std::vector<int> seen(n + 1, 0);
    for (std::size_t j = 0; j < to.size(); ++j)
        slot[{to[j], seen[to[j]]++}] = static_cast<int>(j);
    std::fill(seen.begin(), seen.end(), 0);
    Bits out(bits.size());
    for (std::size_t j = 0; j < from.size(); ++j)
        out[slot[{from[j], seen[from[j]]++}]] = bits[j];
    return out;
}

ZelPoint rho_image(const Mask& m, const PeakOrdering& o)
{
    Mask c{o.n(), o.word(), transport_bits(o.n(), m.word, m.bits, o.word())};
    BSFixedPoint v = fixed_point(c);
    BSIndexing ix = bs_indexing(o.n(), o.word());
    ZelPoint out;
    for (int j = 0; j + 1 < o.p(); ++j)
        out.W.push_back(v.v[o.rect[j].bottom]);
    for (int d = 1; d < o.n(); ++d)
        out.F.push_back(ix.last[d] >= 0 ? v.v[ix.last[d]] : standard(d));
    return out;
}

namespace {

std::string tau_str(const TauDatum& t)
{
    std::string s;
    for (const Partition& p : t.parts)
        s += partition_str(p);
    return s + ";" + t.x_tau.str();
}

}  // namespace

GeometricReport is_geometric(const MaskSet& e, const PeakOrdering& o)
{
    GeometricReport rep;
    std::vector<TauDatum> taus = enumerate_tau(o);
    std::map<ZelPoint, std::size_t> target;
    for (std::size_t i = 0; i < taus.size(); ++i)
        target[tau_fixed_point(o, taus[i]).point] = i;
    rep.taus = taus.size();
    rep.masks = e.masks.size();

    std::vector<ZelPoint> images = parallel_map<ZelPoint>(e.masks.size(), [&](std::size_t i) {
        return rho_image(Mask{e.n, e.word, e.masks[i]}, o);
    });
    std::map<ZelPoint, std::size_t> first_hit;
    for (std::size_t i = 0; i < images.size(); ++i) {
        std::string name = bits_str(e.masks[i]);
        auto [it, fresh] = first_hit.emplace(images[i], i);
        if (!fresh) {
            rep.collisions.push_back(bits_str(e.masks[it->second]) + " and " + name);
            continue;
        }
        auto t = target.find(images[i]);
        if (t == target.end()) {
            rep.unmatched.push_back(name);
            continue;
        }
        ++rep.matched;
        int dim = cell_dimension(Mask{e.n, e.word, e.masks[i]});
        int want = tau_dimension(taus[t->second]);
        if (dim != want)
            rep.dimension_mismatches.push_back(name + " (" + std::to_string(dim) + " vs " + std::to_string(want) +
                                               " for " + tau_str(taus[t->second]) + ")");
    }
    rep.missed = rep.taus - rep.matched;
    rep.geometric = rep.collisions.empty() && rep.unmatched.empty() && rep.dimension_mismatches.empty() &&
                    rep.missed == 0;
    return rep;
}

MaskSet construction2_set(const PeakOrdering& o, DiagonalDirection dir)
{
    std::vector<TauDatum> taus = enumerate_tau(o);
    MaskSet out{o.n(), o.word(), {}};
    out.masks = parallel_map<Bits>(taus.size(), [&](std::size_t i) { return sigma_of_tau(o, taus[i], dir).bits; });
    return out;
}

}  // namespace klmasks
