#include "klmasks/ls_formula.hpp"

#include <functional>
#include <stdexcept>

namespace klmasks {

std::vector<int> LSTree::preorder() const
{
    std::vector<int> out;
    std::function<void(int)> rec = [&](int v) {
        out.push_back(v);
        for (int c : nodes[v].children)
            rec(c);
    };
    rec(0);
    return out;
}

int EdgeLabeling::size() const
{
    int s = 0;
    for (int l : labels)
        s += l;
    return s;
}

LSTree ls_tree(const Perm& w)
{
    if (!is_cograssmannian(w))
        throw std::invalid_argument("ls_tree: not cograssmannian: " + w.str());
    Ridgeline r = ridgeline(w);
    CogHeap ch = cog_heap(w);
    LSTree t;
    t.nodes.emplace_back();
    const std::string& s = r.parens;
    std::vector<int> partner(s.size(), -1), stack;
    for (int k = 0; k < static_cast<int>(s.size()); ++k) {
        if (s[k] == '(') {
            stack.push_back(k);
        } else if (!stack.empty()) {
            partner[stack.back()] = k;
            partner[k] = stack.back();
            stack.pop_back();
        }
    }
    std::vector<int> open_nodes{0};
    for (int k = 0; k < static_cast<int>(s.size()); ++k) {
        if (partner[k] < 0)
            continue;
        if (s[k] == '(') {
            LSTree::Node nd;
            nd.parent = open_nodes.back();
            nd.open = k;
            nd.close = partner[k];
            int id = t.size();
            t.nodes[nd.parent].children.push_back(id);
            t.nodes.push_back(nd);
            open_nodes.push_back(id);
        } else {
            open_nodes.pop_back();
        }
    }
    for (int v = 1; v < t.size(); ++v)
        if (t.nodes[v].children.empty()) {
            auto& nd = t.nodes[v];
            nd.column = r.first_col + nd.open + 1;
            nd.capacity = ch.column_size(nd.column);
        }
    for (int v : t.preorder())
        if (t.is_leaf(v))
            t.leaves.push_back(v);
    return t;
}

std::vector<EdgeLabeling> enumerate_labelings(const LSTree& tree, const std::vector<int>& leaf_caps)
{
    std::vector<int> cap(tree.size(), 0);
    for (std::size_t k = 0; k < tree.leaves.size(); ++k)
        cap[tree.leaves[k]] = leaf_caps[k];
    // Internal labels are bounded by the smallest capacity below them.
    std::vector<int> bound(tree.size(), 0);
    std::function<int(int)> fill = [&](int v) {
        if (tree.is_leaf(v))
            return bound[v] = cap[v];
        int b = INT32_MAX;
        for (int c : tree.nodes[v].children)
            b = std::min(b, fill(c));
        return bound[v] = (b == INT32_MAX ? 0 : b);
    };
    fill(0);
    std::vector<int> order = tree.preorder();
    std::vector<EdgeLabeling> out;
    EdgeLabeling cur{std::vector<int>(tree.size(), 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            out.push_back(cur);
            return;
        }
        int v = order[k];
        if (v == 0) {
            rec(k + 1);
            return;
        }
        for (int l = cur.labels[tree.nodes[v].parent]; l <= bound[v]; ++l) {
            cur.labels[v] = l;
            rec(k + 1);
        }
        cur.labels[v] = 0;
    };
    rec(0);
    return out;
}

std::vector<EdgeLabeling> enumerate_labelings(const LSTree& tree)
{
    std::vector<int> caps;
    for (int v : tree.leaves)
        caps.push_back(tree.nodes[v].capacity);
    return enumerate_labelings(tree, caps);
}

GammaX gamma_and_x(const CogHeap& ch, const LSTree& tree, const EdgeLabeling& t)
{
    int p = ch.heap.size();
    int vl = ch.d.v_len();
    Bits g(p, 1);
    for (int leaf : tree.leaves) {
        int m = t.labels[leaf];
        if (m == 0)
            continue;
        int c = tree.nodes[leaf].column;
        int top = -1;
        for (int j = 0; j < vl; ++j)
            if (ch.heap.col(j) == c && (top < 0 || ch.y[j] > ch.y[top]))
                top = j;
        auto [a, b] = ch.cell[top];
        int alpha = a - m + 1, beta = b - m + 1;
        if (alpha < 0 || beta < 0)
            throw std::invalid_argument("leaf label exceeds capacity");
        for (int j = 0; j < vl; ++j)
            if (ch.cell[j].first >= alpha && ch.cell[j].second >= beta)
                g[j] = 0;
    }
    return {g, mask_value(ch.d.n, ch.d.word, g)};
}

GammaX gamma_and_x(const Perm& w, const EdgeLabeling& t)
{
    return gamma_and_x(cog_heap(w), ls_tree(w), t);
}

Perm cograssmannianize(const Perm& x, int z)
{
    std::vector<int> J = complement_generators(x.n(), {z});
    return parabolic_decompose(x, J).first * parabolic_longest(J, x.n());
}

std::vector<int> leaf_capacities_for(const CogHeap& ch, const LSTree& tree, const Perm& x)
{
    Perm xt = cograssmannianize(x, ch.d.z);
    auto m = fwp_mask(ch.d.n, ch.d.word, {}, xt);
    if (!m)
        throw std::invalid_argument("no constant mask: " + x.str() + " is not below " + ch.d.w.str());
    std::vector<int> caps;
    for (int leaf : tree.leaves) {
        int c = tree.nodes[leaf].column, zeros = 0;
        for (int j = 0; j < ch.d.v_len(); ++j)
            zeros += ch.heap.col(j) == c && m->bits[j] == 0;
        caps.push_back(zeros);
    }
    return caps;
}

LPoly ls_kl(const Perm& x, const Perm& w)
{
    if (x.n() != w.n())
        throw std::invalid_argument("rank mismatch in ls_kl");
    if (!bruhat_leq(x, w))
        return {};
    CogHeap ch = cog_heap(w);
    LSTree tree = ls_tree(w);
    LPoly p;
    for (const EdgeLabeling& t : enumerate_labelings(tree, leaf_capacities_for(ch, tree, x)))
        p += LPoly::monomial(1, t.size());
    return p;
}

std::vector<BprimeTerm> cog_bprime_expansion(const Perm& w)
{
    CogHeap ch = cog_heap(w);
    LSTree tree = ls_tree(w);
    std::vector<BprimeTerm> out;
    for (const EdgeLabeling& t : enumerate_labelings(tree)) {
        Perm x = gamma_and_x(ch, tree, t).x;
        out.push_back({t, x, 2 * t.size() + x.length() - w.length()});
    }
    return out;
}

Hecke bprime_sum(int n, const std::vector<BprimeTerm>& terms)
{
    Hecke h(n);
    for (const auto& term : terms)
        h += bprime_element(term.x) * LPoly::monomial(1, term.v_exponent);
    return h;
}

bool check_principal_ideals(const Perm& w)
{
    CogHeap ch = cog_heap(w);
    LSTree tree = ls_tree(w);
    auto below = bruhat_interval_below(w);
    std::vector<std::vector<int>> caps;
    for (const Perm& x : below)
        caps.push_back(leaf_capacities_for(ch, tree, x));
    for (const EdgeLabeling& t : enumerate_labelings(tree)) {
        Perm xt = gamma_and_x(ch, tree, t).x;
        for (std::size_t k = 0; k < below.size(); ++k) {
            bool in = true;
            for (std::size_t l = 0; l < tree.leaves.size(); ++l)
                if (caps[k][l] < t.labels[tree.leaves[l]])
                    in = false;
            if (in != bruhat_leq(below[k], xt))
                return false;
        }
    }
    return true;
}

}  // namespace klmasks
