#pragma once

#include <vector>

#include "klmasks/heap.hpp"
#include "klmasks/hecke.hpp"
#include "klmasks/mask.hpp"

namespace klmasks {

// Rooted tree of matched ridgeline parentheses. Node 0 is the added root;
// every other node is a matched pair and its edge goes to its parent.
struct LSTree {
    struct Node {
        int parent = -1;
        std::vector<int> children;  // left to right
        int open = -1, close = -1;  // parenthesis indices
        int capacity = -1;          // leaves only
        int column = -1;            // valley column, leaves only
    };
    std::vector<Node> nodes;
    std::vector<int> leaves;  // node ids, left to right

    int size() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int v) const { return v != 0 && nodes[v].children.empty(); }
    // Nodes in depth-first preorder, root first.
    std::vector<int> preorder() const;
};

// labels[v] is the label of the edge from v to its parent; labels[0] = 0.
struct EdgeLabeling {
    std::vector<int> labels;
    int size() const;  // |t|
};

LSTree ls_tree(const Perm& w);
// All valid labelings, lexicographic in preorder.
std::vector<EdgeLabeling> enumerate_labelings(const LSTree& tree);
// Same, with leaf capacities overridden (indexed like tree.leaves).
std::vector<EdgeLabeling> enumerate_labelings(const LSTree& tree, const std::vector<int>& leaf_caps);

struct GammaX {
    Bits gamma;  // constant mask on the canonical word
    Perm x;
};
GammaX gamma_and_x(const Perm& w, const EdgeLabeling& t);
GammaX gamma_and_x(const CogHeap& ch, const LSTree& tree, const EdgeLabeling& t);

// v * w0^J where v is the minimal representative of x W_J.
Perm cograssmannianize(const Perm& x, int z);
// Mask-value 0 counts of the constant mask of x-tilde in each valley column,
// indexed like tree.leaves.
std::vector<int> leaf_capacities_for(const CogHeap& ch, const LSTree& tree, const Perm& x);

// KL polynomial (exponents in q) by counting labelings.
LPoly ls_kl(const Perm& x, const Perm& w);

struct BprimeTerm {
    EdgeLabeling t;
    Perm x;
    int v_exponent;  // coefficient of B'_x is v^{v_exponent}
};
std::vector<BprimeTerm> cog_bprime_expansion(const Perm& w);
// Sum of the expansion as a Hecke element.
Hecke bprime_sum(int n, const std::vector<BprimeTerm>& terms);
// Checks that each I(t) is the principal ideal below x(t) (brute force over S_n).
bool check_principal_ideals(const Perm& w);

}  // namespace klmasks
