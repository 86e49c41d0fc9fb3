#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klmasks/perm.hpp"

namespace klmasks {

// Heap of a word. Entry j sits in column word[j]; the left end of the word
// is the top of the picture.
struct Heap {
    int n = 0;
    Word word;
    std::vector<int> level;  // compacted: one above the highest neighbour below
    std::vector<std::pair<int, int>> covers;  // (upper, lower) index pairs

    int size() const { return static_cast<int>(word.size()); }
    int col(int j) const { return word[j]; }
    std::vector<std::vector<bool>> order;  // order[j][k]: j lies above k

    bool above(int j, int k) const { return order[j][k]; }
};

Heap build_heap(int n, const Word& word);
// Canonical representative of the commutation class (Cartier-Foata style:
// levels read top-down, each level sorted). Two words have isomorphic
// heaps iff these agree.
Word commutation_normal_form(int n, const Word& word);
// All linear extensions, capped; throws std::length_error above the cap.
std::vector<Word> linear_extensions(const Heap& h, std::size_t cap = 100000);

// Strands over a heap with a 0/1 mask. Strands start at the top labelled
// 1..n by position and cross exactly at entries with mask value 1.
struct StringDiagram {
    std::vector<std::vector<int>> orders;  // orders[j]: labels by position before entry j
    std::vector<int> nw, ne, sw, se;       // labels around entry j
    // larger / smaller of the two labels meeting at entry j
    int big(int j) const { return std::max(nw[j], ne[j]); }
    int small(int j) const { return std::min(nw[j], ne[j]); }
};
StringDiagram strings(const Heap& h, const std::vector<int>& mask);

// w = v * w0^J for cograssmannian w with unique right ascent z (z = n when
// w has no ascent, i.e. w = w0).
struct CogDecomposition {
    Perm w, v, w0J;
    int n = 0;
    int z = 0;
    Word v_word;    // canonical linearization of v's heap
    Word w0J_word;  // (s1..s_{z-1})(s1..s_{z-2})...(s_{n-1}..s_{z+1})...
    Word word;      // v_word followed by w0J_word
    int v_len() const { return static_cast<int>(v_word.size()); }
};
CogDecomposition cog_decompose(const Perm& w);
Word canonical_cog_word(const Perm& w);

// Lattice picture of the canonical heap of a cograssmannian permutation.
// Grassmannian cells are (a, b) with column z - a + b and height a + b, so
// the bottom entry of v sits at (z, 0); NW-SE diagonals have constant b and
// NE-SW diagonals constant a. w0^J entries have negative heights.
struct CogHeap {
    CogDecomposition d;
    Heap heap;
    std::vector<int> y;                       // lattice height of entry j
    std::vector<std::pair<int, int>> cell;    // (a, b) for v entries, (-1,-1) otherwise
    std::map<std::pair<int, int>, int> at;    // (column, height) -> entry
    int entry(int c, int yy) const;           // -1 when empty
    int entry_ab(int a, int b) const;         // grassmannian cell lookup, -1 when absent
    // Number of v entries in column c.
    int column_size(int c) const;
};
CogHeap cog_heap(const Perm& w);

struct Ridgeline {
    int first_col = 0;          // leftmost column of v's heap
    std::vector<int> top;       // height of the maximal entry per column
    std::vector<int> top_entry; // index of that entry per column
    std::string parens;         // '(' down-step, ')' up-step
};
Ridgeline ridgeline(const Perm& w);

struct Valley {
    int column = 0;
    int capacity = 0;
    int paren_index = 0;  // index of its '(' in the ridgeline string
};
std::vector<Valley> valleys(const Perm& w);

// Peaks of v's heap: entries with nothing above them, left to right.
std::vector<int> peak_entries(const CogHeap& ch);

}  // namespace klmasks
