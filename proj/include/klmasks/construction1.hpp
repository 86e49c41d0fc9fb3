#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klmasks/heap.hpp"
#include "klmasks/ls_formula.hpp"
#include "klmasks/mask.hpp"

namespace klmasks {

// Statistics of one valley for a fixed labeling.
struct ValleyStats {
    int column = 0;
    int p = 0;  // zeros of gamma(t) in the valley column
    int q = 0;  // up-steps from the valley to the next peak
    int r = 0;  // valley diagonals that are not zeroed out
};

// lambda from the up-step labels, and the three derived partitions. Derived
// partitions keep their indexing (they are prefixes), trailing zeros dropped.
struct PartitionQuad {
    std::vector<int> lambda;  // e_1 >= ... >= e_q, zeros kept
    std::vector<int> lambda_dag;
    std::vector<int> lambda_prime;
    std::vector<int> nu;
    std::vector<int> eta;
};

std::vector<int> transpose_partition(const std::vector<int>& lambda);
// lambda', nu, eta from lambda and r.
PartitionQuad derive_partitions(const std::vector<int>& lambda, int r);

// Entries of one valley's segment. diagonals[i-1] is valley diagonal i from
// its valley entry down; d_part[i-1] is the portion below region 1 that
// belongs to the segment.
struct SegmentRegions {
    ValleyStats stats;
    std::vector<int> region1, region2, region3, feasible;
    std::vector<std::vector<int>> diagonals;
    std::vector<std::vector<int>> d_part;
    std::vector<std::vector<int>> cross;  // cross-diagonal entries, top to bottom
    std::vector<int> all() const;
};

struct Construction1Variant {
    bool down_steps = false;
};

// Everything computed for one labeling.
struct SigmaT {
    EdgeLabeling t;
    Mask sigma;
    Perm x;
    DefectSet P;
    std::vector<SegmentRegions> segments;  // one per leaf, left to right
    std::vector<PartitionQuad> partitions;
};

ValleyStats valley_stats(const Perm& w, const EdgeLabeling& t, int valley_column);
PartitionQuad edge_label_partition(const Perm& w, const EdgeLabeling& t, int valley_column);
std::vector<SegmentRegions> segment_regions(const Perm& w, const EdgeLabeling& t);

// Throws std::logic_error when an internal consistency check fails.
SigmaT build_sigma_t(const Perm& w, const EdgeLabeling& t);
// Down-step variant: built on w0 w w0 and mirrored back, on the word
// construction1_word(w, variant). t labels the tree of w.
SigmaT build_sigma_t(const Perm& w, const EdgeLabeling& t, Construction1Variant variant);

struct Construction1 {
    Perm w;
    Word word;
    std::vector<SigmaT> parts;  // one per labeling, enumeration order
    MaskSet set;                // union of the E(t), part by part
    std::vector<std::size_t> part_of;  // part index of each mask in set
};
Construction1 construction1_set(const Perm& w, Construction1Variant variant = {});

// E(t) = masks with defect set P(t) and value below x(t).
MaskSet construction1_part(int n, const Word& word, const DefectSet& P, const Perm& x);

// Inverse of t -> P(t) on the canonical word of w. Returns nullopt when P is
// not in the image.
std::optional<EdgeLabeling> recover_labeling(const Perm& w, const DefectSet& P);

// Flips the bits at entries j < k where the same two strands meet and do
// not meet in between. Throws if that is not the case.
Bits string_move(const Heap& h, const Bits& mask, int j, int k);
// Entries k > j forming a valid string move with j.
std::vector<int> string_move_partners(const Heap& h, const Bits& mask, int j);

// Labeling of the mirrored tree (of w0 w w0) matching t; parens_len is the
// common length of the two ridgeline strings.
EdgeLabeling mirror_labeling(const LSTree& from, const LSTree& to, int parens_len, const EdgeLabeling& t);
Perm conjugate_w0(const Perm& w);
// Word the masks live on: the canonical word, or for the down-step variant
// the mirror image of the canonical word of w0 w w0.
Word construction1_word(const Perm& w, Construction1Variant variant);

}  // namespace klmasks
