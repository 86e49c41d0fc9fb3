#pragma once

#include <optional>
#include <string>
#include <vector>

#include "klmasks/mask.hpp"

namespace klmasks {

// Positions are 0-based here; -1 marks an absent predecessor or generator.
struct BSIndexing {
    Word word;
    std::vector<int> lpred, rpred;  // per position
    std::vector<int> last;          // last[d] for d = 1..n-1 (index 0 unused)
};
BSIndexing bs_indexing(int n, const Word& word);

using IndexSet = std::vector<int>;  // sorted coordinate labels

// One coordinate subspace per word position.
struct BSFixedPoint {
    std::vector<IndexSet> v;
    bool operator==(const BSFixedPoint&) const = default;
    auto operator<=>(const BSFixedPoint&) const = default;
};

std::string encode_pm(const Mask& m);
Mask decode_pm(int n, const Word& word, const std::string& e);

BSFixedPoint fixed_point(const Mask& m);
// Chain condition V_lpred < V_j < V_rpred, with E_{d-1} / E_{d+1} when absent.
bool satisfies_chains(int n, const Word& word, const BSFixedPoint& p);
// Inverse of fixed_point on chain-satisfying coordinate data.
std::optional<Mask> mask_of_fixed_point(int n, const Word& word, const BSFixedPoint& p);
// Flag (V_last(1), ..., V_last(n-1)), E_d substituted for missing letters.
std::vector<IndexSet> pi_image(const Mask& m);
// {x(1), ..., x(d)} for d = 1..n-1.
std::vector<IndexSet> staircase(const Perm& x);

int cell_dimension(const Mask& m);

struct FiberProfile {
    LPoly poly;           // sum over masks with value x of q^d
    int max_defect = -1;  // -1 when the fiber is empty
    bool small = true;    // 2 d < l(w) - l(x) for every mask with value below w
};
// Brute force over all masks of the word.
FiberProfile fiber_profile(int n, const Word& word, const Perm& x);

}  // namespace klmasks
