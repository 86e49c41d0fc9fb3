#pragma once

#include <memory>
#include <string>
#include <vector>

#include "klmasks/bott_samelson.hpp"
#include "klmasks/heap.hpp"
#include "klmasks/mask.hpp"

namespace klmasks {

using Partition = std::vector<int>;  // weakly decreasing, no zero parts

// Rectangle of one peak. Cells are (a, b) as in CogHeap; the rectangle is
// [a0, a1] x [b0, b1] with top (a1, b1) and bottom (a0, b0).
struct Rectangle {
    int peak = -1;    // entry index of P_j in the canonical word
    int bottom = -1;  // entry index of b_j
    std::vector<int> entries;
    int a0 = 0, a1 = 0, b0 = 0, b1 = 0;
    int d = 0;                    // column of b_j
    int ldim = 0, rdim = 0;
    int lpred = -1, rpred = -1;   // 0-based ordering index, -1 when undefined
    int height = 0;               // chain length from the lowest entry of v to P_j
    int max_parts() const { return d - ldim; }
    int max_part() const { return rdim - d; }
};

struct PeakOrdering {
    std::shared_ptr<const CogHeap> ch;
    std::vector<Rectangle> rect;  // rect[j] belongs to P_{j+1}
    int p() const { return static_cast<int>(rect.size()); }
    int n() const { return ch->d.n; }
    int z() const { return ch->d.z; }
    const Perm& w() const { return ch->d.w; }
    const Word& word() const { return ch->d.word; }
    std::vector<int> columns() const;  // peak columns in ordering order
};

// Peaks listed by column. Throws std::invalid_argument when the columns are
// not a permutation of the peak columns of w, and std::logic_error when a
// rectangle fails the expected shape.
PeakOrdering make_ordering(const Perm& w, const std::vector<int>& peak_columns);
PeakOrdering make_ordering(std::shared_ptr<const CogHeap> ch, const std::vector<int>& peak_columns);
// All orderings, lexicographic in the column sequence.
std::vector<PeakOrdering> enumerate_orderings(const Perm& w);
bool is_neat(const PeakOrdering& o);
// First neat ordering in enumeration order (one always exists).
PeakOrdering default_ordering(const Perm& w);

struct TauDatum {
    std::vector<Partition> parts;  // one per rectangle
    Perm x_tau;                    // in S_z x S_{n-z}
    bool operator==(const TauDatum&) const = default;
};

// Partitions with at most `rows` parts, each at most `cols`, in
// lexicographic order starting with the empty one.
std::vector<Partition> partitions_in_box(int rows, int cols);
std::vector<std::vector<Partition>> partition_tuples(const PeakOrdering& o);
std::vector<Perm> young_subgroup(int n, int z);
// Partition tuples outer, x_tau inner.
std::vector<TauDatum> enumerate_tau(const PeakOrdering& o);
std::size_t count_tau(const PeakOrdering& o);

struct ZelPoint {
    std::vector<IndexSet> W;  // W_1 .. W_{p-1}
    std::vector<IndexSet> F;  // F_1 .. F_{n-1}
    bool operator==(const ZelPoint&) const = default;
    auto operator<=>(const ZelPoint&) const = default;
};

struct ZelFixedPoint {
    ZelPoint point;
    std::vector<IndexSet> W;  // W_1 .. W_p, with W_p = F_z
    std::vector<IndexSet> A, T, D;
    Perm u, x;  // u is grassmannian with F_z = u{1..z}; x = u x_tau
};

ZelFixedPoint tau_fixed_point(const PeakOrdering& o, const TauDatum& tau);
// Forward direction: tau from W_1..W_p and the flag permutation x.
TauDatum tau_of_subspaces(const PeakOrdering& o, const std::vector<IndexSet>& W, const Perm& x);
int tau_dimension(const TauDatum& tau);

// Sum over tau with u_tau x_tau = x of q^(dim - l(x)). Throws
// std::invalid_argument for a non-neat ordering; tau_polynomial skips that
// gate.
LPoly zelevinsky_kl(const Perm& x, const Perm& w, const PeakOrdering& o);
LPoly tau_polynomial(const Perm& x, const PeakOrdering& o);

// The exit label k for one diagonal: first k in A (ascending) with
// g(k) = 0 and g(next) = 1, g(k) = #{m in C : m < k} - #{m in D : m < k}.
int choose_exit(const std::vector<int>& C, const std::vector<int>& A, const std::vector<int>& D);

enum class DiagonalDirection { ne_sw, nw_se };
DiagonalDirection parse_direction(const std::string& s);
std::string to_string(DiagonalDirection d);

// Mask on the canonical word. Throws std::logic_error if any of the
// construction's postconditions fail.
Mask sigma_of_tau(const PeakOrdering& o, const TauDatum& tau, DiagonalDirection dir = DiagonalDirection::ne_sw);

// Bits moved from one word to another word with the same heap, matching
// entries by column and occurrence. Throws std::invalid_argument otherwise.
Bits transport_bits(int n, const Word& from, const Bits& bits, const Word& to);

// Bott-Samelson fixed point restricted to b_1..b_{p-1} and last(1..n-1).
// Masks on another word of the same heap are transported first.
ZelPoint rho_image(const Mask& m, const PeakOrdering& o);

struct GeometricReport {
    bool geometric = false;
    std::size_t masks = 0, taus = 0;
    std::size_t matched = 0;
    std::vector<std::string> collisions;     // two masks with one image
    std::vector<std::string> unmatched;      // image outside {p_tau}
    std::vector<std::string> dimension_mismatches;
    std::size_t missed = 0;                  // p_tau not hit
};
GeometricReport is_geometric(const MaskSet& e, const PeakOrdering& o);

MaskSet construction2_set(const PeakOrdering& o, DiagonalDirection dir = DiagonalDirection::ne_sw);

std::string partition_str(const Partition& p);

}  // namespace klmasks
