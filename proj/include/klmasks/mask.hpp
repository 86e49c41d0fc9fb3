#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klmasks/hecke.hpp"
#include "klmasks/perm.hpp"

namespace klmasks {

using Bits = std::vector<int>;
// Defect sets hold 1-based word positions in increasing order.
using DefectSet = std::vector<int>;

// Masks on words longer than this are never enumerated exhaustively.
inline constexpr int kBruteForceMaxLength = 22;

struct Mask {
    int n = 0;
    Word word;
    Bits bits;
};

enum class EntryKind { plain_zero, plain_one, zero_defect, one_defect };

struct DefectProfile {
    DefectSet defects;
    int d = 0;
    std::vector<EntryKind> kind;
    Perm value;
};

Mask make_mask(int n, const Word& word, const std::string& bits);
std::string bits_str(const Bits& b);
Perm mask_value(int n, const Word& word, const Bits& bits);
DefectProfile defect_profile(const Mask& m);
DefectProfile defect_profile(int n, const Word& word, const Bits& bits);
char entry_char(EntryKind k);

struct MaskSet {
    int n = 0;
    Word word;
    std::vector<Bits> masks;
};

// Every mask on the word; guarded by kBruteForceMaxLength.
MaskSet all_masks(int n, const Word& word);

struct Prototype {
    std::map<Perm, LPoly> poly;  // P_x(E), exponents in q
    Hecke h;                     // h(E)
};
Prototype prototype(const MaskSet& e);

bool is_admissible(const MaskSet& e);
bool is_bounded(const MaskSet& e);

enum class DeodharStatus { ok, not_bounded, not_admissible, mismatch };
struct DeodharResult {
    DeodharStatus status = DeodharStatus::ok;
    std::string detail;
    bool ok() const { return status == DeodharStatus::ok; }
};
// admissibility_hecke=false skips the bar-invariance part of admissibility
// (the remaining conditions and the KL comparison still run).
DeodharResult deodhar_check(const MaskSet& e, bool admissibility_hecke = true);
std::string to_string(DeodharStatus s);

// The unique mask on word with defect set exactly P and value x, if any.
std::optional<Mask> fwp_mask(int n, const Word& word, const DefectSet& P, const Perm& x);
// Intermediate r_i(x) values of the backward recursion, r_{p+1} first.
std::vector<Perm> fwp_trace(int n, const Word& word, const DefectSet& P, const Perm& x);
// All masks with defect set exactly P, in lexicographic bit order.
MaskSet fwp_ideal(int n, const Word& word, const DefectSet& P);
// Bruhat-maximal elements of a set of permutations.
std::vector<Perm> bruhat_maximal(const std::vector<Perm>& xs);

}  // namespace klmasks
