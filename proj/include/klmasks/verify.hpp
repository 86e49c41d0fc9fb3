#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klmasks/construction1.hpp"
#include "klmasks/zelevinsky.hpp"

namespace klmasks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

std::vector<Perm> cograssmannian_perms(int n);

// Fixed worked examples with known answers.
std::vector<CheckResult> golden_example_checks();

// ls_kl = zelevinsky_kl (every neat ordering) = kl_polynomial, x <= w.
CheckResult check_oracle_concordance(int n_max);
// C'_w equals the B' expansion over labelings.
CheckResult check_cog_bprime(int n_max);
// Construction 1 passes deodhar_check; the bar-invariance part only up to
// hecke_n_max. With mutate set, one bit of each set is flipped first and the
// check passes only if every mutated set is rejected.
CheckResult check_construction1(int n_max, int hecke_n_max, bool mutate = false);
// Construction 2, every neat ordering, both diagonal directions.
CheckResult check_construction2(int n_max);
// #+ = l(value) + d on every mask of every reduced word in S_{n_exhaustive},
// plus `samples` random masks in S_{n_random}.
CheckResult check_plus_count(int n_exhaustive, int n_random, long samples, std::uint64_t seed);
// fwp_mask / fwp_ideal against brute force, lower-ideal property; every
// reduced word of S_n with length <= max_len, `per_word` defect sets each.
CheckResult check_fwp(int n, int max_len, int per_word, std::uint64_t seed);
// t -> P(t) injective and recover_labeling inverts it.
CheckResult check_injectivity(int n_max);
// 2 deg <= l(w) - l(x) - 1 for the tau polynomial of every neat ordering.
CheckResult check_smallness(int n_max);

struct CompareRow {
    Perm w;
    std::vector<int> ordering;  // peak columns
    GeometricReport report;
};
// Construction 1 sets tested for geometricity against every neat ordering.
std::vector<CompareRow> compare_constructions(int n_max, Construction1Variant variant = {});
std::string compare_report(const std::vector<CompareRow>& rows);

}  // namespace klmasks
