#include "klmasks/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "klmasks/bott_samelson.hpp"
#include "klmasks/ls_formula.hpp"
#include "klmasks/parallel.hpp"

namespace klmasks {

namespace {

CheckResult timed(const std::string& name, const std::function<std::string()>& body)
{
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = body();
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Runs fn on every item in parallel; returns "" or "<count> failures, first: ...".
template <class T>
std::string each(const std::vector<T>& items, const std::function<std::string(const T&)>& fn)
{
    std::vector<std::string> res = parallel_map<std::string>(items.size(), [&](std::size_t i) {
        try {
            return fn(items[i]);
        } catch (const std::exception& e) {
            return std::string("exception: ") + e.what();
        }
    });
    std::size_t bad = 0;
    std::string first;
    for (const auto& s : res)
        if (!s.empty()) {
            if (bad++ == 0)
                first = s;
        }
    if (bad == 0)
        return "";
    return std::to_string(bad) + " failures, first: " + first;
}

std::vector<Perm> cog_up_to(int n_max)
{
    std::vector<Perm> out;
    for (int n = 2; n <= n_max; ++n)
        for (const Perm& w : cograssmannian_perms(n))
            out.push_back(w);
    return out;
}

std::string expect_eq(const std::string& what, const std::string& got, const std::string& want)
{
    return got == want ? "" : what + ": got " + got + ", want " + want;
}

std::string sets_str(const std::vector<IndexSet>& v)
{
    std::string s;
    for (const auto& x : v) {
        s += "{";
        for (std::size_t i = 0; i < x.size(); ++i)
            s += (i ? "," : "") + std::to_string(x[i]);
        s += "}";
    }
    return s;
}

}  // namespace

std::vector<Perm> cograssmannian_perms(int n)
{
    std::vector<Perm> out;
    for (const Perm& w : all_perms(n))
        if (is_cograssmannian(w))
            out.push_back(w);
    return out;
}

std::vector<CheckResult> golden_example_checks()
{
    std::vector<CheckResult> out;
    out.push_back(timed("reduced words of 3412", [] {
        std::string got;
        for (const Word& w : reduced_words(parse_perm("3412")))
            got += word_str(w) + ";";
        return expect_eq("words", got, "2,1,3,2;2,3,1,2;");
    }));
    out.push_back(timed("heap of s2 s3 s1 s2 s4", [] {
        Heap h = build_heap(5, {2, 3, 1, 2, 4});
        std::set<std::pair<int, int>> covers(h.covers.begin(), h.covers.end());
        std::set<std::pair<int, int>> want{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}};
        if (covers != want)
            return std::string("cover relations differ");
        std::string lv;
        for (int l : h.level)
            lv += std::to_string(l);
        return expect_eq("levels", lv, "21100");
    }));
    out.push_back(timed("F_w^P for s2 s1 s3 s2 s3, P = {5}", [] {
        const Word word{2, 1, 3, 2, 3};
        auto m = fwp_mask(5, word, {5}, Perm::from_word(5, {2, 1}));
        if (!m || bits_str(m->bits) != "11101")
            return std::string("mask for x = s2 s1 is not 11101");
        std::vector<Perm> values;
        for (const Bits& b : fwp_ideal(5, word, {5}).masks)
            values.push_back(mask_value(5, word, b));
        std::vector<Perm> want{Perm::from_word(5, {2, 1, 3}), Perm::from_word(5, {2, 3, 2})};
        std::sort(want.begin(), want.end());
        return bruhat_maximal(values) == want ? "" : std::string("maximal elements differ");
    }));
    out.push_back(timed("Bott-Samelson table for s1 s2 s1", [] {
        const Word word{1, 2, 1};
        // bits, encoding, value word, defects, fixed point
        struct Row {
            const char* bits;
            const char* e;
            Word value;
            int d;
            std::vector<IndexSet> v;
        };
        const std::vector<Row> rows{
            {"000", "---", {}, 0, {{1}, {1, 2}, {1}}},       {"001", "--+", {1}, 0, {{1}, {1, 2}, {2}}},
            {"010", "-+-", {2}, 0, {{1}, {1, 3}, {1}}},      {"100", "+-+", {1}, 1, {{2}, {1, 2}, {2}}},
            {"101", "+--", {}, 1, {{2}, {1, 2}, {1}}},       {"110", "++-", {1, 2}, 0, {{2}, {2, 3}, {2}}},
            {"011", "-++", {2, 1}, 0, {{1}, {1, 3}, {3}}},   {"111", "+++", {1, 2, 1}, 0, {{2}, {2, 3}, {3}}},
        };
        for (const Row& r : rows) {
            Mask m = make_mask(3, word, r.bits);
            DefectProfile d = defect_profile(m);
            if (encode_pm(m) != r.e || d.value != Perm::from_word(3, r.value) || d.d != r.d ||
                fixed_point(m).v != r.v)
                return std::string("row ") + r.bits + " differs";
        }
        return std::string();
    }));
    const Perm fig1 = Perm::from_word(8, {1, 5, 7, 2, 4, 6, 3, 5, 4, 1, 2, 3, 1, 2, 1, 7, 6, 5, 7, 6, 7});
    out.push_back(timed("ridgeline and labelings of the running example", [&] {
        std::string err = expect_eq("ridgeline", ridgeline(fig1).parens, "(())()");
        if (!err.empty())
            return err;
        std::string got;
        for (const auto& t : enumerate_labelings(ls_tree(fig1))) {
            for (int l : t.labels)
                got += std::to_string(l);
            got += ";";
        }
        return expect_eq("labelings", got, "0000;0001;0010;0011;0110;0111;");
    }));
    out.push_back(timed("B' expansion of the running example", [&] {
        std::string got;
        for (const auto& t : cog_bprime_expansion(fig1))
            got += std::to_string(t.v_exponent) + ";";
        return expect_eq("v exponents", got, "0;-1;-3;-3;-1;-1;");
    }));
    out.push_back(timed("tau tables for 4231", [] {
        PeakOrdering o = make_ordering(parse_perm("4231"), {1, 3});
        struct Row {
            Partition a, b;
            const char* xt;
            const char* x;
            int dim;
        };
        const std::vector<Row> rows{
            {{}, {}, "1234", "1234", 0},   {{1}, {}, "1234", "1234", 1},  {{}, {1}, "1234", "1324", 1},
            {{1}, {1}, "1234", "2314", 2}, {{}, {2}, "1234", "1423", 2},  {{1}, {2}, "1234", "2413", 3},
            {{}, {}, "2134", "2134", 1},   {{1}, {}, "2134", "2134", 2},  {{}, {1}, "2134", "3124", 2},
            {{1}, {1}, "2134", "3214", 3}, {{}, {2}, "2134", "4123", 3},  {{1}, {2}, "2134", "4213", 4},
        };
        for (const Row& r : rows) {
            TauDatum t{{r.a, r.b}, parse_perm(r.xt)};
            ZelFixedPoint fp = tau_fixed_point(o, t);
            if (fp.x.str() != r.x || tau_dimension(t) != r.dim)
                return partition_str(r.a) + partition_str(r.b) + ";" + r.xt + " gives " + fp.x.str() + " dim " +
                       std::to_string(tau_dimension(t));
        }
        ZelFixedPoint fp = tau_fixed_point(o, {{{1}, {2}}, Perm(4)});
        std::string err = expect_eq("p_tau", sets_str(fp.point.W) + sets_str(fp.point.F), "{2}{2}{2,4}{1,2,4}");
        if (!err.empty())
            return err;
        if (count_tau(o) != 24 || enumerate_tau(o).size() != 24)
            return std::string("tau count is not 24");
        return expect_eq("P_{1234,4231}", zelevinsky_kl(Perm(4), parse_perm("4231"), o).str(), "1+q");
    }));
    out.push_back(timed("choose-k instance", [] {
        std::vector<int> A;
        for (int i = 5; i <= 17; ++i)
            A.push_back(i);
        int k = choose_exit({7, 5, 6, 8, 9, 10}, A, {5, 8, 12, 14, 16});
        return expect_eq("k", std::to_string(k), "6");
    }));
    return out;
}

CheckResult check_oracle_concordance(int n_max)
{
    return timed("oracle concordance n<=" + std::to_string(n_max), [&] {
        return each<Perm>(cog_up_to(n_max), [](const Perm& w) -> std::string {
            std::vector<PeakOrdering> neat;
            for (PeakOrdering& o : enumerate_orderings(w))
                if (is_neat(o))
                    neat.push_back(o);
            if (neat.empty())
                return "no neat ordering for " + w.str();
            for (const Perm& x : bruhat_interval_below(w)) {
                LPoly kl = kl_polynomial(x, w);
                if (ls_kl(x, w) != kl)
                    return "ls_kl differs at " + x.str() + "," + w.str();
                for (const PeakOrdering& o : neat)
                    if (zelevinsky_kl(x, w, o) != kl)
                        return "zelevinsky_kl differs at " + x.str() + "," + w.str();
            }
            return "";
        });
    });
}

CheckResult check_cog_bprime(int n_max)
{
    return timed("C' = B' expansion n<=" + std::to_string(n_max), [&] {
        return each<Perm>(cog_up_to(n_max), [](const Perm& w) -> std::string {
            return bprime_sum(w.n(), cog_bprime_expansion(w)) == cprime_element(w) ? "" : w.str();
        });
    });
}

CheckResult check_construction1(int n_max, int hecke_n_max, bool mutate)
{
    std::string name = "construction 1 deodhar n<=" + std::to_string(n_max);
    if (mutate)
        name += " (mutated)";
    return timed(name, [&] {
        return each<Perm>(cog_up_to(n_max), [&](const Perm& w) -> std::string {
            Construction1 c = construction1_set(w);
            MaskSet e = c.set;
            if (mutate) {
                // Flip the first bit of the last mask. The identity has nothing to flip.
                if (e.word.empty())
                    return "";
                e.masks.back()[0] ^= 1;
                DeodharResult r = deodhar_check(e, w.n() <= hecke_n_max);
                return r.ok() ? "mutation of " + w.str() + " not detected" : "";
            }
            DeodharResult r = deodhar_check(e, w.n() <= hecke_n_max);
            return r.ok() ? "" : w.str() + ": " + to_string(r.status) + " " + r.detail;
        });
    });
}

CheckResult check_construction2(int n_max)
{
    return timed("construction 2 n<=" + std::to_string(n_max), [&] {
        struct Item {
            Perm w;
            std::vector<int> cols;
            DiagonalDirection dir;
        };
        std::vector<Item> items;
        for (const Perm& w : cog_up_to(n_max))
            for (const PeakOrdering& o : enumerate_orderings(w))
                if (is_neat(o))
                    for (auto dir : {DiagonalDirection::ne_sw, DiagonalDirection::nw_se})
                        items.push_back({w, o.columns(), dir});
        return each<Item>(items, [](const Item& it) -> std::string {
            PeakOrdering o = make_ordering(it.w, it.cols);
            MaskSet e = construction2_set(o, it.dir);
            std::string tag = it.w.str() + " " + to_string(it.dir);
            std::set<Bits> distinct(e.masks.begin(), e.masks.end());
            if (distinct.size() != e.masks.size())
                return tag + ": repeated masks";
            GeometricReport g = is_geometric(e, o);
            if (!g.geometric)
                return tag + ": not geometric";
            DeodharResult r = deodhar_check(e);
            return r.ok() ? "" : tag + ": " + to_string(r.status) + " " + r.detail;
        });
    });
}

CheckResult check_plus_count(int n_exhaustive, int n_random, long samples, std::uint64_t seed)
{
    return timed("plus count = length + defects", [&] {
        std::string err = each<Perm>(all_perms(n_exhaustive), [&](const Perm& w) -> std::string {
            for (const Word& word : reduced_words(w))
                for (const Bits& b : all_masks(n_exhaustive, word).masks) {
                    Mask m{n_exhaustive, word, b};
                    DefectProfile d = defect_profile(m);
                    if (cell_dimension(m) != d.value.length() + d.d)
                        return word_str(word) + " / " + bits_str(b);
                }
            return "";
        });
        if (!err.empty())
            return err;
        std::mt19937_64 rng(seed);
        const auto& perms = all_perms(n_random);
        for (long s = 0; s < samples; ++s) {
            const Perm& w = perms[rng() % perms.size()];
            // Random reduced word: peel off random right descents.
            Word word;
            for (Perm u = w; u.length() > 0;) {
                std::vector<int> ds = descents(u, Side::right);
                int i = ds[rng() % ds.size()];
                word.insert(word.begin(), i);
                u = u.times_s(i);
            }
            Bits b(word.size());
            for (int& x : b)
                x = static_cast<int>(rng() & 1);
            Mask m{n_random, word, b};
            DefectProfile d = defect_profile(m);
            if (cell_dimension(m) != d.value.length() + d.d)
                return "random sample " + word_str(word) + " / " + bits_str(b);
        }
        return std::string();
    });
}

CheckResult check_fwp(int n, int max_len, int per_word, std::uint64_t seed)
{
    return timed("fwp masks and ideals, S_" + std::to_string(n) + " length<=" + std::to_string(max_len), [&] {
        std::vector<Word> words;
        for (const Perm& w : all_perms(n))
            if (w.length() <= max_len)
                for (const Word& word : reduced_words(w))
                    words.push_back(word);
        std::vector<std::uint64_t> seeds(words.size());
        std::mt19937_64 rng(seed);
        for (auto& s : seeds)
            s = rng();
        std::vector<std::size_t> idx(words.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        return each<std::size_t>(idx, [&](const std::size_t& i) -> std::string {
            const Word& word = words[i];
            std::map<DefectSet, std::vector<Bits>> by_defects;
            for (const Bits& b : all_masks(n, word).masks)
                by_defects[defect_profile(n, word, b).defects].push_back(b);
            std::vector<DefectSet> occurring;
            for (const auto& [P, _] : by_defects)
                occurring.push_back(P);
            std::mt19937_64 r(seeds[i]);
            for (int k = 0; k < per_word; ++k) {
                DefectSet P;
                if (k % 2 == 0) {
                    P = occurring[r() % occurring.size()];
                } else {
                    for (std::size_t j = 1; j <= word.size(); ++j)
                        if (r() & 1)
                            P.push_back(static_cast<int>(j));
                }
                auto it = by_defects.find(P);
                std::vector<Bits> brute = it == by_defects.end() ? std::vector<Bits>{} : it->second;
                std::sort(brute.begin(), brute.end());
                std::vector<Bits> got = fwp_ideal(n, word, P).masks;
                std::sort(got.begin(), got.end());
                if (got != brute)
                    return "fwp_ideal differs on " + word_str(word);
                std::set<Perm> values;
                for (const Bits& b : brute) {
                    Perm x = mask_value(n, word, b);
                    values.insert(x);
                    auto m = fwp_mask(n, word, P, x);
                    if (!m || m->bits != b)
                        return "fwp_mask differs on " + word_str(word) + " / " + bits_str(b);
                }
                for (const Perm& x : values)
                    for (int a = 1; a <= n; ++a)
                        for (int c = a + 1; c <= n; ++c) {
                            // x * (a c) one length lower must stay in the set.
                            std::vector<int> line = x.oneline();
                            std::swap(line[a - 1], line[c - 1]);
                            Perm y = Perm::from_oneline(line);
                            if (y.length() == x.length() - 1 && !values.count(y))
                                return "not a lower ideal on " + word_str(word);
                        }
                Perm w = Perm::from_word(n, word);
                for (const Perm& x : bruhat_interval_below(w))
                    if (!values.count(x) && fwp_mask(n, word, P, x))
                        return "fwp_mask found a mask outside the brute-force set on " + word_str(word);
            }
            return "";
        });
    });
}

CheckResult check_injectivity(int n_max)
{
    return timed("t -> P(t) injective n<=" + std::to_string(n_max), [&] {
        return each<Perm>(cog_up_to(n_max), [](const Perm& w) -> std::string {
            std::set<DefectSet> seen;
            for (const auto& t : enumerate_labelings(ls_tree(w))) {
                SigmaT s = build_sigma_t(w, t);
                if (!seen.insert(s.P).second)
                    return "repeated P(t) for " + w.str();
                auto back = recover_labeling(w, s.P);
                if (!back || back->labels != t.labels)
                    return "recover_labeling fails for " + w.str();
            }
            return "";
        });
    });
}

CheckResult check_smallness(int n_max)
{
    return timed("smallness n<=" + std::to_string(n_max), [&] {
        return each<Perm>(cog_up_to(n_max), [](const Perm& w) -> std::string {
            for (const PeakOrdering& o : enumerate_orderings(w)) {
                if (!is_neat(o))
                    continue;
                for (const Perm& x : bruhat_interval_below(w)) {
                    if (x == w)
                        continue;
                    LPoly f = tau_polynomial(x, o);
                    if (f.is_zero())
                        return "empty fiber over " + x.str() + " for " + w.str();
                    if (2 * f.high() > w.length() - x.length() - 1)
                        return "fiber too large over " + x.str() + " for " + w.str();
                }
            }
            return "";
        });
    });
}

std::vector<CompareRow> compare_constructions(int n_max, Construction1Variant variant)
{
    struct Item {
        Perm w;
        std::vector<int> cols;
    };
    std::vector<Item> items;
    for (const Perm& w : cog_up_to(n_max))
        for (const PeakOrdering& o : enumerate_orderings(w))
            if (is_neat(o))
                items.push_back({w, o.columns()});
    std::map<Perm, MaskSet> sets;
    for (const Item& it : items)
        if (!sets.count(it.w))
            sets[it.w] = construction1_set(it.w, variant).set;
    return parallel_map<CompareRow>(items.size(), [&](std::size_t i) {
        PeakOrdering o = make_ordering(items[i].w, items[i].cols);
        return CompareRow{items[i].w, items[i].cols, is_geometric(sets.at(items[i].w), o)};
    });
}

std::string compare_report(const std::vector<CompareRow>& rows)
{
    std::ostringstream s;
    std::size_t geometric = 0;
    for (const CompareRow& r : rows) {
        geometric += r.report.geometric;
        s << r.w.str() << " [";
        for (std::size_t i = 0; i < r.ordering.size(); ++i)
            s << (i ? "," : "") << r.ordering[i];
        s << "] " << (r.report.geometric ? "geometric" : "not-geometric") << " masks=" << r.report.masks
          << " taus=" << r.report.taus << " collisions=" << r.report.collisions.size()
          << " unmatched=" << r.report.unmatched.size()
          << " dimension_mismatches=" << r.report.dimension_mismatches.size() << " missed=" << r.report.missed
          << "\n";
    }
    s << "total " << rows.size() << " geometric " << geometric << " not-geometric " << rows.size() - geometric << "\n";
    return s.str();
}

}  // namespace klmasks
