// Command-line front end. Output is JSON unless --format says otherwise.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "klmasks/bott_samelson.hpp"
#include "klmasks/construction1.hpp"
#include "klmasks/ls_formula.hpp"
#include "klmasks/render.hpp"
#include "klmasks/verify.hpp"
#include "klmasks/zelevinsky.hpp"

using json = nlohmann::ordered_json;
using namespace klmasks;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kMaxCliRank = 8;

json perm_json(const Perm& p) { return p.oneline(); }

json poly_json(const LPoly& p)
{
    json c = json::object();
    for (auto [e, k] : p.terms())
        c[std::to_string(e)] = k;
    return c;
}

json sets_json(const std::vector<IndexSet>& v) { return v; }

json mask_set_json(const MaskSet& e)
{
    json m = json::array();
    for (const Bits& b : e.masks)
        m.push_back(bits_str(b));
    return {{"n", e.n}, {"word", e.word}, {"masks", m}};
}

MaskSet mask_set_from_json(const json& j)
{
    MaskSet e;
    e.word = j.at("word").get<Word>();
    int top = 1;
    for (int g : e.word)
        top = std::max(top, g + 1);
    e.n = j.contains("n") ? j.at("n").get<int>() : top;
    for (const auto& s : j.at("masks"))
        e.masks.push_back(make_mask(e.n, e.word, s.get<std::string>()).bits);
    return e;
}

Perm perm_arg(const std::string& s)
{
    Perm p = parse_perm(s);
    if (p.n() > kMaxCliRank)
        throw UsageError("rank above " + std::to_string(kMaxCliRank) + " is not supported here");
    return p;
}

int rank_for_word(const Word& w, int n_flag)
{
    int top = 1;
    for (int g : w)
        top = std::max(top, g + 1);
    if (n_flag > 0) {
        if (n_flag < top)
            throw UsageError("--n is smaller than the largest generator + 1");
        return n_flag;
    }
    return top;
}

json tree_json(const LSTree& t, int v, const EdgeLabeling* lab)
{
    json j;
    if (t.is_leaf(v))
        j["capacity"] = t.nodes[v].capacity;
    if (lab && v != 0)
        j["label"] = lab->labels[v];
    j["children"] = json::array();
    for (int c : t.nodes[v].children)
        j["children"].push_back(tree_json(t, c, lab));
    return j;
}

json tau_json(const TauDatum& t) { return {{"partitions", t.parts}, {"x_tau", perm_json(t.x_tau)}}; }

json ordering_json(const PeakOrdering& o, std::size_t index)
{
    json rects = json::array();
    for (const Rectangle& r : o.rect)
        rects.push_back({{"peak_column", o.ch->heap.col(r.peak)},
                         {"height", r.height},
                         {"d", r.d},
                         {"ldim", r.ldim},
                         {"rdim", r.rdim},
                         {"lpred", r.lpred >= 0 ? json(r.lpred + 1) : json(nullptr)},
                         {"rpred", r.rpred >= 0 ? json(r.rpred + 1) : json(nullptr)},
                         {"box", {r.max_parts(), r.max_part()}}});
    return {{"index", index}, {"columns", o.columns()}, {"neat", is_neat(o)}, {"rectangles", rects}};
}

PeakOrdering pick_ordering(const Perm& w, int index)
{
    std::vector<PeakOrdering> all = enumerate_orderings(w);
    if (index < 0) {
        for (PeakOrdering& o : all)
            if (is_neat(o))
                return o;
        throw std::logic_error("no neat ordering");
    }
    if (index >= static_cast<int>(all.size()))
        throw UsageError("--ordering must be below " + std::to_string(all.size()));
    return all[index];
}

Construction1Variant c1_variant(const std::string& s)
{
    if (s == "up-steps")
        return {false};
    if (s == "down-steps")
        return {true};
    throw UsageError("--variant must be up-steps or down-steps");
}

json report_json(const GeometricReport& r)
{
    return {{"geometric", r.geometric},          {"masks", r.masks},
            {"taus", r.taus},                    {"matched", r.matched},
            {"missed", r.missed},                {"collisions", r.collisions},
            {"unmatched", r.unmatched},          {"dimension_mismatches", r.dimension_mismatches}};
}

json check_json(const CheckResult& c)
{
    return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kazhdan-Lusztig masks for cograssmannian permutations"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::string format = "json";
    int threads = 0;
    app.add_option("--format", format, "json, ascii or svg")->check(CLI::IsMember({"json", "ascii", "svg"}));
    app.add_option("--threads", threads, "worker threads (overrides KLMASKS_THREADS)")->check(CLI::PositiveNumber);

    std::string x_s, w_s, perm_s, word_s, mask_s, defects_s, labels_s, set_file, variant = "up-steps",
                                                                        direction = "ne-sw", suite = "paper-examples";
    int n_flag = 0, ordering = -1, n_max = 4;
    bool render_parts = false, inject = false;

    auto* kl = app.add_subcommand("kl", "KL polynomial P_{x,w} (oracle recursion)");
    kl->add_option("--x", x_s)->required();
    kl->add_option("--w", w_s)->required();

    auto* masks = app.add_subcommand("masks", "mask sets");
    masks->require_subcommand(1);
    auto* m_enum = masks->add_subcommand("enumerate", "masks with a given defect set");
    m_enum->add_option("--word", word_s)->required();
    m_enum->add_option("--defects", defects_s, "1-based positions");
    m_enum->add_option("--n", n_flag);
    auto* m_check = masks->add_subcommand("check", "bounded / admissible / KL check of a mask-set file");
    m_check->add_option("--set", set_file)->required()->check(CLI::ExistingFile);
    auto* m_prof = masks->add_subcommand("profile", "defects and value of one mask");
    m_prof->add_option("--word", word_s)->required();
    m_prof->add_option("--mask", mask_s)->required();
    m_prof->add_option("--n", n_flag);

    auto* ls = app.add_subcommand("ls", "labelled-tree formula");
    ls->require_subcommand(1);
    auto* ls_tree_c = ls->add_subcommand("tree", "tree with capacities");
    ls_tree_c->add_option("--perm", perm_s)->required();
    auto* ls_lab = ls->add_subcommand("labelings", "all labelings with x(t)");
    ls_lab->add_option("--perm", perm_s)->required();
    auto* ls_kl_c = ls->add_subcommand("kl", "P_{x,w} by counting labelings");
    ls_kl_c->add_option("--x", x_s)->required();
    ls_kl_c->add_option("--w", w_s)->required();
    auto* ls_exp = ls->add_subcommand("expansion", "C' in the B' basis");
    ls_exp->add_option("--perm", perm_s)->required();

    auto* c1 = app.add_subcommand("construct1", "mask set from labelled trees");
    c1->add_option("--perm", perm_s)->required();
    c1->add_option("--variant", variant, "up-steps or down-steps");
    c1->add_flag("--render", render_parts, "include an ASCII picture of each sigma(t)");

    auto* bs = app.add_subcommand("bs", "Bott-Samelson fixed points");
    bs->require_subcommand(1);
    auto* bs_fp = bs->add_subcommand("fixed-point", "coordinate subspaces of a mask");
    bs_fp->add_option("--word", word_s)->required();
    bs_fp->add_option("--mask", mask_s, "bits, or +/- encoding")->required();
    bs_fp->add_option("--n", n_flag);
    auto* bs_fib = bs->add_subcommand("fiber", "masks over one x");
    bs_fib->add_option("--word", word_s)->required();
    bs_fib->add_option("--x", x_s)->required();
    bs_fib->add_option("--n", n_flag);

    auto* zel = app.add_subcommand("zel", "Zelevinsky orderings and tau data");
    zel->require_subcommand(1);
    std::vector<CLI::App*> zel_cmds;
    for (const char* name : {"orderings", "tau", "kl", "construct2", "geometric"}) {
        auto* c = zel->add_subcommand(name);
        c->add_option("--perm", perm_s)->required();
        c->add_option("--ordering", ordering, "index into the ordering list (default: first neat one)");
        c->add_option("--variant", direction, "ne-sw or nw-se");
        zel_cmds.push_back(c);
    }
    zel_cmds[2]->add_option("--x", x_s)->required();
    zel_cmds[4]->add_option("--set", set_file, "mask-set file (default: construction 1)");

    auto* c2 = app.add_subcommand("construct2", "mask set sigma(tau) over all tau");
    c2->add_option("--perm", perm_s)->required();
    c2->add_option("--ordering", ordering);
    c2->add_option("--variant", direction, "ne-sw or nw-se");

    auto* cmp = app.add_subcommand("compare-constructions", "geometricity of construction 1 sets");
    cmp->add_option("--n-max", n_max)->check(CLI::Range(2, 7));
    cmp->add_option("--variant", variant, "up-steps or down-steps");

    auto* ver = app.add_subcommand("verify", "run checks");
    ver->add_option("--suite", suite, "paper-examples or full")->check(CLI::IsMember({"paper-examples", "full"}));
    ver->add_option("--n-max", n_max, "rank bound for the full suite")->check(CLI::Range(2, 7));
    ver->add_flag("--inject-mutation", inject, "flip one bit of each construction 1 set first");

    auto* ren = app.add_subcommand("render", "pictures");
    ren->require_subcommand(1);
    auto* r_heap = ren->add_subcommand("heap");
    r_heap->add_option("--word", word_s)->required();
    r_heap->add_option("--n", n_flag);
    auto* r_mask = ren->add_subcommand("mask");
    r_mask->add_option("--word", word_s)->required();
    r_mask->add_option("--mask", mask_s)->required();
    r_mask->add_option("--n", n_flag);
    auto* r_seg = ren->add_subcommand("segments", "construction 1 regions for one labeling");
    r_seg->add_option("--perm", perm_s)->required();
    r_seg->add_option("--labels", labels_s, "edge labels in node order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (threads > 0)
        setenv("KLMASKS_THREADS", std::to_string(threads).c_str(), 1);

    auto emit = [&](const json& j, const std::string& ascii = "", const std::string& svg = "") {
        if (format == "ascii" && !ascii.empty())
            std::cout << ascii;
        else if (format == "svg" && !svg.empty())
            std::cout << svg;
        else
            std::cout << j.dump(2) << "\n";
    };
    auto read_mask = [&](int n, const Word& word) {
        bool pm = mask_s.find_first_of("+-") != std::string::npos;
        return pm ? decode_pm(n, word, mask_s) : make_mask(n, word, mask_s);
    };

    try {
        if (*kl) {
            Perm x = perm_arg(x_s), w = perm_arg(w_s);
            LPoly p = kl_polynomial(x, w);
            emit({{"x", perm_json(x)}, {"w", perm_json(w)}, {"poly", p.str()}, {"coefficients", poly_json(p)}});
        } else if (*m_enum) {
            Word word = parse_word(word_s);
            int n = rank_for_word(word, n_flag);
            MaskSet e = fwp_ideal(n, word, parse_word(defects_s));
            json j = mask_set_json(e);
            json vals = json::array();
            for (const Bits& b : e.masks)
                vals.push_back(perm_json(mask_value(n, word, b)));
            j["values"] = vals;
            emit(j);
        } else if (*m_check) {
            std::ifstream in(set_file);
            MaskSet e = mask_set_from_json(json::parse(in));
            DeodharResult r = deodhar_check(e);
            emit({{"status", to_string(r.status)}, {"ok", r.ok()}, {"detail", r.detail}});
            return r.ok() ? 0 : 1;
        } else if (*m_prof) {
            Word word = parse_word(word_s);
            Mask m = read_mask(rank_for_word(word, n_flag), word);
            DefectProfile d = defect_profile(m);
            std::string kinds;
            for (EntryKind k : d.kind)
                kinds += entry_char(k);
            emit({{"bits", bits_str(m.bits)},
                  {"defects", d.defects},
                  {"d", d.d},
                  {"value", perm_json(d.value)},
                  {"kinds", kinds},
                  {"encoding", encode_pm(m)}},
                 render_mask_ascii(m), render_mask_svg(m));
        } else if (*ls_tree_c) {
            Perm w = perm_arg(perm_s);
            emit({{"perm", perm_json(w)}, {"ridgeline", ridgeline(w).parens}, {"tree", tree_json(ls_tree(w), 0, nullptr)}});
        } else if (*ls_lab) {
            Perm w = perm_arg(perm_s);
            LSTree tree = ls_tree(w);
            json arr = json::array();
            for (const auto& t : enumerate_labelings(tree))
                arr.push_back({{"labels", t.labels}, {"size", t.size()}, {"x", perm_json(gamma_and_x(w, t).x)}});
            emit({{"perm", perm_json(w)}, {"labelings", arr}});
        } else if (*ls_kl_c) {
            Perm x = perm_arg(x_s), w = perm_arg(w_s);
            LPoly p = ls_kl(x, w);
            emit({{"x", perm_json(x)}, {"w", perm_json(w)}, {"poly", p.str()}, {"coefficients", poly_json(p)}});
        } else if (*ls_exp) {
            Perm w = perm_arg(perm_s);
            json arr = json::array();
            for (const auto& t : cog_bprime_expansion(w))
                arr.push_back({{"labels", t.t.labels}, {"x", perm_json(t.x)}, {"v_exponent", t.v_exponent}});
            emit({{"perm", perm_json(w)}, {"terms", arr}});
        } else if (*c1) {
            Perm w = perm_arg(perm_s);
            Construction1 c = construction1_set(w, c1_variant(variant));
            json parts = json::array();
            std::string ascii;
            for (const SigmaT& s : c.parts) {
                json p{{"labels", s.t.labels}, {"x", perm_json(s.x)}, {"P", s.P}, {"sigma", bits_str(s.sigma.bits)}};
                if (render_parts) {
                    std::string pic = render_mask_ascii(s.sigma);
                    p["ascii"] = pic;
                    ascii += "labels " + word_str(s.t.labels) + "\n" + pic + "\n";
                }
                parts.push_back(p);
            }
            json j = mask_set_json(c.set);
            j["variant"] = variant;
            j["parts"] = parts;
            emit(j, ascii);
        } else if (*bs_fp) {
            Word word = parse_word(word_s);
            Mask m = read_mask(rank_for_word(word, n_flag), word);
            emit({{"encoding", encode_pm(m)},
                  {"fixed_point", sets_json(fixed_point(m).v)},
                  {"flag", sets_json(pi_image(m))},
                  {"dimension", cell_dimension(m)}});
        } else if (*bs_fib) {
            Word word = parse_word(word_s);
            int n = rank_for_word(word, n_flag);
            FiberProfile f = fiber_profile(n, word, parse_perm(x_s));
            emit({{"poly", f.poly.str()}, {"coefficients", poly_json(f.poly)}, {"max_defect", f.max_defect},
                  {"small", f.small}});
        } else if (*zel) {
            Perm w = perm_arg(perm_s);
            DiagonalDirection dir = parse_direction(direction);
            if (*zel_cmds[0]) {
                json arr = json::array();
                std::size_t i = 0;
                for (const PeakOrdering& o : enumerate_orderings(w))
                    arr.push_back(ordering_json(o, i++));
                emit({{"perm", perm_json(w)}, {"z", cog_heap(w).d.z}, {"orderings", arr}});
                return 0;
            }
            PeakOrdering o = pick_ordering(w, ordering);
            if (*zel_cmds[1]) {
                json arr = json::array();
                for (const TauDatum& t : enumerate_tau(o)) {
                    json j = tau_json(t);
                    j["x"] = perm_json(tau_fixed_point(o, t).x);
                    j["dimension"] = tau_dimension(t);
                    arr.push_back(j);
                }
                emit({{"perm", perm_json(w)}, {"ordering", o.columns()}, {"count", count_tau(o)}, {"tau", arr}});
            } else if (*zel_cmds[2]) {
                Perm x = perm_arg(x_s);
                LPoly p = zelevinsky_kl(x, w, o);
                emit({{"x", perm_json(x)}, {"w", perm_json(w)}, {"ordering", o.columns()}, {"poly", p.str()},
                      {"coefficients", poly_json(p)}});
            } else if (*zel_cmds[3]) {
                if (!is_neat(o))
                    std::cerr << "warning: ordering is not neat\n";
                json j = mask_set_json(construction2_set(o, dir));
                j["ordering"] = o.columns();
                j["variant"] = to_string(dir);
                emit(j);
            } else {
                MaskSet e;
                if (set_file.empty()) {
                    e = construction1_set(w).set;
                } else {
                    std::ifstream in(set_file);
                    if (!in)
                        throw UsageError("cannot read " + set_file);
                    e = mask_set_from_json(json::parse(in));
                }
                GeometricReport r = is_geometric(e, o);
                json j = report_json(r);
                j["ordering"] = o.columns();
                emit(j);
            }
        } else if (*c2) {
            Perm w = perm_arg(perm_s);
            PeakOrdering o = pick_ordering(w, ordering);
            if (!is_neat(o))
                std::cerr << "warning: ordering is not neat\n";
            json j = mask_set_json(construction2_set(o, parse_direction(direction)));
            j["ordering"] = o.columns();
            j["variant"] = direction;
            emit(j);
        } else if (*cmp) {
            auto rows = compare_constructions(n_max, c1_variant(variant));
            json arr = json::array();
            for (const CompareRow& r : rows) {
                json j = report_json(r.report);
                j["perm"] = perm_json(r.w);
                j["ordering"] = r.ordering;
                arr.push_back(j);
            }
            emit({{"n_max", n_max}, {"variant", variant}, {"rows", arr}}, compare_report(rows));
        } else if (*ver) {
            std::vector<CheckResult> checks;
            if (suite == "paper-examples") {
                checks = golden_example_checks();
            } else if (inject) {
                checks.push_back(check_construction1(n_max, std::min(n_max, 5), true));
            } else {
                checks.push_back(check_oracle_concordance(n_max));
                checks.push_back(check_cog_bprime(n_max));
                checks.push_back(check_construction1(n_max, n_max));
                checks.push_back(check_construction2(std::min(n_max, 5)));
                checks.push_back(check_plus_count(std::min(n_max, 5), n_max, 10000, 1));
                checks.push_back(check_fwp(std::min(n_max, 5), 8, 20, 2));
                checks.push_back(check_injectivity(n_max));
                checks.push_back(check_smallness(std::min(n_max, 5)));
            }
            json arr = json::array();
            std::string ascii;
            bool ok = true;
            for (const CheckResult& c : checks) {
                arr.push_back(check_json(c));
                ok = ok && c.pass;
                ascii += std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : ": " + c.detail) +
                         "\n";
            }
            emit({{"suite", suite}, {"ok", ok}, {"checks", arr}}, ascii);
            return ok ? 0 : 1;
        } else if (*r_heap) {
            Word word = parse_word(word_s);
            Heap h = build_heap(rank_for_word(word, n_flag), word);
            std::string a = render_heap_ascii(h), s = render_heap_svg(h);
            emit({{"word", word}, {"levels", h.level}, {"covers", h.covers}, {"ascii", a}}, a, s);
        } else if (*r_mask) {
            Word word = parse_word(word_s);
            Mask m = read_mask(rank_for_word(word, n_flag), word);
            std::string a = render_mask_ascii(m), s = render_mask_svg(m);
            emit({{"word", word}, {"bits", bits_str(m.bits)}, {"ascii", a}}, a, s);
        } else if (*r_seg) {
            Perm w = perm_arg(perm_s);
            EdgeLabeling t{parse_word(labels_s)};
            SigmaT s = build_sigma_t(w, t);
            std::vector<char> marks(s.sigma.word.size(), '.');
            DefectProfile d = defect_profile(s.sigma);
            for (std::size_t j = 0; j < marks.size(); ++j)
                marks[j] = entry_char(d.kind[j]);
            std::vector<char> regions(marks.size(), '-');
            for (const SegmentRegions& seg : s.segments) {
                for (int e : seg.region1)
                    regions[e] = '1';
                for (int e : seg.region2)
                    regions[e] = '2';
                for (int e : seg.region3)
                    regions[e] = '3';
            }
            Heap h = build_heap(w.n(), s.sigma.word);
            std::string a = render_ascii(h, regions) + "\n" + render_ascii(h, marks);
            emit({{"word", s.sigma.word}, {"sigma", bits_str(s.sigma.bits)}, {"regions", std::string(regions.begin(), regions.end())},
                  {"ascii", a}},
                 a, render_mask_svg(s.sigma));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
