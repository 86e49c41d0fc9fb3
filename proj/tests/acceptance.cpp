// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "klmasks/verify.hpp"

using namespace klmasks;

namespace {

bool report(int id, const CheckResult& c)
{
    std::cout << (c.pass ? "PASS" : "FAIL") << " [" << id << "] " << c.name << " (" << std::fixed
              << std::setprecision(2) << c.seconds << " s)";
    if (!c.detail.empty())
        std::cout << ": " << c.detail;
    std::cout << std::endl;
    return c.pass;
}

CheckResult golden_examples()
{
    CheckResult out{"golden examples, < 5 s", true, "", 0};
    for (const CheckResult& c : golden_example_checks()) {
        out.seconds += c.seconds;
        if (!c.pass) {
            out.pass = false;
            out.detail += c.name + ": " + c.detail + "; ";
        }
    }
    if (out.seconds >= 5.0) {
        out.pass = false;
        out.detail += "too slow";
    }
    return out;
}

CheckResult compare_deterministic()
{
    CheckResult out{"compare-constructions n<=6, deterministic", false, "", 0};
    auto start = std::chrono::steady_clock::now();
    std::string a = compare_report(compare_constructions(6));
    std::string b = compare_report(compare_constructions(6));
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.pass = !a.empty() && a == b;
    out.detail = a.substr(a.rfind('\n', a.size() - 2) + 1);
    if (!out.detail.empty() && out.detail.back() == '\n')
        out.detail.pop_back();
    if (a != b)
        out.detail = "reports differ between runs";
    return out;
}

}  // namespace

int main()
{
    bool ok = true;
    ok &= report(1, golden_examples());
    ok &= report(2, check_oracle_concordance(6));
    ok &= report(3, check_cog_bprime(6));
    ok &= report(4, check_construction1(6, 6));
    ok &= report(5, check_construction2(5));
    ok &= report(6, check_plus_count(5, 6, 100000, 20240601));
    ok &= report(7, check_fwp(6, 8, 100, 7));
    ok &= report(8, check_injectivity(6));
    ok &= report(9, check_smallness(5));
    ok &= report(10, compare_deterministic());
    return ok ? 0 : 1;
}
