// Acceptance gate: twelve criteria covering the oracle cross-check, the
// identity surface, matrix/vector fidelity, 2-adic valuations, the
// generating-function tower, every congruence family at its pinned desk
// range, and the reporting discipline (each universally quantified claim is
// labeled with the finite range actually checked).  All comparisons are
// exact; tolerance is zero throughout.  Prints one line per criterion and
// exits nonzero if any fails.

#include "qv0/congruence.hpp"
#include "qv0/dissect.hpp"
#include "qv0/opmatrix.hpp"
#include "qv0/report.hpp"
#include "qv0/suites.hpp"
#include "qv0/theta.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace {

using clock_type = std::chrono::steady_clock;

int failures = 0;
int criterion = 0;

void line(const std::string& what, bool pass, double seconds, const std::string& detail) {
    ++criterion;
    if (!pass) ++failures;
    std::printf("[%2d/12] %s  %-34s %7.2fs  %s\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
                seconds, detail.c_str());
    std::fflush(stdout);
}

// count checks in a report whose name starts with any of the prefixes
std::pair<int, int> tally(const qv0::Report& r, const std::vector<std::string>& prefixes) {
    int pass = 0, total = 0;
    for (const auto& c : r.checks) {
        bool hit = prefixes.empty();
        for (const auto& p : prefixes)
            if (c.name.rfind(p, 0) == 0) hit = true;
        if (!hit) continue;
        ++total;
        if (c.pass) ++pass;
    }
    return {pass, total};
}

std::string frac(std::pair<int, int> t) {
    return std::to_string(t.first) + "/" + std::to_string(t.second) + " checks";
}

double run_timed(const std::function<void()>& fn) {
    auto t0 = clock_type::now();
    fn();
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

}  // namespace

int main() {
    qv0::congruence::V0ModCache cache(std::uint64_t(2) << 30);

    // 1. oracle equivalence on 0..2000 over exact integers
    {
        bool ok = true;
        double secs = run_timed([&] {
            qv0::ZRing z;
            auto fast = qv0::theta::v0(z, 2001);
            auto naive = qv0::theta::v0_oracle(2001);
            for (std::size_t n = 0; n <= 2000; ++n)
                ok = ok && fast.coeffs()[n] == naive[n];
        });
        line("oracle equivalence n<=2000", ok && secs < 10.0,
             secs, ok ? "exact agreement" : "MISMATCH");
    }

    // 2. preliminary identity suite at order 500
    {
        qv0::Report r;
        double secs = run_timed([&] { r = qv0::suites::preliminary_identities(500); });
        line("theta identity suite @500", r.all_pass(), secs, frac(tally(r, {})));
    }

    // 3. Huffing-image suite at order 300
    {
        qv0::Report r;
        double secs = run_timed([&] { r = qv0::suites::huffing_images(300); });
        line("huffing-image suite @300", r.all_pass(), secs, frac(tally(r, {})));
    }

    qv0::Report matfid = qv0::suites::matrix_fidelity();

    // 4. matrix fidelity: displayed block and seed rows
    {
        auto t = tally(matfid, {"matrix."});
        line("matrix fidelity", t.first == t.second && t.second > 0, 0.0, frac(t));
    }

    // 5. vector fidelity: x2, x3 entry for entry with support 5
    {
        auto t = tally(matfid, {"vector."});
        line("vector fidelity x2 x3", t.first == t.second && t.second > 0, 0.0, frac(t));
    }

    // 6. valuation suite within 5 seconds
    {
        qv0::Report r;
        double secs = run_timed([&] { r = qv0::suites::valuation_bounds(); });
        line("2-adic valuation bounds", r.all_pass() && secs < 5.0, secs, frac(tally(r, {})));
    }

    // 7 (+ the modular identities of 9): generating-function suite with the
    // tower at order 100, closed forms at 300, mod-27 families at 200
    qv0::Report genfun;
    {
        double secs = run_timed(
            [&] { genfun = qv0::suites::genfun_identities(cache, 300, 100, 200); });
        auto t = tally(genfun, {"tower."});
        line("tower identities alpha<=2 @100", t.first == t.second && t.second == 8 && secs < 60.0,
             secs, frac(t));
    }

    // 8. power-of-2 congruence families, total under 2 minutes
    {
        std::vector<std::string> suites = {"T2", "C1", "T3", "T4", "C2", "BSS", "Mao"};
        int pass = 0, total = 0;
        double secs = run_timed([&] {
            for (const auto& s : suites) {
                qv0::Report r = qv0::congruence::run_theorem_suite(s, cache);
                auto t = tally(r, {});
                pass += t.first;
                total += t.second;
            }
        });
        line("power-of-2 congruences", pass == total && secs < 120.0, secs,
             frac({pass, total}) + " over " + std::to_string(suites.size()) + " suites");
    }

    // 9. odd-modulus congruences and the mod-13/25/27 series identities
    {
        int pass = 0, total = 0;
        double secs = run_timed([&] {
            for (const std::string s : {"T6", "T7", "T10", "T8", "T9"}) {
                qv0::Report r = qv0::congruence::run_theorem_suite(s, cache);
                auto t = tally(r, {});
                pass += t.first;
                total += t.second;
            }
        });
        auto m27 = tally(genfun, {"mod27.", "mod13.", "mod25."});
        line("odd-modulus congruences", pass == total && m27.first == m27.second && total > 0,
             secs, frac({pass, total}) + " + " + frac(m27) + " modular identities");
    }

    // 10. closing composite congruence mod 4492800, under 2 minutes
    {
        qv0::Report r;
        double secs = run_timed([&] { r = qv0::congruence::run_theorem_suite("Closing", cache); });
        line("closing composite mod 4492800", r.all_pass() && secs < 120.0, secs,
             frac(tally(r, {})));
    }

    // 11. prime dissections of psi and f(q,q^2) plus triangular families
    {
        qv0::Report r;
        double secs = run_timed([&] { r = qv0::suites::dissections(500, 600, 500); });
        line("prime dissections", r.all_pass(), secs, frac(tally(r, {})));
    }

    // 12. reporting discipline: every congruence claim is labeled with its
    // finite tested range (count suffix) and carries scale/offset/modulus
    {
        bool ok = true;
        int labeled = 0;
        for (const auto& s : qv0::congruence::theorem_suite_names())
            for (const auto& c : qv0::congruence::theorem_suite(s)) {
                std::string suffix = ".n" + std::to_string(c.count);
                ok = ok && c.name.size() > suffix.size() &&
                     c.name.compare(c.name.size() - suffix.size(), suffix.size(), suffix) == 0 &&
                     c.name.find(".a" + std::to_string(c.scale)) != std::string::npos &&
                     c.name.find(".m" + std::to_string(c.modulus)) != std::string::npos;
                ++labeled;
            }
        line("finite ranges labeled", ok && labeled > 0, 0.0,
             std::to_string(labeled) + " claims carry their tested range");
    }

    if (failures == 0)
        std::printf("acceptance: all 12 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
