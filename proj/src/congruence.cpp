#include "qv0/congruence.hpp"

#include "qv0/theta.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

namespace qv0::congruence {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Zero: return "zero";
        case Rule::SquareIndicator: return "square";
        case Rule::SignedSquareIndicator: return "signed_square";
        case Rule::ZeroUnlessTriangular: return "zero_unless_triangular";
        case Rule::ZeroUnlessPentagonalIndex: return "zero_unless_pentagonal_index";
    }
    return "?";
}

const std::vector<std::uint64_t>& V0ModCache::get(std::uint64_t modulus, std::size_t min_order) {
    if (min_order == 0) min_order = 1;
    std::uint64_t bytes = std::uint64_t(min_order) * sizeof(std::uint64_t) * 2;  // term + sum
    if (bytes > cap_)
        throw ResourceLimitError("order " + std::to_string(min_order) + " mod " +
                                 std::to_string(modulus) + " needs about " +
                                 std::to_string(bytes) + " bytes, over the cap of " +
                                 std::to_string(cap_));
    auto it = table_.find(modulus);
    if (it != table_.end() && it->second.size() >= min_order) return it->second;
    ModRing r(modulus);
    table_[modulus] = theta::v0(r, min_order).coeffs();
    return table_[modulus];
}

namespace {

// exemption/indicator sets by direct enumeration
std::set<std::uint64_t> squares_below(std::uint64_t limit) {
    std::set<std::uint64_t> s;
    for (std::uint64_t k = 0; k * k < limit; ++k) s.insert(k * k);
    return s;
}

std::set<std::uint64_t> triangulars_below(std::uint64_t limit) {
    std::set<std::uint64_t> s;
    for (std::uint64_t k = 0; k * (k + 1) / 2 < limit; ++k) s.insert(k * (k + 1) / 2);
    return s;
}

std::set<std::uint64_t> pentagonal_indices_below(std::uint64_t limit) {
    std::set<std::uint64_t> s;
    for (long long k = 0;; ++k) {
        std::uint64_t g = static_cast<std::uint64_t>(k * (3 * k + 1) / 2);
        std::uint64_t h = static_cast<std::uint64_t>(k * (3 * k - 1) / 2);  // index -k
        if (h >= limit && g >= limit && k > 0) break;
        if (g < limit) s.insert(g);
        if (h < limit) s.insert(h);
    }
    return s;
}

}  // namespace

CheckResult check_claim(const CongruenceClaim& claim, V0ModCache& cache) {
    CheckResult out;
    out.name = claim.name;
    out.modulus = static_cast<std::int64_t>(claim.modulus);
    std::size_t order =
        static_cast<std::size_t>(claim.scale * (claim.count - 1) + claim.offset + 1);
    out.order = static_cast<std::int64_t>(order);

    const auto& v = cache.get(claim.modulus, order);

    std::set<std::uint64_t> squares, exempt;
    std::vector<int> square_parity;  // parity of k for n = k^2, indexed by k
    switch (claim.rule) {
        case Rule::Zero:
            break;
        case Rule::SquareIndicator:
        case Rule::SignedSquareIndicator:
            squares = squares_below(claim.count);
            break;
        case Rule::ZeroUnlessTriangular:
            exempt = triangulars_below(claim.count);
            break;
        case Rule::ZeroUnlessPentagonalIndex:
            exempt = pentagonal_indices_below(claim.count);
            break;
    }

    for (std::uint64_t n = 0; n < claim.count; ++n) {
        std::uint64_t actual = v[claim.scale * n + claim.offset];
        std::optional<std::uint64_t> expected;
        switch (claim.rule) {
            case Rule::Zero:
                expected = 0;
                break;
            case Rule::SquareIndicator:
                expected = squares.count(n) ? 1 % claim.modulus : 0;
                break;
            case Rule::SignedSquareIndicator:
                if (!squares.count(n)) {
                    expected = 0;
                } else {
                    std::uint64_t k = static_cast<std::uint64_t>(
                        isqrt(BigInt(n)).convert_to<std::uint64_t>());
                    expected = (k % 2 == 0) ? 1 % claim.modulus : claim.modulus - 1;
                }
                break;
            case Rule::ZeroUnlessTriangular:
            case Rule::ZeroUnlessPentagonalIndex:
                if (!exempt.count(n)) expected = 0;
                break;
        }
        if (expected && actual != *expected) {
            out.pass = false;
            out.first_failure = FirstFailure{static_cast<std::int64_t>(n),
                                             std::to_string(*expected), std::to_string(actual)};
            return out;
        }
    }
    out.pass = true;
    return out;
}

namespace {

std::string claim_name(const std::string& suite, const std::string& tag,
                       const CongruenceClaim& c) {
    std::string name = suite;
    if (!tag.empty()) name += "." + tag;
    name += ".a" + std::to_string(c.scale) + ".b" + std::to_string(c.offset) + ".m" +
            std::to_string(c.modulus) + "." + rule_name(c.rule) + ".n" + std::to_string(c.count);
    return name;
}

CongruenceClaim mk(const std::string& suite, const std::string& tag, std::uint64_t a,
                   std::uint64_t b, std::uint64_t m, Rule rule, std::uint64_t count) {
    CongruenceClaim c;
    c.scale = a;
    c.offset = b;
    c.modulus = m;
    c.rule = rule;
    c.count = count;
    c.name = claim_name(suite, tag, c);
    return c;
}

std::vector<std::uint64_t> quadratic_nonresidues(std::uint64_t p) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 1; r < p; ++r)
        if (legendre(static_cast<long long>(r), p) == -1) out.push_back(r);
    return out;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t v = 1;
    while (exp--) v *= base;
    return v;
}

}  // namespace

std::vector<std::string> theorem_suite_names() {
    return {"T2", "C1", "T3", "T4", "C2", "BSS", "Mao", "T6", "T7", "T10", "T8", "T9", "Closing"};
}

std::vector<CongruenceClaim> theorem_suite(const std::string& name) {
    std::vector<CongruenceClaim> cs;

    if (name == "T2") {
        // v0(2^{2a+2} n) has the square-indicator pattern mod 2^{3a+2}
        for (unsigned alpha : {1u, 2u}) {
            std::uint64_t a = pow_u64(2, 2 * alpha + 2), m = pow_u64(2, 3 * alpha + 2);
            cs.push_back(mk("T2", "alpha" + std::to_string(alpha), a, 0, m,
                            Rule::SquareIndicator, alpha == 1 ? 500 : 200));
        }
    } else if (name == "C1") {
        // alpha = 1: v0(16(pn+r)) == 0 mod 32 for quadratic nonresidues r
        for (std::uint64_t p : {3, 5, 7})
            for (std::uint64_t r : quadratic_nonresidues(p))
                cs.push_back(mk("C1", "p" + std::to_string(p) + ".r" + std::to_string(r), 16 * p,
                                16 * r, 32, Rule::Zero, 200));
    } else if (name == "T3") {
        for (unsigned alpha : {1u, 2u})  // v0(2^{2a+1}(2n+1)) == 0 mod 2^{3a}
            cs.push_back(mk("T3", "odd.alpha" + std::to_string(alpha),
                            pow_u64(2, 2 * alpha + 2), pow_u64(2, 2 * alpha + 1),
                            pow_u64(2, 3 * alpha), Rule::Zero, 200));
        for (unsigned alpha : {0u, 1u}) {  // v0(2^{2a+2}(4n+3)) == 0 mod 2^{3a+4}
            std::uint64_t s = pow_u64(2, 2 * alpha + 2);
            cs.push_back(mk("T3", "4n3.alpha" + std::to_string(alpha), 4 * s, 3 * s,
                            pow_u64(2, 3 * alpha + 4), Rule::Zero, 200));
        }
        for (unsigned alpha : {0u, 1u}) {  // v0(2^{2a+2}(8n+7)) == 0 mod 2^{3a+6}
            std::uint64_t s = pow_u64(2, 2 * alpha + 2);
            cs.push_back(mk("T3", "8n7.alpha" + std::to_string(alpha), 8 * s, 7 * s,
                            pow_u64(2, 3 * alpha + 6), Rule::Zero, 200));
        }
        for (unsigned alpha : {0u, 1u}) {  // v0(2^{2a+2}(8n+5)) == 0 mod 2^{3a+6}
            std::uint64_t s = pow_u64(2, 2 * alpha + 2);
            cs.push_back(mk("T3", "8n5.alpha" + std::to_string(alpha), 8 * s, 5 * s,
                            pow_u64(2, 3 * alpha + 6), Rule::Zero, 200));
        }
    } else if (name == "T4") {
        // v0(2^{2a+2} p^{2b} (8n+1)) == 0 mod 2^{3a+9} off the triangular numbers
        for (unsigned alpha : {0u, 1u}) {
            std::uint64_t s = pow_u64(2, 2 * alpha + 2), m = pow_u64(2, 3 * alpha + 9);
            std::string atag = "alpha" + std::to_string(alpha);
            cs.push_back(mk("T4", atag + ".beta0", 8 * s, s, m, Rule::ZeroUnlessTriangular, 100));
            for (std::uint64_t p : {3, 5})
                cs.push_back(mk("T4", atag + ".beta1.p" + std::to_string(p), 8 * s * p * p,
                                s * p * p, m, Rule::ZeroUnlessTriangular, 100));
        }
    } else if (name == "C2") {
        for (unsigned alpha : {0u, 1u}) {
            std::uint64_t s = pow_u64(2, 2 * alpha + 2), m = pow_u64(2, 3 * alpha + 9);
            std::string atag = "alpha" + std::to_string(alpha);
            for (std::uint64_t p : {3, 5}) {
                std::string tag = atag + ".p" + std::to_string(p);
                // v0(2^{2a+2} p (8pn + 8i + p)) == 0, i = 1..p-1 (beta = 0)
                for (std::uint64_t i = 1; i < p; ++i)
                    cs.push_back(mk("C2", tag + ".i" + std::to_string(i), 8 * s * p * p,
                                    s * p * (8 * i + p), m, Rule::Zero, 100));
                // v0(2^{2a+2} (8pn + 8j + 1)) == 0 when (8j+1|p) = -1 (beta = 0)
                for (std::uint64_t j = 0; j < p; ++j)
                    if (legendre(static_cast<long long>(8 * j + 1), p) == -1)
                        cs.push_back(mk("C2", tag + ".j" + std::to_string(j), 8 * s * p,
                                        s * (8 * j + 1), m, Rule::Zero, 100));
            }
        }
    } else if (name == "BSS") {
        cs.push_back(mk("BSS", "signed", 4, 0, 4, Rule::SignedSquareIndicator, 500));
        for (std::uint64_t p : {3, 5, 7})
            for (std::uint64_t r : quadratic_nonresidues(p))
                cs.push_back(mk("BSS", "p" + std::to_string(p) + ".r" + std::to_string(r), 4 * p,
                                4 * r, 4, Rule::Zero, 300));
        cs.push_back(mk("BSS", "pair16", 16, 12, 16, Rule::Zero, 300));
        cs.push_back(mk("BSS", "pair32", 32, 28, 64, Rule::Zero, 300));
    } else if (name == "Mao") {
        // The two identities for V0(q) on 8n+2 and 8n+6 force the V0
        // coefficients on 40n+13 and 40n+37 to vanish mod 40.  Those
        // coefficients are 2*v0(n), so in terms of v0 the modulus is 20
        // (v0(13) = 20, so mod 40 is numerically false; see the printed-
        // modulus probe added by run_theorem_suite).
        cs.push_back(mk("Mao", "r13", 40, 13, 20, Rule::Zero, 100));
        cs.push_back(mk("Mao", "r37", 40, 37, 20, Rule::Zero, 100));
    } else if (name == "T6") {
        for (std::uint64_t r : {132, 164, 228, 292, 356, 388})
            cs.push_back(mk("T6", "r" + std::to_string(r), 416, r, 13, Rule::Zero, 40));
    } else if (name == "T7") {
        for (std::uint64_t r : {68, 132})
            cs.push_back(mk("T7", "r" + std::to_string(r), 160, r, 25, Rule::Zero, 60));
    } else if (name == "T10") {
        cs.push_back(mk("T10", "x9", 864, 612, 27, Rule::Zero, 12));
        cs.push_back(mk("T10", "x27a", 2592, 1188, 27, Rule::Zero, 12));
        cs.push_back(mk("T10", "x27b", 2592, 2052, 27, Rule::Zero, 12));
    } else if (name == "T8") {
        // p = 3, alpha = 0 instances of the mod-27 triangular family
        cs.push_back(mk("T8", "tri", 2592, 324, 27, Rule::ZeroUnlessTriangular, 10));
        cs.push_back(mk("T8", "i1", 23328, 10692, 27, Rule::Zero, 10));
        cs.push_back(mk("T8", "i2", 23328, 18468, 27, Rule::Zero, 10));
        cs.push_back(mk("T8", "j2", 7776, 5508, 27, Rule::Zero, 10));
    } else if (name == "T9") {
        // p = 3, alpha = 1, p1 = 5 instances of the mod-27 pentagonal family
        cs.push_back(mk("T9", "pent", 864, 36, 27, Rule::ZeroUnlessPentagonalIndex, 10));
        for (std::uint64_t i = 1; i <= 4; ++i)
            cs.push_back(mk("T9", "i" + std::to_string(i), 21600, 45 * (96 * i + 20), 27,
                            Rule::Zero, 10));
        for (std::uint64_t j : {3, 4})
            cs.push_back(mk("T9", "j" + std::to_string(j), 4320, 9 * (96 * j + 4), 27, Rule::Zero,
                            10));
    } else if (name == "Closing") {
        // composite modulus 2^9 3^3 5^2 13 at the two smallest arguments
        cs.push_back(mk("Closing", "", 56160, 39492, 4492800, Rule::Zero, 2));
    } else {
        throw std::invalid_argument("unknown theorem suite '" + name + "'");
    }
    return cs;
}

Report run_theorem_suite(const std::string& name, V0ModCache& cache) {
    auto t0 = std::chrono::steady_clock::now();
    Report report;
    report.suite = name;
    std::vector<CongruenceClaim> claims = theorem_suite(name);

    // one modular expansion per modulus, at the largest order needed
    std::map<std::uint64_t, std::size_t> max_order;
    for (const auto& c : claims) {
        std::size_t order = static_cast<std::size_t>(c.scale * (c.count - 1) + c.offset + 1);
        max_order[c.modulus] = std::max(max_order[c.modulus], order);
    }
    for (const auto& [m, order] : max_order) cache.get(m, order);

    for (const auto& c : claims) report.checks.push_back(check_claim(c, cache));

    if (name == "Mao") {
        // record that the progression does NOT vanish mod 40 as sometimes
        // printed: v0(13) leaves residue 20
        const auto& v = cache.get(40, 14);
        CheckResult probe;
        probe.name = "Mao.printed_modulus40_disagrees_at_n0";
        probe.order = 14;
        probe.modulus = 40;
        probe.pass = v[13] == 20;
        report.checks.push_back(std::move(probe));
    }

    report.sort_checks();
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

std::vector<ScanHit> scan(std::uint64_t a, std::uint64_t modulus, std::uint64_t count,
                          V0ModCache& cache) {
    if (a == 0 || count == 0) throw std::invalid_argument("scan needs a >= 1 and count >= 1");
    const auto& v = cache.get(modulus, static_cast<std::size_t>(a * count));
    std::vector<ScanHit> hits;
    for (std::uint64_t b = 0; b < a; ++b) {
        bool all_zero = true;
        for (std::uint64_t n = 0; n < count && all_zero; ++n)
            all_zero = v[a * n + b] == 0;
        if (all_zero) hits.push_back({a, b});
    }
    return hits;
}

std::vector<ScanHit> discover(std::uint64_t a_max, std::uint64_t modulus, std::uint64_t count,
                              V0ModCache& cache) {
    if (a_max == 0) throw std::invalid_argument("discover needs a_max >= 1");
    cache.get(modulus, static_cast<std::size_t>(a_max * count));
    std::vector<ScanHit> hits;
    for (std::uint64_t a = 1; a <= a_max; ++a)
        for (auto h : scan(a, modulus, count, cache)) hits.push_back(h);
    return hits;
}

}  // namespace qv0::congruence
