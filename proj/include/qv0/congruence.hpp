#pragma once

// Congruence claims about v0(n) over arithmetic progressions, checked
// against modular series expansions, plus the named desk-scale suites for
// the theorem families this project verifies.
//
// A claim states the residues of v0(a*n + b) mod m for all n below a count:
// either identically zero, zero with a figurate-number exemption set, or an
// explicit square-indicator pattern.  Exemption sets are produced by direct
// enumeration of k^2, k(k+1)/2, or k(3k+1)/2 (never by quadratic-residue
// shortcuts), so they are independent of the congruence machinery they
// guard.
//
// Every universally quantified statement is testable only over a finite
// range here; the claim name and count record exactly what was checked.

#include "qv0/report.hpp"
#include "qv0/rings.hpp"
#include "qv0/series.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qv0::congruence {

enum class Rule {
    Zero,                      // v0(an+b) == 0 for all tested n
    SquareIndicator,           // == 1 when n is a square, 0 otherwise
    SignedSquareIndicator,     // == (-1)^k when n = k^2, 0 otherwise
    ZeroUnlessTriangular,      // == 0 unless n = k(k+1)/2
    ZeroUnlessPentagonalIndex  // == 0 unless n = k(3k+1)/2, k in Z
};

const char* rule_name(Rule r);

struct CongruenceClaim {
    std::string name;
    std::uint64_t scale = 1;   // a
    std::uint64_t offset = 0;  // b
    std::uint64_t modulus = 2;
    Rule rule = Rule::Zero;
    std::uint64_t count = 1;  // n ranges over 0 .. count-1
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Modular v0 expansions shared across claims: one series per modulus, grown
// to the largest order any caller has asked for.  A memory cap guards
// runaway orders (claims whose progressions outgrow the cap fail with
// ResourceLimitError instead of thrashing).
class V0ModCache {
public:
    explicit V0ModCache(std::uint64_t mem_cap_bytes = std::uint64_t(1) << 30)
        : cap_(mem_cap_bytes) {}

    const std::vector<std::uint64_t>& get(std::uint64_t modulus, std::size_t min_order);
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
    std::map<std::uint64_t, std::vector<std::uint64_t>> table_;
};

CheckResult check_claim(const CongruenceClaim& claim, V0ModCache& cache);

std::vector<std::string> theorem_suite_names();
std::vector<CongruenceClaim> theorem_suite(const std::string& name);
Report run_theorem_suite(const std::string& name, V0ModCache& cache);

struct ScanHit {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

// Exhaustive scan for progressions with v0(an+b) == 0 mod m for all
// n < count; candidates only, nothing here is a proof.  scan() fixes a,
// discover() tries every 1 <= a <= a_max.
std::vector<ScanHit> scan(std::uint64_t a, std::uint64_t modulus, std::uint64_t count,
                          V0ModCache& cache);
std::vector<ScanHit> discover(std::uint64_t a_max, std::uint64_t modulus, std::uint64_t count,
                              V0ModCache& cache);

}  // namespace qv0::congruence
