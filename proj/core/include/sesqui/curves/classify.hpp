#ifndef SESQUI_CURVES_CLASSIFY_HPP
#define SESQUI_CURVES_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "sesqui/exact/rational.hpp"

namespace sesqui::curves {

// p^2 + q^2 - 7pq + 9
BigInt diophantine_value(std::int64_t p, std::int64_t q);

// p/q > tau^4 = (7 + 3 sqrt 5)/2, decided by the sign of p^2 - 7pq + q^2 and 2p > 7q.
bool exceeds_tau4(const BigInt& p, const BigInt& q);
bool exceeds_tau4(const Rational& x);

// k >= -1 with (p, q) = (Fib_{2k+5}, Fib_{2k+1}), if any.
std::optional<int> fibonacci_outer_index(std::int64_t p, std::int64_t q);

enum class Verdict { FibonacciOuter, Supercritical, NotRealizable };

struct ClassificationResult {
    std::int64_t p = 0;
    std::int64_t q = 0;
    Verdict verdict = Verdict::NotRealizable;
    std::optional<int> k;      // set for FibonacciOuter
    BigInt diophantine;
    bool divisible_by_3 = false; // 3 | (p + q)
    bool coprime = true;

    bool realizable() const { return verdict != Verdict::NotRealizable; }
    std::string verdict_str() const; // "FibonacciOuter(k)" / "Supercritical" / "NotRealizable"
};

// Classifies the unordered pair {p, q} (swapped so that p >= q). Throws
// DomainError on nonpositive or non-coprime input. Divisibility by 3 is
// reported only.
ClassificationResult classify_theorem_c(std::int64_t p, std::int64_t q);

std::string to_string(Verdict v);

} // namespace sesqui::curves

#endif
