#include "sesqui/curves/classify.hpp"

#include <numeric>
#include <utility>

#include "sesqui/exact/errors.hpp"
#include "sesqui/staircase/fibonacci.hpp"

namespace sesqui::curves {

BigInt diophantine_value(std::int64_t p, std::int64_t q) {
    BigInt P = BigInt(std::to_string(p)), Q = BigInt(std::to_string(q));
    return BigInt(P * P + Q * Q - 7 * P * Q + 9);
}

bool exceeds_tau4(const BigInt& p, const BigInt& q) {
    if (sgn(q) <= 0) throw DomainError("exceeds_tau4: denominator must be positive");
    return sgn(BigInt(p * p - 7 * p * q + q * q)) > 0 && 2 * p > 7 * q;
}

bool exceeds_tau4(const Rational& x) {
    return exceeds_tau4(x.num(), x.den());
}

std::optional<int> fibonacci_outer_index(std::int64_t p, std::int64_t q) {
    using staircase::fib64;
    for (int k = -1; 2 * k + 5 <= 92; ++k) {
        const std::int64_t fp = fib64(2 * k + 5);
        if (fp > p) break;
        if (fp == p && fib64(2 * k + 1) == q) return k;
    }
    return std::nullopt;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::FibonacciOuter: return "FibonacciOuter";
    case Verdict::Supercritical: return "Supercritical";
    case Verdict::NotRealizable: return "NotRealizable";
    }
    return "?";
}

std::string ClassificationResult::verdict_str() const {
    if (verdict == Verdict::FibonacciOuter && k) return "FibonacciOuter(" + std::to_string(*k) + ")";
    return to_string(verdict);
}

ClassificationResult classify_theorem_c(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw DomainError("classify: p and q must be positive");
    if (p < q) std::swap(p, q);
    if (std::gcd(p, q) != 1) {
        throw DomainError("classify: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
    }
    ClassificationResult r;
    r.p = p;
    r.q = q;
    r.diophantine = diophantine_value(p, q);
    r.divisible_by_3 = (p + q) % 3 == 0;
    r.coprime = true;
    if (auto k = fibonacci_outer_index(p, q)) {
        r.verdict = Verdict::FibonacciOuter;
        r.k = k;
    } else if (exceeds_tau4(BigInt(std::to_string(p)), BigInt(std::to_string(q)))) {
        r.verdict = Verdict::Supercritical;
    } else {
        r.verdict = Verdict::NotRealizable;
    }
    return r;
}

} // namespace sesqui::curves
