#include "sesqui/staircase/fibonacci.hpp"

#include <string>

#include "sesqui/exact/errors.hpp"

namespace sesqui::staircase {

BigInt fib(int i) {
    if (i < -1) throw DomainError("fib: index " + std::to_string(i) + " < -1");
    BigInt prev = 1, cur = 0; // Fib_{-1}, Fib_0
    for (int j = 0; j < i; ++j) {
        BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }
    return i == -1 ? prev : cur;
}

std::int64_t fib64(int i) {
    if (i > 92) throw DomainError("fib64: Fib_" + std::to_string(i) + " exceeds int64");
    return fib(i).get_si();
}

namespace {

void check_k(int k) {
    if (k < -1) throw DomainError("staircase corner index must be >= -1");
}

} // namespace

Rational alpha(int k) {
    check_k(k);
    return Rational(fib(2 * k + 5), fib(2 * k + 1));
}

Rational beta(int k) {
    check_k(k);
    return Rational(fib(2 * k + 5), fib(2 * k + 3));
}

Rational gamma(int k) {
    check_k(k);
    BigInt a = fib(2 * k + 3), b = fib(2 * k + 1);
    return Rational(BigInt(a * a), BigInt(b * b));
}

Rational slope(int k) {
    check_k(k);
    return Rational(fib(2 * k + 1), fib(2 * k + 3));
}

} // namespace sesqui::staircase
