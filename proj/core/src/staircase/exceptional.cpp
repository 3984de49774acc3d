#include "sesqui/staircase/exceptional.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sesqui/exact/errors.hpp"
#include "sesqui/staircase/weights.hpp"

namespace sesqui::staircase {

std::string ExceptionalClass::str() const {
    std::string s = "(" + std::to_string(d) + ";";
    for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : " ") + std::to_string(m[i]);
    return s + ")";
}

bool satisfies_exceptional_equations(const ExceptionalClass& c) {
    std::int64_t sum = 0, sq = 0;
    for (auto x : c.m) {
        sum += x;
        sq += x * x;
    }
    return c.d * c.d - sq == -1 && 3 * c.d - sum == 1;
}

bool cremona_reduces(const ExceptionalClass& c) {
    std::int64_t d = c.d;
    std::vector<std::int64_t> m;
    for (auto x : c.m) {
        if (x != 0) m.push_back(x);
    }
    while (true) {
        std::sort(m.begin(), m.end(), std::greater<>());
        if (d == 0 && m == std::vector<std::int64_t>{-1}) return true;
        if (d <= 0 || m.empty() || m.back() < 0) return false;
        while (m.size() < 3) m.push_back(0);
        const std::int64_t nd = 2 * d - m[0] - m[1] - m[2];
        if (nd >= d) return false;
        const std::int64_t a = d - m[1] - m[2], b = d - m[0] - m[2], e = d - m[0] - m[1];
        m[0] = a;
        m[1] = b;
        m[2] = e;
        d = nd;
        m.erase(std::remove(m.begin(), m.end(), 0), m.end());
    }
}

bool exc_is_valid(const ExceptionalClass& c) {
    if (c.d < 0) return false;
    if (!std::is_sorted(c.m.begin(), c.m.end(), std::greater<>())) return false;
    return satisfies_exceptional_equations(c) && cremona_reduces(c);
}

namespace {

// Nonincreasing tuples of positive integers <= cap with the given sum and sum of squares.
void partitions(std::int64_t sum, std::int64_t squares, std::int64_t cap, std::vector<std::int64_t>& cur,
                const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    if (sum == 0) {
        if (squares == 0) emit(cur);
        return;
    }
    // Parts x <= cap satisfy x <= x^2 <= cap x, so sum <= squares <= cap * sum.
    if (squares < sum) return;
    for (std::int64_t x = std::min(cap, sum); x >= 1; --x) {
        if (squares > x * sum) break;
        cur.push_back(x);
        partitions(sum - x, squares - x * x, x, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<ExceptionalClass> enumerate_exceptional_classes(std::int64_t d_max) {
    std::vector<ExceptionalClass> out;
    for (std::int64_t d = 1; d <= d_max; ++d) {
        std::vector<std::int64_t> cur;
        std::vector<ExceptionalClass> found;
        partitions(3 * d - 1, d * d + 1, d, cur, [&](const std::vector<std::int64_t>& m) {
            ExceptionalClass c{d, m};
            if (cremona_reduces(c)) found.push_back(std::move(c));
        });
        std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.m > y.m; });
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

Rational obstruction_mu(const ExceptionalClass& c, const std::vector<Rational>& weights) {
    if (c.d <= 0) throw DomainError("obstruction_mu: degree must be positive");
    Rational s(0);
    for (std::size_t i = 0; i < std::min(c.m.size(), weights.size()); ++i) s += Rational(c.m[i]) * weights[i];
    return s / Rational(c.d);
}

ObstructionResult obstruction_sup(const BigInt& p, const BigInt& q, std::int64_t d_max) {
    if (d_max < 1) throw DomainError("obstruction_sup: d_max must be >= 1");
    const WeightSequence ws = weight_sequence(p, q);
    ObstructionResult best{Rational(0), std::nullopt};
    for (const auto& c : enumerate_exceptional_classes(d_max)) {
        Rational mu = obstruction_mu(c, ws.weights);
        if (!best.cls || mu > best.value) best = {mu, c};
    }
    return best;
}

} // namespace sesqui::staircase
