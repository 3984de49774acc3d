#include "sesqui/curves/profile.hpp"

#include <algorithm>
#include <tuple>

#include "sesqui/exact/errors.hpp"
#include "sesqui/staircase/fibonacci.hpp"

namespace sesqui::curves {

std::int64_t curve_index(std::int64_t d, std::int64_t p, std::int64_t q) {
    return 2 * (3 * d - p - q);
}

Rational double_point_count(std::int64_t d, std::int64_t p, std::int64_t q) {
    return Rational((d - 1) * (d - 2) - (p - 1) * (q - 1), 2);
}

std::string to_string(Family f) {
    return std::string(1, static_cast<char>('a' + static_cast<int>(f)));
}

std::vector<FamilyMember> unicuspidal_families(std::int64_t d_max) {
    using staircase::fib64;
    if (d_max < 3) throw DomainError("unicuspidal_families: d_max must be >= 3");
    std::vector<FamilyMember> out;
    for (std::int64_t d = 3; d <= d_max; ++d) out.push_back({Family::A, {d, d, d - 1}});
    for (std::int64_t d = 4; d <= d_max; d += 2) out.push_back({Family::B, {d, 2 * d - 1, d / 2}});
    for (int k = 1; 2 * k + 5 <= 92; ++k) {
        const std::int64_t a = fib64(2 * k + 3), b = fib64(2 * k + 1);
        if (a > d_max / b) break;
        out.push_back({Family::C, {a * b, a * a, b * b}, k});
    }
    for (int k = 1; 2 * k + 5 <= 92; ++k) {
        const std::int64_t d = fib64(2 * k + 3);
        if (d > d_max) break;
        out.push_back({Family::D, {d, fib64(2 * k + 5), fib64(2 * k + 1)}, k});
    }
    if (d_max >= 8) out.push_back({Family::E, {8, 22, 3}});
    if (d_max >= 16) out.push_back({Family::F, {16, 43, 6}});
    std::sort(out.begin(), out.end(), [](const FamilyMember& x, const FamilyMember& y) {
        return std::make_tuple(x.profile.d, x.family, x.profile.p) < std::make_tuple(y.profile.d, y.family, y.profile.p);
    });
    return out;
}

} // namespace sesqui::curves
