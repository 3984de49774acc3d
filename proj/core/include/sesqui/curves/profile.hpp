#ifndef SESQUI_CURVES_PROFILE_HPP
#define SESQUI_CURVES_PROFILE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sesqui/exact/rational.hpp"

namespace sesqui::curves {

/// Rational plane curve of degree d with one (p, q) cusp.
struct CurveProfile {
    std::int64_t d = 1;
    std::int64_t p = 1;
    std::int64_t q = 1;

    friend bool operator==(const CurveProfile&, const CurveProfile&) = default;
};

// 2(3d - p - q)
std::int64_t curve_index(std::int64_t d, std::int64_t p, std::int64_t q);
// ((d-1)(d-2) - (p-1)(q-1)) / 2; realizable profiles need a nonnegative integer.
Rational double_point_count(std::int64_t d, std::int64_t p, std::int64_t q);

enum class Family { A, B, C, D, E, F };

std::string to_string(Family f); // "a".."f"

struct FamilyMember {
    Family family;
    CurveProfile profile;
    int k = 0; // Fibonacci index for families (c), (d); 0 otherwise
};

// Members of the unicuspidal families with degree <= d_max, sorted by
// (d, family, p). Throws DomainError for d_max < 3.
std::vector<FamilyMember> unicuspidal_families(std::int64_t d_max);

} // namespace sesqui::curves

#endif
