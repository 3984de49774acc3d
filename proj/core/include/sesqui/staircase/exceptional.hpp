#ifndef SESQUI_STAIRCASE_EXCEPTIONAL_HPP
#define SESQUI_STAIRCASE_EXCEPTIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sesqui/exact/rational.hpp"

namespace sesqui::staircase {

/// Class d L - sum m_i E_i in a blowup of CP^2.
struct ExceptionalClass {
    std::int64_t d = 0;
    std::vector<std::int64_t> m; // nonincreasing

    friend bool operator==(const ExceptionalClass&, const ExceptionalClass&) = default;
    std::string str() const; // "(d; m1,m2,...)"
};

// d^2 - sum m_i^2 = -1 and 3d - sum m_i = 1
bool satisfies_exceptional_equations(const ExceptionalClass& c);

// Standard Cremona moves on the three largest multiplicities until (0; -1),
// failing on a negative multiplicity or a step that does not lower d.
bool cremona_reduces(const ExceptionalClass& c);

bool exc_is_valid(const ExceptionalClass& c);

// All valid classes with 1 <= d <= d_max, ordered by (d, m) with m compared
// lexicographically descending.
std::vector<ExceptionalClass> enumerate_exceptional_classes(std::int64_t d_max);

// (sum m_i w_i) / d, both sequences nonincreasing; the shorter one is padded with zeros.
Rational obstruction_mu(const ExceptionalClass& c, const std::vector<Rational>& weights);

struct ObstructionResult {
    Rational value;                      // 0 when no class is found
    std::optional<ExceptionalClass> cls; // the first class achieving the value
};

// Largest obstruction over valid classes of degree <= d_max for a = p/q.
ObstructionResult obstruction_sup(const BigInt& p, const BigInt& q, std::int64_t d_max);

} // namespace sesqui::staircase

#endif
