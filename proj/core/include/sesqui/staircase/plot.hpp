#ifndef SESQUI_STAIRCASE_PLOT_HPP
#define SESQUI_STAIRCASE_PLOT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "sesqui/staircase/staircase.hpp"

namespace sesqui::staircase {

struct SampleRow {
    Rational a;
    StaircaseValue unstabilized;
    Rational stabilized;
    Rational hind;
};

// a = lo, lo + step, ... <= hi. Throws DomainError unless 1 <= lo <= hi and step > 0.
std::vector<SampleRow> sample_grid(const Rational& lo, const Rational& hi, const Rational& step);

// Header "a,unstabilized,stabilized,hind,volume"; every field exact.
std::string samples_to_csv(const std::vector<SampleRow>& rows);
nlohmann::ordered_json samples_to_json(const std::vector<SampleRow>& rows);

// Staircase, 3a/(a+1) and volume curve over [lo, hi] with outer-corner markers.
std::string staircase_svg(const Rational& lo, const Rational& hi, const std::vector<std::string>& provenance = {});

} // namespace sesqui::staircase

#endif
