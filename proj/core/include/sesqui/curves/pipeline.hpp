#ifndef SESQUI_CURVES_PIPELINE_HPP
#define SESQUI_CURVES_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sesqui/curves/classify.hpp"
#include "sesqui/scattering/diagram.hpp"

namespace sesqui::curves {

// How a ray direction r of the T0 diagram is matched with W_{T0}(p, q).
// Flipped: W(p, q) = -r. AsPrinted: W(p, q) = r.
enum class WSign { Flipped, AsPrinted };

enum class PairStatus {
    Reachable,      // the ray attached to the pair is visible below the truncation order
    OutsideSupport, // its ray lies outside the support of the diagram at every order
    Beyond,         // inside the support, beyond the truncation order
};

std::string to_string(WSign s);
std::string to_string(PairStatus s);

struct PipelineOptions {
    int order = 12;
    std::size_t term_cap = 2'000'000;
    WSign sign = WSign::Flipped;
    // Pairs p >= q >= 1, gcd 1, p + q <= pair_bound are checked.
    std::int64_t pair_bound = 100;
    // Replaces classify_theorem_c when set (negative controls).
    std::function<ClassificationResult(std::int64_t, std::int64_t)> classifier;
};

struct DetectedRay {
    LatticeVector std_direction; // ray of S(D^{3,3}_{e1,e2})
    LatticeVector direction;     // its image in the T0 lattice
    scattering::Orientation orientation = scattering::Orientation::Outgoing;
    std::int64_t p = 0;          // pair read off from the ray, p >= q; q = 0 for axis rays
    std::int64_t q = 0;
    int t_order = 0;
    Rational coefficient;        // lowest-order label coefficient
};

struct PairRecord {
    std::int64_t p = 0;
    std::int64_t q = 0;
    PairStatus status = PairStatus::Beyond;
    bool detected = false;
    ClassificationResult classification;
    bool agrees = true;
};

struct PipelineReport {
    int order = 0;
    WSign sign = WSign::Flipped;
    std::int64_t pair_bound = 0;
    std::vector<DetectedRay> rays;
    // Every pair in the box that is reachable or detected, plus outside-support
    // pairs that disagree; sorted by (p + q, p).
    std::vector<PairRecord> pairs;
    std::size_t outside_support_checked = 0;
    bool agreement = true;

    std::vector<PairRecord> reachable() const;
    std::vector<PairRecord> detected() const;
    std::vector<PairRecord> disagreements() const;
};

// Std-lattice ray attached to the ordered pair (p, q), and its status at order K.
LatticeVector pair_std_direction(std::int64_t p, std::int64_t q, WSign sign);
PairStatus pair_status(std::int64_t p, std::int64_t q, int order, WSign sign);

// Scattering side: complete D^{3,3}_{e1,e2} at order K, move it to the T0
// lattice (m1 = (-1,-3), m2 = (1,0)) and read pairs off every wall through
// W_{T0}^{-1}. Arithmetic side: classify every pair of the box. Throws
// DomainError for K < 3 and TermCapExceeded from the completion.
PipelineReport verify_theorem_c_pipeline(const PipelineOptions& options);

nlohmann::ordered_json pipeline_report_to_json(const PipelineReport& report);
std::string pipeline_report_to_text(const PipelineReport& report);

} // namespace sesqui::curves

#endif
