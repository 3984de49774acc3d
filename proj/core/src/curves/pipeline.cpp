#include "sesqui/curves/pipeline.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sesqui/exact/errors.hpp"
#include "sesqui/exact/series_json.hpp"
#include "sesqui/scattering/completion.hpp"
#include "sesqui/scattering/diagram_ops.hpp"
#include "sesqui/toric/w_map.hpp"

namespace sesqui::curves {

namespace {

constexpr LatticeVector kM1{-1, -3};
constexpr LatticeVector kM2{1, 0};

bool is_incoming_std(LatticeVector s) {
    return s == LatticeVector{-1, 0} || s == LatticeVector{0, -1};
}

} // namespace

std::string to_string(WSign s) {
    return s == WSign::Flipped ? "flipped" : "as-printed";
}

std::string to_string(PairStatus s) {
    switch (s) {
    case PairStatus::Reachable: return "reachable";
    case PairStatus::OutsideSupport: return "outside-support";
    case PairStatus::Beyond: return "beyond";
    }
    return "?";
}

LatticeVector pair_std_direction(std::int64_t p, std::int64_t q, WSign sign) {
    LatticeVector w = toric::w_t0(p, q);
    if (sign == WSign::Flipped) w = -w;
    return scattering::pull_back_direction(w, kM1, kM2);
}

PairStatus pair_status(std::int64_t p, std::int64_t q, int order, WSign sign) {
    bool beyond = false;
    for (auto [x, y] : {std::pair{p, q}, std::pair{q, p}}) {
        LatticeVector s = pair_std_direction(x, y, sign);
        if (is_incoming_std(s)) return PairStatus::Reachable;
        if (s.a >= 0 && s.b >= 0) {
            if (s.a + s.b < order) return PairStatus::Reachable;
            beyond = true;
        }
    }
    return beyond ? PairStatus::Beyond : PairStatus::OutsideSupport;
}

std::vector<PairRecord> PipelineReport::reachable() const {
    std::vector<PairRecord> out;
    std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out),
                 [](const PairRecord& r) { return r.status == PairStatus::Reachable; });
    return out;
}

std::vector<PairRecord> PipelineReport::detected() const {
    std::vector<PairRecord> out;
    std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), [](const PairRecord& r) { return r.detected; });
    return out;
}

std::vector<PairRecord> PipelineReport::disagreements() const {
    std::vector<PairRecord> out;
    std::copy_if(pairs.begin(), pairs.end(), std::back_inserter(out), [](const PairRecord& r) { return !r.agrees; });
    return out;
}

PipelineReport verify_theorem_c_pipeline(const PipelineOptions& options) {
    const int K = options.order;
    if (K < 3) throw DomainError("verify: truncation order must be >= 3, got " + std::to_string(K));
    if (options.pair_bound < 2) throw DomainError("verify: pair bound must be >= 2");

    PipelineReport report;
    report.order = K;
    report.sign = options.sign;
    report.pair_bound = options.pair_bound;

    const std::vector<LatticeVector> std_basis{{1, 0}, {0, 1}};
    const std::vector<int> exponents{3, 3};
    scattering::CompletionOptions copt;
    copt.term_cap = options.term_cap;
    auto std_diagram = scattering::ks_complete(scattering::incoming_diagram(K, std_basis, exponents), copt);

    std::map<std::pair<std::int64_t, std::int64_t>, bool> detected;
    for (const auto& w : std_diagram.walls()) {
        DetectedRay ray;
        ray.std_direction = w.direction;
        ray.direction = primitive_part(w.direction.a * kM1 + w.direction.b * kM2).primitive;
        ray.orientation = w.orientation;
        const LatticeVector key = options.sign == WSign::Flipped ? -ray.direction : ray.direction;
        auto [p, q] = toric::w_t0_inverse(key);
        if (p < q) std::swap(p, q);
        ray.p = p;
        ray.q = q;
        TruncatedSeries rest = w.label - TruncatedSeries::one(K);
        const auto& [m, c] = *rest.terms().begin();
        ray.t_order = m.t_degree;
        ray.coefficient = c;
        report.rays.push_back(ray);
        if (q > 0) detected[{p, q}] = true;
    }

    auto classify = [&](std::int64_t p, std::int64_t q) {
        return options.classifier ? options.classifier(p, q) : classify_theorem_c(p, q);
    };

    std::map<std::pair<std::int64_t, std::int64_t>, PairRecord> records;
    for (std::int64_t s = 2; s <= options.pair_bound; ++s) {
        for (std::int64_t q = 1; 2 * q <= s; ++q) {
            const std::int64_t p = s - q;
            if (std::gcd(p, q) != 1) continue;
            PairRecord r;
            r.p = p;
            r.q = q;
            r.status = pair_status(p, q, K, options.sign);
            r.detected = detected.count({p, q}) > 0;
            if (r.status == PairStatus::Beyond && !r.detected) continue;
            r.classification = classify(p, q);
            const bool realizable = r.classification.realizable();
            switch (r.status) {
            case PairStatus::Reachable: r.agrees = r.detected == realizable; break;
            case PairStatus::OutsideSupport:
                ++report.outside_support_checked;
                r.agrees = !r.detected && !realizable;
                break;
            case PairStatus::Beyond: r.agrees = realizable; break;
            }
            if (r.status == PairStatus::OutsideSupport && r.agrees) continue;
            records.emplace(std::pair{p, q}, std::move(r));
        }
    }
    // Detections outside the box still have to be realizable.
    for (const auto& [pq, _] : detected) {
        if (records.count(pq)) continue;
        if (pq.first + pq.second <= options.pair_bound) continue;
        PairRecord r;
        r.p = pq.first;
        r.q = pq.second;
        r.status = pair_status(r.p, r.q, K, options.sign);
        r.detected = true;
        r.classification = classify(r.p, r.q);
        r.agrees = r.classification.realizable();
        records.emplace(pq, std::move(r));
    }

    for (auto& [pq, r] : records) report.pairs.push_back(std::move(r));
    std::sort(report.pairs.begin(), report.pairs.end(), [](const PairRecord& a, const PairRecord& b) {
        return std::pair{a.p + a.q, a.p} < std::pair{b.p + b.q, b.p};
    });
    report.agreement = std::all_of(report.pairs.begin(), report.pairs.end(), [](const PairRecord& r) { return r.agrees; });
    return report;
}

nlohmann::ordered_json pipeline_report_to_json(const PipelineReport& report) {
    using nlohmann::ordered_json;
    auto pair_list = [](const std::vector<PairRecord>& rs) {
        ordered_json out = ordered_json::array();
        for (const auto& r : rs) out.push_back({r.p, r.q});
        return out;
    };
    ordered_json j;
    j["K"] = report.order;
    j["w_sign"] = to_string(report.sign);
    j["pair_bound"] = report.pair_bound;
    j["agreement"] = report.agreement;
    j["reachable"] = pair_list(report.reachable());
    j["detected"] = pair_list(report.detected());
    j["disagreements"] = pair_list(report.disagreements());
    j["outside_support_checked"] = report.outside_support_checked;

    ordered_json pairs = ordered_json::array();
    for (const auto& r : report.pairs) {
        ordered_json jp;
        jp["p"] = r.p;
        jp["q"] = r.q;
        jp["status"] = to_string(r.status);
        jp["detected"] = r.detected;
        jp["verdict"] = r.classification.verdict_str();
        jp["diophantine"] = bigint_to_json(r.classification.diophantine);
        jp["divisible_by_3"] = r.classification.divisible_by_3;
        jp["agrees"] = r.agrees;
        pairs.push_back(std::move(jp));
    }
    j["pairs"] = std::move(pairs);

    ordered_json rays = ordered_json::array();
    for (const auto& r : report.rays) {
        ordered_json jr;
        jr["std_dir"] = {r.std_direction.a, r.std_direction.b};
        jr["dir"] = {r.direction.a, r.direction.b};
        jr["orientation"] = std::string(scattering::to_string(r.orientation));
        jr["pair"] = {r.p, r.q};
        jr["t_order"] = r.t_order;
        jr["coefficient"] = rational_to_json(r.coefficient);
        rays.push_back(std::move(jr));
    }
    j["rays"] = std::move(rays);
    return j;
}

std::string pipeline_report_to_text(const PipelineReport& report) {
    std::ostringstream os;
    os << "K = " << report.order << ", W sign " << to_string(report.sign) << ", pairs with p+q <= "
       << report.pair_bound << "\n\n";
    os << "rays (std -> T0)            pair      t-order  coefficient\n";
    auto pad = [](const std::string& s, std::size_t width) {
        return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
    };
    for (const auto& r : report.rays) {
        std::string left = "(" + r.std_direction.str() + ") -> (" + r.direction.str() + ") " +
                           std::string(scattering::to_string(r.orientation));
        std::string pair = r.q == 0 ? "-" : "{" + std::to_string(r.p) + "," + std::to_string(r.q) + "}";
        os << pad(left, 28) << pad(pair, 10) << pad(std::to_string(r.t_order), 9) << r.coefficient.fraction_str()
           << "\n";
    }
    os << "\npair      status           detected  verdict\n";
    for (const auto& r : report.pairs) {
        std::string pair = "{" + std::to_string(r.p) + "," + std::to_string(r.q) + "}";
        os << pad(pair, 10) << pad(to_string(r.status), 17) << pad(r.detected ? "yes" : "no", 10)
           << r.classification.verdict_str() << (r.agrees ? "" : "  DISAGREE") << "\n";
    }
    os << "\noutside-support pairs checked: " << report.outside_support_checked << "\n";
    os << "agreement: " << (report.agreement ? "true" : "false") << "\n";
    return os.str();
}

} // namespace sesqui::curves
