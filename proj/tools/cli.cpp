#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "atomic_write.hpp"
#include "sesqui/curves/classify.hpp"
#include "sesqui/curves/pipeline.hpp"
#include "sesqui/exact/errors.hpp"
#include "sesqui/exact/series_json.hpp"
#include "sesqui/scattering/completion.hpp"
#include "sesqui/scattering/diagram_io.hpp"
#include "sesqui/scattering/diagram_ops.hpp"
#include "sesqui/staircase/plot.hpp"
#include "sesqui/staircase/staircase.hpp"
#include "sesqui/toric/orbit_io.hpp"
#include "sesqui/toric/toric_model.hpp"

namespace sesqui::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct Globals {
    std::string format = "text";
    std::string out_path;
    std::optional<int> order;
    std::size_t term_cap = 2'000'000;
};

struct Output {
    std::string content;
    int status = kOk;
};

void require_format(const Globals& g, std::initializer_list<const char*> allowed, const char* command) {
    for (const char* f : allowed) {
        if (g.format == f) return;
    }
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
    throw DomainError(std::string(command) + ": format '" + g.format + "' not supported (use " + list + ")");
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

std::vector<std::string> provenance(const std::vector<std::string>& args, std::optional<int> order) {
    std::string line = "sesqui";
    for (const auto& a : args) line += " " + a;
    std::vector<std::string> out{"generated by sesqui " + std::string(kVersion), "command: " + line};
    if (order) out.push_back("truncation order K = " + std::to_string(*order));
    return out;
}

std::int64_t parse_int(const std::string& s, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

std::vector<std::size_t> parse_word(const std::string& text) {
    std::vector<std::size_t> word;
    if (text.empty()) return word;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::int64_t i = parse_int(item, "mutation index");
        if (i < 1) throw DomainError("mutation indices are 1-based, got " + item);
        word.push_back(static_cast<std::size_t>(i));
    }
    return word;
}

// ---------------------------------------------------------------- scatter

Output cmd_scatter(const Globals& g, const std::vector<std::string>& ms, const std::vector<int>& ks,
                   const std::vector<std::string>& args) {
    require_format(g, {"text", "json", "svg"}, "scatter");
    const int K = g.order.value_or(8);
    if (K < 2) throw DomainError("scatter: --order must be >= 2");
    if (ms.empty()) throw DomainError("scatter: at least one --m is required");
    std::vector<LatticeVector> gens;
    for (const auto& m : ms) gens.push_back(parse_vector(m));
    std::vector<int> exps = ks;
    if (exps.empty()) exps.assign(gens.size(), 1);
    if (exps.size() != gens.size()) throw DomainError("scatter: give one --k per --m, or none");

    scattering::CompletionOptions opt;
    opt.term_cap = g.term_cap;
    auto diagram = scattering::ks_complete(scattering::incoming_diagram(K, gens, exps), opt);
    auto spectrum = scattering::ray_spectrum(diagram);

    Output o;
    if (g.format == "json") {
        ordered_json j = scattering::diagram_to_json(diagram);
        j["spectrum"] = scattering::spectrum_to_json(spectrum);
        o.content = dump(j);
    } else if (g.format == "svg") {
        o.content = scattering::diagram_to_svg(diagram, provenance(args, K));
    } else {
        std::ostringstream os;
        os << scattering::diagram_to_text(diagram);
        os << "\nray spectrum (outgoing)\n";
        for (const auto& e : spectrum) {
            os << "  (" << e.direction.str() << ")  t^" << e.t_order << "  " << e.coefficient.fraction_str()
               << "  z^(" << e.monomial.str() << ")\n";
        }
        o.content = os.str();
    }
    return o;
}

// -------------------------------------------------------------- staircase

Output cmd_staircase(const Globals& g, const std::string& a_text, const std::string& range, const std::string& step,
                     int n, const std::string& value, const std::vector<std::string>& args) {
    using namespace staircase;
    if (a_text.empty() == range.empty()) throw DomainError("staircase: give exactly one of --a or --range");
    Output o;
    if (!a_text.empty()) {
        require_format(g, {"text", "json"}, "staircase");
        const Rational a = Rational::parse(a_text);
        if (a < Rational(1)) throw DomainError("staircase: a must be >= 1");
        const StaircaseValue un = mcduff_schlenk_value(a);
        if (value == "unstabilized" && un.kind == StaircaseValue::Kind::Unspecified) {
            throw DomainError("staircase: no formula for the unstabilized function at a = " + a.fraction_str() +
                              " (transitional window 7 < a < 289/36)");
        }
        const Rational st = stabilized_value(a, n);
        const Rational hind = hind_capacity(a);
        if (value != "all") {
            const std::string v = value == "unstabilized" ? un.str()
                                  : value == "stabilized" ? st.fraction_str()
                                  : value == "hind"       ? hind.fraction_str()
                                                          : StaircaseValue::sqrt(a).str();
            if (g.format == "json") {
                ordered_json j;
                j["a"] = a.fraction_str();
                j[value] = v;
                o.content = dump(j);
            } else {
                o.content = v + "\n";
            }
            return o;
        }
        const int vs_volume = -compare_sqrt(a, st); // sign of stabilized - sqrt(a)
        const char* rel = vs_volume < 0 ? "below" : vs_volume > 0 ? "above" : "equal";
        if (g.format == "json") {
            ordered_json j;
            j["a"] = a.fraction_str();
            j["N"] = n;
            j["unstabilized"] = un.str();
            j["stabilized"] = st.fraction_str();
            j["hind"] = hind.fraction_str();
            j["volume"] = StaircaseValue::sqrt(a).str();
            j["exceeds_tau4"] = curves::exceeds_tau4(a);
            j["stabilized_vs_volume"] = rel;
            o.content = dump(j);
        } else {
            std::ostringstream os;
            os << "a            = " << a.fraction_str() << "\n";
            os << "unstabilized = " << un.str() << "\n";
            os << "stabilized   = " << st.fraction_str() << "  (N = " << n << ")\n";
            os << "hind         = " << hind.fraction_str() << "\n";
            os << "volume       = " << StaircaseValue::sqrt(a).str() << "\n";
            os << "stabilized is " << rel << " the volume bound\n";
            o.content = os.str();
        }
        return o;
    }

    require_format(g, {"text", "csv", "json", "svg"}, "staircase");
    const auto colon = range.find(':');
    if (colon == std::string::npos) throw ParseError("staircase: --range must look like lo:hi");
    const Rational lo = Rational::parse(range.substr(0, colon));
    const Rational hi = Rational::parse(range.substr(colon + 1));
    if (g.format == "svg") {
        o.content = staircase_svg(lo, hi, provenance(args, std::nullopt));
        return o;
    }
    const auto rows = sample_grid(lo, hi, Rational::parse(step));
    if (g.format == "json") {
        o.content = dump(samples_to_json(rows));
    } else if (g.format == "csv") {
        o.content = samples_to_csv(rows);
    } else {
        std::ostringstream os;
        os << "a          unstabilized  stabilized  hind\n";
        for (const auto& r : rows) {
            std::string cols[3] = {r.a.fraction_str(), r.unstabilized.str(), r.stabilized.fraction_str()};
            const std::size_t widths[3] = {11, 14, 12};
            for (int i = 0; i < 3; ++i) {
                os << cols[i] << std::string(cols[i].size() < widths[i] ? widths[i] - cols[i].size() : 1, ' ');
            }
            os << r.hind.fraction_str() << "\n";
        }
        o.content = os.str();
    }
    return o;
}

// --------------------------------------------------------------- classify

Output cmd_classify(const Globals& g, std::int64_t p, std::int64_t q) {
    require_format(g, {"text", "json"}, "classify");
    const auto r = curves::classify_theorem_c(p, q);
    Output o;
    if (g.format == "json") {
        ordered_json j;
        j["p"] = r.p;
        j["q"] = r.q;
        j["verdict"] = curves::to_string(r.verdict);
        j["k"] = r.k ? ordered_json(*r.k) : ordered_json(nullptr);
        j["diophantine"] = bigint_to_json(r.diophantine);
        j["divisible_by_3"] = r.divisible_by_3;
        j["coprime"] = r.coprime;
        j["realizable"] = r.realizable();
        o.content = dump(j);
    } else {
        std::ostringstream os;
        os << "(p, q)      = (" << r.p << ", " << r.q << ")\n";
        os << "verdict     = " << r.verdict_str() << "\n";
        os << "diophantine = " << r.diophantine.get_str() << "\n";
        os << "3 | p+q     = " << (r.divisible_by_3 ? "yes" : "no") << "\n";
        o.content = os.str();
    }
    return o;
}

// ----------------------------------------------------------------- mutate

Output cmd_mutate(const Globals& g, const std::string& model_text, const std::string& word_text, bool compare,
                  bool unordered, std::optional<int> depth, const std::vector<std::string>& args) {
    const toric::ToricModel model = toric::make_model(parse_vector_list(model_text));
    Output o;
    if (depth) {
        require_format(g, {"text", "json", "dot"}, "mutate");
        if (*depth < 0) throw DomainError("mutate: --orbit-depth must be >= 0");
        const auto orbit = toric::mutation_orbit(model, *depth);
        if (g.format == "json") {
            ordered_json j;
            j["seed"] = model.str();
            j["depth"] = *depth;
            auto body = toric::orbit_to_json(orbit);
            j["nodes"] = body["nodes"];
            j["edges"] = body["edges"];
            o.content = dump(j);
        } else if (g.format == "dot") {
            o.content = toric::orbit_to_dot(orbit, provenance(args, std::nullopt));
        } else {
            std::ostringstream os;
            for (std::size_t i = 0; i < orbit.nodes.size(); ++i) {
                const auto& node = orbit.nodes[i];
                os << i << "  " << node.model.str() << "  word=" << (node.word.empty() ? "-" : toric::format_word(node.word))
                   << "\n";
            }
            o.content = os.str();
        }
        return o;
    }

    require_format(g, {"text", "json"}, "mutate");
    const auto word = parse_word(word_text);
    const toric::ToricModel result = toric::mutate_word(model, word);
    std::optional<std::optional<IntMatrix2>> cmp;
    if (compare) cmp = toric::gl2z_equivalent(model, result, !unordered);
    if (g.format == "json") {
        ordered_json j;
        j["model"] = model.str();
        j["word"] = word;
        j["result"] = result.str();
        if (cmp) {
            ordered_json c;
            c["ordered"] = !unordered;
            c["equivalent"] = cmp->has_value();
            c["matrix"] = cmp->has_value() ? ordered_json(cmp->value().str()) : ordered_json(nullptr);
            j["comparison"] = c;
        }
        o.content = dump(j);
    } else {
        std::ostringstream os;
        os << result.str() << "\n";
        if (cmp) {
            if (*cmp) {
                os << "equivalent to " << model.str() << " via " << (*cmp)->str() << "\n";
            } else {
                os << "not equivalent to " << model.str() << (unordered ? "" : " (ordered)") << "\n";
            }
        }
        o.content = os.str();
    }
    return o;
}

// ----------------------------------------------------------------- verify

Output cmd_verify(const Globals& g, std::int64_t pair_bound, const std::string& sign, bool corrupt,
                  std::ostream& err) {
    require_format(g, {"text", "json"}, "verify");
    curves::PipelineOptions opt;
    opt.order = g.order.value_or(12);
    opt.term_cap = g.term_cap;
    opt.pair_bound = pair_bound;
    opt.sign = sign == "as-printed" ? curves::WSign::AsPrinted : curves::WSign::Flipped;
    if (corrupt) {
        opt.classifier = [](std::int64_t p, std::int64_t q) {
            auto r = curves::classify_theorem_c(p, q);
            if (r.p == 8 && r.q == 1) r.verdict = curves::Verdict::NotRealizable;
            return r;
        };
    }
    const auto report = curves::verify_theorem_c_pipeline(opt);
    Output o;
    o.content = g.format == "json" ? dump(curves::pipeline_report_to_json(report))
                                   : curves::pipeline_report_to_text(report);
    if (!report.agreement) {
        o.status = kDisagreement;
        err << "disagreement on pairs:";
        for (const auto& r : report.disagreements()) err << " {" << r.p << "," << r.q << "}";
        err << "\n";
    }
    return o;
}

// Lets "--m -1,-3" reach the option parser as a value rather than a flag.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
    static const std::set<std::string> vector_options{"--m", "--model"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (vector_options.count(args[i]) && i + 1 < args.size() && args[i + 1].size() > 1 &&
            args[i + 1][0] == '-' && (std::isdigit(static_cast<unsigned char>(args[i + 1][1])) != 0)) {
            out.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact scattering diagrams, toric mutations and ellipsoid embedding numerics", "sesqui"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "svg", "dot"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
    app.add_option("--order", g.order, "Truncation order K");
    app.add_option("--term-cap", g.term_cap, "Abort completion beyond this many label terms")->capture_default_str();

    auto* scatter = app.add_subcommand("scatter", "Kontsevich-Soibelman completion of incoming walls");
    std::vector<std::string> ms;
    std::vector<int> ks;
    scatter->add_option("--m", ms, "Primitive initial direction a,b (repeatable)")->required();
    scatter->add_option("--k", ks, "Exponent k_s >= 1 for each --m (default 1)");

    auto* stair = app.add_subcommand("staircase", "Ellipsoid embedding functions");
    std::string a_text, range, step = "1/8";
    int n = 1;
    std::string value = "all";
    stair->add_option("--a", a_text, "Point a = p/q");
    stair->add_option("--value", value, "Single quantity to print at --a")
        ->check(CLI::IsMember({"all", "unstabilized", "stabilized", "hind", "volume"}))
        ->capture_default_str();
    stair->add_option("--range", range, "Sample range lo:hi");
    stair->add_option("--step", step, "Sample step p/q")->capture_default_str();
    stair->add_option("--n", n, "Stabilization dimension N")->capture_default_str();

    auto* cls = app.add_subcommand("classify", "Index-zero sesquicuspidal classification of (p, q)");
    std::int64_t p = 0, q = 0;
    cls->add_option("--p", p, "Cusp parameter p")->required();
    cls->add_option("--q", q, "Cusp parameter q")->required();

    auto* mut = app.add_subcommand("mutate", "Toric model mutation calculus");
    std::string model_text, word_text;
    bool compare = false, unordered = false;
    std::optional<int> depth;
    mut->add_option("--model", model_text, "Blowup vectors a,b;c,d;...")->required();
    mut->add_option("--word", word_text, "Mutation indices, 1-based, applied left to right");
    mut->add_flag("--compare-original", compare, "Test GL(2,Z) equivalence with the input model");
    mut->add_flag("--unordered", unordered, "Allow a permutation of the vectors when comparing");
    mut->add_option("--orbit-depth", depth, "Explore the mutation orbit to this depth");

    auto* ver = app.add_subcommand("verify", "Cross-check the classification against scattering rays");
    std::int64_t pair_bound = 100;
    std::string sign = "flipped";
    bool corrupt = false;
    ver->add_option("--pair-bound", pair_bound, "Check pairs with p + q up to this bound")->capture_default_str();
    ver->add_option("--w-sign", sign, "Ray-to-pair matching")
        ->check(CLI::IsMember({"flipped", "as-printed"}))
        ->capture_default_str();
    ver->add_flag("--corrupt-classifier", corrupt)->group("");

    std::vector<std::string> args = glue_negative_values(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        Output o;
        if (*scatter) {
            o = cmd_scatter(g, ms, ks, raw_args);
        } else if (*stair) {
            o = cmd_staircase(g, a_text, range, step, n, value, raw_args);
        } else if (*cls) {
            o = cmd_classify(g, p, q);
        } else if (*mut) {
            o = cmd_mutate(g, model_text, word_text, compare, unordered, depth, raw_args);
        } else {
            o = cmd_verify(g, pair_bound, sign, corrupt, err);
        }
        if (g.out_path.empty()) {
            out << o.content;
        } else {
            write_file_atomic(g.out_path, o.content);
        }
        return o.status;
    } catch (const TermCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kTermCap;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const ConventionError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace sesqui::cli
