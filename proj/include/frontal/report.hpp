#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "frontal/counting.hpp"
#include "frontal/germ_file.hpp"
#include "frontal/version.hpp"

namespace frontal {

using Json = nlohmann::ordered_json;

struct AnalysisOptions {
    int order = 12;
    int max_degree = 24;
    bool all_routes = true;
    bool include_timings = false;
};

// Everything the CLI reports for one input. Identical input and options give
// a byte-identical structured report; timings live under a separate volatile
// key that is only emitted on request.
struct AnalysisReport {
    std::string input_name; // basename of the input file
    std::string digest;     // fnv1a-64 of the raw file bytes
    FrontalityVerdict frontality;
    int corank = 0;
    std::optional<WavefrontCheck> wavefront;
    std::optional<std::string> wavefront_note;
    std::optional<D4CountReport> d4;
    bool normalization_identity = true;
    double elapsed_ms = 0.0;
};

inline std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

inline std::string basename_of(const std::string& path) {
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

namespace detail {

inline AnalysisOptions merge_file_options(const GermFile& file, AnalysisOptions opts) {
    if (file.order) opts.order = *file.order;
    if (file.max_degree) opts.max_degree = *file.max_degree;
    if (file.routes) opts.all_routes = (*file.routes != "corollary");
    return opts;
}

inline std::optional<NormalizationResult> try_normalize(const GermFile& file) {
    const MapGerm germ = to_map_germ_split_order(file);
    if (corank_at_origin(germ) != 2 || germ.source_dim() < 2) return std::nullopt;
    return normalize_corank2(germ);
}

} // namespace detail

// Frontality, corank and (for corank-2 inputs in reach of the normal form)
// the wave-front criterion; no counting routes.
inline AnalysisReport analyze_check(const GermFile& file, const std::string& input_name,
                                    AnalysisOptions opts = {}) {
    opts = detail::merge_file_options(file, opts);
    const auto start = std::chrono::steady_clock::now();

    AnalysisReport report;
    report.input_name = basename_of(input_name);
    report.digest = fnv1a64(file.raw);

    const MapGerm germ = to_map_germ(file);
    report.frontality = frontality_check(germ);
    report.corank = corank_at_origin(germ);

    if (report.corank == 2 && germ.source_dim() >= 2) {
        try {
            const NormalizationResult normal = normalize_corank2(to_map_germ_split_order(file));
            report.normalization_identity =
                normal.source_change.is_identity() && normal.target_change.is_identity();
            const FrontalCoefficients coeffs = recover_alpha_beta(normal.germ, opts.order);
            report.wavefront = wavefront_check(normal.germ, coeffs);
        } catch (const DomainError& e) {
            report.wavefront_note = e.what();
        }
    } else {
        report.wavefront_note = "corank-2 criterion not applicable";
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// The full counting pipeline. Requires three source variables and corank 2;
// an Infinite corollary route is retried once with the degree bound doubled
// before being reported as infinite.
inline AnalysisReport analyze_count(const GermFile& file, const std::string& input_name,
                                    AnalysisOptions opts = {}) {
    opts = detail::merge_file_options(file, opts);
    const auto start = std::chrono::steady_clock::now();

    if (file.vars->arity() != 3) {
        throw DomainError("count-d4 requires exactly three source variables");
    }

    AnalysisReport report;
    report.input_name = basename_of(input_name);
    report.digest = fnv1a64(file.raw);

    const MapGerm germ = to_map_germ(file);
    report.frontality = frontality_check(germ);
    report.corank = corank_at_origin(germ);
    if (report.corank != 2) {
        throw DomainError("count-d4 requires corank 2 at the origin, got corank " +
                          std::to_string(report.corank));
    }

    const NormalizationResult normal = normalize_corank2(to_map_germ_split_order(file));
    report.normalization_identity =
        normal.source_change.is_identity() && normal.target_change.is_identity();

    CountOptions copts{opts.order, opts.max_degree, opts.all_routes};
    D4CountReport d4 = count_d4(normal.germ, copts);
    if (!d4.finite()) {
        copts.max_degree = 2 * opts.max_degree;
        d4 = count_d4(normal.germ, copts);
        if (!d4.finite()) {
            d4.warnings.push_back("degree bound " + std::to_string(copts.max_degree) +
                                  " reached (after one automatic retry with a doubled bound)");
        }
    }
    report.wavefront = d4.wavefront;
    report.d4 = std::move(d4);

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace detail {

inline Json colength_json(const ColengthResult& r) {
    Json j;
    j["status"] = to_string(r.status);
    if (r.finite()) {
        j["value"] = r.value;
        j["stabilization_degree"] = r.stabilization_degree;
    } else if (r.status == ColengthStatus::Infinite) {
        j["bound"] = r.stabilization_degree;
    }
    return j;
}

inline Json agreement_json(const D4CountReport& d4) {
    Json j;
    if (d4.agree_full) j["corollary_vs_full_minors"] = *d4.agree_full;
    if (d4.agree_theorem) j["corollary_vs_theorem_derivation"] = *d4.agree_theorem;
    if (d4.agree_j22) j["corollary_vs_j22"] = *d4.agree_j22;
    if (d4.agree_staircase) j["corollary_vs_staircase"] = *d4.agree_staircase;
    j["all"] = d4.all_computed_routes_agree();
    return j;
}

} // namespace detail

inline Json to_json(const AnalysisReport& report, bool include_timings = false) {
    Json j;
    j["input"] = Json{{"file", report.input_name}, {"digest", report.digest}};

    Json frontality;
    frontality["status"] = to_string(report.frontality.status);
    if (report.frontality.frontal() && report.frontality.generator) {
        frontality["generator"] = report.frontality.generator->str();
    }
    if (!report.frontality.note.empty()) frontality["note"] = report.frontality.note;
    j["frontality"] = std::move(frontality);

    j["corank"] = report.corank;

    if (report.wavefront) {
        Json wf;
        wf["holds"] = report.wavefront->holds;
        wf["M0"] = Json::array({Json::array({rational_to_string(report.wavefront->m0[0][0]),
                                             rational_to_string(report.wavefront->m0[0][1])}),
                                Json::array({rational_to_string(report.wavefront->m0[1][0]),
                                             rational_to_string(report.wavefront->m0[1][1])})});
        wf["det"] = rational_to_string(report.wavefront->det);
        j["wavefront"] = std::move(wf);
    } else {
        Json wf;
        wf["holds"] = nullptr;
        if (report.wavefront_note) wf["note"] = *report.wavefront_note;
        j["wavefront"] = std::move(wf);
    }

    if (report.d4) {
        const D4CountReport& d4 = *report.d4;
        Json dj;
        if (d4.finite()) {
            dj["count"] = d4.count();
        } else {
            dj["count"] = "infinite";
        }
        Json routes;
        routes["corollary"] = detail::colength_json(d4.route_corollary);
        if (d4.route_full) routes["full_minors"] = detail::colength_json(*d4.route_full);
        if (d4.route_theorem_derivation) {
            routes["theorem_derivation"] = detail::colength_json(*d4.route_theorem_derivation);
        }
        if (d4.route_theorem_statement) {
            routes["theorem_statement"] = detail::colength_json(*d4.route_theorem_statement);
        }
        if (d4.route_j22) routes["j22"] = detail::colength_json(*d4.route_j22);
        if (d4.staircase) {
            Json sc;
            sc["status"] = d4.staircase->finite ? "finite" : "infinite";
            if (d4.staircase->finite) sc["value"] = d4.staircase->value;
            routes["staircase"] = std::move(sc);
        }
        dj["routes"] = std::move(routes);
        dj["agreement"] = detail::agreement_json(d4);
        dj["warnings"] = d4.warnings;
        j["d4"] = std::move(dj);
    }

    if (!report.normalization_identity) j["normalization"] = "linear changes applied";
    j["version"] = kVersion;
    if (include_timings) j["timings"] = Json{{"elapsed_ms", report.elapsed_ms}};
    return j;
}

inline std::string to_text(const AnalysisReport& report, bool include_timings = false) {
    std::ostringstream os;
    os << "input: " << report.input_name << " (digest " << report.digest << ")\n";
    os << "frontality: " << to_string(report.frontality.status);
    if (report.frontality.frontal() && report.frontality.generator) {
        os << " (generator: " << report.frontality.generator->str() << ")";
    }
    if (!report.frontality.note.empty()) os << " [" << report.frontality.note << "]";
    os << "\n";
    os << "corank: " << report.corank << "\n";
    if (report.wavefront) {
        const auto& wf = *report.wavefront;
        os << "wavefront: " << (wf.holds ? "yes" : "no") << " (criterion det M(0) != 0; M(0) = [["
           << rational_to_string(wf.m0[0][0]) << ", " << rational_to_string(wf.m0[0][1]) << "], ["
           << rational_to_string(wf.m0[1][0]) << ", " << rational_to_string(wf.m0[1][1])
           << "]], det = " << rational_to_string(wf.det) << ")\n";
    } else {
        os << "wavefront: n/a";
        if (report.wavefront_note) os << " (" << *report.wavefront_note << ")";
        os << "\n";
    }
    if (report.d4) {
        const D4CountReport& d4 = *report.d4;
        if (d4.finite()) {
            os << "d4 count: " << d4.count() << "\n";
        } else {
            os << "d4 count: INFINITE\n";
        }
        auto route_line = [&](const char* name, const ColengthResult& r) {
            os << "  route " << name << ": " << to_string(r.status);
            if (r.finite()) {
                os << " value=" << r.value << " (stabilized at degree " << r.stabilization_degree
                   << ")";
            }
            os << "\n";
        };
        route_line("corollary", d4.route_corollary);
        if (d4.route_full) route_line("full_minors", *d4.route_full);
        if (d4.route_theorem_derivation) {
            route_line("theorem_derivation", *d4.route_theorem_derivation);
        }
        if (d4.route_theorem_statement) route_line("theorem_statement", *d4.route_theorem_statement);
        if (d4.route_j22) route_line("j22", *d4.route_j22);
        if (d4.staircase) {
            os << "  route staircase: " << (d4.staircase->finite ? "finite" : "infinite");
            if (d4.staircase->finite) os << " value=" << d4.staircase->value;
            os << "\n";
        }
        os << "agreement: " << (d4.all_computed_routes_agree() ? "yes" : "NO") << "\n";
        for (const auto& w : d4.warnings) os << "warning: " << w << "\n";
    }
    if (!report.normalization_identity) os << "normalization: linear changes applied\n";
    if (include_timings) os << "elapsed: " << report.elapsed_ms << " ms\n";
    return os.str();
}

} // namespace frontal
