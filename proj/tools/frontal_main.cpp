// Command-line front end: frontality/corank/wave-front checks, D4 counting,
// Milnor numbers, and batch processing of germ files.
//
// Exit codes: 0 success, 2 input could not be parsed, 3 mathematical
// precondition violated (e.g. corank != 2 for count-d4), 4 infinite D4 count.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frontal/frontal.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInfinite = 4;

struct CommonFlags {
    int order = 12;
    int max_degree = 24;
    std::string routes = "all";
    std::string format = "text";
    bool timings = false;

    frontal::AnalysisOptions to_options() const {
        frontal::AnalysisOptions opts;
        opts.order = order;
        opts.max_degree = max_degree;
        opts.all_routes = (routes != "corollary");
        opts.include_timings = timings;
        return opts;
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--order", flags.order, "truncation order for the frontal coefficients")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-degree", flags.max_degree, "degree bound for colength computations")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--routes", flags.routes, "counting routes: all or corollary")
        ->check(CLI::IsMember({"all", "corollary"}));
    cmd->add_option("--format", flags.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--timings", flags.timings, "include timings (volatile) in the output");
}

void emit(const frontal::AnalysisReport& report, const CommonFlags& flags, std::ostream& os) {
    if (flags.format == "json") {
        os << frontal::to_json(report, flags.timings).dump(2) << "\n";
    } else {
        os << frontal::to_text(report, flags.timings);
    }
}

int run_check(const std::string& path, const CommonFlags& flags) {
    const frontal::GermFile file = frontal::load_germ_file(path);
    const frontal::AnalysisReport report = frontal::analyze_check(file, path, flags.to_options());
    emit(report, flags, std::cout);
    return kExitOk;
}

int run_count(const std::string& path, const CommonFlags& flags) {
    const frontal::GermFile file = frontal::load_germ_file(path);
    const frontal::AnalysisReport report = frontal::analyze_count(file, path, flags.to_options());
    emit(report, flags, std::cout);
    return (report.d4 && !report.d4->finite()) ? kExitInfinite : kExitOk;
}

int run_milnor(const std::string& arg, std::string vars_csv, const CommonFlags& flags) {
    std::string expr = arg;
    if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::istringstream lines(buf.str());
        std::string line;
        expr.clear();
        while (std::getline(lines, line)) {
            const auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = frontal::detail::trim(line);
            if (line.empty()) continue;
            if (line.rfind("vars:", 0) == 0) {
                if (vars_csv.empty()) vars_csv = frontal::detail::trim(line.substr(5));
            } else if (line.rfind("g", 0) == 0 && line.find('=') != std::string::npos) {
                expr = frontal::detail::trim(line.substr(line.find('=') + 1));
            } else {
                expr = line;
            }
        }
        if (expr.empty()) throw frontal::ParseError("no expression found in '" + arg + "'", 0);
    }

    std::vector<std::string> names;
    if (!vars_csv.empty()) {
        names = frontal::detail::split_list(vars_csv, ',');
    } else {
        // Infer variables from the identifiers, in order of first appearance.
        for (std::size_t i = 0; i < expr.size();) {
            const char c = expr[i];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[j])) ||
                                           expr[j] == '_')) {
                    ++j;
                }
                const std::string name = expr.substr(i, j - i);
                if (std::find(names.begin(), names.end(), name) == names.end()) {
                    names.push_back(name);
                }
                i = j;
            } else {
                ++i;
            }
        }
        if (names.empty()) throw frontal::ParseError("no variables found; pass --vars", 0);
    }

    const auto ctx = frontal::make_context(names);
    const frontal::Polynomial g = frontal::parse_polynomial(expr, ctx);
    const frontal::ColengthResult mu = frontal::milnor_number(g, flags.max_degree);

    if (flags.format == "json") {
        frontal::Json j;
        j["input"] = expr;
        j["vars"] = names;
        if (mu.finite()) {
            j["milnor_number"] = mu.value;
        } else {
            j["milnor_number"] = "infinite";
        }
        j["version"] = frontal::kVersion;
        std::cout << j.dump(2) << "\n";
    } else {
        if (mu.finite()) {
            std::cout << "milnor number: " << mu.value << "\n";
        } else {
            std::cout << "milnor number: INFINITE\n";
        }
    }
    return kExitOk;
}

int run_batch(const std::string& dir, const CommonFlags& flags) {
    std::vector<std::string> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".germ") {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end(), [](const std::string& a, const std::string& b) {
        return frontal::basename_of(a) < frontal::basename_of(b);
    });

    frontal::Json out = frontal::Json::array();
    int failures = 0;
    std::ostringstream text;
    for (const auto& path : paths) {
        frontal::Json item;
        item["file"] = frontal::basename_of(path);
        try {
            const frontal::GermFile file = frontal::load_germ_file(path);
            // Run the full pipeline where it applies, the checks otherwise.
            frontal::AnalysisReport report;
            if (file.vars->arity() == 3 &&
                frontal::corank_at_origin(frontal::to_map_germ(file)) == 2) {
                report = frontal::analyze_count(file, path, flags.to_options());
            } else {
                report = frontal::analyze_check(file, path, flags.to_options());
            }
            item["report"] = frontal::to_json(report, flags.timings);
            text << "== " << frontal::basename_of(path) << " ==\n"
                 << frontal::to_text(report, flags.timings) << "\n";
        } catch (const std::exception& e) {
            ++failures;
            item["error"] = e.what();
            text << "== " << frontal::basename_of(path) << " ==\nerror: " << e.what() << "\n\n";
        }
        out.push_back(std::move(item));
    }

    if (flags.format == "json") {
        frontal::Json wrapper;
        wrapper["reports"] = std::move(out);
        wrapper["failures"] = failures;
        wrapper["version"] = frontal::kVersion;
        std::cout << wrapper.dump(2) << "\n";
    } else {
        std::cout << text.str();
        std::cout << "processed " << paths.size() << " file(s), " << failures << " failure(s)\n";
    }
    return failures == 0 ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"frontal: exact analysis of frontal map germs and wave fronts"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("frontal ") + frontal::kVersion);

    CommonFlags check_flags, count_flags, milnor_flags, batch_flags;
    std::string check_path, count_path, milnor_arg, milnor_vars, batch_dir;

    CLI::App* check = app.add_subcommand("check", "frontality, corank and wave-front checks");
    check->add_option("file", check_path, "germ definition file")->required();
    add_common_flags(check, check_flags);

    CLI::App* count = app.add_subcommand("count-d4", "count D4 points of a stable frontal "
                                                     "perturbation (3 source variables)");
    count->add_option("file", count_path, "germ definition file")->required();
    add_common_flags(count, count_flags);

    CLI::App* milnor = app.add_subcommand("milnor", "Milnor number of an isolated singularity");
    milnor->add_option("expr", milnor_arg, "polynomial expression or file")->required();
    milnor->add_option("--vars", milnor_vars, "comma-separated variable list");
    add_common_flags(milnor, milnor_flags);

    CLI::App* batch = app.add_subcommand("batch", "analyze every .germ file in a directory");
    batch->add_option("dir", batch_dir, "directory of germ files")->required();
    add_common_flags(batch, batch_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(check_path, check_flags);
        if (count->parsed()) return run_count(count_path, count_flags);
        if (milnor->parsed()) return run_milnor(milnor_arg, milnor_vars, milnor_flags);
        if (batch->parsed()) return run_batch(batch_dir, batch_flags);
    } catch (const frontal::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const frontal::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
