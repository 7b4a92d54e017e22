#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frontal/corank2.hpp"
#include "frontal/map_germ.hpp"
#include "frontal/parser.hpp"

namespace frontal {

// Line-oriented germ definition:
//
//   # comment
//   vars: u, v, w
//   split: u | v w
//   f1 = u
//   f2 = v*w
//   ...
//
// `split` lists the unfolding variables before the bar and the two
// distinguished variables after it; it may be omitted, in which case the last
// two declared variables play v and w. Optional keys `order`, `max-degree`
// and `routes` override the analysis defaults for this file.
struct GermFile {
    VarContextPtr vars;
    std::vector<Polynomial> components;
    std::optional<std::vector<std::string>> split_u;
    std::optional<std::pair<std::string, std::string>> split_vw;
    std::optional<int> order;
    std::optional<int> max_degree;
    std::optional<std::string> routes;
    std::string raw;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace detail

inline GermFile parse_germ_file(const std::string& text) {
    GermFile file;
    file.raw = text;

    std::vector<std::pair<int, Polynomial>> numbered;
    std::optional<std::string> split_line;
    std::vector<std::pair<std::size_t, std::string>> component_lines;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> var_names;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        const auto colon = line.find(':');
        const auto equals = line.find('=');
        if (colon != std::string::npos && (equals == std::string::npos || colon < equals)) {
            const std::string key = detail::trim(line.substr(0, colon));
            const std::string value = detail::trim(line.substr(colon + 1));
            if (key == "vars") {
                var_names = detail::split_list(value, ',');
                if (var_names.empty()) throw ParseError("empty 'vars' declaration", lineno);
            } else if (key == "split") {
                split_line = value;
            } else if (key == "order") {
                try {
                    file.order = std::stoi(value);
                } catch (const std::exception&) {
                    throw ParseError("bad integer for 'order'", lineno);
                }
            } else if (key == "max-degree" || key == "max_degree") {
                try {
                    file.max_degree = std::stoi(value);
                } catch (const std::exception&) {
                    throw ParseError("bad integer for 'max-degree'", lineno);
                }
            } else if (key == "routes") {
                file.routes = value;
            } else {
                throw ParseError("unknown key '" + key + "'", lineno);
            }
            continue;
        }
        if (equals != std::string::npos) {
            component_lines.emplace_back(lineno, line);
            continue;
        }
        throw ParseError("unrecognized line '" + line + "'", lineno);
    }

    if (var_names.empty()) throw ParseError("missing 'vars' declaration", 0);
    file.vars = make_context(var_names);

    for (const auto& [ln, cl] : component_lines) {
        const auto equals = cl.find('=');
        const std::string key = detail::trim(cl.substr(0, equals));
        const std::string expr = detail::trim(cl.substr(equals + 1));
        if (key.size() < 2 || key[0] != 'f') {
            throw ParseError("component lines look like 'fN = ...', got '" + key + "'", ln);
        }
        int index = 0;
        try {
            index = std::stoi(key.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad component name '" + key + "'", ln);
        }
        try {
            numbered.emplace_back(index, parse_polynomial(expr, file.vars));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(ln) + ": " + e.what(), ln);
        }
    }

    std::sort(numbered.begin(), numbered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < numbered.size(); ++i) {
        if (numbered[i].first != static_cast<int>(i) + 1) {
            throw ParseError("components must be numbered consecutively from f1", 0);
        }
        file.components.push_back(std::move(numbered[i].second));
    }
    if (file.components.size() != file.vars->arity() + 1) {
        throw ParseError("expected " + std::to_string(file.vars->arity() + 1) +
                             " components for " + std::to_string(file.vars->arity()) +
                             " variables, got " + std::to_string(file.components.size()),
                         0);
    }

    if (split_line) {
        const auto bar = split_line->find('|');
        if (bar == std::string::npos) throw ParseError("split needs a '|'", 0);
        const auto u_part = detail::split_ws(detail::trim(split_line->substr(0, bar)));
        const auto vw_part = detail::split_ws(detail::trim(split_line->substr(bar + 1)));
        if (vw_part.size() != 2) {
            throw ParseError("split must name exactly two distinguished variables", 0);
        }
        std::vector<std::string> seen;
        for (const auto& name : u_part) seen.push_back(name);
        for (const auto& name : vw_part) seen.push_back(name);
        if (seen.size() != file.vars->arity()) {
            throw ParseError("split must mention every declared variable once", 0);
        }
        for (const auto& name : seen) {
            if (!file.vars->index_of(name)) {
                throw ParseError("split names unknown variable '" + name + "'", 0);
            }
            if (std::count(seen.begin(), seen.end(), name) != 1) {
                throw ParseError("split mentions '" + name + "' more than once", 0);
            }
        }
        file.split_u = u_part;
        file.split_vw = std::make_pair(vw_part[0], vw_part[1]);
    }

    return file;
}

inline GermFile load_germ_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_germ_file(buffer.str());
}

inline MapGerm to_map_germ(const GermFile& file) { return MapGerm(file.vars, file.components); }

// Reorder the source context to match the declared split (u-vars first, then
// v, w) so normalization keeps the author's roles; without a split the
// declared order already ends in the two distinguished variables.
inline MapGerm to_map_germ_split_order(const GermFile& file) {
    if (!file.split_vw) return to_map_germ(file);
    std::vector<std::string> names;
    if (file.split_u) names = *file.split_u;
    names.push_back(file.split_vw->first);
    names.push_back(file.split_vw->second);
    const VarContextPtr ctx = make_context(names);
    std::map<std::string, Polynomial> rename;
    for (std::size_t i = 0; i < file.vars->arity(); ++i) {
        rename.emplace(file.vars->name(i), Polynomial::variable(ctx, file.vars->name(i)));
    }
    std::vector<Polynomial> comps;
    comps.reserve(file.components.size());
    for (const auto& c : file.components) comps.push_back(substitute(c, rename, ctx));
    return MapGerm(ctx, std::move(comps));
}

} // namespace frontal
