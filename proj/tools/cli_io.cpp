#include "cli_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lipscope/version.hpp"

namespace lipscope::cli {

namespace {

std::size_t parse_positive(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v <= 0) throw std::invalid_argument(tok);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError("cannot parse " + what + " from \"" + tok + "\"");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

}  // namespace

std::vector<std::size_t> parse_widths(const std::string& text, std::size_t io_dim) {
    if (text.empty()) throw UsageError("empty architecture string");
    if (text.find('x') != std::string::npos) {
        const auto parts = split(text, 'x');
        if (parts.size() != 2)
            throw UsageError("architecture shorthand must be WIDTHxDEPTH, got \"" + text + "\"");
        const std::size_t width = parse_positive(parts[0], "width");
        const std::size_t depth = parse_positive(parts[1], "depth");
        std::vector<std::size_t> widths(depth + 2, width);
        widths.front() = io_dim;
        widths.back() = io_dim;
        return widths;
    }
    std::vector<std::size_t> widths;
    for (const std::string& tok : split(text, ','))
        widths.push_back(parse_positive(tok, "width"));
    if (widths.size() < 2)
        throw UsageError("architecture needs at least input and output widths, got \"" + text +
                         "\"");
    return widths;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    if (text.empty()) throw UsageError("empty size list");
    std::vector<std::size_t> out;
    for (const std::string& tok : split(text, ',')) {
        if (tok.find(':') == std::string::npos) {
            out.push_back(parse_positive(tok, "value"));
            continue;
        }
        const auto parts = split(tok, ':');
        if (parts.size() != 3)
            throw UsageError("range must be FIRST:LAST:STEP, got \"" + tok + "\"");
        const std::size_t first = parse_positive(parts[0], "range start");
        const std::size_t last = parse_positive(parts[1], "range end");
        const std::size_t step = parse_positive(parts[2], "range step");
        if (last < first) throw UsageError("range end below start in \"" + tok + "\"");
        for (std::size_t v = first; v <= last; v += step) out.push_back(v);
    }
    return out;
}

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string iso_timestamp_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json make_metadata(const std::string& command,
                                     const nlohmann::ordered_json& config, std::uint64_t seed,
                                     bool reproducible) {
    nlohmann::ordered_json meta;
    meta["tool"] = "lipscope";
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["seed"] = seed;
    meta["config"] = config;
    if (!reproducible) meta["generated_at"] = iso_timestamp_utc();
    return meta;
}

namespace {

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open \"" + path + "\" for writing");
    out << text;
    if (!out) throw UsageError("failed writing \"" + path + "\"");
}

}  // namespace

void write_csv(const std::string& path, const nlohmann::ordered_json& metadata,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::string text = "# " + metadata.dump() + "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text += ',';
        text += header[i];
    }
    text += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            text += row[i];
        }
        text += '\n';
    }
    write_text(path, text);
}

void write_json(const std::string& path, const nlohmann::ordered_json& doc) {
    write_text(path, doc.dump(2) + "\n");
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open \"" + path + "\"");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("cannot parse \"" + path + "\": " + e.what());
    }
}

Matrix read_matrix_file(const std::string& path) {
    const nlohmann::json j = read_json_file(path);
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw UsageError("\"" + path + "\" must hold a 2D array of numbers");
    const std::size_t rows = j.size();
    const std::size_t cols = j.front().size();
    std::vector<double> entries;
    entries.reserve(rows * cols);
    for (const auto& rowj : j) {
        if (!rowj.is_array() || rowj.size() != cols)
            throw UsageError("\"" + path + "\" rows must all have " + std::to_string(cols) +
                             " entries");
        for (const auto& e : rowj) {
            if (!e.is_number()) throw UsageError("\"" + path + "\" entries must be numbers");
            entries.push_back(e.get<double>());
        }
    }
    try {
        return Matrix(rows, cols, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw UsageError("\"" + path + "\": " + e.what());
    }
}

Network read_network_file(const std::string& path) {
    nlohmann::json j = read_json_file(path);
    if (j.is_object() && j.contains("network")) j = j["network"];
    try {
        return network_from_json(j);
    } catch (const std::invalid_argument& e) {
        throw UsageError("\"" + path + "\": " + e.what());
    }
}

std::uint64_t default_master_seed() {
    const char* env = std::getenv("LIPSCOPE_SEED");
    if (!env || !*env) return 0;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(env, &pos);
        if (pos != std::string(env).size()) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("LIPSCOPE_SEED must be an unsigned integer, got \"") + env +
                         "\"");
    }
}

}  // namespace lipscope::cli
