#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lipscope/matrix.hpp"
#include "lipscope/network.hpp"

namespace lipscope::cli {

// Input problems (bad paths, malformed files, unparsable values) that should
// exit with the usage code rather than the numeric-failure code.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// "2,300,2" -> explicit widths; "300x1" -> one hidden block of width 300,
// depth 1, with io_dim on both ends.
std::vector<std::size_t> parse_widths(const std::string& text, std::size_t io_dim);

// "10,25,50", "10:100:10" (inclusive, positive step) or a single value.
std::vector<std::size_t> parse_size_list(const std::string& text);

std::string format_double(double v);  // 17 significant digits, round-trip exact

std::string iso_timestamp_utc();

// Resolved run description stamped into every output file.
nlohmann::ordered_json make_metadata(const std::string& command,
                                     const nlohmann::ordered_json& config, std::uint64_t seed,
                                     bool reproducible);

// Writes CSV with the metadata comment line first, then the header, then
// rows; LF endings.  Opens `path`, or stdout when path is "-".
void write_csv(const std::string& path, const nlohmann::ordered_json& metadata,
               const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

void write_json(const std::string& path, const nlohmann::ordered_json& doc);

nlohmann::json read_json_file(const std::string& path);

// 2D JSON array -> Matrix.
Matrix read_matrix_file(const std::string& path);

// Accepts either the raw network schema or a {"meta": ..., "network": ...}
// wrapper as written by train-study.
Network read_network_file(const std::string& path);

std::uint64_t default_master_seed();  // LIPSCOPE_SEED, or 0 when unset

}  // namespace lipscope::cli
