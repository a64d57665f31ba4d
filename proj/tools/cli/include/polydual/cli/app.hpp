#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace polydual::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Malformed request or payload; maps to exit status 2.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Json, Svg };

struct JobRequest {
    std::string command;
    Json payload = Json::object();
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::optional<std::string> output_path;
    OutputFormat format = OutputFormat::Json;
};

struct JobResult {
    int exit_code = kExitOk;
    std::string body;  // newline-terminated JSON or SVG document
    OutputFormat format = OutputFormat::Json;
};

const std::vector<std::string>& command_names();

/// Reads {"command", "payload", "tol", "seed", "output_path", "format"}.
/// Throws SchemaError on unknown commands or ill-typed fields.
JobRequest parse_request(const Json& j);

/// Dispatches one request. Module errors become an {"error": {...}} body with
/// exit status 1 and schema problems exit status 2; nothing is thrown.
JobResult run(const JobRequest& request);

/// Full command-line entry point: parses flags or --request, runs the job,
/// writes the body to --out or `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Numbers print as the shortest decimal that round-trips (at most 17
/// significant digits); the body always ends with a newline.
std::string dump(const Json& j);

}  // namespace polydual::cli
