#include "polydual/cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "commands.hpp"
#include "payload.hpp"
#include "polydual/errors.hpp"

namespace polydual::cli {

namespace {

using namespace detail;

Json error_body(std::string_view code, const std::string& message, const ErrorContext& context = {}) {
    Json ctx = Json::object();
    for (const auto& [name, value] : context) ctx[name] = value;
    return Json{{"error", {{"code", std::string(code)}, {"message", message}, {"context", ctx}}}};
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "svg") return OutputFormat::Svg;
    throw SchemaError("format must be json or svg");
}

std::string scene_for(const JobRequest& req) {
    if (req.command == "render") {
        if (!req.payload.is_object() || !req.payload.contains("scene") || !req.payload["scene"].is_string()) {
            throw SchemaError("render needs a string \"scene\" (dual, two-points or pompeiu)");
        }
        return req.payload["scene"].get<std::string>();
    }
    if (req.command == "dual" || req.command == "reconstruct") return "dual";
    if (req.command == "two-points" || req.command == "pompeiu") return req.command;
    throw SchemaError("command " + req.command + " has no SVG form");
}

Json dispatch(const JobRequest& req) {
    if (req.command == "averages") return cmd_averages(req);
    if (req.command == "dual") return cmd_dual(req);
    if (req.command == "reconstruct") return cmd_reconstruct(req);
    if (req.command == "pompeiu") return cmd_pompeiu(req);
    if (req.command == "two-points") return cmd_two_points(req);
    if (req.command == "verify") return cmd_verify(req);
    throw SchemaError("command " + req.command + " has no JSON form; use --format svg");
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"averages", "dual",   "reconstruct", "pompeiu",
                                                "two-points", "verify", "render"};
    return names;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

JobRequest parse_request(const Json& j) {
    if (!j.is_object()) throw SchemaError("request must be a JSON object");
    JobRequest req;
    if (!j.contains("command") || !j["command"].is_string()) throw SchemaError("request needs a string \"command\"");
    req.command = j["command"].get<std::string>();
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), req.command) == names.end()) {
        throw SchemaError("unknown command \"" + req.command + "\"");
    }
    if (j.contains("payload")) {
        if (!j["payload"].is_object()) throw SchemaError("\"payload\" must be an object");
        req.payload = j["payload"];
    }
    if (j.contains("tol")) {
        if (!j["tol"].is_number() || !(j["tol"].get<double>() >= 0.0)) {
            throw SchemaError("\"tol\" must be a nonnegative number");
        }
        req.tol = j["tol"].get<double>();
    }
    if (j.contains("seed")) {
        const Json& s = j["seed"];
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0)) {
            throw SchemaError("\"seed\" must be a nonnegative integer");
        }
        req.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output_path")) {
        if (!j["output_path"].is_string()) throw SchemaError("\"output_path\" must be a string");
        req.output_path = j["output_path"].get<std::string>();
    }
    if (j.contains("format")) {
        if (!j["format"].is_string()) throw SchemaError("\"format\" must be a string");
        req.format = parse_format(j["format"].get<std::string>());
    }
    if (req.command == "render") req.format = OutputFormat::Svg;
    return req;
}

JobResult run(const JobRequest& req) {
    JobResult result;
    result.format = req.format;
    try {
        if (req.format == OutputFormat::Svg) {
            result.body = render_svg(scene_for(req), req);
        } else {
            result.body = dump(dispatch(req));
        }
    } catch (const SchemaError& e) {
        result.exit_code = kExitUsage;
        result.format = OutputFormat::Json;
        result.body = dump(error_body("SCHEMA", e.what()));
    } catch (const Error& e) {
        result.exit_code = kExitDomain;
        result.format = OutputFormat::Json;
        result.body = dump(error_body(code_name(e.code()), e.what(), e.context()));
    }
    return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regular polygons from point-to-vertex distances", "polydual"};
    std::string command;
    std::string request_path;
    std::string distances;
    std::vector<std::string> polygons;
    std::string point;
    std::string direction;
    std::string scene;
    std::string format;
    std::string out_path;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    long long anchor_index = 0;
    long long max_n = 0;
    long long instances = 0;
    long long n_min = 0;
    long long n_max = 0;
    long long grid = 0;
    bool mirror = false;

    app.add_option("command", command, "averages | dual | reconstruct | pompeiu | two-points | verify | render")
        ->check(CLI::IsMember(command_names()));
    app.add_option("--request", request_path, "JSON job file {command, payload, tol, seed}");
    app.add_option("--distances", distances, "comma-separated distances d1,...,dn");
    app.add_option("--polygon", polygons, "n,cx,cy,r,phase or a JSON polygon; repeat for two-points");
    app.add_option("--point", point, "observation point x,y or JSON {x, y}");
    app.add_option("--direction", direction, "dual center direction, radians or e.g. 45deg");
    app.add_option("--anchor-index", anchor_index, "1-based vertex whose distance fixes the dual phase");
    app.add_option("--max-n", max_n, "vertex cap for distance input");
    app.add_option("--scene", scene, "render scene: dual | two-points | pompeiu");
    app.add_flag("--mirror", mirror, "also draw the mirror-image dual");
    app.add_option("--instances", instances, "verify: number of random instances");
    app.add_option("--n-min", n_min, "verify: smallest n");
    app.add_option("--n-max", n_max, "verify: largest n");
    app.add_option("--grid", grid, "verify: oracle grid resolution");
    app.add_option("--tol", tol, "tolerance")->capture_default_str();
    app.add_option("--seed", seed, "random seed");
    app.add_option("--out", out_path, "write the result here instead of stdout");
    app.add_option("--format", format, "json | svg")->check(CLI::IsMember({"json", "svg"}));

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    JobResult result;
    try {
        Json request = Json::object();
        if (!request_path.empty()) {
            std::ifstream in(request_path);
            if (!in) throw SchemaError("cannot read request file " + request_path);
            try {
                request = Json::parse(in);
            } catch (const Json::parse_error& e) {
                throw SchemaError(std::string("request file: ") + e.what());
            }
            if (!request.is_object()) throw SchemaError("request must be a JSON object");
        }
        if (!command.empty()) request["command"] = command;
        if (!request.contains("command")) throw SchemaError("no command given");
        Json& payload = request["payload"];
        if (payload.is_null()) payload = Json::object();
        if (!payload.is_object()) throw SchemaError("\"payload\" must be an object");

        if (app.count("--distances")) payload["distances"] = parse_number_list(distances, "--distances");
        if (polygons.size() == 1) payload["polygon"] = parse_polygon_flag(polygons[0]);
        if (polygons.size() > 1) {
            Json arr = Json::array();
            for (const auto& p : polygons) arr.push_back(parse_polygon_flag(p));
            payload["polygons"] = arr;
        }
        if (app.count("--point")) payload["point"] = parse_point_flag(point);
        if (app.count("--direction")) payload["direction"] = parse_angle_flag(direction);
        if (app.count("--anchor-index")) payload["anchor_index"] = anchor_index;
        if (app.count("--max-n")) payload["max_n"] = max_n;
        if (app.count("--scene")) payload["scene"] = scene;
        if (mirror) payload["mirror"] = true;
        if (app.count("--instances")) payload["instances"] = instances;
        if (app.count("--n-min")) payload["n_min"] = n_min;
        if (app.count("--n-max")) payload["n_max"] = n_max;
        if (app.count("--grid")) payload["grid_resolution"] = grid;
        if (app.count("--tol")) request["tol"] = tol;
        if (app.count("--seed")) request["seed"] = seed;
        if (app.count("--out")) request["output_path"] = out_path;
        if (app.count("--format")) request["format"] = format;

        result = run(parse_request(request));
        if (result.exit_code == kExitOk && request.contains("output_path")) {
            const std::string path = request["output_path"].get<std::string>();
            std::ofstream file(path, std::ios::binary);
            if (!file || !(file << result.body)) throw SchemaError("cannot write " + path);
            return kExitOk;
        }
    } catch (const SchemaError& e) {
        result.exit_code = kExitUsage;
        result.body = dump(error_body("SCHEMA", e.what()));
    }
    out << result.body;
    return result.exit_code;
}

}  // namespace polydual::cli
