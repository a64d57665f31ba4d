#include "payload.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

namespace polydual::cli::detail {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

double number_field(const Json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw SchemaError(std::string(what) + " needs a numeric \"" + key + "\"");
    }
    return j[key].get<double>();
}

}  // namespace

void require_object(const Json& payload) {
    if (!payload.is_object()) throw SchemaError("payload must be a JSON object");
}

std::vector<double> read_numbers(const Json& payload, const char* key) {
    if (!payload.contains(key)) throw SchemaError(std::string("payload is missing \"") + key + "\"");
    const Json& arr = payload[key];
    if (!arr.is_array()) throw SchemaError(std::string("\"") + key + "\" must be an array of numbers");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_number()) throw SchemaError(std::string("\"") + key + "\" must be an array of numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

Point2 read_point(const Json& j, const char* what) {
    if (!j.is_object()) throw SchemaError(std::string(what) + " must be an object {\"x\", \"y\"}");
    return {number_field(j, "x", what), number_field(j, "y", what)};
}

RegularPolygon read_polygon(const Json& j) {
    if (!j.is_object()) throw SchemaError("polygon must be an object {\"n\", \"center\", \"r\", \"phase\"}");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw SchemaError("polygon needs an integer \"n\"");
    if (!j.contains("center")) throw SchemaError("polygon needs a \"center\"");
    const double phase = j.contains("phase") ? read_angle(j["phase"], "polygon phase") : 0.0;
    return RegularPolygon(j["n"].get<int>(), read_point(j["center"], "polygon center"), number_field(j, "r", "polygon"),
                          phase);
}

double read_angle(const Json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const std::string_view sv = trim(s);
        if (sv.size() > 3 && sv.substr(sv.size() - 3) == "deg") {
            if (const auto v = to_double(sv.substr(0, sv.size() - 3))) return *v * std::numbers::pi / 180.0;
        }
    }
    throw SchemaError(std::string(what) + " must be radians (a number) or a string like \"45deg\"");
}

std::optional<long long> read_integer(const Json& payload, const char* key) {
    if (!payload.contains(key)) return std::nullopt;
    if (!payload[key].is_number_integer()) throw SchemaError(std::string("\"") + key + "\" must be an integer");
    return payload[key].get<long long>();
}

std::optional<bool> read_bool(const Json& payload, const char* key) {
    if (!payload.contains(key)) return std::nullopt;
    if (!payload[key].is_boolean()) throw SchemaError(std::string("\"") + key + "\" must be true or false");
    return payload[key].get<bool>();
}

Json parse_number_list(std::string_view text, const char* what) {
    Json arr = Json::array();
    for (std::string_view part : split(text, ',')) {
        const auto v = to_double(part);
        if (!v) throw SchemaError(std::string(what) + ": \"" + std::string(part) + "\" is not a number");
        arr.push_back(*v);
    }
    return arr;
}

Json parse_point_flag(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw SchemaError(std::string("--point: ") + e.what());
        }
    }
    const Json xy = parse_number_list(text, "--point");
    if (xy.size() != 2) throw SchemaError("--point expects x,y");
    return Json{{"x", xy[0]}, {"y", xy[1]}};
}

Json parse_polygon_flag(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '{') {
        try {
            return Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw SchemaError(std::string("--polygon: ") + e.what());
        }
    }
    const auto parts = split(text, ',');
    if (parts.size() != 5) throw SchemaError("--polygon expects n,cx,cy,r,phase or a JSON object");
    int n = 0;
    const std::string_view ns = trim(parts[0]);
    const auto [ptr, ec] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    if (ec != std::errc() || ptr != ns.data() + ns.size()) throw SchemaError("--polygon: n must be an integer");
    const Json nums = parse_number_list(std::string(parts[1]) + "," + std::string(parts[2]) + "," + std::string(parts[3]),
                                        "--polygon");
    return Json{{"n", n},
                {"center", {{"x", nums[0]}, {"y", nums[1]}}},
                {"r", nums[2]},
                {"phase", parse_angle_flag(parts[4])}};
}

Json parse_angle_flag(std::string_view text) {
    text = trim(text);
    if (const auto v = to_double(text)) return *v;
    if (text.size() > 3 && text.substr(text.size() - 3) == "deg" && to_double(text.substr(0, text.size() - 3))) {
        return std::string(text);
    }
    throw SchemaError("angle \"" + std::string(text) + "\" must be radians or carry a \"deg\" suffix");
}

Json point_json(Point2 p) { return Json{{"x", p.x}, {"y", p.y}}; }

Json polygon_json(const RegularPolygon& p) {
    return Json{{"n", p.n()}, {"center", point_json(p.center())}, {"r", p.circumradius()}, {"phase", p.phase()}};
}

Json vertices_json(const std::vector<Point2>& v) {
    Json arr = Json::array();
    for (Point2 p : v) arr.push_back(point_json(p));
    return arr;
}

Json numbers_json(const std::vector<double>& v) {
    Json arr = Json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

}  // namespace polydual::cli::detail
