#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polydual/cli/app.hpp"
#include "polydual/geometry.hpp"

namespace polydual::cli::detail {

// Payload readers; all throw SchemaError on missing or ill-typed fields.
std::vector<double> read_numbers(const Json& payload, const char* key);
Point2 read_point(const Json& j, const char* what);
RegularPolygon read_polygon(const Json& j);
/// Radians as a number, or a string with an explicit "deg" suffix.
double read_angle(const Json& j, const char* what);
std::optional<long long> read_integer(const Json& payload, const char* key);
std::optional<bool> read_bool(const Json& payload, const char* key);
void require_object(const Json& payload);

// Flag-string converters producing payload fragments.
Json parse_number_list(std::string_view text, const char* what);
Json parse_point_flag(std::string_view text);
Json parse_polygon_flag(std::string_view text);
Json parse_angle_flag(std::string_view text);

Json point_json(Point2 p);
Json polygon_json(const RegularPolygon& p);
Json vertices_json(const std::vector<Point2>& v);
Json numbers_json(const std::vector<double>& v);

}  // namespace polydual::cli::detail
