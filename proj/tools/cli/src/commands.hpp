#pragma once

#include <string>

#include "polydual/cli/app.hpp"

namespace polydual::cli::detail {

Json cmd_averages(const JobRequest& req);
Json cmd_dual(const JobRequest& req);
Json cmd_reconstruct(const JobRequest& req);
Json cmd_pompeiu(const JobRequest& req);
Json cmd_two_points(const JobRequest& req);
Json cmd_verify(const JobRequest& req);

/// SVG for `render` (payload "scene") or for a command run with format svg.
std::string render_svg(const std::string& scene, const JobRequest& req);

}  // namespace polydual::cli::detail
