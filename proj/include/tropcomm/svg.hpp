#pragma once

#include <string>
#include <vector>

#include "tropcomm/section.hpp"

namespace tropcomm {

struct RenderOptions {
    std::vector<std::string> labels; // optional caption per panel
    int px_per_unit = 40;
};

// Deterministic standalone SVG: one panel per section, generators as blue
// dots, the origin as a white dot, 2-cells filled, a fixed 1-unit margin and
// the y axis flipped to screen orientation.  Exact coordinates are kept in
// data-point attributes; pixel positions are truncated to 3 decimals.
std::string render_svg(const std::vector<SpanSection>& sections,
                       const RenderOptions& opts = {});

void write_svg_file(const std::string& path, const std::vector<SpanSection>& sections,
                    const RenderOptions& opts = {});

} // namespace tropcomm
