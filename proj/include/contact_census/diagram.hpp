#pragma once

#include <string>
#include <vector>

#include "contact_census/divsets.hpp"
#include "contact_census/farey.hpp"

namespace contact_census {

enum class DiagramFormat { Svg, Dot };

// Slopes of the Farey tessellation up to the given mediant depth, in
// counterclockwise order starting at 0. Depth 0 is {0, inf}.
std::vector<Slope> farey_vertices(int depth);
// Farey edges among farey_vertices(depth), each listed once.
std::vector<std::pair<Slope, Slope>> farey_edges(int depth);

std::string farey_svg(int depth);
std::string farey_dot(int depth);
std::string disk_svg(const DiskConfig& c);
std::string disk_dot(const DiskConfig& c);
std::string annulus_svg(const AnnulusConfig& c);
std::string annulus_dot(const AnnulusConfig& c);
std::string empty_svg();

// kind "farey" takes {"depth": d}; kind "chord" takes a disk or annulus
// configuration. An empty payload gives empty_svg().
std::string emit_diagram(const std::string& kind, const std::string& payload, DiagramFormat format);

}  // namespace contact_census
