#pragma once
#include "spun/normal_coords.hpp"
#include "spun/triangulation.hpp"

#include <optional>
#include <string>

namespace spun {

// Rendered command output. Text and JSON carry the same data; both are
// byte-deterministic for a fixed input and flag set.
struct Report {
    std::string text;
    std::string json;
};

struct BoundaryOptions {
    std::optional<QVector> vector;
    bool with_index = false;
    std::optional<int> cusp;
};

Report report_info(const Triangulation& tri, const std::string& input_name);
Report report_basis(const Triangulation& tri, const std::string& input_name);
Report report_qmatch(const Triangulation& tri, const std::string& input_name);
Report report_enumerate(const Triangulation& tri, const std::string& input_name);
Report report_boundary(const Triangulation& tri, const std::string& input_name,
                       const BoundaryOptions& options);

} // namespace spun
