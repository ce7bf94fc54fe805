#pragma once

#include <string>

#include "cca/field.hpp"
#include "report.hpp"

namespace cca::workbench {

// File-driven commands. Complex commands read the JSON facet format; ideal
// commands read the ring/order/gen text format. Input problems surface as
// cca::Error, which the CLI maps to exit code 2.
Report cmd_homology(const std::string& path, Field field);
Report cmd_depth(const std::string& path, Field field);
Report cmd_nerve(const std::string& path);
Report cmd_lyubeznik(const std::string& path, Field field);
Report cmd_groebner(const std::string& path);
Report cmd_initial(const std::string& path);
Report cmd_weight(const std::string& path);
Report cmd_homogenize(const std::string& path, const std::string& fresh_name);

}  // namespace cca::workbench
