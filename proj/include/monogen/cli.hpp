#pragma once
// Command dispatch behind the CLI binary. The manifest carries everything a
// subcommand needs; run() loads and parses all inputs up front, computes, and
// writes a single JSON document to out.
//
// Exit codes: 0 success, 1 failed check or domain error, 2 unusable input.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "monogen/algebra.hpp"

namespace monogen::cli {

struct RunManifest {
    std::string command;
    // role -> path or inline JSON (inline when the value starts with [ or {).
    // Roles: algebra, frame, function, pde, element, point, grid, box.
    std::map<std::string, std::string> inputs;

    std::optional<cplx> t;            // resolvent evaluation point
    int order = 1;                    // derive
    double tol_zero = kZeroTol;
    std::optional<double> tol_check;  // per-command default when absent
    std::optional<double> fd_step;
    int quad_nodes = 256;
    int grid_points = 11;             // p-scan
    std::uint64_t seed = 12345;
    bool assume_convex = false;       // recorded in evaluation reports
    bool emit_schema = false;
};

int run(const RunManifest& man, std::ostream& out, std::ostream& log);

} // namespace monogen::cli
