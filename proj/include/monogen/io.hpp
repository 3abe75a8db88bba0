#pragma once
// JSON readers and writers for every on-disk format, plus report
// serialization. Complex values are accepted as {"re":..,"im":..} or
// [re, im]; the object form is emitted.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monogen/fixtures.hpp"
#include "monogen/monogenic.hpp"
#include "monogen/pde.hpp"

namespace monogen::io {

using nlohmann::json;

class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::string path, const std::string& what)
        : std::runtime_error(file + (path.empty() ? "" : " at " + path) + ": " + what),
          file(std::move(file)), path(std::move(path)) {}
    std::string file;
    std::string path; // JSON pointer-ish location
};

json load_json_file(const std::string& path);

Algebra parse_algebra(const json& j, const std::string& file);
VariableFrame parse_frame(const json& j, const Algebra& alg, const std::string& file);
HolomorphicFn parse_holomorphic(const json& j, const std::string& file);
MonogenicFunction parse_monogenic(const json& j, const Algebra& alg, const VariableFrame& frame,
                                  const std::string& file);
PDESpec parse_pde(const json& j, const std::string& file);
AlgebraElement parse_element(const json& j, int n, const std::string& file);
std::vector<double> parse_point(const json& j, const std::string& file);
GridSpec parse_grid(const json& j, const std::string& file);
std::vector<std::pair<double, double>> parse_box(const json& j, const std::string& file);

json complex_json(cplx c);
json element_json(const AlgebraElement& a);
json algebra_json(const Algebra& alg);
json frame_json(const VariableFrame& frame);
json holomorphic_json(const HolomorphicFn& fn);
json monogenic_json(const MonogenicFunction& mf);
json pde_json(const PDESpec& pde);

json validation_json(const ValidationReport& rep);
json cr_json(const CauchyRiemannReport& rep, double tol, bool pass);
json scan_json(const ScanReport& rep);
json theorem4_json(const Theorem4Report& rep);

// Format documentation with inline examples, printed by --emit-schema.
json schema_json();

} // namespace monogen::io
