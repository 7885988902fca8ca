#pragma once

#include "wex/conversion.hpp"
#include "wex/errors.hpp"
#include "wex/free_set.hpp"
#include "wex/majorisation.hpp"
#include "wex/states.hpp"
#include "wex/thermo.hpp"
#include "wex/witness.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace wex {

// Keys are emitted in insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

// Malformed input files; the message starts with the offending field path.
class InputError : public Error {
public:
	using Error::Error;
};

Json read_json_file(const std::filesystem::path& path);
// Two-space indented, trailing newline.
std::string dump(const Json& j);

// {"dim": d, "matrix": [[[re, im], ...], ...]}, row-major.
CMatrix matrix_from_json(const Json& j, const std::string& path = "$");
Json matrix_to_json(const CMatrix& m);
Json real_matrix_to_json(const RMatrix& m);

DensityMatrix state_from_json(const Json& j, const Tolerances& tol = {});
Json to_json(const DensityMatrix& rho);

// Adds "kBT" (default 1) and optional "bounds": [eps, delta].
Hamiltonian hamiltonian_from_json(const Json& j, const Tolerances& tol = {});
Json to_json(const Hamiltonian& h);

PureBipartiteState bipartite_from_json(const Json& j, const Tolerances& tol = {});

// {"label": text, "points": [state, ...]} or {"builtin": "max-mixed", "dim": d}.
FreeSet free_set_from_json(const Json& j, const Tolerances& tol = {});

Json to_json(const WorkReport& r);
WorkReport work_report_from_json(const Json& j);

Json to_json(const MajorisationReport& r);
MajorisationReport majorisation_report_from_json(const Json& j, const std::string& path = "$");

Json to_json(const ConversionCertificate& c);
// Parses and runs validate() on the result.
ConversionCertificate certificate_from_json(const Json& j, const std::string& path = "$",
                                            const Tolerances& tol = {});

Json to_json(const ConversionVerdict& v, bool include_certificate);
ConversionVerdict verdict_from_json(const Json& j, const Tolerances& tol = {});

Json to_json(const WitnessResult& r);
WitnessResult witness_result_from_json(const Json& j, const Tolerances& tol = {});

Json to_json(const MeasureResult& r);
MeasureResult measure_result_from_json(const Json& j);

} // namespace wex
