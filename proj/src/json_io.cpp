#include "wex/json_io.hpp"

#include <fstream>
#include <sstream>

namespace wex {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
	throw InputError(path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
	if (!j.is_object()) {
		fail(path, "expected an object");
	}
	const auto it = j.find(key);
	if (it == j.end()) {
		fail(path + "." + key, "missing required field");
	}
	return *it;
}

double number(const Json& j, const std::string& path) {
	if (!j.is_number()) {
		fail(path, "expected a number");
	}
	return j.get<double>();
}

bool boolean(const Json& j, const std::string& path) {
	if (!j.is_boolean()) {
		fail(path, "expected true or false");
	}
	return j.get<bool>();
}

std::size_t index(const Json& j, const std::string& path) {
	if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
		fail(path, "expected a non-negative integer");
	}
	return j.get<std::size_t>();
}

const Json& array(const Json& j, const std::string& path) {
	if (!j.is_array()) {
		fail(path, "expected an array");
	}
	return j;
}

std::vector<double> number_list(const Json& j, const std::string& path) {
	std::vector<double> out;
	const Json& a = array(j, path);
	for (std::size_t i = 0; i < a.size(); ++i) {
		out.push_back(number(a[i], path + "[" + std::to_string(i) + "]"));
	}
	return out;
}

RMatrix real_matrix_from_json(const Json& j, const std::string& path) {
	const Json& rows = array(j, path);
	const auto n = static_cast<Eigen::Index>(rows.size());
	RMatrix m(n, n);
	for (Eigen::Index i = 0; i < n; ++i) {
		const std::string row_path = path + "[" + std::to_string(i) + "]";
		const std::vector<double> row = number_list(rows[static_cast<std::size_t>(i)], row_path);
		if (static_cast<Eigen::Index>(row.size()) != n) {
			fail(row_path, "expected " + std::to_string(n) + " entries");
		}
		for (Eigen::Index c = 0; c < n; ++c) {
			m(i, c) = row[static_cast<std::size_t>(c)];
		}
	}
	return m;
}

template <typename F>
auto rethrow_at(const std::string& path, F&& f) -> decltype(f()) {
	try {
		return f();
	} catch (const InputError&) {
		throw;
	} catch (const Error& e) {
		fail(path, e.what());
	}
}

} // namespace

Json read_json_file(const std::filesystem::path& path) {
	std::ifstream in(path);
	if (!in) {
		throw InputError(path.string() + ": cannot open file");
	}
	try {
		return Json::parse(in);
	} catch (const nlohmann::json::parse_error& e) {
		throw InputError(path.string() + ": malformed JSON (" + e.what() + ")");
	}
}

std::string dump(const Json& j) {
	return j.dump(2) + "\n";
}

CMatrix matrix_from_json(const Json& j, const std::string& path) {
	const Json& dim_json = field(j, "dim", path);
	const std::size_t d = index(dim_json, path + ".dim");
	if (d == 0) {
		fail(path + ".dim", "dimension must be >= 1");
	}
	const std::string mpath = path + ".matrix";
	const Json& rows = array(field(j, "matrix", path), mpath);
	if (rows.size() != d) {
		fail(mpath, "expected " + std::to_string(d) + " rows, found " + std::to_string(rows.size()));
	}
	const auto n = static_cast<Eigen::Index>(d);
	CMatrix m(n, n);
	for (std::size_t r = 0; r < d; ++r) {
		const std::string rpath = mpath + "[" + std::to_string(r) + "]";
		const Json& row = array(rows[r], rpath);
		if (row.size() != d) {
			fail(rpath, "expected " + std::to_string(d) + " entries, found " + std::to_string(row.size()));
		}
		for (std::size_t c = 0; c < d; ++c) {
			const std::string epath = rpath + "[" + std::to_string(c) + "]";
			const Json& entry = row[c];
			if (!entry.is_array() || entry.size() != 2) {
				fail(epath, "expected a [re, im] pair");
			}
			m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
			    cplx(number(entry[0], epath + "[0]"), number(entry[1], epath + "[1]"));
		}
	}
	return m;
}

Json matrix_to_json(const CMatrix& m) {
	Json rows = Json::array();
	for (Eigen::Index r = 0; r < m.rows(); ++r) {
		Json row = Json::array();
		for (Eigen::Index c = 0; c < m.cols(); ++c) {
			row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
		}
		rows.push_back(std::move(row));
	}
	Json j;
	j["dim"] = m.rows();
	j["matrix"] = std::move(rows);
	return j;
}

Json real_matrix_to_json(const RMatrix& m) {
	Json rows = Json::array();
	for (Eigen::Index r = 0; r < m.rows(); ++r) {
		Json row = Json::array();
		for (Eigen::Index c = 0; c < m.cols(); ++c) {
			row.push_back(m(r, c));
		}
		rows.push_back(std::move(row));
	}
	return rows;
}

DensityMatrix state_from_json(const Json& j, const Tolerances& tol) {
	const CMatrix m = matrix_from_json(j);
	return rethrow_at("$.matrix", [&] { return DensityMatrix::from(m, tol); });
}

Json to_json(const DensityMatrix& rho) {
	return matrix_to_json(rho.matrix());
}

Hamiltonian hamiltonian_from_json(const Json& j, const Tolerances& tol) {
	const CMatrix m = matrix_from_json(j);
	double kbt = 1.0;
	if (j.contains("kBT")) {
		kbt = number(j["kBT"], "$.kBT");
		if (!(kbt > 0.0)) {
			fail("$.kBT", "kBT must be positive");
		}
	}
	std::optional<EnergyBounds> bounds;
	if (j.contains("bounds")) {
		const std::vector<double> b = number_list(j["bounds"], "$.bounds");
		if (b.size() != 2) {
			fail("$.bounds", "expected [eps, delta]");
		}
		bounds = EnergyBounds{b[0], b[1]};
	}
	return rethrow_at("$.matrix", [&] {
		return Hamiltonian::from(HermitianMatrix::from(m, tol), kbt, bounds, tol);
	});
}

Json to_json(const Hamiltonian& h) {
	Json j = matrix_to_json(h.matrix());
	j["kBT"] = h.kbt();
	if (h.bounds()) {
		j["bounds"] = Json::array({h.bounds()->lower, h.bounds()->upper});
	}
	return j;
}

PureBipartiteState bipartite_from_json(const Json& j, const Tolerances& tol) {
	const CMatrix m = matrix_from_json(j);
	return rethrow_at("$.matrix", [&] { return PureBipartiteState::from(m, tol); });
}

FreeSet free_set_from_json(const Json& j, const Tolerances& tol) {
	if (j.is_object() && j.contains("builtin")) {
		const Json& name = j["builtin"];
		if (!name.is_string() || name.get<std::string>() != "max-mixed") {
			fail("$.builtin", "unknown built-in free set (supported: \"max-mixed\")");
		}
		const std::size_t d = index(field(j, "dim", "$"), "$.dim");
		if (d == 0) {
			fail("$.dim", "dimension must be >= 1");
		}
		return FreeSet::maximally_mixed(d);
	}
	std::string label = "custom";
	if (j.is_object() && j.contains("label")) {
		if (!j["label"].is_string()) {
			fail("$.label", "expected a string");
		}
		label = j["label"].get<std::string>();
	}
	const Json& pts = array(field(j, "points", "$"), "$.points");
	if (pts.empty()) {
		fail("$.points", "free set needs at least one extreme point");
	}
	std::vector<DensityMatrix> points;
	for (std::size_t i = 0; i < pts.size(); ++i) {
		const std::string p = "$.points[" + std::to_string(i) + "]";
		const CMatrix m = matrix_from_json(pts[i], p);
		points.push_back(rethrow_at(p + ".matrix", [&] { return DensityMatrix::from(m, tol); }));
	}
	return rethrow_at("$.points", [&] { return FreeSet::from(std::move(points), label); });
}

Json to_json(const WorkReport& r) {
	Json j;
	j["w"] = r.w;
	j["w_inf"] = r.w_inf;
	j["delta"] = r.delta;
	j["delta_closed_form"] = r.delta_closed_form;
	j["consistency_gap"] = r.consistency_gap;
	return j;
}

WorkReport work_report_from_json(const Json& j) {
	WorkReport r;
	r.w = number(field(j, "w", "$"), "$.w");
	r.w_inf = number(field(j, "w_inf", "$"), "$.w_inf");
	r.delta = number(field(j, "delta", "$"), "$.delta");
	r.delta_closed_form = number(field(j, "delta_closed_form", "$"), "$.delta_closed_form");
	r.consistency_gap = number(field(j, "consistency_gap", "$"), "$.consistency_gap");
	if (r.consistency_gap < 0.0) {
		fail("$.consistency_gap", "must be non-negative");
	}
	return r;
}

Json to_json(const MajorisationReport& r) {
	Json j;
	j["holds"] = r.holds;
	j["partial_sum_gaps"] = r.partial_sum_gaps;
	j["worst_k"] = r.worst_k;
	j["boundary"] = r.boundary;
	return j;
}

MajorisationReport majorisation_report_from_json(const Json& j, const std::string& path) {
	MajorisationReport r;
	r.holds = boolean(field(j, "holds", path), path + ".holds");
	r.partial_sum_gaps = number_list(field(j, "partial_sum_gaps", path), path + ".partial_sum_gaps");
	r.worst_k = index(field(j, "worst_k", path), path + ".worst_k");
	r.boundary = boolean(field(j, "boundary", path), path + ".boundary");
	if (!r.partial_sum_gaps.empty() && r.worst_k >= r.partial_sum_gaps.size()) {
		fail(path + ".worst_k", "index outside partial_sum_gaps");
	}
	return r;
}

Json to_json(const ConversionCertificate& c) {
	Json j;
	j["doubly_stochastic"] = real_matrix_to_json(c.doubly_stochastic);
	Json terms = Json::array();
	for (const auto& t : c.birkhoff_terms) {
		Json term;
		term["weight"] = t.weight;
		term["permutation"] = t.permutation;
		terms.push_back(std::move(term));
	}
	j["birkhoff_terms"] = std::move(terms);
	j["basis_in"] = matrix_to_json(c.basis_in);
	j["basis_out"] = matrix_to_json(c.basis_out);
	return j;
}

ConversionCertificate certificate_from_json(const Json& j, const std::string& path, const Tolerances& tol) {
	ConversionCertificate c;
	c.doubly_stochastic = real_matrix_from_json(field(j, "doubly_stochastic", path), path + ".doubly_stochastic");
	const std::string tpath = path + ".birkhoff_terms";
	const Json& terms = array(field(j, "birkhoff_terms", path), tpath);
	for (std::size_t i = 0; i < terms.size(); ++i) {
		const std::string p = tpath + "[" + std::to_string(i) + "]";
		BirkhoffTerm t;
		t.weight = number(field(terms[i], "weight", p), p + ".weight");
		const Json& perm = array(field(terms[i], "permutation", p), p + ".permutation");
		for (std::size_t k = 0; k < perm.size(); ++k) {
			t.permutation.push_back(index(perm[k], p + ".permutation[" + std::to_string(k) + "]"));
		}
		c.birkhoff_terms.push_back(std::move(t));
	}
	c.basis_in = matrix_from_json(field(j, "basis_in", path), path + ".basis_in");
	c.basis_out = matrix_from_json(field(j, "basis_out", path), path + ".basis_out");
	rethrow_at(path, [&] { validate(c, tol); });
	return c;
}

Json to_json(const ConversionVerdict& v, bool include_certificate) {
	Json j;
	j["convertible"] = v.convertible;
	j["via"] = to_string(v.via);
	j["delta_gaps"] = v.delta_gaps;
	j["boundary"] = v.boundary;
	j["majorisation"] = to_json(v.majorisation_report);
	if (include_certificate && v.certificate) {
		j["certificate"] = to_json(*v.certificate);
	}
	return j;
}

ConversionVerdict verdict_from_json(const Json& j, const Tolerances& tol) {
	ConversionVerdict v;
	v.convertible = boolean(field(j, "convertible", "$"), "$.convertible");
	const Json& via = field(j, "via", "$");
	if (via == "unital_mu") {
		v.via = ConversionRoute::unital_mu;
	} else if (via == "locc_pure") {
		v.via = ConversionRoute::locc_pure;
	} else {
		fail("$.via", "expected \"unital_mu\" or \"locc_pure\"");
	}
	v.delta_gaps = number_list(field(j, "delta_gaps", "$"), "$.delta_gaps");
	v.boundary = boolean(field(j, "boundary", "$"), "$.boundary");
	v.majorisation_report = majorisation_report_from_json(field(j, "majorisation", "$"), "$.majorisation");
	if (v.majorisation_report.partial_sum_gaps.size() != v.delta_gaps.size()) {
		fail("$.delta_gaps", "length differs from majorisation.partial_sum_gaps");
	}
	if (v.convertible != v.majorisation_report.holds) {
		fail("$.convertible", "inconsistent with majorisation.holds");
	}
	if (j.contains("certificate")) {
		v.certificate = certificate_from_json(j["certificate"], "$.certificate", tol);
	}
	return v;
}

Json to_json(const WitnessResult& r) {
	Json j;
	j["found"] = r.found;
	j["gap"] = r.gap;
	j["iterations"] = r.iterations;
	j["inconclusive"] = r.inconclusive;
	j["analytic"] = r.analytic;
	if (r.hamiltonian) {
		j["hamiltonian"] = to_json(*r.hamiltonian);
	}
	return j;
}

WitnessResult witness_result_from_json(const Json& j, const Tolerances& tol) {
	WitnessResult r;
	r.found = boolean(field(j, "found", "$"), "$.found");
	r.gap = number(field(j, "gap", "$"), "$.gap");
	r.iterations = index(field(j, "iterations", "$"), "$.iterations");
	r.inconclusive = boolean(field(j, "inconclusive", "$"), "$.inconclusive");
	r.analytic = boolean(field(j, "analytic", "$"), "$.analytic");
	if (j.contains("hamiltonian")) {
		r.hamiltonian = rethrow_at("$.hamiltonian", [&] { return hamiltonian_from_json(j["hamiltonian"], tol); });
	}
	if (r.found && !(r.gap > 0.0)) {
		fail("$.gap", "a found witness must have a positive gap");
	}
	return r;
}

Json to_json(const MeasureResult& r) {
	Json j;
	j["value"] = r.value;
	j["best_ratio"] = r.best_ratio;
	j["best_spread"] = r.best_spread;
	j["best_energies"] = r.best_energies;
	j["at_exclusion_threshold"] = r.at_exclusion_threshold;
	j["candidates"] = r.candidates;
	return j;
}

MeasureResult measure_result_from_json(const Json& j) {
	MeasureResult r;
	r.value = number(field(j, "value", "$"), "$.value");
	r.best_ratio = number(field(j, "best_ratio", "$"), "$.best_ratio");
	r.best_spread = number(field(j, "best_spread", "$"), "$.best_spread");
	r.best_energies = number_list(field(j, "best_energies", "$"), "$.best_energies");
	r.at_exclusion_threshold = boolean(field(j, "at_exclusion_threshold", "$"), "$.at_exclusion_threshold");
	r.candidates = index(field(j, "candidates", "$"), "$.candidates");
	if (r.value < 0.0) {
		fail("$.value", "the measure is non-negative");
	}
	return r;
}

} // namespace wex
