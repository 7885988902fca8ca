#include "wex/cli.hpp"

#include "wex/conversion.hpp"
#include "wex/json_io.hpp"
#include "wex/thermo.hpp"
#include "wex/verify.hpp"
#include "wex/witness.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace wex::cli {

namespace {

std::string shortest(double x) {
	char buf[64];
	const auto res = std::to_chars(buf, buf + sizeof(buf), x);
	return std::string(buf, res.ptr);
}

template <typename F>
auto load(const std::string& file, F&& parse) -> decltype(parse(std::declval<const Json&>())) {
	const Json j = read_json_file(file);
	try {
		return parse(j);
	} catch (const InputError& e) {
		throw InputError(file + ": " + e.what());
	}
}

void write_file(const std::string& path, const std::string& contents) {
	std::ofstream f(path, std::ios::binary);
	if (!f) {
		throw InputError(path + ": cannot open for writing");
	}
	f << contents;
	if (!f) {
		throw InputError(path + ": write failed");
	}
}

struct Files {
	std::string first;
	std::string second;
	std::string out;
	std::string suite;
	std::size_t n = 200;
	bool certificate = false;
	bool corrupt = false;
};

Hamiltonian apply_kbt(const Hamiltonian& h, const Config& c) {
	return c.kbt_explicit ? Hamiltonian::from(h.hermitian(), c.kbt, h.bounds(), c.tol) : h;
}

int cmd_delta(const Config& c, const Files& f, std::ostream& out) {
	const DensityMatrix rho = load(f.first, [&](const Json& j) { return state_from_json(j, c.tol); });
	const Hamiltonian h =
	    apply_kbt(load(f.second, [&](const Json& j) { return hamiltonian_from_json(j, c.tol); }), c);
	if (rho.dim() != h.dim()) {
		throw InputError("state has dimension " + std::to_string(rho.dim()) + " but Hamiltonian has " +
		                 std::to_string(h.dim()));
	}
	out << dump(to_json(delta(rho, h, c.tol)));
	return success;
}

int cmd_convert(const Config& c, const Files& f, std::ostream& out) {
	const DensityMatrix rho = load(f.first, [&](const Json& j) { return state_from_json(j, c.tol); });
	const DensityMatrix sigma = load(f.second, [&](const Json& j) { return state_from_json(j, c.tol); });
	const ConversionVerdict v = unital_convertible(rho, sigma, c.omega, c.kbt, c.tol);
	out << dump(to_json(v, f.certificate));
	return v.convertible ? success : negative;
}

int cmd_nielsen(const Config& c, const Files& f, std::ostream& out) {
	const PureBipartiteState psi = load(f.first, [&](const Json& j) { return bipartite_from_json(j, c.tol); });
	const PureBipartiteState phi = load(f.second, [&](const Json& j) { return bipartite_from_json(j, c.tol); });
	const ConversionVerdict v = nielsen_locc_check(psi, phi, c.omega, c.kbt, c.tol);
	out << dump(to_json(v, false));
	return v.convertible ? success : negative;
}

int cmd_witness(const Config& c, const Files& f, std::ostream& out) {
	const DensityMatrix rho = load(f.first, [&](const Json& j) { return state_from_json(j, c.tol); });
	const FreeSet free = load(f.second, [&](const Json& j) { return free_set_from_json(j, c.tol); });
	AscentOptions opts;
	opts.kbt = c.kbt;
	const WitnessResult w = witness_search(rho, free, c.epsilon, c.delta_max, opts, c.tol);
	out << dump(to_json(w));
	if (w.found) {
		if (!f.out.empty()) {
			write_file(f.out, dump(to_json(*w.hamiltonian)));
		}
		return success;
	}
	return w.inconclusive ? inconclusive : negative;
}

int cmd_measure(const Config& c, const Files& f, std::ostream& out) {
	const DensityMatrix rho = load(f.first, [&](const Json& j) { return state_from_json(j, c.tol); });
	MeasurePlan plan;
	plan.kbt = c.kbt;
	plan.seed = c.seed;
	out << dump(to_json(measure_m(rho, c.epsilon, c.delta_max, plan)));
	return success;
}

Hamiltonian sweep_hamiltonian(const std::string& family, double x, std::size_t d, const Config& c,
                              const std::optional<Hamiltonian>& base) {
	if (family == "two_level") {
		if (x < 0.0 || x != std::floor(x) || x > static_cast<double>(d) - 2.0) {
			throw InputError("grid value " + shortest(x) + " is not a valid k for the two_level family");
		}
		return two_level_hamiltonian(d, static_cast<std::size_t>(x), c.omega, c.kbt);
	}
	if (family == "diag_0x") {
		if (d != 2) {
			throw InputError("family diag_0x needs a qubit state");
		}
		const std::vector<double> e{0.0, x};
		return Hamiltonian::diagonal(e, c.kbt);
	}
	// scaled: x · H0
	return Hamiltonian::from(HermitianMatrix::hermitian_part(x * base->matrix()), base->kbt());
}

int cmd_sweep(const Config& c, const Files& f, std::ostream& out) {
	const std::filesystem::path spec_path(f.first);
	const Json spec = read_json_file(spec_path);
	const auto here = spec_path.parent_path();
	auto text = [&](const char* key) -> std::string {
		if (!spec.is_object() || !spec.contains(key) || !spec[key].is_string()) {
			throw InputError(f.first + ": $." + key + ": expected a string");
		}
		return spec[key].get<std::string>();
	};
	auto resolve = [&](const std::string& p) { return (here / p).string(); };
	const std::string family = text("family");
	if (family != "two_level" && family != "diag_0x" && family != "scaled") {
		throw InputError(f.first + ": $.family: unknown family '" + family +
		                 "' (expected two_level, diag_0x or scaled)");
	}
	if (!spec.contains("grid") || !spec["grid"].is_array()) {
		throw InputError(f.first + ": $.grid: expected an array of numbers");
	}
	std::vector<double> grid;
	for (std::size_t i = 0; i < spec["grid"].size(); ++i) {
		if (!spec["grid"][i].is_number()) {
			throw InputError(f.first + ": $.grid[" + std::to_string(i) + "]: expected a number");
		}
		grid.push_back(spec["grid"][i].get<double>());
	}
	const std::string state_file = resolve(text("state"));
	const DensityMatrix rho = load(state_file, [&](const Json& j) { return state_from_json(j, c.tol); });
	std::optional<Hamiltonian> base;
	if (family == "scaled") {
		const std::string hfile = resolve(text("hamiltonian"));
		base = apply_kbt(load(hfile, [&](const Json& j) { return hamiltonian_from_json(j, c.tol); }), c);
		if (base->dim() != rho.dim()) {
			throw InputError(hfile + ": Hamiltonian dimension differs from the state");
		}
	}

	std::ostringstream csv;
	csv << "parameter,w,w_inf,delta,delta_mu_assisted\n";
	for (double x : grid) {
		const Hamiltonian h = sweep_hamiltonian(family, x, rho.dim(), c, base);
		const WorkReport r = delta(rho, h, c.tol);
		double assisted = 0.0;
		try {
			assisted = delta_mu_assisted(rho, h, c.tol);
		} catch (const PreconditionError& e) {
			throw InputError("grid value " + shortest(x) + ": " + e.what());
		}
		csv << shortest(x) << ',' << shortest(r.w) << ',' << shortest(r.w_inf) << ',' << shortest(r.delta) << ','
		    << shortest(assisted) << '\n';
	}
	std::string target = f.out;
	if (target.empty() && spec.contains("out")) {
		target = resolve(text("out"));
	}
	if (target.empty()) {
		out << csv.str();
	} else {
		write_file(target, csv.str());
	}
	return success;
}

int cmd_verify(const Config& c, const Files& f, std::ostream& out) {
	VerifyOptions o;
	o.seed = c.seed;
	o.n = f.n;
	o.threads = c.threads;
	o.tol = c.tol;
	o.corrupt_tolerance = f.corrupt;
	if (o.n == 0) {
		out << "warning: n = 0, every property holds vacuously\n";
	}
	const auto outcomes = run_verification(f.suite, o);
	bool ok = true;
	for (const auto& p : outcomes) {
		const bool pass = p.failed == 0;
		ok = ok && pass;
		out << p.suite << '/' << p.property << ": " << p.checked - p.failed << '/' << p.checked << " passed "
		    << (pass ? "PASS" : "FAIL") << '\n';
	}
	out << "verify " << f.suite << " (seed " << o.seed << ", n " << o.n << "): " << (ok ? "PASS" : "FAIL") << '\n';
	return ok ? success : negative;
}

} // namespace

void apply_tolerance_override(Tolerances& tol, const std::string& spec) {
	const auto eq = spec.find('=');
	const std::string name = eq == std::string::npos ? "verdict" : spec.substr(0, eq);
	const std::string value_text = eq == std::string::npos ? spec : spec.substr(eq + 1);
	double value = 0.0;
	const auto res = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
	if (res.ec != std::errc() || res.ptr != value_text.data() + value_text.size() || !(value > 0.0)) {
		throw InputError("--tol " + spec + ": expected a positive number");
	}
	const std::pair<const char*, double Tolerances::*> fields[] = {
	    {"construction", &Tolerances::construction}, {"reconstruction", &Tolerances::reconstruction},
	    {"equality", &Tolerances::equality},         {"trace", &Tolerances::trace},
	    {"psd", &Tolerances::psd},                   {"verdict", &Tolerances::verdict},
	    {"basis", &Tolerances::basis},               {"support", &Tolerances::support},
	    {"consistency", &Tolerances::consistency},
	};
	for (const auto& [key, member] : fields) {
		if (name == key) {
			tol.*member = value;
			return;
		}
	}
	throw InputError("--tol " + spec + ": unknown tolerance '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	CLI::App app{"Work-extraction tests for quantum state conversion and resource certification", "wex"};
	app.fallthrough();
	app.require_subcommand(1);

	Config c;
	Files f;
	std::vector<std::string> tol_specs;
	auto* kbt_opt =
	    app.add_option("--kbt", c.kbt, "Bath temperature k_B T in energy units (overrides kBT in input files)")
	        ->check(CLI::PositiveNumber);
	app.add_option("--eps", c.epsilon, "Lower energy scale for witness/measure")->check(CLI::NonNegativeNumber);
	app.add_option("--emax", c.delta_max, "Upper energy scale for witness/measure");
	app.add_option("--omega", c.omega, "Gap of the two-level Hamiltonians H_k")->check(CLI::PositiveNumber);
	app.add_option("--tol", tol_specs, "Tolerance override, name=value or a bare verdict tolerance");
	app.add_option("--seed", c.seed, "Random seed");
	app.add_option("--threads", c.threads, "Worker threads for sampling")->check(CLI::PositiveNumber);

	auto* delta_cmd = app.add_subcommand("delta", "Energy storage enhancement of a state for a Hamiltonian");
	delta_cmd->add_option("state", f.first)->required();
	delta_cmd->add_option("hamiltonian", f.second)->required();

	auto* convert = app.add_subcommand("convert", "Decide rho -> sigma under unital channels");
	convert->add_option("rho", f.first)->required();
	convert->add_option("sigma", f.second)->required();
	convert->add_flag("--certificate", f.certificate, "Embed the mixed-unitary certificate");

	auto* nielsen = app.add_subcommand("nielsen", "Decide |psi> -> |phi> by LOCC");
	nielsen->add_option("psi", f.first)->required();
	nielsen->add_option("phi", f.second)->required();

	auto* witness = app.add_subcommand("witness", "Search a Hamiltonian witnessing rho outside the free set");
	witness->add_option("rho", f.first)->required();
	witness->add_option("free_set", f.second)->required();
	witness->add_option("--out", f.out, "Write the witness Hamiltonian here when found");

	auto* measure = app.add_subcommand("measure", "Work-extraction resource measure (unitary channels, free state I/d)");
	measure->add_option("rho", f.first)->required();

	auto* sweep = app.add_subcommand("sweep", "Tabulate W, W_inf, Delta and assisted Delta over a Hamiltonian family");
	sweep->add_option("spec", f.first)->required();
	sweep->add_option("--out", f.out, "CSV destination (overrides the spec's out)");

	auto* verify = app.add_subcommand("verify", "Run the property suites");
	verify->add_option("suite", f.suite)->required()->check(CLI::IsMember(verification_suites()));
	verify->add_option("--n", f.n, "Instances per property");
	verify->add_flag("--corrupt-tolerance", f.corrupt)->group("");

	std::vector<std::string> storage{"wex"};
	storage.insert(storage.end(), args.begin(), args.end());
	std::vector<char*> argv;
	for (auto& s : storage) {
		argv.push_back(s.data());
	}
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return success;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return success;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n';
		return input_error;
	}

	c.kbt_explicit = kbt_opt->count() > 0;
	try {
		for (const auto& s : tol_specs) {
			apply_tolerance_override(c.tol, s);
		}
		if (!(c.epsilon < c.delta_max)) {
			throw InputError("--eps must be smaller than --emax");
		}
		if (*delta_cmd) {
			return cmd_delta(c, f, out);
		}
		if (*convert) {
			return cmd_convert(c, f, out);
		}
		if (*nielsen) {
			return cmd_nielsen(c, f, out);
		}
		if (*witness) {
			return cmd_witness(c, f, out);
		}
		if (*measure) {
			return cmd_measure(c, f, out);
		}
		if (*sweep) {
			return cmd_sweep(c, f, out);
		}
		return cmd_verify(c, f, out);
	} catch (const InconclusiveError& e) {
		err << "inconclusive: " << e.what() << '\n';
		return inconclusive;
	} catch (const InputError& e) {
		err << "error: " << e.what() << '\n';
		return input_error;
	} catch (const ValidationError& e) {
		err << "error: " << e.what() << '\n';
		return input_error;
	} catch (const ArgumentError& e) {
		err << "error: " << e.what() << '\n';
		return input_error;
	} catch (const PreconditionError& e) {
		err << "error: " << e.what() << '\n';
		return input_error;
	} catch (const DomainError& e) {
		err << "error: " << e.what() << '\n';
		return input_error;
	} catch (const Error& e) {
		err << "internal error: " << e.what() << '\n';
		return internal_error;
	}
}

} // namespace wex::cli
