// cli.cpp: subcommands, settings resolution and output writers.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "otto/verification.hpp"

namespace otto::cli {

namespace {

using nlohmann::json;

struct KeySpec {
    const char* key;
    const char* flag;
    const char* fallback;
    const char* help;
};

// An empty fallback means "derived": see resolve() for the rule.
constexpr KeySpec kKeys[] = {
    {"model", "--model", "single", "single, 11, 12, 21 or 22"},
    {"bath.T_h", "--th", "15", "hot-bath temperature"},
    {"bath.T_c", "--tc", "5", "cold-bath temperature"},
    {"bath.kappa", "--kappa", "0.005", "system-bath coupling rate"},
    {"bath.cutoff", "--cutoff", "1000", "spectral cutoff frequency"},
    {"levels.omega_h", "--wh", "", "single-qubit hot gap (default: max-power level)"},
    {"levels.omega_c", "--wc", "1", "energy unit: single cold gap and gap of Q2"},
    {"levels.omega1_c", "--w1c", "1", "cold gap of Q1 for coupled models"},
    {"coupling.g", "--g", "0.55", "XX coupling strength"},
    {"stroke.t_h", "--t-h", "50", "hot stroke duration"},
    {"stroke.t_c", "--t-c", "50", "cold stroke duration"},
    {"cycle.max_iterations", "--max-iterations", "10000", "cycle cap per point"},
    {"sweep.axis1", "--axis1", "", "first grid axis name:start:stop:step"},
    {"sweep.axis2", "--axis2", "", "second grid axis name:start:stop:step"},
    {"sweep.budget", "--budget", "1000000", "largest allowed number of grid points"},
    {"search.temp_ratios", "--temp-ratios", "2:3.5:0.5", "T_h/T_c values, range or comma list"},
    {"search.scan", "--scan", "", "level scan (default 1.05:3.5:0.05 single, 1:6:0.05 coupled)"},
    {"search.scan_g", "--scan-g", "", "scan g with Q1 at the single-qubit max-power levels"},
    {"verify.draws", "--draws", "1000", "random draws of the measurement suite"},
    {"verify.states", "--states", "20", "random states per generator"},
    {"run.output", "-o,--output", "", "output file (stdout when empty)"},
    {"run.workers", "--workers", "", "worker threads (default: OTTO_WORKERS or all cores)"},
    {"command", "", "", "command when none is given on the command line"},
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_number(std::string_view text, std::string_view what) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + ": expected a number, got '" + t + "'");
    }
    return v;
}

long to_integer(std::string_view text, std::string_view what) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + t + "'");
    }
    return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

GridAxis parse_grid_axis(std::string_view text, std::string_view what) {
    const auto colon = text.find(':');
    if (trim(text).empty() || colon == std::string_view::npos) {
        throw std::invalid_argument(std::string(what) + ": expected name:start:stop:step");
    }
    return {parse_axis(trim(text.substr(0, colon))), parse_range(text.substr(colon + 1))};
}

std::string number_or_empty(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
}

json number_or_null(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// Fully resolved physical settings of one run.
struct Resolved {
    ModelId model{ModelId::SingleQubit};
    double t_hot{15.0};
    BaseParameters base{};
    std::optional<double> omega_h;
    double omega1_c{1.0};
    double g{0.0};

    EngineParameters params() const {
        EngineParameters p;
        p.model = model;
        p.temp_ratio = t_hot / base.temp_c;
        p.omega1_c = omega1_c;
        p.g = is_coupled(model) ? g : 0.0;
        p.omega_h = omega_h;
        p.base = base;
        return p;
    }
};

Resolved resolve(const Settings& s) {
    Resolved r;
    r.model = parse_model(trim(s.at("model")));
    r.t_hot = to_number(s.at("bath.T_h"), "bath.T_h");
    r.base.temp_c = to_number(s.at("bath.T_c"), "bath.T_c");
    r.base.kappa = to_number(s.at("bath.kappa"), "bath.kappa");
    r.base.cutoff = to_number(s.at("bath.cutoff"), "bath.cutoff");
    r.base.omega_c = to_number(s.at("levels.omega_c"), "levels.omega_c");
    r.base.duration_h = to_number(s.at("stroke.t_h"), "stroke.t_h");
    r.base.duration_c = to_number(s.at("stroke.t_c"), "stroke.t_c");
    const long cap = to_integer(s.at("cycle.max_iterations"), "cycle.max_iterations");
    if (cap < 1 || cap > 100'000'000) {
        throw std::invalid_argument("cycle.max_iterations must be in [1, 1e8]");
    }
    r.base.max_iterations = static_cast<int>(cap);
    if (!trim(s.at("levels.omega_h")).empty()) {
        r.omega_h = to_number(s.at("levels.omega_h"), "levels.omega_h");
    }
    r.omega1_c = to_number(s.at("levels.omega1_c"), "levels.omega1_c");
    r.g = to_number(s.at("coupling.g"), "coupling.g");
    if (r.base.temp_c <= 0.0 || r.t_hot <= 0.0) {
        throw std::invalid_argument("bath temperatures must be > 0");
    }

    // Validate the shared physics once, before any computation: a
    // single-qubit probe covers baths, durations and the cap.
    EngineParameters probe = r.params();
    probe.model = ModelId::SingleQubit;
    build_config(probe);
    if (is_coupled(r.model)) {
        if (r.omega1_c <= 0.0) throw std::invalid_argument("levels.omega1_c must be > 0");
        if (r.g < 0.0) throw std::invalid_argument("coupling.g must be >= 0");
    }
    return r;
}

unsigned resolve_workers(const Settings& s) {
    std::string text = trim(s.at("run.workers"));
    if (text.empty()) {
        if (const char* env = std::getenv("OTTO_WORKERS")) text = trim(env);
    }
    if (text.empty()) return default_workers();
    const long n = to_integer(text, "run.workers");
    if (n < 1 || n > 4096) throw std::invalid_argument("run.workers must be in [1, 4096]");
    return static_cast<unsigned>(n);
}

// Working-qubit gaps echoed in every row: Q1 for coupled models.
std::pair<double, double> working_gaps(const EngineParameters& p) {
    if (is_coupled(p.model)) {
        return {p.omega1_c + delta_omega(p.temp_ratio, p.base.omega_c), p.omega1_c};
    }
    return {p.omega_h.value_or(max_power_level(p.temp_ratio, p.base.omega_c)), p.base.omega_c};
}

json parameters_json(const EngineParameters& p) {
    const auto [wh, wc] = working_gaps(p);
    json j;
    j["model"] = std::string(to_string(p.model));
    j["T_h"] = p.t_hot();
    j["T_c"] = p.base.temp_c;
    j["omega_h"] = wh;
    j["omega_c"] = wc;
    j["omega2"] = is_coupled(p.model) ? json(p.base.omega_c) : json(nullptr);
    j["g"] = is_coupled(p.model) ? json(p.g) : json(nullptr);
    j["kappa"] = p.base.kappa;
    j["cutoff"] = p.base.cutoff;
    j["t_h"] = p.base.duration_h;
    j["t_c"] = p.base.duration_c;
    j["max_iterations"] = p.base.max_iterations;
    return j;
}

const char* kPointHeader =
    "model,T_h,T_c,omega_h,omega_c,omega2,g,kappa,cutoff,t_h,t_c,N,converged,Q_h,Q_c,W1,W2,"
    "kind,P,eta,HCOP,CCOP,eta_Otto,eta_Otto_dressed,eta_Carnot,eta_CA,status";

void write_point_row(std::ostream& os, const PointResult& r) {
    const EngineParameters& p = r.params;
    const auto [wh, wc] = working_gaps(p);
    const bool coupled = is_coupled(p.model);
    const double ratio = 1.0 / p.temp_ratio;
    os << to_string(p.model) << ',' << format_number(p.t_hot()) << ','
       << format_number(p.base.temp_c) << ',' << format_number(wh) << ',' << format_number(wc)
       << ',' << (coupled ? format_number(p.base.omega_c) : "") << ','
       << (coupled ? format_number(p.g) : "") << ',' << format_number(p.base.kappa) << ','
       << format_number(p.base.cutoff) << ',' << format_number(p.base.duration_h) << ','
       << format_number(p.base.duration_c) << ',';
    if (r.cycle) {
        const LimitCycleResult& c = *r.cycle;
        const Metrics& m = c.metrics;
        os << c.iterations << ',' << (c.converged() ? "true" : "false") << ','
           << format_number(c.ledger.q_h) << ',' << format_number(c.ledger.q_c) << ','
           << format_number(c.ledger.w_1) << ',' << format_number(c.ledger.w_2) << ','
           << to_string(c.kind) << ',' << number_or_empty(m.power) << ','
           << number_or_empty(m.efficiency) << ',' << number_or_empty(m.hcop) << ','
           << number_or_empty(m.ccop) << ',' << format_number(m.eta_otto) << ','
           << number_or_empty(m.eta_otto_dressed) << ',';
    } else {
        os << ",false,,,,,,,,,,";
        os << format_number(reference_otto_efficiency(p)) << ",,";
    }
    os << format_number(1.0 - ratio) << ',' << format_number(1.0 - std::sqrt(ratio)) << ','
       << to_string(r.status) << '\n';
}

const char* kRecordHeader =
    "model,T_h,T_c,temp_ratio,scan,argmax_level,argmax_g,g,P_m,eta_at_pm,N_at_pm,boundary_max,"
    "eta_Otto,eta_Carnot,eta_CA,omega_c,kappa,cutoff,t_h,t_c,status";

struct RecordRow {
    ModelId model;
    double temp_ratio;
    bool coupling_scan;
    std::optional<MaxPowerRecord> record;
    std::string status;
};

void write_record_row(std::ostream& os, const RecordRow& row, const BaseParameters& base) {
    const double ratio = 1.0 / row.temp_ratio;
    os << to_string(row.model) << ',' << format_number(row.temp_ratio * base.temp_c) << ','
       << format_number(base.temp_c) << ',' << format_number(row.temp_ratio) << ','
       << (row.coupling_scan ? "g" : (is_coupled(row.model) ? "omega1_c" : "omega_ratio")) << ',';
    if (row.record) {
        const MaxPowerRecord& r = *row.record;
        os << format_number(r.argmax_level) << ',' << number_or_empty(r.argmax_g) << ','
           << (is_coupled(r.model) ? format_number(r.g) : "") << ',' << format_number(r.p_max)
           << ',' << format_number(r.eta_at_pm) << ',' << r.n_at_pm << ','
           << (r.boundary_max ? "true" : "false") << ','
           << format_number(reference_otto_efficiency(r.at_pm.params)) << ',';
    } else {
        os << ",,,,,,,,";
    }
    os << format_number(1.0 - ratio) << ',' << format_number(1.0 - std::sqrt(ratio)) << ','
       << format_number(base.omega_c) << ',' << format_number(base.kappa) << ','
       << format_number(base.cutoff) << ',' << format_number(base.duration_h) << ','
       << format_number(base.duration_c) << ',' << row.status << '\n';
}

json record_json(const MaxPowerRecord& r) {
    json j = parameters_json(r.at_pm.params);
    j["temp_ratio"] = r.temp_ratio;
    j["argmax_level"] = r.argmax_level;
    j["argmax_g"] = number_or_null(r.argmax_g);
    j["P_m"] = r.p_max;
    j["eta_at_pm"] = r.eta_at_pm;
    j["N_at_pm"] = r.n_at_pm;
    j["boundary_max"] = r.boundary_max;
    return j;
}

json suite_json(const verification::SuiteReport& r) {
    return {{"name", r.name},          {"passed", r.passed},
            {"failed", r.failed},      {"max_error", r.max_error},
            {"failures", r.failures},  {"ok", r.ok()}};
}

struct SearchRows {
    std::vector<RecordRow> rows;
    std::size_t points{0};
    std::size_t non_converged{0};
};

SearchRows run_search(const Resolved& r, const Settings& s, unsigned workers) {
    const auto ratios = parse_value_list(s.at("search.temp_ratios"));
    const std::string scan_g = trim(s.at("search.scan_g"));
    std::string scan_text = trim(s.at("search.scan"));
    if (scan_text.empty()) scan_text = is_coupled(r.model) ? "1:6:0.05" : "1.05:3.5:0.05";
    const bool coupling = !scan_g.empty();
    if (coupling && !is_coupled(r.model)) {
        throw std::invalid_argument("search.scan_g needs a coupled model");
    }
    const ScanRange range = parse_range(coupling ? scan_g : scan_text);
    for (double ratio : ratios) {
        if (!(ratio > 0.0)) throw std::invalid_argument("temperature ratios must be > 0");
    }

    SearchRows out;
    for (double ratio : ratios) {
        const ScanResult scan = coupling
                                    ? scan_coupling(r.model, ratio, range, r.base, workers)
                                    : scan_level(r.model, ratio, r.g, range, r.base, workers);
        RecordRow row{r.model, ratio, coupling, scan.record,
                      scan.record ? "ok" : "no_engine_point"};
        out.points += scan.points.size();
        for (const auto& p : scan.points) {
            if (p.status == PointStatus::NonConvergence) ++out.non_converged;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

int dispatch(const std::string& command, const Settings& s, std::ostream& os) {
    const Resolved r = resolve(s);
    const unsigned workers = resolve_workers(s);

    if (command == "classify") {
        const EngineParameters p = r.params();
        const CycleConfig cfg = build_config(p);
        const LimitCycleResult res = iterate_to_limit(cfg);
        json j;
        j["parameters"] = parameters_json(p);
        j["kind"] = std::string(to_string(res.kind));
        j["status"] = std::string(to_string(res.status));
        j["converged"] = res.converged();
        j["N"] = res.iterations;
        j["ledger"] = {{"Q_h", res.ledger.q_h},
                       {"Q_c", res.ledger.q_c},
                       {"W1", res.ledger.w_1},
                       {"W2", res.ledger.w_2},
                       {"W", res.ledger.work()},
                       {"residual", res.ledger.residual()}};
        const Metrics& m = res.metrics;
        j["metrics"] = {{"P", number_or_null(m.power)},
                        {"eta", number_or_null(m.efficiency)},
                        {"HCOP", number_or_null(m.hcop)},
                        {"CCOP", number_or_null(m.ccop)},
                        {"eta_Otto", m.eta_otto},
                        {"eta_Otto_dressed", number_or_null(m.eta_otto_dressed)},
                        {"eta_Carnot", m.eta_carnot},
                        {"eta_CA", m.eta_ca}};
        os << j.dump(2) << '\n';
        return res.status == CycleStatus::NonConvergence ? kExitNoConvergence : kExitOk;
    }

    if (command == "sweep") {
        GridSpec spec;
        spec.axis1 = parse_grid_axis(s.at("sweep.axis1"), "sweep.axis1");
        spec.axis2 = parse_grid_axis(s.at("sweep.axis2"), "sweep.axis2");
        const long budget = to_integer(s.at("sweep.budget"), "sweep.budget");
        if (budget < 1) throw std::invalid_argument("sweep.budget must be >= 1");
        spec.budget = static_cast<std::size_t>(budget);
        spec.fixed = r.params();
        const auto results = sweep_grid(spec, workers);
        os << kPointHeader << '\n';
        std::size_t failed = 0;
        for (const auto& point : results) {
            write_point_row(os, point);
            if (point.status == PointStatus::NonConvergence) ++failed;
        }
        return failed == results.size() ? kExitNoConvergence : kExitOk;
    }

    if (command == "max-power") {
        const SearchRows search = run_search(r, s, workers);
        os << kRecordHeader << '\n';
        for (const auto& row : search.rows) write_record_row(os, row, r.base);
        return search.non_converged > 0 && search.non_converged == search.points
                   ? kExitNoConvergence
                   : kExitOk;
    }

    if (command == "mpr-fit") {
        if (r.model != ModelId::SingleQubit) {
            throw std::invalid_argument("mpr-fit applies to the single-qubit model");
        }
        if (!trim(s.at("search.scan_g")).empty()) {
            throw std::invalid_argument("mpr-fit scans levels; drop search.scan_g");
        }
        const SearchRows search = run_search(r, s, workers);
        std::vector<MaxPowerRecord> records;
        json rows = json::array();
        for (const auto& row : search.rows) {
            if (!row.record) continue;
            records.push_back(*row.record);
            rows.push_back(record_json(*row.record));
        }
        const LinearFit fit = fit_mpr(records);
        json j;
        j["slope"] = fit.slope;
        j["intercept"] = fit.intercept;
        j["max_residual"] = fit.max_residual;
        j["records"] = rows;
        os << j.dump(2) << '\n';
        return kExitOk;
    }

    if (command == "verify") {
        const long draws = to_integer(s.at("verify.draws"), "verify.draws");
        const long states = to_integer(s.at("verify.states"), "verify.states");
        if (draws < 1 || states < 1) {
            throw std::invalid_argument("verify.draws and verify.states must be >= 1");
        }
        const auto m = verification::measurement_equivalence(static_cast<int>(draws));
        const auto g = verification::generator_properties(static_cast<int>(states));
        json j;
        j["suites"] = {suite_json(m), suite_json(g)};
        j["passed"] = m.passed + g.passed;
        j["failed"] = m.failed + g.failed;
        os << j.dump(2) << '\n';
        return m.ok() && g.ok() ? kExitOk : kExitInvalid;
    }

    throw std::invalid_argument("unknown command '" + command +
                                "' (expected classify, sweep, max-power, mpr-fit or verify)");
}

}  // namespace

const Settings& default_settings() {
    static const Settings defaults = [] {
        Settings s;
        for (const auto& k : kKeys) s[k.key] = k.fallback;
        return s;
    }();
    return defaults;
}

Settings parse_config_text(std::string_view text) {
    Settings out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        const std::string body = trim(std::string_view(line).substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(number) +
                                        ": expected key = value");
        }
        const std::string key = trim(std::string_view(body).substr(0, eq));
        if (!default_settings().contains(key)) {
            throw std::invalid_argument("config line " + std::to_string(number) +
                                        ": unknown key '" + key + "'");
        }
        out[key] = trim(std::string_view(body).substr(eq + 1));
    }
    return out;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ScanRange parse_range(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
        throw std::invalid_argument("expected start:stop:step, got '" + std::string(text) + "'");
    }
    ScanRange r{to_number(parts[0], "range start"), to_number(parts[1], "range stop"),
                to_number(parts[2], "range step")};
    r.validate();
    return r;
}

std::vector<double> parse_value_list(std::string_view text) {
    if (text.find(':') != std::string_view::npos) return parse_range(text).values();
    std::vector<double> out;
    for (const auto& part : split(text, ',')) out.push_back(to_number(part, "value list"));
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum Otto machine simulator"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("--config", config_path, "key = value settings file");
    std::map<std::string, std::optional<std::string>> given;
    for (const auto& k : kKeys) {
        if (std::string_view(k.flag).empty()) continue;
        app.add_option(k.flag, given[k.key], std::string(k.help) + " [" + k.key + "]");
    }
    app.add_subcommand("classify", "iterate one parameter point and classify the machine");
    app.add_subcommand("sweep", "two-dimensional parameter grid, CSV");
    app.add_subcommand("max-power", "maximum power per temperature ratio, CSV");
    app.add_subcommand("mpr-fit", "linear fit of the single-qubit max-power level, JSON");
    app.add_subcommand("verify", "measurement and generator self-checks, JSON");

    std::vector<std::string> argv_store{"otto"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        Settings s = default_settings();
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::invalid_argument("cannot read config file '" + config_path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            for (auto& [k, v] : parse_config_text(buf.str())) s[k] = v;
        }
        for (const auto& [k, v] : given) {
            if (v) s[k] = *v;
        }

        std::string command = trim(s.at("command"));
        const auto subs = app.get_subcommands();
        if (!subs.empty()) command = subs.front()->get_name();
        if (command.empty()) {
            throw std::invalid_argument("no command given (classify, sweep, max-power, mpr-fit, verify)");
        }

        const std::string output = trim(s.at("run.output"));
        if (output.empty()) return dispatch(command, s, out);
        std::ofstream file(output, std::ios::binary | std::ios::trunc);
        if (!file) throw std::invalid_argument("cannot write output file '" + output + "'");
        const int code = dispatch(command, s, file);
        file.flush();
        if (!file) throw std::invalid_argument("failed writing output file '" + output + "'");
        return code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}

}  // namespace otto::cli
