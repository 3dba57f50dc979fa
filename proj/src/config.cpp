#include "agg/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "agg/errors.hpp"

namespace agg {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double to_double(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value '" + v + "' for key " + key);
    }
}

long long to_int(const std::string& v, const std::string& key) {
    try {
        std::size_t pos = 0;
        long long d = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        throw ConfigError("config: bad integer value '" + v + "' for key " + key);
    }
}

bool to_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "on") return true;
    if (v == "false" || v == "0" || v == "off") return false;
    throw ConfigError("config: bad boolean value '" + v + "' for key " + key);
}

} // namespace

void RunConfig::validate() const {
    [[maybe_unused]] Grid check_grid(n); // throws on bad n
    if (dt <= 0.0) throw ConfigError("config: time.dt must be positive");
    if (t_end <= 0.0) throw ConfigError("config: time.t_end must be positive");
    fluid.validate();
    if (output.diag_every < 1) throw ConfigError("config: output.diag_every must be >= 1");
    if (output.checkpoint_every < 0) throw ConfigError("config: output.checkpoint_every must be >= 0");
    if (ch.newton_tol <= 0.0 || ch.linsolve_tol <= 0.0)
        throw ConfigError("config: ch tolerances must be positive");
    if (ns.pressure_tol <= 0.0) throw ConfigError("config: ns.pressure_tol must be positive");
    if (ns.galerkin_m && *ns.galerkin_m < 1)
        throw ConfigError("config: ns.galerkin_m must be >= 1");
    if (!(std::abs(ic.mean) < 1.0))
        throw ConfigError("config: ic.mean must satisfy |mean| < 1");
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("config: malformed section at line " + std::to_string(lineno));
            section = trim(s.substr(1, s.size() - 2));
            if (section != "grid" && section != "time" && section != "fluid" &&
                section != "potential" && section != "ic" && section != "ns" &&
                section != "ch" && section != "output")
                throw ConfigError("config: unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected key = value at line " + std::to_string(lineno));
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        const std::string qual = section + "." + key;

        if (section == "grid") {
            if (key == "n") cfg.n = static_cast<int>(to_int(value, qual));
            else throw ConfigError("config: unknown key " + qual);
        } else if (section == "time") {
            if (key == "dt") cfg.dt = to_double(value, qual);
            else if (key == "t_end") cfg.t_end = to_double(value, qual);
            else throw ConfigError("config: unknown key " + qual);
        } else if (section == "fluid") {
            if (key == "rho1") cfg.fluid.rho1 = to_double(value, qual);
            else if (key == "rho2") cfg.fluid.rho2 = to_double(value, qual);
            else if (key == "nu1") cfg.fluid.nu1 = to_double(value, qual);
            else if (key == "nu2") cfg.fluid.nu2 = to_double(value, qual);
            else throw ConfigError("config: unknown key " + qual);
        } else if (section == "potential") {
            if (key == "theta") cfg.fluid.theta = to_double(value, qual);
            else if (key == "theta0") cfg.fluid.theta0 = to_double(value, qual);
            else throw ConfigError("config: unknown key " + qual);
        } else if (section == "ic") {
            if (key == "preset") {
                if (value == "spinodal") cfg.ic.preset = IcPreset::Spinodal;
                else if (value == "taylor_green") cfg.ic.preset = IcPreset::TaylorGreen;
                else if (value == "bubble") cfg.ic.preset = IcPreset::Bubble;
                else throw ConfigError("config: unknown ic.preset '" + value + "'");
            } else if (key == "seed") cfg.ic.seed = static_cast<std::uint64_t>(to_int(value, qual));
            else if (key == "mean") cfg.ic.mean = to_double(value, qual);
            else if (key == "amplitude") cfg.ic.amplitude = to_double(value, qual);
            else if (key == "velocity_amplitude") cfg.ic.velocity_amplitude = to_double(value, qual);
            else if (key == "phi_mode") cfg.ic.phi_mode = value;
            else if (key == "phi_value") cfg.ic.phi_value = to_double(value, qual);
            else if (key == "radius") cfg.ic.radius = to_double(value, qual);
            else if (key == "width") cfg.ic.width = to_double(value, qual);
            else if (key == "phi_max") cfg.ic.phi_max = to_double(value, qual);
            else if (key == "band_amplitude") cfg.ic.band_amplitude = to_double(value, qual);
            else if (key == "band_width") cfg.ic.band_width = to_double(value, qual);
            else throw ConfigError("config: unknown key " + qual);
        } else if (section == "ns") {
            if (key == "viscous_mode") {
                if (value == "explicit") cfg.ns.viscous_mode = ViscousMode::Explicit;
                else if (value == "semi_implicit") cfg.ns.viscous_mode = ViscousMode::SemiImplicit;
                else throw ConfigError("config: unknown ns.viscous_mode '" + value + "'");
            } else if (key == "pressure_tol") cfg.ns.pressure_tol = to_double(value, qual);
            else if (key == "pressure_max_iter") cfg.ns.pressure_max_iter = static_cast<int>(to_int(value, qual));
            else if (key == "galerkin_m") {
                const long long m = to_int(value, qual);
                if (m == 0) cfg.ns.galerkin_m.reset();
                else cfg.ns.galerkin_m = static_cast<int>(m);
            } else if (key == "flux_correction") cfg.ns.flux_correction = to_bool(value, qual);
            else throw ConfigError("config: unknown key " + qual);
        } else if (section == "ch") {
            if (key == "newton_tol") cfg.ch.newton_tol = to_double(value, qual);
            else if (key == "max_newton") cfg.ch.max_newton = static_cast<int>(to_int(value, qual));
            else if (key == "max_backtrack") cfg.ch.max_backtrack = static_cast<int>(to_int(value, qual));
            else if (key == "linsolve_tol") cfg.ch.linsolve_tol = to_double(value, qual);
            else throw ConfigError("config: unknown key " + qual);
        } else if (section == "output") {
            if (key == "dir") cfg.output.dir = value;
            else if (key == "csv") cfg.output.csv = value;
            else if (key == "checkpoint") cfg.output.checkpoint = value;
            else if (key == "diag_every") cfg.output.diag_every = static_cast<int>(to_int(value, qual));
            else if (key == "checkpoint_every") cfg.output.checkpoint_every = static_cast<int>(to_int(value, qual));
            else throw ConfigError("config: unknown key " + qual);
        } else {
            throw ConfigError("config: key '" + key + "' outside any section");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace agg
