#include "tdsts/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "tdsts/analytic.hpp"
#include "tdsts/kernels.hpp"
#include "tdsts/oracle.hpp"

namespace tdsts {

namespace {

std::string num17(double v) {
    if (v == 0.0) v = 0.0;  // fold -0 into 0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Writes through a temporary file and renames, so failures leave no partial
// output. path "-" streams to stdout.
void write_output(const std::string& path, const std::string& body) {
    if (path == "-" || path.empty()) {
        std::cout << body;
        std::cout.flush();
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open output file: " + tmp);
        out << body;
        if (!out) throw ConfigError("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

struct EvalRow {
    double t, mean_x, var_x, mean_p, var_p, up, entropy, dy1, dy2;
};

EvalRow eval_row(const StateSpec& spec, double t) {
    const XPMoments m = xp_moments(spec, t);
    const auto qv = quadrature_variances(spec, t, 0.0);
    return {t,
            m.mean_x,
            m.var_x,
            m.mean_p,
            m.var_p,
            uncertainty_product(spec, t),
            entropy_sum(spec, t),
            qv.dy1_sq,
            qv.dy2_sq};
}

const char* kEvalColumns =
    "t,mean_x,var_x,mean_p,var_p,uncertainty_product,entropy_sum,dy1_sq,dy2_sq";

void append_row_csv(std::string& body, const EvalRow& r) {
    body += num17(r.t);
    for (double v : {r.mean_x, r.var_x, r.mean_p, r.var_p, r.up, r.entropy, r.dy1, r.dy2}) {
        body += ',';
        body += num17(v);
    }
    body += '\n';
}

std::string row_json_fields(const EvalRow& r) {
    return "\"t\": " + num17(r.t) + ", \"mean_x\": " + num17(r.mean_x) +
           ", \"var_x\": " + num17(r.var_x) + ", \"mean_p\": " + num17(r.mean_p) +
           ", \"var_p\": " + num17(r.var_p) +
           ", \"uncertainty_product\": " + num17(r.up) +
           ", \"entropy_sum\": " + num17(r.entropy) + ", \"dy1_sq\": " + num17(r.dy1) +
           ", \"dy2_sq\": " + num17(r.dy2);
}

std::string photon_csv_header(const PhotonStats& ps) {
    std::string line = "# photon_stats mean_n=" + num17(ps.mean_n) +
                       " var_n=" + num17(ps.var_n) + " g2=";
    line += ps.g2 ? num17(*ps.g2) : std::string("undefined");
    line += '\n';
    return line;
}

std::string photon_json(const PhotonStats& ps) {
    std::string s = "{\"mean_n\": " + num17(ps.mean_n) +
                    ", \"var_n\": " + num17(ps.var_n) + ", \"g2\": ";
    s += ps.g2 ? num17(*ps.g2) : std::string("null");
    s += "}";
    return s;
}

}  // namespace

int cmd_evaluate(const RunConfig& cfg) {
    const StateSpec& spec = cfg.state;
    const PhotonStats ps = photon_stats(spec);

    std::vector<EvalRow> rows(static_cast<std::size_t>(cfg.time_grid.count));
    kernels::parallel_for(cfg.time_grid.count, [&](std::ptrdiff_t i) {
        rows[static_cast<std::size_t>(i)] =
            eval_row(spec, cfg.time_grid.at(static_cast<int>(i)));
    });

    std::string body;
    if (cfg.output.format == "csv") {
        body += photon_csv_header(ps);
        body += kEvalColumns;
        body += '\n';
        for (const auto& r : rows) append_row_csv(body, r);
    } else {
        body += "{\n  \"photon_stats\": " + photon_json(ps) + ",\n  \"rows\": [\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            body += "    {" + row_json_fields(rows[i]) + "}";
            body += (i + 1 == rows.size()) ? "\n" : ",\n";
        }
        body += "  ]\n}\n";
    }
    write_output(cfg.output.path, body);
    return 0;
}

int cmd_density(const RunConfig& cfg, DensityKind kind) {
    const StateSpec& spec = cfg.state;
    const double t = cfg.time_grid.start;
    const XPMoments m = xp_moments(spec, t);

    std::string body;
    const bool csv = cfg.output.format == "csv";
    auto open_json = [&] { body += "[\n"; };
    auto close_json = [&] { body += "]\n"; };

    if (kind == DensityKind::position || kind == DensityKind::momentum) {
        const bool pos = kind == DensityKind::position;
        const GridSpec& g = pos ? cfg.grid_x : cfg.grid_p;
        const double mean = pos ? m.mean_x : m.mean_p;
        const double sigma = std::sqrt(pos ? m.var_x : m.var_p);
        const double lo = mean - g.halfwidth_sigmas * sigma;
        const double step = 2.0 * g.halfwidth_sigmas * sigma / (g.points - 1);

        std::vector<double> val(static_cast<std::size_t>(g.points));
        kernels::parallel_for(g.points, [&](std::ptrdiff_t i) {
            const double u = lo + step * static_cast<double>(i);
            val[static_cast<std::size_t>(i)] =
                pos ? prob_x(spec, u, t) : prob_p(spec, u, t);
        });
        if (csv) {
            body += pos ? "x,density\n" : "p,density\n";
            for (int i = 0; i < g.points; ++i)
                body += num17(lo + step * i) + "," + num17(val[i]) + "\n";
        } else {
            open_json();
            for (int i = 0; i < g.points; ++i) {
                body += std::string("  {\"") + (pos ? "x" : "p") +
                        "\": " + num17(lo + step * i) +
                        ", \"density\": " + num17(val[i]) + "}";
                body += (i + 1 == g.points) ? "\n" : ",\n";
            }
            close_json();
        }
        write_output(cfg.output.path, body);
        return 0;
    }

    // two-argument grids: wavefunction over (x, x_tilde), rho over (x, x')
    const GridSpec& g = cfg.grid_x;
    const double sigma = std::sqrt(m.var_x);
    const double lo = m.mean_x - g.halfwidth_sigmas * sigma;
    const double step = 2.0 * g.halfwidth_sigmas * sigma / (g.points - 1);
    const int n = g.points;

    std::vector<Complex> val(static_cast<std::size_t>(n) * n);
    kernels::parallel_for(static_cast<std::ptrdiff_t>(n) * n, [&](std::ptrdiff_t idx) {
        const int i = static_cast<int>(idx / n);
        const int j = static_cast<int>(idx % n);
        const double a = lo + step * i;
        const double b = lo + step * j;
        val[static_cast<std::size_t>(idx)] = (kind == DensityKind::wavefunction)
                                                 ? wavefunction(spec, a, b, t)
                                                 : rho_position(spec, b, a, t);
    });
    // rho rows are written as (x, x_prime, re, im) with value <x|rho|x'>

    const char* headers = (kind == DensityKind::wavefunction)
                              ? "x,x_tilde,re,im\n"
                              : "x,x_prime,re,im\n";
    const char* key2 = (kind == DensityKind::wavefunction) ? "x_tilde" : "x_prime";
    if (csv) {
        body += headers;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Complex v = val[static_cast<std::size_t>(i) * n + j];
                body += num17(lo + step * i) + "," + num17(lo + step * j) + "," +
                        num17(v.real()) + "," + num17(v.imag()) + "\n";
            }
    } else {
        open_json();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Complex v = val[static_cast<std::size_t>(i) * n + j];
                body += "  {\"x\": " + num17(lo + step * i) + ", \"" + key2 +
                        "\": " + num17(lo + step * j) + ", \"re\": " + num17(v.real()) +
                        ", \"im\": " + num17(v.imag()) + "}";
                body += (i + 1 == n && j + 1 == n) ? "\n" : ",\n";
            }
        close_json();
    }
    write_output(cfg.output.path, body);
    return 0;
}

namespace {

// Axis paths: r, phi, alpha.mod, alpha.arg, alpha.re, alpha.im,
// tau1[k], tau2[k], T1[k], T2[k] (index defaults to 0 and may extend the list).
void apply_axis(StateSpec& spec, const std::string& axis, double value) {
    auto index_of = [](const std::string& name, std::size_t base_len) {
        if (name.size() == base_len) return std::size_t{0};
        if (name[base_len] != '[' || name.back() != ']')
            throw ConfigError("bad axis index in " + name);
        const std::string digits = name.substr(base_len + 1, name.size() - base_len - 2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ConfigError("bad axis index in " + name);
        return static_cast<std::size_t>(std::stoul(digits));
    };
    auto set_temp = [&](std::vector<double>& list, std::size_t index,
                        bool dimensionless) {
        if (list.size() <= index) list.resize(index + 1, 0.0);
        list[index] = dimensionless
                          ? value * spec.osc.hbar * spec.osc.omega / spec.osc.kb
                          : value;
    };

    if (axis == "r") {
        spec.z.r = value;
    } else if (axis == "phi") {
        double phi = std::fmod(value, 2.0 * std::numbers::pi);
        if (phi < 0.0) phi += 2.0 * std::numbers::pi;
        spec.z.phi = phi;
    } else if (axis == "alpha.re") {
        spec.alpha.re = value;
    } else if (axis == "alpha.im") {
        spec.alpha.im = value;
    } else if (axis == "alpha.mod") {
        spec.alpha = Displacement::polar(value, spec.alpha.arg());
    } else if (axis == "alpha.arg") {
        spec.alpha = Displacement::polar(spec.alpha.mod(), value);
    } else if (axis.rfind("tau1", 0) == 0) {
        set_temp(spec.thermal.input_temps, index_of(axis, 4), true);
    } else if (axis.rfind("tau2", 0) == 0) {
        set_temp(spec.thermal.detector_temps, index_of(axis, 4), true);
    } else if (axis.rfind("T1", 0) == 0) {
        set_temp(spec.thermal.input_temps, index_of(axis, 2), false);
    } else if (axis.rfind("T2", 0) == 0) {
        set_temp(spec.thermal.detector_temps, index_of(axis, 2), false);
    } else {
        throw ConfigError("unknown sweep axis: " + axis);
    }
    spec.validate();
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, const std::string& axis,
              const std::vector<double>& values) {
    if (values.empty()) throw ConfigError("sweep needs at least one value");
    {
        // fail fast on a bad axis path before any work
        StateSpec probe = cfg.state;
        apply_axis(probe, axis, values.front());
    }

    const int nt = cfg.time_grid.count;
    struct SweepRow {
        double axis_value;
        EvalRow row;
    };
    std::vector<SweepRow> rows(values.size() * static_cast<std::size_t>(nt));
    kernels::parallel_for(static_cast<std::ptrdiff_t>(rows.size()),
                          [&](std::ptrdiff_t idx) {
                              const std::size_t vi = idx / nt;
                              const int ti = static_cast<int>(idx % nt);
                              StateSpec spec = cfg.state;
                              apply_axis(spec, axis, values[vi]);
                              rows[idx] = {values[vi],
                                           eval_row(spec, cfg.time_grid.at(ti))};
                          });

    std::string body;
    if (cfg.output.format == "csv") {
        body += axis + std::string(",") + kEvalColumns + "\n";
        for (const auto& r : rows) {
            body += num17(r.axis_value);
            body += ',';
            std::string line;
            append_row_csv(line, r.row);
            body += line;
        }
    } else {
        body += "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            body += "  {\"" + axis + "\": " + num17(rows[i].axis_value) + ", " +
                    row_json_fields(rows[i].row) + "}";
            body += (i + 1 == rows.size()) ? "\n" : ",\n";
        }
        body += "]\n";
    }
    write_output(cfg.output.path, body);
    return 0;
}

int cmd_validate(const validation::Options& opt) {
    const auto report = validation::run_suite(opt);
    validation::print_report(report, std::cout);
    return report.pass() ? 0 : 1;
}

DensityKind parse_density_kind(const std::string& name) {
    if (name == "position") return DensityKind::position;
    if (name == "momentum") return DensityKind::momentum;
    if (name == "wavefunction") return DensityKind::wavefunction;
    if (name == "rho") return DensityKind::rho;
    throw ConfigError("unknown density kind: " + name);
}

}  // namespace tdsts
