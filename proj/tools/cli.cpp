#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catqec/loss_channel.hpp"
#include "catqec/qec_analysis.hpp"

namespace catqec::cli {

namespace {

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::string cell_text(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) return num(v);
            else if constexpr (std::is_same_v<T, long long>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return v;
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

Cell integer(unsigned long long v) { return static_cast<long long>(v); }

const char* input_label(bool minus) { return minus ? "a=-b" : "a=b"; }

}  // namespace

std::string format_csv(const DataTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_escape(t.columns[i]);
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_escape(cell_text(row[i]));
        out += '\n';
    }
    return out;
}

std::string format_json(const DataTable& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t i = 0; i < row.size(); ++i)
            std::visit([&](const auto& v) { rec[t.columns[i]] = v; }, row[i]);
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<double> linspace(double lo, double hi, unsigned steps) {
    if (steps == 0) throw std::invalid_argument("grid needs at least one point");
    if (steps == 1) return {hi};
    std::vector<double> v(steps);
    for (unsigned i = 0; i < steps; ++i) v[i] = lo + (hi - lo) * i / (steps - 1);
    v.back() = hi;
    return v;
}

DataTable weights_table(const CodeSpec& spec, const LogicalCoeffs& c, const std::vector<double>& gammas) {
    DataTable t;
    t.columns.push_back("gamma");
    for (unsigned i = 0; i < spec.cycle(); ++i) t.columns.push_back("ptilde_" + std::to_string(i));
    for (double g : gammas) {
        const auto w = loss_class_weights(spec, c, ChannelParams{g});
        std::vector<Cell> row{g};
        for (double x : w.ptilde) row.emplace_back(x);
        t.rows.push_back(std::move(row));
    }
    return t;
}

DataTable phase_space_table(const CodeSpec& spec) {
    spec.validate();
    DataTable t{{"k", "j", "re", "im"}, {}};
    for (unsigned k = 0; k < spec.d; ++k)
        for (unsigned j = 0; j < spec.modulus(); ++j) {
            const cplx b = spec.alpha * sector_phase(spec, k) * std::polar(1.0, 2.0 * std::numbers::pi * j / spec.modulus());
            t.rows.push_back({integer(k), integer(j), b.real(), b.imag()});
        }
    return t;
}

DataTable fidelity_table(const CodeSpec& spec, const std::vector<double>& gammas) {
    DataTable t{{"gamma", "F_plus", "F_minus", "F_bound"}, {}};
    for (double g : gammas) {
        const auto r = fidelity_bound(spec, ChannelParams{g});
        t.rows.push_back({g, r.F_plus, r.F_minus, r.F_bound});
    }
    return t;
}

DataTable kl_table(unsigned L, const std::vector<double>& alphas, const std::string& basis, unsigned max_loss,
                   const std::string& model, double gamma) {
    Basis b;
    if (basis == "z" || basis == "Z") b = Basis::Z;
    else if (basis == "x" || basis == "X") b = Basis::X;
    else throw std::invalid_argument("unknown basis '" + basis + "' (z|x)");
    KLOptions opts;
    if (model == "annihilation") opts.model = ErrorModel::Annihilation;
    else if (model == "kraus") opts.model = ErrorModel::Kraus;
    else throw std::invalid_argument("unknown error model '" + model + "' (annihilation|kraus)");
    opts.gamma = gamma;
    DataTable t{{"alpha", "losses", "ortho_violation", "deform_violation", "g_00", "g_11"}, {}};
    for (double a : alphas)
        for (unsigned k = 0; k <= max_loss; ++k) {
            const auto r = kl_check(CodeSpec{L, 2, a}, b, k, k, opts);
            t.rows.push_back({a, integer(k), r.ortho_violation, r.deform_violation, r.gram(0, 0).real(), r.gram(1, 1).real()});
        }
    return t;
}

DataTable tables_table(const std::vector<TableRowResult>& rows) {
    DataTable t{{"table", "L", "alpha", "spacing_km", "F_new_ref", "F_new", "F_new_dev", "P_new_ref", "P_new_ref_magnitude",
                 "P_new", "P_new_dev", "P_new_a=b", "P_new_a=-b", "F_old_ref", "F_old", "F_old_dev", "P_old_ref",
                 "P_old_ref_magnitude", "P_old", "P_old_dev", "P_old_a=b", "P_old_a=-b", "worst_new", "worst_old"},
                {}};
    for (const auto& r : rows) {
        const auto& ref = r.ref;
        t.rows.push_back({ref.table, integer(ref.L), ref.alpha, ref.spacing_km, ref.F_new.value, r.F_new(),
                          fidelity_deviation(r.F_new(), ref.F_new), ref.P_new.value, ref.P_new.magnitude_only, r.P_new(),
                          probability_deviation(r.P_new(), ref.P_new), r.fresh.plus.success_prob,
                          r.fresh.minus.success_prob, ref.F_old.value, r.F_old(), fidelity_deviation(r.F_old(), ref.F_old),
                          ref.P_old.value, ref.P_old.magnitude_only, r.P_old(), probability_deviation(r.P_old(), ref.P_old),
                          r.old.plus.success_prob, r.old.minus.success_prob,
                          std::string(input_label(r.fresh.minus_is_worst)), std::string(input_label(r.old.minus_is_worst))});
    }
    return t;
}

std::string tables_text(const std::vector<TableRowResult>& rows) {
    std::ostringstream os;
    auto ref_str = [](const RefValue& v) {
        char buf[32];
        if (v.magnitude_only) std::snprintf(buf, sizeof buf, "~%.3g", v.value);
        else std::snprintf(buf, sizeof buf, "%.6g", v.value);
        return std::string(buf);
    };
    auto dev_str = [](double d, bool relative) {
        char buf[32];
        if (std::isinf(d)) return std::string("n/a");
        if (relative) std::snprintf(buf, sizeof buf, "%+.1f%%", 100.0 * d);
        else std::snprintf(buf, sizeof buf, "%+.2e", d);
        return std::string(buf);
    };
    char line[512];
    std::string current;
    for (const auto& r : rows) {
        if (r.ref.table != current) {
            current = r.ref.table;
            std::snprintf(line, sizeof line, "Table %s (L=%u)\n", current.c_str(), r.ref.L);
            os << (os.tellp() > 0 ? "\n" : "") << line;
            std::snprintf(line, sizeof line, "%5s %6s | %11s %11s %10s | %11s %11s %8s | %11s %11s %10s | %11s %11s %8s | %s\n",
                          "alpha", "L0", "F_new", "ref", "dev", "P_new", "ref", "dev", "F_old", "ref", "dev", "P_old", "ref",
                          "dev", "worst");
            os << line;
        }
        const auto& f = r.ref;
        std::snprintf(line, sizeof line,
                      "%5.1f %6.2f | %11.6g %11s %10s | %11.4g %11s %8s | %11.6g %11s %10s | %11.4g %11s %8s | %s/%s%s\n",
                      f.alpha, f.spacing_km, r.F_new(), ref_str(f.F_new).c_str(),
                      dev_str(fidelity_deviation(r.F_new(), f.F_new), false).c_str(), r.P_new(), ref_str(f.P_new).c_str(),
                      dev_str(probability_deviation(r.P_new(), f.P_new), true).c_str(), r.F_old(), ref_str(f.F_old).c_str(),
                      dev_str(fidelity_deviation(r.F_old(), f.F_old), false).c_str(), r.P_old(), ref_str(f.P_old).c_str(),
                      dev_str(probability_deviation(r.P_old(), f.P_old), true).c_str(), input_label(r.fresh.minus_is_worst),
                      input_label(r.old.minus_is_worst), f.highlighted ? "  *" : "");
        os << line;
        std::snprintf(line, sizeof line, "%14s   P_new a=b %.4g  a=-b %.4g   P_old a=b %.4g  a=-b %.4g\n", "",
                      r.fresh.plus.success_prob, r.fresh.minus.success_prob, r.old.plus.success_prob,
                      r.old.minus.success_prob);
        os << line;
    }
    os << "\nF: worst of a=b and a=-b (absolute deviation). P: from the same run (relative deviation).\n"
          "~ marks reference values quoted only to order of magnitude; * marks highlighted rows.\n";
    return os.str();
}

DataTable sweep_table(const RepeaterConfig& base, SweepAxis axis, const std::vector<double>& values, bool worst_case) {
    const char* name = axis == SweepAxis::Spacing ? "spacing_km" : axis == SweepAxis::Alpha ? "alpha" : "gamma";
    DataTable t;
    if (worst_case) {
        t.columns = {name, "F", "P", "worst", "F_a=b", "P_a=b", "F_a=-b", "P_a=-b", "stations", "restorations",
                     "collapsed", "spacing_rounded"};
        const auto res = sweep_worst_case(base, axis, values);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const auto& w = res[i];
            const auto& r = w.minus_is_worst ? w.minus : w.plus;
            t.rows.push_back({values[i], w.fidelity(), w.success_prob(), std::string(input_label(w.minus_is_worst)),
                              w.plus.fidelity, w.plus.success_prob, w.minus.fidelity, w.minus.success_prob,
                              integer(r.stations), integer(r.restorations), w.plus.collapsed || w.minus.collapsed,
                              r.spacing_rounded});
        }
    } else {
        t.columns = {name, "F", "P", "stations", "restorations", "collapsed", "spacing_rounded"};
        const auto res = sweep(base, axis, values);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const auto& r = res[i];
            t.rows.push_back({values[i], r.fidelity, r.success_prob, integer(r.stations), integer(r.restorations),
                              r.collapsed, r.spacing_rounded});
        }
    }
    return t;
}

namespace {

struct Options {
    unsigned L = 1;
    unsigned d = 2;
    double alpha = 2.0;
    double a = 1.0;
    double b = 1.0;
    double c = 0.0;
    double gamma_min = 0.01;
    double gamma_max = 1.0;
    unsigned gamma_steps = 100;
    double total_km = 1000.0;
    double spacing_km = 0.1;
    double attenuation_km = 22.0;
    unsigned ar_every = 2;
    std::string scheme = "new";
    std::string out;
    std::string format = "csv";
    std::vector<double> alphas{1, 2, 3, 4, 5, 6};
    std::string basis = "z";
    unsigned max_loss = 4;
    std::string model = "annihilation";
    double kraus_gamma = 0.9;
    std::string axis = "spacing";
    std::vector<double> values;
    std::string table = "all";
    bool trace = false;
    bool phase_space = false;
};

struct Emit {
    std::string body;
    bool failed = false;  // numerical validation failed (verify)
};

LogicalCoeffs coeffs_from(const Options& o, bool c_given) {
    if (o.d == 2) {
        if (c_given) throw std::invalid_argument("--c applies to d = 3 only");
        return LogicalCoeffs::normalized({o.a, o.b});
    }
    if (o.d == 3) return LogicalCoeffs::normalized({o.a, o.b, o.c});
    throw std::invalid_argument("coefficients for d > 3 cannot be given on the command line");
}

RepeaterConfig repeater_config(const Options& o, bool ar_given) {
    RepeaterConfig cfg;
    cfg.total_km = o.total_km;
    cfg.spacing_km = o.spacing_km;
    cfg.attenuation_km = o.attenuation_km;
    if (ar_given) cfg.ar_every = o.ar_every;
    else if (o.scheme == "new") cfg.ar_every = 2;
    else if (o.scheme == "old") cfg.ar_every = 1;
    else throw std::invalid_argument("unknown scheme '" + o.scheme + "' (old|new)");
    cfg.spec = CodeSpec{o.L, 2, o.alpha};
    cfg.keep_trace = false;
    return cfg;
}

std::string render(const DataTable& t, const std::string& format) {
    if (format == "csv") return format_csv(t);
    if (format == "json") return format_json(t);
    throw std::invalid_argument("format '" + format + "' not available for this subcommand (csv|json)");
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_manifest(const std::string& path, const std::string& subcommand, const std::string& config_text,
                    const std::string& body) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::istringstream is(config_text);
    for (std::string line; std::getline(is, line);) {
        const auto eq = line.find('=');
        if (line.empty() || line[0] == '#' || line[0] == '[' || eq == std::string::npos) continue;
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        while (!key.empty() && key.back() == ' ') key.pop_back();
        while (!val.empty() && val.front() == ' ') val.erase(val.begin());
        if (val.size() >= 2 && (val.front() == '"' || val.front() == '\'') && val.back() == val.front())
            val = val.substr(1, val.size() - 2);
        if (key == "out" || key == "config") continue;
        params[key] = val;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
    nlohmann::ordered_json m;
    m["subcommand"] = subcommand;
    m["params"] = params;
    m["version"] = CATQEC_VERSION;
    m["checksum"] = std::string("fnv1a64:") + hex;
    m["timestamp"] = utc_timestamp();
    std::ofstream f(path + ".manifest.json");
    if (!f) throw std::runtime_error("cannot write manifest beside " + path);
    f << m.dump(2) << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Multi-component cat codes under photon loss: weights, fidelities, KL checks and repeater chains",
                 "catqec"};
    app.set_config("--config", "", "key=value file supplying defaults; command-line flags take precedence");
    app.set_version_flag("--version", std::string(CATQEC_VERSION));
    app.require_subcommand(1);

    app.add_option("--L", o.L, "Correctable losses L")->capture_default_str();
    app.add_option("--d", o.d, "Logical dimension d")->capture_default_str()->check(CLI::Range(2u, 64u));
    app.add_option("--alpha", o.alpha, "Coherent amplitude alpha")->capture_default_str();
    auto* opt_a = app.add_option("--a", o.a, "Logical coefficient of |0> (normalized with b, c)")->capture_default_str();
    auto* opt_b = app.add_option("--b", o.b, "Logical coefficient of |1>")->capture_default_str();
    auto* opt_c = app.add_option("--c", o.c, "Logical coefficient of |2> (d = 3)")->capture_default_str();
    app.add_option("--gamma-min", o.gamma_min, "Smallest transmission on the grid")->capture_default_str();
    app.add_option("--gamma-max", o.gamma_max, "Largest transmission on the grid")->capture_default_str();
    app.add_option("--gamma-steps", o.gamma_steps, "Number of grid points")->capture_default_str();
    app.add_option("--total-km", o.total_km, "Total distance")->capture_default_str();
    app.add_option("--spacing-km", o.spacing_km, "Station spacing L0")->capture_default_str();
    app.add_option("--attenuation-km", o.attenuation_km, "Attenuation length")->capture_default_str();
    auto* opt_ar = app.add_option("--ar-every", o.ar_every, "Restore amplitude every n-th station (overrides --scheme)")
                       ->capture_default_str();
    app.add_option("--scheme", o.scheme, "old: restore at every station, new: every second")
        ->capture_default_str()
        ->check(CLI::IsMember({"old", "new"}));
    app.add_option("--out", o.out, "Output file; a manifest is written beside it");
    app.add_option("--format", o.format, "csv|json (tables also: text)")->capture_default_str();
    app.add_option("--alphas", o.alphas, "Amplitude list for kl-report")->delimiter(',')->capture_default_str();
    app.add_option("--basis", o.basis, "z|x")->capture_default_str();
    app.add_option("--max-loss", o.max_loss, "Largest loss count in kl-report")->capture_default_str();
    app.add_option("--model", o.model, "annihilation|kraus")->capture_default_str();
    app.add_option("--kraus-gamma", o.kraus_gamma, "Transmission for the Kraus error model")->capture_default_str();
    app.add_option("--axis", o.axis, "spacing|alpha|gamma")->capture_default_str();
    app.add_option("--values", o.values, "Sweep values")->delimiter(',');
    app.add_option("--table", o.table, "I|II|III|all")->capture_default_str();
    app.add_flag("--trace", o.trace, "repeater: per-station factors of the reported run");
    app.add_flag("--phase-space", o.phase_space, "weights: emit coherent-component positions instead");

    auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help)->fallthrough(); };
    auto* s_weights = sub("weights", "Mixture weights ptilde_i over a transmission grid");
    auto* s_fid = sub("fidelity", "Worst-case fidelity bound over a transmission grid");
    auto* s_kl = sub("kl-report", "Knill-Laflamme orthogonality and deformation violations");
    auto* s_rep = sub("repeater", "One repeater chain");
    auto* s_tables = sub("tables", "Old vs new scheme table rows with deviations");
    auto* s_sweep = sub("sweep", "Repeater chains over one parameter axis");
    auto* s_verify = sub("verify", "Library results against brute-force references");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    std::string subcommand;
    Emit emit;
    try {
        const bool single_input = opt_a->count() > 0 || opt_b->count() > 0;
        if (s_weights->parsed()) {
            subcommand = "weights";
            const CodeSpec spec{o.L, o.d, o.alpha};
            spec.validate();
            const auto t = o.phase_space ? phase_space_table(spec)
                                         : weights_table(spec, coeffs_from(o, opt_c->count() > 0),
                                                         linspace(o.gamma_min, o.gamma_max, o.gamma_steps));
            emit.body = render(t, o.format);
        } else if (s_fid->parsed()) {
            subcommand = "fidelity";
            if (o.d != 2) throw std::invalid_argument("fidelity: qubit codes only (d = 2)");
            emit.body = render(fidelity_table(CodeSpec{o.L, 2, o.alpha}, linspace(o.gamma_min, o.gamma_max, o.gamma_steps)),
                               o.format);
        } else if (s_kl->parsed()) {
            subcommand = "kl-report";
            emit.body = render(kl_table(o.L, o.alphas, o.basis, o.max_loss, o.model, o.kraus_gamma), o.format);
        } else if (s_rep->parsed()) {
            subcommand = "repeater";
            RepeaterConfig cfg = repeater_config(o, opt_ar->count() > 0);
            cfg.keep_trace = o.trace;
            std::vector<std::pair<std::string, ChainResult>> runs;
            std::string reported;
            if (single_input) {
                cfg.coeffs = LogicalCoeffs::normalized({o.a, o.b});
                runs.emplace_back("custom", simulate_chain(cfg));
                reported = "custom";
            } else {
                auto w = simulate_worst_case(cfg);
                reported = input_label(w.minus_is_worst);
                runs.emplace_back("a=b", std::move(w.plus));
                runs.emplace_back("a=-b", std::move(w.minus));
            }
            DataTable t;
            if (o.trace) {
                t.columns = {"station", "amplitude_in", "F_factor", "P_factor"};
                for (const auto& [label, r] : runs)
                    if (label == reported)
                        for (const auto& s : r.trace)
                            t.rows.push_back({integer(s.station), s.amplitude_in, s.F_factor, s.P_factor});
            } else {
                t.columns = {"input", "worst", "fidelity", "success_prob", "stations", "restorations", "ar_every",
                             "collapsed", "spacing_rounded"};
                for (const auto& [label, r] : runs)
                    t.rows.push_back({label, label == reported, r.fidelity, r.success_prob, integer(r.stations),
                                      integer(r.restorations), integer(cfg.ar_every), r.collapsed, r.spacing_rounded});
            }
            emit.body = render(t, o.format);
        } else if (s_tables->parsed()) {
            subcommand = "tables";
            const auto refs = table_reference(o.table == "all" ? "" : o.table);
            std::vector<TableRowResult> rows;
            for (const auto& ref : refs) rows.push_back(reproduce_row(ref, o.total_km, o.attenuation_km));
            emit.body = o.format == "text" ? tables_text(rows) : render(tables_table(rows), o.format);
        } else if (s_sweep->parsed()) {
            subcommand = "sweep";
            if (o.values.empty()) throw std::invalid_argument("sweep: --values is required");
            RepeaterConfig cfg = repeater_config(o, opt_ar->count() > 0);
            if (single_input) cfg.coeffs = LogicalCoeffs::normalized({o.a, o.b});
            emit.body = render(sweep_table(cfg, parse_sweep_axis(o.axis), o.values, !single_input), o.format);
        } else if (s_verify->parsed()) {
            subcommand = "verify";
            const auto checks = run_verify();
            DataTable t{{"check", "value", "tolerance", "passed"}, {}};
            for (const auto& c : checks) {
                t.rows.push_back({c.name, c.value, c.tolerance, c.passed});
                emit.failed = emit.failed || !c.passed;
            }
            if (o.format == "text") {
                std::ostringstream os;
                for (const auto& c : checks)
                    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << short_num(c.value) << " (tol " << short_num(c.tolerance)
                       << ")\n";
                os << (emit.failed ? "verify: FAILED\n" : "verify: all checks passed\n");
                emit.body = os.str();
            } else {
                emit.body = render(t, o.format);
            }
        }

        if (o.out.empty()) {
            out << emit.body;
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot open --out file '" + o.out + "'");
            f << emit.body;
            f.close();
            write_manifest(o.out, subcommand, app.config_to_str(true, false), emit.body);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    }
    return emit.failed ? 2 : 0;
}

}  // namespace catqec::cli
