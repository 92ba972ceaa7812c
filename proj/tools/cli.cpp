#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "catphase/closedform.hpp"
#include "catphase/errors.hpp"
#include "catphase/quadrature.hpp"
#include "catphase/validation.hpp"

namespace catphase::cli {

namespace {

using nlohmann::json;

constexpr double kLn2Pi1 = 2.8378770664093454836;  // 1 + ln(2 pi)

Complex parse_complex(const std::string& text, const std::string& flag) {
    const auto parse_part = [&](std::string_view part) {
        double value = 0.0;
        const char* begin = part.data();
        const char* end = begin + part.size();
        const auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr != end) {
            throw UsageError(flag + ": expected a number or \"re,im\", got \"" + text + "\"");
        }
        return value;
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return Complex(parse_part(text), 0.0);
    }
    return Complex(parse_part(std::string_view(text).substr(0, comma)),
                   parse_part(std::string_view(text).substr(comma + 1)));
}

struct Table {
    std::vector<std::string> comments;  // "key=value", emitted as "# key=value"
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;  // column-major, equal lengths
};

void write_csv(std::ostream& os, const Table& table) {
    for (const auto& c : table.comments) os << "# " << c << "\n";
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        os << (i ? "," : "") << table.header[i];
    }
    os << "\n";
    const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            os << (c ? "," : "") << format_double(table.columns[c][r]);
        }
        os << "\n";
    }
}

json table_to_json(const Table& table) {
    json results = json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        results[table.header[c]] = table.columns[c];
    }
    return results;
}

std::string state_kind_name(StateSpec::Kind kind) {
    switch (kind) {
        case StateSpec::Kind::Coherent: return "coherent";
        case StateSpec::Kind::Cat: return "cat";
        case StateSpec::Kind::Equientropic: return "equientropic";
        case StateSpec::Kind::Kerr: return "kerr";
    }
    return "?";
}

std::string command_name(RunConfig::Command command) {
    switch (command) {
        case RunConfig::Command::Profile: return "profile";
        case RunConfig::Command::Entropy: return "entropy";
        case RunConfig::Command::GammaScan: return "gamma-scan";
        case RunConfig::Command::Kerr: return "kerr";
        case RunConfig::Command::Equientropic: return "equientropic";
        case RunConfig::Command::Validate: return "validate";
    }
    return "?";
}

json config_to_json(const RunConfig& config) {
    json j;
    j["command"] = command_name(config.command);
    j["format"] = config.format == RunConfig::Format::Csv ? "csv" : "json";
    j["tol"] = config.tol;
    j["output"] = config.output;
    switch (config.command) {
        case RunConfig::Command::Profile:
        case RunConfig::Command::Kerr:
            j["theta_points"] = config.theta_points;
            break;
        case RunConfig::Command::GammaScan:
            j["gamma_points"] = config.gamma_points;
            break;
        case RunConfig::Command::Equientropic:
            j["N_list"] = config.n_list;
            break;
        default:
            break;
    }
    if (config.command == RunConfig::Command::Equientropic ||
        config.command == RunConfig::Command::GammaScan) {
        j["alpha0"] = {config.state.alpha0.real(), config.state.alpha0.imag()};
    } else if (config.command != RunConfig::Command::Validate) {
        json s;
        s["kind"] = state_kind_name(config.state.kind);
        s["alpha0"] = {config.state.alpha0.real(), config.state.alpha0.imag()};
        if (config.state.kind == StateSpec::Kind::Cat) s["gamma"] = config.state.gamma;
        if (config.state.kind == StateSpec::Kind::Equientropic ||
            config.state.kind == StateSpec::Kind::Kerr) {
            s["N"] = config.state.n;
        }
        if (config.state.kind == StateSpec::Kind::Kerr) s["M"] = config.state.m;
        j["state"] = s;
    }
    return j;
}

void emit(const RunConfig& config, const Table& table, const json& extra_results,
          const json& error_estimate, const std::vector<std::string>& formula_refs,
          std::ostream& out) {
    std::ofstream file;
    std::ostream* os = &out;
    if (config.output != "-") {
        file.open(config.output, std::ios::binary);
        if (!file) throw UsageError("cannot open output file: " + config.output);
        os = &file;
    }

    if (config.format == RunConfig::Format::Csv) {
        write_csv(*os, table);
    } else {
        json j;
        j["config"] = config_to_json(config);
        json results = table_to_json(table);
        for (auto it = extra_results.begin(); it != extra_results.end(); ++it) {
            results[it.key()] = it.value();
        }
        j["results"] = results;
        j["error_estimate"] = error_estimate;
        j["provenance"] = {{"tool", "catphase"},
                           {"version", "0.1.0"},
                           {"formula_refs", formula_refs}};
        *os << j.dump(2) << "\n";
    }
    os->flush();
}

std::vector<double> state_weights(const CoherentSuperposition& state) {
    std::vector<double> weights;
    weights.reserve(state.size());
    double sum = 0.0;
    for (const auto& c : state.components()) {
        weights.push_back(std::norm(c.coefficient));
        sum += weights.back();
    }
    // |c_k|^2 sums to 1 only in the well-separated limit; the entropy
    // estimate takes the normalized probabilities.
    for (auto& w : weights) w /= sum;
    return weights;
}

int run_profile(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const CoherentSuperposition state = build_state(config.state);
    const PolarQuadrature converged = default_quadrature(state, config.tol);
    const PolarQuadrature quad(converged.radial_nodes(), config.theta_points, converged.r_max());

    const PhaseProfile wpd = wehrl_pd(state, quad);
    const PhaseProfile hpd = husimi_pd(state, quad);

    Table table;
    table.header = {"theta", "wehrl_pd", "husimi_pd"};
    table.columns = {wpd.thetas, wpd.values, hpd.values};
    std::vector<std::string> refs = {"husimi-q-direct-overlap", "wehrl-pd-radial-integral",
                                     "husimi-pd-radial-integral"};
    try {
        std::vector<double> approx(wpd.thetas.size());
        for (std::size_t i = 0; i < wpd.thetas.size(); ++i) {
            approx[i] = approx_kitten_wehrl_pd(state, wpd.thetas[i]);
        }
        table.header.push_back("wehrl_pd_approx");
        table.columns.push_back(std::move(approx));
        refs.push_back("kitten-wehrl-pd-approximation");
    } catch (const MixedModuliError&) {
        // components not on a common circle: no closed-form column
    }

    json extra;
    extra["wehrl_pd_integral"] = wpd.integral;
    extra["husimi_pd_integral"] = hpd.integral;
    if (config.command == RunConfig::Command::Kerr) {
        const bool deformed = config.state.n >= n_max(config.state.alpha0);
        extra["deformed_regime"] = deformed;
        table.comments.push_back(std::string("deformed_regime=") + (deformed ? "1" : "0"));
        refs.emplace_back("kerr-superposition-coefficients");
        if (deformed) {
            err << "note: N = " << config.state.n << " >= " << n_max(config.state.alpha0)
                << " well-separated components at this amplitude; profile is in the deformed regime\n";
        }
    }

    emit(config, table, extra, json(), refs, out);
    return 0;
}

int run_entropy(const RunConfig& config, std::ostream& out, std::ostream&) {
    const CoherentSuperposition state = build_state(config.state);
    const PolarQuadrature quad = default_quadrature(state, config.tol);
    const EntropyReport report = wehrl_entropy(state, quad, config.tol);
    const double approx = approx_wehrl_entropy(state_weights(state));

    Table table;
    table.header = {"wehrl_entropy", "error_estimate", "approx_wehrl_entropy"};
    table.columns = {{report.wehrl_entropy}, {report.error_estimate}, {approx}};
    emit(config, table, json::object(), json(report.error_estimate),
         {"wehrl-entropy-theta-integral", "high-amplitude-entropy-approximation"}, out);
    return 0;
}

int run_gamma_scan(const RunConfig& config, std::ostream& out, std::ostream&) {
    std::vector<double> gammas(static_cast<std::size_t>(config.gamma_points));
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        gammas[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / gammas.size();
    }
    const PolarQuadrature quad =
        default_quadrature(make_cat({config.state.alpha0, 0.0}), config.tol);
    const auto scan = gamma_scan(config.state.alpha0, gammas, quad, config.tol);

    Table table;
    table.header = {"gamma", "wehrl_entropy"};
    table.columns.assign(2, {});
    for (const auto& [gamma, entropy] : scan) {
        table.columns[0].push_back(gamma);
        table.columns[1].push_back(entropy);
    }
    emit(config, table, json::object(), json(),
         {"cat-normalization", "wehrl-entropy-theta-integral"}, out);
    return 0;
}

int run_equientropic(const RunConfig& config, std::ostream& out, std::ostream&) {
    Table table;
    table.header = {"N", "x_N", "wehrl_entropy", "epsilon"};
    table.columns.assign(4, {});
    std::vector<double> errors;
    for (int n : config.n_list) {
        const double x = solve_equientropic_weight(n);
        const CoherentSuperposition state = make_equientropic(config.state.alpha0, n);
        const EntropyReport report =
            wehrl_entropy(state, default_quadrature(state, config.tol), config.tol);
        table.columns[0].push_back(n);
        table.columns[1].push_back(x);
        table.columns[2].push_back(report.wehrl_entropy);
        table.columns[3].push_back(kLn2Pi1 - report.wehrl_entropy);
        errors.push_back(report.error_estimate);
    }
    json extra;
    extra["error_estimates"] = errors;
    emit(config, table, extra, json(),
         {"equientropic-weight-equation", "wehrl-entropy-theta-integral"}, out);
    return 0;
}

int run_validate(const RunConfig& config, std::ostream& out, std::ostream&) {
    const auto results = validation::run_all(config.tol);
    std::ostringstream report;
    bool all_passed = true;
    for (const auto& r : results) {
        report << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        all_passed = all_passed && r.passed;
    }
    report << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
    out << report.str();
    if (config.output != "-") {
        std::ofstream file(config.output, std::ios::binary);
        if (!file) throw UsageError("cannot open output file: " + config.output);
        file << report.str();
    }
    return all_passed ? 0 : 2;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

CoherentSuperposition build_state(const StateSpec& spec) {
    switch (spec.kind) {
        case StateSpec::Kind::Coherent:
            return gram_normalize({{Complex(1.0, 0.0), spec.alpha0}});
        case StateSpec::Kind::Cat:
            return make_cat({spec.alpha0, spec.gamma});
        case StateSpec::Kind::Equientropic:
            return make_equientropic(spec.alpha0, spec.n);
        case StateSpec::Kind::Kerr:
            return make_kerr_state({spec.m, spec.n, spec.alpha0});
    }
    throw std::logic_error("build_state: unreachable");
}

RunConfig parse_config(std::vector<std::string> args) {
    RunConfig config;
    std::string alpha0_text;
    double alpha0_mod = 0.0;
    double alpha0_arg = 0.0;

    CLI::App app{"Husimi Q-function, Wehrl entropy and phase distributions of "
                 "coherent-state superpositions",
                 "catphase"};
    app.require_subcommand(1);

    const std::map<std::string, StateSpec::Kind> kind_names{
        {"coherent", StateSpec::Kind::Coherent},
        {"cat", StateSpec::Kind::Cat},
        {"equientropic", StateSpec::Kind::Equientropic},
        {"kerr", StateSpec::Kind::Kerr}};
    const std::map<std::string, RunConfig::Format> format_names{
        {"csv", RunConfig::Format::Csv}, {"json", RunConfig::Format::Json}};

    const auto even_theta = CLI::Validator(
        [](std::string& value) -> std::string {
            int points = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), points);
            if (ec != std::errc() || ptr != value.data() + value.size() || points < 8 ||
                points % 2 != 0) {
                return "theta point count must be an even integer >= 8";
            }
            return {};
        },
        "EVEN>=8");

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", config.tol, "Quadrature self-convergence tolerance")
            ->check(CLI::Range(1e-12, 1e-3))
            ->capture_default_str();
        sub->add_option("-o,--output", config.output, "Output path, or - for stdout")
            ->capture_default_str();
        sub->add_option("--format", config.format, "Output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
            ->default_str("csv");
    };
    const auto add_alpha0 = [&](CLI::App* sub, bool required) {
        auto* rect = sub->add_option("--alpha0", alpha0_text,
                                     "Coherent amplitude as \"re,im\" (or a single real)");
        auto* mod = sub->add_option("--alpha0-mod", alpha0_mod, "Amplitude modulus (polar input)");
        auto* arg = sub->add_option("--alpha0-arg", alpha0_arg, "Amplitude phase in radians");
        mod->excludes(rect)->needs(arg);
        arg->needs(mod);
        if (required) {
            // one of the two spellings must appear; checked after parsing
            rect->description(rect->get_description() + " (required unless --alpha0-mod is given)");
        }
    };
    const auto add_state = [&](CLI::App* sub) {
        sub->add_option("--state", config.state.kind, "State family")
            ->transform(CLI::CheckedTransformer(kind_names, CLI::ignore_case))
            ->default_str("coherent");
        add_alpha0(sub, true);
        sub->add_option("--gamma", config.state.gamma, "Cat superposition phase in radians");
        sub->add_option("--N", config.state.n, "Component count (equientropic, kerr)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--M", config.state.m, "Kerr evolution numerator in gt = 2 pi M/N")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* profile = app.add_subcommand("profile", "Wehrl and Husimi phase distributions");
    add_state(profile);
    profile->add_option("--theta-points", config.theta_points, "Angular sample count")
        ->check(even_theta)
        ->capture_default_str();
    add_common(profile);

    CLI::App* entropy = app.add_subcommand("entropy", "Wehrl entropy of one state");
    add_state(entropy);
    add_common(entropy);

    CLI::App* scan = app.add_subcommand("gamma-scan", "Cat Wehrl entropy versus gamma");
    add_alpha0(scan, true);
    scan->add_option("--gamma-points", config.gamma_points, "Number of gamma samples in [0, 2pi)")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    add_common(scan);

    CLI::App* kerr = app.add_subcommand("kerr", "Phase distributions of a Kerr-generated state");
    add_alpha0(kerr, true);
    kerr->add_option("--N", config.state.n, "Denominator of gt = 2 pi M/N")
        ->required()
        ->check(CLI::PositiveNumber);
    kerr->add_option("--M", config.state.m, "Numerator of gt = 2 pi M/N")
        ->required()
        ->check(CLI::PositiveNumber);
    kerr->add_option("--theta-points", config.theta_points, "Angular sample count")
        ->check(even_theta)
        ->capture_default_str();
    add_common(kerr);

    CLI::App* equi = app.add_subcommand("equientropic", "Equientropic family: N, x_N, entropy, deficit");
    add_alpha0(equi, false);
    equi->add_option("--N-list", config.n_list, "Component counts to evaluate")
        ->delimiter(',')
        ->check(CLI::Range(2, 64))
        ->capture_default_str();
    add_common(equi);

    CLI::App* validate = app.add_subcommand("validate", "Run the library invariant suite");
    validate->add_option("--tol", config.tol, "Quadrature self-convergence tolerance")
        ->check(CLI::Range(1e-12, 1e-3))
        ->capture_default_str();
    validate->add_option("-o,--output", config.output, "Also write the report to this path")
        ->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    if (app.got_subcommand(profile)) config.command = RunConfig::Command::Profile;
    if (app.got_subcommand(entropy)) config.command = RunConfig::Command::Entropy;
    if (app.got_subcommand(scan)) config.command = RunConfig::Command::GammaScan;
    if (app.got_subcommand(kerr)) {
        config.command = RunConfig::Command::Kerr;
        config.state.kind = StateSpec::Kind::Kerr;
    }
    if (app.got_subcommand(equi)) config.command = RunConfig::Command::Equientropic;
    if (app.got_subcommand(validate)) config.command = RunConfig::Command::Validate;

    CLI::App* active = app.get_subcommands().front();
    const bool wants_alpha0 = config.command != RunConfig::Command::Validate;
    if (wants_alpha0) {
        const bool has_rect = active->count("--alpha0") > 0;
        const bool has_polar = active->count("--alpha0-mod") > 0;
        if (has_rect) {
            config.state.alpha0 = parse_complex(alpha0_text, "--alpha0");
        } else if (has_polar) {
            config.state.alpha0 = std::polar(alpha0_mod, alpha0_arg);
        } else if (config.command == RunConfig::Command::Equientropic) {
            config.state.alpha0 = Complex(std::sqrt(12.0), 0.0);
        } else {
            throw UsageError("--alpha0 (or --alpha0-mod/--alpha0-arg) is required");
        }
    }
    if (config.command == RunConfig::Command::Kerr ||
        (config.command != RunConfig::Command::Validate &&
         config.state.kind == StateSpec::Kind::Kerr)) {
        if (std::gcd(config.state.m, config.state.n) != 1) {
            throw UsageError("--M and --N must be mutually prime");
        }
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
        case RunConfig::Command::Profile:
        case RunConfig::Command::Kerr:
            return run_profile(config, out, err);
        case RunConfig::Command::Entropy:
            return run_entropy(config, out, err);
        case RunConfig::Command::GammaScan:
            return run_gamma_scan(config, out, err);
        case RunConfig::Command::Equientropic:
            return run_equientropic(config, out, err);
        case RunConfig::Command::Validate:
            return run_validate(config, out, err);
    }
    throw std::logic_error("run: unreachable");
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        if (const char* env = std::getenv("CATPHASE_THREADS")) {
            unsigned long threads = 0;
            const std::string text(env);
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), threads);
            if (ec != std::errc() || ptr != text.data() + text.size() || threads == 0) {
                throw UsageError("CATPHASE_THREADS must be a positive integer");
            }
            set_max_threads(static_cast<unsigned>(threads));
        }
        std::vector<std::string> args;
        args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
        for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
        return run(parse_config(std::move(args)), out, err);
    } catch (const HelpRequested& help) {
        out << help.what();
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const NonConvergedError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const ZeroNormError& e) {
        err << "invalid state: " << e.what() << "\n";
        return 3;
    } catch (const NoRootError& e) {
        err << "invalid state: " << e.what() << "\n";
        return 3;
    } catch (const MixedModuliError& e) {
        err << "invalid state: " << e.what() << "\n";
        return 3;
    } catch (const BadWeightsError& e) {
        err << "invalid state: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace catphase::cli
