#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "catphase/states.hpp"

namespace catphase::cli {

struct StateSpec {
    enum class Kind { Coherent, Cat, Equientropic, Kerr };

    Kind kind = Kind::Coherent;
    Complex alpha0{0.0, 0.0};
    double gamma = 0.0;
    int n = 2;
    int m = 1;
};

struct RunConfig {
    enum class Command { Profile, Entropy, GammaScan, Kerr, Equientropic, Validate };
    enum class Format { Csv, Json };

    Command command = Command::Entropy;
    StateSpec state;
    double tol = 1e-8;
    int theta_points = 512;
    int gamma_points = 64;
    std::vector<int> n_list{2, 3, 4};
    std::string output = "-";  // "-" means stdout
    Format format = Format::Csv;
};

/// Malformed command line; the message names the offending flag.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// -h / --help was requested; carries the help text.
class HelpRequested : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses arguments (without the program name) into a RunConfig.
/// Unknown flags are rejected; defaults: tol = 1e-8, format = csv.
RunConfig parse_config(std::vector<std::string> args);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Builds the configured state. Throws the state modules' errors unchanged.
CoherentSuperposition build_state(const StateSpec& spec);

/// Executes the command and writes the requested file (or `out` for "-").
/// Returns the process exit status: 0 on success, 2 when `validate` finds a
/// failing check.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full front end: env handling, parsing, dispatch, exit-code mapping
/// (0 success, 1 usage, 2 numerical failure, 3 invalid state).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catphase::cli
