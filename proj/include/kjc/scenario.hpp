#ifndef KJC_SCENARIO_HPP
#define KJC_SCENARIO_HPP

#include <string>
#include <vector>

#include "kjc/dressed_model.hpp"
#include "kjc/entropy.hpp"
#include "kjc/fock_space.hpp"

namespace kjc {

struct GridSpec {
    double start = 0.0; // in lambda*t/pi
    double end = 4.0;
    std::size_t count = 1601;

    std::vector<double> scaled_times() const;
};

/// One fully validated sweep configuration: model parameters, initial field,
/// and the time grid (in units of lambda*t/pi).
struct Scenario {
    std::string name = "custom";
    ModelParams params;
    FieldPrep prep;
    double nbar = 0.0; // alpha = sqrt(nbar)
    GridSpec grid;
    bool with_oracle = false;
};

/// One CSV row: entropies plus the derived atomic observables.
struct SweepRow {
    EntropySample entropy;
    double rho_ee = 1.0;
    double inversion = 1.0;
    double S_a_oracle = 0.0; // populated only when the oracle runs
    double S_f_oracle = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    bool has_oracle = false;
    double oracle_edge_population = 0.0;
    bool oracle_truncation_warning = false;
};

/// Names of the built-in presets (fig1a ... fig3c).
std::vector<std::string> preset_names();

bool is_preset(const std::string& name);

/// Resolve a preset name or load + validate a flat JSON config file.
/// Unknown keys are rejected.
Scenario load_config(const std::string& path_or_preset);

/// Parse a scenario from JSON text (the file-free core of load_config).
Scenario parse_config_text(const std::string& text, const std::string& origin = "<string>");

SweepResult run_scenario(const Scenario& s, unsigned threads = 1);

/// Write rows as CSV: fixed header, 17 significant digits, UNIX newlines.
/// Byte output is deterministic for fixed input.
void emit_csv(const SweepResult& result, const std::string& path);

std::string csv_text(const SweepResult& result);

} // namespace kjc

#endif
