#include "kjc/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kjc/evolution.hpp"
#include "kjc/oracle.hpp"
#include "kjc/parallel.hpp"
#include "kjc/reduced_states.hpp"

namespace kjc {

std::vector<double> GridSpec::scaled_times() const {
    std::vector<double> out(count);
    if (count == 1) {
        out[0] = start;
        return out;
    }
    for (std::size_t i = 0; i < count; ++i)
        out[i] = start + (end - start) * double(i) / double(count - 1);
    return out;
}

namespace {

Scenario make_preset(const std::string& name, double stark_R, char variant) {
    Scenario s;
    s.name = name;
    s.nbar = 16.0;
    s.params = ModelParams::synthesized(1.0, 0.0, 2, stark_R);
    const double alpha = std::sqrt(s.nbar);
    switch (variant) {
        case 'a': s.prep = FieldPrep::superposition(0.0, alpha); break;
        case 'b': s.prep = FieldPrep::superposition(1.0, alpha); break;
        case 'c': s.prep = FieldPrep::mixture(alpha); break;
    }
    return s;
}

const std::vector<std::pair<std::string, Scenario>>& preset_table() {
    static const std::vector<std::pair<std::string, Scenario>> table = [] {
        std::vector<std::pair<std::string, Scenario>> t;
        const std::pair<std::string, double> families[] = {
            {"fig1", 0.0}, {"fig2", 0.5}, {"fig3", 0.3}};
        for (const auto& [stem, R] : families)
            for (char v : {'a', 'b', 'c'})
                t.emplace_back(stem + v, make_preset(stem + v, R, v));
        return t;
    }();
    return table;
}

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, s] : preset_table()) names.push_back(name);
    return names;
}

bool is_preset(const std::string& name) {
    for (const auto& [n, s] : preset_table())
        if (n == name) return true;
    return false;
}

Scenario parse_config_text(const std::string& text, const std::string& origin) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(origin + ": " + e.what());
    }
    if (!j.is_object()) throw config_error(origin + ": top-level JSON value must be an object");

    static const std::set<std::string> known = {
        "name", "nbar", "k",         "delta",    "stark_R",    "lambda",
        "prep", "r",    "grid_start", "grid_end", "grid_count",
    };
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) throw config_error(origin + ": unknown key \"" + key + "\"");

    auto number = [&](const char* key, double fallback) {
        if (!j.contains(key)) return fallback;
        if (!j[key].is_number()) throw config_error(origin + ": \"" + key + "\" must be a number");
        return j[key].get<double>();
    };
    auto integer = [&](const char* key, long long fallback) {
        if (!j.contains(key)) return fallback;
        if (!j[key].is_number_integer())
            throw config_error(origin + ": \"" + key + "\" must be an integer");
        return j[key].get<long long>();
    };

    Scenario s;
    if (j.contains("name") && !j["name"].is_string())
        throw config_error(origin + ": \"name\" must be a string");
    s.name = j.value("name", std::string("custom"));

    s.nbar = number("nbar", 16.0);
    if (!(s.nbar >= 0.0)) throw config_error(origin + ": \"nbar\" must be >= 0");

    const long long k = integer("k", 2);
    if (k < 1) throw config_error(origin + ": \"k\" must be >= 1");

    const double lambda = number("lambda", 1.0);
    if (!(lambda > 0.0)) throw config_error(origin + ": \"lambda\" must be > 0");

    const double delta = number("delta", 0.0);
    const double stark_R = number("stark_R", 0.0);
    if (stark_R < 0.0) throw config_error(origin + ": \"stark_R\" must be >= 0");

    try {
        s.params = ModelParams::synthesized(lambda, delta, std::size_t(k), stark_R);
    } catch (const domain_error& e) {
        throw config_error(origin + ": " + e.what());
    }

    const double alpha = std::sqrt(s.nbar);
    if (j.contains("prep") && !j["prep"].is_string())
        throw config_error(origin + ": \"prep\" must be a string");
    const std::string prep = j.value("prep", std::string("superposition"));
    const double r = number("r", 0.0);
    if (!(r >= -1.0 && r <= 1.0))
        throw config_error(origin + ": \"r\" must lie in [-1, 1]");
    if (prep == "superposition") {
        s.prep = FieldPrep::superposition(r, alpha);
    } else if (prep == "coherent") {
        s.prep = FieldPrep::coherent(alpha);
    } else if (prep == "mixture") {
        s.prep = FieldPrep::mixture(alpha);
    } else {
        throw config_error(origin + ": \"prep\" must be superposition, coherent or mixture");
    }

    s.grid.start = number("grid_start", 0.0);
    s.grid.end = number("grid_end", 4.0);
    const long long count = integer("grid_count", 1601);
    if (count < 1) throw config_error(origin + ": \"grid_count\" must be >= 1");
    if (s.grid.end < s.grid.start)
        throw config_error(origin + ": \"grid_end\" must be >= \"grid_start\"");
    if (s.grid.start < 0.0) throw config_error(origin + ": \"grid_start\" must be >= 0");
    s.grid.count = std::size_t(count);
    return s;
}

Scenario load_config(const std::string& path_or_preset) {
    for (const auto& [name, preset] : preset_table())
        if (name == path_or_preset) return preset;

    std::ifstream in(path_or_preset, std::ios::binary);
    if (!in)
        throw config_error("cannot open scenario \"" + path_or_preset +
                           "\" (not a preset, not a readable file)");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path_or_preset);
}

SweepResult run_scenario(const Scenario& s, unsigned threads) {
    const ModelParams& p = s.params;
    const double alpha = std::sqrt(s.nbar);

    const std::size_t n_max = choose_truncation(alpha, p.k);
    const CoherentAmplitudes q = coherent_amplitudes(alpha, n_max);

    FieldPrep prep = s.prep;
    prep.alpha = alpha;
    const PreparedField field = prepare_field(prep, q);

    const std::vector<double> scaled = s.grid.scaled_times();

    SweepResult result;
    result.rows.assign(scaled.size(), SweepRow{});

    parallel_for_indexed(scaled.size(), threads, [&](std::size_t i) {
        const double t = scaled[i] * std::numbers::pi / p.lambda;
        const std::vector<BranchAmplitudes> branches = all_branch_amplitudes(p, q, field, t);

        const AtomState atom = atom_reduced(branches, p.k);
        const QubitEntropy qe = qubit_entropy(atom);
        const FieldDensity fd = field_reduced(branches, p.k);

        SweepRow& row = result.rows[i];
        row.entropy.scaled_t = scaled[i];
        row.entropy.S_a = qe.S;
        row.entropy.S_f = field_entropy(fd);
        row.entropy.lambda_plus = qe.lambda_plus;
        row.entropy.lambda_minus = qe.lambda_minus;
        row.rho_ee = atom.rho_ee;
        row.inversion = inversion(atom);
    });

    if (s.with_oracle) {
        std::vector<double> t_phys(scaled.size());
        for (std::size_t i = 0; i < scaled.size(); ++i)
            t_phys[i] = scaled[i] * std::numbers::pi / p.lambda;
        const OracleRun oracle = oracle_entropies(p, prep, t_phys, threads);
        for (std::size_t i = 0; i < scaled.size(); ++i) {
            result.rows[i].S_a_oracle = oracle.samples[i].S_a;
            result.rows[i].S_f_oracle = oracle.samples[i].S_f;
        }
        result.has_oracle = true;
        result.oracle_edge_population = oracle.max_edge_population;
        result.oracle_truncation_warning = oracle.truncation_warning;
    }
    return result;
}

namespace {

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

} // namespace

std::string csv_text(const SweepResult& result) {
    std::string out = "scaled_t,S_a,S_f,rho_ee,inversion,lambda_plus,lambda_minus";
    if (result.has_oracle) out += ",S_a_oracle,S_f_oracle";
    out += '\n';
    for (const SweepRow& row : result.rows) {
        append_number(out, row.entropy.scaled_t);
        out += ',';
        append_number(out, row.entropy.S_a);
        out += ',';
        append_number(out, row.entropy.S_f);
        out += ',';
        append_number(out, row.rho_ee);
        out += ',';
        append_number(out, row.inversion);
        out += ',';
        append_number(out, row.entropy.lambda_plus);
        out += ',';
        append_number(out, row.entropy.lambda_minus);
        if (result.has_oracle) {
            out += ',';
            append_number(out, row.S_a_oracle);
            out += ',';
            append_number(out, row.S_f_oracle);
        }
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
    if (result.rows.empty()) throw domain_error("emit_csv: no samples to write");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error("emit_csv: cannot open \"" + path + "\" for writing");
    const std::string text = csv_text(result);
    out.write(text.data(), std::streamsize(text.size()));
    if (!out) throw error("emit_csv: write to \"" + path + "\" failed");
}

} // namespace kjc
