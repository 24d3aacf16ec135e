// Copyright 2026 The lacc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lacc/cli/cli.h"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>

#include "lacc/accreditation/protocol.h"
#include "lacc/circuit_ir/circuit.h"
#include "lacc/experiments/output.h"
#include "lacc/experiments/sweeps.h"
#include "lacc/randomized_compiling/verify.h"

namespace lacc {

namespace {

// ---------------------------------------------------------------- parameters

template <typename T>
T parse_text(const std::string &text, const std::string &key) {
    if constexpr (std::is_same_v<T, std::string>) {
        return text;
    } else {
        T v{};
        const char *end = text.data() + text.size();
        auto res = std::from_chars(text.data(), end, v);
        if (res.ec != std::errc() || res.ptr != end) {
            throw ConfigError("invalid value '" + text + "' for " + key);
        }
        return v;
    }
}

template <typename T>
T parse_node(const toml::node &node, const std::string &key) {
    if constexpr (std::is_same_v<T, std::string>) {
        if (auto v = node.value<std::string>()) return *v;
    } else if constexpr (std::is_floating_point_v<T>) {
        if (auto v = node.value<double>()) return *v;
    } else {
        if (auto v = node.value<int64_t>()) {
            if (*v < 0 && std::is_unsigned_v<T>) throw ConfigError(key + " must be nonnegative");
            return (T)*v;
        }
    }
    throw ConfigError("wrong type for " + key);
}

template <typename T>
void put_toml(toml::table &t, const std::string &key, const T &v) {
    if constexpr (std::is_same_v<T, std::string>) {
        t.insert_or_assign(key, v);
    } else if constexpr (std::is_floating_point_v<T>) {
        t.insert_or_assign(key, (double)v);
    } else {
        t.insert_or_assign(key, (int64_t)v);
    }
}

template <typename T>
std::string type_name() {
    if constexpr (std::is_same_v<T, std::string>) {
        return "TEXT";
    } else if constexpr (std::is_floating_point_v<T>) {
        return "FLOAT";
    } else if constexpr (std::is_unsigned_v<T>) {
        return "UINT";
    } else {
        return "INT";
    }
}

template <typename T>
std::string show(const T &v) {
    if constexpr (std::is_same_v<T, std::string>) {
        return v;
    } else if constexpr (std::is_floating_point_v<T>) {
        return format_number(v);
    } else {
        return std::to_string(v);
    }
}

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// One configurable value: a TOML key in a section and a --flag on a subcommand.
struct Param {
    std::string key;
    std::string help;
    bool is_flag = false;
    std::function<void(const toml::node &)> from_toml;
    std::function<void(const std::string &)> from_text;
    std::function<void(toml::table &)> to_toml;
    std::string type;
    std::string raw;
    bool flag_value = false;
    CLI::Option *option = nullptr;
};

class ParamSet {
   public:
    explicit ParamSet(std::string section) : section_(std::move(section)) {
    }

    const std::string &section() const {
        return section_;
    }

    template <typename T>
    void scalar(const std::string &key, T &ref, const std::string &help) {
        Param &p = add(key, help + " [default: " + show(ref) + "]");
        p.type = type_name<T>();
        std::string name = qualified(key);
        p.from_toml = [&ref, name](const toml::node &n) { ref = parse_node<T>(n, name); };
        p.from_text = [&ref, name](const std::string &s) { ref = parse_text<T>(s, name); };
        p.to_toml = [&ref, key](toml::table &t) { put_toml(t, key, ref); };
    }

    template <typename T>
    void list(const std::string &key, std::vector<T> &ref, const std::string &help) {
        std::string def;
        for (size_t i = 0; i < ref.size(); i++) def += (i ? "," : "") + show(ref[i]);
        Param &p = add(key, help + " (comma separated) [default: " + def + "]");
        p.type = type_name<T>() + ",...";
        std::string name = qualified(key);
        p.from_toml = [&ref, name](const toml::node &n) {
            ref.clear();
            if (const toml::array *arr = n.as_array()) {
                for (const toml::node &e : *arr) ref.push_back(parse_node<T>(e, name));
            } else {
                ref.push_back(parse_node<T>(n, name));
            }
        };
        p.from_text = [&ref, name](const std::string &s) {
            ref.clear();
            for (const std::string &item : split_list(s)) ref.push_back(parse_text<T>(item, name));
        };
        p.to_toml = [&ref, key](toml::table &t) {
            toml::array arr;
            for (const T &v : ref) {
                if constexpr (std::is_same_v<T, std::string>) {
                    arr.push_back(v);
                } else if constexpr (std::is_floating_point_v<T>) {
                    arr.push_back((double)v);
                } else {
                    arr.push_back((int64_t)v);
                }
            }
            t.insert_or_assign(key, arr);
        };
    }

    void flag(const std::string &key, bool &ref, const std::string &help) {
        Param &p = add(key, help);
        p.is_flag = true;
        std::string name = qualified(key);
        p.from_toml = [&ref, name](const toml::node &n) {
            auto v = n.value<bool>();
            if (!v) throw ConfigError("wrong type for " + name);
            ref = *v;
        };
        p.from_text = [&ref](const std::string &) { ref = true; };
        p.to_toml = [&ref, key](toml::table &t) { t.insert_or_assign(key, ref); };
    }

    /// Optional scalar: absent unless set.
    template <typename T>
    void optional(const std::string &key, std::optional<T> &ref, const std::string &help) {
        Param &p = add(key, help + " [default: unset]");
        p.type = type_name<T>();
        std::string name = qualified(key);
        p.from_toml = [&ref, name](const toml::node &n) { ref = parse_node<T>(n, name); };
        p.from_text = [&ref, name](const std::string &s) { ref = parse_text<T>(s, name); };
        p.to_toml = [&ref, key](toml::table &t) {
            if (ref) put_toml(t, key, *ref);
        };
    }

    void attach(CLI::App *app) {
        for (auto &p : params_) {
            std::string flag = "--" + p->key;
            for (char &c : flag) {
                if (c == '_') c = '-';
            }
            if (p->is_flag) {
                p->option = app->add_flag(flag, p->flag_value, p->help);
            } else {
                p->option = app->add_option(flag, p->raw, p->help)->type_name(p->type);
            }
        }
    }

    /// Applies a TOML section; unknown keys are configuration errors.
    void apply_toml(const toml::table &table) {
        for (const auto &[k, node] : table) {
            std::string key(k.str());
            Param *p = find(key);
            if (!p) throw ConfigError("unknown key '" + qualified(key) + "' in config");
            p->from_toml(node);
        }
    }

    void apply_flags() {
        for (auto &p : params_) {
            if (p->option && p->option->count() > 0) p->from_text(p->raw);
        }
    }

    toml::table resolved() const {
        toml::table t;
        for (const auto &p : params_) p->to_toml(t);
        return t;
    }

    std::vector<std::string> keys() const {
        std::vector<std::string> k;
        for (const auto &p : params_) k.push_back(p->key);
        return k;
    }

   private:
    Param &add(const std::string &key, const std::string &help) {
        params_.push_back(std::make_unique<Param>());
        params_.back()->key = key;
        params_.back()->help = help;
        return *params_.back();
    }

    Param *find(const std::string &key) {
        for (auto &p : params_) {
            if (p->key == key) return p.get();
        }
        return nullptr;
    }

    std::string qualified(const std::string &key) const {
        return section_.empty() ? key : section_ + "." + key;
    }

    std::string section_;
    std::vector<std::unique_ptr<Param>> params_;
};

// ---------------------------------------------------------------- settings

struct Globals {
    uint64_t seed = 0;
    std::string out = "lacc_out";
    size_t threads = 1;
    std::string format = "csv";
};

struct NoiseSettings {
    std::string regime = "FTQC";
    double p_phys = 1e-3;
    int distance = 11;
    std::optional<double> t_gate_error;

    RegimeConfig config() const {
        RegimeConfig r;
        r.regime = regime_from_string(regime);
        r.p_phys = p_phys;
        r.distance = distance;
        r.t_gate_error = t_gate_error;
        r.validate();
        return r;
    }
};

struct AccreditSettings {
    std::string circuit = "iqp";
    std::string circuit_file;
    size_t qubits = 5;
    size_t layers = 40;
    uint64_t traps = 0;
    double epsilon = 0.05;
    double alpha = 0.95;
    std::string soundness = "lemma3";
    std::string construction = "standard";
    bool purified = false;
    bool no_twirl = false;
    uint64_t repeat = 1;
    bool require_mitigable = false;
};

struct SweepSettings {
    std::string kind = "regime";
    std::string circuit = "iqp";
    std::vector<size_t> qubits{5};
    std::vector<size_t> layers{40};
    std::vector<double> p_phys{1e-3};
    std::vector<int> distances{11};
    std::vector<std::string> regimes{"NISQ", "PFTQC", "FTQC"};
    std::vector<double> t_gate_errors;
    uint64_t traps = 500;
    uint64_t repetitions = 5;
    std::string soundness = "lemma3";
    std::string construction = "standard";
};

struct RegionSettings {
    double eps_min = 1e-5;
    double eps_max = 1e-3;
    size_t points = 41;
    double budget = kAdvantageBudget;
};

struct FpSettings {
    std::vector<size_t> qubits{5};
    std::vector<double> p{1e-3, 2e-3, 5e-3, 1e-2, 2e-2, 5e-2};
    size_t layers = 40;
    std::string regime = "NISQ";
    int distance = 11;
    uint64_t shots = 20000;
    uint64_t shots_per_trap = 50;
};

struct ResourceSettings {
    size_t logical_qubits = 10;
    std::vector<size_t> layers{1, 2, 5, 10, 20, 50, 100, 200, 500, 1000};
    double p_phys = 1e-5;
    double budget = 1.0 / 384.0;
    int d_max = 51;
    size_t factory_patches = 15;
};

struct TwirlSettings {
    size_t channels = 100;
    size_t max_qubits = 2;
    size_t magic_states = 25;
    double tolerance = 1e-10;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- commands

struct Context {
    Globals globals;
    std::string command;
    toml::table resolved;

    ordered_json info(const std::string &name) const {
        ordered_json j;
        j["command"] = command;
        j["seed"] = globals.seed;
        j["format"] = globals.format;
        j["config_file"] = name + ".config.toml";
        return j;
    }

    bool json() const {
        return globals.format == "json";
    }

    /// Resolved configuration beside each output, so `--config` on it reproduces the run.
    void write_config(const std::string &name) const {
        std::filesystem::create_directories(globals.out);
        std::filesystem::path p = std::filesystem::path(globals.out) / (name + ".config.toml");
        std::ofstream f(p, std::ios::trunc);
        if (!f) throw IoError("cannot write " + p.string());
        f << resolved << "\n";
    }

    void table(const std::string &name, const CsvTable &t) const {
        write_config(name);
        auto path = write_table(globals.out, name, t, info(name), json());
        spdlog::info("wrote {}", path.string());
    }
};

LogicalCircuit load_target(const AccreditSettings &s, uint64_t seed) {
    if (!s.circuit_file.empty()) {
        std::ifstream f(s.circuit_file);
        if (!f) throw IoError("cannot read circuit file " + s.circuit_file);
        try {
            return circuit_from_json(ordered_json::parse(f));
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError("circuit file " + s.circuit_file + ": " + e.what());
        }
    }
    return sweep_target(circuit_family_from_string(s.circuit), s.qubits, s.layers, derive_seed(seed, s.qubits, s.layers));
}

int cmd_accredit(const Context &ctx, const AccreditSettings &s, const NoiseSettings &noise) {
    RegimeConfig regime = noise.config();
    SoundnessParams soundness = SoundnessParams::from_string(s.soundness);
    TrapConstruction construction = trap_construction_from_string(s.construction);
    if (soundness.lemma == SoundnessLemma::Lemma4 && construction != TrapConstruction::Modified) {
        throw ConfigError("lemma4 soundness requires --construction modified");
    }
    if (s.repeat < 1) throw ConfigError("repeat must be at least 1");
    uint64_t m = s.traps ? s.traps : required_traps(s.epsilon, s.alpha);
    LogicalCircuit target = load_target(s, ctx.globals.seed);
    ProtocolOptions opt;
    opt.alpha = s.alpha;
    opt.purified = s.purified;
    opt.twirl = !s.no_twirl;
    opt.threads = ctx.globals.threads;

    Rng rng(ctx.globals.seed);
    std::vector<AccreditationResult> results;
    for (uint64_t r = 0; r < s.repeat; r++) {
        results.push_back(run_protocol(target, regime, m, soundness, construction, rng, opt));
    }
    bool mitigable = true;
    for (const auto &r : results) mitigable &= r.mitigation_ok;

    ctx.write_config("accredit");
    if (ctx.json()) {
        ordered_json doc;
        if (results.size() == 1) {
            doc = results[0].to_json();
        } else {
            doc = ordered_json::array();
            for (const auto &r : results) doc.push_back(r.to_json());
        }
        auto path = write_document(ctx.globals.out, "accredit", doc, ctx.info("accredit"));
        spdlog::info("wrote {}", path.string());
        std::cout << doc.dump(2) << "\n";
    } else {
        CsvTable t({"run", "m", "n_inc", "p_inc", "beta", "gamma", "epsilon", "alpha", "entropy_bound",
                    "infidelity_bound", "mitigation_ok", "seed"});
        for (size_t i = 0; i < results.size(); i++) {
            const auto &r = results[i];
            t.add_row({std::to_string(i), std::to_string(r.m), std::to_string(r.n_inc), format_number(r.p_inc),
                       format_number(r.beta), format_number(r.gamma), format_number(r.epsilon),
                       format_number(r.alpha), format_number(r.entropy_bound), format_number(r.infidelity_bound),
                       r.mitigation_ok ? "1" : "0", std::to_string(r.seed)});
        }
        auto path = write_table(ctx.globals.out, "accredit", t, ctx.info("accredit"));
        spdlog::info("wrote {}", path.string());
        std::cout << t.to_csv();
    }
    if (s.require_mitigable && !mitigable) {
        spdlog::error("gamma exceeds the mitigation threshold {}", format_number(mitigation_threshold()));
        return kExitNotMitigable;
    }
    return kExitOk;
}

int cmd_sweep(const Context &ctx, const SweepSettings &s) {
    SweepSpec spec;
    spec.family = circuit_family_from_string(s.circuit);
    spec.qubits = s.qubits;
    spec.layers = s.layers;
    spec.p_phys = s.p_phys;
    spec.distances = s.distances;
    spec.regimes.clear();
    for (const auto &r : s.regimes) spec.regimes.push_back(regime_from_string(r));
    spec.t_gate_errors = s.t_gate_errors;
    spec.traps = s.traps;
    spec.repetitions = s.repetitions;
    spec.seed = ctx.globals.seed;
    spec.soundness = SoundnessParams::from_string(s.soundness);
    spec.construction = trap_construction_from_string(s.construction);
    spec.threads = ctx.globals.threads;
    CsvTable t({"x"});
    if (s.kind == "regime") {
        t = regime_sweep(spec);
    } else if (s.kind == "distance") {
        t = distance_sweep(spec);
    } else if (s.kind == "magic") {
        t = magic_quality_sweep(spec);
    } else {
        throw ConfigError("unknown sweep kind '" + s.kind + "' (expected regime, distance or magic)");
    }
    ctx.table("sweep_" + s.kind, t);
    return kExitOk;
}

int cmd_iqp_region(const Context &ctx, const RegionSettings &s) {
    if (!(s.eps_min > 0 && s.eps_max < 1 && s.eps_min <= s.eps_max) || s.points < 1) {
        throw ConfigError("iqp-region: need 0 < eps_min <= eps_max < 1 and points >= 1");
    }
    std::vector<double> grid;
    for (size_t i = 0; i < s.points; i++) {
        double f = s.points == 1 ? 0.0 : (double)i / (double)(s.points - 1);
        grid.push_back(s.eps_min * std::pow(s.eps_max / s.eps_min, f));
    }
    ctx.table("iqp_region", iqp_advantage_region(grid, s.budget));
    spdlog::info("advantage boundary (max T count {}) at eps_T = {}", kClassicalTLimit,
                 format_number(t_error_for_count(kClassicalTLimit, s.budget)));
    return kExitOk;
}

int cmd_false_positives(const Context &ctx, const FpSettings &s) {
    FalsePositiveSpec spec;
    spec.qubits = s.qubits;
    spec.p = s.p;
    spec.layers = s.layers;
    spec.regime = regime_from_string(s.regime);
    spec.distance = s.distance;
    spec.shots = s.shots;
    spec.shots_per_trap = s.shots_per_trap;
    spec.seed = ctx.globals.seed;
    spec.threads = ctx.globals.threads;
    ctx.table("false_positives", false_positive_analysis(spec));
    return kExitOk;
}

int cmd_resources(const Context &ctx, const ResourceSettings &s) {
    ResourceSpec spec;
    spec.logical_qubits = s.logical_qubits;
    spec.layers = s.layers;
    spec.p_phys = s.p_phys;
    spec.tvd_budget = s.budget;
    spec.d_max = s.d_max;
    spec.factory_patches = s.factory_patches;
    spec.seed = ctx.globals.seed;
    ctx.table("resources", resource_crossover(spec));
    return kExitOk;
}

int cmd_twirl_verify(const Context &ctx, const TwirlSettings &s) {
    if (s.max_qubits < 1 || s.max_qubits > 3) throw ConfigError("max_qubits must be between 1 and 3");
    std::vector<TwirlCheck> checks = verify_pauli_twirl(s.channels, s.max_qubits, ctx.globals.seed);
    for (auto &c : verify_magic_twirl(s.magic_states, ctx.globals.seed)) checks.push_back(c);
    CsvTable t({"variant", "qubits", "index", "max_offdiag", "diag_sum", "min_diag", "diag_imag", "pass"});
    ordered_json report = ordered_json::array();
    bool all = true;
    for (const auto &c : checks) {
        bool ok = c.max_offdiag < s.tolerance && c.diag_imag < s.tolerance && c.min_diag > -s.tolerance &&
                  c.trace_error < 1e-9;
        all &= ok;
        t.add_row({c.kind, std::to_string(c.qubits), std::to_string(c.index), format_number(c.max_offdiag),
                   format_number(c.diag_sum), format_number(c.min_diag), format_number(c.diag_imag),
                   ok ? "1" : "0"});
        ordered_json j;
        j["variant"] = c.kind;
        j["qubits"] = c.qubits;
        j["index"] = c.index;
        j["max_offdiag"] = c.max_offdiag;
        j["diag_sum"] = c.diag_sum;
        j["pass"] = ok;
        report.push_back(j);
    }
    ctx.table("twirl_verify", t);
    std::cout << report.dump(2) << "\n";
    if (!all) {
        spdlog::error("twirl verification failed at tolerance {}", format_number(s.tolerance));
        return kExitVerifyFailed;
    }
    return kExitOk;
}

}  // namespace

int cli_main(int argc, char **argv) {
    auto logger = spdlog::stderr_color_st("lacc");
    logger->set_pattern("%^%l%$: %v");
    spdlog::set_default_logger(logger);

    CLI::App app{"Logical accreditation: trap compilation, noisy simulation and certified bounds.", "lacc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "lacc 1.0.0");

    std::string config_path;
    Globals globals;
    ParamSet global_params("");
    app.add_option("--config", config_path, "TOML configuration file; flags override its values")->type_name("PATH");
    global_params.scalar("seed", globals.seed, "Master seed");
    global_params.scalar("out", globals.out, "Output directory (created if missing)");
    global_params.scalar("threads", globals.threads, "Worker thread cap; results do not depend on it");
    global_params.scalar("format", globals.format, "Table output format: csv or json");
    global_params.attach(&app);

    NoiseSettings noise;
    AccreditSettings acc;
    SweepSettings sweep;
    RegionSettings region;
    FpSettings fp;
    ResourceSettings res;
    TwirlSettings tw;

    std::vector<std::pair<CLI::App *, std::vector<ParamSet *>>> commands;
    std::vector<std::unique_ptr<ParamSet>> sets;
    auto make_set = [&](const std::string &section) {
        sets.push_back(std::make_unique<ParamSet>(section));
        return sets.back().get();
    };

    CLI::App *c_acc = app.add_subcommand("accredit", "Run the accreditation protocol on one target circuit");
    ParamSet *p_noise = make_set("noise");
    p_noise->scalar("regime", noise.regime, "Noise regime: NISQ, PFTQC or FTQC");
    p_noise->scalar("p_phys", noise.p_phys, "Physical error rate");
    p_noise->scalar("distance", noise.distance, "Surface code distance (odd)");
    p_noise->optional("t_gate_error", noise.t_gate_error, "Error rate of magic-state fed gates");
    ParamSet *p_acc = make_set("accredit");
    p_acc->scalar("circuit", acc.circuit, "Target family: iqp or trotter");
    p_acc->scalar("circuit_file", acc.circuit_file, "Target circuit JSON (overrides circuit)");
    p_acc->scalar("qubits", acc.qubits, "Logical qubits");
    p_acc->scalar("layers", acc.layers, "Circuit layers");
    p_acc->scalar("traps", acc.traps, "Trap count M; 0 derives it from epsilon and alpha");
    p_acc->scalar("epsilon", acc.epsilon, "Accuracy used to derive M");
    p_acc->scalar("alpha", acc.alpha, "Confidence");
    p_acc->scalar("soundness", acc.soundness, "lemma2, lemma3 or lemma4");
    p_acc->scalar("construction", acc.construction, "Trap construction: standard or modified");
    p_acc->flag("purified", acc.purified, "Feed magic slots with purified states");
    p_acc->flag("no_twirl", acc.no_twirl, "Skip the Pauli twirl of trap circuits");
    p_acc->scalar("repeat", acc.repeat, "Independent protocol runs");
    p_acc->flag("require_mitigable", acc.require_mitigable, "Exit with status 2 when gamma fails the mitigation check");
    p_noise->attach(c_acc);
    p_acc->attach(c_acc);
    commands.push_back({c_acc, {p_noise, p_acc}});

    CLI::App *c_sweep = app.add_subcommand("sweep", "Certified bound sweeps over regimes, distances or magic quality");
    ParamSet *p_sweep = make_set("sweep");
    p_sweep->scalar("kind", sweep.kind, "regime, distance or magic");
    p_sweep->scalar("circuit", sweep.circuit, "Target family: iqp or trotter");
    p_sweep->list("qubits", sweep.qubits, "Logical qubit counts");
    p_sweep->list("layers", sweep.layers, "Layer counts");
    p_sweep->list("p_phys", sweep.p_phys, "Physical error rates");
    p_sweep->list("distances", sweep.distances, "Code distances");
    p_sweep->list("regimes", sweep.regimes, "Regimes");
    p_sweep->list("t_gate_errors", sweep.t_gate_errors, "Magic gate error rates (magic kind)");
    p_sweep->scalar("traps", sweep.traps, "Traps per protocol run");
    p_sweep->scalar("repetitions", sweep.repetitions, "Protocol runs per grid point");
    p_sweep->scalar("soundness", sweep.soundness, "lemma2, lemma3 or lemma4");
    p_sweep->scalar("construction", sweep.construction, "Trap construction: standard or modified");
    p_sweep->attach(c_sweep);
    commands.push_back({c_sweep, {p_sweep}});

    CLI::App *c_region = app.add_subcommand("iqp-region", "Maximum noisy T count against T gate error");
    ParamSet *p_region = make_set("iqp_region");
    p_region->scalar("eps_min", region.eps_min, "Smallest T gate error");
    p_region->scalar("eps_max", region.eps_max, "Largest T gate error");
    p_region->scalar("points", region.points, "Log-spaced grid points");
    p_region->scalar("budget", region.budget, "Error budget");
    p_region->attach(c_region);
    commands.push_back({c_region, {p_region}});

    CLI::App *c_fp = app.add_subcommand("false-positives", "Split undetected trap errors into stabilisation and cancellation");
    ParamSet *p_fp = make_set("false_positives");
    p_fp->list("qubits", fp.qubits, "Qubit counts");
    p_fp->list("p", fp.p, "Physical error rates");
    p_fp->scalar("layers", fp.layers, "Circuit layers");
    p_fp->scalar("regime", fp.regime, "Noise regime");
    p_fp->scalar("distance", fp.distance, "Code distance");
    p_fp->scalar("shots", fp.shots, "Shots per grid point");
    p_fp->scalar("shots_per_trap", fp.shots_per_trap, "Shots before drawing a fresh trap");
    p_fp->attach(c_fp);
    commands.push_back({c_fp, {p_fp}});

    CLI::App *c_res = app.add_subcommand("resources", "Smallest distance and physical qubit count per regime");
    ParamSet *p_res = make_set("resources");
    p_res->scalar("logical_qubits", res.logical_qubits, "Logical qubits");
    p_res->list("layers", res.layers, "Layer counts");
    p_res->scalar("p_phys", res.p_phys, "Physical error rate");
    p_res->scalar("budget", res.budget, "Error budget");
    p_res->scalar("d_max", res.d_max, "Largest distance tried");
    p_res->scalar("factory_patches", res.factory_patches, "Patches added for magic state factories");
    p_res->attach(c_res);
    commands.push_back({c_res, {p_res}});

    CLI::App *c_tw = app.add_subcommand("twirl-verify", "Twirl random channels and noisy magic states and check the result");
    ParamSet *p_tw = make_set("twirl_verify");
    p_tw->scalar("channels", tw.channels, "Random channels");
    p_tw->scalar("max_qubits", tw.max_qubits, "Largest channel size (1 to 3)");
    p_tw->scalar("magic_states", tw.magic_states, "Noisy copies per magic state");
    p_tw->scalar("tolerance", tw.tolerance, "Off-diagonal tolerance");
    p_tw->attach(c_tw);
    commands.push_back({c_tw, {p_tw}});

    for (auto &[sub, _] : commands) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (!config_path.empty()) {
            toml::table file;
            try {
                file = toml::parse_file(config_path);
            } catch (const toml::parse_error &e) {
                std::ostringstream msg;
                msg << config_path << ": " << e.description() << " (" << e.source().begin << ")";
                throw ConfigError(msg.str());
            }
            toml::table top;
            for (const auto &[k, node] : file) {
                std::string key(k.str());
                if (node.is_table()) {
                    auto it = std::find_if(sets.begin(), sets.end(), [&](const auto &s) { return s->section() == key; });
                    if (it == sets.end()) throw ConfigError("unknown section [" + key + "] in config");
                    (*it)->apply_toml(*node.as_table());
                } else {
                    top.insert(key, node);
                }
            }
            global_params.apply_toml(top);
        }
        global_params.apply_flags();
        if (globals.format != "csv" && globals.format != "json") throw ConfigError("format must be csv or json");
        if (globals.threads < 1) throw ConfigError("threads must be at least 1");

        for (auto &[sub, psets] : commands) {
            if (!sub->parsed()) continue;
            Context ctx;
            ctx.globals = globals;
            ctx.command = sub->get_name();
            for (char &c : ctx.command) {
                if (c == '-') c = '_';
            }
            ctx.resolved.insert("seed", (int64_t)globals.seed);
            ctx.resolved.insert("format", globals.format);
            for (ParamSet *ps : psets) {
                ps->apply_flags();
                ctx.resolved.insert(ps->section(), ps->resolved());
            }
            if (sub == c_acc) return cmd_accredit(ctx, acc, noise);
            if (sub == c_sweep) return cmd_sweep(ctx, sweep);
            if (sub == c_region) return cmd_iqp_region(ctx, region);
            if (sub == c_fp) return cmd_false_positives(ctx, fp);
            if (sub == c_res) return cmd_resources(ctx, res);
            if (sub == c_tw) return cmd_twirl_verify(ctx, tw);
        }
    } catch (const IoError &e) {
        spdlog::error("{}", e.what());
        return kExitIo;
    } catch (const std::filesystem::filesystem_error &e) {
        spdlog::error("{}", e.what());
        return kExitIo;
    } catch (const std::runtime_error &e) {
        spdlog::error("{}", e.what());
        return kExitIo;
    } catch (const std::exception &e) {
        spdlog::error("{}", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}

}  // namespace lacc
