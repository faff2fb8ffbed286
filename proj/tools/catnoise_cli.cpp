// Command-line front end for the catnoise shared library. Talks to the
// core exclusively through the public C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catnoise/catnoise.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitForbidden = 1;
constexpr int kExitInvalid = 2;

struct CommonFlags {
    std::string config_path;
    std::optional<double> pi0, pi1, pi2, pi3;
    std::string preset_name;
    std::optional<double> strength;
    std::optional<double> strength_start, strength_stop, strength_step;
    std::optional<std::int64_t> random_count;
    std::vector<std::int64_t> n_values;
    std::optional<std::int64_t> n_start, n_stop;
    std::string cuts;
    bool oracle = false;
    std::string out_path;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
};

void add_channel_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file; CLI flags override its fields");
    cmd->add_option("--pi0", f.pi0, "identity probability");
    cmd->add_option("--pi1", f.pi1, "sigma_x probability");
    cmd->add_option("--pi2", f.pi2, "sigma_y probability");
    cmd->add_option("--pi3", f.pi3, "sigma_z probability");
    cmd->add_option("--preset", f.preset_name, "channel family: depolarizing | dephasing");
    cmd->add_option("--strength", f.strength, "preset strength (pi0)");
}

void add_grid_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--strength-start", f.strength_start, "preset family sweep start");
    cmd->add_option("--strength-stop", f.strength_stop, "preset family sweep stop");
    cmd->add_option("--strength-step", f.strength_step, "preset family sweep step");
    cmd->add_option("--random", f.random_count, "number of random channels (uses --seed)");
    cmd->add_option("--cuts", f.cuts, "all | min-only | comma-separated k list");
    cmd->add_flag("--oracle", f.oracle, "attach brute-force oracle columns");
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--out", f.out_path, "output file (default: stdout)");
    cmd->add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", f.seed, "seed for randomized grids");
    cmd->add_option("--workers", f.workers, "worker thread count");
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json doc;
    in >> doc;
    return doc;
}

// Flags take precedence over config-file fields.
json build_config(const CommonFlags& f) {
    json doc = load_config(f.config_path);
    if (f.pi0 || f.pi1 || f.pi2 || f.pi3) {
        if (!(f.pi0 && f.pi1 && f.pi2 && f.pi3)) {
            throw std::runtime_error("all four of --pi0..--pi3 must be given together");
        }
        doc["pi"] = {*f.pi0, *f.pi1, *f.pi2, *f.pi3};
        doc.erase("preset");
    }
    if (!f.preset_name.empty()) {
        json preset;
        preset["name"] = f.preset_name;
        if (f.strength) preset["strength"] = *f.strength;
        if (f.strength_start) preset["start"] = *f.strength_start;
        if (f.strength_stop) preset["stop"] = *f.strength_stop;
        if (f.strength_step) preset["step"] = *f.strength_step;
        doc["preset"] = preset;
    }
    if (f.random_count) doc["random_channels"] = {{"count", *f.random_count}};
    if (!f.n_values.empty()) {
        doc["n_values"] = f.n_values;
        doc.erase("n");
    }
    if (f.n_start && f.n_stop) {
        doc["n_values"] = {{"start", *f.n_start}, {"stop", *f.n_stop}};
        doc.erase("n");
    }
    if (!f.cuts.empty()) {
        if (f.cuts == "all" || f.cuts == "min-only") {
            doc["cuts"] = f.cuts;
        } else {
            std::vector<std::int64_t> ks;
            std::stringstream ss(f.cuts);
            std::string tok;
            while (std::getline(ss, tok, ',')) ks.push_back(std::stoll(tok));
            doc["cuts"] = ks;
        }
    }
    if (f.oracle) doc["oracle"] = true;
    if (!f.out_path.empty()) doc["output"] = f.out_path;
    if (!f.format.empty()) doc["format"] = f.format;
    if (f.seed) doc["seed"] = *f.seed;
    if (f.workers) doc["workers"] = *f.workers;
    return doc;
}

int fail(catnoise_status st) {
    std::cerr << "error: " << catnoise_status_message(st);
    const char* detail = catnoise_last_error();
    if (detail && *detail) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    return kExitInvalid;
}

catnoise_status make_channel(const json& doc, catnoise_channel** out) {
    if (doc.contains("pi")) {
        double pi[4] = {doc["pi"][0], doc["pi"][1], doc["pi"][2], doc["pi"][3]};
        return catnoise_channel_create(pi, out);
    }
    if (doc.contains("preset")) {
        std::string name = doc["preset"].at("name");
        double strength = doc["preset"].at("strength");
        return catnoise_channel_preset(name.c_str(), strength, out);
    }
    std::cerr << "error: no channel given (use --pi0..--pi3 or --preset/--strength)\n";
    return CATNOISE_ERR_INVALID_CONFIG;
}

void print_analyze_text(const json& rep, std::ostream& os) {
    const auto& pi = rep["pi"];
    const auto& p = rep["params"];
    os << "channel: pi = (" << pi[0] << ", " << pi[1] << ", " << pi[2] << ", " << pi[3] << ")\n";
    os << "params:  a = " << p["a"] << ", b = " << p["b"] << ", c = " << p["c"]
       << ", d = " << p["d"] << "\n";
    os << "N = " << rep["n"] << ", parity class: " << rep["parity_class"].get<std::string>()
       << "\n\n";
    os << "  k      delta        2*lambda     log_margin   verdict\n";
    for (const auto& cut : rep["cuts"]) {
        char line[160];
        auto num = [](const json& v) {
            return v.is_number() ? v.get<double>()
                                 : (v.get<std::string>() == "inf"
                                        ? std::numeric_limits<double>::infinity()
                                        : -std::numeric_limits<double>::infinity());
        };
        std::snprintf(line, sizeof line, "  %-6lld %-12.5g %-12.5g %-12.5g %s\n",
                      static_cast<long long>(cut["k"].get<std::int64_t>()), num(cut["delta"]),
                      num(cut["two_lambda"]), num(cut["log_margin"]),
                      cut["verdict"].get<std::string>().c_str());
        os << line;
    }
    os << "\n";
    os << "min entangled k: "
       << (rep["min_entangled_k"].is_null() ? std::string("none")
                                            : std::to_string(rep["min_entangled_k"].get<std::int64_t>()))
       << "\n";
    os << "max distillable M: "
       << (rep["max_M"].is_null() ? std::string("none")
                                  : std::to_string(rep["max_M"].get<std::int64_t>()))
       << "\n";
    const auto& as = rep["asymptotic"];
    os << "asymptotic: f(a,|c|) = " << as["f_threshold"] << ", regime = "
       << as["regime"].get<std::string>()
       << ", c^2 > ab: " << (as["robust_pair_ok"].get<bool>() ? "true" : "false") << "\n";
}

int run_analyze(const CommonFlags& flags) {
    json doc = build_config(flags);
    std::int64_t n = 0;
    if (doc.contains("n")) {
        n = doc["n"].get<std::int64_t>();
    } else if (doc.contains("n_values") && doc["n_values"].is_array() &&
               !doc["n_values"].empty()) {
        n = doc["n_values"][0].get<std::int64_t>();
    } else {
        std::cerr << "error: analyze needs --n\n";
        return kExitInvalid;
    }

    catnoise_channel* ch = nullptr;
    if (auto st = make_channel(doc, &ch)) return fail(st);

    char* out = nullptr;
    catnoise_status st = catnoise_analyze(ch, n, &out);
    catnoise_channel_destroy(ch);
    if (st != CATNOISE_OK) return fail(st);

    json rep = json::parse(out);
    catnoise_string_free(out);

    std::ostringstream text;
    if (flags.format == "json") {
        text << rep.dump(2) << "\n";
    } else {
        print_analyze_text(rep, text);
    }
    if (!flags.out_path.empty()) {
        std::ofstream f(flags.out_path);
        f << text.str();
    } else {
        std::cout << text.str();
    }
    return kExitOk;
}

int run_sweep_cmd(const CommonFlags& flags) {
    json doc = build_config(flags);
    char* summary = nullptr;
    catnoise_status st = catnoise_run_sweep(doc.dump().c_str(), &summary);
    if (st != CATNOISE_OK) return fail(st);
    std::cerr << summary << "\n";
    catnoise_string_free(summary);
    return kExitOk;
}

int run_verify_cmd(const CommonFlags& flags) {
    json doc = build_config(flags);
    doc["oracle"] = true;
    char* report = nullptr;
    std::int64_t forbidden = 0;
    catnoise_status st = catnoise_run_verify(doc.dump().c_str(), &report, &forbidden);
    if (st != CATNOISE_OK) return fail(st);
    json rep = json::parse(report);
    catnoise_string_free(report);
    if (flags.out_path.empty()) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << rep["summary"].dump(2) << "\n";
    }
    if (forbidden > 0) {
        std::cerr << "verify: " << forbidden << " forbidden disagreement(s) found\n";
        return kExitForbidden;
    }
    return kExitOk;
}

int run_threshold_cmd(const CommonFlags& flags) {
    json doc = build_config(flags);
    char* table = nullptr;
    catnoise_status st = catnoise_run_threshold(doc.dump().c_str(), &table);
    if (st != CATNOISE_OK) return fail(st);
    if (flags.out_path.empty()) std::cout << table << "\n";
    catnoise_string_free(table);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entanglement structure of N-qubit cat states under Pauli noise"};
    app.require_subcommand(1);

    CommonFlags fa, fs, fv, ft;

    CLI::App* analyze = app.add_subcommand("analyze", "per-cut verdicts for one channel and N");
    add_channel_flags(analyze, fa);
    add_common_flags(analyze, fa);
    analyze->add_option("--n", fa.n_values, "number of qubits");

    CLI::App* sweep = app.add_subcommand("sweep", "grid scan; one row per (channel, N, k)");
    add_channel_flags(sweep, fs);
    add_grid_flags(sweep, fs);
    add_common_flags(sweep, fs);
    sweep->add_option("--n", fs.n_values, "N values (repeatable)");
    sweep->add_option("--n-start", fs.n_start, "N range start");
    sweep->add_option("--n-stop", fs.n_stop, "N range stop");

    CLI::App* verify = app.add_subcommand("verify", "oracle-vs-analytic agreement campaign");
    add_channel_flags(verify, fv);
    add_grid_flags(verify, fv);
    add_common_flags(verify, fv);
    verify->add_option("--n", fv.n_values, "N values (repeatable, all within oracle limit)");
    verify->add_option("--n-start", fv.n_start, "N range start");
    verify->add_option("--n-stop", fv.n_stop, "N range stop");

    CLI::App* threshold = app.add_subcommand("threshold", "asymptotic/finite-N threshold table");
    add_channel_flags(threshold, ft);
    add_grid_flags(threshold, ft);
    add_common_flags(threshold, ft);
    threshold->add_option("--n", ft.n_values, "N values for the finite-N columns (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(fa);
        if (sweep->parsed()) return run_sweep_cmd(fs);
        if (verify->parsed()) return run_verify_cmd(fv);
        if (threshold->parsed()) return run_threshold_cmd(ft);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
