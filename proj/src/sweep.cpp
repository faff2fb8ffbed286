#include "sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "log.hpp"

namespace catnoise {

namespace {

using nlohmann::json;

std::string fmt_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Finite values as numbers, non-finite as string literals.
json json_double(double x) {
    if (std::isfinite(x)) return x;
    return fmt_double(x);
}

std::vector<std::int64_t> cuts_for(const SweepConfig& cfg, std::int64_t n) {
    switch (cfg.cuts_mode) {
        case SweepConfig::CutsMode::All: {
            std::vector<std::int64_t> ks;
            for (std::int64_t k = 1; k <= n / 2; ++k) ks.push_back(k);
            return ks;
        }
        case SweepConfig::CutsMode::List: {
            std::vector<std::int64_t> ks;
            for (auto k : cfg.cut_list) {
                if (k >= 1 && k <= n / 2) ks.push_back(k);
            }
            return ks;
        }
        case SweepConfig::CutsMode::MinOnly:
            return {}; // resolved per channel once the minimal k is known
    }
    return {};
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    for (int w = 0; w < std::min<std::size_t>(workers, count); ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

struct Row {
    PauliChannel ch;
    DerivedParams p;
    std::int64_t n = 0;
    std::int64_t k = 0;
    double delta_v = 0;
    double two_lambda_v = 0;
    double log_margin_v = 0;
    Verdict verdict = Verdict::No;
    std::optional<std::int64_t> max_m;
    double f_threshold = 0;
    ParityClass parity = ParityClass::SameSign;
    std::optional<double> oracle_min_eig;
    std::optional<bool> oracle_nppt;
    std::optional<bool> agreement;
};

const char* kCsvHeader =
    "pi0,pi1,pi2,pi3,a,b,c,d,N,k,delta,two_lambda,log_margin,verdict,max_M,"
    "f_threshold,parity_class,oracle_min_eig,oracle_nppt,agreement";

std::string row_to_csv(const Row& r) {
    std::string s;
    s += fmt_double(r.ch.pi0) + "," + fmt_double(r.ch.pi1) + "," + fmt_double(r.ch.pi2) + "," +
         fmt_double(r.ch.pi3) + ",";
    s += fmt_double(r.p.a) + "," + fmt_double(r.p.b) + "," + fmt_double(r.p.c) + "," +
         fmt_double(r.p.d) + ",";
    s += std::to_string(r.n) + "," + std::to_string(r.k) + ",";
    s += fmt_double(r.delta_v) + "," + fmt_double(r.two_lambda_v) + "," +
         fmt_double(r.log_margin_v) + ",";
    s += std::string(to_string(r.verdict)) + ",";
    s += (r.max_m ? std::to_string(*r.max_m) : std::string()) + ",";
    s += fmt_double(r.f_threshold) + ",";
    s += to_string(r.parity);
    s += ",";
    s += r.oracle_min_eig ? fmt_double(*r.oracle_min_eig) : std::string();
    s += ",";
    s += r.oracle_nppt ? std::string(*r.oracle_nppt ? "true" : "false") : std::string();
    s += ",";
    s += r.agreement ? std::string(*r.agreement ? "true" : "false") : std::string();
    return s;
}

json row_to_json(const Row& r) {
    json j;
    j["pi"] = {r.ch.pi0, r.ch.pi1, r.ch.pi2, r.ch.pi3};
    j["a"] = r.p.a;
    j["b"] = r.p.b;
    j["c"] = r.p.c;
    j["d"] = r.p.d;
    j["N"] = r.n;
    j["k"] = r.k;
    j["delta"] = json_double(r.delta_v);
    j["two_lambda"] = json_double(r.two_lambda_v);
    j["log_margin"] = json_double(r.log_margin_v);
    j["verdict"] = to_string(r.verdict);
    if (r.max_m) j["max_M"] = *r.max_m; else j["max_M"] = nullptr;
    j["f_threshold"] = json_double(r.f_threshold);
    j["parity_class"] = to_string(r.parity);
    if (r.oracle_min_eig) j["oracle_min_eig"] = json_double(*r.oracle_min_eig);
    if (r.oracle_nppt) j["oracle_nppt"] = *r.oracle_nppt;
    if (r.agreement) j["agreement"] = *r.agreement;
    return j;
}

std::vector<PauliChannel> channels_from_config(const json& doc, std::uint64_t seed) {
    std::vector<PauliChannel> out;
    if (doc.contains("pi")) {
        auto v = doc.at("pi");
        if (!v.is_array() || v.size() != 4) {
            throw Error(ErrorCode::InvalidConfig, "\"pi\" must be an array of 4 probabilities");
        }
        out.push_back(validate_channel(v[0], v[1], v[2], v[3]));
    }
    if (doc.contains("channels")) {
        for (const auto& v : doc.at("channels")) {
            if (!v.is_array() || v.size() != 4) {
                throw Error(ErrorCode::InvalidConfig, "each channel needs 4 probabilities");
            }
            out.push_back(validate_channel(v[0], v[1], v[2], v[3]));
        }
    }
    if (doc.contains("preset")) {
        const auto& pr = doc.at("preset");
        std::string name = pr.at("name");
        if (pr.contains("strength")) {
            out.push_back(preset(name, pr.at("strength").get<double>()));
        } else {
            double start = pr.at("start"), stop = pr.at("stop"), step = pr.at("step");
            if (!(step > 0)) throw Error(ErrorCode::InvalidConfig, "preset step must be positive");
            // index-based loop keeps the grid free of accumulated rounding
            long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
            for (long i = 0; i < count; ++i) {
                out.push_back(preset(name, std::min(1.0, start + i * step)));
            }
        }
    }
    if (doc.contains("random_channels")) {
        std::size_t count = doc.at("random_channels").at("count");
        auto rnd = random_channels(count, seed);
        out.insert(out.end(), rnd.begin(), rnd.end());
    }
    return out;
}

std::vector<std::int64_t> n_values_from_config(const json& doc) {
    std::vector<std::int64_t> out;
    if (doc.contains("n")) out.push_back(doc.at("n").get<std::int64_t>());
    if (doc.contains("n_values")) {
        const auto& nv = doc.at("n_values");
        if (nv.is_array()) {
            for (const auto& v : nv) out.push_back(v.get<std::int64_t>());
        } else if (nv.is_object()) {
            std::int64_t start = nv.at("start"), stop = nv.at("stop");
            std::int64_t step = nv.value("step", std::int64_t{1});
            if (step < 1) throw Error(ErrorCode::InvalidConfig, "n_values step must be >= 1");
            for (std::int64_t n = start; n <= stop; n += step) out.push_back(n);
        } else {
            throw Error(ErrorCode::InvalidConfig, "n_values must be an array or {start,stop,step}");
        }
    }
    for (auto n : out) {
        if (n < 2) throw Error(ErrorCode::InvalidConfig, "every N must be >= 2");
    }
    return out;
}

void write_output(const SweepConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw Error(ErrorCode::Io, "cannot open output file: " + cfg.output);
    f << text;
    if (!f) throw Error(ErrorCode::Io, "write failed: " + cfg.output);
}

} // namespace

std::vector<PauliChannel> random_channels(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // explicit uniform mapping keeps the stream independent of the
    // standard library's distribution implementations
    auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    std::vector<PauliChannel> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double e[4], sum = 0.0;
        for (double& x : e) {
            x = -std::log1p(-uniform()); // Exp(1); Dirichlet(1,1,1,1) after scaling
            sum += x;
        }
        out.push_back(validate_channel(e[0] / sum, e[1] / sum, e[2] / sum,
                                       1.0 - e[0] / sum - e[1] / sum - e[2] / sum));
    }
    return out;
}

SweepConfig parse_config(const json& doc) {
    SweepConfig cfg;
    cfg.seed = doc.value("seed", std::uint64_t{0});
    cfg.channels = channels_from_config(doc, cfg.seed);
    cfg.n_values = n_values_from_config(doc);
    if (cfg.channels.empty()) throw Error(ErrorCode::InvalidConfig, "no channels specified");
    if (cfg.n_values.empty()) throw Error(ErrorCode::InvalidConfig, "no N values specified");

    if (doc.contains("cuts")) {
        const auto& cuts = doc.at("cuts");
        if (cuts.is_string()) {
            std::string mode = cuts;
            if (mode == "all") {
                cfg.cuts_mode = SweepConfig::CutsMode::All;
            } else if (mode == "min-only") {
                cfg.cuts_mode = SweepConfig::CutsMode::MinOnly;
            } else {
                throw Error(ErrorCode::InvalidConfig, "cuts must be \"all\", \"min-only\" or a k list");
            }
        } else if (cuts.is_array()) {
            cfg.cuts_mode = SweepConfig::CutsMode::List;
            for (const auto& v : cuts) cfg.cut_list.push_back(v.get<std::int64_t>());
        } else {
            throw Error(ErrorCode::InvalidConfig, "cuts must be \"all\", \"min-only\" or a k list");
        }
    }

    cfg.oracle = doc.value("oracle", false);
    cfg.oracle_max_qubits = doc.value("oracle_max_qubits", oracle::kDefaultMaxQubits);
    if (cfg.oracle_max_qubits > oracle::kDefaultMaxQubits) {
        CATNOISE_WARN("oracle_max_qubits=" << cfg.oracle_max_qubits
                                           << " exceeds the default cap; dense states are 4^N");
    }
    if (cfg.oracle) {
        for (auto n : cfg.n_values) {
            if (n > cfg.oracle_max_qubits) {
                throw Error(ErrorCode::SizeTooLarge,
                            "oracle runs require N <= " + std::to_string(cfg.oracle_max_qubits));
            }
        }
    }
    cfg.output = doc.value("output", std::string());
    std::string format = doc.value("format", std::string("csv"));
    if (format == "csv") {
        cfg.format = SweepConfig::Format::Csv;
    } else if (format == "json") {
        cfg.format = SweepConfig::Format::Json;
    } else {
        throw Error(ErrorCode::InvalidConfig, "format must be csv or json");
    }
    cfg.workers = doc.value("workers", 1);
    if (cfg.workers < 1) throw Error(ErrorCode::InvalidConfig, "workers must be >= 1");
    return cfg;
}

json analyze(const PauliChannel& ch, std::int64_t n) {
    DerivedParams p = derive_params(ch);
    json out;
    out["pi"] = {ch.pi0, ch.pi1, ch.pi2, ch.pi3};
    out["params"] = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}};
    out["n"] = n;

    json cut_rows = json::array();
    for (std::int64_t k = 1; k <= n / 2; ++k) {
        CutVerdict v = cut_verdict(p, CutSpec(n, k));
        cut_rows.push_back({{"k", k},
                            {"delta", json_double(v.delta)},
                            {"two_lambda", json_double(v.two_lambda)},
                            {"log_margin", json_double(v.log_margin)},
                            {"verdict", to_string(v.verdict)}});
    }
    out["cuts"] = cut_rows;

    PartitionReport rep = max_distillable_m(p, n);
    out["min_entangled_k"] = rep.min_entangled_k ? json(*rep.min_entangled_k) : json(nullptr);
    out["max_M"] = rep.max_m ? json(*rep.max_m) : json(nullptr);
    out["parity_class"] = to_string(rep.parity_class);
    out["fully_separable_flag"] = rep.fully_separable_flag;

    AsymptoticReport ar = asymptotic_report(p);
    out["asymptotic"] = {
        {"f_threshold", json_double(ar.f_threshold)},
        {"robust_pair_ok", ar.robust_pair_ok},
        {"regime", to_string(ar.regime)},
        {"finite_equals_asymptotic_alpha",
         ar.finite_equals_asymptotic_alpha ? json(*ar.finite_equals_asymptotic_alpha)
                                           : json(nullptr)},
    };

    ParityProbe probe = parity_probe(p, n);
    out["parity_probe"] = {{"delta_n", json_double(probe.delta_n)},
                           {"delta_n_plus_1", json_double(probe.delta_n_plus1)}};
    return out;
}

json run_sweep(const SweepConfig& cfg) {
    struct Unit {
        std::size_t channel_index;
        std::int64_t n;
    };
    std::vector<Unit> units;
    for (std::size_t ci = 0; ci < cfg.channels.size(); ++ci) {
        for (auto n : cfg.n_values) units.push_back({ci, n});
    }

    std::vector<std::vector<Row>> results(units.size());
    parallel_for(units.size(), cfg.workers, [&](std::size_t ui) {
        const Unit& u = units[ui];
        const PauliChannel& ch = cfg.channels[u.channel_index];
        DerivedParams p = derive_params(ch);
        PartitionReport rep = max_distillable_m(p, u.n);
        AsymptoticReport ar = asymptotic_report(p);

        std::vector<std::int64_t> ks = cuts_for(cfg, u.n);
        if (cfg.cuts_mode == SweepConfig::CutsMode::MinOnly) {
            ks.push_back(rep.min_entangled_k ? *rep.min_entangled_k : u.n / 2);
        }

        std::optional<oracle::DenseState> state;
        if (cfg.oracle) {
            state.emplace(oracle::decohere_all(static_cast<int>(u.n), ch, cfg.oracle_max_qubits));
        }

        for (auto k : ks) {
            Row r;
            r.ch = ch;
            r.p = p;
            r.n = u.n;
            r.k = k;
            CutVerdict v = cut_verdict(p, CutSpec(u.n, k));
            r.delta_v = v.delta;
            r.two_lambda_v = v.two_lambda;
            r.log_margin_v = v.log_margin;
            r.verdict = v.verdict;
            r.max_m = rep.max_m;
            r.f_threshold = ar.f_threshold;
            r.parity = rep.parity_class;
            if (state) {
                oracle::PtResult pt = oracle::oracle_cut_verdict(*state, static_cast<int>(k));
                r.oracle_min_eig = pt.min_eigenvalue;
                r.oracle_nppt = pt.nppt;
                r.agreement = (r.verdict == Verdict::Boundary) ||
                              ((r.verdict == Verdict::Yes) == pt.nppt);
            }
            results[ui].push_back(r);
        }
    });

    std::size_t row_count = 0;
    std::string text;
    if (cfg.format == SweepConfig::Format::Csv) {
        text += kCsvHeader;
        text += "\n";
        for (const auto& rows : results) {
            for (const auto& r : rows) {
                text += row_to_csv(r);
                text += "\n";
                ++row_count;
            }
        }
    } else {
        json arr = json::array();
        for (const auto& rows : results) {
            for (const auto& r : rows) {
                arr.push_back(row_to_json(r));
                ++row_count;
            }
        }
        text = arr.dump(2);
        text += "\n";
    }
    write_output(cfg, text);

    json summary;
    summary["rows"] = row_count;
    summary["channels"] = cfg.channels.size();
    summary["output"] = cfg.output.empty() ? json(nullptr) : json(cfg.output);
    summary["format"] = cfg.format == SweepConfig::Format::Csv ? "csv" : "json";
    return summary;
}

json run_verify(const SweepConfig& cfg) {
    for (auto n : cfg.n_values) {
        if (n > cfg.oracle_max_qubits) {
            throw Error(ErrorCode::SizeTooLarge,
                        "verify requires N <= " + std::to_string(cfg.oracle_max_qubits));
        }
    }

    struct Unit {
        std::size_t channel_index;
        std::int64_t n;
    };
    std::vector<Unit> units;
    for (std::size_t ci = 0; ci < cfg.channels.size(); ++ci) {
        for (auto n : cfg.n_values) units.push_back({ci, n});
    }

    std::vector<json> point_blocks(units.size());
    std::atomic<std::int64_t> agree{0}, forbidden{0}, necessity_gap{0}, boundary{0};

    parallel_for(units.size(), cfg.workers, [&](std::size_t ui) {
        const Unit& u = units[ui];
        const PauliChannel& ch = cfg.channels[u.channel_index];
        DerivedParams p = derive_params(ch);
        oracle::DenseState state =
            oracle::decohere_all(static_cast<int>(u.n), ch, cfg.oracle_max_qubits);

        json pts = json::array();
        for (std::int64_t k = 1; k <= u.n / 2; ++k) {
            CutVerdict v = cut_verdict(p, CutSpec(u.n, k));
            oracle::PtResult pt = oracle::oracle_cut_verdict(state, static_cast<int>(k));
            const char* cls;
            if (v.verdict == Verdict::Boundary) {
                cls = "boundary";
                ++boundary;
            } else if (v.verdict == Verdict::Yes && !pt.nppt) {
                cls = "analytic-yes-oracle-no";
                ++forbidden;
            } else if (v.verdict == Verdict::No && pt.nppt) {
                cls = "analytic-no-oracle-yes";
                ++necessity_gap;
            } else {
                cls = "agree";
                ++agree;
            }
            pts.push_back({{"pi", {ch.pi0, ch.pi1, ch.pi2, ch.pi3}},
                           {"n", u.n},
                           {"k", k},
                           {"analytic", to_string(v.verdict)},
                           {"log_margin", json_double(v.log_margin)},
                           {"oracle_min_eigenvalue", json_double(pt.min_eigenvalue)},
                           {"oracle_nppt", pt.nppt},
                           {"class", cls}});
        }
        point_blocks[ui] = std::move(pts);
    });

    json points = json::array();
    for (auto& block : point_blocks) {
        for (auto& p : block) points.push_back(std::move(p));
    }

    json report;
    report["points"] = std::move(points);
    report["summary"] = {{"total", agree.load() + forbidden.load() + necessity_gap.load() +
                                       boundary.load()},
                         {"agree", agree.load()},
                         {"forbidden", forbidden.load()},
                         {"necessity_gap", necessity_gap.load()},
                         {"boundary", boundary.load()}};
    if (!cfg.output.empty()) {
        SweepConfig out_cfg = cfg;
        write_output(out_cfg, report.dump(2) + "\n");
    }
    return report;
}

json run_threshold(const SweepConfig& cfg) {
    json entries = json::array();
    for (const auto& ch : cfg.channels) {
        DerivedParams p = derive_params(ch);
        AsymptoticReport ar = asymptotic_report(p);
        json entry;
        entry["pi"] = {ch.pi0, ch.pi1, ch.pi2, ch.pi3};
        entry["a"] = p.a;
        entry["c"] = p.c;
        entry["f_threshold"] = json_double(ar.f_threshold);
        entry["regime"] = to_string(ar.regime);
        if (ar.f_threshold == 0.0) {
            entry["asymptotic_max_M"] = "unbounded";
        } else if (std::isinf(ar.f_threshold)) {
            entry["asymptotic_max_M"] = nullptr;
        } else {
            entry["asymptotic_max_M"] = static_cast<std::int64_t>(std::floor(1.0 / ar.f_threshold));
        }
        json finite = json::array();
        for (auto n : cfg.n_values) {
            PartitionReport rep = max_distillable_m(p, n);
            finite.push_back(
                {{"n", n}, {"max_M", rep.max_m ? json(*rep.max_m) : json(nullptr)}});
        }
        entry["finite"] = finite;
        entries.push_back(entry);
    }
    json out;
    out["entries"] = entries;
    if (!cfg.output.empty()) write_output(cfg, out.dump(2) + "\n");
    return out;
}

} // namespace catnoise
