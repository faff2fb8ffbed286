#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "criteria.hpp"
#include "oracle.hpp"

namespace catnoise {

struct SweepConfig {
    enum class CutsMode { All, List, MinOnly };
    enum class Format { Csv, Json };

    std::vector<PauliChannel> channels;
    std::vector<std::int64_t> n_values;
    CutsMode cuts_mode = CutsMode::All;
    std::vector<std::int64_t> cut_list;
    bool oracle = false;
    int oracle_max_qubits = oracle::kDefaultMaxQubits;
    std::string output;              // empty: stdout
    Format format = Format::Csv;
    std::uint64_t seed = 0;
    int workers = 1;
};

// Parses the JSON config document. Channel sources (in emission order):
// "pi": [p0,p1,p2,p3], "channels": [[...],...],
// "preset": {"name","strength"} or {"name","start","stop","step"},
// "random_channels": {"count"} drawn uniformly from the simplex with "seed".
SweepConfig parse_config(const nlohmann::json& doc);

// Deterministic uniform draw from the probability simplex.
std::vector<PauliChannel> random_channels(std::size_t count, std::uint64_t seed);

// Per-cut verdict table, partition report and asymptotic report for one
// channel at one N.
nlohmann::json analyze(const PauliChannel& ch, std::int64_t n);

// One row per (channel, N, k), written to cfg.output in cfg.format.
// Returns a run summary. Byte-deterministic given config and seed.
nlohmann::json run_sweep(const SweepConfig& cfg);

// Oracle-vs-analytic campaign over the full grid; every point classified
// as agree / forbidden (analytic yes, oracle no) / necessity-gap
// (analytic no, oracle yes) / boundary.
nlohmann::json run_verify(const SweepConfig& cfg);

// Asymptotic threshold f(a,|c|) and finite-N max M per channel.
nlohmann::json run_threshold(const SweepConfig& cfg);

} // namespace catnoise
