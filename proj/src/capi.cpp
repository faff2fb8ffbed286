#include "catnoise/catnoise.h"

#include <cstring>
#include <new>
#include <string>

#include "cat_algebra.hpp"
#include "channel.hpp"
#include "criteria.hpp"
#include "sweep.hpp"

struct catnoise_channel {
    catnoise::PauliChannel ch;
    catnoise::DerivedParams p;
};

namespace {

thread_local std::string g_last_error;

catnoise_status status_of(catnoise::ErrorCode code) {
    using catnoise::ErrorCode;
    switch (code) {
        case ErrorCode::NegativeProbability: return CATNOISE_ERR_NEGATIVE_PROBABILITY;
        case ErrorCode::NotNormalized: return CATNOISE_ERR_NOT_NORMALIZED;
        case ErrorCode::UnknownPreset: return CATNOISE_ERR_UNKNOWN_PRESET;
        case ErrorCode::OutOfRange: return CATNOISE_ERR_OUT_OF_RANGE;
        case ErrorCode::SizeTooLarge: return CATNOISE_ERR_SIZE_TOO_LARGE;
        case ErrorCode::InvalidConfig: return CATNOISE_ERR_INVALID_CONFIG;
        case ErrorCode::Io: return CATNOISE_ERR_IO;
        case ErrorCode::NotHermitian: return CATNOISE_ERR_NOT_HERMITIAN;
        case ErrorCode::NoConvergence: return CATNOISE_ERR_NO_CONVERGENCE;
        case ErrorCode::Internal: return CATNOISE_ERR_INTERNAL;
    }
    return CATNOISE_ERR_INTERNAL;
}

template <typename Fn>
catnoise_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const catnoise::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return CATNOISE_ERR_INVALID_CONFIG;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CATNOISE_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

catnoise_status require(bool ok, const char* what) {
    if (!ok) {
        g_last_error = what;
        return CATNOISE_ERR_INVALID_ARGUMENT;
    }
    return CATNOISE_OK;
}

catnoise::SweepConfig config_from_string(const char* config_json) {
    nlohmann::json doc = nlohmann::json::parse(config_json);
    return catnoise::parse_config(doc);
}

} // namespace

extern "C" {

const char* catnoise_status_message(catnoise_status status) {
    switch (status) {
        case CATNOISE_OK: return "ok";
        case CATNOISE_ERR_NEGATIVE_PROBABILITY: return "negative probability";
        case CATNOISE_ERR_NOT_NORMALIZED: return "probabilities do not sum to 1";
        case CATNOISE_ERR_UNKNOWN_PRESET: return "unknown preset";
        case CATNOISE_ERR_OUT_OF_RANGE: return "argument out of range";
        case CATNOISE_ERR_SIZE_TOO_LARGE: return "size too large";
        case CATNOISE_ERR_INVALID_CONFIG: return "invalid configuration";
        case CATNOISE_ERR_IO: return "i/o error";
        case CATNOISE_ERR_NOT_HERMITIAN: return "matrix not Hermitian";
        case CATNOISE_ERR_NO_CONVERGENCE: return "eigensolver did not converge";
        case CATNOISE_ERR_INVALID_ARGUMENT: return "invalid argument";
        case CATNOISE_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* catnoise_last_error(void) { return g_last_error.c_str(); }

void catnoise_string_free(char* s) { delete[] s; }

catnoise_status catnoise_channel_create(const double pi[4], catnoise_channel** out) {
    if (auto st = require(pi && out, "null pointer argument")) return st;
    return guarded([&] {
        auto ch = catnoise::validate_channel(pi[0], pi[1], pi[2], pi[3]);
        *out = new catnoise_channel{ch, catnoise::derive_params(ch)};
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_channel_preset(const char* name, double strength,
                                        catnoise_channel** out) {
    if (auto st = require(name && out, "null pointer argument")) return st;
    return guarded([&] {
        auto ch = catnoise::preset(name, strength);
        *out = new catnoise_channel{ch, catnoise::derive_params(ch)};
        return CATNOISE_OK;
    });
}

void catnoise_channel_destroy(catnoise_channel* ch) { delete ch; }

catnoise_status catnoise_channel_probabilities(const catnoise_channel* ch, double pi_out[4]) {
    if (auto st = require(ch && pi_out, "null pointer argument")) return st;
    pi_out[0] = ch->ch.pi0;
    pi_out[1] = ch->ch.pi1;
    pi_out[2] = ch->ch.pi2;
    pi_out[3] = ch->ch.pi3;
    return CATNOISE_OK;
}

catnoise_status catnoise_channel_params(const catnoise_channel* ch, double* a, double* b,
                                        double* c, double* d) {
    if (auto st = require(ch != nullptr, "null channel")) return st;
    if (a) *a = ch->p.a;
    if (b) *b = ch->p.b;
    if (c) *c = ch->p.c;
    if (d) *d = ch->p.d;
    return CATNOISE_OK;
}

catnoise_status catnoise_delta(const catnoise_channel* ch, int64_t n, double* out) {
    if (auto st = require(ch && out, "null pointer argument")) return st;
    return guarded([&] {
        *out = catnoise::delta(ch->p, n);
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_delta_log(const catnoise_channel* ch, int64_t n, int* sign,
                                   double* log_magnitude) {
    if (auto st = require(ch && sign && log_magnitude, "null pointer argument")) return st;
    return guarded([&] {
        catnoise::LogValue v = catnoise::delta_log(ch->p, n);
        *sign = v.sign;
        *log_magnitude = v.log_magnitude;
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_two_lambda(const catnoise_channel* ch, int64_t n, int64_t k,
                                    double* out) {
    if (auto st = require(ch && out, "null pointer argument")) return st;
    return guarded([&] {
        *out = catnoise::two_lambda(ch->p, catnoise::CutSpec(n, k));
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_two_lambda_log(const catnoise_channel* ch, int64_t n, int64_t k,
                                        int* sign, double* log_magnitude) {
    if (auto st = require(ch && sign && log_magnitude, "null pointer argument")) return st;
    return guarded([&] {
        catnoise::LogValue v = catnoise::two_lambda_log(ch->p, catnoise::CutSpec(n, k));
        *sign = v.sign;
        *log_magnitude = v.log_magnitude;
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_cut_verdict(const catnoise_channel* ch, int64_t n, int64_t k,
                                     catnoise_verdict* verdict, double* log_margin) {
    if (auto st = require(ch && verdict, "null pointer argument")) return st;
    return guarded([&] {
        catnoise::CutVerdict v = catnoise::cut_verdict(ch->p, catnoise::CutSpec(n, k));
        switch (v.verdict) {
            case catnoise::Verdict::No: *verdict = CATNOISE_VERDICT_NO; break;
            case catnoise::Verdict::Yes: *verdict = CATNOISE_VERDICT_YES; break;
            case catnoise::Verdict::Boundary: *verdict = CATNOISE_VERDICT_BOUNDARY; break;
        }
        if (log_margin) *log_margin = v.log_margin;
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_min_entangled_k(const catnoise_channel* ch, int64_t n,
                                         int64_t* k_out) {
    if (auto st = require(ch && k_out, "null pointer argument")) return st;
    return guarded([&] {
        auto k = catnoise::min_entangled_k(ch->p, n);
        *k_out = k ? *k : 0;
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_max_distillable(const catnoise_channel* ch, int64_t n,
                                         int64_t* max_m_out, int64_t* min_k_out) {
    if (auto st = require(ch != nullptr, "null channel")) return st;
    return guarded([&] {
        catnoise::PartitionReport rep = catnoise::max_distillable_m(ch->p, n);
        if (max_m_out) *max_m_out = rep.max_m ? *rep.max_m : 0;
        if (min_k_out) *min_k_out = rep.min_entangled_k ? *rep.min_entangled_k : 0;
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_asymptotic(const catnoise_channel* ch, double* f_threshold,
                                    int* robust_pair_ok, catnoise_regime* regime) {
    if (auto st = require(ch != nullptr, "null channel")) return st;
    return guarded([&] {
        catnoise::AsymptoticReport rep = catnoise::asymptotic_report(ch->p);
        if (f_threshold) *f_threshold = rep.f_threshold;
        if (robust_pair_ok) *robust_pair_ok = rep.robust_pair_ok ? 1 : 0;
        if (regime) {
            switch (rep.regime) {
                case catnoise::AsymptoticRegime::EntangledAboveF:
                    *regime = CATNOISE_REGIME_ENTANGLED_ABOVE_F;
                    break;
                case catnoise::AsymptoticRegime::NeverEntangled:
                    *regime = CATNOISE_REGIME_NEVER_ENTANGLED;
                    break;
                case catnoise::AsymptoticRegime::Degenerate:
                    *regime = CATNOISE_REGIME_DEGENERATE;
                    break;
            }
        }
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_analyze(const catnoise_channel* ch, int64_t n, char** json_out) {
    if (auto st = require(ch && json_out, "null pointer argument")) return st;
    return guarded([&] {
        *json_out = dup_string(catnoise::analyze(ch->ch, n).dump(2));
        return *json_out ? CATNOISE_OK : CATNOISE_ERR_INTERNAL;
    });
}

catnoise_status catnoise_run_sweep(const char* config_json, char** summary_json_out) {
    if (auto st = require(config_json != nullptr, "null config")) return st;
    return guarded([&] {
        nlohmann::json summary = catnoise::run_sweep(config_from_string(config_json));
        if (summary_json_out) {
            *summary_json_out = dup_string(summary.dump(2));
            if (!*summary_json_out) return CATNOISE_ERR_INTERNAL;
        }
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_run_verify(const char* config_json, char** report_json_out,
                                    int64_t* forbidden_out) {
    if (auto st = require(config_json != nullptr, "null config")) return st;
    return guarded([&] {
        nlohmann::json report = catnoise::run_verify(config_from_string(config_json));
        if (forbidden_out) {
            *forbidden_out = report.at("summary").at("forbidden").get<int64_t>();
        }
        if (report_json_out) {
            *report_json_out = dup_string(report.dump(2));
            if (!*report_json_out) return CATNOISE_ERR_INTERNAL;
        }
        return CATNOISE_OK;
    });
}

catnoise_status catnoise_run_threshold(const char* config_json, char** table_json_out) {
    if (auto st = require(config_json != nullptr, "null config")) return st;
    return guarded([&] {
        nlohmann::json table = catnoise::run_threshold(config_from_string(config_json));
        if (table_json_out) {
            *table_json_out = dup_string(table.dump(2));
            if (!*table_json_out) return CATNOISE_ERR_INTERNAL;
        }
        return CATNOISE_OK;
    });
}

} // extern "C"
