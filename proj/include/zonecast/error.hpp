#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zonecast {

/// Error categories surfaced by library operations. Each value maps to a
/// documented failure mode of one or more operations.
enum class Errc {
    // zone / blacklist ingestion
    empty_zone,
    tld_mismatch,
    date_order,
    unsupported_syntax,
    missing_columns,
    empty_range,
    // whois
    schema_unknown,
    invalid_date,
    // classifier
    single_class,
    non_finite_feature,
    schema_mismatch,
    insufficient_data,
    // forecasting
    invalid_stochastic_vector,
    numerical_underflow,
    series_too_short,
    non_stationary_fit,
    unfit_model,
    exog_coverage,
    all_fits_failed,
    window_too_large,
    length_mismatch,
    mase_undefined,
    constant_series,
    // cli
    no_zone_files,
    missing_candidates,
    invalid_config,
    io_error,
    invalid_argument,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace zonecast
