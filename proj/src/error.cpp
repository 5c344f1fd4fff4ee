#include "zonecast/error.hpp"

namespace zonecast {

std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::empty_zone: return "EmptyZone";
        case Errc::tld_mismatch: return "TldMismatch";
        case Errc::date_order: return "DateOrder";
        case Errc::unsupported_syntax: return "UnsupportedSyntax";
        case Errc::missing_columns: return "MissingColumns";
        case Errc::empty_range: return "EmptyRange";
        case Errc::schema_unknown: return "SchemaUnknown";
        case Errc::invalid_date: return "InvalidDate";
        case Errc::single_class: return "SingleClass";
        case Errc::non_finite_feature: return "NonFiniteFeature";
        case Errc::schema_mismatch: return "SchemaMismatch";
        case Errc::insufficient_data: return "InsufficientData";
        case Errc::invalid_stochastic_vector: return "InvalidStochasticVector";
        case Errc::numerical_underflow: return "NumericalUnderflow";
        case Errc::series_too_short: return "SeriesTooShort";
        case Errc::non_stationary_fit: return "NonStationaryFit";
        case Errc::unfit_model: return "UnfitModel";
        case Errc::exog_coverage: return "ExogCoverage";
        case Errc::all_fits_failed: return "AllFitsFailed";
        case Errc::window_too_large: return "WindowTooLarge";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::mase_undefined: return "MaseUndefined";
        case Errc::constant_series: return "ConstantSeries";
        case Errc::no_zone_files: return "NoZoneFiles";
        case Errc::missing_candidates: return "MissingCandidates";
        case Errc::invalid_config: return "InvalidConfig";
        case Errc::io_error: return "IoError";
        case Errc::invalid_argument: return "InvalidArgument";
    }
    return "UnknownError";
}

}  // namespace zonecast
