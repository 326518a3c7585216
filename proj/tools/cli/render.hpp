#pragma once

#include <string>

#include "records.hpp"

namespace hyperjac::cli {

/// Aligned "key  value" text derived from a JSON report. Arrays of flat
/// objects with identical keys print as tables.
std::string render_text(const Json& report);

}  // namespace hyperjac::cli
