#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ahs/jet.hpp"
#include "ahs/moebius.hpp"
#include "ahs/qseries.hpp"

namespace ahs {

using ordered_json = nlohmann::ordered_json;

// Jet schema: {"base_point": null | [re, im] | [num_str, den_str],
//              "coeffs": [[re, im], ...] | [[num_str, den_str], ...]}
// Rationals travel as decimal strings so exact values survive the trip.
ordered_json jet_to_json(const JetC& j);
ordered_json jet_to_json(const JetQ& j);
JetC jetc_from_json(const ordered_json& v);
JetQ jetq_from_json(const ordered_json& v);

// Matrices as [[a, b], [c, d]] with integer entries.
ordered_json imat_to_json(const IMat& m);
IMat imat_from_json(const ordered_json& v);

// Complex scalars as [re, im].
ordered_json cplx_to_json(Cplx z);
Cplx cplx_from_json(const ordered_json& v);

ordered_json rat_to_json(const Rat& r);
Rat rat_from_json(const ordered_json& v);

// Exact q-expansions: {"coeffs": [[num_str, den_str], ...]}.
ordered_json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const ordered_json& v);

ordered_json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Shortest round-trip decimal form, used everywhere a double becomes text
// so reports are byte-stable.
std::string format_double(double x);

}  // namespace ahs
