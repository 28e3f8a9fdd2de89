#pragma once

// JSON and CSV serialization of reports. Numbers carry 12 significant digits;
// JSON keys keep insertion order so identical runs give identical bytes.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qng/measures.hpp"

namespace qng {

struct WitnessReport;

using Json = nlohmann::ordered_json;

/// %.12g; "nan" / "inf" / "-inf" for non-finite values.
std::string format_number(double x);
/// x rounded to 12 significant digits, null when not finite.
Json json_number(double x);

Json to_json(const QuadratureDirection& direction);
Json to_json(const NklResult& nkl);
Json to_json(const KurtosisEstimate& k);
Json to_json(const Provenance& p);
Json to_json(const MeasureReport& report);
Json to_json(const RandomBenchSummary& summary);
Json to_json(const WitnessReport& report);

/// Column names of write_measure_csv_row, in order.
const std::vector<std::string>& measure_csv_columns();
void write_measure_csv_header(std::ostream& os);
void write_measure_csv_row(std::ostream& os, const MeasureReport& report);

}  // namespace qng
