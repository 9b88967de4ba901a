#pragma once

#include <string>

#include <json.hpp>

#include "clifford/classification.hpp"
#include "clifford/multivector.hpp"
#include "clifford/representations.hpp"

namespace clifford {

// Field order is fixed everywhere so CLI output is byte-deterministic.
using Json = nlohmann::ordered_json;

/// { "p", "q", "field", "convention", "coeffs" }; real coefficients are
/// numbers, complex ones [re, im] pairs.
Json multivector_to_json(const Multivector& x);

/// Parses and validates the document above. Throws std::invalid_argument
/// with a message on any schema violation.
Multivector multivector_from_json(const Json& doc);

/// CSV rows of "+k"/"-k" cells; sign always explicit so -e_0 is "-0".
std::string product_table_csv(const ProductTable& table);

/// JSON variant: entries are {"sign": +/-1, "index": k} objects.
Json product_table_json(const ProductTable& table);

Json descriptor_to_json(const AlgebraDescriptor& d);

Json report_to_json(const VerificationReport& report);

const char* verdict_name(Verdict v) noexcept;
const char* match_name(SignatureMatch m) noexcept;

/// Lines "n sign" for n = 1..max_n, sign rendered "+1"/"-1".
std::string orientation_lines(int max_n);

}  // namespace clifford
