#include "clifford/serialize.hpp"

#include <stdexcept>

namespace clifford {

namespace {

const char* field_name(Field f) { return f == Field::real ? "real" : "complex"; }

const char* convention_name(OrderingKind k) {
    return k == OrderingKind::binary ? "binary" : "grade-lex";
}

Field field_from_name(const std::string& s) {
    if (s == "real") return Field::real;
    if (s == "complex") return Field::complex;
    throw std::invalid_argument("field must be \"real\" or \"complex\"");
}

OrderingKind convention_from_name(const std::string& s) {
    if (s == "binary") return OrderingKind::binary;
    if (s == "grade-lex") return OrderingKind::grade_lex;
    throw std::invalid_argument("convention must be \"grade-lex\" or \"binary\"");
}

}  // namespace

Json multivector_to_json(const Multivector& x) {
    Json doc;
    doc["p"] = x.signature().p();
    doc["q"] = x.signature().q();
    doc["field"] = field_name(x.field());
    doc["convention"] = convention_name(x.convention());
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) {
        if (x.field() == Field::real)
            coeffs.push_back(c.real());
        else
            coeffs.push_back(Json::array({c.real(), c.imag()}));
    }
    doc["coeffs"] = std::move(coeffs);
    return doc;
}

Multivector multivector_from_json(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("multivector document must be an object");
    for (const char* key : {"p", "q", "field", "convention", "coeffs"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("multivector document missing \"") + key + "\"");
    if (!doc["p"].is_number_integer() || !doc["q"].is_number_integer())
        throw std::invalid_argument("p and q must be integers");

    const Signature sig(doc["p"].get<int>(), doc["q"].get<int>());
    const Field field = field_from_name(doc["field"].get<std::string>());
    const OrderingKind kind = convention_from_name(doc["convention"].get<std::string>());

    const Json& coeffs = doc["coeffs"];
    if (!coeffs.is_array()) throw std::invalid_argument("coeffs must be an array");
    const std::size_t want = std::size_t{1} << sig.dimension();
    if (coeffs.size() != want)
        throw std::invalid_argument("coeffs must have exactly 2^(p+q) entries");

    std::vector<Multivector::Scalar> values;
    values.reserve(want);
    for (const Json& c : coeffs) {
        if (c.is_number()) {
            values.emplace_back(c.get<double>(), 0.0);
        } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
            values.emplace_back(c[0].get<double>(), c[1].get<double>());
        } else {
            throw std::invalid_argument("coefficient must be a number or an [re,im] pair");
        }
    }
    return Multivector(sig, field, kind, std::move(values));  // rejects imag in real field
}

std::string product_table_csv(const ProductTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.size; ++i) {
        for (std::size_t j = 0; j < table.size; ++j) {
            const TableEntry& e = table.at(i, j);
            if (j != 0) out += ',';
            out += e.sign < 0 ? '-' : '+';
            out += std::to_string(e.index);
        }
        out += '\n';
    }
    return out;
}

Json product_table_json(const ProductTable& table) {
    Json doc;
    doc["p"] = table.sig.p();
    doc["q"] = table.sig.q();
    doc["order"] = convention_name(table.kind);
    doc["size"] = table.size;
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.size; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < table.size; ++j) {
            const TableEntry& e = table.at(i, j);
            row.push_back(Json{{"sign", e.sign}, {"index", e.index}});
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

Json descriptor_to_json(const AlgebraDescriptor& d) {
    Json doc;
    doc["base"] = base_name(d.base);
    doc["size"] = d.size;
    doc["doubled"] = d.doubled;
    doc["real_dim"] = descriptor_real_dimension(d);
    return doc;
}

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::monomorphism: return "monomorphism";
        case Verdict::isomorphism: return "isomorphism";
        case Verdict::failure: return "failure";
    }
    return "?";
}

const char* match_name(SignatureMatch m) noexcept {
    switch (m) {
        case SignatureMatch::exact: return "exact";
        case SignatureMatch::up_to_permutation: return "up-to-permutation";
        case SignatureMatch::mismatch: return "mismatch";
    }
    return "?";
}

Json report_to_json(const VerificationReport& report) {
    Json doc;
    doc["name"] = report.name;
    doc["claimed"] = Json{{"p", report.claimed_sig.p()}, {"q", report.claimed_sig.q()}};
    doc["ring"] = ring_name(report.ring);
    doc["matrix_dim"] = report.matrix_dim;
    doc["realized_squares"] = report.realized_squares;
    doc["anticommute_ok"] = report.anticommute_ok;
    doc["realized_matches_claimed"] = match_name(report.match);
    if (report.match == SignatureMatch::up_to_permutation)
        doc["permutation"] = report.permutation;
    doc["blade_image_rank"] = report.blade_image_rank;
    doc["ambient_real_dim"] = report.ambient_real_dim;
    doc["verdict"] = verdict_name(report.verdict);
    return doc;
}

std::string orientation_lines(int max_n) {
    std::string out;
    for (int n = 1; n <= max_n; ++n) {
        out += std::to_string(n);
        out += permutation_orientation(n) < 0 ? " -1" : " +1";
        out += '\n';
    }
    return out;
}

}  // namespace clifford
