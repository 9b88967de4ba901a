// Command-line surface of the Clifford kernel: multiplication tables,
// multivector products, algebra classification, representation verification
// and basis-orientation listings.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clifford/serialize.hpp"

namespace {

using clifford::Json;

constexpr int kTableCap = 8;
constexpr int kOrientationCap = 24;

clifford::OrderingKind parse_order(const std::string& s) {
    if (s == "binary") return clifford::OrderingKind::binary;
    if (s == "grade-lex") return clifford::OrderingKind::grade_lex;
    throw std::invalid_argument("order must be \"grade-lex\" or \"binary\"");
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json doc = Json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw std::invalid_argument("invalid JSON in file: " + path);
    return doc;
}

int run_table(int p, int q, const std::string& order, const std::string& format) {
    const clifford::Signature sig(p, q);
    if (sig.dimension() > kTableCap)
        throw std::invalid_argument("table: p+q must be at most 8");
    const auto table = clifford::product_table(sig, parse_order(order), kTableCap);
    if (format == "csv")
        std::cout << clifford::product_table_csv(table);
    else if (format == "json")
        std::cout << clifford::product_table_json(table).dump() << "\n";
    else
        throw std::invalid_argument("format must be \"csv\" or \"json\"");
    return 0;
}

int run_mul(int p, int q, const std::string& lhs_path, const std::string& rhs_path,
            const std::string& format) {
    if (format != "json") throw std::invalid_argument("format must be \"json\"");
    const clifford::Multivector lhs = clifford::multivector_from_json(load_json_file(lhs_path));
    const clifford::Multivector rhs = clifford::multivector_from_json(load_json_file(rhs_path));
    const clifford::Signature sig(p, q);
    if (!(lhs.signature() == sig) || !(rhs.signature() == sig))
        throw std::invalid_argument("mul: operand signature does not match --p/--q");
    const clifford::Multivector product = clifford::geometric_product(lhs, rhs);
    std::cout << clifford::multivector_to_json(product).dump() << "\n";
    return 0;
}

int run_classify(bool have_pq, int p, int q, bool have_sweep, int sweep) {
    if (have_pq == have_sweep)
        throw std::invalid_argument("classify: give either --p/--q or --sweep");
    if (have_pq) {
        std::cout << clifford::descriptor_to_json(clifford::classify(p, q)).dump() << "\n";
        return 0;
    }
    if (sweep < 1) throw std::invalid_argument("classify: --sweep must be at least 1");
    Json out = Json::array();
    for (int n = 1; n <= sweep; ++n) {
        for (int pp = 0; pp <= n; ++pp) {
            Json entry;
            entry["p"] = pp;
            entry["q"] = n - pp;
            entry.update(clifford::descriptor_to_json(clifford::classify(pp, n - pp)));
            out.push_back(std::move(entry));
        }
    }
    std::cout << out.dump() << "\n";
    return 0;
}

int run_verify(const std::string& rep_name, bool all) {
    if (all == !rep_name.empty())
        throw std::invalid_argument("verify: give either --rep or --all");
    std::vector<std::string> names;
    if (all)
        names = clifford::builtin_names();
    else
        names.push_back(rep_name);

    bool ok = true;
    Json reports = Json::array();
    for (const std::string& name : names) {
        const auto report = clifford::verify(clifford::builtin(name));  // throws on unknown
        if (report.verdict == clifford::Verdict::failure) ok = false;
        reports.push_back(clifford::report_to_json(report));
    }
    if (all)
        std::cout << reports.dump() << "\n";
    else
        std::cout << reports.front().dump() << "\n";
    return ok ? 0 : 1;
}

int run_orientation(int max_n) {
    if (max_n < 1 || max_n > kOrientationCap)
        throw std::invalid_argument("orientation: --max-n must be in [1,24]");
    std::cout << clifford::orientation_lines(max_n);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clifford algebra kernel"};
    app.require_subcommand(1);

    int p = 0, q = 0;
    std::string order = "grade-lex";
    std::string format = "csv";
    auto* table = app.add_subcommand("table", "emit the signed basis multiplication table");
    table->add_option("--p", p, "generators squaring to +1")->required();
    table->add_option("--q", q, "generators squaring to -1")->required();
    table->add_option("--order", order, "basis ordering: grade-lex|binary");
    table->add_option("--format", format, "output format: csv|json");

    int mp = 0, mq = 0;
    std::string lhs_path, rhs_path, mul_format = "json";
    auto* mul = app.add_subcommand("mul", "multiply two multivector JSON documents");
    mul->add_option("--p", mp, "generators squaring to +1")->required();
    mul->add_option("--q", mq, "generators squaring to -1")->required();
    mul->add_option("--lhs", lhs_path, "left operand file")->required();
    mul->add_option("--rhs", rhs_path, "right operand file")->required();
    mul->add_option("--format", mul_format, "output format: json");

    int cp = 0, cq = 0, sweep = 0;
    auto* classify = app.add_subcommand("classify", "isomorphism type of Cl(p,q)");
    auto* cp_opt = classify->add_option("--p", cp, "generators squaring to +1");
    auto* cq_opt = classify->add_option("--q", cq, "generators squaring to -1");
    auto* sweep_opt = classify->add_option("--sweep", sweep, "classify all splits with p+q <= N");
    cp_opt->needs(cq_opt);
    cq_opt->needs(cp_opt);

    std::string rep_name;
    bool verify_all = false;
    auto* verify = app.add_subcommand("verify", "verify a built-in representation");
    verify->add_option("--rep", rep_name, "representation name");
    verify->add_flag("--all", verify_all, "verify every built-in representation");

    int max_n = 0;
    auto* orientation = app.add_subcommand("orientation", "orientation of the grade sort per n");
    orientation->add_option("--max-n", max_n, "largest n to report (at most 24)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return run_table(p, q, order, format);
        if (mul->parsed()) return run_mul(mp, mq, lhs_path, rhs_path, mul_format);
        if (classify->parsed())
            return run_classify(cp_opt->count() > 0, cp, cq, sweep_opt->count() > 0, sweep);
        if (verify->parsed()) return run_verify(rep_name, verify_all);
        if (orientation->parsed()) return run_orientation(max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
