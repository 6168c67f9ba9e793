#include "tt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tt/checker.hpp"
#include "tt/elaborate.hpp"
#include "tt/nbe.hpp"
#include "tt/oracle.hpp"
#include "tt/printer.hpp"
#include "tt/properties.hpp"
#include "tt/testkit.hpp"

namespace tt {

namespace {

using nlohmann::json;

struct Outcome {
    int code = kExitOk;
    std::string status = "ok";
    std::string output;
    json error = nullptr;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t fuel_from_env() {
    const char* s = std::getenv("TT_FUEL");
    if (!s || !*s) return kDefaultFuel;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0' || v == 0) return kDefaultFuel;
    return static_cast<std::size_t>(v);
}

json error_record(std::string_view code, std::optional<SourcePos> pos, const std::string& message) {
    json e = {{"code", code}, {"message", message}, {"line", nullptr}, {"col", nullptr}};
    if (pos) {
        e["line"] = pos->line;
        e["col"] = pos->col;
    }
    return e;
}

Outcome cmd_check(const std::string& file) {
    const Signature sig = load_signature(read_file(file));
    return {kExitOk, "ok", std::to_string(sig.size()) + " declarations checked", nullptr};
}

Outcome cmd_normalize(const std::string& file, const std::string& expr,
                      const std::optional<std::string>& type, bool oracle) {
    const Signature sig = load_signature(read_file(file));
    const auto [t, ty] = elaborate_closed(sig, expr, type);
    const NfTm nf = normalize_tm(sig, {}, ty, t);
    Outcome o{kExitOk, "ok", print_nf(nf), nullptr};
    if (oracle) {
        const Term r = rw_normalize(sig, {}, ty, t, fuel_from_env());
        if (!alpha_eq(r, erase(nf))) {
            o.code = kExitMismatch;
            o.status = "disagreement";
            o.error = error_record("OracleDisagreement", std::nullopt,
                                   "oracle normal form " + print_term(r) + " differs");
        }
    }
    return o;
}

Outcome cmd_equal(const std::string& file, const std::vector<std::string>& exprs,
                  const std::optional<std::string>& type) {
    const Signature sig = load_signature(read_file(file));
    const auto [t, ty] = elaborate_closed(sig, exprs[0], type);
    const Term u = elaborate_expr(sig, parse_expr(exprs[1]));
    check(sig, {}, u, ty);
    if (conv_tm(sig, {}, ty, t, u)) return {kExitOk, "equal", "equal", nullptr};
    return {kExitMismatch, "not_equal", "not equal", nullptr};
}

Outcome cmd_fuzz(const std::string& file, std::size_t count, std::uint64_t seed, std::size_t size,
                 std::ostream& log, bool quiet) {
    const Signature sig = load_signature(read_file(file));
    const std::size_t fuel = fuel_from_env();
    std::size_t failures = 0;
    std::size_t stuck = 0;
    json first_failure = nullptr;
    auto record = [&](const std::optional<testkit::Failure>& f) {
        if (!f) return;
        ++failures;
        if (!quiet) log << "FAIL " << f->property << ": " << f->detail << "\n";
        if (first_failure.is_null())
            first_failure = error_record("PropertyFailure", std::nullopt, f->property + ": " + f->detail);
    };
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = seed + i;
        try {
            record(testkit::normalization_case(sig, testkit::gen_case(sig, s, size), fuel));
            record(testkit::renaming_case(sig, testkit::gen_renaming_case(sig, s, size)));
        } catch (const testkit::GenerationStuck&) {
            ++stuck;
        } catch (const FuelExhausted& e) {
            record(testkit::Failure{"fuel", e.what()});
        }
    }
    std::ostringstream summary;
    summary << count << " cases, " << failures << " failures, " << stuck << " skipped";
    if (failures == 0) return {kExitOk, "ok", summary.str(), nullptr};
    return {kExitMismatch, "property_failure", summary.str(), first_failure};
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"tt: type theory kernel with normalization by evaluation"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a JSON result record");

    std::string file;
    std::vector<std::string> exprs;
    std::optional<std::string> type;
    bool oracle = false;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    std::size_t size = 12;

    auto* check_cmd = app.add_subcommand("check", "Check every declaration of FILE");
    auto* norm_cmd = app.add_subcommand("normalize", "Print the normal form of an expression");
    auto* equal_cmd = app.add_subcommand("equal", "Decide definitional equality of two expressions");
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Run the generated property suites");
    for (auto* sub : {check_cmd, norm_cmd, equal_cmd, fuzz_cmd}) {
        sub->add_option("FILE", file, "Declaration file")->required();
        sub->fallthrough();
    }
    norm_cmd->add_option("-e,--expr", exprs, "Expression")->required()->expected(1);
    norm_cmd->add_option("-t,--type", type, "Type to check the expression at");
    norm_cmd->add_flag("--oracle", oracle, "Cross-check against the rewriting oracle");
    equal_cmd->add_option("-e,--expr", exprs, "Expressions")->required()->expected(2);
    equal_cmd->add_option("-t,--type", type, "Type of both expressions");
    fuzz_cmd->add_option("--count", count, "Number of cases");
    fuzz_cmd->add_option("--seed", seed, "First seed");
    fuzz_cmd->add_option("--size", size, "Maximum term size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitParseError;
    }

    Outcome o;
    try {
        if (*check_cmd) o = cmd_check(file);
        else if (*norm_cmd) o = cmd_normalize(file, exprs.front(), type, oracle);
        else if (*equal_cmd) o = cmd_equal(file, exprs, type);
        else o = cmd_fuzz(file, count, seed, size, err, as_json);
    } catch (const ParseError& e) {
        o = {kExitParseError, "parse_error", "", error_record("ParseError", e.pos(), e.what())};
    } catch (const TypeError& e) {
        std::optional<SourcePos> pos;
        if (e.span()) pos = e.span()->start;
        o = {kExitTypeError, "type_error", "", error_record(error_code_name(e.code()), pos, e.what())};
    } catch (const IoError& e) {
        o = {kExitParseError, "io_error", "", error_record("IoError", std::nullopt, e.what())};
    } catch (const FuelExhausted& e) {
        o = {kExitMismatch, "fuel_exhausted", "", error_record("FuelExhausted", std::nullopt, e.what())};
    }

    if (as_json) {
        out << json{{"status", o.status}, {"output", o.output}, {"error", o.error}}.dump() << "\n";
        return o.code;
    }
    if (!o.output.empty()) out << o.output << "\n";
    if (!o.error.is_null()) {
        const json& e = o.error;
        err << "error";
        if (!e["line"].is_null()) err << " at " << e["line"].get<std::size_t>() << ":" << e["col"].get<std::size_t>();
        err << " [" << e["code"].get<std::string>() << "]: " << e["message"].get<std::string>() << "\n";
    }
    return o.code;
}

} // namespace tt
