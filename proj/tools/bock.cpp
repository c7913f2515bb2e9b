// bock: command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 semantic rejection
// (invalid profile, unwitnessed tower, failed suite).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "bock/catalog.hpp"
#include "bock/dimension.hpp"
#include "bock/error.hpp"
#include "bock/io.hpp"
#include "bock/nilpotent.hpp"
#include "bock/suites.hpp"

namespace {

using namespace bock;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kRejected = 2;

int exit_code_for(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::Unwitnessed:
    case ErrorKind::NotNilpotent:
        return kRejected;
    default:
        return kUsage;
    }
}

NilpotentGroupDesc load_group(const std::string& file, const std::string& catalog)
{
    if (!catalog.empty())
        return resolve(catalog).value;
    return group_from_json(load_json(file));
}

int cmd_sigma(const std::string& file, const std::string& catalog, bool as_json)
{
    const BocksteinBasis b = sigma_nilpotent(load_group(file, catalog));
    if (as_json)
        std::cout << to_json(b).dump(2) << '\n';
    else
        std::cout << b.to_string() << '\n';
    return kOk;
}

bool report_violations(const DimensionProfile& d, bool as_json, std::ostream& os)
{
    const auto violations = validate_profile(d);
    if (as_json) {
        json arr = json::array();
        for (const auto& v : violations)
            arr.push_back(to_json(v));
        os << json{{"valid", violations.empty()}, {"violations", arr}}.dump(2) << '\n';
    } else if (violations.empty()) {
        os << "valid\n";
    } else {
        for (const auto& v : violations)
            os << v.message << '\n';
    }
    return violations.empty();
}

int cmd_dim(const std::string& profile_file, const std::string& group_file,
            const std::string& catalog, bool le1)
{
    const DimensionProfile d = profile_from_json(load_json(profile_file));
    if (!validate_profile(d).empty()) {
        std::cerr << "invalid profile:\n";
        report_violations(d, false, std::cerr);
        return kRejected;
    }
    const NilpotentGroupDesc g = load_group(group_file, catalog);
    if (le1) {
        std::cout << (dim_nilpotent_le1(d, g) ? "true" : "false") << '\n';
        return kOk;
    }
    const AbelianGroup* a = g.abelian();
    if (!a)
        throw Error(ErrorKind::InvalidInput, "dim needs an Abelian group; use --le1 for nilpotent input");
    std::cout << dim_abelian(d, *a).to_string() << '\n';
    return kOk;
}

int cmd_validate(const std::string& profile_file, bool as_json)
{
    const DimensionProfile d = profile_from_json(load_json(profile_file));
    return report_violations(d, as_json, std::cout) ? kOk : kRejected;
}

std::string suite_names()
{
    std::string out;
    for (const auto& s : suite_list())
        out += "  " + std::string(s.name) + "  " + std::string(s.statement) + "\n";
    return out;
}

int cmd_verify(const std::string& suite, std::optional<std::size_t> trials, std::uint64_t seed,
               bool as_json)
{
    std::vector<SuiteInfo> selected;
    for (const auto& s : suite_list())
        if (suite == "all" || s.name == suite)
            selected.push_back(s);
    if (selected.empty()) {
        std::cerr << "unknown suite '" << suite << "'; available suites:\n" << suite_names();
        return kUsage;
    }

    bool all_passed = true;
    json reports = json::array();
    for (const auto& s : selected) {
        const SuiteResult r = run_suite(s.name, trials.value_or(s.default_trials), seed);
        all_passed = all_passed && r.passed();
        if (as_json)
            reports.push_back(to_json(r));
        else
            std::cout << format_text(r);
    }
    if (as_json)
        std::cout << (reports.size() == 1 ? reports.front() : reports).dump(2) << '\n';
    return all_passed ? kOk : kRejected;
}

int cmd_catalog()
{
    for (const auto& line : catalog_listing())
        std::cout << line << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bockstein bases and cohomological dimension of nilpotent groups"};
    app.require_subcommand(1);

    std::string file, catalog, profile, suite = "all";
    bool as_json = false, le1 = false;
    std::optional<std::size_t> trials;
    std::uint64_t seed = 1;

    auto* sigma = app.add_subcommand("sigma", "print the Bockstein basis of a group");
    sigma->add_option("file", file, "group JSON file");
    sigma->add_option("--catalog", catalog, "catalog term instead of a file");
    sigma->add_flag("--json", as_json, "machine-readable output");

    auto* dim = app.add_subcommand("dim", "cohomological dimension of a Bockstein space");
    dim->add_option("profile", profile, "dimension profile JSON file")->required();
    dim->add_option("group", file, "group JSON file");
    dim->add_option("--catalog", catalog, "catalog term instead of a group file");
    dim->add_flag("--le1", le1, "decide dim_G(X) <= 1 for nilpotent G");

    auto* validate = app.add_subcommand("validate-profile", "check a profile against R0-R4");
    validate->add_option("profile", profile, "dimension profile JSON file")->required();
    validate->add_flag("--json", as_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite, "suite name, or 'all'");
    verify->add_option("--trials", trials, "instances per suite (default: per suite)");
    verify->add_option("--seed", seed, "seed");
    verify->add_flag("--json", as_json, "machine-readable report");
    verify->footer("Suites:\n" + suite_names());

    auto* list = app.add_subcommand("catalog", "list catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    auto need_group = [&] {
        if (file.empty() == catalog.empty())
            throw Error(ErrorKind::InvalidInput, "give exactly one of a group file or --catalog");
    };

    try {
        if (*sigma) {
            need_group();
            return cmd_sigma(file, catalog, as_json);
        }
        if (*dim) {
            need_group();
            return cmd_dim(profile, file, catalog, le1);
        }
        if (*validate)
            return cmd_validate(profile, as_json);
        if (*verify)
            return cmd_verify(suite, trials, seed, as_json);
        if (*list)
            return cmd_catalog();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
