#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pic27/checks.hpp"

int main(int argc, char** argv) {
    CLI::App app{"verify: exact checks for the 27-lines / W(E6) / Fermat-cubic computations"};

    std::vector<std::string> ids;
    bool json_out = false;
    bool list = false;
    pic27::Config config;

    app.add_option("checks", ids, "check ids to run, or 'all'");
    app.add_flag("--json", json_out, "emit the structured JSON report on stdout");
    app.add_flag("--list", list, "print the check registry and exit");
    app.add_option("--seed", config.seed, "seed for randomized property checks")
        ->default_val(config.seed);
    app.add_option("--samples", config.samples, "sample count for randomized property checks")
        ->default_val(config.samples);
    app.add_option("--has-omega", config.has_omega,
                   "whether the base field contains a nontrivial cube root of unity")
        ->default_val(config.has_omega);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems exit 2; --help stays 0
    }

    if (list) {
        for (const auto& info : pic27::check_registry())
            std::cout << info.id << "\t" << info.anchor << "\n";
        return 0;
    }

    if (ids.empty()) {
        std::cerr << "usage: verify all | verify <check-id> [<check-id> ...]\n"
                  << "       verify --list\n";
        return 2;
    }
    if (ids.size() == 1 && ids[0] == "all") ids = pic27::all_check_ids();

    pic27::Report report;
    try {
        report = pic27::run(ids, config);
    } catch (const pic27::unknown_check_error& e) {
        std::cerr << "error: " << e.what() << " (use --list for the registry)\n";
        return 2;
    }

    if (json_out)
        std::cout << pic27::to_json(report).dump(2) << "\n";
    else
        std::cout << pic27::render_text(report);
    return report.overall == "pass" ? 0 : 1;
}
