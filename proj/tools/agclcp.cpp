#include "agclcp/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

agclcp::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    agclcp::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void emit(const agclcp::Json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump(2) << "\n";
    else
        std::cout << agclcp::render_text(report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear complementary pairs of algebraic-geometry codes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    agclcp::Budgets budgets;
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--distance-budget", budgets.distance,
                   "Max q^k for exact distance enumeration");
    app.add_option("--equiv-budget", budgets.equiv,
                   "Max n!(q-1)^n for the equivalence witness search");

    std::string which = "all";
    CLI::App* examples = app.add_subcommand("examples", "Reproduce the worked constructions");
    examples->add_option("--which", which,
                         "line, elliptic-f4, elliptic-f8, scaled-f4, rs or all");

    std::string check_path;
    CLI::App* check = app.add_subcommand("check", "Run the LCP criteria on a pair spec");
    check->add_option("spec", check_path, "JSON spec file")->required();

    std::string params_path;
    CLI::App* params = app.add_subcommand("params", "Code parameters for a pair spec");
    params->add_option("spec", params_path, "JSON spec file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (examples->parsed()) {
            emit(agclcp::cmd_examples(which, budgets), format);
        } else if (check->parsed()) {
            emit(agclcp::cmd_check(load_json(check_path), budgets), format);
        } else if (params->parsed()) {
            emit(agclcp::cmd_params(load_json(params_path), budgets), format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
