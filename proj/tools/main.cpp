// Command-line front end: reads a JSON instance description, runs one
// analysis, writes a deterministic JSON report.
//
// Exit codes: 0 all verifications passed, 1 a verification failed,
// 2 input error (bad schema, ring/analysis mismatch, cap exceeded).

#include "cent/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw cent::Error("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& body) {
    if (path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path);
    if (!out) throw cent::Error("cannot open output file " + path);
    out << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analyses of centralizer matrix algebras"};
    app.require_subcommand(1);

    std::string input = "-", output = "-";
    cent::Options opts;
    std::string command;
    for (const char* name : {"basis", "cell", "frobenius", "structure", "oracle"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", input, "instance JSON (file or - for stdin)");
        sub->add_option("--output", output, "report destination (file or - for stdout)");
        sub->add_option("--oracle-cap", opts.oracle_cap, "largest n for brute-force oracles");
        sub->add_flag("--no-oracle", opts.no_oracle, "skip oracle cross-checks");
        sub->add_option("--seed", opts.seed, "seed for randomized property sampling");
        sub->callback([&command, name] { command = name; });
    }
    CLI11_PARSE(app, argc, argv);

    try {
        nlohmann::json parsed;
        try {
            parsed = nlohmann::json::parse(read_input(input));
        } catch (const nlohmann::json::exception& e) {
            throw cent::Error(std::string("invalid JSON: ") + e.what());
        }
        cent::InstanceSpec spec = cent::parse_instance(parsed);
        cent::CommandResult result = cent::run_command(command, spec, opts);
        write_output(output, result.report.dump(2) + "\n");
        return result.exit_code;
    } catch (const cent::Error& e) {
        nlohmann::ordered_json err{{"error", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
