/*
   Copyright 2026 The unf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <unf/unf.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& input_path, const std::string& output_path, const std::string& format,
        unf::Subcommand cmd, const unf::AnalysisOptions& opts) {
    std::ifstream in(input_path);
    if (!in) {
        std::cerr << "error: cannot open " << input_path << "\n";
        return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const unf::Mat m = unf::parse_matrix_json(buffer.str());
    const unf::AnalysisReport report = unf::run_analysis(m, cmd, opts);
    const std::string text = format == "json" ? unf::report_json(report).dump(2) + "\n"
                                              : unf::report_pretty(report);
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) {
            std::cerr << "error: cannot write " << output_path << "\n";
            return 1;
        }
        out << text;
    }
    if (report.verified && !*report.verified)
        return 3;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unf: exact Jordan decomposition and uniform normal form of rational matrices.\n"
                 "Polynomials are serialized as ascending coefficient arrays in JSON and printed\n"
                 "in descending-degree notation in pretty mode. Random corpus files are produced\n"
                 "by the separate unf-corpus tool."};
    app.fallthrough();
    app.require_subcommand(1);

    std::string input_path;
    std::string output_path;
    std::string format = "json";
    unf::AnalysisOptions opts;
    app.add_option("--input", input_path, "Input file: {\"matrix\": [[\"1\",\"1/2\"],...]}")
        ->required();
    app.add_option("--output", output_path, "Write the report to this path instead of stdout");
    app.add_option("--format", format, "Output format: json | pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    app.add_flag("--verify", opts.verify,
                 "Re-run every exact identity check (checks always run; flag kept for scripts)");

    CLI::App* semisimple =
        app.add_subcommand("semisimple", "Square-free certificate and semisimplicity flag");
    CLI::App* jc = app.add_subcommand("jc", "Decomposition A = S + N with S semisimple, N nilpotent");
    CLI::App* nilpotent =
        app.add_subcommand("nilpotent", "Young diagram of the nilpotent part, split by ker/im S");
    nilpotent->add_flag("--input-is-nilpotent", opts.input_is_nilpotent,
                        "Skip the decomposition: the input itself must be nilpotent");
    CLI::App* uniform = app.add_subcommand("uniform", "Uniform normal form P, B and blocks");
    CLI::App* analyze = app.add_subcommand("analyze", "Run every stage and report everything");

    CLI11_PARSE(app, argc, argv);

    unf::Subcommand cmd = unf::Subcommand::analyze;
    if (semisimple->parsed())
        cmd = unf::Subcommand::semisimple;
    else if (jc->parsed())
        cmd = unf::Subcommand::jc;
    else if (nilpotent->parsed())
        cmd = unf::Subcommand::nilpotent;
    else if (uniform->parsed())
        cmd = unf::Subcommand::uniform;
    else if (analyze->parsed())
        cmd = unf::Subcommand::analyze;

    try {
        return run(input_path, output_path, format, cmd, opts);
    } catch (const unf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unf::ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
