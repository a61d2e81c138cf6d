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

#include <unf/corpus.hpp>
#include <unf/io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string numbered(const std::string& prefix, int i) {
    std::ostringstream name;
    name << prefix << "_" << std::setw(3) << std::setfill('0') << i << ".json";
    return name.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unf-corpus: deterministic test-matrix generator. The same seed always\n"
                 "produces byte-identical files. Kinds: integer (dense, entries in a range),\n"
                 "nilpotent (conjugated shift blocks), oracle (pairs a/s with a known\n"
                 "semisimple part)."};

    unsigned seed = 1;
    int count = 10;
    int max_dim = 6;
    std::string kind = "integer";
    std::string out_dir = ".";
    app.add_option("--seed", seed, "Generator seed");
    app.add_option("--count", count, "Number of matrices")->check(CLI::PositiveNumber);
    app.add_option("--max-dim", max_dim, "Largest matrix dimension")->check(CLI::PositiveNumber);
    app.add_option("--kind", kind, "integer | nilpotent | oracle")
        ->check(CLI::IsMember({"integer", "nilpotent", "oracle"}));
    app.add_option("--out", out_dir, "Output directory (created if missing)");

    CLI11_PARSE(app, argc, argv);

    try {
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        unf::CorpusRng rng(seed);
        for (int i = 0; i < count; ++i) {
            const int n = rng.range(1, max_dim);
            if (kind == "integer") {
                write_file(dir / numbered("matrix", i),
                           unf::matrix_file_json(unf::random_integer_matrix(rng, n, -3, 3)));
            } else if (kind == "nilpotent") {
                write_file(dir / numbered("nilpotent", i),
                           unf::matrix_file_json(unf::random_nilpotent(rng, n)));
            } else {
                const unf::OracleCase oc = unf::random_jc_oracle(rng, n);
                write_file(dir / numbered("oracle_a", i), unf::matrix_file_json(oc.a));
                write_file(dir / numbered("oracle_s", i), unf::matrix_file_json(oc.s));
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
