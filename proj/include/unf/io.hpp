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

#pragma once

#include "unf/check_report.hpp"
#include "unf/jordan_chevalley.hpp"
#include "unf/matrix.hpp"
#include "unf/semisimple.hpp"
#include "unf/uniform.hpp"
#include "unf/young.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace unf {

// Malformed input bytes: bad JSON, wrong types, unparsable rationals.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally unusable matrices: ragged, non-square, empty, or failing a
// required property such as nilpotency.
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input wire format: {"matrix": [["1", "1/2"], ["0", "2"]]}. Entries are
/// rational strings; nothing is ever read as a float.
inline Mat parse_matrix_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("matrix"))
        throw ParseError("expected a JSON object with a \"matrix\" key");
    const auto& rows = doc["matrix"];
    if (!rows.is_array())
        throw ParseError("\"matrix\" must be an array of rows");
    if (rows.empty())
        throw ShapeError("matrix is empty");
    std::vector<std::vector<Rational>> parsed;
    std::size_t width = 0;
    for (const auto& row : rows) {
        if (!row.is_array())
            throw ParseError("each matrix row must be an array");
        if (parsed.empty()) {
            width = row.size();
            if (width == 0)
                throw ShapeError("matrix is empty");
        } else if (row.size() != width) {
            throw ShapeError("ragged matrix rows");
        }
        std::vector<Rational> out_row;
        for (const auto& entry : row) {
            if (!entry.is_string())
                throw ParseError("matrix entries must be rational strings");
            try {
                out_row.push_back(parse_rational(entry.get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        parsed.push_back(std::move(out_row));
    }
    if (parsed.size() != width)
        throw ShapeError("matrix must be square");
    return Mat::from_rows(std::move(parsed));
}

inline nlohmann::ordered_json matrix_json(const Mat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// The input wire format for a matrix, for round trips and corpus files.
inline std::string matrix_file_json(const Mat& m) {
    nlohmann::ordered_json doc;
    doc["matrix"] = matrix_json(m);
    return doc.dump(2) + "\n";
}

/// Polynomials serialize as ascending coefficient strings, matching the
/// internal representation. [] is the zero polynomial.
inline nlohmann::ordered_json poly_json(const Poly& p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (int i = 0; i <= p.degree(); ++i)
        coeffs.push_back(to_string(p.coeff(i)));
    return coeffs;
}

inline nlohmann::ordered_json vector_json(const Mat& column) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (int i = 0; i < column.rows(); ++i)
        out.push_back(to_string(column(i, 0)));
    return out;
}

inline nlohmann::ordered_json young_json(const YoungDiagram& d) {
    nlohmann::ordered_json out;
    out["row_counts"] = d.row_counts;
    nlohmann::ordered_json chains = nlohmann::ordered_json::array();
    for (const JordanChain& chain : d.chains) {
        nlohmann::ordered_json vectors = nlohmann::ordered_json::array();
        for (const Mat& v : chain.vectors)
            vectors.push_back(vector_json(v));
        chains.push_back(std::move(vectors));
    }
    out["chains"] = std::move(chains);
    return out;
}

/// Descending-degree display form, e.g. "λ^2 - 2λ + 1".
inline std::string poly_pretty(const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg)
                out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        const Rational mag = neg ? Rational(-c) : c;
        if (i == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1)
                out += to_string(mag);
            out += "λ";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

enum class Subcommand {
    semisimple,
    jc,
    nilpotent,
    uniform,
    analyze,
};

struct AnalysisOptions {
    bool verify = false; // checks always run; kept so callers can insist
    bool input_is_nilpotent = false;
};

// Aggregated pipeline output. Stages that did not run stay unset and are
// omitted from serialization. `verified` is the conjunction of every exact
// check applicable to the stages that ran; the named results live in
// `checks`.
struct AnalysisReport {
    int input_dim = 0;
    std::optional<Poly> chi;
    std::optional<SquarefreeData> squarefree;
    std::optional<bool> semisimple;
    std::optional<JCDecomposition> dec;
    std::optional<YoungDiagram> young_ker;
    std::optional<YoungDiagram> young_im;
    std::optional<UniformNormalForm> normal_form;
    std::optional<bool> verified;
    CheckReport checks;
};

namespace detail {

inline void check_young(CheckReport& rep, const YoungDiagram& diagram, const Mat& nilpotent,
                        const std::string& label) {
    if (diagram.ambient_dim == 0) {
        rep.add("young rows match filtration" + label, diagram.chains.empty());
        return;
    }
    const KernelFiltration filt = kernel_filtration(nilpotent);
    rep.add("young rows match filtration" + label, diagram.row_counts == filt.row_counts);
    const auto [basis, structural] = jordan_block_matrix(diagram);
    rep.add("young chains form a basis" + label,
            basis.cols() == diagram.ambient_dim && inverse(basis).has_value());
    if (basis.cols() == diagram.ambient_dim) {
        const auto inv = inverse(basis);
        rep.add("young basis exhibits the block form" + label,
                inv && *inv * nilpotent * basis == structural);
    }
}

} // namespace detail

/// Run the pipeline through the requested stage. Verification checks for
/// every completed stage always run; a false conjunction is reported, never
/// thrown.
inline AnalysisReport run_analysis(const Mat& m, Subcommand cmd, const AnalysisOptions& opts = {}) {
    if (!m.is_square() || m.rows() == 0)
        throw ShapeError("analysis needs a nonempty square matrix");
    AnalysisReport rep;
    rep.input_dim = m.rows();
    rep.chi = char_poly(m);

    if (cmd == Subcommand::nilpotent && opts.input_is_nilpotent) {
        Mat power = Mat::identity(m.rows());
        for (int i = 0; i < m.rows(); ++i)
            power = power * m;
        if (!power.is_zero())
            throw ShapeError("--input-is-nilpotent given but the matrix is not nilpotent");
        // A nilpotent map is its own nilpotent part: ker S is everything.
        rep.young_ker = young_basis(m);
        rep.young_im = YoungDiagram{};
        detail::check_young(rep.checks, *rep.young_ker, m, " [ker S]");
        rep.verified = rep.checks.ok();
        return rep;
    }

    const SemisimpleResult ss = is_semisimple(m);
    rep.squarefree = ss.squarefree;
    rep.semisimple = ss.flag;
    if (cmd == Subcommand::semisimple) {
        rep.verified = rep.checks.ok();
        return rep;
    }

    rep.dec = jc_iterate(m);
    rep.checks.merge(jc_verify(m, *rep.dec));
    rep.checks.add("semisimple flag matches N=0", ss.flag == rep.dec->n.is_zero());
    if (cmd == Subcommand::jc) {
        rep.verified = rep.checks.ok();
        return rep;
    }

    auto [ker_s, im_s] = split_ker_im(rep.dec->s);
    {
        const Mat n_ker = ker_s.dim() > 0 ? restrict_to(rep.dec->n, ker_s) : Mat(0, 0);
        const Mat n_im = im_s.dim() > 0 ? restrict_to(rep.dec->n, im_s) : Mat(0, 0);
        const YoungDiagram local_ker = young_basis(n_ker);
        const YoungDiagram local_im = young_basis(n_im);
        detail::check_young(rep.checks, local_ker, n_ker, " [ker S]");
        detail::check_young(rep.checks, local_im, n_im, " [im S]");
        rep.young_ker = lift_diagram(local_ker, ker_s);
        rep.young_im = lift_diagram(local_im, im_s);
    }
    if (cmd == Subcommand::nilpotent) {
        rep.verified = rep.checks.ok();
        return rep;
    }

    rep.normal_form = assemble(m, *rep.dec);
    rep.checks.merge(verify_uniform(*rep.normal_form, m, *rep.dec));
    rep.verified = rep.checks.ok();
    return rep;
}

/// Stable-order JSON serialization; absent stages are omitted.
inline nlohmann::ordered_json report_json(const AnalysisReport& r) {
    nlohmann::ordered_json out;
    out["input_dim"] = r.input_dim;
    if (r.chi)
        out["char_poly"] = poly_json(*r.chi);
    if (r.squarefree) {
        out["d"] = poly_json(r.squarefree->d);
        out["p"] = poly_json(r.squarefree->p);
        out["M"] = r.squarefree->big_m;
    }
    if (r.semisimple)
        out["semisimple"] = *r.semisimple;
    if (r.dec) {
        out["S"] = matrix_json(r.dec->s);
        out["N"] = matrix_json(r.dec->n);
        out["s_polynomial"] = poly_json(r.dec->s_polynomial);
    }
    if (r.young_ker || r.young_im) {
        nlohmann::ordered_json young;
        young["ker_S"] = young_json(r.young_ker ? *r.young_ker : YoungDiagram{});
        young["im_S"] = young_json(r.young_im ? *r.young_im : YoungDiagram{});
        out["young"] = std::move(young);
    }
    if (r.normal_form) {
        out["P"] = matrix_json(r.normal_form->p_basis);
        out["B"] = matrix_json(r.normal_form->b);
        nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
        for (const UniformBlock& blk : r.normal_form->blocks) {
            nlohmann::ordered_json b;
            b["part"] = to_string(blk.part);
            b["m"] = blk.chain_length;
            b["q"] = blk.q;
            nlohmann::ordered_json polys = nlohmann::ordered_json::array();
            for (const Poly& mu : blk.companion_polys)
                polys.push_back(poly_json(mu));
            b["companion_polys"] = std::move(polys);
            blocks.push_back(std::move(b));
        }
        out["blocks"] = std::move(blocks);
        nlohmann::ordered_json factors = nlohmann::ordered_json::array();
        for (const auto& [poly, exponent] : r.normal_form->factorization) {
            nlohmann::ordered_json f;
            f["poly"] = poly_json(poly);
            f["exponent"] = exponent;
            factors.push_back(std::move(f));
        }
        out["factorization"] = std::move(factors);
    }
    if (r.verified)
        out["verified"] = *r.verified;
    return out;
}

namespace detail {

inline void matrix_pretty(std::string& out, const Mat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        out += " ";
        for (int j = 0; j < m.cols(); ++j) {
            out += " " + to_string(m(i, j));
        }
        out += "\n";
    }
}

inline void young_pretty(std::string& out, const YoungDiagram& d, const char* label) {
    out += std::string("young diagram (") + label + "): row counts [";
    for (std::size_t i = 0; i < d.row_counts.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(d.row_counts[i]);
    }
    out += "], chain lengths [";
    for (std::size_t i = 0; i < d.chains.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(d.chains[i].length);
    }
    out += "]\n";
}

} // namespace detail

/// Human-readable rendering with polynomials in descending-degree notation.
inline std::string report_pretty(const AnalysisReport& r) {
    std::string out;
    out += "input dim: " + std::to_string(r.input_dim) + "\n";
    if (r.chi)
        out += "char poly: " + poly_pretty(*r.chi) + "\n";
    if (r.squarefree) {
        out += "d = gcd(chi, chi'): " + poly_pretty(r.squarefree->d) + "\n";
        out += "p = chi / d: " + poly_pretty(r.squarefree->p) + "\n";
        out += "M: " + std::to_string(r.squarefree->big_m) + "\n";
    }
    if (r.semisimple)
        out += std::string("semisimple: ") + (*r.semisimple ? "true" : "false") + "\n";
    if (r.dec) {
        out += "S:\n";
        detail::matrix_pretty(out, r.dec->s);
        out += "N:\n";
        detail::matrix_pretty(out, r.dec->n);
        out += "s polynomial: " + poly_pretty(r.dec->s_polynomial) + "\n";
    }
    if (r.young_ker)
        detail::young_pretty(out, *r.young_ker, "ker S");
    if (r.young_im)
        detail::young_pretty(out, *r.young_im, "im S");
    if (r.normal_form) {
        out += "P:\n";
        detail::matrix_pretty(out, r.normal_form->p_basis);
        out += "B:\n";
        detail::matrix_pretty(out, r.normal_form->b);
        out += "blocks:\n";
        for (std::size_t i = 0; i < r.normal_form->blocks.size(); ++i) {
            const UniformBlock& blk = r.normal_form->blocks[i];
            out += "  block " + std::to_string(i) + ": part=" + to_string(blk.part) +
                   " m=" + std::to_string(blk.chain_length) + " q=" + std::to_string(blk.q) +
                   " companion:";
            for (const Poly& mu : blk.companion_polys)
                out += " (" + poly_pretty(mu) + ")";
            out += "\n";
        }
        out += "factorization:";
        for (const auto& [poly, exponent] : r.normal_form->factorization)
            out += " (" + poly_pretty(poly) + ")^" + std::to_string(exponent);
        out += "\n";
    }
    if (r.verified)
        out += std::string("verified: ") + (*r.verified ? "true" : "false") + "\n";
    return out;
}

} // namespace unf
