#pragma once

// Serialization: JSON payloads (ordered keys), aligned text tables and LaTeX
// matrices.  Scalars are always strings in the parse_scalar grammar.

#include <algorithm>
#include <cstddef>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slq/algebra.hpp"
#include "slq/braid.hpp"
#include "slq/corep.hpp"
#include "slq/cyclo.hpp"
#include "slq/decompose.hpp"
#include "slq/hopf.hpp"
#include "slq/linalg.hpp"
#include "slq/verify.hpp"

namespace slq::io {

using json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline json document(const char* kind) {
    json j;
    j["schema"] = schema_version;
    j["kind"] = kind;
    return j;
}

inline json monomial_json(const Monomial& m) { return json{{"t", m.t}, {"j", m.j}, {"k", m.k}}; }

inline json element_json(const Element& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back(json{{"monomial", monomial_json(m)}, {"coeff", c.to_string()}});
    return terms;
}

template <std::size_t N>
json tensor_json(const Tensor<N>& x) {
    json terms = json::array();
    for (const auto& [key, c] : x.terms()) {
        json legs = json::array();
        for (const auto& m : key)
            legs.push_back(monomial_json(m));
        terms.push_back(json{{"legs", legs}, {"coeff", c.to_string()}});
    }
    return terms;
}

inline json matrix_json(const ScalarMatrix& m, bool half_powers = false) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(half_powers ? to_half_power_string(m(i, j)) : m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json element_matrix_json(const ElementMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json corep_json(const Corep& C) {
    return json{{"name", C.name},
                {"mode", C.mode.name()},
                {"dim", C.dim()},
                {"basis", C.labels},
                {"rho", element_matrix_json(C.rho)}};
}

inline json tree_json(const DecompositionTree& t) {
    using K = DecompositionTree::Kind;
    json j;
    switch (t.kind) {
    case K::irreducible:
        j["kind"] = "irreducible";
        j["label"] = t.label;
        j["n"] = t.n;
        j["m"] = t.m;
        j["dim"] = t.dim;
        break;
    case K::direct_sum: {
        j["kind"] = "direct_sum";
        j["dim"] = t.dim;
        json parts = json::array();
        for (const auto& c : t.children)
            parts.push_back(tree_json(c));
        j["summands"] = std::move(parts);
        break;
    }
    case K::extension:
        j["kind"] = "extension";
        j["dim"] = t.dim;
        j["sub"] = tree_json(t.children[0]);
        j["quotient"] = tree_json(t.children[1]);
        break;
    }
    return j;
}

inline json braiding_json(const BraidingMatrix& b) {
    return json{{"left", b.left},
                {"right", b.right},
                {"rows", b.row_labels},
                {"cols", b.col_labels},
                {"matrix", matrix_json(b.matrix, true)}};
}

inline json claim_json(const Claim& c) {
    return json{{"id", c.id},
                {"criterion", c.criterion},
                {"anchor", c.anchor},
                {"status", c.pass ? "pass" : "fail"},
                {"witness", c.witness}};
}

inline json report_json(const VerificationReport& r) {
    json j = document("report");
    j["suite"] = r.suite;
    j["ok"] = r.ok();
    json claims = json::array();
    for (const auto& c : r.claims)
        claims.push_back(claim_json(c));
    j["claims"] = std::move(claims);
    return j;
}

// ---------------------------------------------------------------------------
// Text

/// Right-padded columns; display width counts code points, not bytes.
inline std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
        return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
    }));
}

inline std::string aligned_table(const std::vector<std::string>& row_labels,
                                 const std::vector<std::vector<std::string>>& cells) {
    std::size_t label_w = 0;
    for (const auto& l : row_labels)
        label_w = std::max(label_w, display_width(l));
    std::vector<std::size_t> widths;
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (widths.size() <= j)
                widths.push_back(0);
            widths[j] = std::max(widths[j], display_width(row[j]));
        }
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!row_labels.empty()) {
            const std::string& l = row_labels[i];
            os << l << std::string(label_w - display_width(l), ' ') << " | ";
        }
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            if (j)
                os << "  ";
            os << cells[i][j];
            if (j + 1 < cells[i].size())
                os << std::string(widths[j] - display_width(cells[i][j]), ' ');
        }
        os << '\n';
    }
    return os.str();
}

inline std::vector<std::vector<std::string>> scalar_cells(const ScalarMatrix& m, bool half_powers) {
    std::vector<std::vector<std::string>> cells(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            cells[i].push_back(half_powers ? to_half_power_string(m(i, j)) : m(i, j).to_string());
    return cells;
}

inline std::string braiding_text(const BraidingMatrix& b) {
    std::string out = "Ψ(" + b.left + " ⊗ " + b.right + "), columns: ";
    for (std::size_t j = 0; j < b.col_labels.size(); ++j)
        out += (j ? ", " : "") + b.col_labels[j];
    return out + "\n" + aligned_table(b.row_labels, scalar_cells(b.matrix, true));
}

inline std::string corep_text(const Corep& C) {
    std::vector<std::vector<std::string>> cells(C.dim());
    for (std::size_t i = 0; i < C.dim(); ++i)
        for (std::size_t j = 0; j < C.dim(); ++j)
            cells[i].push_back(to_string(C.rho(i, j)));
    return C.name + " (" + C.mode.name() + "), basis " + [&] {
        std::string s;
        for (std::size_t i = 0; i < C.labels.size(); ++i)
            s += (i ? ", " : "") + C.labels[i];
        return s;
    }() + "\n" + aligned_table(C.labels, cells);
}

inline std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& c : r.claims) {
        os << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.anchor << '\n';
        for (const auto& w : c.witness)
            os << "     " << w << '\n';
    }
    const auto failed = std::count_if(r.claims.begin(), r.claims.end(), [](const Claim& c) { return !c.pass; });
    os << r.suite << ": " << r.claims.size() - static_cast<std::size_t>(failed) << "/" << r.claims.size()
       << " claims pass\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// LaTeX, in the \pmatrix{ … \cr … } layout

inline std::string latex_text(std::string s) {
    s = std::regex_replace(s, std::regex(R"(q\^\(([^)]*)\))"), "q^{$1}");
    s = std::regex_replace(s, std::regex(R"(q\^(-?[0-9]+))"), "q^{$1}");
    s = std::regex_replace(s, std::regex(R"(\((-?[0-9]+)/([0-9]+)\))"), "\\tfrac{$1}{$2}");
    s = std::regex_replace(s, std::regex(" ⊗ "), "{\\otimes} ");
    s = std::regex_replace(s, std::regex("⊗"), "{\\otimes}");
    return s;
}

inline std::string latex_column(const std::vector<std::string>& labels) {
    std::string out = "\\pmatrix{\n";
    for (const auto& l : labels)
        out += latex_text(l) + "\\cr\n";
    return out + "}";
}

inline std::string latex_matrix(const std::vector<std::vector<std::string>>& cells) {
    std::string out = "\\pmatrix{\n";
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out += (j ? " & " : "") + latex_text(row[j]);
        out += "\\cr\n";
    }
    return out + "}";
}

inline std::string braiding_latex(const BraidingMatrix& b) {
    return "{\\Psi}\n" + latex_column(b.row_labels) + "\n=\n" + latex_matrix(scalar_cells(b.matrix, true)) + "\n" +
           latex_column(b.col_labels) + "\n";
}

inline std::string corep_latex(const Corep& C) {
    std::vector<std::vector<std::string>> cells(C.dim());
    for (std::size_t i = 0; i < C.dim(); ++i)
        for (std::size_t j = 0; j < C.dim(); ++j)
            cells[i].push_back(to_string(C.rho(i, j)));
    return latex_matrix(cells) + "\n";
}

} // namespace slq::io
