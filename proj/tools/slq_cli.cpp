// slq: command-line front end.  Exit status 0 on success, 1 when a check or
// claim fails, 2 on bad input.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slq/io.hpp"
#include "slq/slq.hpp"

namespace {

using slq::io::json;

enum class Format { text, json, latex };

struct Common {
    std::vector<int> ells;
    std::string mode = "generic";
    std::string format = "text";
    std::string convention = "standard";
};

int single_ell(const Common& c) {
    if (c.ells.empty())
        return 3;
    if (c.ells.size() > 1)
        throw slq::usage_error("this command takes a single --ell");
    return c.ells.front();
}

void check_ell(int ell) {
    if (ell < 3 || ell % 2 == 0)
        throw slq::usage_error("--ell must be an odd integer ≥ 3");
}

slq::AlgebraMode mode_of(const Common& c) {
    const int ell = single_ell(c);
    check_ell(ell);
    if (c.mode == "generic")
        return slq::AlgebraMode::generic(ell);
    if (c.mode == "F")
        return slq::AlgebraMode::quotient_f(ell);
    if (c.mode == "Fhat")
        return slq::AlgebraMode::quotient_fhat(ell);
    throw slq::usage_error("--mode must be generic, F or Fhat");
}

Format format_of(const Common& c, bool latex_allowed) {
    if (c.format == "text")
        return Format::text;
    if (c.format == "json")
        return Format::json;
    if (c.format == "latex" && latex_allowed)
        return Format::latex;
    throw slq::usage_error("--format " + c.format + " is not available for this command");
}

slq::PairingConvention convention_of(const Common& c) {
    if (c.convention == "standard")
        return slq::PairingConvention::standard;
    if (c.convention == "mixed")
        return slq::PairingConvention::mixed;
    throw slq::usage_error("--convention must be standard or mixed");
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int emit_element(const Common& c, const slq::Element& x) {
    if (format_of(c, false) == Format::json) {
        json j = slq::io::document("element");
        j["mode"] = x.mode().name();
        j["text"] = slq::to_string(x);
        j["terms"] = slq::io::element_json(x);
        print(j);
    } else {
        std::cout << slq::to_string(x) << '\n';
    }
    return 0;
}

int emit_report(const Common& c, const slq::VerificationReport& r) {
    if (format_of(c, false) == Format::json)
        print(slq::io::report_json(r));
    else
        std::cout << slq::io::report_text(r);
    return r.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the quantum group SL_q(2) at odd roots of unity"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    app.add_option("--ell", common.ells, "odd order of the root of unity q (repeatable for verify)")
        ->delimiter(',');
    app.add_option("--mode", common.mode, "generic, F or Fhat")->capture_default_str();
    app.add_option("--format", common.format, "text, json or latex")->capture_default_str();
    app.add_option("--convention", common.convention, "pairing extension: standard or mixed")
        ->capture_default_str();

    std::string expr;
    auto element_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("expr", expr, "element, e.g. \"a^2 b - q c d\"")->required();
        return sub;
    };
    auto* normalize = element_command("normalize", "print the normal form of an element");
    auto* coproduct = element_command("coproduct", "Δ(x)");
    auto* antipode = element_command("antipode", "S(x)");
    auto* counit = element_command("counit", "ε(x)");
    auto* hopf_check = element_command("hopf-check", "coassociativity, counit and antipode axioms on x");

    std::string family;
    std::optional<int> index_m, index_n;
    auto* corep = app.add_subcommand("corep", "matrix coefficients of Y_m, V_m or W_n");
    corep->add_option("--family", family, "Y, V or W")->required()->check(CLI::IsMember({"Y", "V", "W"}));
    corep->add_option("--m", index_m, "index for Y and V");
    corep->add_option("--n", index_n, "index for W");

    auto* decompose = app.add_subcommand("decompose", "decomposition tree of a tensor product at ell 3");
    decompose->add_option("--expr", expr, "e.g. \"V1*V1*V1\"")->required();

    std::string left, right;
    auto* braid = app.add_subcommand("braid", "braiding matrix Ψ of two comodules");
    braid->add_option("--left", left, "e.g. V1")->required();
    braid->add_option("--right", right, "e.g. V2")->required();

    std::string suite;
    auto* braid_verify = app.add_subcommand("braid-verify", "printed braidings and braiding identities at ell 3");
    braid_verify->add_option("--suite", suite, "reference")->default_val("reference")->check(
        CLI::IsMember({"reference", "paper"}));

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    verify->add_option("--suite", suite, "hopf, props, corep, braid or all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (normalize->parsed())
            return emit_element(common, slq::parse_element(expr, mode_of(common)));
        if (antipode->parsed())
            return emit_element(common, slq::antipode(slq::parse_element(expr, mode_of(common))));
        if (coproduct->parsed()) {
            const slq::Tensor2 t = slq::coproduct(slq::parse_element(expr, mode_of(common)));
            if (format_of(common, false) == Format::json) {
                json j = slq::io::document("tensor");
                j["mode"] = t.mode().name();
                j["text"] = slq::to_string(t);
                j["terms"] = slq::io::tensor_json(t);
                print(j);
            } else {
                std::cout << slq::to_string(t) << '\n';
            }
            return 0;
        }
        if (counit->parsed()) {
            const slq::Cyclotomic v = slq::counit(slq::parse_element(expr, mode_of(common)));
            if (format_of(common, false) == Format::json) {
                json j = slq::io::document("scalar");
                j["value"] = v.to_string();
                print(j);
            } else {
                std::cout << v << '\n';
            }
            return 0;
        }
        if (hopf_check->parsed()) {
            const slq::Element x = slq::parse_element(expr, mode_of(common));
            const slq::HopfReport r = slq::check_hopf_axioms(x);
            if (format_of(common, false) == Format::json) {
                json j = slq::io::document("hopf-check");
                j["element"] = slq::to_string(x);
                j["coassociative"] = r.coassociative;
                j["counit_left"] = r.counit_left;
                j["counit_right"] = r.counit_right;
                j["antipode_left"] = r.antipode_left;
                j["antipode_right"] = r.antipode_right;
                j["ok"] = r.all();
                print(j);
            } else {
                auto line = [](const char* what, bool ok) { std::cout << (ok ? "PASS " : "FAIL ") << what << '\n'; };
                line("(Δ⊗id)Δ = (id⊗Δ)Δ", r.coassociative);
                line("(ε⊗id)Δ = id", r.counit_left);
                line("(id⊗ε)Δ = id", r.counit_right);
                line("m(S⊗id)Δ = ε", r.antipode_left);
                line("m(id⊗S)Δ = ε", r.antipode_right);
            }
            return r.all() ? 0 : 1;
        }
        if (corep->parsed()) {
            const slq::AlgebraMode mode = mode_of(common);
            const auto need = [&](const std::optional<int>& v, const char* flag) {
                if (!v)
                    throw slq::usage_error(std::string("--family ") + family + " needs " + flag);
                if (*v < 0)
                    throw slq::usage_error(std::string(flag) + " must be non-negative");
                return *v;
            };
            slq::Corep C;
            if (family == "Y")
                C = slq::build_Y(need(index_m, "--m"), mode);
            else if (mode.is_quotient())
                throw slq::usage_error("V and W are built over the generic algebra; use --mode generic");
            else if (family == "V") {
                const int m = need(index_m, "--m");
                if (m >= mode.ell)
                    throw slq::usage_error("V_m needs m ≤ ell − 1");
                C = slq::build_V(m, mode.ell);
            } else {
                C = slq::build_W(need(index_n, "--n"), mode.ell);
            }
            const slq::CorepReport axioms = slq::verify_corep(C);
            switch (format_of(common, true)) {
            case Format::json: {
                json j = slq::io::document("corep");
                j["corep"] = slq::io::corep_json(C);
                j["comodule_axioms"] = axioms.ok();
                if (!mode.is_quotient()) {
                    const auto cert = slq::irreducibility_certificate(C);
                    j["matrix_element_rank"] = cert.rank;
                    j["independent_matrix_elements"] = cert.independent;
                }
                print(j);
                break;
            }
            case Format::latex:
                std::cout << slq::io::corep_latex(C);
                break;
            case Format::text:
                std::cout << slq::io::corep_text(C);
                break;
            }
            return axioms.ok() ? 0 : 1;
        }
        if (decompose->parsed()) {
            const int ell = single_ell(common);
            check_ell(ell);
            const slq::Corep C = slq::parse_corep_expr(expr, ell);
            const slq::DecompositionTree t = slq::decompose_l3(C);
            if (format_of(common, false) == Format::json) {
                json j = slq::io::document("decomposition");
                j["input"] = C.name;
                j["text"] = t.to_text();
                j["tree"] = slq::io::tree_json(t);
                print(j);
            } else {
                std::cout << C.name << " = " << t.to_text() << '\n';
            }
            return 0;
        }
        if (braid->parsed()) {
            const int ell = single_ell(common);
            check_ell(ell);
            const slq::BraidingMatrix b = slq::braiding_matrix(
                slq::parse_corep_expr(left, ell), slq::parse_corep_expr(right, ell), convention_of(common));
            switch (format_of(common, true)) {
            case Format::json: {
                json j = slq::io::document("braiding");
                j["ell"] = ell;
                j["convention"] = slq::convention_name(convention_of(common));
                j["braiding"] = slq::io::braiding_json(b);
                print(j);
                break;
            }
            case Format::latex:
                std::cout << slq::io::braiding_latex(b);
                break;
            case Format::text:
                std::cout << slq::io::braiding_text(b);
                break;
            }
            return 0;
        }
        if (braid_verify->parsed()) {
            slq::VerifyOptions o;
            o.ells = {3};
            o.convention = convention_of(common);
            return emit_report(common, slq::run_suite("braid", o));
        }
        if (verify->parsed()) {
            slq::VerifyOptions o;
            if (!common.ells.empty())
                o.ells = common.ells;
            for (int ell : o.ells)
                check_ell(ell);
            o.convention = convention_of(common);
            return emit_report(common, slq::run_suite(suite, o));
        }
    } catch (const slq::parse_error& e) {
        std::cerr << "slq: parse error: " << e.what() << '\n';
        return 2;
    } catch (const slq::unsupported& e) {
        std::cerr << "slq: unsupported: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "slq: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
