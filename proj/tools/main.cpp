// kernatom: command-line verifier for kernel-atomicity statements.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 spec/usage error,
// 3 a configured cap was exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kernatom/errors.hpp"
#include "kernatom/pipelines.hpp"
#include "kernatom/report.hpp"
#include "kernatom/spec_io.hpp"

namespace {

enum ExitCode { kOk = 0, kCheckFailed = 1, kSpecError = 2, kCapExceeded = 3 };

void print_error(const kernatom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& [k, v] : e.witness()) std::cerr << "  " << k << ": " << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify kernels, fibers, cosets, quotients, orbits and null spaces"};
    app.require_subcommand(1);

    kernatom::Limits limits;
    std::string format = "text";
    app.add_option("--max-order", limits.max_order, "Largest group order that will be enumerated")
        ->capture_default_str();
    app.add_option("--max-validate", limits.max_validate, "Largest domain order for exhaustive homomorphism checks")
        ->capture_default_str();
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    app.add_option("--seed", limits.seed, "Seed for sampled associativity and coefficient samples")
        ->capture_default_str();
    app.add_flag("--allow-sampled", limits.allow_sampled,
                 "Run theorem checks on groups whose associativity was only sampled");

    std::string spec_path;
    std::vector<std::string> report_paths;
    auto* verify_hom = app.add_subcommand("verify-hom", "Kernel, fiber, atomicity, first-isomorphism and injectivity checks");
    verify_hom->add_option("spec", spec_path, "Homomorphism spec file")->required();
    auto* verify_action = app.add_subcommand("verify-action", "Orbit-stabilizer and fiber-coset checks");
    verify_action->add_option("spec", spec_path, "Action spec file")->required();
    auto* solve = app.add_subcommand("solve", "Solve a linear system and verify its solution family");
    solve->add_option("spec", spec_path, "Linear-system spec file")->required();
    auto* verify_group = app.add_subcommand("verify-group", "Group axiom checks (and quotient checks for quotient specs)");
    verify_group->add_option("spec", spec_path, "Group or quotient spec file")->required();
    auto* report = app.add_subcommand("report", "Run every spec file and aggregate one report");
    report->add_option("specs", report_paths, "Spec files of any kind")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kSpecError;
    }

    kernatom::ReportDocument document;
    try {
        if (report->parsed()) {
            for (const auto& path : report_paths)
                document.reports.push_back(kernatom::run_spec(kernatom::spec::load_spec_file(path), limits));
        } else {
            const auto file = kernatom::spec::load_spec_file(spec_path);
            if (verify_hom->parsed())
                document.reports.push_back(kernatom::verify_hom_spec(file, limits));
            else if (verify_action->parsed())
                document.reports.push_back(kernatom::verify_action_spec(file, limits));
            else if (solve->parsed())
                document.reports.push_back(kernatom::solve_spec(file, limits));
            else
                document.reports.push_back(kernatom::verify_group_spec(file, limits));
        }
    } catch (const kernatom::SpecError& e) {
        print_error(e);
        return kSpecError;
    } catch (const kernatom::CapError& e) {
        print_error(e);
        return kCapExceeded;
    } catch (const kernatom::Error& e) {
        print_error(e);
        return kCheckFailed;
    }

    std::cout << kernatom::emit(document, format == "text" ? kernatom::ReportFormat::text
                                                           : kernatom::ReportFormat::structured);
    return document.all_passed() ? kOk : kCheckFailed;
}
