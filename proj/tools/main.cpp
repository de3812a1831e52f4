#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "equilift/commands.hpp"
#include "equilift/common.hpp"
#include "equilift/instance.hpp"
#include "equilift/parallel.hpp"

namespace {

struct CommonOpts {
    std::string input;
    std::string output = "text";
    int workers = 1;
};

void attach_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--input", o.input, "instance file (JSON)")->required();
    sub->add_option("--output", o.output, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--workers", o.workers, "worker thread count")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace equilift;

    CLI::App app{"finite-scale toolkit for sites, cocycle classes, and "
                 "equivariant lifting"};
    app.require_subcommand(1);

    CommonOpts opts;
    int degree = 1;

    CLI::App* site = app.add_subcommand(
        "check-site", "validate a covering topology and test a presheaf's sheaf "
                      "condition");
    attach_common(site, opts);

    CLI::App* classify = app.add_subcommand(
        "classify", "classify cocycles on a nerve up to gauge equivalence");
    attach_common(classify, opts);
    classify->add_option("--degree", degree, "cohomological degree")
        ->check(CLI::IsMember({1, 2}));

    CLI::App* lifting = app.add_subcommand(
        "lift", "analyze lifting of a group action to a bundle");
    attach_common(lifting, opts);

    CLI::App* homogeneous = app.add_subcommand(
        "homogeneous", "build a coset-quotient bundle and realize it on the "
                       "coset nerve");
    attach_common(homogeneous, opts);

    CLI::App* clutch = app.add_subcommand(
        "clutch", "glue a two-chart bundle from clutching data");
    attach_common(clutch, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        const instance::InstanceFile file = instance::load(opts.input);
        const ExecPolicy pol = ExecPolicy::make(opts.workers);

        commands::Report report;
        if (site->parsed())
            report = commands::cmd_check_site(file);
        else if (classify->parsed())
            report = commands::cmd_classify(file, degree, pol);
        else if (lifting->parsed())
            report = commands::cmd_lift(file, pol);
        else if (homogeneous->parsed())
            report = commands::cmd_homogeneous(file);
        else
            report = commands::cmd_clutch(file, pol);

        if (opts.output == "json")
            std::cout << report.doc.dump(2) << "\n";
        else
            std::cout << report.text();
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        code = 1;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        code = 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        code = 3;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    std::cerr << "elapsed: " << elapsed << " ms\n";
    return code;
}
