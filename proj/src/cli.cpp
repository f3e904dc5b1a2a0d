#include "kirchhoff/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "kirchhoff/report.hpp"

namespace kirchhoff {

namespace {

int dispatch(const std::string& verb, const std::string& config_path,
             const std::string& out_override) {
    RunConfig cfg = parse_config_file(config_path);
    if (!out_override.empty()) cfg.out_dir = out_override;
    if (verb == "solve") return run_solve(cfg, std::cerr);
    if (verb == "bifurcate") return run_bifurcation(cfg, std::cerr);
    return run_verify(cfg, std::cerr);
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Solver and bifurcation analyzer for the negative-modulus "
                 "Kirchhoff problem -(a - b*int |grad u|^2) lap u = mu f"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    std::string verb;
    for (const char* name : {"solve", "bifurcate", "verify"}) {
        CLI::App* sub = app.add_subcommand(
            name, name == std::string("solve")      ? "solve at a single mu"
                  : name == std::string("bifurcate") ? "sweep a mu range into a table"
                                                     : "run the verification suite");
        sub->add_option("config", config_path, "config file (key = value lines)")
            ->required();
        sub->add_option("--out", out_override, "override out_dir from the config");
        sub->callback([&verb, name] { verb = name; });
    }

    try {
        std::vector<const char*> argv;
        argv.push_back("kirchhoff");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        return dispatch(verb, config_path, out_override);
    } catch (const ParseError& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const DomainMismatchError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidSourceError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const DegenerateSourceError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const DegenerateReductionError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const ZeroFieldError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const DegenerateCoefficientError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const IterationLimitError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    } catch (const BallEscapeError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 2;
    } catch (const VerificationFailureError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace kirchhoff
