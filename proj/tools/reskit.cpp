// Command line front end: essential / partition / cdeg / residue / verify.
//
// Exit codes: 0 success, 1 a verification failed, 2 no partition exists or a
// resource limit was hit, 3 bad input, 4 the family is not essential, 70
// internal error.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "reskit/construct.hpp"
#include "reskit/json_io.hpp"

namespace {

bool log_enabled() {
    const char* v = std::getenv("RESKIT_LOG");
    return v != nullptr && *v != '\0';
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "[reskit] " << msg << "\n";
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
    } else {
        reskit::write_text_file(output_path, text);
        log_line("wrote " + output_path);
    }
}

struct CommonArgs {
    std::string problem_path;
    std::string partition_path;
    std::string output_path;
    std::string strategy = "auto";
    std::uint64_t seed = 20240915;
    int jobs = 1;
};

reskit::ConstructOptions make_options(const CommonArgs& args) {
    reskit::ConstructOptions opts;
    static const std::map<std::string, reskit::Strategy> lookup = {
        {"auto", reskit::Strategy::Auto},
        {"locally-unmixed", reskit::Strategy::LocallyUnmixed},
        {"dim2", reskit::Strategy::Dim2},
        {"search", reskit::Strategy::Search},
    };
    opts.strategy = lookup.at(args.strategy);
    opts.degree.seed = args.seed;
    opts.search.seed = args.seed;
    return opts;
}

// The partition comes from --partition when given, else from the problem
// file itself.
reskit::PartitionMatrix required_partition(const reskit::ProblemFile& problem,
                                           const CommonArgs& args) {
    if (!args.partition_path.empty())
        return reskit::read_partition_file(args.partition_path, problem.ambient_dim);
    if (problem.partition) return *problem.partition;
    throw reskit::InvalidInput("no partition: pass --partition or embed one in the problem file");
}

int cmd_essential(const CommonArgs& args) {
    reskit::ProblemFile problem = reskit::read_problem_file(args.problem_path);
    std::vector<reskit::LatticePolytope> family = reskit::family_of(problem);
    reskit::EssentialReport rep = reskit::is_essential(family);
    if (rep.essential) {
        std::cout << "essential\n";
        return 0;
    }
    std::cout << "not essential: members {";
    for (std::size_t i = 0; i < rep.witness_subset.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << rep.witness_subset[i];
    }
    std::cout << "} span a sum of dimension < " << rep.witness_subset.size() << "\n";
    return 4;
}

int cmd_partition(const CommonArgs& args) {
    reskit::ProblemFile problem = reskit::read_problem_file(args.problem_path);
    std::vector<reskit::LatticePolytope> family = reskit::family_of(problem);
    reskit::ResidueCertificate cert = reskit::residue_element(family, make_options(args));
    log_line("strategy: " + cert.strategy_used);
    if (cert.dim2 && !cert.dim2->note.empty()) log_line("planar rule: " + cert.dim2->note);
    emit(reskit::partition_to_json(cert.partition), args.output_path);
    return 0;
}

int cmd_cdeg(const CommonArgs& args) {
    reskit::ProblemFile problem = reskit::read_problem_file(args.problem_path);
    std::vector<reskit::LatticePolytope> family = reskit::family_of(problem);
    reskit::PartitionMatrix m = required_partition(problem, args);
    reskit::ValidationReport rep = reskit::validate(family, m);
    if (!rep.ok) {
        for (const reskit::ValidationCheck& c : rep.checks) {
            if (!c.passed) std::cerr << "invalid partition: " << c.name << ": " << c.detail << "\n";
        }
        return 1;
    }
    reskit::DegreeOptions dopts;
    dopts.seed = args.seed;
    int d = reskit::cdeg(family, m, dopts);
    std::cout << d << "\n";
    return 0;
}

int cmd_residue(const CommonArgs& args, bool partition_given) {
    reskit::ProblemFile problem = reskit::read_problem_file(args.problem_path);
    std::vector<reskit::LatticePolytope> family = reskit::family_of(problem);
    reskit::ResidueCertificate cert;
    if (partition_given || problem.partition) {
        cert = reskit::certificate_for_partition(family, required_partition(problem, args),
                                                 make_options(args));
    } else {
        cert = reskit::residue_element(family, make_options(args));
        log_line("strategy: " + cert.strategy_used);
        if (cert.dim2 && !cert.dim2->note.empty()) log_line("planar rule: " + cert.dim2->note);
    }
    emit(reskit::certificate_to_json(cert, family, problem), args.output_path);
    if (!cert.validation.ok) {
        std::cerr << "partition failed validation; see the certificate's validation block\n";
        return 1;
    }
    if (cert.degree == 0)
        std::cerr << "warning: degree 0 — the element exists but certifies nothing useful\n";
    return 0;
}

int cmd_verify(const CommonArgs& args) {
    reskit::ProblemFile problem = reskit::read_problem_file(args.problem_path);
    std::vector<reskit::LatticePolytope> family = reskit::family_of(problem);
    reskit::EssentialReport ess = reskit::is_essential(family);
    if (!ess.essential) {
        std::cout << "FAIL essential: the family is not essential\n";
        return 4;
    }
    std::cout << "ok   essential\n";
    reskit::PartitionMatrix m = required_partition(problem, args);

    reskit::ConstructOptions opts = make_options(args);
    reskit::ResidueCertificate cert = reskit::certificate_for_partition(family, m, opts);
    bool all_ok = true;
    for (const reskit::ValidationCheck& c : cert.validation.checks) {
        std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.passed && !c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
        all_ok = all_ok && c.passed;
    }
    if (cert.validation.ok) {
        std::cout << "info degree " << cert.degree << "\n";
        std::cout << (cert.determinant_interior ? "ok   " : "FAIL ")
                  << "determinant-interior-support\n";
        all_ok = all_ok && cert.determinant_interior;
    }
    if (!args.output_path.empty())
        reskit::write_text_file(args.output_path,
                                reskit::certificate_to_json(cert, family, problem));
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric residue kit: compatible partitions, residue matrices, degrees"};
    app.require_subcommand(1);

    CommonArgs args;
    auto add_common = [&](CLI::App* sub, bool with_partition, bool with_strategy) {
        sub->add_option("problem", args.problem_path, "problem JSON file")->required();
        sub->add_option("-o,--output", args.output_path, "write the result here instead of stdout");
        sub->add_option("--seed", args.seed, "seed for the degree sampling");
        sub->add_option("--jobs", args.jobs, "worker count (accepted for compatibility; runs serially)");
        if (with_partition)
            sub->add_option("--partition", args.partition_path, "partition JSON file");
        if (with_strategy)
            sub->add_option("--strategy", args.strategy, "auto|locally-unmixed|dim2|search")
                ->check(CLI::IsMember({"auto", "locally-unmixed", "dim2", "search"}));
    };

    CLI::App* c_essential = app.add_subcommand("essential", "check the dimension condition");
    add_common(c_essential, false, false);
    CLI::App* c_partition = app.add_subcommand("partition", "construct a compatible partition");
    add_common(c_partition, false, true);
    CLI::App* c_cdeg = app.add_subcommand("cdeg", "combinatorial degree of a partition");
    add_common(c_cdeg, true, false);
    CLI::App* c_residue = app.add_subcommand("residue", "full residue certificate");
    add_common(c_residue, true, true);
    CLI::App* c_verify = app.add_subcommand("verify", "re-check a partition and its certificate");
    add_common(c_verify, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (app.got_subcommand(c_essential)) return cmd_essential(args);
        if (app.got_subcommand(c_partition)) return cmd_partition(args);
        if (app.got_subcommand(c_cdeg)) return cmd_cdeg(args);
        if (app.got_subcommand(c_residue))
            return cmd_residue(args, !args.partition_path.empty());
        if (app.got_subcommand(c_verify)) return cmd_verify(args);
        return 3;
    } catch (const reskit::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const reskit::NonEssential& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const reskit::ExceptionalFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const reskit::NoPartitionFound& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const reskit::ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const reskit::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
