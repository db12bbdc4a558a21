// crystalcone: command-line front end. JSON goes to stdout (and --json FILE);
// exit codes are 0 on success, 2 on a domain error, 3 on a parse error.
#include "jobs.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace cc;
using namespace cc::cli;

namespace {

constexpr int kDomainError = 2;
constexpr int kParseError = 3;

// Write to a sibling temporary and rename, so readers never see a partial file.
void write_atomic(const std::string& path, const std::string& text) {
    std::filesystem::path target(path), tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string());
        f << text;
        if (!f.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tropical, cluster and Poisson computations on double Bruhat cells"};
    app.require_subcommand(1, 1);

    JobSpec spec;
    std::string word, hw, wt, sequence, json_path, csv_path;
    bool verify = false;

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"cone", "tropical potential cone of a chart (or the string cone)"},
        {"count", "lattice points of the highest-weight fiber, by weight"},
        {"poisson", "constant Poisson bracket and its Darboux normal form"},
        {"gromov", "simplex-embedding width certificate"},
        {"converge", "numeric convergence of the scaled bracket (type A)"},
        {"seed", "initial seed of a reduced word"},
        {"mutate", "seed after a mutation sequence"},
        {"compare", "Langlands comparison of reduced-chart cones"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--type", spec.type, "Cartan type, e.g. A2, C2, G2")->required();
        sub->add_option("--word", word, "reduced word for w0, comma separated");
        sub->add_option("--json", json_path, "write JSON output to FILE (atomically)");
        sub->add_flag("--verify", verify, "recompute and compare with the existing --json FILE");
        std::string name = s.name;
        if (name == "cone") {
            sub->add_option("--chart", spec.chart, "chart kind: cluster, reduced, twisted, factorization, reduced-factorization");
            sub->add_flag("--string", spec.string_cone, "string cone instead of a potential cone");
        }
        if (name == "count") {
            sub->add_option("--hw", hw, "highest weight, fundamental-weight coordinates")->required();
            sub->add_option("--wt", wt, "also count this weight");
            sub->add_option("--chart", spec.chart, "chart kind used for counting");
            sub->add_flag("--raw-cone", spec.raw_cone, "use the cone of the given type instead of its dual");
        }
        if (name == "gromov") {
            sub->add_option("--hw", hw, "highest weight, fundamental-weight coordinates")->required();
            sub->add_option("--bound", spec.bound, "largest absolute matrix entry in the search")->check(CLI::NonNegativeNumber);
        }
        if (name == "converge") {
            sub->add_option("--delta", spec.delta, "margin of the sample point (rational)")->required();
            sub->add_option("--s-grid", spec.s_grid, "lo:hi:step, negative values")->required();
            sub->add_option("--seed", spec.seed, "random seed for the sample point");
            sub->add_option("--csv", csv_path, "write deviations as CSV");
        }
        if (name == "mutate") sub->add_option("--sequence", sequence, "indices to mutate, comma separated")->required();
        if (name == "compare") sub->add_option("--samples", spec.samples, "integral points to sample")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        spec.command = app.get_subcommands().front()->get_name();
        auto ints = [](const std::string& s, const char* what) {
            auto v = parse_int_list(s, what);
            return std::vector<int>(v.begin(), v.end());
        };
        if (!word.empty()) spec.word = ints(word, "--word");
        if (!hw.empty()) spec.hw = parse_int_list(hw, "--hw");
        if (!wt.empty()) spec.wt = parse_int_list(wt, "--wt");
        if (!sequence.empty()) spec.sequence = ints(sequence, "--sequence");
        if (verify && json_path.empty()) throw ParseError("--verify needs --json FILE");
        json previous;
        if (verify) {
            try {
                previous = json::parse(read_file(json_path));
            } catch (const json::exception& e) {
                throw ParseError(json_path + ": " + e.what());
            }
        }

        JobOutput out = run_job(spec);
        std::string text = out.result.dump(2) + "\n";
        std::cout << text;
        if (verify) {
            if (previous != out.result) {
                std::cerr << "verify: recomputed output differs from " << json_path << "\n";
                return kDomainError;
            }
            std::cerr << "verify: identical\n";
        } else if (!json_path.empty()) {
            write_atomic(json_path, text);
        }
        if (!csv_path.empty()) write_atomic(csv_path, out.csv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return 0;
}
