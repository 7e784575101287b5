// Command-line front door: build and export the kernel-section matrices,
// run the decomposition verification, emit rank tables, and test kernel
// membership of Plucker vectors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lgrass/blocks.hpp"
#include "lgrass/io.hpp"
#include "lgrass/report.hpp"

namespace {

struct BuildArgs {
    std::string kind;
    int n = 0, k = 0, m = 0, level = 0;
    std::string out;
    std::string format = "sms";
};

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    lgrass::write_file_atomic(out_path, content);
}

int run_build(const BuildArgs& args) {
    lgrass::BinaryMatrix matrix;
    if (args.kind == "B") {
        matrix = lgrass::contraction_matrix(lgrass::SymplecticLabels(args.n));
    } else if (args.kind == "L") {
        matrix = lgrass::canonical_block(args.k);
    } else if (args.kind == "M") {
        matrix = lgrass::inclusion_matrix(args.m);
    } else if (args.kind == "A") {
        matrix = lgrass::staircase(args.k, args.level);
    } else {
        throw CLI::ValidationError("kind must be one of B, L, M, A");
    }
    std::string content;
    if (args.format == "sms")
        content = lgrass::to_sms(matrix);
    else if (args.format == "csv")
        content = lgrass::to_csv(matrix);
    else if (args.format == "json")
        content = lgrass::to_json(matrix);
    else
        throw CLI::ValidationError("format must be sms, csv or json");
    emit(content, args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear sections of the Lagrangian Grassmannian: exact matrices, ranks, verification"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "construct a matrix and write it out");
    build->add_option("kind", build_args.kind, "B (kernel sections), L (canonical block), M (inclusion oracle), A (staircase)")
        ->required();
    build->add_option("--n", build_args.n, "half-dimension for B");
    build->add_option("--k", build_args.k, "block index for L / A");
    build->add_option("--m", build_args.m, "ground-set size for M (even)");
    build->add_option("--level", build_args.level, "staircase level for A");
    build->add_option("--out", build_args.out, "output path ('-' or empty: stdout)");
    build->add_option("--format", build_args.format, "sms (default), csv or json");

    int verify_n = 0;
    std::vector<std::uint64_t> verify_chars{0, 2, 3, 5, 7};
    std::uint64_t seed = 0;
    int samples = 100;
    bool force_large = false;
    std::string verify_out;
    auto* verify = app.add_subcommand("verify", "run the full decomposition verification, emit a JSON report");
    verify->add_option("--n", verify_n, "half-dimension")->required();
    verify->add_option("--chars", verify_chars, "characteristics (0 = rationals)")->delimiter(',');
    verify->add_option("--seed", seed, "seed for rank certification and sampling");
    verify->add_option("--samples", samples, "Lagrangian samples per kernel characteristic");
    verify->add_flag("--force-large", force_large, "allow n outside the supported 4..8 window");
    verify->add_option("--out", verify_out, "report path ('-' or empty: stdout)");

    int table_n = 0;
    std::vector<std::uint64_t> table_chars{0, 2, 3, 5};
    std::string table_out;
    auto* table = app.add_subcommand("rank-table", "exact ranks of B and its canonical blocks, CSV");
    table->add_option("--n", table_n, "half-dimension")->required();
    table->add_option("--chars", table_chars, "characteristics (0 = rationals)")->delimiter(',');
    table->add_option("--seed", seed, "seed for rank certification");
    table->add_flag("--force-large", force_large, "allow n outside the supported 4..8 window");
    table->add_option("--out", table_out, "output path ('-' or empty: stdout)");

    int point_n = 0;
    std::string point_file;
    std::string convention = "unsigned";
    auto* point = app.add_subcommand("check-point", "test kernel membership of a Plucker vector file");
    point->add_option("--n", point_n, "half-dimension")->required();
    point->add_option("file", point_file, "coordinate file (b_1 .. b_n value per line)")->required();
    point->add_option("--convention", convention, "unsigned (default) or signed")
        ->check(CLI::IsMember({"unsigned", "signed"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) return run_build(build_args);

        if (*verify) {
            if (verify_n < 4) {
                std::cerr << "verify: n must be at least 4\n";
                return 2;
            }
            if (verify_n > 8 && !force_large) {
                std::cerr << "verify: n > 8 is untested at this scale; pass --force-large to proceed\n";
                return 2;
            }
            if (verify_n > 8) std::cerr << "verify: n = " << verify_n << " may take a long time\n";
            lgrass::VerifyOptions options;
            options.characteristics = verify_chars;
            options.seed = seed;
            options.kernel_samples = samples;
            const auto report = lgrass::run_verification(lgrass::SymplecticLabels(verify_n), options);
            emit(lgrass::verification_json(report), verify_out);
            return report.all_checks_pass ? 0 : 1;
        }

        if (*table) {
            if (table_n < 4) {
                std::cerr << "rank-table: n must be at least 4\n";
                return 2;
            }
            if (table_n > 8 && !force_large) {
                std::cerr << "rank-table: n > 8 is untested at this scale; pass --force-large to proceed\n";
                return 2;
            }
            if (table_n > 8) std::cerr << "rank-table: n = " << table_n << " may take a long time\n";
            emit(lgrass::rank_table_csv(lgrass::SymplecticLabels(table_n), table_chars, seed), table_out);
            return 0;
        }

        if (*point) {
            if (point_n < 2) {
                std::cerr << "check-point: n must be at least 2\n";
                return 2;
            }
            std::ifstream in(point_file);
            if (!in) {
                std::cerr << "check-point: cannot open " << point_file << "\n";
                return 2;
            }
            const lgrass::PluckerVector vec = lgrass::read_plucker(in, point_n);
            const auto sign = convention == "signed" ? lgrass::SignConvention::alternating
                                                     : lgrass::SignConvention::plain;
            const auto violations = lgrass::kernel_violations(vec, sign);
            if (violations.empty()) {
                std::cout << "IN KERNEL\n";
                return 0;
            }
            for (const lgrass::MultiIndex& row : violations) {
                std::cout << "violated at row (";
                for (size_t i = 0; i < row.entries().size(); ++i) {
                    if (i) std::cout << ",";
                    std::cout << row.entries()[i];
                }
                std::cout << ")\n";
            }
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
