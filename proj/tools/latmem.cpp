#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "latmem/io.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw latmem::ContractError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice membership and closest vector solver"};
    app.require_subcommand(1);

    std::string input;
    bool no_replacement = false, force_oracle = false, json_out = false;
    long max_dim = 8;
    long rounding_bits = 0;
    unsigned long long seed = 0;
    if (const char* env = std::getenv("LATMEM_MAX_DIM")) max_dim = std::atol(env);
    if (const char* env = std::getenv("LATMEM_ROUNDING_BITS")) rounding_bits = std::atol(env);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input, "instance JSON file")->required();
        sub->add_flag("--no-replacement", no_replacement,
                      "skip the Frank-Tardos preprocessing (differential mode)");
        sub->add_flag("--oracle", force_oracle, "force the brute-force reference solver");
        sub->add_option("--max-dim", max_dim, "refuse instances above this dimension");
        sub->add_flag("--json", json_out, "JSON output (always on; accepted for scripts)");
        sub->add_option("--seed", seed, "seed for test-corpus generation scripts");
    };
    CLI::App* cvp = app.add_subcommand("cvp", "closest vector in a given norm");
    CLI::App* lmp = app.add_subcommand("lmp", "lattice membership of a convex body");
    CLI::App* svp = app.add_subcommand("svp", "shortest lattice vector (Euclidean)");
    CLI::App* chk = app.add_subcommand("check", "run algorithm and oracle, compare");
    for (CLI::App* sub : {cvp, lmp, svp, chk}) add_common(sub);

    CLI11_PARSE(app, argc, argv);
    (void)json_out;
    (void)seed;

    latmem::RunOptions opts;
    opts.no_replacement = no_replacement;
    opts.force_oracle = force_oracle;
    opts.max_dimension = max_dim > 0 ? std::size_t(max_dim) : 0;
    opts.rounding_bits = rounding_bits;

    try {
        latmem::Instance inst = latmem::parse_instance(read_file(input));
        auto expect_kind = [&](latmem::Instance::Kind k) {
            if (inst.kind != k)
                throw latmem::ContractError("instance kind does not match the subcommand");
        };
        if (app.got_subcommand(chk)) {
            std::string report;
            bool agree = latmem::check_instance(inst, opts, &report);
            std::cout << report << "\n";
            return agree ? 0 : 1;
        }
        if (app.got_subcommand(cvp)) expect_kind(latmem::Instance::Kind::Cvp);
        if (app.got_subcommand(lmp)) expect_kind(latmem::Instance::Kind::Lmp);
        if (app.got_subcommand(svp)) expect_kind(latmem::Instance::Kind::Svp);
        std::cout << latmem::run_instance(inst, opts) << "\n";
        return 0;
    } catch (const latmem::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const latmem::ContractError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
