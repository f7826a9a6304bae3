#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orthotope/errors.hpp"
#include "orthotope/io.hpp"

namespace {

ortho::Format to_format(const std::string& name) {
    if (name == "csv") return ortho::Format::Csv;
    if (name == "json") return ortho::Format::Json;
    return ortho::Format::Text;
}

ortho::VoxelSet read_input(const std::string& path) {
    if (path == "-") return ortho::read_voxels(std::cin);
    return ortho::read_voxels_file(path);
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ortho::Error("cannot write \"" + path + "\"");
    fn(out);
}

struct Options {
    std::string input;
    std::string out;
    std::string format = "text";
    int max_dim = ortho::ClassTable::kDefaultMaxDim;
    int t_max = 4;
    bool multivariable = false;
    bool corrupt = false;
    int dim = 2;
    int count = 10;
    std::uint64_t seed = 0;
};

void add_format(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", opt.out, "write to a file instead of stdout");
}

void add_input(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "voxel file, or - for stdin")
        ->required();
    cmd->add_option("--max-dim", opt.max_dim, "class table cap")
        ->check(CLI::Range(0, static_cast<int>(ortho::ClassTable::kMaxDim)));
}

int run_analysis_command(const Options& opt, const ortho::Sections& sections,
                         bool multivariable) {
    const ortho::ClassTable table(opt.max_dim);
    const ortho::VoxelSet solid = read_input(opt.input);
    const ortho::Analysis a = ortho::analyze(solid, table, multivariable);
    with_output(opt.out, [&](std::ostream& out) {
        ortho::write_analysis(out, a, table, to_format(opt.format), sections);
    });
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-point counts, class censuses and Euler data "
                 "of generic unions of unit cubes"};
    app.require_subcommand(1);

    Options opt;

    CLI::App* tables = app.add_subcommand(
        "tables", "print the class table: mu, rho, sigma, complements, h and "
                  "h^-1 rows");
    tables->add_option("--max-dim", opt.max_dim, "largest class dimension")
        ->check(CLI::Range(0, static_cast<int>(ortho::ClassTable::kMaxDim)));
    add_format(tables, opt);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "census, counting polynomials, Euler data and valuations "
                   "of a voxel solid");
    add_input(analyze, opt);
    add_format(analyze, opt);
    analyze->add_flag("--multivariable", opt.multivariable,
                      "include per-direction-set refinements");

    CLI::App* ehrhart = app.add_subcommand(
        "ehrhart", "counting polynomials only");
    add_input(ehrhart, opt);
    add_format(ehrhart, opt);
    ehrhart->add_flag("--multivariable", opt.multivariable,
                      "include per-direction-set refinements");

    CLI::App* euler = app.add_subcommand(
        "euler", "Euler vector and characteristic only");
    add_input(euler, opt);
    add_format(euler, opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "check the coefficient identities and compare against "
                  "brute-force lattice counts");
    add_input(verify, opt);
    add_format(verify, opt);
    verify->add_option("--t-max", opt.t_max, "largest dilation factor")
        ->check(CLI::Range(1, 16));
    verify->add_flag("--corrupt-census", opt.corrupt)->group("");

    CLI::App* random = app.add_subcommand(
        "random", "grow a random generic solid and write its voxel file");
    random->add_option("--dim", opt.dim, "dimension")->required();
    random->add_option("--count", opt.count, "number of voxels")->required();
    random->add_option("--seed", opt.seed, "rng seed");
    random->add_option("--out", opt.out, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (tables->parsed()) {
            const ortho::ClassTable table(opt.max_dim);
            with_output(opt.out, [&](std::ostream& out) {
                ortho::write_class_table(out, table, to_format(opt.format));
            });
            return 0;
        }
        if (analyze->parsed())
            return run_analysis_command(opt, ortho::Sections::all(),
                                        opt.multivariable);
        if (ehrhart->parsed())
            return run_analysis_command(opt, ortho::Sections::ehrhart_only(),
                                        opt.multivariable);
        if (euler->parsed())
            return run_analysis_command(opt, ortho::Sections::euler_only(),
                                        false);
        if (verify->parsed()) {
            const ortho::ClassTable table(opt.max_dim);
            const ortho::VoxelSet solid = read_input(opt.input);
            const ortho::VerifyResult result =
                opt.corrupt
                    ? ortho::run_verify_corrupted(solid, table, opt.t_max)
                    : ortho::run_verify(solid, table, opt.t_max);
            with_output(opt.out, [&](std::ostream& out) {
                ortho::write_verify(out, result, table, to_format(opt.format));
            });
            if (!result.pass()) {
                std::cerr << "verification failed\n";
                return 3;
            }
            return 0;
        }
        if (random->parsed()) {
            const ortho::VoxelSet solid =
                ortho::random_generic(opt.dim, opt.count, opt.seed);
            with_output(opt.out, [&](std::ostream& out) {
                ortho::write_voxels_text(out, solid);
            });
            // Census summary; kept off stdout when the voxels go there.
            std::ostream& info = opt.out.empty() ? std::cerr : std::cout;
            const ortho::ClassTable table(solid.dim());
            const ortho::CellCensus census = ortho::classify(solid, table);
            info << "dim " << solid.dim() << ", " << solid.size()
                 << " voxels, " << census.total_cells() << " cells\n";
            for (const auto& [key, count] : census.dim_counts())
                info << "  " << table.diagram(key.first).encoding() << " k="
                     << key.second << ": " << count << "\n";
            return 0;
        }
    } catch (const ortho::NotGenericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ortho::IdentityCheckFailed& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const ortho::NonIntegralResult& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const ortho::NonFloralPoint& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 3;
    } catch (const ortho::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
