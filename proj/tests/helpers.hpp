#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orthotope/census.hpp"
#include "orthotope/class_table.hpp"
#include "orthotope/ehrhart.hpp"
#include "orthotope/io.hpp"
#include "orthotope/voxel_set.hpp"

namespace testutil {

inline std::string data_path(const std::string& name) {
    return std::string(ORTHOTOPE_TESTDATA_DIR "/") + name;
}

inline ortho::VoxelSet planar_example() {
    return ortho::read_voxels_file(data_path("example2d.txt"));
}

inline ortho::VoxelSet spatial_example() {
    return ortho::read_voxels_file(data_path("example3d.txt"));
}

// Encoding-keyed views of the id-keyed structures, so expected values can be
// written out legibly.
using RowByName = std::map<std::string, std::int64_t>;
using TableByName = std::map<std::string, RowByName>;
using CensusByDim = std::map<std::pair<std::string, int>, std::int64_t>;
using CensusByDirs = std::map<std::pair<std::string, unsigned>, std::int64_t>;
using PolyByName = std::map<std::string, std::vector<std::int64_t>>;
using DirPolyByName = std::map<std::string, std::map<unsigned, std::int64_t>>;

inline RowByName named_row(const ortho::ClassTable& t, const ortho::IntRow& row) {
    RowByName out;
    for (const auto& [id, v] : row) out[t.diagram(id).encoding()] = v;
    return out;
}

inline CensusByDim named_census(const ortho::ClassTable& t,
                                const ortho::CellCensus& c) {
    CensusByDim out;
    for (const auto& [key, v] : c.dim_counts())
        out[{t.diagram(key.first).encoding(), key.second}] = v;
    return out;
}

inline CensusByDirs named_directions(const ortho::ClassTable& t,
                                     const ortho::CellCensus& c) {
    CensusByDirs out;
    for (const auto& [key, v] : c.direction_counts())
        out[{t.diagram(key.first).encoding(), key.second}] = v;
    return out;
}

inline PolyByName named_poly(const ortho::ClassTable& t,
                             const ortho::ClassPolynomial& p) {
    PolyByName out;
    for (const auto& [id, coeffs] : p.rows())
        out[t.diagram(id).encoding()] = coeffs;
    return out;
}

inline DirPolyByName named_dir_poly(const ortho::ClassTable& t,
                                    const ortho::DirectionalPolynomial& p) {
    DirPolyByName out;
    for (const auto& [id, terms] : p.rows()) {
        std::map<unsigned, std::int64_t> named;
        for (const auto& [dirs, v] : terms)
            if (v != 0) named[dirs] = v;
        if (!named.empty()) out[t.diagram(id).encoding()] = named;
    }
    return out;
}

inline RowByName named_counts(const ortho::ClassTable& t,
                              const std::map<ortho::ClassId, std::int64_t>& m) {
    RowByName out;
    for (const auto& [id, v] : m)
        if (v != 0) out[t.diagram(id).encoding()] = v;
    return out;
}

}  // namespace testutil

#ifdef ORTHOTOPE_CLI_PATH
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace testutil {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Run the installed CLI with a shell argument string; capture exit code and
// both streams.  Scratch files are keyed by pid so parallel test binaries in
// the same directory cannot collide.
inline RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string tag =
        std::to_string(::getpid()) + "_" + std::to_string(counter++);
    std::string out_path = "cli_out_" + tag + ".txt";
    std::string err_path = "cli_err_" + tag + ".txt";
    std::string cmd = std::string(ORTHOTOPE_CLI_PATH) + " " + args + " > " +
                      out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    if (status >= 0 && WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

}  // namespace testutil
#endif
