#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "orthotope/ehrhart.hpp"
#include "orthotope/oracle.hpp"

namespace ortho {

/// Read a voxel set from either supported syntax, sniffed by the first
/// non-space character:
///
///   text          "dim 2" on the first line, then one voxel per line as
///                 whitespace-separated integers; '#' starts a comment
///   json          {"dim": 2, "voxels": [[0, 0], [0, 1], ...]}
///
/// Throws ParseError on malformed input and the VoxelSet constructor errors
/// on invalid data.
VoxelSet read_voxels(std::istream& in);
VoxelSet read_voxels_file(const std::string& path);

/// Write the text syntax accepted by read_voxels.
void write_voxels_text(std::ostream& out, const VoxelSet& s);

enum class Format : std::uint8_t { Text, Csv, Json };

/// Everything the analysis pipeline computes for one solid.
struct Analysis {
    VoxelSet solid;
    CellCensus census;
    ClassPolynomial polynomial;
    FloralVector euler;
    std::int64_t characteristic;
    Valuations valuations;
    ReciprocityReport reciprocity;
    std::optional<DirectionalPolynomial> directional;
};

Analysis analyze(const VoxelSet& s, const ClassTable& table,
                 bool multivariable);

/// Which sections write_analysis renders.
struct Sections {
    bool census = true;
    bool ehrhart = true;
    bool euler = true;
    bool valuations = true;
    bool reciprocity = true;

    static Sections all() { return {}; }
    static Sections ehrhart_only() {
        return {false, true, false, false, false};
    }
    static Sections euler_only() { return {false, false, true, false, false}; }
};

void write_class_table(std::ostream& out, const ClassTable& table,
                       Format format);
void write_analysis(std::ostream& out, const Analysis& a,
                    const ClassTable& table, Format format,
                    const Sections& sections);

struct VerifyResult {
    int dim;
    std::size_t voxels;
    FormulaReport formula;
    OracleReport oracle;

    bool pass() const { return formula.pass() && oracle.pass(); }
};

VerifyResult run_verify(const VoxelSet& s, const ClassTable& table, int t_max);

/// As run_verify, but first damages one census entry; used as a negative
/// control to show the identity checks actually bite.
VerifyResult run_verify_corrupted(const VoxelSet& s, const ClassTable& table,
                                  int t_max);

void write_verify(std::ostream& out, const VerifyResult& v,
                  const ClassTable& table, Format format);

} // namespace ortho
