// Acceptance gate: ten end-to-end criteria, each reported on its own line.
// Sub-checks aggregate into a single verdict per criterion so the output
// stays one line per criterion; failures carry the offending piece's name.

#include <bit>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "doctest.h"
#include "goldens.hpp"
#include "helpers.hpp"
#include "orthotope/census.hpp"
#include "orthotope/class_table.hpp"
#include "orthotope/diagram.hpp"
#include "orthotope/ehrhart.hpp"
#include "orthotope/errors.hpp"
#include "orthotope/floral_vector.hpp"
#include "orthotope/oracle.hpp"

using namespace ortho;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;

    void expect(bool c, const std::string& what) {
        if (c) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int n, const char* label, Verdict& v, double elapsed,
            double budget) {
    v.expect(elapsed < budget, "exceeded " + std::to_string(budget) +
                                   "s time budget");
    std::printf("criterion %2d  %-58s %s  (%.2fs)\n", n, label,
                v.ok ? "PASS" : "FAIL", elapsed);
    std::fflush(stdout);
    CHECK_MESSAGE(v.ok, v.detail);
}

const ClassTable& table6() {
    static const ClassTable t(6);
    return t;
}

// Shared random corpus for criteria 6 and 8.
const std::vector<VoxelSet>& corpus() {
    static const std::vector<VoxelSet> c = [] {
        std::vector<VoxelSet> out;
        for (int seed = 1; seed <= 100; ++seed)
            out.push_back(random_generic(2, 6 + seed % 20,
                                         static_cast<std::uint64_t>(seed)));
        for (int seed = 1; seed <= 25; ++seed)
            out.push_back(random_generic(
                3, 6 + seed % 10, static_cast<std::uint64_t>(1000 + seed)));
        return out;
    }();
    return c;
}

}  // namespace

TEST_CASE("criterion 1: class enumeration counts") {
    Verdict v;
    auto start = Clock::now();
    std::vector<Diagram> classes = enumerate_classes(7);
    std::vector<int> per_dim(8, 0);
    for (const Diagram& d : classes)
        ++per_dim[static_cast<std::size_t>(d.dim())];
    const std::vector<int> want = {1, 1, 2, 4, 10, 24, 66, 180};
    v.expect(per_dim == want, "per-dimension counts wrong");
    v.expect(classes.size() == 288, "total count wrong");
    for (std::size_t i = 1; i < classes.size(); ++i)
        v.expect(classes[i - 1] < classes[i], "enumeration out of order");
    report(1, "class enumeration through dimension 7", v,
           seconds_since(start), 1.0);
}

TEST_CASE("criterion 2: interior-count table") {
    Verdict v;
    auto start = Clock::now();
    ClassTable t(4);
    auto check_rows = [&](const testutil::TableByName& want) {
        for (const auto& [enc, row] : want)
            v.expect(testutil::named_row(t, t.m_row(t.id_of(enc))) == row,
                     "h row " + enc);
    };
    check_rows(golden::h_rows_dim3());
    check_rows(golden::h_rows_dim4());
    report(2, "h rows match the published tables (dims <= 4)", v,
           seconds_since(start), 5.0);
}

TEST_CASE("criterion 3: inverse table") {
    Verdict v;
    auto start = Clock::now();
    ClassTable t(4);
    auto check_rows = [&](const testutil::TableByName& want) {
        for (const auto& [enc, row] : want)
            v.expect(testutil::named_row(t, t.s_row(t.id_of(enc))) == row,
                     "h^-1 row " + enc);
    };
    check_rows(golden::s_rows_dim3());
    check_rows(golden::s_rows_dim4());
    for (ClassId id = 0; id < t.size(); ++id) {
        FloralVector e = FloralVector::basis(t, id);
        v.expect(h(h_inverse(e)) == e && h_inverse(h(e)) == e,
                 "inverse composition at " + t.diagram(id).encoding());
    }
    report(3, "h^-1 rows match and invert h (dims <= 4)", v,
           seconds_since(start), 5.0);
}

TEST_CASE("criterion 4: planar worked example") {
    Verdict v;
    auto start = Clock::now();
    const ClassTable& t = table6();
    VoxelSet s = testutil::planar_example();
    CellCensus c = classify(s, t);
    v.expect(testutil::named_census(t, c) == golden::planar_census(),
             "census by dimension");
    v.expect(testutil::named_directions(t, c) == golden::planar_directions(),
             "census by direction set");
    ClassPolynomial p = class_ehrhart(c, t);
    v.expect(testutil::named_poly(t, p) == golden::planar_poly(),
             "class polynomials");
    v.expect(p.total() == golden::planar_total(), "total polynomial");
    v.expect(p.evaluate_total(1) == 37, "lattice points at t=1");
    FloralVector eu = euler_vector(p, c, t);
    for (const auto& [enc, want] : golden::planar_euler())
        v.expect(eu.coefficient(t.id_of(enc)) == Dyadic(want),
                 "euler coefficient of " + enc);
    v.expect(euler_characteristic(p) == 1, "euler characteristic");
    Valuations val = special_valuations(p, t);
    v.expect(val.vertex_count == 18 && val.edge_count == 18 &&
                 val.boundary_measure == 34 && val.volume == 19,
             "valuations");
    v.expect(reciprocity_check(p).pass, "reciprocity");
    DirectionalPolynomial dp = directional_ehrhart(c, t);
    v.expect(testutil::named_dir_poly(t, dp) ==
                 golden::planar_directional_poly(),
             "directional coefficients");
    report(4, "planar example reproduced in full", v, seconds_since(start),
           5.0);
}

TEST_CASE("criterion 5: spatial worked example") {
    Verdict v;
    auto start = Clock::now();
    const ClassTable& t = table6();
    VoxelSet s = testutil::spatial_example();
    CellCensus c = classify(s, t);
    v.expect(testutil::named_census(t, c) == golden::spatial_census(),
             "census by dimension");
    v.expect(testutil::named_directions(t, c) == golden::spatial_directions(),
             "census by direction set");
    ClassPolynomial p = class_ehrhart(c, t);
    v.expect(testutil::named_poly(t, p) == golden::spatial_poly(),
             "class polynomials");
    v.expect(p.total() == golden::spatial_total(), "total polynomial");
    FloralVector eu = euler_vector(p, c, t);
    for (const auto& [enc, want] : golden::spatial_euler())
        v.expect(eu.coefficient(t.id_of(enc)) == Dyadic(want),
                 "euler coefficient of " + enc);
    v.expect(eu.coefficient(kIdentityClass) == Dyadic(0),
             "euler identity coefficient");
    v.expect(euler_characteristic(p) == 0, "euler characteristic");
    DirectionalPolynomial dp = directional_ehrhart(c, t);
    v.expect(testutil::named_dir_poly(t, dp) ==
                 golden::spatial_directional_poly(),
             "directional coefficients");
    report(5, "spatial example reproduced in full", v, seconds_since(start),
           5.0);
}

TEST_CASE("criterion 6: coefficient identity across the corpus") {
    Verdict v;
    auto start = Clock::now();
    const ClassTable& t = table6();
    std::size_t solids = 0;
    auto run = [&](const VoxelSet& s, const std::string& name) {
        FormulaReport r = verify_class_formula(classify(s, t), t);
        v.expect(r.pass(), "coefficient identity failed on " + name);
        ++solids;
    };
    run(testutil::planar_example(), "the planar example");
    run(testutil::spatial_example(), "the spatial example");
    for (std::size_t i = 0; i < corpus().size(); ++i)
        run(corpus()[i], "corpus solid " + std::to_string(i));
    v.expect(solids == 127, "corpus size");
    report(6, "coefficient identity on 125 random + 2 worked solids", v,
           seconds_since(start), 60.0);
}

TEST_CASE("criterion 7: refinement count identity") {
    Verdict v;
    auto start = Clock::now();
    const ClassTable& t = table6();
    CellCensus pc = classify(testutil::planar_example(), t);
    auto [demo_lhs, demo_rhs] =
        refinement_count_check(pc, t.id_of("x"), 0, t);
    v.expect(demo_lhs == Dyadic(17) && demo_rhs == Dyadic(17),
             "worked value 17");
    for (const VoxelSet& s :
         {testutil::planar_example(), testutil::spatial_example()}) {
        CellCensus c = classify(s, t);
        for (int db = 0; db <= s.dim(); ++db)
            for (ClassId beta : t.classes_of_dim(db))
                for (int k = 0; k <= s.dim(); ++k) {
                    auto [lhs, rhs] = refinement_count_check(c, beta, k, t);
                    v.expect(lhs == rhs,
                             "mismatch at beta=" +
                                 t.diagram(beta).encoding() +
                                 ", k=" + std::to_string(k));
                }
    }
    report(7, "refinement count identity, all classes and degrees", v,
           seconds_since(start), 5.0);
}

TEST_CASE("criterion 8: oracle equivalence") {
    Verdict v;
    auto start = Clock::now();
    const ClassTable& t = table6();
    auto run = [&](const VoxelSet& s, const std::string& name) {
        OracleReport r = verify_against_formula(s, t, 4);
        v.expect(r.pass(), "oracle mismatch on " + name);
    };
    run(testutil::planar_example(), "the planar example");
    run(testutil::spatial_example(), "the spatial example");
    for (std::size_t i = 0; i < corpus().size(); ++i)
        run(corpus()[i], "corpus solid " + std::to_string(i));
    report(8, "direct counts match polynomials, uniform and not", v,
           seconds_since(start), 120.0);
}

TEST_CASE("criterion 9: algebra identity suite") {
    Verdict v;
    auto start = Clock::now();
    const ClassTable& t = table6();
    // the interior-count map is an algebra map
    for (ClassId a = 0; a < t.size(); ++a)
        for (ClassId b = 0; b < t.size(); ++b) {
            if (t.dim(a) + t.dim(b) > t.max_dim()) continue;
            FloralVector ea = FloralVector::basis(t, a);
            FloralVector eb = FloralVector::basis(t, b);
            v.expect(h(ea * eb) == h(ea) * h(eb),
                     "h not multiplicative at " + t.diagram(a).encoding() +
                         " x " + t.diagram(b).encoding());
        }
    for (ClassId id = 1; id < t.size(); ++id) {
        const Diagram& d = t.diagram(id);
        v.expect(complement(complement(d)) == d,
                 "complement involution at " + d.encoding());
        v.expect(mu(d) + mu(complement(d)) == std::int64_t{1} << d.dim(),
                 "orthant split at " + d.encoding());
    }
    for (ClassId id = 0; id < t.size(); ++id) {
        std::int64_t weighted = 0;
        for (const auto& [b, sv] : t.s_row(id))
            weighted += sv * (std::int64_t{1} << t.dim(b));
        v.expect(weighted == t.sigma(id),
                 "sign identity at " + t.diagram(id).encoding());
    }
    report(9, "multiplicativity, involution, and sign identities", v,
           seconds_since(start), 5.0);
}

TEST_CASE("criterion 10: negative controls") {
    Verdict v;
    auto start = Clock::now();
    testutil::RunResult bad =
        testutil::run_cli("analyze " + testutil::data_path("checkerboard.txt"));
    v.expect(bad.exit_code == 2, "checkerboard should exit 2");
    v.expect(bad.err.find("(1, 1)") != std::string::npos,
             "offending cell not named");
    testutil::RunResult corrupt = testutil::run_cli(
        "verify " + testutil::data_path("example2d.txt") +
        " --t-max 2 --corrupt-census");
    v.expect(corrupt.exit_code == 3, "corrupted census should exit 3");
    testutil::RunResult good = testutil::run_cli(
        "verify " + testutil::data_path("example2d.txt") + " --t-max 2");
    v.expect(good.exit_code == 0, "honest verify should exit 0");
    report(10, "non-generic input exits 2, corrupted census exits 3", v,
           seconds_since(start), 30.0);
}
