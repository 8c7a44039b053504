#pragma once

#include "homcat/dga.hpp"
#include "homcat/json_io.hpp"
#include "homcat/oracle.hpp"
#include "homcat/presets.hpp"
#include "homcat/tilting.hpp"

namespace homcat {

struct SuiteOptions {
    PresetId id = PresetId::example1;
    PresetParams params;
    FieldSpec field = FieldSpec::rationals();
    std::string fixtures_dir; // empty disables fixture comparison
};

struct SuiteResult {
    json report;
    bool pass = true;
};

// Full verification bundle for one preset instance; the report is
// byte-stable across runs on equal inputs.
SuiteResult run_suite(const SuiteOptions& options);

// Shared report builders.
json profile_to_json(const std::vector<std::pair<int, std::vector<int>>>& profile);
json end_algebra_report(const GradedEndAlgebra& e, bool with_fingerprint);
json relation_report_to_json(const RelationReport& r, bool include_certificates);
int cartan_min_entry(const IntMat& m);
bool degree0_subalgebra_matches(const GradedEndAlgebra& graded, const GradedEndAlgebra& degree0);

struct DgaCheck {
    json report;
    bool pass = true;
};
// dim H^i(rhom) vs dim hom_k(C, C, i) for every window degree, plus the
// block degree pattern grouped by the given split.
DgaCheck dga_crosscheck(const ProjComplex& c, const std::vector<ProjComplex>& split_pieces);

// Cartan matrix of the (graded or ungraded) end algebra of the preset's
// summand list recomputed by the brute-force oracle; requires a prime field.
IntMat oracle_cartan(const PresetInstance& inst, bool graded, std::uint64_t bound = (1ull << 24));

std::string fixture_filename(PresetId id, const PresetParams& p);

} // namespace homcat
