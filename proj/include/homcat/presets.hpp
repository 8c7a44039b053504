#pragma once

#include <optional>

#include "homcat/endalg.hpp"

namespace homcat {

enum class PresetId { example1, example2, example3, dga_section7 };

std::string preset_to_string(PresetId id);
std::optional<PresetId> preset_from_string(const std::string& name);

struct PresetParams {
    int n = 0, m = 0, s = 0;
};

// A fully wired worked example: base algebra, the complexes under study, the
// named generator chain maps, the relation suite, and which summands feed the
// endomorphism-algebra and exchange computations.
struct PresetInstance {
    PresetId id;
    PresetParams params;
    FieldSpec field;
    AlgebraPtr algebra;
    std::map<std::string, ProjComplex> complexes;
    std::map<std::string, ChainMap> generators;
    std::vector<Relation> relations;
    std::vector<std::string> end_summands;
    bool graded_end = true;
    std::string exchange_x;              // empty when the preset has no exchange wiring
    std::vector<std::string> exchange_m;

    const ProjComplex& complex(const std::string& name) const;
    std::vector<ProjComplex> summand_list() const;
};

// k[x]/(x^n), basis 1, x, .., x^{n-1}; local and symmetric.
AlgebraPtr truncated_poly(int n, FieldSpec field);
// k[x,y]/(x^n - y^s, xy), monomial basis 1, x..x^{n-1}, y..y^{s-1}, x^n.
AlgebraPtr dihedral_base(int n, int s, FieldSpec field);

// Two-term complex [e A -> e A] in degrees -1, 0 over a local algebra, with
// the given element as differential.
ProjComplex two_term_complex(const AlgebraPtr& a, const Vec& differential);

PresetInstance build_preset(PresetId id, PresetParams params,
                            FieldSpec field = FieldSpec::rationals());

} // namespace homcat
