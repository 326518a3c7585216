#pragma once

// The acceptance criteria as callable checks. The acceptance binary runs
// them at full size; the unit suite runs them at reduced sample counts.

#include <string>
#include <vector>

namespace testing_support {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

struct CriteriaSizes {
    int oracle_forms = 200;     // per stratum and field
    int reducible_forms = 500;
    int action_pairs = 300;     // per field
    int generic_samples = 500;  // per stratum
};

CriterionResult criterion_genus3_form();
CriterionResult criterion_two_lines_form();
CriterionResult criterion_small_genus_forms();
CriterionResult criterion_cusp_limit();
CriterionResult criterion_classification_oracles(const CriteriaSizes& sizes);
CriterionResult criterion_adjunction();
CriterionResult criterion_bidegree_bound(const CriteriaSizes& sizes);
CriterionResult criterion_group_action(const CriteriaSizes& sizes);
CriterionResult criterion_picard();
CriterionResult criterion_strata(const CriteriaSizes& sizes);

std::vector<CriterionResult> run_all_criteria(const CriteriaSizes& sizes);

}  // namespace testing_support
