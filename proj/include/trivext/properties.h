#pragma once

#include <string>
#include <vector>

namespace trivext::properties {

struct PropertyResult {
    std::string name;
    int cases = 0;
    /* Cases where the inequality or equality was certified. */
    int certified = 0;
    int failures = 0;
    std::string first_failure;
    bool ok(int min_cases) const { return failures == 0 && cases >= min_cases; }
    std::string str() const;
};

struct PropertyOptions {
    int cases = 100;
    unsigned seed = 20240601u;
};

PropertyResult differentials_and_chain_maps(const PropertyOptions& opt = {});
PropertyResult shift_laws(const PropertyOptions& opt = {});
PropertyResult triangle_bound(const PropertyOptions& opt = {});
PropertyResult avramov_foxby(const PropertyOptions& opt = {});
PropertyResult duality(const PropertyOptions& opt = {});
PropertyResult stabilization_soundness(const PropertyOptions& opt = {});
PropertyResult replacement_independence(const PropertyOptions& opt = {});
PropertyResult iwanaga_equivalence(const PropertyOptions& opt = {});
/* Runs on every corpus entry with IG base and asid 1 on both sides. */
PropertyResult asid_reduction(const PropertyOptions& opt = {});

std::vector<PropertyResult> all(const PropertyOptions& opt = {});

}  // namespace trivext::properties
