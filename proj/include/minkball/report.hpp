#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace minkball {

// Side-by-side audit of published figures that do not reproduce from the
// formulas they accompany, plus the sublattice-index reading of the
// optimal packing construction.
struct DiscrepancyReport {
    // (a) area of D_3
    double published_volume_d3 = 0.0;   // 3.5200
    double formula_volume_d3 = 0.0;     // 4 Gamma(4/3)^2 / Gamma(5/3)

    // (b) hexagon area at p = 3
    double published_gamma_h_d3 = 0.0;  // 3.3310
    double area_at_stated_inputs = 0.0; // A(sigma = 7^(1/6), tau = 0.12)
    double stated_tau = 0.0;
    double stated_sigma = 0.0;
    double area_constrained = 0.0;      // A at the solved tau for that sigma
    double hexagon_max_numeric = 0.0;   // free inscribed maximum

    // (c) the published covering density as a pure division
    double published_division = 0.0;    // 3.5200 / 3.3310
    double published_density_d3 = 0.0;  // 1.0567

    // (d) index-two sublattice audit at p = 3
    struct SublatticeAudit {
        std::string description;
        double det = 0.0;
        bool packs = false;
    };
    std::vector<SublatticeAudit> sublattice_audit;
    double required_packing_det = 0.0;  // Delta(2 D_p) = 4 Delta(D_p)
};

DiscrepancyReport build_discrepancy_report();

nlohmann::json report_json(const DiscrepancyReport& r);
std::string report_text(const DiscrepancyReport& r);

}  // namespace minkball
