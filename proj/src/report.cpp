#include "minkball/report.hpp"

#include <cmath>
#include <sstream>

#include "minkball/covering.hpp"
#include "minkball/emit.hpp"
#include "minkball/packing.hpp"

namespace minkball {

using nlohmann::json;

DiscrepancyReport build_discrepancy_report() {
    DiscrepancyReport r;

    r.published_volume_d3 = 3.5200;
    r.formula_volume_d3 = volume(3.0);

    r.published_gamma_h_d3 = 3.3310;
    r.stated_sigma = sigma_alpha(3.0, 2.0);  // 7^(1/6)
    r.stated_tau = 0.1200;
    r.area_at_stated_inputs = moduli_area_free(3.0, r.stated_sigma, r.stated_tau).area;
    r.area_constrained = moduli_area(3.0, r.stated_sigma);
    r.hexagon_max_numeric = max_inscribed_hexagon(3.0).area;

    r.published_division = r.published_volume_d3 / r.published_gamma_h_d3;
    r.published_density_d3 = 1.0567;

    // sublattice audit at p = 3: each of the three index-two sublattices of
    // the critical lattice has determinant 2*Delta, which cannot reach the
    // packing requirement Delta(2 D_p) = 4*Delta; only the dilated lattice
    // 2*Lambda does.
    const double p = 3.0;
    const LatticeBasis crit = critical_lattice_1(p);
    r.required_packing_det = 4.0 * crit.abs_det();
    const std::pair<const char*, Mat2i> subs[] = {
        {"index-2 sublattice (2u, v)", Mat2i{2, 0, 0, 1}},
        {"index-2 sublattice (u, 2v)", Mat2i{1, 0, 0, 2}},
        {"index-2 sublattice (u+v, 2v)", Mat2i{1, 1, 0, 2}},
        {"dilated lattice 2*Lambda (index 4)", Mat2i{2, 0, 0, 2}},
    };
    for (const auto& [desc, M] : subs) {
        const LatticeBasis sub = sublattice(crit, M);
        r.sublattice_audit.push_back({desc, sub.abs_det(), is_packing_lattice(p, 0, sub)});
    }
    return r;
}

json report_json(const DiscrepancyReport& r) {
    json audit = json::array();
    for (const auto& row : r.sublattice_audit)
        audit.push_back(json{{"lattice", row.description}, {"det", row.det}, {"packs", row.packs}});
    return json{
        {"volume_d3",
         {{"published", r.published_volume_d3}, {"formula", r.formula_volume_d3},
          {"difference", r.formula_volume_d3 - r.published_volume_d3}}},
        {"hexagon_area_d3",
         {{"published_gamma_h", r.published_gamma_h_d3},
          {"sigma", r.stated_sigma},
          {"tau", r.stated_tau},
          {"area_at_stated_inputs", r.area_at_stated_inputs},
          {"area_constrained_tau", r.area_constrained},
          {"hexagon_max_numeric", r.hexagon_max_numeric}}},
        {"covering_density_d3",
         {{"published_division", r.published_division},
          {"published_density", r.published_density_d3}}},
        {"index_two_audit", {{"required_det", r.required_packing_det}, {"lattices", audit}}}};
}

std::string report_text(const DiscrepancyReport& r) {
    using emit::format_float;
    std::ostringstream os;
    os << "discrepancy report\n";
    os << "==================\n\n";
    os << "(a) area of D_3\n";
    os << "    published value   " << format_float(r.published_volume_d3) << "\n";
    os << "    formula value     " << format_float(r.formula_volume_d3) << "\n";
    os << "    difference        " << format_float(r.formula_volume_d3 - r.published_volume_d3)
       << "\n\n";
    os << "(b) hexagon area at p = 3 (published gamma_h = "
       << format_float(r.published_gamma_h_d3) << ")\n";
    os << "    A at sigma = " << format_float(r.stated_sigma)
       << ", tau = " << format_float(r.stated_tau) << ":  "
       << format_float(r.area_at_stated_inputs) << "\n";
    os << "    A at the same sigma, constrained tau:       "
       << format_float(r.area_constrained) << "\n";
    os << "    free inscribed hexagon maximum:             "
       << format_float(r.hexagon_max_numeric) << "\n\n";
    os << "(c) covering density of D_3\n";
    os << "    published division " << format_float(r.published_volume_d3) << " / "
       << format_float(r.published_gamma_h_d3) << " = " << format_float(r.published_division)
       << "  (published as " << format_float(r.published_density_d3) << ")\n\n";
    os << "(d) index-two sublattice audit at p = 3 (packing needs det "
       << format_float(r.required_packing_det) << ")\n";
    for (const auto& row : r.sublattice_audit)
        os << "    " << row.description << ": det = " << format_float(row.det) << ", packs = "
           << (row.packs ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace minkball
