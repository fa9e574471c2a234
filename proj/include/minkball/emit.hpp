#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "minkball/numerics.hpp"

namespace minkball {

// ---- record types shared by the CLI and the serialization tests ----

struct ConstantsRecord {
    double p = 0.0;
    std::string regime;
    double sigma_p = 0.0;
    double tau_p = 0.0;
    double delta0 = 0.0;
    double delta1 = 0.0;
    double delta_crit = 0.0;
    double volume = 0.0;
    double davis_p0 = 0.0;
};

struct ModuliRow {
    double p = 0.0, sigma = 0.0, tau = 0.0, delta = 0.0, area = 0.0, residual = 0.0;
};

struct ShellRow {
    double p = 0.0;
    std::string lattice_kind;  // "lambda0" | "lambda1"
    int idx = 0;
    double x = 0.0, y = 0.0;
};

struct HexagonRow {
    double p = 0.0;
    std::string kind;  // "inscribed-al" | "inscribed-free" | "circumscribed"
    std::array<Vec2, 6> v{};
    double area = 0.0;
};

struct PackingRecord {
    double p = 0.0;
    int m = 0;
    std::string regime;
    Vec2 u, v;
    double det = 0.0;
    double density = 0.0;
    int kissing = 0;
    bool optimal = false;
};

struct BoundsRecord {
    double p = 0.0;
    double sas_lower = 0.0;
    double i_min_lower = 0.0;
    double trivial_upper = 0.0;
    double min_a = 0.0;
    double i_min_a = 0.0;
    double hexagon_max = 0.0;
    double covering_density = 0.0;
    std::string better_lower;  // which lower bound is larger at this p
};

struct CountRecord {
    int n = 0;
    double c = 0.0;
    long long m = 0;
    long long box = 0;
    long long count = 0;
};

struct PointRow {
    int n = 0;
    double c = 0.0;
    long long lambda = 1;
    int idx = 0;
    std::vector<double> x;          // integer vector
    std::vector<double> projected;  // lambda^(-1/c) x
};

struct MatroidRecord {
    std::vector<std::string> ground;
    int rank = 0;
    std::vector<std::vector<std::string>> independents;
    std::vector<std::vector<std::string>> bases;
    std::vector<std::vector<std::string>> circuits;
    std::vector<std::vector<std::string>> flats;
    bool im_ok = false, cm_ok = false, fm_ok = false;
    // basis -> cell area/volume; empty unless the matroid is metrized
    std::vector<std::pair<std::vector<std::string>, double>> metric;
    std::string note;
};

struct CurveRecord {
    std::string op;
    nlohmann::json params;
    nlohmann::json value;
};

struct SweepMaxRow {
    double p = 0.0, sigma_at_max = 0.0, area_max = 0.0, hexagon_max = 0.0;
};

void to_json(nlohmann::json& j, const ConstantsRecord& r);
void to_json(nlohmann::json& j, const ModuliRow& r);
void to_json(nlohmann::json& j, const ShellRow& r);
void to_json(nlohmann::json& j, const HexagonRow& r);
void to_json(nlohmann::json& j, const PackingRecord& r);
void to_json(nlohmann::json& j, const BoundsRecord& r);
void to_json(nlohmann::json& j, const CountRecord& r);
void to_json(nlohmann::json& j, const PointRow& r);
void to_json(nlohmann::json& j, const MatroidRecord& r);
void to_json(nlohmann::json& j, const CurveRecord& r);
void to_json(nlohmann::json& j, const SweepMaxRow& r);

namespace emit {

// 12 significant digits; falls back to the shortest round-tripping form
// when 12 digits do not reparse to the same double. Locale-independent.
std::string format_float(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);   // comma-separated, LF endings
std::string to_text(const Table& t);  // aligned columns

Table to_table(const std::vector<ConstantsRecord>& rs);
Table to_table(const std::vector<ModuliRow>& rs);
Table to_table(const std::vector<ShellRow>& rs);
Table to_table(const std::vector<HexagonRow>& rs);
Table to_table(const std::vector<PackingRecord>& rs);
Table to_table(const std::vector<BoundsRecord>& rs);
Table to_table(const std::vector<CountRecord>& rs);
Table to_table(const std::vector<PointRow>& rs);
Table to_table(const std::vector<SweepMaxRow>& rs);

/// {"meta": {"version", "command", "params"}, "data": ...}
nlohmann::json envelope(const std::string& command, const nlohmann::json& params,
                        const nlohmann::json& data);

}  // namespace emit
}  // namespace minkball
