#include "minkball/emit.hpp"

#include <cmath>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>

namespace minkball {

using nlohmann::json;

namespace emit {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    // keep 12 significant digits when they reparse exactly, otherwise use
    // the shortest round-tripping form
    if (std::strtod(buf, nullptr) == v) return buf;
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string to_csv(const Table& t) {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    append_row(t.header);
    for (const auto& row : t.rows) append_row(row);
    return out;
}

std::string to_text(const Table& t) {
    std::vector<size_t> width(t.header.size(), 0);
    auto widen = [&width](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    widen(t.header);
    for (const auto& row : t.rows) widen(row);

    std::string out;
    auto append_row = [&](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += "  ";
            out += cells[i];
            if (i + 1 < cells.size()) out.append(width[i] - cells[i].size(), ' ');
        }
        out += '\n';
    };
    append_row(t.header);
    for (const auto& row : t.rows) append_row(row);
    return out;
}

json envelope(const std::string& command, const json& params, const json& data) {
    return json{{"meta", {{"version", "0.1.0"}, {"command", command}, {"params", params}}},
                {"data", data}};
}

}  // namespace emit

namespace {

std::string ff(double v) { return emit::format_float(v); }

}  // namespace

void to_json(json& j, const ConstantsRecord& r) {
    j = json{{"p", r.p},           {"regime", r.regime},    {"sigma_p", r.sigma_p},
             {"tau_p", r.tau_p},   {"delta0", r.delta0},    {"delta1", r.delta1},
             {"delta_crit", r.delta_crit}, {"volume", r.volume}, {"davis_p0", r.davis_p0}};
    // JSON has no literal for the limit exponent
    if (std::isinf(r.p)) j["p"] = "inf";
}

void to_json(json& j, const ModuliRow& r) {
    j = json{{"p", r.p},         {"sigma", r.sigma}, {"tau", r.tau},
             {"delta", r.delta}, {"A", r.area},      {"residual", r.residual}};
}

void to_json(json& j, const ShellRow& r) {
    j = json{{"p", r.p}, {"lattice_kind", r.lattice_kind}, {"idx", r.idx}, {"x", r.x}, {"y", r.y}};
}

void to_json(json& j, const HexagonRow& r) {
    json verts = json::array();
    for (const Vec2& q : r.v) verts.push_back(json{{"x", q.x}, {"y", q.y}});
    j = json{{"p", r.p}, {"kind", r.kind}, {"vertices", verts}, {"area", r.area}};
}

void to_json(json& j, const PackingRecord& r) {
    j = json{{"p", r.p},
             {"m", r.m},
             {"regime", r.regime},
             {"u", {{"x", r.u.x}, {"y", r.u.y}}},
             {"v", {{"x", r.v.x}, {"y", r.v.y}}},
             {"det", r.det},
             {"density", r.density},
             {"kissing", r.kissing},
             {"optimal", r.optimal}};
}

void to_json(json& j, const BoundsRecord& r) {
    j = json{{"p", r.p},
             {"sas_lower", r.sas_lower},
             {"i_min_lower", r.i_min_lower},
             {"trivial_upper", r.trivial_upper},
             {"min_A", r.min_a},
             {"i_min_A", r.i_min_a},
             {"hexagon_max", r.hexagon_max},
             {"covering_density", r.covering_density},
             {"better_lower", r.better_lower}};
}

void to_json(json& j, const CountRecord& r) {
    j = json{{"n", r.n}, {"c", r.c}, {"m", r.m}, {"box", r.box}, {"count", r.count}};
}

void to_json(json& j, const PointRow& r) {
    j = json{{"n", r.n},   {"c", r.c},           {"lambda", r.lambda},
             {"idx", r.idx}, {"x", r.x},         {"projected", r.projected}};
}

void to_json(json& j, const MatroidRecord& r) {
    json metric = json::array();
    for (const auto& [basis, value] : r.metric)
        metric.push_back(json{{"basis", basis}, {"value", value}});
    j = json{{"ground", r.ground},
             {"rank", r.rank},
             {"independents", r.independents},
             {"bases", r.bases},
             {"circuits", r.circuits},
             {"flats", r.flats},
             {"axioms", {{"im", r.im_ok}, {"cm", r.cm_ok}, {"fm", r.fm_ok}}},
             {"metric", metric},
             {"note", r.note}};
}

void to_json(json& j, const CurveRecord& r) {
    j = json{{"op", r.op}, {"params", r.params}, {"value", r.value}};
}

void to_json(json& j, const SweepMaxRow& r) {
    j = json{{"p", r.p},
             {"sigma_at_max", r.sigma_at_max},
             {"A_max", r.area_max},
             {"hexagon_max", r.hexagon_max}};
}

namespace emit {

Table to_table(const std::vector<ConstantsRecord>& rs) {
    Table t;
    t.header = {"p",      "regime", "sigma_p",    "tau_p",  "delta0",
                "delta1", "delta_crit", "volume", "davis_p0"};
    for (const auto& r : rs)
        t.rows.push_back({ff(r.p), r.regime, ff(r.sigma_p), ff(r.tau_p), ff(r.delta0),
                          ff(r.delta1), ff(r.delta_crit), ff(r.volume), ff(r.davis_p0)});
    return t;
}

Table to_table(const std::vector<ModuliRow>& rs) {
    Table t;
    t.header = {"p", "sigma", "tau", "delta", "A", "residual"};
    for (const auto& r : rs)
        t.rows.push_back({ff(r.p), ff(r.sigma), ff(r.tau), ff(r.delta), ff(r.area), ff(r.residual)});
    return t;
}

Table to_table(const std::vector<ShellRow>& rs) {
    Table t;
    t.header = {"p", "lattice_kind", "idx", "x", "y"};
    for (const auto& r : rs)
        t.rows.push_back({ff(r.p), r.lattice_kind, std::to_string(r.idx), ff(r.x), ff(r.y)});
    return t;
}

Table to_table(const std::vector<HexagonRow>& rs) {
    Table t;
    t.header = {"p",   "kind", "v1x", "v1y", "v2x", "v2y", "v3x", "v3y",
                "v4x", "v4y",  "v5x", "v5y", "v6x", "v6y", "area"};
    for (const auto& r : rs) {
        std::vector<std::string> row{ff(r.p), r.kind};
        for (const Vec2& q : r.v) {
            row.push_back(ff(q.x));
            row.push_back(ff(q.y));
        }
        row.push_back(ff(r.area));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table to_table(const std::vector<PackingRecord>& rs) {
    Table t;
    t.header = {"p",  "m",   "regime",  "ux",      "uy",      "vx",
                "vy", "det", "density", "kissing", "optimal"};
    for (const auto& r : rs)
        t.rows.push_back({ff(r.p), std::to_string(r.m), r.regime, ff(r.u.x), ff(r.u.y), ff(r.v.x),
                          ff(r.v.y), ff(r.det), ff(r.density), std::to_string(r.kissing),
                          r.optimal ? "true" : "false"});
    return t;
}

Table to_table(const std::vector<BoundsRecord>& rs) {
    Table t;
    t.header = {"p",       "sas_lower",   "i_min_lower",      "trivial_upper", "min_A",
                "i_min_A", "hexagon_max", "covering_density", "better_lower"};
    for (const auto& r : rs)
        t.rows.push_back({ff(r.p), ff(r.sas_lower), ff(r.i_min_lower), ff(r.trivial_upper),
                          ff(r.min_a), ff(r.i_min_a), ff(r.hexagon_max), ff(r.covering_density),
                          r.better_lower});
    return t;
}

Table to_table(const std::vector<CountRecord>& rs) {
    Table t;
    t.header = {"n", "c", "m", "box", "count"};
    for (const auto& r : rs)
        t.rows.push_back({std::to_string(r.n), ff(r.c), std::to_string(r.m),
                          std::to_string(r.box), std::to_string(r.count)});
    return t;
}

Table to_table(const std::vector<PointRow>& rs) {
    Table t;
    t.header = {"n", "c", "lambda", "idx", "x1", "x2", "x3", "x4", "p1", "p2", "p3", "p4"};
    for (const auto& r : rs) {
        std::vector<std::string> row{std::to_string(r.n), ff(r.c), std::to_string(r.lambda),
                                     std::to_string(r.idx)};
        for (size_t i = 0; i < 4; ++i) row.push_back(i < r.x.size() ? ff(r.x[i]) : "");
        for (size_t i = 0; i < 4; ++i) row.push_back(i < r.projected.size() ? ff(r.projected[i]) : "");
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table to_table(const std::vector<SweepMaxRow>& rs) {
    Table t;
    t.header = {"p", "sigma_at_max", "A_max", "hexagon_max"};
    for (const auto& r : rs)
        t.rows.push_back({ff(r.p), ff(r.sigma_at_max), ff(r.area_max), ff(r.hexagon_max)});
    return t;
}

}  // namespace emit

}  // namespace minkball
