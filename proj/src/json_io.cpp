#include "tropcomm/json_io.hpp"

#include "tropcomm/errors.hpp"

namespace tropcomm {

using nlohmann::json;

namespace {

json value_to_json(const ExtReal& v) { return to_string(v); }

ExtReal value_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("json", "matrix entries must be exact strings");
    return parse_ext_real(j.get<std::string>());
}

json rational_to_json(const Rational& v) { return to_string(v); }

} // namespace

json matrix_to_json(const TropMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(value_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

TropMatrix matrix_from_json(const json& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("json", "matrix object needs rows, cols and entries");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows <= 0 || cols <= 0) throw ParseError("json", "matrix size must be positive");
    const json& entries = j["entries"];
    if (static_cast<int>(entries.size()) != rows)
        throw ParseError("json", "entry row count mismatch");
    TropMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[i].size()) != cols)
            throw ParseError("json", "entry column count mismatch");
        for (int k = 0; k < cols; ++k) m.at(i, k) = value_from_json(entries[i][k]);
    }
    return m;
}

json winner_to_json(const Winner& w) {
    json entries = json::object();
    for (int i = 0; i < w.order(); ++i) {
        for (int j = 0; j < w.order(); ++j) {
            if (i == j) continue;
            const auto [w1, w2] = w.at(i, j);
            entries[std::to_string(i + 1) + "," + std::to_string(j + 1)] =
                json::array({w1 + 1, w2 + 1});
        }
    }
    return {{"n", w.order()}, {"entries", std::move(entries)}};
}

Winner winner_from_json(const json& j) {
    if (!j.contains("n")) throw ParseError("json", "winner object needs n");
    const int n = j["n"].get<int>();
    if (n <= 0) throw ParseError("json", "winner order must be positive");
    Winner w(n);
    if (!j.contains("entries")) return w;
    for (const auto& [key, val] : j["entries"].items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw ParseError("json", "winner key must be \"i,j\"");
        const int i = std::stoi(key.substr(0, comma));
        const int jj = std::stoi(key.substr(comma + 1));
        if (!val.is_array() || val.size() != 2)
            throw ParseError("json", "winner entry must be a pair");
        const int w1 = val[0].get<int>();
        const int w2 = val[1].get<int>();
        if (i < 1 || i > n || jj < 1 || jj > n || w1 < 1 || w1 > n || w2 < 1 || w2 > n)
            throw ParseError("json", "winner indices out of range");
        w.set(i - 1, jj - 1, {w1 - 1, w2 - 1});
    }
    return w;
}

json system_to_json(const DiffConstraintSystem& s) {
    json bounds = json::array();
    const TropMatrix& h = s.bounds_matrix();
    for (int i = 0; i < h.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < h.cols(); ++k) row.push_back(value_to_json(h.at(i, k)));
        bounds.push_back(std::move(row));
    }
    return {{"nvars", s.nvars()},
            {"vars", s.var_names()},
            {"bounds", std::move(bounds)}};
}

DiffConstraintSystem system_from_json(const json& j) {
    if (!j.contains("vars") || !j.contains("bounds"))
        throw ParseError("json", "system object needs vars and bounds");
    std::vector<std::string> names = j["vars"].get<std::vector<std::string>>();
    const json& rows = j["bounds"];
    const int m = static_cast<int>(names.size()) + 1;
    if (static_cast<int>(rows.size()) != m)
        throw ParseError("json", "bounds must be (nvars+1) x (nvars+1)");
    TropMatrix bounds(m, m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[i].size()) != m)
            throw ParseError("json", "bounds must be (nvars+1) x (nvars+1)");
        for (int k = 0; k < m; ++k) bounds.at(i, k) = value_from_json(rows[i][k]);
    }
    return DiffConstraintSystem(bounds, std::move(names));
}

json commute_report_to_json(const CommutationReport& r, std::size_t witness_cap) {
    json out = {{"commutes", r.commutes}};
    if (r.commutes) {
        out["product"] = matrix_to_json(*r.product);
        out["in_omega_a"] = r.in_omega_A;
        out["in_omega_prime"] = r.in_omega_prime;
        out["witness_count"] = r.witnesses.count().str();
        out["first_witness"] = winner_to_json(r.witnesses.first());
        if (const auto all = r.witnesses.expand(witness_cap)) {
            json list = json::array();
            for (const Winner& w : *all) list.push_back(winner_to_json(w));
            out["witnesses"] = std::move(list);
        }
    }
    return out;
}

json section_to_json(const SpanSection& s) {
    json gens = json::array();
    for (const Point2& g : s.generators)
        gens.push_back(json::array({rational_to_json(g.x), rational_to_json(g.y)}));
    json cells = json::array();
    for (const SectionCell& c : s.cells) {
        json verts = json::array();
        for (const Point2& p : c.vertices)
            verts.push_back(json::array({rational_to_json(p.x), rational_to_json(p.y)}));
        cells.push_back({{"dim", c.dim}, {"vertices", std::move(verts)}});
    }
    return {{"generators", std::move(gens)}, {"cells", std::move(cells)}};
}

json span_membership_to_json(const SpanMembership& m) {
    json lambda = json::array();
    for (const Rational& v : m.coefficients) lambda.push_back(rational_to_json(v));
    json proj = json::array();
    for (const Rational& v : m.projection) proj.push_back(rational_to_json(v));
    return {{"member", m.member},
            {"coefficients", std::move(lambda)},
            {"projection", std::move(proj)}};
}

json pq_report_to_json(const PqReport& r) {
    json out = {{"skipped", r.skipped}};
    if (r.skipped) return out;
    out["p_clause_pass"] = r.p_clause_pass;
    out["p_product"] = matrix_to_json(r.p_product);
    out["q_clause_applicable"] = r.q_clause_applicable;
    if (r.q_clause_applicable) {
        out["q_clause_pass"] = r.q_clause_pass;
        out["q_product"] = matrix_to_json(r.q_product);
    }
    return out;
}

json grid_report_to_json(const GridOracleReport& r) {
    return {{"total", r.total},
            {"commuting", r.commuting},
            {"omega_a", r.omega_a},
            {"omega_prime", r.omega_prime},
            {"winners_checked", r.winners_checked},
            {"ok", r.ok()},
            {"violations", r.violations}};
}

} // namespace tropcomm
