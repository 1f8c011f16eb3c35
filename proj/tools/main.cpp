#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropcomm/commutant.hpp"
#include "tropcomm/errors.hpp"
#include "tropcomm/grid_oracle.hpp"
#include "tropcomm/json_io.hpp"
#include "tropcomm/matrix_io.hpp"
#include "tropcomm/perturb.hpp"
#include "tropcomm/polytope.hpp"
#include "tropcomm/reference_suite.hpp"
#include "tropcomm/sampling.hpp"
#include "tropcomm/section.hpp"
#include "tropcomm/span.hpp"
#include "tropcomm/svg.hpp"

namespace {

using namespace tropcomm;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "text"; // or "json"
    std::string path;            // empty = stdout

    void emit(const json& j, const std::string& text) const {
        std::ostringstream body;
        if (format == "json")
            body << j.dump(2) << '\n';
        else
            body << text;
        if (path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw TropError("cannot open output file: " + path);
            f << body.str();
        }
    }
};

TropMatrix load(const std::string& path) { return read_matrix_file(path); }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    for (const std::string& p : split(s, ',')) out.push_back(parse_rational(p));
    return out;
}

std::vector<ExtReal> parse_ext_list(const std::string& s) {
    std::vector<ExtReal> out;
    for (const std::string& p : split(s, ',')) out.push_back(parse_ext_real(p));
    return out;
}

std::uint64_t env_seed() {
    if (const char* e = std::getenv("TROPCOMM_SEED")) {
        try {
            return std::stoull(e);
        } catch (const std::exception&) {
            throw ParseError("TROPCOMM_SEED", "not an unsigned integer");
        }
    }
    return 12345;
}

int print_matrix_result(const Output& out, const TropMatrix& m) {
    out.emit(matrix_to_json(m), format_matrix(m));
    return kExitOk;
}

Winner winner_from_flags(int n, bool transposition, const std::string& winner_path) {
    if (!winner_path.empty()) {
        std::ifstream f(winner_path);
        if (!f) throw ParseError(winner_path, "cannot open winner file");
        json j;
        f >> j;
        Winner w = winner_from_json(j);
        if (w.order() != n) throw DimensionMismatch("winner order does not match the matrix");
        return w;
    }
    return transposition ? Winner::transposition_map(n) : Winner::identity_map(n);
}

json system_report(const DiffConstraintSystem& sys, std::uint64_t seed) {
    json j;
    j["system"] = system_to_json(sys);
    const auto tight = tighten(sys);
    j["empty"] = !tight.has_value();
    if (tight) {
        j["tight"] = system_to_json(*tight);
        j["dim"] = polytope_dim(*tight);
        if (const auto pt = sample_point(sys, seed)) {
            json coords = json::array();
            for (const ExtReal& v : *pt) coords.push_back(to_string(v));
            j["sample"] = std::move(coords);
        }
    }
    return j;
}

std::string system_text(const json& j) {
    std::ostringstream os;
    os << "empty: " << (j["empty"].get<bool>() ? "yes" : "no") << '\n';
    if (j.contains("dim")) os << "dim: " << j["dim"].get<int>() << '\n';
    if (j.contains("sample")) {
        os << "sample:";
        for (const auto& v : j["sample"]) os << ' ' << v.get<std::string>();
        os << '\n';
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact max-plus (tropical) commutant toolkit for normal matrices"};
    app.require_subcommand(1);

    Output out;
    std::uint64_t seed = 0;
    bool seed_given = false;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized subcommands")
        ->each([&](const std::string&) { seed_given = true; });

    // check-commute
    auto* cc = app.add_subcommand("check-commute", "decide AX = XA and report the witnesses");
    std::string cc_a, cc_x;
    cc->add_option("A", cc_a, "matrix file")->required();
    cc->add_option("X", cc_x, "matrix file")->required();

    // kleene / pow
    auto* kl = app.add_subcommand("kleene", "Kleene star of a normal matrix");
    std::string kl_a;
    kl->add_option("A", kl_a)->required();

    auto* pw = app.add_subcommand("pow", "tropical power of a normal matrix");
    std::string pw_a;
    int pw_k = 1;
    pw->add_option("A", pw_a)->required();
    pw->add_option("-k,--exponent", pw_k, "exponent, k >= 0")->required();

    // underline / overline / dim
    auto* un = app.add_subcommand("underline", "greatest X-independent lower bound matrix");
    std::string un_a;
    un->add_option("A", un_a)->required();

    auto* ov = app.add_subcommand("overline", "least matrix below every member of [A, ->)");
    std::string ov_a;
    ov->add_option("A", ov_a)->required();

    auto* dm = app.add_subcommand("dim", "dimension of the tight upper-set polytope");
    std::string dm_a;
    dm->add_option("A", dm_a)->required();

    // omega-w
    auto* ow = app.add_subcommand("omega-w", "alcoved cell of a winner map");
    std::string ow_a, ow_winner;
    bool ow_tr = false;
    ow->add_option("A", ow_a)->required();
    ow->add_option("--winner", ow_winner, "winner map JSON file");
    ow->add_flag("--transposition", ow_tr, "use the transposition map (default: identity)");

    // feasible
    auto* fe = app.add_subcommand("feasible", "tighten a constraint system JSON");
    std::string fe_sys;
    fe->add_option("system", fe_sys, "system JSON file")->required();

    // neigh-test
    auto* ng = app.add_subcommand("neigh-test", "sample the commuting boxes around I and 0");
    std::string ng_a;
    int ng_samples = 100;
    ng->add_option("A", ng_a)->required();
    ng->add_option("--samples", ng_samples, "draws per box")->check(CLI::PositiveNumber);

    // perturb family
    auto* pb = app.add_subcommand("perturb", "cyclic perturbation families");
    pb->require_subcommand(1);
    auto* pb_mp = pb->add_subcommand("make-p", "build P(-p,-eps)");
    auto* pb_mq = pb->add_subcommand("make-q", "build Q(-p,-eps)");
    std::string pb_p;
    std::string pb_eps = "0", pb_delta = "0";
    for (auto* sub : {pb_mp, pb_mq}) {
        sub->add_option("--p", pb_p, "comma-separated positive weights")->required();
        sub->add_option("--eps", pb_eps, "nonnegative magnitude");
    }
    auto* pb_ck = pb->add_subcommand("check", "verify the P/Q product identities");
    pb_ck->add_option("--p", pb_p, "comma-separated positive weights")->required();
    pb_ck->add_option("--delta", pb_delta, "nonnegative magnitude")->required();
    pb_ck->add_option("--eps", pb_eps, "nonnegative magnitude")->required();
    auto* pb_bx = pb->add_subcommand("box-pair", "sample a commuting pair from [2r, r]");
    std::string pb_r = "-1";
    int pb_n = 3;
    pb_bx->add_option("--r", pb_r, "negative box parameter")->required();
    pb_bx->add_option("-n,--order", pb_n)->check(CLI::PositiveNumber);

    // span
    auto* sm = app.add_subcommand("span-member", "residuation membership test");
    std::string sm_a, sm_point;
    sm->add_option("A", sm_a)->required();
    sm->add_option("--point", sm_point, "comma-separated coordinates")->required();

    auto* sc = app.add_subcommand("span-contains", "is every column of B in span(A)?");
    std::string sc_a, sc_b;
    sc->add_option("A", sc_a)->required();
    sc->add_option("B", sc_b)->required();

    // render
    auto* rd = app.add_subcommand("render", "render 3x3 span sections side by side as SVG");
    std::vector<std::string> rd_inputs, rd_labels;
    std::string rd_out;
    rd->add_option("matrices", rd_inputs, "matrix files")->required();
    rd->add_option("-o,--output", rd_out, "output SVG path")->required();
    rd->add_option("--labels", rd_labels, "panel captions");

    // grid-oracle
    auto* gr = app.add_subcommand("grid-oracle", "exhaustive commutant check over a grid");
    std::string gr_a, gr_alpha = "0,-1,-2,-inf";
    std::uint64_t gr_cap = 10000000;
    gr->add_option("A", gr_a)->required();
    gr->add_option("--alphabet", gr_alpha, "comma-separated entries, must include 0");
    gr->add_option("--cap", gr_cap, "candidate count cap");

    // paper-suite
    auto* ps = app.add_subcommand("paper-suite", "run every built-in reference reproduction");

    // Let --format/--out/--seed appear after the subcommand too.
    for (CLI::App* sc : app.get_subcommands(nullptr)) {
        sc->fallthrough();
        for (CLI::App* nested : sc->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    if (!seed_given) seed = env_seed();

    try {
        if (cc->parsed()) {
            const CommutationReport r = commutes(load(cc_a), load(cc_x));
            std::ostringstream text;
            text << "commutes: " << (r.commutes ? "yes" : "no") << '\n';
            if (r.commutes) {
                text << "product:\n"
                     << format_matrix(*r.product) << "witnesses: " << r.witnesses.count().str()
                     << '\n';
            }
            out.emit(commute_report_to_json(r), text.str());
            return kExitOk;
        }
        if (kl->parsed()) return print_matrix_result(out, kleene_star(load(kl_a)));
        if (pw->parsed()) {
            if (pw_k < 0) throw DomainError("exponent must be >= 0");
            return print_matrix_result(out, mat_pow(load(pw_a), pw_k));
        }
        if (un->parsed()) return print_matrix_result(out, compute_underline(load(un_a)));
        if (ov->parsed()) return print_matrix_result(out, compute_overline(load(ov_a)));
        if (dm->parsed()) {
            const auto tight = tighten(upper_set_system(load(dm_a)));
            if (!tight) throw DomainError("upper-set system is empty");
            const int d = polytope_dim(*tight);
            out.emit(json{{"dim", d}}, "dim: " + std::to_string(d) + "\n");
            return kExitOk;
        }
        if (ow->parsed()) {
            const TropMatrix a = load(ow_a);
            const Winner w = winner_from_flags(a.rows(), ow_tr, ow_winner);
            json j = system_report(omega_w_system(a, w), seed);
            j["dim_bound"] = omega_w_dim_bound(w);
            j["quick_empty"] = omega_w_empty_quick(a, w);
            out.emit(j, system_text(j));
            return kExitOk;
        }
        if (fe->parsed()) {
            std::ifstream f(fe_sys);
            if (!f) throw ParseError(fe_sys, "cannot open system file");
            json in;
            f >> in;
            const json j = system_report(system_from_json(in), seed);
            out.emit(j, system_text(j));
            return j["empty"].get<bool>() ? kExitCheckFailed : kExitOk;
        }
        if (ng->parsed()) {
            const TropMatrix a = load(ng_a);
            SplitMix64 rng(seed);
            const auto [ilo, ihi] = neigh_identity_box(a);
            int bad = 0;
            for (int s = 0; s < ng_samples; ++s) {
                const TropMatrix b = sample_matrix_in_box(rng, ilo, ihi);
                if (mat_mul(a, b) != a || mat_mul(b, a) != a) ++bad;
            }
            int zbad = 0;
            const bool strict = is_strictly_normal(a);
            if (strict) {
                const auto [zlo, zhi] = neigh_zero_box(a);
                for (int s = 0; s < ng_samples; ++s) {
                    const TropMatrix b = sample_matrix_in_box(rng, zlo, zhi);
                    if (mat_mul(a, b) != b || mat_mul(b, a) != b) ++zbad;
                }
            }
            json j{{"samples", ng_samples},
                   {"identity_box_failures", bad},
                   {"strictly_normal", strict},
                   {"zero_box_failures", zbad}};
            std::ostringstream text;
            text << "identity box failures: " << bad << "/" << ng_samples << '\n';
            if (strict) text << "zero box failures: " << zbad << "/" << ng_samples << '\n';
            out.emit(j, text.str());
            return bad == 0 && zbad == 0 ? kExitOk : kExitCheckFailed;
        }
        if (pb_mp->parsed()) return print_matrix_result(out, make_p(parse_rational_list(pb_p),
                                                                    parse_rational(pb_eps)));
        if (pb_mq->parsed()) return print_matrix_result(out, make_q(parse_rational_list(pb_p),
                                                                    parse_rational(pb_eps)));
        if (pb_ck->parsed()) {
            const PqReport r = check_pq_theorem(
                {parse_rational_list(pb_p), parse_rational(pb_delta), parse_rational(pb_eps)});
            std::ostringstream text;
            if (r.skipped) {
                text << "skipped: delta + eps exceeds min p\n";
            } else {
                text << "p clause: " << (r.p_clause_pass ? "pass" : "FAIL") << '\n';
                if (r.q_clause_applicable)
                    text << "q clause: " << (r.q_clause_pass ? "pass" : "FAIL") << '\n';
            }
            out.emit(pq_report_to_json(r), text.str());
            const bool ok =
                r.skipped || (r.p_clause_pass && (!r.q_clause_applicable || r.q_clause_pass));
            return ok ? kExitOk : kExitCheckFailed;
        }
        if (pb_bx->parsed()) {
            const auto [a, b] = make_box_pair(parse_rational(pb_r), pb_n, seed);
            const TropMatrix m = mat_add(a, b);
            const bool ok = mat_mul(a, b) == m && mat_mul(b, a) == m;
            json j{{"a", matrix_to_json(a)},
                   {"b", matrix_to_json(b)},
                   {"product", matrix_to_json(m)},
                   {"commute", ok}};
            out.emit(j, "A:\n" + format_matrix(a) + "B:\n" + format_matrix(b) + "AB=BA:\n" +
                            format_matrix(m));
            return ok ? kExitOk : kExitCheckFailed;
        }
        if (sm->parsed()) {
            const SpanMembership m = span_member(load(sm_a), parse_rational_list(sm_point));
            std::ostringstream text;
            text << "member: " << (m.member ? "yes" : "no") << '\n';
            out.emit(span_membership_to_json(m), text.str());
            return kExitOk;
        }
        if (sc->parsed()) {
            const SpanContainment r = span_contains(load(sc_a), load(sc_b));
            json j{{"contained", r.contained}};
            std::ostringstream text;
            text << "contained: " << (r.contained ? "yes" : "no") << '\n';
            if (!r.contained) {
                j["failing_column"] = r.failing_column + 1;
                j["failing_detail"] = span_membership_to_json(r.failing_detail);
                text << "failing column: " << r.failing_column + 1 << '\n';
            }
            out.emit(j, text.str());
            return kExitOk;
        }
        if (rd->parsed()) {
            std::vector<SpanSection> sections;
            for (const std::string& path : rd_inputs)
                sections.push_back(section_complex(load(path)));
            RenderOptions opts;
            opts.labels = rd_labels;
            write_svg_file(rd_out, sections, opts);
            out.emit(json{{"written", rd_out}, {"panels", sections.size()}},
                     "wrote " + rd_out + "\n");
            return kExitOk;
        }
        if (gr->parsed()) {
            const GridOracleReport r =
                run_grid_oracle(load(gr_a), parse_ext_list(gr_alpha), gr_cap);
            std::ostringstream text;
            text << "candidates: " << r.total << "\ncommuting: " << r.commuting
                 << "\nproduct=A: " << r.omega_a << "\nproduct=X: " << r.omega_prime
                 << "\nwinners checked: " << r.winners_checked << '\n';
            for (const std::string& v : r.violations) text << "VIOLATION: " << v << '\n';
            text << (r.ok() ? "ok\n" : "violations found\n");
            out.emit(grid_report_to_json(r), text.str());
            return r.ok() ? kExitOk : kExitCheckFailed;
        }
        if (ps->parsed()) {
            const std::vector<SuiteCheck> checks = run_reference_suite();
            std::size_t passed = 0;
            std::ostringstream text;
            json rows = json::array();
            for (const SuiteCheck& c : checks) {
                if (c.pass) ++passed;
                text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.pass) text << ": " << c.detail;
                text << '\n';
                rows.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            }
            text << "suite: " << passed << "/" << checks.size() << " passed\n";
            out.emit(json{{"checks", rows}, {"passed", passed}, {"total", checks.size()}},
                     text.str());
            return passed == checks.size() ? kExitOk : kExitCheckFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TropError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
