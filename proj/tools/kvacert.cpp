#include <CLI11.hpp>
#include <omp.h>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "kva/json_io.hpp"

using namespace kva;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitCapInsufficient = 3;

Int parse_int(const std::string& s) {
    try {
        return Int(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not an integer: '" + s + "'");
    }
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return make_rational(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return make_rational(num, den);
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

struct SurfaceFlags {
    std::string kind = "abelian";
    std::string d, L2;
    bool picard1 = false;
    std::string min_elliptic;  // integer or "simple"
    bool very_general = false;
    std::string eps1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--surface", kind, "surface model")
            ->check(CLI::IsMember({"abelian", "ktrivial"}));
        cmd->add_option("--d", d, "polarization type (1,d) of the abelian surface");
        cmd->add_option("--L2", L2, "self-intersection of the ample generator (K-trivial model)");
        cmd->add_flag("--picard1", picard1, "assume Picard rank one");
        cmd->add_option("--min-elliptic-degree", min_elliptic,
                        "asserted minimal elliptic-curve degree, or 'simple' for none at all");
        cmd->add_flag("--very-general", very_general, "the surface is very general in moduli");
        cmd->add_option("--eps1", eps1, "asserted lower bound for eps(L;1), e.g. 5/2");
    }

    SurfaceSpec build() const {
        SurfaceSpec s;
        if (kind == "abelian") {
            if (d.empty()) throw std::invalid_argument("the abelian model needs --d");
            s = picard1 ? SurfaceSpec::abelian_rho1(parse_int(d))
                        : SurfaceSpec::abelian(parse_int(d));
        } else {
            if (L2.empty()) throw std::invalid_argument("the K-trivial model needs --L2");
            s = SurfaceSpec::ktrivial_rho1(parse_int(L2));
        }
        if (!min_elliptic.empty()) {
            if (min_elliptic == "simple")
                s.no_elliptic_curves = true;
            else
                s.min_elliptic_degree = parse_int(min_elliptic);
        }
        s.very_general = very_general;
        if (!eps1.empty()) s.eps1 = Surd(parse_rational(eps1));
        s.validate();
        return s;
    }
};

std::string render_text(const Certificate& c) {
    std::string out;
    out += std::string("verdict: ") + verdict_name(c.verdict) + "\n";
    out += "gate: " + c.gate + "\n";
    out += "k: " + c.k.get_str() + "\n";
    if (!c.reason.empty()) out += "reason: " + c.reason + "\n";
    out += "assumptions:";
    for (const auto& a : c.assumptions) out += " " + a;
    out += "\n";
    if (c.decomposition) {
        out += "decomposition (" + c.decomposition->branch + "):";
        for (const auto& comp : c.decomposition->components)
            out += " " + comp.mult.get_str() + "x(alpha=" + comp.alpha_eff.get_str() +
                   ", order=" + comp.order.get_str() + ")";
        out += "\n";
    }
    out += "trace:\n";
    for (const auto& s : c.trace) {
        out += "  [" + std::string(step_holds(s) ? "ok" : "BAD") + "] " + s.description + ": " +
               s.lhs.str() + " " + s.relation + " " + s.rhs.str() + "  (" + s.anchor + ")\n";
    }
    for (const auto& [gate, reason] : c.gate_reasons)
        out += "declined: " + gate + ": " + reason + "\n";
    return out;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::certified: return 0;
        case Verdict::refuted: return 2;
        default: return 1;
    }
}

/* Largest r the dispatcher certifies for fixed (c, alpha, k); every gate's
 * certified region is downward closed in r, so scanning down from the gate
 * window bounds is exact. */
std::optional<Int> max_certified_r(const SurfaceSpec& s, const Int& c, const Int& alpha,
                                   const Int& k) {
    Int A = ceil_div(alpha, c), K = ceil_div(k, c);
    Int ub = 1;
    auto bump = [&ub](const Int& v) {
        if (v > ub) ub = v;
    };
    if (s.model == SurfaceModel::abelian && s.picard_rank_one) {
        Int num = 2 * s.d - (4 * K + 5);
        if (num > 0) bump(num / ((A + 1) * (A + 1)));
    }
    if (s.model == SurfaceModel::ktrivial) bump(s.L2 / ((A + 2) * (A + 2)));
    if (s.model == SurfaceModel::abelian &&
        (s.has_elliptic_assertion() || s.very_general || s.eps1)) {
        Int T = k <= 1 ? Int(A + 1) : Int(A + K + 1);
        bump(ceil_div(2 * s.d, T * T));
    }
    for (Int r = ub; r >= 1; --r)
        if (certify(s, BundleQuery(c, alpha, k, r)).verdict == Verdict::certified) return r;
    return std::nullopt;
}

std::optional<ObstructionWindow::Mode> parse_window(const std::string& w) {
    if (w.empty()) return std::nullopt;
    if (w == "reider-gg") return ObstructionWindow::Mode::reider_gg;
    if (w == "reider-va") return ObstructionWindow::Mode::reider_va;
    if (w == "bs-kva") return ObstructionWindow::Mode::bs_kva;
    throw std::invalid_argument("unknown window '" + w + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-very ampleness certification and obstruction search on blown-up surfaces"};
    app.require_subcommand(1);

    /* ---- certify ---- */
    auto* cmd_certify = app.add_subcommand("certify", "decide and certify k-very ampleness");
    SurfaceFlags cert_surface;
    cert_surface.attach(cmd_certify);
    std::string opt_c = "1", opt_alpha, opt_k, opt_r, cert_format = "json";
    cmd_certify->add_option("--c", opt_c, "pullback multiple of L");
    cmd_certify->add_option("--alpha", opt_alpha, "coefficient on sum E_i")->required();
    cmd_certify->add_option("--k", opt_k, "very-ampleness order asked for")->required();
    cmd_certify->add_option("--r", opt_r, "number of blown-up points")->required();
    cmd_certify->add_option("--format", cert_format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));

    /* ---- pell ---- */
    auto* cmd_pell = app.add_subcommand("pell", "fundamental solution of l^2 - D k^2 = 1");
    std::string opt_D;
    cmd_pell->add_option("--D", opt_D, "non-square D >= 2")->required();

    /* ---- seshadri ---- */
    auto* cmd_ses = app.add_subcommand("seshadri", "certified Seshadri lower bounds");
    std::string ses_bound, ses_d, ses_L2, ses_r = "1", ses_eps1, ses_emin;
    cmd_ses->add_option("--bound", ses_bound, "bound family")
        ->required()
        ->check(CLI::IsMember({"pell", "kuchle", "bauer-szemberg", "floor", "ceiling"}));
    cmd_ses->add_option("--d", ses_d, "abelian polarization type (1,d)");
    cmd_ses->add_option("--L2", ses_L2, "polarization self-intersection");
    cmd_ses->add_option("--r", ses_r, "number of points");
    cmd_ses->add_option("--eps1", ses_eps1, "one-point bound fed to the reduction");
    cmd_ses->add_option("--min-elliptic-degree", ses_emin,
                        "minimal elliptic-curve degree (omit for none)");

    /* ---- search ---- */
    auto* cmd_search = app.add_subcommand("search", "exhaustive obstruction-divisor search");
    std::string se_model, se_d, se_alpha, se_k, se_r, se_emin = "0", se_amax, se_ellmax, se_window,
                se_format = "json";
    int se_threads = 0;
    bool se_serial = false;
    cmd_search->add_option("--model", se_model, "search family")
        ->required()
        ->check(CLI::IsMember({"rho1", "profiles"}));
    cmd_search->add_option("--d", se_d)->required();
    cmd_search->add_option("--alpha", se_alpha)->required();
    cmd_search->add_option("--k", se_k)->required();
    cmd_search->add_option("--r", se_r)->required();
    cmd_search->add_option("--e-min", se_emin, "asserted minimal elliptic degree (profiles)");
    cmd_search->add_option("--a-max", se_amax, "pullback coefficient cap (rho1)");
    cmd_search->add_option("--ell-max", se_ellmax, "degree cap (profiles)");
    cmd_search->add_option("--window", se_window, "window override")
        ->check(CLI::IsMember({"reider-gg", "reider-va", "bs-kva"}));
    cmd_search->add_option("--threads", se_threads, "OpenMP thread count");
    cmd_search->add_flag("--serial", se_serial, "run the serial reference kernel");
    cmd_search->add_option("--format", se_format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    /* ---- table ---- */
    auto* cmd_table = app.add_subcommand("table", "CSV of the largest certified r over a grid");
    SurfaceFlags table_surface;
    table_surface.attach(cmd_table);
    std::string tb_dmin, tb_dmax, tb_c = "1", tb_amin = "0", tb_amax = "0", tb_kmin = "0",
                tb_kmax = "0";
    cmd_table->add_option("--d-min", tb_dmin)->required();
    cmd_table->add_option("--d-max", tb_dmax)->required();
    cmd_table->add_option("--c", tb_c);
    cmd_table->add_option("--alpha-min", tb_amin);
    cmd_table->add_option("--alpha-max", tb_amax);
    cmd_table->add_option("--k-min", tb_kmin);
    cmd_table->add_option("--k-max", tb_kmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*cmd_certify) {
            SurfaceSpec s = cert_surface.build();
            BundleQuery q(parse_int(opt_c), parse_int(opt_alpha), parse_int(opt_k),
                          parse_int(opt_r));
            Certificate cert = certify(s, q);
            if (cert_format == "json")
                std::cout << dump_json(json_certificate(cert));
            else if (cert_format == "text")
                std::cout << render_text(cert);
            else
                std::cout << "verdict,gate,k,reason\n"
                          << verdict_name(cert.verdict) << ',' << cert.gate << ','
                          << cert.k.get_str() << ',' << cert.reason << "\n";
            return verdict_exit(cert.verdict);
        }

        if (*cmd_pell) {
            std::cout << dump_json(json_pell(pell_primitive(parse_int(opt_D))));
            return 0;
        }

        if (*cmd_ses) {
            SeshadriBound b = [&] {
                if (ses_bound == "pell")
                    return bound_pell_rho1(parse_int(ses_d), parse_int(ses_r));
                if (ses_bound == "kuchle") {
                    if (ses_eps1.empty())
                        throw std::invalid_argument("the reduction needs --eps1");
                    Int L2 = ses_L2.empty() ? Int(2 * parse_int(ses_d)) : parse_int(ses_L2);
                    return bound_kuchle(L2, parse_int(ses_r), Surd(parse_rational(ses_eps1)));
                }
                if (ses_bound == "bauer-szemberg") {
                    std::optional<Int> e0;
                    if (!ses_emin.empty()) e0 = parse_int(ses_emin);
                    return bound_bauer_szemberg(parse_int(ses_d), e0);
                }
                Int L2 = ses_L2.empty() ? Int(2 * parse_int(ses_d)) : parse_int(ses_L2);
                if (ses_bound == "floor") return bound_szemberg_floor(L2, parse_int(ses_r));
                SeshadriBound ceil{seshadri_upper_bound(L2, parse_int(ses_r)),
                                   SeshadriProvenance::szemberg_floor,
                                   {"universal ceiling sqrt(L^2/r)"},
                                   std::nullopt};
                return ceil;
            }();
            Json out = json_seshadri(b);
            if (ses_bound == "ceiling") out["provenance"] = "upper-bound";
            std::cout << dump_json(out);
            return 0;
        }

        if (*cmd_search) {
            if (se_threads > 0) omp_set_num_threads(se_threads);
            SearchOutcome o;
            if (se_model == "rho1") {
                Rho1Search in{parse_int(se_d), parse_int(se_alpha), parse_int(se_k),
                              parse_int(se_r), std::nullopt, parse_window(se_window)};
                if (!se_amax.empty()) in.a_max = parse_int(se_amax);
                o = se_serial ? search_rho1_serial(in) : search_rho1(in);
            } else {
                ProfileSearch in{parse_int(se_d),    parse_int(se_alpha),
                                 parse_int(se_k),    parse_int(se_r),
                                 parse_int(se_emin), std::nullopt,
                                 parse_window(se_window)};
                if (!se_ellmax.empty()) in.ell_max = parse_int(se_ellmax);
                o = se_serial ? search_profiles_serial(in) : search_profiles(in);
            }
            std::cout << (se_format == "json" ? dump_json(json_search(o)) : csv_survivors(o));
            return 0;
        }

        if (*cmd_table) {
            /* the grid supplies d (or L2) row by row */
            if (table_surface.d.empty()) table_surface.d = tb_dmin;
            if (table_surface.L2.empty()) table_surface.L2 = tb_dmin;
            SurfaceSpec s = table_surface.build();
            Int dmin = parse_int(tb_dmin), dmax = parse_int(tb_dmax), c = parse_int(tb_c);
            Int amin = parse_int(tb_amin), amax = parse_int(tb_amax);
            Int kmin = parse_int(tb_kmin), kmax = parse_int(tb_kmax);
            if (dmin > dmax || amin > amax || kmin > kmax || dmin < 1 || amin < 0 || kmin < 0)
                throw std::invalid_argument("empty or invalid table ranges");
            std::string head = s.model == SurfaceModel::abelian ? "d" : "L2";
            for (Int a = amin; a <= amax; ++a)
                for (Int k = kmin; k <= kmax; ++k)
                    head += ",a" + a.get_str() + ".k" + k.get_str();
            std::cout << head << "\n";
            for (Int d = dmin; d <= dmax; ++d) {
                SurfaceSpec row = s;
                (row.model == SurfaceModel::abelian ? row.d : row.L2) = d;
                std::string line = d.get_str();
                for (Int a = amin; a <= amax; ++a)
                    for (Int k = kmin; k <= kmax; ++k) {
                        if (a < k) {
                            line += ",refuted";
                            continue;
                        }
                        auto best = max_certified_r(row, c, a, k);
                        line += best ? "," + best->get_str() : ",-";
                    }
                std::cout << line << "\n";
            }
            return 0;
        }
    } catch (const cap_error& e) {
        Json err{{"error", e.what()}};
        err["required"] = e.required ? Json(e.required->get_str()) : Json(nullptr);
        std::cout << dump_json(err);
        std::cerr << e.what() << "\n";
        return kExitCapInsufficient;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
