#include "kva/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "kva/seshadri.hpp"

namespace kva {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Surd si(const Int& n) { return Surd(make_rational(n)); }

/* Partition existence: j parts in [0, cap], sum s, square sum q.  States are
 * packed into 64-bit keys; the entry guards keep every field in range.  One
 * memo per thread, so parallel searches never contend. */
constexpr long kMaxParts = 4000;
constexpr long kMaxSum = 4000;
constexpr long kMaxSq = 16000000;

long to_scale(const Int& v, long limit, const char* what) {
    if (v > limit)
        throw std::domain_error(std::string("feasible_vector: ") + what +
                                " beyond the supported search scale");
    return static_cast<long>(v.get_si());
}

struct PartsDP {
    std::unordered_map<std::uint64_t, bool> memo;

    static std::uint64_t key(long j, long cap, long s, long q) {
        return (static_cast<std::uint64_t>(j) << 52) | (static_cast<std::uint64_t>(cap) << 40) |
               (static_cast<std::uint64_t>(s) << 28) | static_cast<std::uint64_t>(q);
    }

    bool run(long j, long s, long q, long cap) {
        if (s == 0) return q == 0;
        if (j == 0 || cap == 0) return false;
        if (q < s || (q - s) % 2 != 0) return false;
        if (s > j * cap || q > s * cap) return false;  // sum m^2 <= cap * sum m
        if (static_cast<__int128>(j) * q < static_cast<__int128>(s) * s) return false;
        long hi = std::min(cap, s);
        while (static_cast<long long>(hi) * hi > q) --hi;
        long lo = (s + j - 1) / j;
        std::uint64_t k = key(j, hi, s, q);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (long m = hi; m >= lo && !ok; --m) ok = run(j - 1, s - m, q - m * m, m);
        memo.emplace(k, ok);
        return ok;
    }
};

thread_local PartsDP g_dp;

struct Bucket {
    std::vector<PruneReport> pruned;
    std::vector<Survivor> survivors;
    long examined = 0;

    void append_to(SearchOutcome& out) {
        out.examined += examined;
        std::move(pruned.begin(), pruned.end(), std::back_inserter(out.pruned));
        std::move(survivors.begin(), survivors.end(), std::back_inserter(out.survivors));
    }
};

std::string render_class(const Int& a, const Int& s, const Int& q) {
    return "class a=" + a.get_str() + " sum_m=" + s.get_str() + " sum_m_sq=" + q.get_str();
}

std::string render_profile(const Int& ell, const Int& delta, const Int& s, const Int& q,
                           const Int& nd, const Int& d2) {
    return "profile ell=" + ell.get_str() + " delta=" + delta.get_str() + " s=" + s.get_str() +
           " q=" + q.get_str() + " ND=" + nd.get_str() + " D2=" + d2.get_str();
}

/* Realizability gate shared by both searches: emit the sharpest violated
 * necessary condition, falling back to the full decision.  Returns true when
 * the candidate is realizable. */
bool realizable_or_prune(const std::string& cand, const Int& r, const Int& s, const Int& q,
                         Bucket& out) {
    if (q < s) {
        out.pruned.push_back({cand, "R9-arithmetic-infeasible",
                              {"square sum dominates the sum for integer multiplicities", si(q),
                               ">=", si(s), "multiplicity-realizability"}});
        return false;
    }
    if (q > s * s) {
        out.pruned.push_back({cand, "R9-arithmetic-infeasible",
                              {"square sum at most the squared sum", si(q), "<=", si(s * s),
                               "multiplicity-realizability"}});
        return false;
    }
    if ((q - s) % 2 != 0) {
        out.pruned.push_back({cand, "R9-arithmetic-infeasible",
                              {"sum and square sum share parity", si((q - s) % 2), "=", si(0),
                               "multiplicity-realizability"}});
        return false;
    }
    if (r * q < s * s) {
        out.pruned.push_back({cand, "R9-arithmetic-infeasible",
                              {"Cauchy-Schwarz bound r * sum_m_sq >= (sum_m)^2", si(r * q), ">=",
                               si(s * s), "multiplicity-realizability"}});
        return false;
    }
    if (!feasible_vector(r, s, q)) {
        out.pruned.push_back(
            {cand, "R9-arithmetic-infeasible",
             {"no vector of " + r.get_str() + " multiplicities has sum " + s.get_str() +
                  " and square sum " + q.get_str(),
              si(0), "=", si(1), "multiplicity-realizability"}});
        return false;
    }
    return true;
}

}  // namespace

bool feasible_vector(const Int& r, const Int& s, const Int& q) {
    if (r < 1) throw std::domain_error("feasible_vector: r >= 1 required");
    if (s < 0 || q < 0) return false;
    if (s == 0) return q == 0;
    if (q < s || q > s * s) return false;
    Int parts = r < s ? r : s;  // parts beyond s would all be zero
    long sl = to_scale(s, kMaxSum, "sum");
    long ql = to_scale(q, kMaxSq, "square sum");
    long jl = to_scale(parts, kMaxParts, "part count");
    return g_dp.run(jl, sl, ql, sl);
}

std::optional<std::vector<Int>> feasible_witness(const Int& r, const Int& s, const Int& q) {
    if (!feasible_vector(r, s, q)) return std::nullopt;
    std::vector<Int> out;
    long j = static_cast<long>((r < s ? r : s).get_si());
    long sl = static_cast<long>(s.get_si());
    long ql = static_cast<long>(q.get_si());
    long cap = sl;
    while (sl > 0) {
        long hi = std::min(cap, sl);
        while (static_cast<long long>(hi) * hi > ql) --hi;
        long lo = (sl + j - 1) / j;
        bool advanced = false;
        for (long m = hi; m >= lo; --m) {
            if (g_dp.run(j - 1, sl - m, ql - m * m, m)) {
                out.push_back(Int(m));
                sl -= m;
                ql -= m * m;
                cap = m;
                --j;
                advanced = true;
                break;
            }
        }
        if (!advanced) throw std::logic_error("feasible_witness: reconstruction failed");
    }
    return out;
}

bool ObstructionWindow::admits(const Int& nd, const Int& d2) const {
    switch (mode) {
        case Mode::reider_gg:
            return (nd == 0 && d2 == -1) || (nd == 1 && d2 == 0);
        case Mode::reider_va:
            return (nd == 0 && (d2 == -1 || d2 == -2)) || (nd == 1 && (d2 == 0 || d2 == -1)) ||
                   (nd == 2 && d2 == 0);
        case Mode::bs_kva:
            return nd - k - 1 <= d2 && 2 * d2 < nd && nd < 2 * (k + 1);
    }
    return false;
}

std::vector<Int> ObstructionWindow::admissible_d2(const Int& nd) const {
    switch (mode) {
        case Mode::reider_gg:
            if (nd == 0) return {Int(-1)};
            if (nd == 1) return {Int(0)};
            return {};
        case Mode::reider_va:
            if (nd == 0) return {Int(-2), Int(-1)};
            if (nd == 1) return {Int(-1), Int(0)};
            if (nd == 2) return {Int(0)};
            return {};
        case Mode::bs_kva: {
            if (!(nd < 2 * (k + 1))) return {};
            Int lo = nd - k - 1;
            Int hi = floor_div(nd - 1, 2);
            std::vector<Int> out;
            for (Int v = lo; v <= hi; ++v) out.push_back(v);
            return out;
        }
    }
    return {};
}

const char* ObstructionWindow::name() const {
    switch (mode) {
        case Mode::reider_gg: return "reider-gg";
        case Mode::reider_va: return "reider-va";
        default: return "bs-kva";
    }
}

ObstructionWindow ObstructionWindow::for_profiles(const Int& k) {
    if (k == 0) return {Mode::reider_gg, k};
    if (k == 1) return {Mode::reider_va, k};
    return {Mode::bs_kva, k};
}

ObstructionWindow ObstructionWindow::for_rho1(const Int& k) {
    if (k == 0) return {Mode::reider_gg, k};
    return {Mode::bs_kva, k};
}

ObstructionWindow ObstructionWindow::for_mode(Mode m, const Int& k) {
    if (m == Mode::reider_gg) return {m, 0};
    if (m == Mode::reider_va) return {m, 1};
    return {m, k};
}

namespace {

/* ---------- rank-one search ---------- */

struct Rho1Ctx {
    Int d, alpha, k, r;
    ObstructionWindow window;
    Surd pairing;  // certified multi-point Seshadri bound b: pi^*L - b sum E_i is nef
};

struct Rho1Prep {
    Rho1Ctx ctx;
    Int a_cap;
    Int scan_to;
    std::vector<std::string> derivation;
};

Rho1Prep prep_rho1(const Rho1Search& in) {
    if (in.d < 1 || in.alpha < 0 || in.k < 0 || in.r < 1)
        throw std::domain_error("search_rho1: need d >= 1, alpha >= 0, k >= 0, r >= 1");
    ObstructionWindow w = in.window ? ObstructionWindow::for_mode(*in.window, in.k)
                                    : ObstructionWindow::for_rho1(in.k);
    SeshadriBound sb = bound_pell_rho1(in.d, in.r);
    std::vector<std::string> notes;
    notes.push_back(std::string("pairing class pi^*L - b sum E_i is nef for general points, b = ") +
                    sb.value.str() + " (" + provenance_name(sb.provenance) + ")");
    if (surd_compare(sb.value, si(in.alpha + 1)) <= 0)
        throw cap_error(
            "search_rho1: pairing bound b <= alpha + 1, the pullback scan is not provably finite",
            std::nullopt);
    /* largest a with 2 d a (b - alpha - 1) <= (2 w.k + 1) b; left side strictly
     * increasing in a, so the scan below terminates */
    Int a_cap = 0;
    for (Int a = 1;; ++a) {
        Surd margin = sb.value.scaled(make_rational(2 * in.d * a - (2 * w.k + 1))) -
                      si(2 * in.d * a * (in.alpha + 1));
        if (surd_sign(margin.u(), margin.v(), margin.m()) <= 0)
            a_cap = a;
        else
            break;
        if (a > 1000000) throw std::logic_error("search_rho1: pullback cap scan diverged");
    }
    notes.push_back("pullback cap a <= " + a_cap.get_str() +
                    ": the window needs sum m_i >= (2da - 2k - 1)/(alpha+1) while the nef pairing"
                    " forces sum m_i <= 2da/b");
    if (in.a_max && *in.a_max < a_cap)
        throw cap_error("search_rho1: a_max below the provably exhaustive cap " + a_cap.get_str(),
                        a_cap);
    Int scan_to = in.a_max && *in.a_max > a_cap ? *in.a_max : a_cap;
    if (scan_to > a_cap)
        notes.push_back("scan extended to a <= " + scan_to.get_str() +
                        " on request; the range past the cap is provably empty");
    return {{in.d, in.alpha, in.k, in.r, w, sb.value}, a_cap, scan_to, std::move(notes)};
}

void scan_exceptional(const Rho1Ctx& C, Bucket& out) {
    Int ap1 = C.alpha + 1;
    Int s_cap = floor_div(2 * C.window.k + 1, ap1);  // half-window (alpha+1) s < 2(k+1)
    for (Int s = 1; s <= s_cap; ++s) {
        for (Int q = s; q <= s * s; q += 2) {
            ++out.examined;
            std::string cand = render_class(0, s, q);
            if (C.k >= 1 && C.alpha >= C.k) {
                out.pruned.push_back(
                    {cand, "R1-exceptional-alpha-ge-k",
                     {"window and q >= s force (alpha+2) sum a_i <= k+1 for exceptional-only"
                      " classes",
                      si((C.alpha + 2) * s), "<=", si(C.k + 1), "bs-criterion"}});
                continue;
            }
            Int nd = ap1 * s, d2 = -q;
            if (!C.window.admits(nd, d2)) continue;
            if (!realizable_or_prune(cand, C.r, s, q, out)) continue;
            Survivor sv;
            sv.kind = "exceptional-class";
            sv.a = 0;
            sv.ell = 0;
            sv.delta = 0;
            sv.s = s;
            sv.q = q;
            sv.nd = nd;
            sv.d2 = d2;
            sv.witness = *feasible_witness(C.r, s, q);
            sv.note = "exceptional-only class sum a_i E_i inside the window";
            out.survivors.push_back(std::move(sv));
        }
    }
}

void scan_pullback_a(const Rho1Ctx& C, const Int& a, Bucket& out) {
    Int ell = 2 * C.d * a;
    Int delta = 2 * C.d * a * a;
    Int ap1 = C.alpha + 1;
    Int kw = C.window.k;
    Int g = 2 * kw + 1;
    Int s_lo = ell - g <= 0 ? Int(0) : ceil_div(ell - g, ap1);
    /* Cauchy-Schwarz + window: 2d s^2 - 2dr(alpha+1) s - r(ell^2 - 2d ell + 2d(kw+1)) <= 0 */
    Int lin = 2 * C.d * C.r * ap1;
    Int disc = lin * lin + 8 * C.d * C.r * (ell * ell - 2 * C.d * ell + 2 * C.d * (kw + 1));
    if (disc < 0) return;
    Int s_hi = floor_div(lin + isqrt(disc).first, 4 * C.d);
    for (Int s = s_lo; s <= s_hi; ++s) {
        if (surd_compare(C.pairing.scaled(make_rational(s)), si(ell)) > 0) break;
        Int nd = ell - ap1 * s;
        for (const Int& d2 : C.window.admissible_d2(nd)) {
            Int q = delta - d2;
            ++out.examined;
            std::string cand = render_class(a, s, q);
            if (!realizable_or_prune(cand, C.r, s, q, out)) continue;
            Survivor sv;
            sv.kind = "pullback-class";
            sv.a = a;
            sv.ell = ell;
            sv.delta = delta;
            sv.s = s;
            sv.q = q;
            sv.nd = nd;
            sv.d2 = d2;
            sv.witness = *feasible_witness(C.r, s, q);
            sv.note = "class a pi^*L - sum m_i E_i inside the window";
            out.survivors.push_back(std::move(sv));
        }
    }
}

SearchOutcome finish_rho1(const Rho1Prep& prep, std::vector<Bucket>& buckets, Bucket& exceptional) {
    SearchOutcome out;
    out.window = prep.ctx.window.name();
    out.cap = prep.a_cap;
    out.exhaustive = true;
    out.derivation = prep.derivation;
    exceptional.append_to(out);
    for (auto& b : buckets) b.append_to(out);
    return out;
}

/* ---------- profile search ---------- */

struct ProfileCtx {
    Int d, alpha, k, r;
    Int max_excluded;  // largest elliptic degree ruled out (min degree - 1)
    ObstructionWindow window;
    Surd pairing;
};

struct ProfilePrep {
    ProfileCtx ctx;
    Int ell_cap;
    Int scan_to;
    std::vector<std::string> derivation;
};

ProfilePrep prep_profiles(const ProfileSearch& in) {
    if (in.d < 1 || in.alpha < 0 || in.k < 0 || in.r < 1 || in.min_elliptic_degree < 0)
        throw std::domain_error("search_profiles: invalid parameters");
    ObstructionWindow w = in.window ? ObstructionWindow::for_mode(*in.window, in.k)
                                    : ObstructionWindow::for_profiles(in.k);
    std::vector<std::string> notes;

    /* pairing bound: one-point Seshadri estimate fed into the multi-point one;
     * an unstated elliptic degree still satisfies degree >= 1 */
    Int eps0 = in.min_elliptic_degree > 1 ? in.min_elliptic_degree : Int(1);
    SeshadriBound one = bound_bauer_szemberg(in.d, eps0);
    Surd pairing = one.value;
    notes.push_back("one-point Seshadri bound min(eps0=" + eps0.get_str() + ", sqrt(7d/4)) = " +
                    pairing.str());
    if (in.r >= 2) {
        SeshadriBound multi = bound_kuchle(2 * in.d, in.r, pairing);
        pairing = multi.value;
        notes.push_back("multi-point Seshadri bound (general points) = " + pairing.str());
    }
    notes.push_back("pairing cut: effective classes satisfy ell >= bound * sum m_i");

    Int ap1 = in.alpha + 1;
    Int lead = 2 * in.d - in.r * ap1 * ap1;
    if (lead <= 0)
        throw cap_error(
            "search_profiles: 2d <= r (alpha+1)^2, the ell scan is not provably finite",
            std::nullopt);
    Int g = 2 * w.k + 1;
    Int Bq = -4 * in.d * g;
    Int Cq = 2 * in.d * (g * g + in.r * ap1 * ap1 * w.k);
    Int cap = ceil_div(in.r * ap1 * ap1, 2) + g;  // past this, s_lo sits right of the vertex
    Int disc = Bq * Bq - 4 * lead * Cq;
    if (disc >= 0) {
        Int root_hi = floor_div(-Bq + isqrt(disc).first + 1, 2 * lead) + 1;
        if (root_hi > cap) cap = root_hi;
    }
    notes.push_back("ell cap " + cap.get_str() +
                    ": beyond it the Hodge + Cauchy-Schwarz + window interval for sum m_i is"
                    " empty (leading coefficient 2d - r(alpha+1)^2 = " +
                    lead.get_str() + " > 0)");
    if (in.ell_max && *in.ell_max < cap)
        throw cap_error("search_profiles: ell_max below the provably exhaustive cap " +
                            cap.get_str(),
                        cap);
    Int scan_to = in.ell_max && *in.ell_max > cap ? *in.ell_max : cap;
    if (scan_to > cap)
        notes.push_back("scan extended to ell <= " + scan_to.get_str() +
                        " on request; the range past the cap is provably empty");
    if (scan_to > 2000000)
        throw std::domain_error("search_profiles: ell range too large to enumerate");
    return {{in.d, in.alpha, in.k, in.r, in.min_elliptic_degree - 1, w, pairing},
            cap,
            scan_to,
            std::move(notes)};
}

void scan_profile_ell(const ProfileCtx& C, const Int& ell, Bucket& out) {
    Int ap1 = C.alpha + 1;
    Int kw = C.window.k;
    Int g = 2 * kw + 1;
    Int s_lo = ell - g <= 0 ? Int(0) : ceil_div(ell - g, ap1);
    Int lin = 2 * C.d * C.r * ap1;
    Int disc = lin * lin + 8 * C.d * C.r * (ell * ell - 2 * C.d * ell + 2 * C.d * (kw + 1));
    if (disc < 0) return;
    Int s_hi = floor_div(lin + isqrt(disc).first, 4 * C.d);
    Int hodge = floor_div(ell * ell, 2 * C.d);
    for (Int s = s_lo; s <= s_hi; ++s) {
        Int nd = ell - ap1 * s;
        for (const Int& d2 : C.window.admissible_d2(nd)) {
            Int q_lo = s;
            Int cs = s == 0 ? Int(0) : ceil_div(s * s, C.r);
            if (cs > q_lo) q_lo = cs;
            if (-d2 > q_lo) q_lo = -d2;  // delta = q + d2 >= 0
            Int q_hi = s * s;
            if (hodge - d2 < q_hi) q_hi = hodge - d2;
            if ((q_lo - s) % 2 != 0) ++q_lo;  // realizability needs q == s (mod 2)
            for (Int q = q_lo; q <= q_hi; q += 2) {
                ++out.examined;
                Int delta = q + d2;
                std::string cand = render_profile(ell, delta, s, q, nd, d2);
                if (delta % 2 != 0) {
                    out.pruned.push_back(
                        {cand, "R3-parity",
                         {"self-intersection of an effective curve class is even", si(delta % 2),
                          "=", si(0), "adjunction-parity"}});
                    continue;
                }
                if (!realizable_or_prune(cand, C.r, s, q, out)) continue;
                if (delta == 0 && ell <= C.max_excluded) {
                    out.pruned.push_back({cand, "R4-elliptic-excluded",
                                          {"elliptic degree lies above the excluded range",
                                           si(ell), ">", si(C.max_excluded), "elliptic-degree"}});
                    continue;
                }
                /* translate-family counts: a class with delta > 0 moves (with
                 * translations) in dimension delta/2 + 1; an elliptic class in
                 * dimension 1.  Candidates with s = q sit with multiplicity
                 * one on s general points. */
                if (delta == 2 && s == 3 && q == 3) {
                    out.pruned.push_back({cand, "R5-principal-through-3",
                                          {"a principal polarization class meets at most 2"
                                           " general points",
                                           si(s), "<=", si(2), "general-position"}});
                    continue;
                }
                if (delta == 4 && s == 5 && q == 5) {
                    out.pruned.push_back({cand, "R6-type12-through-5",
                                          {"a type (1,2) polarization class meets at most 3"
                                           " general points",
                                           si(s), "<=", si(3), "general-position"}});
                    continue;
                }
                if (delta == 0 && s == 2 && q == 2) {
                    out.pruned.push_back({cand, "R7-elliptic-through-2",
                                          {"translates of an elliptic curve form a"
                                           " one-dimensional family",
                                           si(s), "<=", si(1), "general-position"}});
                    continue;
                }
                if (delta > 0 && s == q && (s == delta + 1 || s == delta + 2)) {
                    out.pruned.push_back({cand, "R8-beta-vs-sections",
                                          {"a class through beta = 2h^0 + 1 or 2h^0 + 2 general"
                                           " points exceeds its family dimension",
                                           si(s), "<=", si(delta / 2 + 1), "general-position"}});
                    continue;
                }
                Surd ts = C.pairing.scaled(make_rational(s));
                if (surd_compare(ts, si(ell)) > 0) {
                    out.pruned.push_back({cand, "R9-arithmetic-infeasible",
                                          {"pairing with the nef Seshadri class", ts, "<=",
                                           si(ell), "nef-pairing"}});
                    continue;
                }
                Survivor sv;
                sv.kind = "profile";
                sv.a = 0;
                sv.ell = ell;
                sv.delta = delta;
                sv.s = s;
                sv.q = q;
                sv.nd = nd;
                sv.d2 = d2;
                sv.witness = *feasible_witness(C.r, s, q);
                sv.note = delta == 0 ? "elliptic curve of degree " + ell.get_str()
                                     : "curve class of degree " + ell.get_str() +
                                           " with self-intersection " + delta.get_str();
                out.survivors.push_back(std::move(sv));
            }
        }
    }
}

SearchOutcome finish_profiles(const ProfilePrep& prep, std::vector<Bucket>& buckets) {
    SearchOutcome out;
    out.window = prep.ctx.window.name();
    out.cap = prep.ell_cap;
    out.exhaustive = true;
    out.derivation = prep.derivation;
    for (auto& b : buckets) b.append_to(out);
    return out;
}

template <typename Scan>
void run_parallel(long n, Scan&& scan) {
    std::vector<std::exception_ptr> errs(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (long i = 1; i <= n; ++i) {
        try {
            scan(i);
        } catch (...) {
            errs[static_cast<std::size_t>(i - 1)] = std::current_exception();
        }
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace

SearchOutcome search_rho1_serial(const Rho1Search& in) {
    Rho1Prep prep = prep_rho1(in);
    Bucket exceptional;
    scan_exceptional(prep.ctx, exceptional);
    std::vector<Bucket> buckets(static_cast<std::size_t>(prep.scan_to.get_si()));
    for (Int a = 1; a <= prep.scan_to; ++a)
        scan_pullback_a(prep.ctx, a, buckets[static_cast<std::size_t>(a.get_si() - 1)]);
    return finish_rho1(prep, buckets, exceptional);
}

SearchOutcome search_rho1(const Rho1Search& in) {
    Rho1Prep prep = prep_rho1(in);
    Bucket exceptional;
    scan_exceptional(prep.ctx, exceptional);
    long n = prep.scan_to.get_si();
    std::vector<Bucket> buckets(static_cast<std::size_t>(n));
    run_parallel(n, [&](long a) {
        scan_pullback_a(prep.ctx, Int(a), buckets[static_cast<std::size_t>(a - 1)]);
    });
    return finish_rho1(prep, buckets, exceptional);
}

SearchOutcome search_profiles_serial(const ProfileSearch& in) {
    ProfilePrep prep = prep_profiles(in);
    std::vector<Bucket> buckets(static_cast<std::size_t>(prep.scan_to.get_si()));
    for (Int ell = 1; ell <= prep.scan_to; ++ell)
        scan_profile_ell(prep.ctx, ell, buckets[static_cast<std::size_t>(ell.get_si() - 1)]);
    return finish_profiles(prep, buckets);
}

SearchOutcome search_profiles(const ProfileSearch& in) {
    ProfilePrep prep = prep_profiles(in);
    long n = prep.scan_to.get_si();
    std::vector<Bucket> buckets(static_cast<std::size_t>(n));
    run_parallel(n, [&](long ell) {
        scan_profile_ell(prep.ctx, Int(ell), buckets[static_cast<std::size_t>(ell - 1)]);
    });
    return finish_profiles(prep, buckets);
}

}  // namespace kva
