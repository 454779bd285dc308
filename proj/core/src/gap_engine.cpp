#include "resgaps/gap_engine.hpp"

#include <algorithm>

#include "resgaps/error.hpp"
#include "resgaps/fiber.hpp"
#include "resgaps/lattice.hpp"
#include "resgaps/quadratic_form.hpp"

namespace resgaps {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Realized: return "Realized";
        case Status::Gap: return "Gap";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view to_string(Route r) noexcept {
    switch (r) {
        case Route::TorsionPair: return "torsion-pair";
        case Route::NarrowHeight: return "narrow-height";
        case Route::TorsionNarrow: return "torsion-narrow";
        case Route::Interval: return "interval";
        case Route::TorsionShifted: return "torsion-shifted";
        case Route::BoundaryTorsion: return "boundary-torsion";
        case Route::Override: return "override";
        case Route::ConstructionA1x4: return "construction-a1x4";
        case Route::ConstructionA4: return "construction-a4";
    }
    return "?";
}

namespace {

Rational two_plus_2k(std::int64_t k) { return Rational(2) + Rational(2) * Rational(static_cast<long>(k)); }

bool is_zero(std::span<const std::int64_t> x) {
    return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

/// Nonnegative integers m with 2+2m-c_max <= h <= 2+2m-c_min.
std::vector<std::int64_t> possible_p_dot_o(const Rational& h, const Bounds& b) {
    const Integer first = ((h - 2 + b.c_min) / 2).ceil();
    const Integer last = ((h - 2 + b.c_max) / 2).floor();
    std::vector<std::int64_t> out;
    for (Integer m = first < 0 ? Integer(0) : first; m <= last; ++m) out.push_back(to_int64(m));
    return out;
}

Rational free_norm(const SurfaceCase& c, std::span<const std::int64_t> x) {
    return c.rank() == 0 ? Rational(0) : norm(c.free_gram(), x);
}

const WitnessOverride* find_override(const SurfaceCase& c, std::int64_t k) {
    for (const auto& w : c.overrides)
        if (w.k == k) return &w;
    return nullptr;
}

std::vector<Rational> override_contributions(const SurfaceCase& c, const WitnessOverride& w) {
    std::vector<Rational> out;
    for (std::size_t v = 0; v < c.t.size(); ++v) out.push_back(contr_single(c.t[v], w.components[v]));
    return out;
}

WitnessTrace narrow_trace(Route route, std::vector<std::int64_t> x, const Rational& h, std::int64_t k) {
    WitnessTrace w;
    w.route = route;
    w.coords = std::move(x);
    w.height = h;
    w.p_dot_o = {k};
    w.derivation = "narrow section, contributions vanish: h = " + h.str() + " = 2+2(P.O), so P.O = " +
                   std::to_string(k);
    return w;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

}  // namespace

bool validate_witness(const SurfaceCase& c, std::int64_t k, const WitnessTrace& w) {
    if (static_cast<int>(w.coords.size()) != c.rank()) return false;
    const Rational h = free_norm(c, w.coords);
    if (h != w.height) return false;
    const bool narrow = c.rank() == 0 || in_narrow(c.free_gram(), w.coords);
    const Bounds& b = c.bounds();
    const bool torsion = !c.torsion.trivial();

    switch (w.route) {
        case Route::TorsionPair: {
            // O.O = -1 keeps the formulas uniform: h(O) = 0 and <O,Q> = -O.Q
            if (!torsion || !w.add_torsion || !is_zero(w.coords) || k != 0) return false;
            return pairing(-1, 0, k, {}) == 0 && w.p_dot_q == k;
        }
        case Route::NarrowHeight:
        case Route::ConstructionA1x4:
        case Route::ConstructionA4: {
            if (w.add_torsion || !narrow || is_zero(w.coords)) return false;
            const Rational po = h / 2 - 1;
            if (!po.is_integer() || po != Rational(static_cast<long>(k))) return false;
            return height(k, {}) == h && w.p_dot_o == std::vector<std::int64_t>{k};
        }
        case Route::TorsionNarrow: {
            if (!torsion || w.add_torsion || !narrow) return false;
            const Rational po = h / 2 - 1;
            if (!po.is_integer()) return false;
            const std::int64_t p_dot_o = to_int64(po.numerator());
            // torsion Q has Q.O = 0 and pairs to 0; a narrow P has no pair terms
            return height(p_dot_o, {}) == h && pairing(p_dot_o, 0, k, {}) == 0 && w.p_dot_q == k;
        }
        case Route::Interval:
        case Route::TorsionShifted:
        case Route::BoundaryTorsion: {
            if (w.route == Route::Interval && (narrow || w.add_torsion)) return false;
            if (w.route == Route::TorsionShifted && (!narrow || !w.add_torsion || !torsion)) return false;
            if (w.route == Route::BoundaryTorsion && (narrow ? !w.add_torsion : w.add_torsion)) return false;
            if (narrow && !torsion) return false;
            if (b.c_max.sign() == 0) return false;
            const auto ms = possible_p_dot_o(h, b);
            if (ms != w.p_dot_o) return false;
            if (w.route != Route::BoundaryTorsion) return ms == std::vector<std::int64_t>{k};
            if (b.delta != 2 || !torsion || ms != std::vector<std::int64_t>{k - 1, k}) return false;
            // P.O = k-1 leaves contribution c_min, and then P.Q' = P.O + 1 for torsion Q'
            const Rational contribution = two_plus_2k(k - 1) - h;
            return contribution == b.c_min && pairing(k - 1, 0, k, {}) == 0 && w.p_dot_q == k;
        }
        case Route::Override: {
            const WitnessOverride* o = find_override(c, k);
            if (!o || o->coords != w.coords || o->add_torsion != w.add_torsion) return false;
            const auto contributions = override_contributions(c, *o);
            return contributions == w.contributions && height(k, contributions) == h &&
                   w.p_dot_o == std::vector<std::int64_t>{k};
        }
    }
    return false;
}

std::optional<WitnessTrace> construct_gap_free_witness(const SurfaceCase& c, std::int64_t k) {
    if (c.rank() == 0 || k < 0) return std::nullopt;
    const SymMatrix& n = c.narrow_gram();
    std::vector<std::vector<std::int64_t>> roots;
    c.narrow_enumerator().visit(Rational(2), Rational(2), [&](std::span<const std::int64_t> y, const Rational&) {
        roots.emplace_back(y.begin(), y.end());
        return true;
    });
    auto ip = [&](std::size_t a, std::size_t b) { return bilinear(n, roots[a], roots[b]); };
    auto finish = [&](Route route, const std::vector<std::vector<std::int64_t>>& basis,
                      const std::vector<std::int64_t>& mult) -> std::optional<WitnessTrace> {
        std::vector<std::int64_t> y(c.rank());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) y[j] += mult[i] * basis[i][j];
        const auto x = narrow_to_free(n, y);
        WitnessTrace w = narrow_trace(route, x, norm(c.free_gram(), x), k);
        w.derivation += route == Route::ConstructionA1x4 ? " (four orthogonal narrow roots, four squares of k+1)"
                                                         : " (A4 chain of narrow roots, A4/2 represents k+1)";
        if (!validate_witness(c, k, w)) {
            throw Error(ErrorCode::ValidationError, "construction produced an invalid witness");
        }
        return w;
    };

    // four mutually orthogonal roots
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> orthogonal = [&](std::size_t start) {
        if (pick.size() == 4) return true;
        for (std::size_t r = start; r < roots.size(); ++r) {
            bool ok = true;
            for (std::size_t p : pick)
                if (ip(p, r).sign() != 0) ok = false;
            if (!ok) continue;
            pick.push_back(r);
            if (orthogonal(r + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (orthogonal(0)) {
        const auto a = four_square(Integer(static_cast<long>(k)) + 1);
        std::vector<std::vector<std::int64_t>> basis;
        for (std::size_t p : pick) basis.push_back(roots[p]);
        return finish(Route::ConstructionA1x4, basis, {to_int64(a[0]), to_int64(a[1]), to_int64(a[2]), to_int64(a[3])});
    }

    // chain r1 - r2 - r3 - r4 with consecutive products -1, others 0; signs are free
    std::vector<std::vector<std::int64_t>> chain;
    std::function<bool()> extend = [&]() {
        if (chain.size() == 4) return true;
        for (const auto& root : roots) {
            for (int sign : {1, -1}) {
                std::vector<std::int64_t> r = root;
                for (auto& v : r) v *= sign;
                bool ok = true;
                for (std::size_t i = 0; i < chain.size() && ok; ++i) {
                    const Rational p = bilinear(n, chain[i], r);
                    ok = (i + 1 == chain.size()) ? p == -1 : p.sign() == 0;
                }
                if (!ok) continue;
                chain.push_back(r);
                if (extend()) return true;
                chain.pop_back();
            }
        }
        return false;
    };
    if (extend()) {
        static const IntQuadraticForm q = lemma_form_a4();
        const auto x = represents(q, Integer(static_cast<long>(k)) + 1);
        if (!x) return std::nullopt;
        return finish(Route::ConstructionA4, chain, *x);
    }
    return std::nullopt;
}

std::optional<WitnessTrace> sufficient_realize(const SurfaceCase& c, std::int64_t k) {
    if (k < 0) return std::nullopt;
    const bool torsion = !c.torsion.trivial();
    if (c.rank() == 0) {
        if (k != 0 || !torsion) return std::nullopt;
        WitnessTrace w;
        w.route = Route::TorsionPair;
        w.coords = {};
        w.add_torsion = true;
        w.height = 0;
        w.p_dot_q = 0;
        w.derivation = "O and a torsion section Q are disjoint, so O.Q = 0";
        return w;
    }

    if (const WitnessOverride* o = find_override(c, k)) {
        WitnessTrace w;
        w.route = Route::Override;
        w.coords = o->coords;
        w.add_torsion = o->add_torsion;
        w.height = norm(c.free_gram(), o->coords);
        w.contributions = override_contributions(c, *o);
        w.p_dot_o = {k};
        w.derivation = "catalog component data: h = " + w.height.str() + " = 2+2(P.O) minus the listed contributions";
        if (validate_witness(c, k, w)) return w;
    }

    const Rational target = two_plus_2k(k);
    if (c.rank() >= 5) {
        if (auto w = construct_gap_free_witness(c, k)) return w;
    }
    if (const auto y = c.narrow_enumerator().find_norm(target)) {
        const auto x = narrow_to_free(c.narrow_gram(), y->coords);
        WitnessTrace w = narrow_trace(Route::NarrowHeight, x, target, k);
        if (validate_witness(c, k, w)) return w;
    }

    if (torsion) {
        std::optional<std::vector<std::int64_t>> y;
        if (k == 0) {
            y = std::vector<std::int64_t>(c.rank());
        } else if (const auto v = c.narrow_enumerator().find_norm(Rational(2) * Rational(static_cast<long>(k)))) {
            y = v->coords;
        }
        if (y) {
            WitnessTrace w;
            w.route = Route::TorsionNarrow;
            w.coords = narrow_to_free(c.narrow_gram(), *y);
            w.height = norm(c.free_gram(), w.coords);
            w.p_dot_o = {k - 1};
            w.p_dot_q = k;
            w.derivation = "narrow P with h = 2k has P.O = k-1; for torsion Q, 0 = <P,Q> = k - P.Q";
            if (validate_witness(c, k, w)) return w;
        }
    }

    const Bounds& b = c.bounds();
    if (b.c_max.sign() == 0) return std::nullopt;
    Rational lo = target - b.c_max;
    const Rational hi = target - b.c_min;
    if (lo.sign() < 0) lo = 0;
    std::optional<WitnessTrace> best;
    c.free_enumerator().visit(lo, hi, [&](std::span<const std::int64_t> x, const Rational& h) {
        if (best && h > best->height) return true;
        const bool narrow = in_narrow(c.free_gram(), x);
        if (narrow && !torsion) return true;
        const auto ms = possible_p_dot_o(h, b);
        WitnessTrace w;
        w.coords.assign(x.begin(), x.end());
        w.add_torsion = narrow;
        w.height = h;
        w.p_dot_o = ms;
        if (ms == std::vector<std::int64_t>{k}) {
            w.route = narrow ? Route::TorsionShifted : Route::Interval;
            w.derivation = std::string(narrow ? "P+Q for narrow P and torsion Q lies outside the narrow lattice; " : "") +
                           "h = " + h.str() + " with contribution in [c_min, c_max] leaves only P.O = " +
                           std::to_string(k);
        } else if (b.delta == 2 && torsion && ms == std::vector<std::int64_t>{k - 1, k}) {
            w.route = Route::BoundaryTorsion;
            w.p_dot_q = k;
            w.derivation = "h = " + h.str() + " leaves P.O in " + join_ints(ms) +
                           "; P.O = k-1 means contribution c_min, so P.Q' = P.O + 1 = k for torsion Q'";
        } else {
            return true;
        }
        if (!validate_witness(c, k, w)) return true;
        if (!best || h < best->height || (h == best->height && w.coords < best->coords)) best = std::move(w);
        return true;
    });
    return best;
}

NecessaryResult necessary_holds(const SurfaceCase& c, std::int64_t k) {
    if (c.rank() == 0) throw Error(ErrorCode::RankZero, "case " + std::to_string(c.id) + " has rank 0");
    const Bounds& b = c.bounds();
    const bool torsion = !c.torsion.trivial();
    const Rational target = two_plus_2k(k);
    const Rational ii_lo = target - b.c_max;
    const Rational ii_hi = target - b.c_min;
    const bool has_ii = b.c_max.sign() > 0;

    NecessaryResult r;
    r.searched.norm_lo = ii_lo.sign() < 0 ? Rational(0) : ii_lo;
    r.searched.norm_hi = target;

    if (has_ii && torsion && ii_lo.sign() <= 0) {
        // the zero class: a torsion section Q itself, h = 0
        r.holds = true;
        r.branch = NecessaryBranch::NonNarrowInterval;
        r.coords = std::vector<std::int64_t>(c.rank());
        return r;
    }
    c.free_enumerator().visit(r.searched.norm_lo, target, [&](std::span<const std::int64_t> x, const Rational& h) {
        ++r.searched.vectors_examined;
        const bool narrow = in_narrow(c.free_gram(), x);
        if (narrow && h == target) {
            r.branch = NecessaryBranch::NarrowHeight;
        } else if (has_ii && (!narrow || torsion) && h >= ii_lo && h <= ii_hi) {
            r.branch = NecessaryBranch::NonNarrowInterval;
        } else {
            return true;
        }
        r.holds = true;
        r.coords = std::vector<std::int64_t>(x.begin(), x.end());
        return false;
    });
    if (!r.holds) {
        r.searched.detail = "no narrow vector of height " + target.str();
        if (has_ii) {
            r.searched.detail += std::string("; no ") + (torsion ? "" : "non-narrow ") + "vector with height in [" +
                                 ii_lo.str() + ", " + ii_hi.str() + "]";
        }
    }
    return r;
}

GapVerdict decide(const SurfaceCase& c, std::int64_t k) {
    if (k < 0) throw Error(ErrorCode::Inapplicable, "k must be nonnegative");
    GapVerdict v;
    v.k = k;
    if (c.rank() == 0) {
        if (auto w = sufficient_realize(c, k)) {
            v.status = Status::Realized;
            v.witness = std::move(w);
            return v;
        }
        v.status = Status::Gap;
        v.certificate = GapCertificate{0, 0, 0,
                                       k == 0 ? "E(K) = {O} has no second section"
                                              : "rank 0: all sections are torsion, and distinct torsion sections "
                                                "are disjoint"};
        return v;
    }
    if (auto w = sufficient_realize(c, k)) {
        v.status = Status::Realized;
        v.witness = std::move(w);
        return v;
    }
    const NecessaryResult nec = necessary_holds(c, k);
    if (!nec.holds) {
        v.status = Status::Gap;
        v.certificate = nec.searched;
        return v;
    }
    v.status = Status::Unknown;
    const Bounds& b = c.bounds();
    if (b.delta == 2) {
        v.reason = "Delta = 2: the only candidates have h = 2+2k-c_min, where P.O depends on whether the "
                   "contribution equals c_min";
    } else if (b.delta > 2) {
        v.reason = "Delta > 2: candidate heights allow more than one value of P.O without component data";
    } else {
        v.reason = "necessary condition holds but no sufficient route applied";
    }
    return v;
}

bool closed_form_r1(const SurfaceCase& c, std::int64_t k) {
    if (c.rank() != 1 || !c.torsion.trivial()) {
        throw Error(ErrorCode::Inapplicable, "closed form needs rank 1 and trivial torsion");
    }
    const Rational mu = *c.mu;
    const Rational target = two_plus_2k(k);
    const Rational narrow = mu * target;
    if (narrow.is_integer() && is_perfect_square(narrow.numerator())) return false;
    const Bounds& b = c.bounds();
    const Rational lo = (target - b.c_max) / mu;
    const Rational hi = (target - b.c_min) / mu;
    Integer n = lo.sign() <= 0 ? Integer(0) : isqrt(lo.ceil());
    for (; Rational(n * n) <= hi; ++n) {
        if (Rational(n * n) < lo) continue;
        if (!(mu * Rational(n)).is_integer()) return false;
    }
    return true;
}

std::vector<OneGapEntry> one_gap_class(const Catalog& catalog) {
    std::vector<OneGapEntry> out;
    for (const auto& [id, c] : catalog.cases()) {
        OneGapEntry e;
        e.id = id;
        if (c.rank() == 0) {
            e.has_1_gap = true;
            e.method = "rank-0";
            out.push_back(e);
            continue;
        }
        const GapVerdict v = decide(c, 1);
        if (v.status == Status::Gap) {
            e.has_1_gap = true;
            e.method = "no-candidate";
        } else if (v.status == Status::Realized) {
            e.has_1_gap = false;
            const SymMatrix& n = c.narrow_gram();
            bool diag4 = false;
            for (std::size_t i = 0; i < n.dim(); ++i) diag4 = diag4 || n(i, i) == 4;
            switch (v.witness->route) {
                case Route::NarrowHeight: e.method = diag4 ? "diag-4" : "narrow-h4"; break;
                case Route::TorsionNarrow: e.method = "torsion-h2"; break;
                case Route::Interval:
                case Route::TorsionShifted:
                case Route::BoundaryTorsion: e.method = "interval-square"; break;
                case Route::Override: e.method = "override-witness"; break;
                default: e.method = std::string(to_string(v.witness->route)); break;
            }
        } else {
            e.method = "unknown: " + v.reason;
        }
        out.push_back(e);
    }
    return out;
}

DensityReport gap_density(const SurfaceCase& c, std::int64_t n) {
    DensityReport r;
    r.n = n;
    for (std::int64_t k = 1; k <= n; ++k) {
        const Status s = decide(c, k).status;
        if (s == Status::Gap) ++r.gaps;
        if (s == Status::Unknown) ++r.unknown;
    }
    r.density = n > 0 ? Rational(Integer(static_cast<long>(r.gaps)), Integer(static_cast<long>(n))) : Rational(0);
    return r;
}

}  // namespace resgaps
