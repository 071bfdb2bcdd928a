#include "fpgraph/gauge.hpp"

#include "fpgraph/errors.hpp"

#include <deque>
#include <functional>

namespace fpgraph {

namespace {

const Rational kZero;
const Rational kOne(1);

} // namespace

GaugeFormula GaugeFormula::linear(Rational slope) {
    GaugeFormula f;
    f.kind = FormulaKind::Linear;
    f.a = std::move(slope);
    return f;
}

GaugeFormula GaugeFormula::quadratic(Rational coeff) {
    GaugeFormula f;
    f.kind = FormulaKind::Quadratic;
    f.a = std::move(coeff);
    return f;
}

GaugeFormula GaugeFormula::mobius(Rational a, Rational b, Rational c, Rational d) {
    GaugeFormula f;
    f.kind = FormulaKind::Mobius;
    f.a = std::move(a);
    f.b = std::move(b);
    f.c = std::move(c);
    f.d = std::move(d);
    return f;
}

Rational GaugeFormula::eval(const Rational& t) const {
    switch (kind) {
        case FormulaKind::Linear:
            return a * t;
        case FormulaKind::Quadratic:
            return a * t * t;
        case FormulaKind::Mobius: {
            Rational den = c * t + d;
            if (den.is_zero()) throw domain_error("mobius formula evaluated at its pole");
            return (a * t + b) / den;
        }
    }
    throw structural_error("unknown formula kind");
}

namespace {

// Limit of a piece's formula at the upper end of [lo, hi); hi absent means
// the limit at +infinity.
struct EndLimit {
    enum Kind { Finite, PlusInf, MinusInf } kind;
    Rational value; // meaningful for Finite
};

int denominator_sign_on_piece(const GaugePiece& piece) {
    Rational at_lo = piece.formula.c * piece.lo + piece.formula.d;
    return at_lo.sign();
}

EndLimit upper_limit(const GaugePiece& piece) {
    const GaugeFormula& f = piece.formula;
    if (!piece.hi.has_value()) {
        switch (f.kind) {
            case FormulaKind::Linear:
            case FormulaKind::Quadratic:
                if (f.a.is_zero()) return {EndLimit::Finite, kZero};
                return {f.a.sign() > 0 ? EndLimit::PlusInf : EndLimit::MinusInf, kZero};
            case FormulaKind::Mobius:
                if (!f.c.is_zero()) return {EndLimit::Finite, f.a / f.c};
                if (f.a.is_zero()) return {EndLimit::Finite, f.b / f.d};
                return {(f.a / f.d).sign() > 0 ? EndLimit::PlusInf : EndLimit::MinusInf, kZero};
        }
    }
    const Rational& h = *piece.hi;
    if (f.kind != FormulaKind::Mobius) return {EndLimit::Finite, f.eval(h)};
    Rational den_at_h = f.c * h + f.d;
    if (!den_at_h.is_zero()) return {EndLimit::Finite, f.eval(h)};
    Rational num_at_h = f.a * h + f.b;
    if (num_at_h.is_zero()) {
        // Numerator and denominator share the root: the piece is constant a/c.
        return {EndLimit::Finite, f.a / f.c};
    }
    int sign = num_at_h.sign() * denominator_sign_on_piece(piece);
    return {sign > 0 ? EndLimit::PlusInf : EndLimit::MinusInf, kZero};
}

// Sign of the derivative on the piece: +1 nondecreasing strictly, 0 constant,
// -1 decreasing somewhere. Quadratics are judged on t >= 0 only.
int monotonicity_sign(const GaugePiece& piece) {
    const GaugeFormula& f = piece.formula;
    switch (f.kind) {
        case FormulaKind::Linear:
        case FormulaKind::Quadratic:
            return f.a.sign();
        case FormulaKind::Mobius:
            return (f.a * f.d - f.b * f.c).sign();
    }
    return 0;
}

} // namespace

GaugeFunction::GaugeFunction(std::vector<GaugePiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw structural_error("gauge needs at least one piece");
    if (pieces_.front().lo != kZero) throw structural_error("gauge pieces must start at 0");
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const GaugePiece& piece = pieces_[i];
        bool last = i + 1 == pieces_.size();
        if (!last && !piece.hi.has_value())
            throw structural_error("only the final gauge piece may be unbounded");
        if (last && piece.hi.has_value())
            throw structural_error("the final gauge piece must extend to infinity");
        if (piece.hi && *piece.hi <= piece.lo)
            throw structural_error("gauge piece with hi <= lo");
        if (!last && pieces_[i + 1].lo != *piece.hi)
            throw structural_error("gauge pieces leave a gap or overlap at " + piece.hi->to_string());
        if (piece.formula.kind == FormulaKind::Mobius) {
            const GaugeFormula& f = piece.formula;
            if (f.c.is_zero() && f.d.is_zero())
                throw structural_error("mobius piece with identically zero denominator");
            if (!f.c.is_zero()) {
                Rational pole = f.d.negated() / f.c;
                bool inside = pole >= piece.lo && (!piece.hi || pole < *piece.hi);
                if (inside)
                    throw structural_error("mobius denominator vanishes inside a piece at t = " +
                                           pole.to_string());
            }
        }
        // The gauge must stay nonnegative; each shape is monotone on the
        // piece, so the extremes sit at the ends.
        if (piece.formula.eval(piece.lo) < kZero)
            throw structural_error("gauge takes a negative value at t = " + piece.lo.to_string());
        EndLimit lim = upper_limit(piece);
        if (lim.kind == EndLimit::MinusInf || (lim.kind == EndLimit::Finite && lim.value < kZero))
            throw structural_error("gauge becomes negative before t = " +
                                   (piece.hi ? piece.hi->to_string() : std::string("infinity")));
    }
}

GaugeFunction GaugeFunction::single(GaugeFormula formula) {
    return GaugeFunction({GaugePiece{kZero, std::nullopt, std::move(formula)}});
}

size_t GaugeFunction::piece_index(const Rational& t) const {
    if (t < kZero) throw domain_error("gauge evaluated at a negative argument");
    for (size_t i = 0; i < pieces_.size(); ++i) {
        if (!pieces_[i].hi || t < *pieces_[i].hi) return i;
    }
    return pieces_.size() - 1;
}

Rational GaugeFunction::eval(const Rational& t) const {
    return pieces_[piece_index(t)].formula.eval(t);
}

namespace {

// ---------------------------------------------------------------------------
// Exact solution of f(t) >= t on a piece, and the simplest rational witness.
// ---------------------------------------------------------------------------

// q(t) = A t^2 + B t + C, a positive multiple of f(t) - t on the piece.
struct Quadratic {
    Rational A, B, C;
    Rational eval(const Rational& t) const { return (A * t + B) * t + C; }
};

Quadratic identity_gap(const GaugePiece& piece) {
    const GaugeFormula& f = piece.formula;
    switch (f.kind) {
        case FormulaKind::Linear:
            return {kZero, f.a - kOne, kZero};
        case FormulaKind::Quadratic:
            return {f.a, Rational(-1), kZero};
        case FormulaKind::Mobius: {
            // f(t) - t >= 0  <=>  sign(D) * (-c t^2 + (a - d) t + b) >= 0.
            Rational sigma(denominator_sign_on_piece(piece));
            return {sigma * f.c.negated(), sigma * (f.a - f.d), sigma * f.b};
        }
    }
    throw structural_error("unknown formula kind");
}

// Position of a rational against the piece-with-positivity window
// P = [lo, hi) intersected with (0, inf); lo == 0 makes the left end open.
enum class Pos { Below, Inside, Above };

struct Window {
    Rational lo;
    bool open_left;
    std::optional<Rational> hi;

    Pos locate(const Rational& m) const {
        if (m < lo || (open_left && m == lo)) return Pos::Below;
        if (hi && m >= *hi) return Pos::Above;
        return Pos::Inside;
    }
};

// One candidate component of {q >= 0} within a window, with exact membership,
// a direction oracle for the simplest-rational descent, and a nonemptiness
// decision. direction_right(m) means the whole component lies right of m.
struct Region {
    bool nonempty = false;
    std::function<bool(const Rational&)> member;
    std::function<bool(const Rational&)> direction_right;
};

// Simplest rational in a region: Stern-Brocot descent. The first tree node
// inside the region is the member with the smallest denominator (smallest
// numerator on ties). Runs of same-direction moves are taken with doubling
// jumps; the skipped mediants are monotone, so none of them can be a member.
Rational simplest_in(const Region& region) {
    BigInt ln(0), ld(1), hn(1), hd(0);
    for (int step = 0; step < 4096; ++step) {
        BigInt mn = ln + hn;
        BigInt md = ld + hd;
        Rational m(mn, md);
        if (region.member(m)) return m;
        bool go_right = region.direction_right(m);
        BigInt run(1);
        for (int doubling = 0; doubling < 200; ++doubling) {
            BigInt next_run = run + run;
            BigInt cn = go_right ? ln + next_run * hn : hn + next_run * ln;
            BigInt cd = go_right ? ld + next_run * hd : hd + next_run * ld;
            Rational candidate(cn, cd);
            if (region.member(candidate)) break;
            if (region.direction_right(candidate) != go_right) break;
            run = std::move(next_run);
        }
        if (go_right) {
            ln = ln + run * hn;
            ld = ld + run * hd;
        } else {
            hn = hn + run * ln;
            hd = hd + run * ld;
        }
    }
    throw structural_error("simplest-rational search failed to converge");
}

// All components of {t in window : q(t) >= 0}.
std::vector<Region> violation_regions(const Quadratic& q, const Window& window) {
    std::vector<Region> regions;
    auto inside = [window](const Rational& m) { return window.locate(m) == Pos::Inside; };
    auto below = [window](const Rational& m) { return window.locate(m) == Pos::Below; };

    auto window_nonempty_from = [&](const Rational& bound) {
        // Is there a window point >= bound?
        if (!window.hi) return true;
        return bound < *window.hi;
    };

    if (q.A.is_zero() && q.B.is_zero()) {
        if (q.C >= kZero) {
            regions.push_back({true, inside, below}); // everywhere
        }
        return regions;
    }

    if (q.A.is_zero()) {
        Rational root = q.C.negated() / q.B;
        if (q.B.sign() > 0) {
            // {t >= root}
            Region r;
            r.member = [=](const Rational& m) { return inside(m) && m >= root; };
            r.direction_right = [=](const Rational& m) { return below(m) || (inside(m) && m < root); };
            Rational left = max(root, window.lo);
            r.nonempty = window_nonempty_from(left);
            regions.push_back(std::move(r));
        } else {
            // {t <= root}
            Region r;
            r.member = [=](const Rational& m) { return inside(m) && m <= root; };
            r.direction_right = below;
            r.nonempty = window.open_left ? root > window.lo : root >= window.lo;
            regions.push_back(std::move(r));
        }
        return regions;
    }

    Rational vertex = q.B.negated() / (Rational(2) * q.A);
    Rational at_vertex = q.eval(vertex);

    if (q.A.sign() > 0) {
        if (at_vertex >= kZero) {
            regions.push_back({true, inside, below}); // parabola never dips below zero
            return regions;
        }
        // Two rays: {t <= r1} and {t >= r2} around the vertex.
        Region left;
        left.member = [=, &q](const Rational& m) { return inside(m) && m <= vertex && q.eval(m) >= kZero; };
        left.direction_right = below;
        if (window.open_left) {
            left.nonempty = vertex > kZero && q.eval(window.lo) > kZero;
        } else {
            left.nonempty = window.lo <= vertex && q.eval(window.lo) >= kZero;
        }
        regions.push_back(std::move(left));

        Region right;
        right.member = [=, &q](const Rational& m) { return inside(m) && m >= vertex && q.eval(m) >= kZero; };
        right.direction_right = [=, &q](const Rational& m) {
            return below(m) || (inside(m) && (m < vertex || q.eval(m) < kZero));
        };
        if (!window.hi) {
            right.nonempty = true;
        } else {
            right.nonempty = *window.hi > vertex && q.eval(*window.hi) > kZero;
        }
        regions.push_back(std::move(right));
        return regions;
    }

    // A < 0: cap-shaped.
    if (at_vertex < kZero) return regions; // nowhere
    if (at_vertex.is_zero()) {
        // Single point {vertex}.
        Region r;
        r.member = [=](const Rational& m) { return inside(m) && m == vertex; };
        r.direction_right = [=](const Rational& m) { return below(m) || m < vertex; };
        r.nonempty = window.locate(vertex) == Pos::Inside;
        regions.push_back(std::move(r));
        return regions;
    }
    // Interval [r1, r2] containing the vertex.
    Region r;
    r.member = [=, &q](const Rational& m) { return inside(m) && q.eval(m) >= kZero; };
    r.direction_right = [=, &q](const Rational& m) {
        return below(m) || (inside(m) && q.eval(m) < kZero && m < vertex);
    };
    switch (window.locate(vertex)) {
        case Pos::Inside:
            r.nonempty = true;
            break;
        case Pos::Below:
            // q decreasing over the window.
            if (window.open_left) {
                r.nonempty = q.eval(window.lo) > kZero;
            } else {
                r.nonempty = q.eval(window.lo) >= kZero;
            }
            break;
        case Pos::Above:
            // q increasing over the window; window.hi exists here.
            r.nonempty = q.eval(*window.hi) > kZero;
            break;
    }
    regions.push_back(std::move(r));
    return regions;
}

Window piece_window(const GaugePiece& piece) {
    return Window{piece.lo, piece.lo.is_zero(), piece.hi};
}

// Simplest rational t > 0 in the piece with f(t) >= t, if any.
std::optional<Rational> below_identity_violation(const GaugePiece& piece) {
    Quadratic q = identity_gap(piece);
    Window window = piece_window(piece);
    std::optional<Rational> best;
    for (const Region& region : violation_regions(q, window)) {
        if (!region.nonempty) continue;
        Rational w = simplest_in(region);
        if (!best || w.den() < best->den() ||
            (w.den() == best->den() && w.num() < best->num())) {
            best = w;
        }
    }
    return best;
}

// Witness pair for a piece that decreases somewhere (monotonicity_sign < 0).
MonotonicityWitness decreasing_witness(const GaugePiece& piece) {
    Rational t1 = piece.lo;
    Rational t2 = piece.hi ? (piece.lo + *piece.hi) / Rational(2) : piece.lo + kOne;
    return MonotonicityWitness{t1, t2};
}

// For a boundary where the left piece's values exceed the right piece's value,
// walks toward the boundary until the exceedance is witnessed exactly.
MonotonicityWitness boundary_witness(const GaugePiece& left, const Rational& boundary,
                                     const Rational& right_value) {
    Rational gap = boundary - left.lo;
    Rational t = left.lo;
    for (int i = 0; i < 512; ++i) {
        if (left.formula.eval(t) > right_value) return MonotonicityWitness{t, boundary};
        gap = gap / Rational(2);
        t = boundary - gap;
    }
    throw structural_error("boundary witness search failed to converge");
}

struct MonotonicityReport {
    CheckVerdict verdict;
    std::optional<MonotonicityWitness> witness;
};

MonotonicityReport check_nondecreasing(const GaugeFunction& g) {
    for (const GaugePiece& piece : g.pieces()) {
        if (monotonicity_sign(piece) < 0) {
            return {CheckVerdict::Refuted, decreasing_witness(piece)};
        }
    }
    for (size_t i = 0; i + 1 < g.pieces().size(); ++i) {
        const GaugePiece& left = g.pieces()[i];
        const Rational& boundary = *left.hi;
        Rational right_value = g.pieces()[i + 1].formula.eval(boundary);
        EndLimit lim = upper_limit(left);
        if (lim.kind == EndLimit::PlusInf ||
            (lim.kind == EndLimit::Finite && lim.value > right_value)) {
            return {CheckVerdict::Refuted, boundary_witness(left, boundary, right_value)};
        }
    }
    return {CheckVerdict::Verified, std::nullopt};
}

} // namespace

std::span<const Rational> default_gauge_probes() {
    static const std::vector<Rational> probes = {
        Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(4, 5),
        Rational(1),     Rational(2),    Rational(10)};
    return probes;
}

const Rational& default_tail_tolerance() {
    static const Rational tol(1, 1000000);
    return tol;
}

namespace {

enum class ProbeOutcome { Proven, Evidence, Refuted, Inconclusive };

struct ProbeResult {
    ProbeOutcome outcome;
    std::optional<Rational> witness;
};

bool in_absorbing_linear_bottom(const GaugeFunction& g, const Rational& s) {
    const GaugePiece& bottom = g.pieces().front();
    if (bottom.formula.kind != FormulaKind::Linear) return false;
    if (bottom.formula.a >= kOne) return false;
    return g.piece_index(s) == 0;
}

ProbeResult run_orbit(const GaugeFunction& g, const Rational& probe, int iterations,
                      const Rational& tolerance) {
    // Orbits of quadratic pieces square their denominators every step; a
    // representation budget keeps slowly contracting probes from exploding,
    // at the price of an honest Inconclusive.
    constexpr size_t kOrbitBitBudget = 4096;
    Rational s = probe;
    std::deque<Rational> ratios; // most recent consecutive ratios, window of 8
    for (int k = 0; k < iterations; ++k) {
        if (in_absorbing_linear_bottom(g, s)) {
            // From here the tail is exactly geometric with ratio < 1.
            return {ProbeOutcome::Proven, std::nullopt};
        }
        if (s.num().bit_size() + s.den().bit_size() > kOrbitBitBudget) {
            return {ProbeOutcome::Inconclusive, std::nullopt};
        }
        Rational next = g.eval(s);
        if (s > kZero && next >= s) {
            return {ProbeOutcome::Refuted, s};
        }
        if (s > kZero) {
            ratios.push_back(next / s);
            if (ratios.size() > 8) ratios.pop_front();
        } else {
            ratios.clear();
        }
        s = next;
        if (s.is_zero() && g.eval(kZero).is_zero()) {
            // The orbit is absorbed at 0; the remaining tail is exactly zero.
            return {ProbeOutcome::Evidence, std::nullopt};
        }
        if (!ratios.empty()) {
            Rational r_hat = ratios.front();
            for (const Rational& r : ratios) r_hat = max(r_hat, r);
            if (r_hat < kOne) {
                Rational bound = s * r_hat / (kOne - r_hat);
                if (bound < tolerance) return {ProbeOutcome::Evidence, std::nullopt};
            }
        }
    }
    return {ProbeOutcome::Inconclusive, std::nullopt};
}

} // namespace

std::optional<Rational> GaugeVerdict::primary_witness() const {
    if (below_identity_witness) return below_identity_witness;
    if (series_witness) return series_witness;
    return std::nullopt;
}

std::optional<Rational> PhiClassVerdict::primary_witness() const {
    if (below_identity_witness) return below_identity_witness;
    if (usc_witness) return usc_witness;
    return std::nullopt;
}

GaugeVerdict classify_gauge(const GaugeFunction& psi, std::span<const Rational> probes,
                            int iterations, const Rational& tail_tolerance) {
    if (probes.empty()) throw domain_error("gauge classification needs at least one probe");
    if (iterations < 2) throw domain_error("gauge classification needs at least two iterations");
    for (const Rational& p : probes) {
        if (p < kZero) throw domain_error("gauge probes must be nonnegative");
    }

    GaugeVerdict verdict;

    MonotonicityReport mono = check_nondecreasing(psi);
    verdict.nondecreasing = mono.verdict;
    verdict.nondecreasing_witness = mono.witness;

    verdict.below_identity = CheckVerdict::Verified;
    for (const GaugePiece& piece : psi.pieces()) {
        if (auto witness = below_identity_violation(piece)) {
            verdict.below_identity = CheckVerdict::Refuted;
            verdict.below_identity_witness = witness;
            break;
        }
    }

    bool any_inconclusive = false;
    bool all_proven = true;
    verdict.series_convergent = SeriesVerdict::Evidence;
    for (const Rational& probe : probes) {
        ProbeResult result = run_orbit(psi, probe, iterations, tail_tolerance);
        if (result.outcome == ProbeOutcome::Refuted) {
            verdict.series_convergent = SeriesVerdict::Refuted;
            verdict.series_witness = result.witness;
            all_proven = false;
            break;
        }
        if (result.outcome == ProbeOutcome::Inconclusive) any_inconclusive = true;
        if (result.outcome != ProbeOutcome::Proven) all_proven = false;
    }
    if (verdict.series_convergent != SeriesVerdict::Refuted) {
        if (any_inconclusive) {
            verdict.series_convergent = SeriesVerdict::Inconclusive;
        } else if (all_proven) {
            verdict.series_convergent = SeriesVerdict::Verified;
        }
    }

    bool refuted = verdict.nondecreasing == CheckVerdict::Refuted ||
                   verdict.below_identity == CheckVerdict::Refuted ||
                   verdict.series_convergent == SeriesVerdict::Refuted;
    bool verified = verdict.nondecreasing == CheckVerdict::Verified &&
                    verdict.below_identity == CheckVerdict::Verified &&
                    (verdict.series_convergent == SeriesVerdict::Verified ||
                     verdict.series_convergent == SeriesVerdict::Evidence);
    verdict.in_psi = refuted ? CheckVerdict::Refuted
                             : (verified ? CheckVerdict::Verified : CheckVerdict::Inconclusive);
    return verdict;
}

GaugeVerdict classify_gauge(const GaugeFunction& psi) {
    return classify_gauge(psi, default_gauge_probes(), kDefaultGaugeIterations,
                          default_tail_tolerance());
}

PhiClassVerdict classify_phi_class(const GaugeFunction& phi) {
    PhiClassVerdict verdict;

    verdict.upper_semicontinuous = CheckVerdict::Verified;
    for (size_t i = 0; i + 1 < phi.pieces().size(); ++i) {
        const GaugePiece& left = phi.pieces()[i];
        const Rational& boundary = *left.hi;
        Rational value = phi.pieces()[i + 1].formula.eval(boundary);
        EndLimit lim = upper_limit(left);
        // The right limit equals the value itself, so only the left limit can
        // break upper semicontinuity.
        if (lim.kind == EndLimit::PlusInf ||
            (lim.kind == EndLimit::Finite && value < lim.value)) {
            verdict.upper_semicontinuous = CheckVerdict::Refuted;
            verdict.usc_witness = boundary;
            break;
        }
    }

    MonotonicityReport mono = check_nondecreasing(phi);
    verdict.nondecreasing = mono.verdict;
    verdict.nondecreasing_witness = mono.witness;

    verdict.below_identity = CheckVerdict::Verified;
    for (const GaugePiece& piece : phi.pieces()) {
        if (auto witness = below_identity_violation(piece)) {
            verdict.below_identity = CheckVerdict::Refuted;
            verdict.below_identity_witness = witness;
            break;
        }
    }

    bool refuted = verdict.upper_semicontinuous == CheckVerdict::Refuted ||
                   verdict.nondecreasing == CheckVerdict::Refuted ||
                   verdict.below_identity == CheckVerdict::Refuted;
    verdict.in_class = refuted ? CheckVerdict::Refuted : CheckVerdict::Verified;
    return verdict;
}

} // namespace fpgraph
