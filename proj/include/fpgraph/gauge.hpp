#pragma once

#include "fpgraph/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fpgraph {

// Closed-form shapes a gauge piece may take. These are exactly the shapes
// needed by the bundled corpus, and each admits exact monotonicity and
// fixed-point analysis over the rationals.
enum class FormulaKind { Linear, Quadratic, Mobius };

struct GaugeFormula {
    FormulaKind kind = FormulaKind::Linear;
    Rational a, b, c, d; // Linear/Quadratic use only a; Mobius is (a*t + b)/(c*t + d)

    static GaugeFormula linear(Rational slope);
    static GaugeFormula quadratic(Rational coeff);
    static GaugeFormula mobius(Rational a, Rational b, Rational c, Rational d);

    Rational eval(const Rational& t) const;
    bool operator==(const GaugeFormula&) const = default;
};

// Half-open piece [lo, hi) with hi = nullopt meaning +infinity.
struct GaugePiece {
    Rational lo;
    std::optional<Rational> hi;
    GaugeFormula formula;
    bool operator==(const GaugePiece&) const = default;
};

// Piecewise gauge on [0, inf). Construction validates that the pieces tile
// [0, inf) exactly, that Mobius denominators have no zero inside a piece, and
// that the function never goes negative.
class GaugeFunction {
public:
    explicit GaugeFunction(std::vector<GaugePiece> pieces);

    const std::vector<GaugePiece>& pieces() const { return pieces_; }
    size_t piece_index(const Rational& t) const; // t < 0 -> domain_error
    Rational eval(const Rational& t) const;

    static GaugeFunction single(GaugeFormula formula); // one piece on [0, inf)

    bool operator==(const GaugeFunction&) const = default;

private:
    std::vector<GaugePiece> pieces_;
};

enum class CheckVerdict { Verified, Refuted, Inconclusive };

// For series convergence: Verified means a geometric tail proof (the orbit
// reached the bottom piece and that piece is linear with slope < 1);
// Evidence means the observed ratios bounded the tail below the tolerance.
enum class SeriesVerdict { Verified, Evidence, Refuted, Inconclusive };

struct MonotonicityWitness {
    Rational t1, t2; // t1 < t2 with psi(t1) > psi(t2)
};

struct GaugeVerdict {
    CheckVerdict nondecreasing = CheckVerdict::Inconclusive;
    std::optional<MonotonicityWitness> nondecreasing_witness;

    CheckVerdict below_identity = CheckVerdict::Inconclusive;
    std::optional<Rational> below_identity_witness; // t with psi(t) >= t, t > 0

    SeriesVerdict series_convergent = SeriesVerdict::Inconclusive;
    std::optional<Rational> series_witness; // orbit point s > 0 with psi(s) >= s

    CheckVerdict in_psi = CheckVerdict::Inconclusive;

    // The witness a report should surface for a refuted membership.
    std::optional<Rational> primary_witness() const;
};

std::span<const Rational> default_gauge_probes();
inline constexpr int kDefaultGaugeIterations = 64;
const Rational& default_tail_tolerance(); // 1/10^6

GaugeVerdict classify_gauge(const GaugeFunction& psi, std::span<const Rational> probes,
                            int iterations, const Rational& tail_tolerance);
GaugeVerdict classify_gauge(const GaugeFunction& psi);

// Admissibility for the single-map contraction condition: upper semicontinuous,
// nondecreasing, and strictly below the identity on (0, inf). Semicontinuity
// only needs checking at piece boundaries, the sole discontinuity locus of a
// piecewise closed form.
struct PhiClassVerdict {
    CheckVerdict upper_semicontinuous = CheckVerdict::Inconclusive;
    std::optional<Rational> usc_witness; // boundary point where usc fails

    CheckVerdict nondecreasing = CheckVerdict::Inconclusive;
    std::optional<MonotonicityWitness> nondecreasing_witness;

    CheckVerdict below_identity = CheckVerdict::Inconclusive;
    std::optional<Rational> below_identity_witness;

    CheckVerdict in_class = CheckVerdict::Inconclusive;

    std::optional<Rational> primary_witness() const;
};

PhiClassVerdict classify_phi_class(const GaugeFunction& phi);

} // namespace fpgraph
