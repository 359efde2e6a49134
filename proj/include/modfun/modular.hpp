#pragma once

#include "modfun/fusion.hpp"
#include "modfun/rational.hpp"
#include "modfun/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace modfun {

/// Genus plus boundary colouring. Every boundary circle is incoming; an
/// outgoing circle coloured a is written as an incoming one coloured dual(a).
struct ColouredSurface {
    std::size_t genus = 0;
    std::vector<Label> boundary;

    friend bool operator==(const ColouredSurface&, const ColouredSurface&) = default;
};

struct NamedSurface {
    std::string name;
    ColouredSurface surface;
};

/// How a dimension is evaluated: where each new pair {dual a, a} is inserted
/// when a handle is cut open, and how the final product is bracketed.
struct GluingSchedule {
    enum class Insert { Append, Prepend, Middle, Random };
    enum class Fold { Left, Right, Balanced, Random };
    Insert insert = Insert::Append;
    Fold fold = Fold::Left;
    std::uint64_t seed = 0;
};

[[nodiscard]] std::string describe(const GluingSchedule& s);

/// Dimension of V(surface) in each unit block: entry i is the multiplicity of
/// beta_i in the fusion product of the colours after cutting every handle.
[[nodiscard]] std::vector<std::int64_t> dim_V_per_block(const FusionRing& r, const ColouredSurface& s);
/// Same quantity along an explicit evaluation schedule (no caching).
[[nodiscard]] std::vector<std::int64_t> dim_V_per_block(const FusionRing& r, const ColouredSurface& s,
                                                        const GluingSchedule& schedule);
/// Sum over unit blocks.
[[nodiscard]] std::int64_t dim_V(const FusionRing& r, const ColouredSurface& s);
/// Disjoint union: product of the component dimensions.
[[nodiscard]] std::int64_t dim_V_disjoint(const FusionRing& r, const std::vector<ColouredSurface>& components);

/// Evaluates `s` along several schedules plus `trials` random ones and checks
/// they agree; checks the separating gluing law
///   dim(g1+g2, s1 s2) = sum_a dim(g1, s1 + dual a) * dim(g2, s2 + a)
/// on random splits, that conjugating every colour leaves the dimension
/// unchanged, and that inserting a unit colour is neutral in irreducible blocks.
/// Issue codes: "order", "separating", "conjugate", "vacuum".
[[nodiscard]] Report verify_gluing_consistency(const FusionRing& r, const ColouredSurface& s, std::size_t trials,
                                               std::uint64_t seed = 1);

/// True iff some unit component is dual to some unit component, i.e.
/// sum_{i,j} delta(dual beta_i, beta_j) != 0.
[[nodiscard]] bool check_nontriviality(const FusionRing& r);

/// exp(2 pi i exponent / order), kept in lowest terms.
struct RootOfUnity {
    std::int64_t order = 1;
    std::int64_t exponent = 0;
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

class TwistFormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A nonzero twist scalar: an exact rational or a root of unity. Roots equal
/// to +1 or -1 are stored as rationals so equality is structural.
class TwistValue {
public:
    /// Throws TwistFormatError on zero.
    static TwistValue rational(const Rational& q);
    /// Throws TwistFormatError when order < 1.
    static TwistValue root_of_unity(std::int64_t order, std::int64_t exponent);

    [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    [[nodiscard]] const Rational& as_rational() const { return std::get<Rational>(v_); }
    [[nodiscard]] const RootOfUnity& as_root() const { return std::get<RootOfUnity>(v_); }
    [[nodiscard]] bool is_one() const { return is_rational() && as_rational() == Rational(1); }
    [[nodiscard]] std::string str() const;

    friend bool operator==(const TwistValue&, const TwistValue&) = default;

private:
    std::variant<Rational, RootOfUnity> v_ = Rational(1);
};

/// h_a per label; unset entries are reported as missing.
struct TwistData {
    std::vector<std::optional<TwistValue>> h;
};

/// Checks h = 1 on unit components and h_{dual a} = h_a. Issue codes:
/// "missing", "unit-twist", "dual-twist".
[[nodiscard]] Report validate_twists(const FusionRing& r, const TwistData& t);

struct BlockSummary {
    Label unit;
    std::vector<Label> labels;
    bool nontrivial = false;
    std::int64_t torus_dim = 0;
    std::vector<std::int64_t> surface_dims;  ///< parallel to ModularReport::surfaces
};

struct ModularReport {
    std::size_t rank = 0;
    std::vector<std::string> label_names;
    Report axioms;
    bool nontrivial = false;
    std::size_t unit_components = 0;
    std::vector<BlockSummary> blocks;
    std::int64_t torus_dim = 0;
    std::vector<NamedSurface> surfaces;
    std::vector<std::int64_t> total_dims;  ///< sum over blocks, per surface
    std::optional<Report> twists;
    std::size_t modular_functors = 0;

    [[nodiscard]] bool ok() const { return axioms.ok() && (!twists || twists->ok()); }
};

/// Block structure, non-triviality per block, dimension tables and optional
/// twist validation. If the axioms fail only `axioms` is filled in.
[[nodiscard]] ModularReport modular_report(const FusionRing& r, const std::optional<TwistData>& twists,
                                           const std::vector<NamedSurface>& surfaces);

[[nodiscard]] std::string render_text(const ModularReport& m);
/// Flat `key = value` lines in a fixed key order.
[[nodiscard]] std::string render_machine(const ModularReport& m);

}  // namespace modfun
