#pragma once

#include "modfun/matrix.hpp"
#include "modfun/report.hpp"
#include "modfun/tensor.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace modfun {

using Label = std::size_t;

/// Multiplicities of the simple objects in a direct sum: m(alpha) copies of Q_alpha.
struct ObjectVector {
    std::vector<std::int64_t> m;

    ObjectVector() = default;
    explicit ObjectVector(std::size_t rank) : m(rank, 0) {}
    explicit ObjectVector(std::vector<std::int64_t> mult) : m(std::move(mult)) {}

    [[nodiscard]] std::size_t size() const { return m.size(); }
    std::int64_t& operator[](Label a) { return m[a]; }
    std::int64_t operator[](Label a) const { return m[a]; }
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const ObjectVector&, const ObjectVector&) = default;
    friend ObjectVector operator+(const ObjectVector& a, const ObjectVector& b);
};

/// Thrown when a ring's data cannot be loaded at all (bad shapes, labels out of
/// range, negative coefficients). Axiom failures are reported, not thrown.
class FusionDataError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by block_decomposition when the unit does not partition the labels.
class AxiomInconsistency : public std::runtime_error {
public:
    AxiomInconsistency(Label label, const std::string& what);
    [[nodiscard]] Label label() const { return label_; }

private:
    Label label_;
};

/// A based ring with involution. Coefficients are stored as n(a, b, c) =
/// n^c_{ab}, the multiplicity of Q_c in Q_a * Q_b. The unit is the direct sum
/// of the listed components, each with multiplicity one.
class FusionRing {
public:
    FusionRing(std::vector<std::string> names, std::vector<Label> dual, std::vector<Label> unit_components,
               Tensor3<std::int64_t> coefficients);

    [[nodiscard]] std::size_t rank() const { return names_.size(); }
    [[nodiscard]] const std::string& name(Label a) const { return names_.at(a); }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] std::optional<Label> find(const std::string& name) const;
    [[nodiscard]] Label dual(Label a) const { return dual_.at(a); }
    [[nodiscard]] const std::vector<Label>& duals() const { return dual_; }
    [[nodiscard]] const std::vector<Label>& unit_components() const { return unit_; }
    [[nodiscard]] bool is_unit_component(Label a) const;
    [[nodiscard]] std::int64_t n(Label a, Label b, Label c) const { return coeff_(a, b, c); }
    [[nodiscard]] const Tensor3<std::int64_t>& coefficients() const { return coeff_; }

    [[nodiscard]] ObjectVector basis(Label a) const;
    [[nodiscard]] ObjectVector unit_vector() const;

    /// Copy with n^c_{ab} replaced; no symmetric entries are touched.
    [[nodiscard]] FusionRing with_coefficient(Label a, Label b, Label c, std::int64_t value) const;
    /// Copy with the involution replaced wholesale (need not be an involution).
    [[nodiscard]] FusionRing with_duals(std::vector<Label> dual) const;

    friend bool operator==(const FusionRing&, const FusionRing&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Label> dual_;
    std::vector<Label> unit_;
    Tensor3<std::int64_t> coeff_;
};

/// z(c) = sum_{a,b} x(a) y(b) n^c_{ab}.
[[nodiscard]] ObjectVector multiply(const FusionRing& r, const ObjectVector& x, const ObjectVector& y);

/// Checks the involution, associativity, commutativity (n^c_{ab} = n^c_{ba}),
/// Frobenius symmetry (n^c_{ab} = n^{dual b}_{dual c, a}) and the unit law
/// sum_i n^c_{a,beta_i} = delta_{ac}. Issue codes: "involution", "assoc",
/// "commute", "frobenius", "unit".
[[nodiscard]] Report verify_axioms(const FusionRing& r);

/// Partition of the labels by unit component: block i holds every a with
/// n^a_{a,beta_i} = 1.
struct BlockDecomposition {
    std::vector<Label> units;                ///< beta_i for each block
    std::vector<std::vector<Label>> blocks;  ///< sorted labels of each block
    std::vector<std::size_t> block_of;       ///< label -> block index
};

/// Throws AxiomInconsistency naming the offending label when some label lies in
/// zero or several blocks, or when a block is not closed under dual or product.
[[nodiscard]] BlockDecomposition block_decomposition(const FusionRing& r);

/// Sub-ring on one block, relabelled 0..k-1 in the block's label order.
[[nodiscard]] FusionRing restrict_to_block(const FusionRing& r, const std::vector<Label>& block);

/// Direct product of rings: labels of `a` first, then `b`; block-diagonal
/// coefficients; unit components of both. Names are suffixed when they clash.
[[nodiscard]] FusionRing direct_product(const FusionRing& a, const FusionRing& b);

/// x*(a) = x(dual a).
[[nodiscard]] ObjectVector dual_object(const FusionRing& r, const ObjectVector& x);

/// <x, y> = sum_a x(dual a) y(a).
[[nodiscard]] std::int64_t inner_product(const FusionRing& r, const ObjectVector& x, const ObjectVector& y);

/// The matrix <Q_a, Q_b>.
[[nodiscard]] Matrix pairing_matrix(const FusionRing& r);

/// Checks <Q_a, Q_b * Q_c> = <Q_a * Q_b, Q_c> for all triples. Issue code
/// "pairing"; each message names the matching Frobenius-symmetry instance.
[[nodiscard]] Report verify_frobenius_pairing(const FusionRing& r);

class EnumerationBounds : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxEnumerationRank = 4;
inline constexpr std::int64_t kMaxEnumerationCoeff = 3;

/// Every ring of the given rank with irreducible self-dual unit (label 0) up to
/// relabelling of the non-unit labels. `max_coeff` bounds the coefficients
/// n^c_{ab} among non-unit labels; coefficients touching the unit are fixed by
/// the unit law. Output is sorted by canonical encoding.
[[nodiscard]] std::vector<FusionRing> enumerate_fusion_rings(std::size_t rank, std::int64_t max_coeff);

}  // namespace modfun
