#pragma once

#include "modfun/fusion.hpp"
#include "modfun/matrix.hpp"
#include "modfun/report.hpp"
#include "modfun/tensor.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modfun {

class DegeneratePairing : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Finite-dimensional algebra with a counit. The pairing g_ij = eps(e_i e_j)
/// is derived, so invariance <ab,c> = <a,bc> holds by construction; it is
/// Frobenius when g is nondegenerate.
class FrobeniusAlgebra {
public:
    /// `mult(i, j, k)` is the coefficient of e_k in e_i e_j.
    FrobeniusAlgebra(std::vector<std::string> basis, Tensor3<Rational> mult, Vector unit, Vector counit);

    [[nodiscard]] std::size_t dim() const { return names_.size(); }
    [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
    [[nodiscard]] const Rational& mult(std::size_t i, std::size_t j, std::size_t k) const { return mult_(i, j, k); }
    [[nodiscard]] const Tensor3<Rational>& structure_constants() const { return mult_; }
    [[nodiscard]] const Vector& unit() const { return unit_; }
    [[nodiscard]] const Vector& counit() const { return counit_; }

    [[nodiscard]] Vector multiply(const Vector& a, const Vector& b) const;
    [[nodiscard]] Rational apply_counit(const Vector& a) const;
    [[nodiscard]] Matrix pairing() const;
    /// g^{ij}; throws DegeneratePairing when g is singular.
    [[nodiscard]] Matrix copairing() const;
    [[nodiscard]] bool is_commutative() const;

    [[nodiscard]] FrobeniusAlgebra with_mult(std::size_t i, std::size_t j, std::size_t k, Rational value) const;

    friend bool operator==(const FrobeniusAlgebra&, const FrobeniusAlgebra&) = default;

private:
    std::vector<std::string> names_;
    Tensor3<Rational> mult_;
    Vector unit_;
    Vector counit_;
};

/// Issue codes: "assoc", "unit", "invariance", "degenerate".
[[nodiscard]] Report validate_frobenius(const FrobeniusAlgebra& a);

enum class Generator { Id, Swap, Mult, Comult, Unit, Counit, Cup, Cap };

[[nodiscard]] std::string_view generator_name(Generator g);
[[nodiscard]] std::optional<Generator> parse_generator(std::string_view name);
/// (inputs, outputs)
[[nodiscard]] std::pair<std::size_t, std::size_t> arity(Generator g);

/// Layers of generators placed side by side; layer t consumes the wires layer
/// t-1 produced, left to right.
struct CobordismWord {
    std::vector<std::vector<Generator>> layers;
    friend bool operator==(const CobordismWord&, const CobordismWord&) = default;
};

class WordTypeError : public std::invalid_argument {
public:
    WordTypeError(std::size_t layer, const std::string& what);
    [[nodiscard]] std::size_t layer() const { return layer_; }

private:
    std::size_t layer_;
};

/// (input wires, output wires). Throws WordTypeError naming the first layer
/// whose inputs do not match the previous layer's outputs.
[[nodiscard]] std::pair<std::size_t, std::size_t> check_word(const CobordismWord& w);

/// Linear map V^{in} -> V^{out} as a dim^out x dim^in matrix; wires flatten
/// with the leftmost wire most significant.
struct LinearMap {
    std::size_t in_arity = 0;
    std::size_t out_arity = 0;
    Matrix matrix;
};

/// Tensor of a single generator.
[[nodiscard]] Matrix generator_matrix(const FrobeniusAlgebra& a, Generator g);
[[nodiscard]] LinearMap evaluate_word(const FrobeniusAlgebra& a, const CobordismWord& w);
/// Scalar of a closed (0 -> 0) word; throws WordTypeError otherwise.
[[nodiscard]] Rational evaluate_closed(const FrobeniusAlgebra& a, const CobordismWord& w);

/// eps(omega^g) with omega = sum_ij g^{ij} e_i e_j.
[[nodiscard]] Rational genus_invariant(const FrobeniusAlgebra& a, std::size_t genus);
[[nodiscard]] Vector handle_element(const FrobeniusAlgebra& a);

/// unit; (comult; mult) repeated `genus` times; counit.
[[nodiscard]] CobordismWord canonical_genus_word(std::size_t genus);
/// Several distinct closed words of the given genus, canonical first. Words
/// using `swap` are included only when `commutative`.
[[nodiscard]] std::vector<CobordismWord> genus_words(std::size_t genus, bool commutative);

/// Structure constants in the basis f_a = sum_i P(i, a) e_i.
[[nodiscard]] FrobeniusAlgebra change_basis(const FrobeniusAlgebra& a, const Matrix& p);
[[nodiscard]] FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b);

/// Random basis changes must leave genus invariants unchanged ("basis"), every
/// presentation of a genus must evaluate alike ("word"), and the canonical word
/// must agree with eps(omega^g) ("handle"). Genus 0..max_genus.
[[nodiscard]] Report invariance_suite(const FrobeniusAlgebra& a, std::size_t trials, std::size_t max_genus = 3,
                                      std::uint64_t seed = 1);

/// Exact tensor identities: both snakes, cap o cup = dim, and
/// (mult x id)(id x comult) = comult o mult = (id x mult)(comult x id).
/// Issue codes: "snake", "trace", "frobenius".
[[nodiscard]] Report verify_tensor_identities(const FrobeniusAlgebra& a);

/// Basis {Q_a}, product from the fusion coefficients, unit = sum of unit
/// components, eps(Q_a) = 1 on unit components and 0 elsewhere. Throws
/// DegeneratePairing if the derived pairing is singular.
[[nodiscard]] FrobeniusAlgebra frobenius_from_fusion(const FusionRing& r);

}  // namespace modfun
