#pragma once

#include "modfun/matrix.hpp"
#include "modfun/report.hpp"
#include "modfun/tensor.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modfun {

/// Malformed category data: unknown names, type mismatches, indices out of range.
class CategoryLoadError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An element of hom(src, dst), as coefficients over that hom's basis.
struct Morphism {
    std::size_t src = 0;
    std::size_t dst = 0;
    Vector coeffs;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Finite k-linear category given by hom bases and composition constants.
/// Basis names are unique across the whole category.
class PresentedCategory {
public:
    [[nodiscard]] std::size_t num_objects() const { return objects_.size(); }
    [[nodiscard]] const std::string& object_name(std::size_t p) const { return objects_.at(p); }
    [[nodiscard]] std::optional<std::size_t> find_object(const std::string& name) const;
    [[nodiscard]] std::size_t hom_dim(std::size_t p, std::size_t q) const { return hom_names_[index(p, q)].size(); }
    [[nodiscard]] const std::vector<std::string>& hom_basis(std::size_t p, std::size_t q) const
    {
        return hom_names_[index(p, q)];
    }

    /// Coefficients of (g o f) for basis g in hom(q, r) and basis f in hom(p, q),
    /// indexed (g, f, h) with h running over hom(p, r).
    [[nodiscard]] const Tensor3<Rational>& composition(std::size_t p, std::size_t q, std::size_t r) const;
    [[nodiscard]] const Morphism& identity(std::size_t p) const { return identities_.at(p); }

    [[nodiscard]] Morphism basis_morphism(std::size_t p, std::size_t q, std::size_t i) const;
    [[nodiscard]] Morphism zero(std::size_t p, std::size_t q) const;
    /// g o f. Throws DimensionMismatch when f's target is not g's source.
    [[nodiscard]] Morphism compose(const Morphism& g, const Morphism& f) const;

    friend bool operator==(const PresentedCategory&, const PresentedCategory&) = default;

private:
    friend class CategoryBuilder;
    [[nodiscard]] std::size_t index(std::size_t p, std::size_t q) const { return p * objects_.size() + q; }

    std::vector<std::string> objects_;
    std::vector<std::vector<std::string>> hom_names_;  // p * n + q
    std::vector<Tensor3<Rational>> composition_;       // (p * n + q) * n + r
    std::vector<Morphism> identities_;
};

/// Incremental construction; `build` checks shapes but not the axioms.
class CategoryBuilder {
public:
    std::size_t add_object(const std::string& name);
    std::size_t add_hom(std::size_t p, std::size_t q, const std::string& basis_name);
    /// Sets g o f = sum of (coefficient, basis) terms, by basis name.
    void set_composition(const std::string& g, const std::string& f,
                         const std::vector<std::pair<Rational, std::string>>& terms);
    /// Same, by indices: g in hom(q, r), f in hom(p, q).
    void set_composition(std::size_t p, std::size_t q, std::size_t r, std::size_t g, std::size_t f, Vector value);
    void set_identity(std::size_t p, const std::vector<std::pair<Rational, std::string>>& terms);
    void set_identity(std::size_t p, Vector value);

    [[nodiscard]] std::optional<std::size_t> find_object(const std::string& name) const;
    [[nodiscard]] PresentedCategory build() const;

private:
    struct BasisRef {
        std::size_t p, q, i;
    };
    [[nodiscard]] const BasisRef& lookup(const std::string& basis) const;
    [[nodiscard]] Vector combination(std::size_t p, std::size_t q,
                                     const std::vector<std::pair<Rational, std::string>>& terms) const;

    std::vector<std::string> objects_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::string>> homs_;
    std::map<std::string, BasisRef> basis_;
    std::map<std::array<std::size_t, 5>, Vector> comps_;
    std::map<std::size_t, Vector> identities_;
};

/// Lists every basis triple where associativity fails ("assoc") and every
/// basis morphism where an identity is not a unit ("identity").
[[nodiscard]] Report validate_category(const PresentedCategory& c);

/// Sequences of objects of length 1..bound (plus the empty sequence when
/// `with_zero_object`), morphisms are matrices of morphisms. Throws
/// std::invalid_argument when bound < 1.
[[nodiscard]] PresentedCategory mat_completion(const PresentedCategory& c, std::size_t bound,
                                               bool with_zero_object = false);

class KaroubiError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct IdempotentCandidate {
    std::size_t object;
    Vector e;  ///< over the basis of hom(object, object)
};

/// Objects are the given (p, e); morphisms (e', f, e) with e'f = f = fe;
/// composition is the triple law. Throws KaroubiError carrying e o e - e when a
/// candidate is not idempotent.
[[nodiscard]] PresentedCategory karoubi_completion(const PresentedCategory& c,
                                                   const std::vector<IdempotentCandidate>& idempotents);
/// Uses every idempotent whose coefficients lie in `grid`.
[[nodiscard]] PresentedCategory karoubi_completion_from_grid(const PresentedCategory& c,
                                                             const std::vector<Rational>& grid);
[[nodiscard]] std::vector<Rational> default_idempotent_grid();
[[nodiscard]] std::vector<IdempotentCandidate> grid_idempotents(const PresentedCategory& c,
                                                                const std::vector<Rational>& grid);

/// Objects (p, p'), hom bases pairs f (x) f', composition factorwise.
[[nodiscard]] PresentedCategory tensor_product(const PresentedCategory& a, const PresentedCategory& b);

/// Partition of the objects whose endomorphisms are just k: two such objects
/// are isomorphic iff some g o f between them is nonzero.
[[nodiscard]] std::vector<std::vector<std::size_t>> simple_object_classes(const PresentedCategory& c);

/// A one-object category. `mult(i, j, k)` is the coefficient of e_k in e_i e_j.
struct Algebra {
    std::vector<std::string> basis;
    Tensor3<Rational> mult;
    Vector unit;

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
    [[nodiscard]] Vector multiply(const Vector& a, const Vector& b) const;
    [[nodiscard]] PresentedCategory as_category(const std::string& object = "x") const;
    /// Throws CategoryLoadError unless the category has exactly one object.
    static Algebra from_category(const PresentedCategory& c);
};

struct TraceForm {
    bool semisimple = false;
    Matrix gram;  ///< trace(L_{e_i} L_{e_j})
};

/// Characteristic-zero criterion: semisimple iff the trace form of the left
/// regular representation is nondegenerate.
[[nodiscard]] TraceForm trace_form_semisimple(const Algebra& a);

/// `e` is sum E(i, j) e_i (x) e_j. Checks mult(e) = 1 ("multiplication"),
/// r e = e r for every basis r with the bimodule actions r(a (x) b) = ra (x) b
/// and (a (x) b)r = a (x) br ("central"), and e^2 = e in A (x) A^op
/// ("idempotent").
[[nodiscard]] Report verify_separability_idempotent(const Algebra& a, const Matrix& e);

}  // namespace modfun
