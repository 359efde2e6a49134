#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace modfun;
using modfun::test::corpus_algebra;
using modfun::test::Gen;

namespace {

CobordismWord word(std::initializer_list<std::initializer_list<Generator>> layers)
{
    CobordismWord w;
    for (const auto& l : layers) w.layers.emplace_back(l);
    return w;
}

using G = Generator;

}  // namespace

TEST_CASE("validate_frobenius examples")
{
    CHECK(validate_frobenius(corpus_algebra("ground")).ok());
    CHECK(validate_frobenius(corpus_algebra("k2")).ok());
    const auto dn = corpus_algebra("dual_numbers");
    CHECK(validate_frobenius(dn).ok());
    CHECK(dn.pairing() == Matrix{{0, 1}, {1, 0}});
    const auto bad = parse_algebra(test::corpus_text("negative/dual_numbers_degenerate.algebra"));
    CHECK(bad.pairing() == Matrix{{1, 0}, {0, 0}});
    CHECK(validate_frobenius(bad).has("degenerate"));
    CHECK_THROWS_AS((void)bad.copairing(), DegeneratePairing);
}

TEST_CASE("validate_frobenius reports broken associativity and unit")
{
    const auto z2 = corpus_algebra("z2");
    CHECK(validate_frobenius(z2.with_mult(0, 1, 1, 2)).has("assoc"));
    const FrobeniusAlgebra no_unit(z2.basis_names(), z2.structure_constants(), Vector{Rational(0), Rational(1)},
                                   z2.counit());
    CHECK(validate_frobenius(no_unit).has("unit"));
}

TEST_CASE("every shipped algebra is a valid Frobenius algebra")
{
    for (const auto& name : test::algebra_names()) {
        CAPTURE(name);
        const auto a = corpus_algebra(name);
        CHECK(validate_frobenius(a).ok());
        CHECK(verify_tensor_identities(a).ok());
    }
}

TEST_CASE("closed words: sphere, torus and their variants")
{
    const auto k2 = corpus_algebra("k2");
    CHECK(evaluate_closed(k2, word({{G::Unit}, {G::Counit}})) == k2.apply_counit(k2.unit()));
    CHECK(evaluate_closed(k2, word({{G::Unit}, {G::Comult}, {G::Mult}, {G::Counit}})) == 2);
    CHECK(evaluate_closed(k2, word({{G::Unit}, {G::Comult}, {G::Swap}, {G::Mult}, {G::Counit}})) == 2);
    CHECK(evaluate_closed(k2, word({{G::Cup}, {G::Cap}})) == 2);
}

TEST_CASE("open words: snakes are identities")
{
    for (const auto& name : test::algebra_names()) {
        CAPTURE(name);
        const auto a = corpus_algebra(name);
        const auto left = evaluate_word(a, word({{G::Id, G::Cup}, {G::Cap, G::Id}}));
        const auto right = evaluate_word(a, word({{G::Cup, G::Id}, {G::Id, G::Cap}}));
        CHECK(left.matrix == Matrix::identity(a.dim()));
        CHECK(right.matrix == Matrix::identity(a.dim()));
    }
}

TEST_CASE("word typing errors name the layer")
{
    try {
        (void)check_word(word({{G::Unit}, {G::Mult}, {G::Counit}}));
        FAIL("expected WordTypeError");
    } catch (const WordTypeError& e) {
        CHECK(e.layer() == 1);
    }
    CHECK(check_word(word({{G::Id, G::Id}, {G::Mult}})) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK_THROWS_AS((void)evaluate_closed(corpus_algebra("k2"), word({{G::Id}})), WordTypeError);
}

TEST_CASE("generator names round trip")
{
    for (auto g : {G::Id, G::Swap, G::Mult, G::Comult, G::Unit, G::Counit, G::Cup, G::Cap})
        CHECK(parse_generator(generator_name(g)) == g);
    CHECK_FALSE(parse_generator("glue").has_value());
}

TEST_CASE("genus invariant examples")
{
    CHECK(genus_invariant(corpus_algebra("ground"), 0) == 1);
    for (const auto& name : test::algebra_names()) {
        CAPTURE(name);
        const auto a = corpus_algebra(name);
        CHECK(genus_invariant(a, 1) == static_cast<std::int64_t>(a.dim()));
    }
    // omega = 1 for k^2 with counit (1, 1), so every genus gives 2.
    CHECK(genus_invariant(corpus_algebra("k2"), 2) == 2);
    CHECK(genus_invariant(corpus_algebra("z2"), 2) == 4);
    CHECK(genus_invariant(corpus_algebra("z3"), 2) == 9);
    CHECK(genus_invariant(corpus_algebra("m2"), 2) == 8);
    CHECK(genus_invariant(corpus_algebra("dual_numbers"), 2) == 0);
}

TEST_CASE("genus invariant agrees with every word presentation up to genus four")
{
    for (const auto& name : test::algebra_names()) {
        CAPTURE(name);
        const auto a = corpus_algebra(name);
        for (std::size_t g = 0; g <= 4; ++g) {
            CAPTURE(g);
            const auto z = genus_invariant(a, g);
            CHECK(evaluate_closed(a, canonical_genus_word(g)) == z);
            for (const auto& w : genus_words(g, a.is_commutative())) CHECK(evaluate_closed(a, w) == z);
        }
    }
}

TEST_CASE("invariance suite passes on the corpus and catches a perturbed product")
{
    for (const auto& name : test::algebra_names()) {
        CAPTURE(name);
        CHECK(invariance_suite(corpus_algebra(name), 5, 3, 7).ok());
    }
    const auto bad = corpus_algebra("z2").with_mult(0, 1, 1, 2);
    CHECK_FALSE(invariance_suite(bad, 2, 3, 7).ok());
}

TEST_CASE("property: random basis changes preserve invariants")
{
    Gen g(41);
    for (const auto& name : test::algebra_names()) {
        CAPTURE(name);
        const auto a = corpus_algebra(name);
        for (int t = 0; t < 5; ++t) {
            const auto b = change_basis(a, g.invertible(a.dim()));
            CHECK(validate_frobenius(b).ok());
            for (std::size_t k = 0; k <= 3; ++k) CHECK(genus_invariant(b, k) == genus_invariant(a, k));
        }
    }
}

TEST_CASE("direct sums add invariants")
{
    const auto a = corpus_algebra("z2");
    const auto b = corpus_algebra("m2");
    const auto s = direct_sum(a, b);
    CHECK(validate_frobenius(s).ok());
    for (std::size_t g = 0; g <= 3; ++g) CHECK(genus_invariant(s, g) == genus_invariant(a, g) + genus_invariant(b, g));
}

TEST_CASE("algebras from fusion rings reproduce surface dimensions")
{
    for (const auto& name : test::ring_names()) {
        CAPTURE(name);
        const auto r = test::corpus_fusion(name);
        const auto a = frobenius_from_fusion(r);
        CHECK(validate_frobenius(a).ok());
        for (std::size_t g = 0; g <= 4; ++g) CHECK(genus_invariant(a, g) == dim_V(r, ColouredSurface{g, {}}));
    }
}

TEST_CASE("Fibonacci algebra: pairing is the dual permutation")
{
    const auto a = frobenius_from_fusion(test::corpus_fusion("fib"));
    CHECK(a.pairing() == Matrix::identity(2));
    CHECK(handle_element(a) == Vector{Rational(2), Rational(1)});
    const auto z3 = frobenius_from_fusion(test::corpus_fusion("z3"));
    CHECK(z3.pairing() == Matrix{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
}

TEST_CASE("group algebra of Z/2 from its fusion ring")
{
    const auto a = frobenius_from_fusion(test::corpus_fusion("z2"));
    CHECK(a.structure_constants() == corpus_algebra("z2").structure_constants());
    CHECK(genus_invariant(a, 1) == 2);
}

TEST_CASE("non-commutative group algebra of S3")
{
    const auto a = corpus_algebra("s3");
    CHECK_FALSE(a.is_commutative());
    // omega = sum_g g g^{-1} = 6, so the invariant is 6^g.
    Rational expected = 1;
    for (std::size_t g = 0; g <= 4; ++g) {
        CHECK(genus_invariant(a, g) == expected);
        expected *= 6;
    }
}
