#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace modfun;
using modfun::test::corpus_fusion;
using modfun::test::Gen;

namespace {

ColouredSurface closed(std::size_t g) { return ColouredSurface{g, {}}; }

}  // namespace

TEST_CASE("disks: unit colour gives one, other colours give zero")
{
    for (const auto& name : test::ring_names()) {
        CAPTURE(name);
        const auto r = corpus_fusion(name);
        for (Label a = 0; a < r.rank(); ++a)
            CHECK(dim_V(r, ColouredSurface{0, {a}}) == (r.is_unit_component(a) ? 1 : 0));
    }
}

TEST_CASE("torus dimension equals the number of labels")
{
    for (const auto& name : test::ring_names()) {
        CAPTURE(name);
        const auto r = corpus_fusion(name);
        CHECK(dim_V(r, closed(1)) == static_cast<std::int64_t>(r.rank()));
    }
}

TEST_CASE("pair of pants with irreducible unit is a fusion coefficient")
{
    for (const auto& name : {"fib", "z3", "s3", "z2"}) {
        CAPTURE(name);
        const auto r = corpus_fusion(name);
        for (Label a = 0; a < r.rank(); ++a)
            for (Label b = 0; b < r.rank(); ++b)
                for (Label c = 0; c < r.rank(); ++c)
                    CHECK(dim_V(r, ColouredSurface{0, {a, b, c}}) == r.n(a, b, r.dual(c)));
    }
}

TEST_CASE("Z/2 closed surfaces have dimension 2^g")
{
    const auto r = corpus_fusion("z2");
    for (std::size_t g = 0; g <= 6; ++g) CHECK(dim_V(r, closed(g)) == (std::int64_t{1} << g));
}

TEST_CASE("Fibonacci closed surfaces follow the Verlinde sequence")
{
    const auto r = corpus_fusion("fib");
    const std::vector<std::int64_t> expected = {1, 2, 5, 15, 50, 175};
    for (std::size_t g = 0; g < expected.size(); ++g) CHECK(dim_V(r, closed(g)) == expected[g]);
}

TEST_CASE("disjoint union multiplies dimensions")
{
    const auto r = corpus_fusion("z2");
    CHECK(dim_V_disjoint(r, {closed(1), closed(1)}) == 4);
    const auto f = corpus_fusion("fib");
    CHECK(dim_V_disjoint(f, {closed(2), ColouredSurface{0, {1, 1}}, closed(1)}) == 5 * 1 * 2);
}

TEST_CASE("property: every schedule agrees with the cache and the brute-force oracle")
{
    Gen g(31);
    for (const auto& name : test::ring_names()) {
        CAPTURE(name);
        const auto r = corpus_fusion(name);
        for (int t = 0; t < 40; ++t) {
            const ColouredSurface s{g.index(4), g.colours(r.rank(), 4)};
            CHECK(dim_V_per_block(r, s) == oracle::dim_by_unit_multiplicity(r, s));
            const GluingSchedule sch{GluingSchedule::Insert::Random, GluingSchedule::Fold::Random,
                                     static_cast<std::uint64_t>(g.integer(0, 1 << 30))};
            CHECK(dim_V_per_block(r, s, sch) == dim_V_per_block(r, s));
            CHECK(verify_gluing_consistency(r, s, 3, static_cast<std::uint64_t>(t)).ok());
        }
    }
}

TEST_CASE("gluing: conjugating every colour keeps the dimension")
{
    Gen g(32);
    const auto r = corpus_fusion("z3");
    for (int t = 0; t < 50; ++t) {
        ColouredSurface s{g.index(3), g.colours(3, 4)};
        ColouredSurface c = s;
        for (auto& l : c.boundary) l = r.dual(l);
        CHECK(dim_V(r, s) == dim_V(r, c));
    }
}

TEST_CASE("gluing: a ring breaking Frobenius symmetry fails the separating law")
{
    const auto r = parse_fusion(test::corpus_text("negative/fib_unit2.fusion"));
    const auto rep = verify_gluing_consistency(r, closed(2), 4);
    CHECK(rep.has("separating"));
}

TEST_CASE("gluing: a non-associative ring makes evaluation orders disagree")
{
    const auto r = parse_fusion(test::corpus_text("negative/broken3.fusion"));
    const auto rep = verify_gluing_consistency(r, ColouredSurface{0, {1, 2, 2, 1}}, 20);
    CHECK(rep.has("order"));
}

TEST_CASE("colours outside the ring are rejected")
{
    const auto r = corpus_fusion("fib");
    CHECK_THROWS((void)dim_V(r, ColouredSurface{0, {5}}));
}

TEST_CASE("non-triviality")
{
    CHECK(check_nontriviality(corpus_fusion("fib")));
    CHECK(check_nontriviality(corpus_fusion("z3")));
    // Two unit components that are dual to each other but not to themselves.
    const auto r = corpus_fusion("fib_x_z2").with_duals({2, 1, 0, 3});
    CHECK(check_nontriviality(r));
    Tensor3<std::int64_t> t(2, 2, 2);
    const FusionRing swapped({"a", "b"}, {1, 0}, {0}, t);
    CHECK_FALSE(check_nontriviality(swapped));
}

TEST_CASE("twists: all ones pass, unit and dual constraints are enforced")
{
    const auto r = corpus_fusion("fib");
    TwistData ones{{TwistValue::rational(1), TwistValue::rational(1)}};
    CHECK(validate_twists(r, ones).ok());
    TwistData any{{TwistValue::rational(1), TwistValue::root_of_unity(5, 2)}};
    CHECK(validate_twists(r, any).ok());
    TwistData arbitrary{{TwistValue::rational(1), TwistValue::rational(Rational(-7, 3))}};
    CHECK(validate_twists(r, arbitrary).ok());
    TwistData bad_unit{{TwistValue::root_of_unity(3, 1), TwistValue::rational(1)}};
    CHECK(validate_twists(r, bad_unit).has("unit-twist"));
    TwistData missing{{TwistValue::rational(1), std::nullopt}};
    CHECK(validate_twists(r, missing).has("missing"));

    const auto z3 = corpus_fusion("z3");
    TwistData asym{{TwistValue::rational(1), TwistValue::root_of_unity(3, 1), TwistValue::root_of_unity(3, 2)}};
    CHECK(validate_twists(z3, asym).has("dual-twist"));
}

TEST_CASE("twist values normalise roots of unity")
{
    CHECK(TwistValue::root_of_unity(10, 4) == TwistValue::root_of_unity(5, 2));
    CHECK(TwistValue::root_of_unity(4, 2) == TwistValue::rational(-1));
    CHECK(TwistValue::root_of_unity(3, 3).is_one());
    CHECK(TwistValue::root_of_unity(5, -3).str() == "zeta(5,2)");
    CHECK_THROWS_AS(TwistValue::root_of_unity(0, 1), TwistFormatError);
    CHECK_THROWS_AS(TwistValue::rational(0), TwistFormatError);
}

TEST_CASE("report: Fibonacci has one functor with torus dimension 2")
{
    const auto m = modular_report(corpus_fusion("fib"), std::nullopt, {});
    CHECK(m.ok());
    CHECK(m.modular_functors == 1);
    CHECK(m.torus_dim == 2);
    CHECK(m.unit_components == 1);
}

TEST_CASE("report: Fib x Z/2 announces two functors")
{
    const auto r = corpus_fusion("fib_x_z2");
    const auto tw = parse_twists(test::corpus_text("twists/fib_x_z2.twists"), r);
    const auto m = modular_report(r, tw, {});
    CHECK(m.ok());
    CHECK(m.blocks.size() == 2);
    CHECK(m.modular_functors == 2);
    CHECK(m.torus_dim == 4);
}

TEST_CASE("report: trivial ring has every closed dimension equal to one")
{
    std::vector<NamedSurface> surfaces;
    for (std::size_t g = 0; g <= 4; ++g) surfaces.push_back({"g" + std::to_string(g), closed(g)});
    const auto m = modular_report(corpus_fusion("trivial"), std::nullopt, surfaces);
    CHECK(m.modular_functors == 1);
    for (auto d : m.total_dims) CHECK(d == 1);
}

TEST_CASE("report: failing axioms stop the report early")
{
    const auto m = modular_report(parse_fusion(test::corpus_text("negative/broken3.fusion")), std::nullopt, {});
    CHECK_FALSE(m.ok());
    CHECK(m.blocks.empty());
    CHECK(render_machine(m).find("axioms.ok = false") != std::string::npos);
}

TEST_CASE("report renderings are deterministic")
{
    const auto r = corpus_fusion("fib_x_z2");
    const auto s = parse_surfaces(test::corpus_text("surfaces/fib_x_z2.surfaces"), r);
    const auto a = modular_report(r, std::nullopt, s);
    const auto b = modular_report(r, std::nullopt, s);
    CHECK(render_text(a) == render_text(b));
    CHECK(render_machine(a) == render_machine(b));
    CHECK(render_machine(a).find("modular_functors = 2\n") != std::string::npos);
}
