#pragma once

// Independent reference computations used to check the library.

#include "modfun/fusion.hpp"
#include "modfun/modular.hpp"
#include "modfun/tqft.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace modfun::oracle {

/// Representation ring of S3 from its character table, computed by summing
/// over the six permutations: n^c_{ab} = (1/6) sum_g chi_a(g) chi_b(g) chi_c(g)
/// (all characters are real, so conjugation is omitted).
inline FusionRing s3_from_characters()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto sign = [](const std::array<int, 3>& q) {
        int inversions = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) inversions += q[i] > q[j];
        return inversions % 2 == 0 ? 1 : -1;
    };
    auto fixed = [](const std::array<int, 3>& q) {
        int f = 0;
        for (int i = 0; i < 3; ++i) f += q[i] == i;
        return f;
    };
    const std::vector<std::function<int(const std::array<int, 3>&)>> chi = {
        [](const std::array<int, 3>&) { return 1; }, sign, [&](const std::array<int, 3>& q) { return fixed(q) - 1; }};

    Tensor3<std::int64_t> n(3, 3, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) {
                int total = 0;
                for (const auto& g : perms) total += chi[a](g) * chi[b](g) * chi[c](g);
                n(a, b, c) = total / 6;
            }
    return FusionRing({"triv", "sign", "std"}, {0, 1, 2}, {0}, n);
}

/// Group ring of a finite group given by its multiplication table (element 0
/// is the identity). Duals are inverses.
inline FusionRing group_ring(const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> names = {})
{
    const std::size_t n = table.size();
    if (names.empty())
        for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    Tensor3<std::int64_t> c(n, n, n);
    std::vector<Label> dual(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            c(a, b, table[a][b]) = 1;
            if (table[a][b] == 0) dual[a] = b;
        }
    return FusionRing(std::move(names), dual, {0}, c);
}

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n)
{
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

/// Group algebra over Q with eps = indicator of the identity.
inline FrobeniusAlgebra group_algebra(const std::vector<std::vector<std::size_t>>& table)
{
    const std::size_t n = table.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    Tensor3<Rational> m(n, n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) m(a, b, table[a][b]) = 1;
    Vector unit(n);
    Vector counit(n);
    unit[0] = 1;
    counit[0] = 1;
    return FrobeniusAlgebra(names, m, unit, counit);
}

/// Brute-force dimension per unit block: multiplicity of beta_i in
/// Q_sigma(1) * ... * Q_sigma(m) * omega^g with omega = sum_a Q_{dual a} Q_a,
/// computed by plain repeated multiplication.
inline std::vector<std::int64_t> dim_by_unit_multiplicity(const FusionRing& r, const ColouredSurface& s)
{
    ObjectVector acc = r.unit_vector();
    for (Label a : s.boundary) acc = multiply(r, acc, r.basis(a));
    ObjectVector omega(r.rank());
    for (Label a = 0; a < r.rank(); ++a) omega = omega + multiply(r, r.basis(r.dual(a)), r.basis(a));
    for (std::size_t g = 0; g < s.genus; ++g) acc = multiply(r, acc, omega);
    std::vector<std::int64_t> out;
    for (Label b : r.unit_components()) out.push_back(acc[b]);
    return out;
}

inline std::int64_t dim_total(const FusionRing& r, const ColouredSurface& s)
{
    const auto v = dim_by_unit_multiplicity(r, s);
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

}  // namespace modfun::oracle
