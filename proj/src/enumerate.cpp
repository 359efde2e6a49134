#include "modfun/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace modfun {

namespace {

using Encoding = std::vector<std::int64_t>;

struct Candidate {
    std::size_t rank;
    std::vector<Label> dual;
    Tensor3<std::int64_t> n;
};

std::vector<std::vector<Label>> involutions_fixing_zero(std::size_t rank)
{
    std::vector<std::vector<Label>> out;
    std::vector<Label> d(rank);
    std::iota(d.begin(), d.end(), Label{0});
    // Pair up labels 1..rank-1 recursively; unpaired labels are self-dual.
    auto rec = [&](auto&& self, Label from) -> void {
        while (from < rank && d[from] != from) ++from;
        if (from >= rank) {
            out.push_back(d);
            return;
        }
        self(self, from + 1);
        for (Label to = from + 1; to < rank; ++to) {
            if (d[to] != to) continue;
            d[from] = to;
            d[to] = from;
            self(self, from + 1);
            d[from] = from;
            d[to] = to;
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

bool associative(const Candidate& c)
{
    const std::size_t n = c.rank;
    // Products with the unit are associative by construction.
    for (Label a = 1; a < n; ++a)
        for (Label b = 1; b < n; ++b)
            for (Label g = 1; g < n; ++g)
                for (Label e = 0; e < n; ++e) {
                    std::int64_t lhs = 0;
                    std::int64_t rhs = 0;
                    for (Label d = 0; d < n; ++d) {
                        lhs += c.n(a, b, d) * c.n(d, g, e);
                        rhs += c.n(b, g, d) * c.n(a, d, e);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

Encoding encode(const Candidate& c, const std::vector<Label>& perm)
{
    const std::size_t n = c.rank;
    std::vector<Label> inv(n);
    for (Label i = 0; i < n; ++i) inv[perm[i]] = i;
    Encoding e;
    e.reserve(n + n * n * n);
    for (Label i = 0; i < n; ++i) e.push_back(static_cast<std::int64_t>(perm[c.dual[inv[i]]]));
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label g = 0; g < n; ++g) e.push_back(c.n(inv[a], inv[b], inv[g]));
    return e;
}

Encoding canonical(const Candidate& c)
{
    std::vector<Label> perm(c.rank);
    std::iota(perm.begin(), perm.end(), Label{0});
    Encoding best = encode(c, perm);
    while (std::next_permutation(perm.begin() + 1, perm.end())) best = std::min(best, encode(c, perm));
    return best;
}

FusionRing decode(std::size_t n, const Encoding& e)
{
    std::vector<std::string> names;
    std::vector<Label> dual;
    for (Label i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        dual.push_back(static_cast<Label>(e[i]));
    }
    Tensor3<std::int64_t> t(n, n, n);
    std::size_t k = n;
    for (Label a = 0; a < n; ++a)
        for (Label b = 0; b < n; ++b)
            for (Label g = 0; g < n; ++g) t(a, b, g) = e[k++];
    return FusionRing(std::move(names), std::move(dual), {0}, std::move(t));
}

}  // namespace

std::vector<FusionRing> enumerate_fusion_rings(std::size_t rank, std::int64_t max_coeff)
{
    if (rank < 1 || rank > kMaxEnumerationRank)
        throw EnumerationBounds("enumeration rank must be in 1.." + std::to_string(kMaxEnumerationRank));
    if (max_coeff < 0 || max_coeff > kMaxEnumerationCoeff)
        throw EnumerationBounds("enumeration max_coeff must be in 0.." + std::to_string(kMaxEnumerationCoeff));

    std::set<Encoding> found;
    for (const auto& dual : involutions_fixing_zero(rank)) {
        Candidate c{rank, dual, Tensor3<std::int64_t>(rank, rank, rank)};
        for (Label a = 0; a < rank; ++a) {
            c.n(0, a, a) = 1;
            c.n(a, 0, a) = 1;
            c.n(a, dual[a], 0) = 1;
        }

        // Orbits of non-unit index triples under n^c_{ab} = n^c_{ba} and
        // n^c_{ab} = n^{dual b}_{dual c, a}; one free value per orbit.
        std::map<std::array<Label, 3>, std::size_t> orbit_of;
        std::vector<std::vector<std::array<Label, 3>>> orbits;
        for (Label a = 1; a < rank; ++a)
            for (Label b = 1; b < rank; ++b)
                for (Label g = 1; g < rank; ++g) {
                    std::array<Label, 3> start{a, b, g};
                    if (orbit_of.count(start)) continue;
                    const std::size_t id = orbits.size();
                    orbits.emplace_back();
                    std::vector<std::array<Label, 3>> stack{start};
                    orbit_of[start] = id;
                    while (!stack.empty()) {
                        auto t = stack.back();
                        stack.pop_back();
                        orbits[id].push_back(t);
                        for (std::array<Label, 3> nb : {std::array<Label, 3>{t[1], t[0], t[2]},
                                                         std::array<Label, 3>{dual[t[2]], t[0], dual[t[1]]}}) {
                            if (orbit_of.emplace(nb, id).second) stack.push_back(nb);
                        }
                    }
                }

        std::vector<std::int64_t> values(orbits.size(), 0);
        while (true) {
            for (std::size_t o = 0; o < orbits.size(); ++o)
                for (const auto& t : orbits[o]) c.n(t[0], t[1], t[2]) = values[o];
            if (associative(c)) {
                FusionRing ring = decode(rank, encode(c, [&] {
                                             std::vector<Label> id(rank);
                                             std::iota(id.begin(), id.end(), Label{0});
                                             return id;
                                         }()));
                if (verify_axioms(ring).ok()) found.insert(canonical(c));
            }
            std::size_t pos = 0;
            while (pos < values.size() && values[pos] == max_coeff) values[pos++] = 0;
            if (pos == values.size()) break;
            ++values[pos];
        }
    }

    std::vector<FusionRing> out;
    for (const auto& e : found) out.push_back(decode(rank, e));
    return out;
}

}  // namespace modfun
