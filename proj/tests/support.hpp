#pragma once

#include "modfun/io.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace modfun::test {

inline std::filesystem::path corpus_dir() { return MODFUN_TEST_CORPUS; }
inline std::filesystem::path source_dir() { return MODFUN_TEST_SOURCE; }

inline std::string corpus_text(const std::string& relative) { return read_text_file(corpus_dir() / relative); }

inline FusionRing corpus_fusion(const std::string& name) { return parse_fusion(corpus_text("fusion/" + name + ".fusion")); }
inline FrobeniusAlgebra corpus_algebra(const std::string& name)
{
    return parse_algebra(corpus_text("algebra/" + name + ".algebra"));
}
inline PresentedCategory corpus_category(const std::string& name)
{
    return parse_category(corpus_text("category/" + name + ".category"));
}

/// Stems of every file in a corpus subdirectory, sorted.
inline std::vector<std::string> corpus_names(const std::string& subdir, const std::string& extension)
{
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(corpus_dir() / subdir))
        if (e.path().extension() == extension) out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> ring_names() { return corpus_names("fusion", ".fusion"); }
inline std::vector<std::string> algebra_names() { return corpus_names("algebra", ".algebra"); }

// Seeded generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }

    Rational rational(std::int64_t bound = 9)
    {
        return Rational(integer(-bound, bound), integer(1, bound));
    }

    Matrix matrix(std::size_t rows, std::size_t cols, std::int64_t bound = 5)
    {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(bound);
        return m;
    }

    Matrix invertible(std::size_t n)
    {
        while (true) {
            Matrix m = matrix(n, n, 4);
            if (rank(m) == n) return m;
        }
    }

    /// Rank-deficient square matrix: a product through a thinner space.
    Matrix low_rank(std::size_t n, std::size_t r) { return matrix(n, r) * matrix(r, n); }

    ObjectVector object(std::size_t rank, std::int64_t max_mult = 3)
    {
        ObjectVector v(rank);
        for (std::size_t a = 0; a < rank; ++a) v[a] = integer(0, max_mult);
        return v;
    }

    std::vector<Label> colours(std::size_t rank, std::size_t max_len)
    {
        std::vector<Label> c(static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_len))));
        for (auto& x : c) x = index(rank);
        return c;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace modfun::test
