#pragma once

#include "modfun/fusion.hpp"
#include "modfun/lincat.hpp"
#include "modfun/modular.hpp"
#include "modfun/tqft.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modfun {

/// Syntax or semantic error in a text document. Lines and columns are 1-based;
/// `what()` reads "line:column: message".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

// Every format is line oriented, whitespace separated, with `#` starting a
// comment. Serializers emit a canonical form: parse(serialize(x)) == x, and
// serialize(parse(t)) == t whenever t is already canonical.

/// `rank n`, `label i name`, `dual i j`, `unit i...`, `N a b c m`.
[[nodiscard]] FusionRing parse_fusion(std::string_view text);
[[nodiscard]] std::string serialize_fusion(const FusionRing& r);

/// `dim n`, `basis i name`, `mult i j k q`, `unit i q`, `counit i q`.
[[nodiscard]] FrobeniusAlgebra parse_algebra(std::string_view text);
[[nodiscard]] std::string serialize_algebra(const FrobeniusAlgebra& a);
[[nodiscard]] Algebra underlying_algebra(const FrobeniusAlgebra& a);

/// `object p`, `hom p q name`, `compose g f = c*h + ...`, `identity p = expr`.
[[nodiscard]] PresentedCategory parse_category(std::string_view text);
[[nodiscard]] std::string serialize_category(const PresentedCategory& c);

/// `surface name: genus g boundary l1 l2 ...`; colours are label names.
[[nodiscard]] std::vector<NamedSurface> parse_surfaces(std::string_view text, const FusionRing& r);
[[nodiscard]] std::string serialize_surfaces(const std::vector<NamedSurface>& s, const FusionRing& r);

/// `twist label = q` or `twist label = zeta(n,k)`.
[[nodiscard]] TwistData parse_twists(std::string_view text, const FusionRing& r);
[[nodiscard]] std::string serialize_twists(const TwistData& t, const FusionRing& r);

/// One layer per line, generators separated by spaces.
[[nodiscard]] CobordismWord parse_word(std::string_view text);
[[nodiscard]] std::string serialize_word(const CobordismWord& w);

/// `elem b1 b2 q` adds q * b1 (x) b2; basis names refer to `basis`.
[[nodiscard]] Matrix parse_separability(std::string_view text, const std::vector<std::string>& basis);
[[nodiscard]] std::string serialize_separability(const Matrix& e, const std::vector<std::string>& basis);

/// Relative paths that do not exist are looked up under $MODFUN_CORPUS.
[[nodiscard]] std::filesystem::path resolve_input(const std::string& path);
/// Throws std::runtime_error naming the path when it cannot be read.
[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace modfun
