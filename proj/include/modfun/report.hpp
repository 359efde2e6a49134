#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace modfun {

/// One failed check: a short machine code (e.g. "assoc"), the
/// indices it concerns, and a human-readable message.
struct Issue {
    std::string code;
    std::vector<std::int64_t> indices;
    std::string message;
};

/// Outcome of a verification pass. Empty means every check held.
struct Report {
    std::string section;
    std::vector<Issue> issues;

    [[nodiscard]] bool ok() const { return issues.empty(); }
    [[nodiscard]] bool has(const std::string& code) const;
    [[nodiscard]] std::size_t count(const std::string& code) const;
    void add(std::string code, std::vector<std::int64_t> indices, std::string message);
    void merge(const Report& other);
};

/// `section: ok` or one line per issue.
[[nodiscard]] std::string render(const Report& r);

}  // namespace modfun
