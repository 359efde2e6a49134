#include "modfun/report.hpp"

#include <algorithm>

namespace modfun {

bool Report::has(const std::string& code) const { return count(code) > 0; }

std::size_t Report::count(const std::string& code) const
{
    return static_cast<std::size_t>(
        std::count_if(issues.begin(), issues.end(), [&](const Issue& i) { return i.code == code; }));
}

void Report::add(std::string code, std::vector<std::int64_t> indices, std::string message)
{
    issues.push_back(Issue{std::move(code), std::move(indices), std::move(message)});
}

void Report::merge(const Report& other) { issues.insert(issues.end(), other.issues.begin(), other.issues.end()); }

std::string render(const Report& r)
{
    if (r.ok()) return r.section + ": ok\n";
    std::string out = r.section + ": " + std::to_string(r.issues.size()) + " violation(s)\n";
    for (const auto& i : r.issues) out += "  [" + i.code + "] " + i.message + "\n";
    return out;
}

}  // namespace modfun
