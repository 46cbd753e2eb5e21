#include "core/edit_distance.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace smlg {

std::uint64_t edit_distance(std::string_view a, std::string_view b) {
    // One row of the classic dynamic program.
    std::vector<std::uint64_t> row(b.size() + 1);
    std::iota(row.begin(), row.end(), std::uint64_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::uint64_t diagonal = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::uint64_t old = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diagonal = old;
        }
    }
    return row[b.size()];
}

std::uint64_t substring_edit_distance(std::string_view text, std::string_view pattern) {
    if (pattern.empty())
        return 0; // the empty substring matches exactly
    // row[j]: best distance between pattern[0..i) and a substring ending at
    // text position j. Row 0 is all zeros so a match may start anywhere.
    std::vector<std::uint64_t> row(text.size() + 1, 0);
    for (std::size_t i = 1; i <= pattern.size(); ++i) {
        std::uint64_t diagonal = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= text.size(); ++j) {
            const std::uint64_t old = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               diagonal + (pattern[i - 1] == text[j - 1] ? 0 : 1)});
            diagonal = old;
        }
    }
    return *std::min_element(row.begin(), row.end());
}

std::uint64_t substring_ed_bruteforce(std::string_view text, std::string_view pattern,
                                      SubstringEdCaps caps) {
    if (text.size() > caps.max_text || pattern.size() > caps.max_pattern)
        throw Error(ErrorCode::CapExceeded,
                    "substring_ed_bruteforce: input exceeds the oracle cap (|T| <= " +
                        std::to_string(caps.max_text) +
                        ", |P| <= " + std::to_string(caps.max_pattern) + ")");
    std::uint64_t best = edit_distance("", pattern);
    for (std::size_t begin = 0; begin < text.size(); ++begin)
        for (std::size_t len = 1; begin + len <= text.size(); ++len)
            best = std::min(best, edit_distance(text.substr(begin, len), pattern));
    return best;
}

} // namespace smlg
