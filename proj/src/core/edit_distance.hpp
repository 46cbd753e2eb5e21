#pragma once

#include <cstdint>
#include <string_view>

namespace smlg {

// Levenshtein distance with unit insert/delete/substitute costs.
std::uint64_t edit_distance(std::string_view a, std::string_view b);

// min over all substrings S of text (the empty substring included) of the
// edit distance between S and pattern. Row 0 of the dynamic program is all
// zeros (a match may start anywhere), the answer is the minimum of the final
// row; O(|T| * |P|) work.
std::uint64_t substring_edit_distance(std::string_view text, std::string_view pattern);

struct SubstringEdCaps {
    std::uint32_t max_text = 15;
    std::uint32_t max_pattern = 8;
};

// Independent oracle: enumerate all O(|T|^2) substrings and take the minimum
// plain edit distance. Refuses beyond the caps.
std::uint64_t substring_ed_bruteforce(std::string_view text, std::string_view pattern,
                                      SubstringEdCaps caps = {});

} // namespace smlg
