#pragma once

// The fixed 12-class crop nomenclature and the 25 member-state codes used
// throughout the pipeline. Class order is canonical: every probability
// vector, confusion matrix and CSV column block follows it.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cropsight {

inline constexpr std::size_t kClassCount = 12;

enum class ClassCode : std::uint8_t {
    B11, // Common wheat
    B12, // Durum wheat
    B13, // Barley
    B14, // Rye
    B15, // Oats
    B16, // Maize
    B21, // Potatoes
    B22, // Sugar beet
    B31, // Sunflower
    B32, // Rape and turnip rape
    B33, // Soya
    B55, // Temporary grassland
};

inline constexpr std::array<std::string_view, kClassCount> kClassCodes = {
    "B11", "B12", "B13", "B14", "B15", "B16",
    "B21", "B22", "B31", "B32", "B33", "B55",
};

inline constexpr std::array<std::string_view, kClassCount> kClassLabels = {
    "Common wheat", "Durum wheat",   "Barley",    "Rye",
    "Oats",         "Maize",         "Potatoes",  "Sugar beet",
    "Sunflower",    "Rape and turnip rape", "Soya", "Temporary grassland",
};

inline constexpr std::size_t class_index(ClassCode c) {
    return static_cast<std::size_t>(c);
}

inline constexpr ClassCode class_from_index(std::size_t i) {
    if (i >= kClassCount) throw std::out_of_range("class index out of range");
    return static_cast<ClassCode>(i);
}

inline std::string_view to_string(ClassCode c) {
    return kClassCodes[class_index(c)];
}

inline std::string_view class_label(ClassCode c) {
    return kClassLabels[class_index(c)];
}

inline std::optional<ClassCode> parse_class(std::string_view s) {
    for (std::size_t i = 0; i < kClassCount; ++i)
        if (kClassCodes[i] == s) return static_cast<ClassCode>(i);
    return std::nullopt;
}

// NUTS0 codes of the 25 member states covered by the survey table.
inline constexpr std::array<std::string_view, 25> kMemberStates = {
    "AT", "BE", "BG", "CY", "CZ", "DE", "DK", "EE", "EL", "ES",
    "FR", "HR", "HU", "IT", "LT", "LU", "LV", "NL", "PL", "PT",
    "RO", "SE", "SI", "SK", "UK",
};

inline bool is_member_state(std::string_view country) {
    for (auto m : kMemberStates)
        if (m == country) return true;
    return false;
}

// Country codes in calendar files only need to be NUTS0-shaped; the
// cultivation registry additionally restricts to the 25 member states.
inline bool looks_like_country(std::string_view s) {
    return s.size() == 2 && s[0] >= 'A' && s[0] <= 'Z' && s[1] >= 'A' && s[1] <= 'Z';
}

} // namespace cropsight
