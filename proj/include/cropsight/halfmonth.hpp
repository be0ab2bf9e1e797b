#pragma once

// Circular half-month arithmetic. The year is split into 24 slots:
// hm = 2*(month-1) for days 1-15, +1 otherwise. Windows are inclusive on
// both ends and may wrap across the year boundary.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cropsight {

inline constexpr int kHalfMonthsPerYear = 24;

inline constexpr int wrap_hm(int hm) {
    int m = hm % kHalfMonthsPerYear;
    return m < 0 ? m + kHalfMonthsPerYear : m;
}

// Day-level dates floor to half-months.
inline constexpr int half_month(int month, int day) {
    if (month < 1 || month > 12) throw std::invalid_argument("month out of range");
    if (day < 1 || day > 31) throw std::invalid_argument("day out of range");
    return 2 * (month - 1) + (day <= 15 ? 0 : 1);
}

struct HalfMonthWindow {
    int start_hm = 0;
    int end_hm = 0;

    void validate() const {
        if (start_hm < 0 || start_hm >= kHalfMonthsPerYear ||
            end_hm < 0 || end_hm >= kHalfMonthsPerYear)
            throw std::invalid_argument("half-month index out of [0,23]");
    }

    // Inclusive length in half-months, in [1,24].
    int length() const {
        return wrap_hm(end_hm - start_hm) + 1;
    }

    bool contains(int hm) const {
        return wrap_hm(hm - start_hm) <= wrap_hm(end_hm - start_hm);
    }

    std::vector<int> enumerate() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(length()));
        for (int i = 0; i < length(); ++i) out.push_back(wrap_hm(start_hm + i));
        return out;
    }

    bool operator==(const HalfMonthWindow&) const = default;
};

inline bool photo_in_mature_window(int photo_hm, const HalfMonthWindow& window) {
    if (photo_hm < 0 || photo_hm >= kHalfMonthsPerYear)
        throw std::invalid_argument("photo half-month out of [0,23]");
    window.validate();
    return window.contains(photo_hm);
}

} // namespace cropsight
