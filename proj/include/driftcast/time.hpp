#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace driftcast {

/**
 * Hour-resolution UTC timestamp, stored as whole hours since the Unix epoch.
 *
 * All demand streams run on a strict hourly grid, so a single integer is
 * both the calendar position and the stream index offset. Calendar lookups
 * (year, month, weekday) go through std::chrono's civil calendar.
 */
class HourStamp {
public:
    constexpr HourStamp() = default;
    constexpr explicit HourStamp(std::int64_t hours_since_epoch)
        : hours_(hours_since_epoch) {}

    static HourStamp from_calendar(int year, unsigned month, unsigned day, unsigned hour);

    /// Accepts "YYYY-MM-DD HH:MM:SS", "YYYY-MM-DDTHH:MM:SS", or truncations
    /// down to "YYYY-MM-DD HH"; minutes/seconds are dropped (hour floor).
    static HourStamp parse(const std::string& text);
    static std::optional<HourStamp> try_parse(const std::string& text);

    constexpr std::int64_t hours_since_epoch() const { return hours_; }

    int year() const;
    unsigned month() const;  // 1..12
    unsigned day() const;    // 1..31
    unsigned hour() const;   // 0..23
    unsigned weekday() const;  // 0 = Monday .. 6 = Sunday
    bool is_weekend() const { return weekday() >= 5; }

    std::string date_string() const;  // "YYYY-MM-DD"
    std::string to_string() const;    // "YYYY-MM-DDTHH:00:00"

    constexpr HourStamp operator+(std::int64_t hours) const { return HourStamp(hours_ + hours); }
    constexpr HourStamp operator-(std::int64_t hours) const { return HourStamp(hours_ - hours); }
    constexpr std::int64_t operator-(HourStamp other) const { return hours_ - other.hours_; }
    HourStamp& operator+=(std::int64_t hours) { hours_ += hours; return *this; }
    HourStamp& operator++() { ++hours_; return *this; }

    auto operator<=>(const HourStamp&) const = default;

private:
    std::int64_t hours_ = 0;
};

inline constexpr std::int64_t kHoursPerDay = 24;
inline constexpr std::int64_t kHoursPerWeek = 7 * kHoursPerDay;

} // namespace driftcast
