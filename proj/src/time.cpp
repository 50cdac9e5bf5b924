#include "driftcast/time.hpp"

#include <chrono>
#include <cstdio>

#include "driftcast/errors.hpp"

namespace driftcast {

namespace {

// Floor division so pre-1970 stamps split into (day, hour-of-day) correctly.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::chrono::sys_days civil_days(const HourStamp& ts) {
    return std::chrono::sys_days{std::chrono::days{floor_div(ts.hours_since_epoch(), kHoursPerDay)}};
}

} // namespace

HourStamp HourStamp::from_calendar(int year, unsigned month, unsigned day, unsigned hour) {
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
    if (!ymd.ok() || hour > 23) {
        throw ContractViolation("invalid calendar date/hour");
    }
    auto days = sys_days{ymd}.time_since_epoch().count();
    return HourStamp(static_cast<std::int64_t>(days) * kHoursPerDay + hour);
}

int HourStamp::year() const {
    std::chrono::year_month_day ymd{civil_days(*this)};
    return static_cast<int>(ymd.year());
}

unsigned HourStamp::month() const {
    std::chrono::year_month_day ymd{civil_days(*this)};
    return static_cast<unsigned>(ymd.month());
}

unsigned HourStamp::day() const {
    std::chrono::year_month_day ymd{civil_days(*this)};
    return static_cast<unsigned>(ymd.day());
}

unsigned HourStamp::hour() const {
    return static_cast<unsigned>(hours_ - floor_div(hours_, kHoursPerDay) * kHoursPerDay);
}

unsigned HourStamp::weekday() const {
    std::chrono::weekday wd{civil_days(*this)};
    return wd.iso_encoding() - 1;  // ISO: Mon=1..Sun=7
}

std::string HourStamp::date_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year(), month(), day());
    return buf;
}

std::string HourStamp::to_string() const {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02u:00:00", year(), month(), day(), hour());
    return buf;
}

std::optional<HourStamp> HourStamp::try_parse(const std::string& text) {
    int y = 0;
    unsigned mo = 0, d = 0, h = 0, mi = 0, s = 0;
    char sep = 0;
    int n = std::sscanf(text.c_str(), "%d-%u-%u%c%u:%u:%u", &y, &mo, &d, &sep, &h, &mi, &s);
    if (n < 5 || (sep != ' ' && sep != 'T')) return std::nullopt;
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo}, std::chrono::day{d}};
    if (!ymd.ok() || h > 23) return std::nullopt;
    auto days = sys_days{ymd}.time_since_epoch().count();
    return HourStamp(static_cast<std::int64_t>(days) * kHoursPerDay + h);
}

HourStamp HourStamp::parse(const std::string& text) {
    const auto out = try_parse(text);
    if (!out) {
        throw ContractViolation("unparseable timestamp: \"" + text + "\"");
    }
    return *out;
}

} // namespace driftcast
