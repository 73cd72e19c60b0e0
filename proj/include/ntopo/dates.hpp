#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace ntopo {

// UTC calendar day. Parsed strictly from ISO-8601 "YYYY-MM-DD".
struct Date {
    int y = 0;
    int m = 0;
    int d = 0;

    auto operator<=>(const Date&) const = default;
};

std::optional<Date> parse_date(std::string_view s);
std::string to_string(const Date& d);

// days since 1970-01-01 (civil-calendar conversion)
long days_from_civil(const Date& d);
Date civil_from_days(long z);
Date add_days(const Date& d, long n);

}  // namespace ntopo
