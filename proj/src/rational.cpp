#include "biatsp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace biatsp {

namespace {

std::int64_t parse_int(std::string_view s) {
    std::int64_t value = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("rational: bad integer '" + std::string(s) + "'");
    return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("rational: empty string");

    if (const auto slash = text.find('/'); slash != std::string_view::npos)
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));

    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const bool negative = text.front() == '-';
        std::string_view head = text.substr(0, dot);
        if (!head.empty() && (head.front() == '-' || head.front() == '+'))
            head.remove_prefix(1);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty()) throw std::invalid_argument("rational: trailing decimal point");
        std::int64_t num = head.empty() ? 0 : parse_int(head);
        std::int64_t den = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("rational: bad decimal '" + std::string(text) + "'");
            if (den > std::numeric_limits<std::int64_t>::max() / 10)
                throw std::overflow_error("rational: decimal too long");
            num = num * 10 + (c - '0');
            den *= 10;
        }
        if (negative) num = -num;
        return Rational(num, den);
    }
    return Rational(parse_int(text));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    std::int64_t rest = den_;
    int twos = 0, fives = 0;
    while (rest % 2 == 0) {
        rest /= 2;
        ++twos;
    }
    while (rest % 5 == 0) {
        rest /= 5;
        ++fives;
    }
    if (rest != 1) return std::to_string(num_) + "/" + std::to_string(den_);

    const int digits = std::max(twos, fives);
    __int128 scaled = num_ < 0 ? -static_cast<__int128>(num_) : static_cast<__int128>(num_);
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den_;

    std::string body;
    for (__int128 v = scaled; v > 0; v /= 10)
        body.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    while (static_cast<int>(body.size()) <= digits) body.push_back('0');
    std::reverse(body.begin(), body.end());
    body.insert(body.size() - digits, ".");
    return (num_ < 0 ? "-" : "") + body;
}

}  // namespace biatsp
