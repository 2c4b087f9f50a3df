#include "coderco/rational.hpp"

#include <cctype>

#include "coderco/errors.hpp"

namespace coderco {

Rat rat(long num, long den) {
    if (den == 0)
        throw ParseError("zero denominator");
    Rat value(num, den);
    value.canonicalize();
    return value;
}

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
    if (s.empty())
        return false;
    std::size_t start = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+'))
        start = 1;
    if (start == s.size())
        return false;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_token(num, true) || !is_integer_token(den, false))
        throw ParseError("bad rational '" + text + "'");
    Rat value;
    if (value.set_str(num + "/" + den, 10) != 0)
        throw ParseError("bad rational '" + text + "'");
    if (value.get_den() == 0)
        throw ParseError("zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

std::string format_rat(const Rat& value) {
    return value.get_str();
}

}  // namespace coderco
