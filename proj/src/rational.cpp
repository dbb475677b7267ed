#include "riordan/rational.hpp"

#include <cctype>

#include "riordan/errors.hpp"

namespace riordan {

Rational rat_parse(const std::string& text) {
    if (text.empty())
        throw SyntaxError("empty rational literal", 0, "integer or p/q");
    // mpq_set_str accepts leading whitespace and other bases; we want the
    // strict canonical grammar, so validate the shape first.
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0)
        throw SyntaxError("expected digits in rational literal", i, "digit");
    if (i < text.size()) {
        if (text[i] != '/')
            throw SyntaxError("unexpected character in rational literal", i, "'/' or end");
        ++i;
        std::size_t den_digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++den_digits;
        }
        if (den_digits == 0 || i != text.size())
            throw SyntaxError("malformed denominator", i, "digits");
    }
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw SyntaxError("unparsable rational literal", 0, "p/q");
    if (q.get_den() == 0)
        throw SyntaxError("zero denominator", text.find('/') + 1, "nonzero integer");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rational& q) { return q.get_str(); }

double rat_double(const Rational& q) { return q.get_d(); }

std::vector<Rational> rat_parse_list(const std::string& comma_separated) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= comma_separated.size()) {
        std::size_t comma = comma_separated.find(',', start);
        std::string item = comma == std::string::npos
                               ? comma_separated.substr(start)
                               : comma_separated.substr(start, comma - start);
        // trim spaces around items so "1, 2, 3" works
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw SyntaxError("empty item in rational list", start, "p/q");
        out.push_back(rat_parse(item.substr(a, b - a + 1)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace riordan
