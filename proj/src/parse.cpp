#include "hrpkit/parse.hpp"

#include <sstream>
#include <stdexcept>

namespace hrpkit {

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t pos) {
    std::ostringstream os;
    os << what << " at position " << pos;
    throw std::invalid_argument(os.str());
}

} // namespace

IntPoly parse_poly(const std::string& text) {
    // normalize U+2212 (0xE2 0x88 0x92) to '-'
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            s.push_back('-');
            i += 3;
        } else {
            s.push_back(text[i]);
            ++i;
        }
    }

    std::vector<mpz_class> coeffs;
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (true) {
        while (i < n && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        std::size_t start = i;
        std::string tok;
        if (i < n && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-')
                tok.push_back('-'); // mpz rejects an explicit '+'
            ++i;
        }
        std::size_t digits = 0;
        while (i < n && s[i] >= '0' && s[i] <= '9') {
            tok.push_back(s[i]);
            ++i;
            ++digits;
        }
        if (digits == 0)
            fail("expected integer", start);
        while (i < n && (s[i] == ' ' || s[i] == '\t'))
            ++i;
        coeffs.emplace_back(tok);
        if (i == n)
            break;
        if (s[i] != ',')
            fail("expected ','", i);
        ++i;
        if (i == n)
            fail("trailing ','", i - 1);
    }
    IntPoly p(std::move(coeffs));
    if (p.is_zero())
        throw std::invalid_argument("zero polynomial at position 0");
    return p;
}

std::string poly_to_string(const IntPoly& p) { return p.to_string(); }

} // namespace hrpkit
