#include "surfdeform/pauli.hpp"

#include <cctype>
#include <sstream>

namespace surfdeform {

std::string PauliString::str() const {
    // Displayed factors fold i into Y: i^phase X Z = i^(phase-1) Y per Y site.
    int sign_exp = phase_;
    std::ostringstream body;
    bool first = true;
    for (std::size_t i = 0; i < n_; ++i) {
        bool bx = x_.get(i), bz = z_.get(i);
        if (!bx && !bz) continue;
        if (!first) body << ' ';
        first = false;
        if (bx && bz) {
            body << 'Y' << i;
            sign_exp = (sign_exp + 3) & 3;  // XZ = -iY
        } else {
            body << (bx ? 'X' : 'Z') << i;
        }
    }
    static const char* signs[4] = {"+", "+i", "-", "-i"};
    std::string out = signs[sign_exp & 3];
    out += first ? "I" : body.str();
    return out;
}

PauliString PauliString::parse(const std::string& text, std::size_t n) {
    std::size_t pos = 0;
    auto fail = [&](const char* why) -> void { throw operand_error(std::string("bad Pauli text: ") + why); };
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    int sign_exp = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bool neg = text[pos] == '-';
        ++pos;
        bool imag = pos < text.size() && text[pos] == 'i';
        if (imag) ++pos;
        sign_exp = (neg ? 2 : 0) + (imag ? 1 : 0);
    }
    PauliString p(n);
    int y_count = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
        char f = text[pos++];
        if (f == 'I') continue;
        if (f != 'X' && f != 'Y' && f != 'Z') fail("factor letter");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("missing site index");
        std::size_t site = std::stoul(text.substr(start, pos - start));
        if (site >= n) fail("site out of range");
        if (f == 'X' || f == 'Y') {
            if (p.x(site)) fail("duplicate site");
            p.set_x(site);
        }
        if (f == 'Z' || f == 'Y') {
            if (p.z(site)) fail("duplicate site");
            p.set_z(site);
        }
        if (f == 'Y') ++y_count;
    }
    p.set_phase(sign_exp + y_count);
    return p;
}

}  // namespace surfdeform
