#include "kreg/polynomial.hpp"

namespace kreg {

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        bool negative = c.sign() < 0;
        Rat mag = negative ? -c : c;
        if (s.empty()) {
            if (negative) s = "-";
        } else {
            s += negative ? " - " : " + ";
        }
        std::string monom = m.str(names);
        if (m.is_constant()) {
            s += mag.str();
        } else if (mag == Rat(1)) {
            s += monom;
        } else {
            s += mag.str() + "*" + monom;
        }
    }
    return s;
}

}  // namespace kreg
