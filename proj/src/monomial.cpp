#include "kreg/monomial.hpp"

namespace kreg {

namespace {

void emit_exact(std::size_t var, std::uint32_t remaining, std::vector<std::uint32_t>& cur,
                std::vector<Monomial>& out) {
    if (var + 1 == cur.size()) {
        cur[var] = remaining;
        out.emplace_back(cur);
        cur[var] = 0;
        return;
    }
    for (std::uint32_t e = remaining; e != static_cast<std::uint32_t>(-1); --e) {
        cur[var] = e;
        emit_exact(var + 1, remaining - e, cur, out);
    }
    cur[var] = 0;
}

}  // namespace

std::vector<Monomial> enumerate_monomials_exact(std::size_t n, std::uint32_t d) {
    if (n == 0) throw std::invalid_argument("enumerate_monomials: n must be >= 1");
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(n, 0);
    emit_exact(0, d, cur, out);
    return out;
}

std::vector<Monomial> enumerate_monomials(std::size_t n, std::uint32_t d_max) {
    if (n == 0) throw std::invalid_argument("enumerate_monomials: n must be >= 1");
    std::vector<Monomial> out;
    for (std::uint32_t d = 0; d <= d_max; ++d) {
        auto layer = enumerate_monomials_exact(n, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
    if (is_constant()) return "1";
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s;
}

}  // namespace kreg
