#include "kreg/parse.hpp"

#include <cctype>
#include <map>
#include <stdexcept>
#include <vector>

namespace kreg {

namespace {

struct RawTerm {
    Rat coef{1};
    std::map<std::size_t, std::uint32_t> powers;  // variable slot -> exponent
};

struct Parser {
    explicit Parser(const std::string& s) : text(s) {}

    const std::string& text;
    std::size_t pos = 0;
    bool saw_numbered = false;
    bool saw_bare = false;
    std::map<char, std::size_t> bare_slots;
    std::size_t max_slot = 0;  // exclusive upper bound on slots used

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " +
                                    what + " in '" + text + "'");
    }

    std::string read_digits() {
        std::string d;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            d += text[pos++];
        if (d.empty()) fail("expected digits");
        return d;
    }

    Rat read_rational() {
        std::string num = read_digits();
        if (peek() == '/') {
            ++pos;
            std::string den = read_digits();
            return Rat::from_string(num + "/" + den);
        }
        return Rat::from_string(num);
    }

    std::size_t read_variable() {
        char letter = text[pos++];
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string idx = read_digits();
            unsigned long i = std::stoul(idx);
            if (i == 0) fail("variable indices are 1-based");
            saw_numbered = true;
            max_slot = std::max<std::size_t>(max_slot, i);
            return i - 1;
        }
        saw_bare = true;
        auto [it, inserted] = bare_slots.try_emplace(letter, bare_slots.size());
        max_slot = std::max(max_slot, bare_slots.size());
        return it->second;
    }

    RawTerm read_term() {
        RawTerm term;
        bool any_factor = false;
        for (;;) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                term.coef *= read_rational();
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t slot = read_variable();
                std::uint32_t e = 1;
                if (peek() == '^') {
                    ++pos;
                    e = static_cast<std::uint32_t>(std::stoul(read_digits()));
                }
                term.powers[slot] += e;
                any_factor = true;
            } else if (c == '*') {
                ++pos;
            } else {
                break;
            }
        }
        if (!any_factor) fail("expected a term");
        return term;
    }

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        bool negative = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negative = c == '-';
            ++pos;
        }
        for (;;) {
            RawTerm t = read_term();
            if (negative) t.coef = -t.coef;
            terms.push_back(std::move(t));
            if (eof()) break;
            char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negative = op == '-';
            ++pos;
        }
        if (saw_numbered && saw_bare)
            fail("mixing numbered variables (x1) with bare letters (y) is ambiguous");
        return terms;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t nvars) {
    Parser parser(text);
    auto terms = parser.parse();
    std::size_t n = parser.max_slot;
    if (nvars != 0) {
        if (n > nvars)
            throw std::invalid_argument("polynomial uses more variables than declared");
        n = nvars;
    }
    if (n == 0) n = 1;  // constant expressions live in one variable
    Polynomial p(n);
    for (const auto& t : terms) {
        std::vector<std::uint32_t> exps(n, 0);
        for (auto [slot, e] : t.powers) exps[slot] = e;
        p.add_term(Monomial(std::move(exps)), t.coef);
    }
    return p;
}

Monomial parse_monomial(const std::string& text, std::size_t nvars) {
    Polynomial p = parse_polynomial(text, nvars);
    if (p.term_count() != 1 || p.terms().begin()->second != Rat(1))
        throw std::invalid_argument("expected a plain monomial: '" + text + "'");
    return p.terms().begin()->first;
}

}  // namespace kreg
