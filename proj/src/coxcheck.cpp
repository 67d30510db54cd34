#include "dpell/coxcheck.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpell/errors.hpp"

namespace dpell {

using nlohmann::json;

std::string monomial_to_string(const std::vector<long long>& exponents,
                               const std::vector<std::string>& variables) {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += variables[i];
        if (exponents[i] != 1) s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    // largest exponent vector first
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        const bool constant = std::all_of(exps.begin(), exps.end(),
                                          [](long long e) { return e == 0; });
        Rational a = coeff.sign() < 0 ? -coeff : coeff;
        std::string body;
        if (constant)
            body = a.to_string();
        else if (a == Rational(Int(1)))
            body = monomial_to_string(exps, variables);
        else
            body = a.to_string() + "*" + monomial_to_string(exps, variables);
        if (s.empty())
            s = (coeff.sign() < 0 ? "-" : "") + body;
        else
            s += (coeff.sign() < 0 ? " - " : " + ") + body;
    }
    return s;
}

namespace {

struct Token {
    enum Kind { End, Ident, Integer, Plus, Minus, Star, Caret, Slash, LParen, RParen } kind;
    std::string text;
    std::size_t pos; // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;

    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        const std::size_t pos = i_ + 1;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", pos};
            return;
        }
        char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_), pos};
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::Integer, s_.substr(i_, j - i_), pos};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", pos}; return;
            case '-': tok_ = {Token::Minus, "-", pos}; return;
            case '*': tok_ = {Token::Star, "*", pos}; return;
            case '^': tok_ = {Token::Caret, "^", pos}; return;
            case '/': tok_ = {Token::Slash, "/", pos}; return;
            case '(': tok_ = {Token::LParen, "(", pos}; return;
            case ')': tok_ = {Token::RParen, ")", pos}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
    }
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& variables)
        : lex_(text), variables_(variables) {}

    Polynomial run() {
        Polynomial p = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("unexpected token '" + lex_.peek().text + "'", lex_.peek().pos);
        p.variables = variables_;
        return p;
    }

private:
    Lexer lex_;
    const std::vector<std::string>& variables_;

    Polynomial zero() const {
        Polynomial p;
        p.variables = variables_;
        return p;
    }

    Polynomial constant(const Rational& c) const {
        Polynomial p = zero();
        if (!c.is_zero()) p.terms[std::vector<long long>(variables_.size(), 0)] = c;
        return p;
    }

    static Polynomial add(const Polynomial& a, const Polynomial& b, int sign) {
        Polynomial out = a;
        for (const auto& [e, c] : b.terms) {
            Rational& slot = out.terms[e];
            slot = sign > 0 ? slot + c : slot - c;
            if (slot.is_zero()) out.terms.erase(e);
        }
        return out;
    }

    static Polynomial mul(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        out.variables = a.variables;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<long long> e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                Rational& slot = out.terms[e];
                slot = slot + ca * cb;
                if (slot.is_zero()) out.terms.erase(e);
            }
        return out;
    }

    Polynomial expr() {
        int sign = 1;
        if (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            if (lex_.take().kind == Token::Minus) sign = -1;
        }
        Polynomial acc = add(zero(), term(), sign);
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            int s = lex_.take().kind == Token::Minus ? -1 : 1;
            acc = add(acc, term(), s);
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Token::Star) {
            lex_.take();
            acc = mul(acc, factor());
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        if (lex_.peek().kind != Token::Caret) return base;
        lex_.take();
        if (lex_.peek().kind == Token::Minus)
            throw ParseError("negative exponent", lex_.peek().pos);
        if (lex_.peek().kind != Token::Integer)
            throw ParseError("exponent must be a plain integer literal", lex_.peek().pos);
        Token e = lex_.take();
        long long n = 0;
        try {
            n = std::stoll(e.text);
        } catch (const std::exception&) {
            throw ParseError("exponent out of range", e.pos);
        }
        Polynomial acc = constant(Rational(Int(1)));
        Polynomial pw = base;
        while (n > 0) {
            if (n & 1) acc = mul(acc, pw);
            n >>= 1;
            if (n) pw = mul(pw, pw);
        }
        return acc;
    }

    Polynomial primary() {
        Token t = lex_.peek();
        if (t.kind == Token::Ident) {
            lex_.take();
            auto it = std::find(variables_.begin(), variables_.end(), t.text);
            if (it == variables_.end())
                throw ParseError("unknown variable '" + t.text + "'", t.pos);
            Polynomial p = zero();
            std::vector<long long> e(variables_.size(), 0);
            e[static_cast<std::size_t>(it - variables_.begin())] = 1;
            p.terms[e] = Rational(Int(1));
            return p;
        }
        if (t.kind == Token::Integer) {
            lex_.take();
            Int num{std::string_view(t.text)};
            if (lex_.peek().kind == Token::Slash) {
                lex_.take();
                if (lex_.peek().kind != Token::Integer)
                    throw ParseError("expected integer denominator", lex_.peek().pos);
                Token d = lex_.take();
                Int den{std::string_view(d.text)};
                if (den.is_zero()) throw ParseError("zero denominator", d.pos);
                return constant(Rational(num, den));
            }
            return constant(Rational(num));
        }
        if (t.kind == Token::LParen) {
            lex_.take();
            Polynomial inner = expr();
            if (lex_.peek().kind != Token::RParen)
                throw ParseError("expected ')'", lex_.peek().pos);
            lex_.take();
            return inner;
        }
        throw ParseError("expected a variable, number or '('", t.pos);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    return Parser(text, variables).run();
}

Vec monomial_degree(const std::vector<long long>& exponents, const std::vector<Vec>& degrees) {
    if (exponents.size() != degrees.size())
        throw InvalidInput("monomial_degree: exponent count does not match variable count");
    const std::size_t rho = degrees.empty() ? 0 : degrees[0].size();
    Vec out(rho, Int(0));
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] < 0) throw InvalidInput("monomial_degree: negative exponent");
        if (exponents[v] == 0) continue;
        for (std::size_t k = 0; k < rho; ++k) out[k] += Int(exponents[v]) * degrees[v][k];
    }
    return out;
}

GradedPresentation GradedPresentation::from_json_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("presentation JSON: ") + e.what());
    }
    GradedPresentation p;
    try {
        p.name = j.at("name").get<std::string>();
        for (const auto& v : j.at("variables")) p.variables.push_back(v.get<std::string>());
        for (const auto& dv : j.at("degrees")) {
            Vec d;
            for (const auto& x : dv) d.emplace_back(x.get<long long>());
            p.degrees.push_back(std::move(d));
        }
        for (const auto& r : j.at("relations"))
            p.relations.push_back(parse_polynomial(r.get<std::string>(), p.variables));
        if (j.contains("relations_as_printed") && !j["relations_as_printed"].is_null())
            for (const auto& r : j["relations_as_printed"])
                p.relations_as_printed.push_back(
                    parse_polynomial(r.get<std::string>(), p.variables));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("presentation schema: ") + e.what());
    }
    if (p.degrees.size() != p.variables.size())
        throw InvalidInput("presentation: one degree vector per variable required");
    for (const auto& d : p.degrees)
        if (d.size() != p.grading_rank())
            throw InvalidInput("presentation: degree vectors must share one length");
    return p;
}

GradedPresentation GradedPresentation::from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open presentation file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

HomogeneityReport check_homogeneity(const GradedPresentation& p, bool as_printed) {
    const auto& rels = as_printed ? p.relations_as_printed : p.relations;
    if (as_printed && rels.empty())
        throw DomainError("presentation '" + p.name + "' has no as-printed relations");
    HomogeneityReport rep;
    rep.name = p.name;
    rep.as_printed = as_printed;
    rep.all_homogeneous = true;
    for (std::size_t idx = 0; idx < rels.size(); ++idx) {
        const Polynomial& poly = rels[idx];
        RelationReport rr;
        rr.index = idx;
        rr.text = poly.to_string();
        std::vector<std::pair<Vec, std::string>> listed;
        for (auto it = poly.terms.rbegin(); it != poly.terms.rend(); ++it)
            listed.emplace_back(monomial_degree(it->first, p.degrees),
                                monomial_to_string(it->first, p.variables));
        for (const auto& [deg, mono] : listed) {
            auto g = std::find_if(rr.groups.begin(), rr.groups.end(),
                                  [&](const DegreeGroup& dg) { return dg.degree == deg; });
            if (g == rr.groups.end()) {
                rr.groups.push_back({deg, {mono}});
            } else {
                g->monomials.push_back(mono);
            }
        }
        std::stable_sort(rr.groups.begin(), rr.groups.end(),
                         [](const DegreeGroup& a, const DegreeGroup& b) {
                             if (a.monomials.size() != b.monomials.size())
                                 return a.monomials.size() > b.monomials.size();
                             return lex_less(a.degree, b.degree);
                         });
        rr.homogeneous = rr.groups.size() <= 1;
        if (!rr.groups.empty()) {
            rr.degree = rr.groups[0].degree;
            for (std::size_t g = 1; g < rr.groups.size(); ++g)
                for (const auto& mono : rr.groups[g].monomials)
                    rr.outliers.emplace_back(mono, rr.groups[g].degree);
        }
        if (!rr.homogeneous) rep.all_homogeneous = false;
        rep.relations.push_back(std::move(rr));
    }
    return rep;
}

std::string HomogeneityReport::to_text() const {
    std::string out = "presentation " + name + (as_printed ? " (as printed)" : "") + ":\n";
    for (const auto& r : relations) {
        out += "  relation " + std::to_string(r.index + 1) + ": ";
        if (r.homogeneous) {
            out += "homogeneous of multidegree " + vec_to_string(r.degree) + "\n";
        } else {
            out += "INHOMOGENEOUS; majority degree " + vec_to_string(r.degree) + "\n";
            for (const auto& g : r.groups) {
                out += "    degree " + vec_to_string(g.degree) + ":";
                for (const auto& m : g.monomials) out += " " + m;
                out += "\n";
            }
        }
    }
    out += all_homogeneous ? "verdict: homogeneous\n" : "verdict: inhomogeneous\n";
    return out;
}

} // namespace dpell
