#include "triseq/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace triseq {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

BigInt parse_integer(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError("empty integer");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseError("bad integer: " + text);
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw ParseError("bad integer: " + text);
    return BigInt(t);
}

// Splits on the first occurrence of sep outside any context (plain split).
bool split_once(const std::string& s, char sep, std::string& a, std::string& b) {
    const std::size_t pos = s.find(sep);
    if (pos == std::string::npos) return false;
    a = s.substr(0, pos);
    b = s.substr(pos + 1);
    return true;
}

}  // namespace

BigRational parse_rational(const std::string& text) {
    const std::string t = trim(text);
    std::string a, b;
    if (split_once(t, '/', a, b)) {
        const BigInt den = parse_integer(b);
        if (den == 0) throw ParseError("zero denominator: " + text);
        return BigRational(parse_integer(a), den);
    }
    if (split_once(t, '.', a, b)) {
        const bool neg = !a.empty() && a[0] == '-';
        if (b.empty()) throw ParseError("bad decimal: " + text);
        for (char c : b)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("bad decimal: " + text);
        const BigInt ip = a.empty() || a == "-" || a == "+" ? BigInt(0)
                                                            : parse_integer(a);
        BigInt scale = 1;
        for (std::size_t i = 0; i < b.size(); ++i) scale *= 10;
        const BigInt frac = BigInt(b);
        BigInt num = abs(ip) * scale + frac;
        if (neg) num = -num;
        return BigRational(num, scale);
    }
    return BigRational(parse_integer(t));
}

std::string rational_to_string(const BigRational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

RationalPoint parse_point(const std::string& text) {
    std::string a, b;
    if (!split_once(text, ',', a, b))
        throw ParseError("point must be \"x,y\": " + text);
    return {parse_rational(a), parse_rational(b)};
}

IntervalPoint parse_interval(const std::string& text) {
    std::string xs, ys;
    if (!split_once(text, ',', xs, ys))
        throw ParseError("interval must be \"xlo:xhi,ylo:yhi\": " + text);
    std::string xlo, xhi, ylo, yhi;
    if (!split_once(xs, ':', xlo, xhi) || !split_once(ys, ':', ylo, yhi))
        throw ParseError("interval must be \"xlo:xhi,ylo:yhi\": " + text);
    IntervalPoint box{parse_rational(xlo), parse_rational(xhi),
                      parse_rational(ylo), parse_rational(yhi)};
    if (box.xlo > box.xhi || box.ylo > box.yhi)
        throw ParseError("interval bounds out of order: " + text);
    return box;
}

TriSequence parse_digits(const std::string& text) {
    TriSequence seq;
    std::string body = trim(text);
    if (!body.empty() && body.back() == '!') {
        body.pop_back();
        body = trim(body);
        seq.terminated_at = 0;  // fixed up below
    }
    if (body.empty()) {
        if (seq.terminated_at) seq.terminated_at = 0;
        return seq;
    }
    for (char& c : body)
        if (c == '\n' || c == '\r') c = ',';
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        BigInt d = parse_integer(tok);
        if (d < 0) throw ParseError("digits must be nonnegative: " + tok);
        seq.digits.push_back(std::move(d));
    }
    if (seq.terminated_at) seq.terminated_at = seq.digits.size();
    return seq;
}

std::string digits_to_string(const TriSequence& seq) {
    std::ostringstream os;
    for (std::size_t i = 0; i < seq.digits.size(); ++i) {
        if (i) os << ',';
        os << seq.digits[i];
    }
    if (seq.terminated()) os << '!';
    return os.str();
}

SequenceFamily parse_family(const std::string& spec) {
    if (spec == "linear") return SequenceFamily::linear();
    if (spec == "square") return SequenceFamily::square();
    if (spec == "prime") return SequenceFamily::prime();
    if (spec == "pow2") return SequenceFamily::pow2();
    std::string head, rest;
    if (split_once(spec, ':', head, rest)) {
        if (head == "const") {
            const BigInt c = parse_integer(rest);
            if (c < 0) throw ParseError("constant digit must be nonnegative");
            return SequenceFamily::constant_digits(c);
        }
        if (head == "file") {
            std::ifstream in(rest);
            if (!in) throw ParseError("cannot read digit file: " + rest);
            std::stringstream buf;
            buf << in.rdbuf();
            return SequenceFamily::custom(parse_digits(buf.str()).digits);
        }
    }
    throw ParseError("unknown family spec: " + spec);
}

std::string svg_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace triseq
