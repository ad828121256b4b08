#include "cylrig/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace cylrig {

Rat rat_parse(std::string text) {
    if (!text.empty() && text[0] == '+') text = text.substr(1); // GMP rejects '+'
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
              c == '+' || c == '/'))
            throw std::invalid_argument("bad character in rational literal: '" +
                                        text + "'");
    }
    Rat r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (sgn(r.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" +
                                    text + "'");
    r.canonicalize();
    return r;
}

std::string rat_format(const Rat& r) { return r.get_str(); }

double rat_to_double(const Rat& r) { return r.get_d(); }

Quad::Quad(Rat a_, Rat b_, long d_) : a(std::move(a_)), b(std::move(b_)), d(d_) {
    if (sgn(b) == 0) {
        d = 0;
    } else {
        if (d < 2 || !is_square_free(d))
            throw std::invalid_argument(
                "quadratic extension requires square-free d >= 2");
    }
}

namespace {

long combine_d(const Quad& l, const Quad& r) {
    if (l.d == 0) return r.d;
    if (r.d == 0 || l.d == r.d) return l.d;
    throw std::invalid_argument("mixed quadratic fields (d=" +
                                std::to_string(l.d) + " vs d=" +
                                std::to_string(r.d) + ")");
}

} // namespace

Quad Quad::operator-() const { return Quad(-a, -b, d); }

Quad& Quad::operator+=(const Quad& o) {
    long dd = combine_d(*this, o);
    a += o.a;
    b += o.b;
    *this = Quad(a, b, dd);
    return *this;
}

Quad& Quad::operator-=(const Quad& o) {
    long dd = combine_d(*this, o);
    a -= o.a;
    b -= o.b;
    *this = Quad(a, b, dd);
    return *this;
}

Quad& Quad::operator*=(const Quad& o) {
    long dd = combine_d(*this, o);
    Rat na = a * o.a + b * o.b * dd;
    Rat nb = a * o.b + b * o.a;
    *this = Quad(na, nb, dd);
    return *this;
}

Quad& Quad::operator/=(const Quad& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    long dd = combine_d(*this, o);
    // 1/(c + e*sqrt(d)) = (c - e*sqrt(d)) / (c^2 - e^2 d); the norm is
    // nonzero because sqrt(d) is irrational for square-free d >= 2.
    Rat norm = o.a * o.a - o.b * o.b * dd;
    Rat na = (a * o.a - b * o.b * dd) / norm;
    Rat nb = (b * o.a - a * o.b) / norm;
    *this = Quad(na, nb, dd);
    return *this;
}

int sign(const Quad& q) {
    int sa = sgn(q.a), sb = sgn(q.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |a| against |b|*sqrt(d) via squares.
    Rat a2 = q.a * q.a;
    Rat b2d = q.b * q.b * q.d;
    int c = cmp(a2, b2d);
    if (c == 0) throw std::logic_error("sqrt(d) compared rational"); // unreachable
    return c > 0 ? sa : sb;
}

double quad_to_double(const Quad& q) {
    return q.a.get_d() + q.b.get_d() * std::sqrt(static_cast<double>(q.d));
}

Rat quad_to_rat(const Quad& q) {
    if (sgn(q.b) != 0)
        throw std::invalid_argument("value has an irrational part: " +
                                    quad_format(q));
    return q.a;
}

Quad quad_parse(const std::string& text, long d) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    // Grammar: rational, optionally followed by ('+'|'-') rational "*s".
    std::string::size_type star = text.rfind("*s");
    if (star == std::string::npos) {
        if (text.find('s') != std::string::npos)
            throw std::invalid_argument("malformed quadratic literal: '" + text +
                                        "'");
        return Quad(rat_parse(text));
    }
    if (star + 2 != text.size())
        throw std::invalid_argument("malformed quadratic literal: '" + text + "'");
    // Split off the b-coefficient: scan back to the sign that separates the
    // two terms (the first character may itself be a sign of the a-term).
    std::string::size_type split = std::string::npos;
    for (std::string::size_type i = star; i-- > 1;) {
        if (text[i] == '+' || text[i] == '-') {
            if (text[i - 1] == '/' || text[i - 1] == '+' || text[i - 1] == '-')
                continue; // sign belongs to a nested numerator, keep scanning
            split = i;
            break;
        }
    }
    std::string a_part, b_part;
    if (split == std::string::npos) {
        a_part = "0";
        b_part = text.substr(0, star);
    } else {
        a_part = text.substr(0, split);
        b_part = text.substr(split, star - split);
        if (b_part == "+" || b_part == "-") b_part += "1";
    }
    if (b_part == "+" || b_part.empty()) b_part = "1";
    if (b_part == "-") b_part = "-1";
    if (!b_part.empty() && b_part[0] == '+') b_part = b_part.substr(1);
    Rat a = rat_parse(a_part);
    Rat b = rat_parse(b_part);
    return Quad(a, b, d);
}

std::string quad_format(const Quad& q) {
    if (sgn(q.b) == 0) return rat_format(q.a);
    std::string out = rat_format(q.a);
    if (sgn(q.b) > 0) out += "+";
    out += rat_format(q.b);
    out += "*s";
    return out;
}

bool is_square_free(long d) {
    if (d < 1) return false;
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

} // namespace cylrig
