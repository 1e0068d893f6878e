#include "jstab/rational.hpp"

#include <cctype>

namespace jstab {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool integer_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
    std::string s = trim(raw);
    auto slash = s.find('/');
    std::string p = slash == std::string::npos ? s : trim(s.substr(0, slash));
    std::string q = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
    if (!integer_literal(p) || !integer_literal(q)) throw InputError("malformed rational: '" + raw + "'");
    if (p[0] == '+') p = p.substr(1);
    if (q[0] == '+') q = q.substr(1);
    Integer d(q);
    if (d == 0) throw InputError("zero denominator: '" + raw + "'");
    return Rational(Integer(p), d);
}

std::string to_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }
bool is_integral(const Rational& q) { return den(q) == 1; }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

Rational binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

RVec operator+(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RVec operator-(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RVec operator*(const Rational& s, const RVec& a) {
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

RVec operator-(const RVec& a) {
    RVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Rational dot(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const RVec& a) {
    for (auto& x : a)
        if (x != 0) return false;
    return true;
}

}  // namespace jstab
