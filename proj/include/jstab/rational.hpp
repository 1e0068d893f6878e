#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace jstab {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using RVec = std::vector<Rational>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p/q" or "p"; surrounding whitespace allowed
Rational parse_rational(const std::string& s);
// always "p/q" with q > 0, lowest terms
std::string to_string(const Rational& q);

Integer num(const Rational& q);
Integer den(const Rational& q);
bool is_integral(const Rational& q);
Integer lcm(const Integer& a, const Integer& b);
Rational binom(int n, int k);
Rational factorial(int n);

RVec operator+(const RVec& a, const RVec& b);
RVec operator-(const RVec& a, const RVec& b);
RVec operator*(const Rational& s, const RVec& a);
RVec operator-(const RVec& a);
Rational dot(const RVec& a, const RVec& b);
bool is_zero(const RVec& a);

}  // namespace jstab
