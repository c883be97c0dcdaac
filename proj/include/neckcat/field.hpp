#pragma once

// Exact scalars: arbitrary-precision rationals and prime fields with a
// runtime modulus.  Prime-field elements carry their modulus; the zero
// element with modulus 0 acts as a universal zero so that
// default-initialized matrices work for either field.

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"

namespace neckcat {

using Rational = boost::multiprecision::cpp_rational;

struct Rat {
  Rational v;
  Rat() = default;
  Rat(long x) : v(x) {}
  Rat(const Rational& x) : v(x) {}
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  bool is_zero() const { return v == 0; }
  Rat operator-() const { return Rat(-v); }
  Rat inv() const {
    if (is_zero()) throw invalid_input("division by zero");
    return Rat(1 / v);
  }
  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v + b.v); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v - b.v); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v * b.v); }
  friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
  std::string str() const { return v.str(); }
  static Rat parse(const std::string& s) { return Rat(Rational(s)); }
  static constexpr bool is_prime_field = false;
  int characteristic() const { return 0; }
};

struct Fp {
  int p = 0;  // 0 = unset zero
  long v = 0;
  Fp() = default;
  Fp(int p_, long x) : p(p_) {
    if (p_ < 2) throw invalid_input("modulus must be >= 2");
    v = ((x % p) + p) % p;
  }
  static Fp zero() { return Fp(); }
  static Fp one() { throw invalid_input("Fp::one needs a modulus; use Fp(p,1)"); }
  bool is_zero() const { return v == 0; }
  int modulus(const Fp& other) const {
    if (p && other.p && p != other.p) throw invalid_input("modulus mismatch");
    return p ? p : other.p;
  }
  Fp operator-() const { return p ? Fp(p, -v) : Fp(); }
  Fp inv() const {
    if (p == 0 || v == 0) throw invalid_input("division by zero");
    long t = 0, nt = 1, r = p, nr = v;
    while (nr != 0) {
      long q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    return Fp(p, t);
  }
  friend Fp operator+(const Fp& a, const Fp& b) {
    int m = a.modulus(b);
    return m ? Fp(m, a.v + b.v) : Fp();
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    int m = a.modulus(b);
    return m ? Fp(m, a.v - b.v) : Fp();
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    int m = a.modulus(b);
    return m ? Fp(m, a.v * b.v) : Fp();
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.p && b.p && a.p != b.p) return false;
    return a.v == b.v;
  }
  std::string str() const { return std::to_string(v); }
  static constexpr bool is_prime_field = true;
  int characteristic() const { return p; }
};

// Field descriptor used where scalars must be created generically.
template <class K>
struct FieldOf;
template <>
struct FieldOf<Rat> {
  Rat zero() const { return Rat(0); }
  Rat one() const { return Rat(1); }
  Rat of_int(long n) const { return Rat(n); }
  std::string name() const { return "Q"; }
  int characteristic() const { return 0; }
};
template <>
struct FieldOf<Fp> {
  int p = 2;
  Fp zero() const { return Fp(); }
  Fp one() const { return Fp(p, 1); }
  Fp of_int(long n) const { return Fp(p, n); }
  std::string name() const { return "F" + std::to_string(p); }
  int characteristic() const { return p; }
};

}  // namespace neckcat
