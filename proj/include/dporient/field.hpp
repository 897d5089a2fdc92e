#pragma once
// Exact coefficient fields: the rationals Q and prime fields GF(p) for
// p < 2^31. Field elements are carried as exact rationals in canonical form:
// reduced fractions over Q, integer residues in [0, p) over GF(p). All
// arithmetic goes through a FieldSpec so the same code runs over either field.
//
// The "unit subgroup" <1> is the additive closure of 1 minus zero: the
// nonzero integers inside Q, and all of GF(p)* in a prime field. Nonzero
// elements of <1> factor as sigma * phi_plus with sigma in {+1,-1} and
// phi_plus positive; over GF(p) both factorizations exist and the default
// picks the smaller representative.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "dporient/caps.hpp"

namespace dporient {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct FieldError : Error {
  using Error::Error;
};

// Canonical-form exact value; see file comment.
using FieldElement = Rational;

inline Integer numerator(const FieldElement& x) {
  return boost::multiprecision::numerator(x);
}
inline Integer denominator(const FieldElement& x) {
  return boost::multiprecision::denominator(x);
}
inline bool is_integral(const FieldElement& x) { return denominator(x) == 1; }

inline std::string to_string(const Integer& n) { return n.str(); }

// "7", "-3", "2/5"
inline std::string to_string(const FieldElement& x) {
  if (is_integral(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline FieldElement parse_rational(const std::string& s) {
  if (s.empty()) throw FieldError("empty rational literal");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return FieldElement(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw FieldError("zero denominator in '" + s + "'");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return FieldElement(num, den);
  } catch (const std::runtime_error& e) {
    throw FieldError("bad rational literal '" + s + "': " + e.what());
  }
}

class FieldSpec {
 public:
  FieldSpec() = default;  // Q

  static FieldSpec rationals() { return FieldSpec(); }

  static FieldSpec prime(std::int64_t p) {
    if (p < 2) throw FieldError("field modulus must be at least 2");
    if (p > (std::int64_t(1) << 31))
      throw FieldError("field modulus too large (limit 2^31)");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw FieldError("field modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p_ = p;
    return f;
  }

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::int64_t modulus() const {
    if (p_ == 0) throw FieldError("rationals have no modulus");
    return p_;
  }

  std::string describe() const {
    return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  // True iff x is a canonical element of this field.
  bool is_element(const FieldElement& x) const {
    if (is_rationals()) return true;
    return is_integral(x) && numerator(x) >= 0 && numerator(x) < p_;
  }

  // Reduces an integral rational into canonical form (mod p over GF(p)).
  // Over GF(p) non-integral input is rejected; use reduce_rational to divide.
  FieldElement canonical(const Rational& x) const {
    if (is_rationals()) return x;
    if (!is_integral(x))
      throw FieldError("non-integral value " + to_string(x) + " over " + describe());
    return FieldElement(mod(numerator(x)));
  }

  FieldElement add(const FieldElement& a, const FieldElement& b) const {
    return is_rationals() ? FieldElement(a + b) : canonical(a + b);
  }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const {
    return is_rationals() ? FieldElement(a - b) : FieldElement(mod(numerator(a) - numerator(b)));
  }
  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    return is_rationals() ? FieldElement(a * b) : canonical(a * b);
  }
  FieldElement neg(const FieldElement& a) const {
    return is_rationals() ? FieldElement(-a) : FieldElement(mod(-numerator(a)));
  }
  FieldElement inv(const FieldElement& a) const {
    if (a == 0) throw FieldError("division by zero in " + describe());
    if (is_rationals()) return FieldElement(1) / a;
    return FieldElement(boost::multiprecision::powm(numerator(a), Integer(p_ - 2), Integer(p_)));
  }
  FieldElement div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
  }

  // Membership in <1>, the additive closure of 1 without zero made explicit
  // at call sites: integers over Q, everything over GF(p).
  bool in_unit_subgroup(const FieldElement& x) const {
    if (is_rationals()) return is_integral(x);
    return is_element(x);
  }

  // Whether the integer n lands on 0 in this field.
  bool is_zero_residue(const Integer& n) const {
    if (is_rationals()) return n == 0;
    return mod(n) == 0;
  }

  FieldElement reduce_integer(const Integer& n) const {
    return is_rationals() ? FieldElement(n) : FieldElement(mod(n));
  }

  // Reduces an arbitrary exact rational into the field (num * den^-1 over
  // GF(p)); raises when the denominator vanishes mod p.
  FieldElement reduce_rational(const Rational& x) const {
    if (is_rationals()) return x;
    Integer d = mod(denominator(x));
    if (d == 0)
      throw FieldError("denominator of " + to_string(x) + " vanishes in " + describe());
    return mul(FieldElement(mod(numerator(x))), inv(FieldElement(d)));
  }

  struct Factorization {
    int sigma = 1;        // +1 or -1
    Integer phi_plus;     // positive; over GF(p) the representative of sigma*phi in [1, p)
  };

  // Factors nonzero phi in <1> as sigma * phi_plus. Over Q sigma is the sign
  // of phi. Over GF(p) both signs work; the default minimizes phi_plus
  // (ties cannot occur for odd p; p=2 yields sigma=+1). A sigma_override
  // forces the sign; over Q a contradictory override raises.
  Factorization positive_factorization(const FieldElement& phi,
                                       std::optional<int> sigma_override = {}) const {
    if (sigma_override && *sigma_override != 1 && *sigma_override != -1)
      throw FieldError("sigma override must be +1 or -1");
    if (phi == 0) throw FieldError("cannot factor zero");
    if (!in_unit_subgroup(phi))
      throw FieldError("phi " + to_string(phi) + " outside <1> in " + describe());
    Factorization f;
    if (is_rationals()) {
      f.sigma = phi < 0 ? -1 : 1;
      if (sigma_override && *sigma_override != f.sigma)
        throw FieldError("sigma override contradicts the sign of " + to_string(phi));
      f.phi_plus = boost::multiprecision::abs(numerator(phi));
      return f;
    }
    Integer r = numerator(phi);  // canonical, 1..p-1
    Integer comp = Integer(p_) - r;
    if (sigma_override) {
      f.sigma = *sigma_override;
      f.phi_plus = f.sigma == 1 ? r : comp;
    } else if (r <= comp) {
      f.sigma = 1;
      f.phi_plus = r;
    } else {
      f.sigma = -1;
      f.phi_plus = comp;
    }
    return f;
  }

 private:
  Integer mod(const Integer& n) const {
    Integer r = n % p_;
    if (r < 0) r += p_;
    return r;
  }

  std::int64_t p_ = 0;  // 0 means Q
};

}  // namespace dporient
