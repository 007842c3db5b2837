#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sl2lab {

/// Deterministic primality test (trial division; moduli here are desk-scale).
bool is_prime(uint64_t n);

/// Prime modulus p >= 3 for SL(2,p). p = 2 is rejected: SL(2,2) is a
/// solvable group of order 6 and every downstream computation assumes the
/// quasisimple regime. p = 3 is accepted but callers tag reports with the
/// "solvable-quotient" regime note.
class PrimeModulus {
public:
  explicit PrimeModulus(uint32_t p);

  uint32_t value() const { return p_; }

  /// p(p^2 - 1), the order of SL(2,p).
  uint64_t group_order() const {
    const uint64_t p = p_;
    return p * (p * p - 1);
  }

  bool solvable_quotient_regime() const { return p_ == 3; }

private:
  uint32_t p_;
};

/// An element of SL(2,p): row-major [[a,b],[c,d]] with entries reduced to
/// [0,p) and determinant 1 mod p.
struct Element {
  uint32_t a = 1, b = 0, c = 0, d = 1;
  uint32_t p = 0;

  bool operator==(const Element&) const = default;
};

/// Validates entries and the determinant; throws std::invalid_argument.
Element make_element(uint32_t a, uint32_t b, uint32_t c, uint32_t d, PrimeModulus p);

/// Entries reduced mod p first, then determinant checked.
Element make_element_reduced(int64_t a, int64_t b, int64_t c, int64_t d, PrimeModulus p);

Element identity(PrimeModulus p);
Element minus_identity(PrimeModulus p);

/// 2x2 product mod p. Throws on modulus mismatch.
Element mul(const Element& x, const Element& y);

/// Adjugate [[d,-b],[-c,a]]; exact inverse since det = 1.
Element inv(const Element& x);

Element power(Element x, uint64_t k);

/// Least k >= 1 with x^k = I. Divides p(p^2-1).
uint64_t element_order(const Element& x);

uint64_t det_mod(const Element& x);

/// Dense code ((a*p + b)*p + c)*p + d; injective over all of M_2(F_p).
uint64_t element_code(const Element& x);
Element element_from_code(uint64_t code, PrimeModulus p);

/// The pair ([[1,1],[0,1]], [[1,0],[1,1]]) of standard unipotents.
std::pair<Element, Element> standard_pair(PrimeModulus p);

/// Modular inverse of a nonzero residue (extended Euclid).
uint32_t mod_inverse(uint32_t x, uint32_t p);

std::string to_string(const Element& x);

}  // namespace sl2lab
