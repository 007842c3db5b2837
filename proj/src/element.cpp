#include "sl2lab/element.hpp"

namespace sl2lab {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (uint64_t f = 5; f * f <= n; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  if (p < 3) {
    throw std::invalid_argument("p = 2 is rejected: SL(2,2) is degenerate for this laboratory");
  }
}

uint64_t det_mod(const Element& x) {
  const uint64_t p = x.p;
  const uint64_t ad = (uint64_t)x.a * x.d % p;
  const uint64_t bc = (uint64_t)x.b * x.c % p;
  return (ad + p - bc) % p;
}

Element make_element(uint32_t a, uint32_t b, uint32_t c, uint32_t d, PrimeModulus pm) {
  const uint32_t p = pm.value();
  if (a >= p || b >= p || c >= p || d >= p) {
    throw std::invalid_argument("entry out of range [0,p)");
  }
  Element x{a, b, c, d, p};
  if (det_mod(x) != 1) {
    throw std::invalid_argument("determinant is not 1 mod p");
  }
  return x;
}

Element make_element_reduced(int64_t a, int64_t b, int64_t c, int64_t d, PrimeModulus pm) {
  const int64_t p = pm.value();
  auto red = [p](int64_t v) { return (uint32_t)(((v % p) + p) % p); };
  return make_element(red(a), red(b), red(c), red(d), pm);
}

Element identity(PrimeModulus p) { return Element{1, 0, 0, 1, p.value()}; }

Element minus_identity(PrimeModulus p) {
  const uint32_t q = p.value();
  return Element{q - 1, 0, 0, q - 1, q};
}

Element mul(const Element& x, const Element& y) {
  if (x.p != y.p) throw std::invalid_argument("modulus mismatch in mul");
  const uint64_t p = x.p;
  Element r;
  r.p = x.p;
  r.a = (uint32_t)(((uint64_t)x.a * y.a + (uint64_t)x.b * y.c) % p);
  r.b = (uint32_t)(((uint64_t)x.a * y.b + (uint64_t)x.b * y.d) % p);
  r.c = (uint32_t)(((uint64_t)x.c * y.a + (uint64_t)x.d * y.c) % p);
  r.d = (uint32_t)(((uint64_t)x.c * y.b + (uint64_t)x.d * y.d) % p);
  return r;
}

Element inv(const Element& x) {
  const uint32_t p = x.p;
  // adjugate; det = 1 makes it the exact inverse, no modular division needed
  return Element{x.d, (p - x.b) % p, (p - x.c) % p, x.a, p};
}

Element power(Element x, uint64_t k) {
  Element acc{1, 0, 0, 1, x.p};
  while (k > 0) {
    if (k & 1) acc = mul(acc, x);
    x = mul(x, x);
    k >>= 1;
  }
  return acc;
}

uint64_t element_order(const Element& x) {
  const Element e{1, 0, 0, 1, x.p};
  Element cur = x;
  uint64_t k = 1;
  while (!(cur == e)) {
    cur = mul(cur, x);
    ++k;
  }
  return k;
}

uint64_t element_code(const Element& x) {
  const uint64_t p = x.p;
  return ((((uint64_t)x.a * p + x.b) * p + x.c) * p + x.d);
}

Element element_from_code(uint64_t code, PrimeModulus pm) {
  const uint64_t p = pm.value();
  Element x;
  x.p = pm.value();
  x.d = (uint32_t)(code % p);
  code /= p;
  x.c = (uint32_t)(code % p);
  code /= p;
  x.b = (uint32_t)(code % p);
  code /= p;
  x.a = (uint32_t)code;
  return x;
}

std::pair<Element, Element> standard_pair(PrimeModulus p) {
  return {make_element(1, 1, 0, 1, p), make_element(1, 0, 1, 1, p)};
}

uint32_t mod_inverse(uint32_t x, uint32_t p) {
  if (x % p == 0) throw std::invalid_argument("no inverse of 0");
  int64_t t = 0, new_t = 1;
  int64_t r = p, new_r = x % p;
  while (new_r != 0) {
    const int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return (uint32_t)t;
}

std::string to_string(const Element& x) {
  return "[[" + std::to_string(x.a) + "," + std::to_string(x.b) + "],[" +
         std::to_string(x.c) + "," + std::to_string(x.d) + "]] mod " + std::to_string(x.p);
}

}  // namespace sl2lab
