#include "tpa/linalg.hpp"

namespace tpa {

bool is_probable_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n && d < 1000000; ++d)
    if (n % d == 0) return n == d;
  if (n < 1000000000000ull) return true;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return {};
  if (text.rfind("p:", 0) == 0) {
    uint64_t p = 0;
    try {
      p = std::stoull(text.substr(2));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field: " + text);
    }
    if (!is_probable_prime(p)) throw std::invalid_argument("field characteristic is not prime: " + text);
    if (p >= (1ull << 62)) throw std::invalid_argument("prime too large: " + text);
    return {p};
  }
  throw std::invalid_argument("field must be 'q' or 'p:PRIME', got " + text);
}

std::string FieldSpec::to_string() const { return p ? "p:" + std::to_string(p) : "q"; }

}  // namespace tpa
