#include "plethysm/common.hpp"

namespace plethysm {

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace plethysm
