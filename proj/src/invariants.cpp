#include "mtk/invariants.hpp"

#include <sstream>

namespace mtk {

BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt f = 1;
  for (long long k = 2; k <= n; ++k) f *= k;
  return f;
}

namespace {

void require(const BranchData& b) {
  if (b.n < 1) throw std::invalid_argument("branch data: n must be >= 1");
  if (b.m < 0 || b.d < 0 || b.rho < 0 || b.mu < 0)
    throw std::invalid_argument("branch data: counts must be nonnegative");
}

BigInt exact_div(const BigInt& num, long long den, const char* what) {
  if (num % den != 0)
    throw NonIntegral(std::string(what) + " is not an integer (" + num.str() +
                      "/" + std::to_string(den) + ")");
  return num / den;
}

}  // namespace

BigInt chern_c1_sq(const BranchData& b) {
  require(b);
  BigInt num = factorial(b.n) * BigInt(b.m - 6) * BigInt(b.m - 6);
  return exact_div(num, 4, "C1^2");
}

BigInt chern_c2(const BranchData& b) {
  require(b);
  // n! (m^2/2 - 3m/2 + 3 - 3d/4 - 4rho/3) = n! (6m^2 - 18m + 36 - 9d - 16rho)/12
  BigInt bracket = BigInt(6) * b.m * b.m - BigInt(18) * b.m + 36 -
                   BigInt(9) * b.d - BigInt(16) * b.rho;
  return exact_div(factorial(b.n) * bracket, 12, "C2");
}

BigInt index_tau(const BranchData& b) {
  BigInt c1 = chern_c1_sq(b);
  BigInt c2 = chern_c2(b);
  return exact_div(c1 - 2 * c2, 3, "tau");
}

std::string factored_form(const BigInt& value, long long n) {
  BigInt f = factorial(n);
  if (f != 0 && value % f == 0) {
    BigInt coeff = value / f;
    std::ostringstream os;
    os << coeff.str() << " * " << n << "!";
    return os.str();
  }
  return "";
}

}  // namespace mtk
