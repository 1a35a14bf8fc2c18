#pragma once

// Exact Chern numbers and index of the Galois cover from branch-curve data.
// All arithmetic is over arbitrary-precision integers; a non-integral final
// value is an error, never a rounding.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mtk {

using BigInt = boost::multiprecision::cpp_int;

struct BranchData {
  long long n = 0;    // degree of the projection (sheets)
  long long m = 0;    // degree of the branch curve
  long long d = 0;    // nodes
  long long rho = 0;  // cusps
  long long mu = 0;   // tangency points (recorded, unused by the formulas)
};

struct NonIntegral : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BigInt factorial(long long n);

// n!/4 (m-6)^2
BigInt chern_c1_sq(const BranchData& b);
// n! (m^2/2 - 3m/2 + 3 - 3d/4 - 4rho/3)
BigInt chern_c2(const BranchData& b);
// (c1^2 - 2 c2)/3
BigInt index_tau(const BranchData& b);

// "c * n!" when n! divides the value, empty otherwise.
std::string factored_form(const BigInt& value, long long n);

}  // namespace mtk
