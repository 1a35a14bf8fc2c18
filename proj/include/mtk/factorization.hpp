#pragma once

// Factorization objects: ordered products of conjugated band-twist powers,
// degree bookkeeping, full-twist verification and invariance checks.

#include "mtk/bands.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mtk {

struct Factor {
  BandTwist twist;        // unused when is_stub
  int exponent = 1;       // 1 branch point, 2 node, 3 cusp for monodromy data
  // Conjugation stack, outermost last: the factor braid is
  // (band^exponent)^(c_1 c_2 ... c_k) = (c_1...c_k)^-1 band^exponent (c_1...c_k).
  // Kept as separate superscript factors because the van Kampen loop
  // transport applies them one at a time.
  std::vector<ArtinWord> conjugators;
  bool is_stub = false;
  long long stub_degree = 0;
  std::string origin_group;   // e.g. "C1" or "HV2"
  std::string origin_detail;  // e.g. "D4" or the head atom text
  int composite_serial = -1;  // expansion id shared by atoms of one composite
};

// The concatenated conjugator word c_1 c_2 ... c_k.
ArtinWord conjugator_word(const Factor& f, int strands);

ArtinWord factor_word(const Factor& f,
                      SideConvention conv = default_side_convention());
long long factor_degree(const Factor& f);

struct Factorization {
  PunctureConfig config;
  std::vector<Factor> factors;

  int strands() const { return config.count(); }
  bool has_stub() const;
};

ArtinWord product_word(const Factorization& f,
                       SideConvention conv = default_side_convention());
NormalForm product_braid(const Factorization& f,
                         SideConvention conv = default_side_convention());

struct DegreeReport {
  struct Group {
    std::string name;
    std::map<int, long long> count_by_exponent;
    long long factor_count = 0;
    long long composite_count = 0;
    long long stub_degree = 0;
    long long total_degree = 0;
  };
  std::vector<Group> groups;
  long long factor_count = 0;
  long long composite_count = 0;
  long long stub_degree = 0;
  long long total_degree = 0;
};

DegreeReport degree_report(const Factorization& f);

// n(n-1) - sum of exponents: 0 means no room for missing factors.
long long residual_degree(const Factorization& f, int n);

struct CheckResult {
  bool pass = false;
  long long degree_delta = 0;     // degree(product) - n(n-1)
  long long first_divergence = -1;  // index into canonical factors, -1 if none
  std::string message;
};
CheckResult check_full_twist(const Factorization& f,
                             SideConvention conv = default_side_convention());

// True iff conjugating every factor by rho leaves each comparison unit
// fixed (normal-form equality). Units are single factors, or whole
// composite expansions when by_composite is set (the invariance lemma is a
// statement about the composite product).
bool invariance_check(const Factorization& f, const ArtinWord& rho,
                      bool by_composite = true,
                      SideConvention conv = default_side_convention());

Factorization complex_conjugate(const Factorization& f);
// Conjugate every factor by c (telescoping: product conjugates by c).
Factorization conjugate_factors(const Factorization& f, const ArtinWord& c);

// Hurwitz moves (plumbing): exchange factors k, k+1 preserving the product.
void hurwitz_move_right(Factorization& f, size_t k,
                        SideConvention conv = default_side_convention());
void hurwitz_move_left(Factorization& f, size_t k,
                       SideConvention conv = default_side_convention());

// The generic-line-arrangement factorization of Delta_n^2: all Z^2_{ij},
// standard below paths, lexicographic by (j, i).
Factorization line_arrangement(int n);

// Full-twist factorization of the paired configuration on m pairs:
// all composite pair twists (expanded) followed by the internal pair twists.
Factorization paired_full_twist(int m);

}  // namespace mtk
