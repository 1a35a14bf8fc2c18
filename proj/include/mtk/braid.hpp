#pragma once

// Exact arithmetic in the Artin braid group B_n.
//
// Words are signed generator sequences, equality goes through the Garside
// left-canonical normal form (permutation-table factors), and an independent
// Dynnikov-coordinate oracle is provided for cross-checking.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtk {

// A permutation of {0,...,n-1}; img[i] is the image of i.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int n);
  // The half-twist permutation i -> n-1-i.
  static Perm delta(int n);
  static Perm transposition(int n, int i, int j);

  int size() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  bool is_identity() const;

  // Composition in diagram order: first apply *this, then other.
  Perm then(const Perm& other) const;
  Perm inverse() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string cycle_string(int base = 1) const;

private:
  std::vector<int> img_;
};

// A word in the Artin generators of B_n. Letters are +i / -i for
// sigma_i^{+1} / sigma_i^{-1}, with 1 <= i <= n-1.
struct ArtinWord {
  int strands = 0;
  std::vector<int> letters;

  ArtinWord() = default;
  explicit ArtinWord(int n) : strands(n) {}
  ArtinWord(int n, std::vector<int> ls);

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  // Idempotent free reduction (cancels all adjacent s s^-1 pairs).
  ArtinWord reduced() const;

  bool operator==(const ArtinWord& o) const {
    return strands == o.strands && letters == o.letters;
  }
};

ArtinWord multiply(const ArtinWord& a, const ArtinWord& b);
ArtinWord inverse(const ArtinWord& a);
ArtinWord power(const ArtinWord& a, int k);
// (A)_C = C^-1 A C.
ArtinWord conjugate(const ArtinWord& a, const ArtinWord& c);
// Exponent sum; invariant under the braid relations.
long long degree(const ArtinWord& a);
// Delta_n^2 = (sigma_1 ... sigma_{n-1})^n, the central full twist.
ArtinWord full_twist(int n);
Perm induced_permutation(const ArtinWord& a);

// Garside left-canonical form: Delta^p s_1 ... s_k with each s_i a
// permutation braid, the pairs (s_i, s_{i+1}) left-weighted, and no s_i
// equal to the identity or to Delta.
struct NormalForm {
  int strands = 0;
  long long delta_power = 0;
  std::vector<Perm> factors;

  bool operator==(const NormalForm& o) const {
    return strands == o.strands && delta_power == o.delta_power &&
           factors == o.factors;
  }
  bool operator!=(const NormalForm& o) const { return !(*this == o); }
  bool is_trivial() const { return delta_power == 0 && factors.empty(); }
  long long canonical_length() const {
    return static_cast<long long>(factors.size());
  }
};

NormalForm normal_form(const ArtinWord& a);
// A word whose normal form reproduces nf exactly.
ArtinWord to_word(const NormalForm& nf);
bool equals(const ArtinWord& a, const ArtinWord& b);

// Lattice operations on permutation braids (exposed for tests).
namespace garside {
Perm left_join(const Perm& u, const Perm& v);
Perm left_meet(const Perm& u, const Perm& v);
bool left_weighted(const Perm& a, const Perm& b);
// Canonical positive word for a permutation braid.
std::vector<int> simple_word(const Perm& p);
}  // namespace garside

// Independent equality oracle acting on Dynnikov coordinates of a standard
// curve diagram (with an anchor puncture, so the center acts nontrivially).
bool dynnikov_equal(const ArtinWord& a, const ArtinWord& b);

// Coordinate vector (decimal strings) of the base diagram acted on by a;
// exposed so tests can freeze values.
std::vector<std::string> dynnikov_coordinates(const ArtinWord& a);

}  // namespace mtk
