#pragma once

// The van Kampen passage: loop elements A, B attached to a band, relations
// by singularity type, presentations of the complement group and its
// quotient, and relation orbits under the pair-twist substitutions.

#include "mtk/factorization.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mtk {

struct GLetter {
  int pos = 0;   // puncture position, 1-based
  int sign = 1;  // +1 / -1
  bool operator==(const GLetter& o) const { return pos == o.pos && sign == o.sign; }
};

// A word over the loop generators of the punctured fiber.
struct GWord {
  std::vector<GLetter> letters;

  GWord() = default;
  static GWord gen(int pos, int sign = 1) { return GWord{{GLetter{pos, sign}}}; }
  GWord(std::initializer_list<GLetter> ls) : letters(ls) {}
  explicit GWord(std::vector<GLetter> ls) : letters(std::move(ls)) {}

  GWord reduced() const;
  GWord inverse() const;
  // All-positive display of the same word in the involution quotient
  // (every generator an involution).
  GWord unsigned_display() const;
  bool operator==(const GWord& o) const { return letters == o.letters; }
};

GWord operator*(const GWord& a, const GWord& b);
// (A)_B = B^-1 A B.
GWord gconjugate(const GWord& a, const GWord& b);

enum class RelKind { Branch, Node, Cusp, Square, Custom };

struct Relation {
  RelKind kind = RelKind::Custom;
  GWord lhs, rhs;  // Branch: lhs=rhs; Node: [lhs,rhs]=1; Cusp: <lhs,rhs>
  std::string origin;
};

enum class CuspForm { Braid, Involutive };  // ABA=BAB vs ABABAB=1

// Quotient mode adjoins the squares of every generator, primed and
// unprimed alike. (The two printed definitions of the quotient disagree on
// whether the primed generators enter squared or plain; the squared
// reading is the one consistent with the permutation representation, and
// it is the one implemented.)
enum class PresentationMode { Complement, Quotient };

// The braid action on the free group over the puncture loops
// (the (A)_B convention: action of a product applies the left factor first).
GWord apply_braid_action(const GWord& w, const ArtinWord& braid);

// Loop transport along one superscript element (the map used factor by
// factor when reading off A and B from a conjugated band).
GWord transport(const GWord& w, const ArtinWord& superscript);

// Loop elements of a bare monotone band.
std::pair<GWord, GWord> loops_from_path(const PathDescriptor& p,
                                        const PunctureConfig& c,
                                        SideConvention conv = default_side_convention());
// Loop elements of a conjugated factor.
std::pair<GWord, GWord> loops_from_factor(const Factor& f,
                                          SideConvention conv = default_side_convention());

// One relation per atomic factor, shaped by its exponent.
Relation relation_from_factor(const Factor& f, CuspForm form = CuspForm::Braid,
                              SideConvention conv = default_side_convention());

struct GPresentation {
  PunctureConfig config;
  std::vector<Relation> relations;
};

GPresentation presentation_from_factorization(
    const Factorization& f, PresentationMode mode = PresentationMode::Complement,
    CuspForm form = CuspForm::Braid,
    SideConvention conv = default_side_convention());

// Substitution Gamma_j -> Gamma_j', Gamma_j' -> Gamma_j' Gamma_j Gamma_j'^-1,
// iterated m times (negative m inverts), applied at the pair containing pos.
GWord pair_substitution(const GWord& w, const PunctureConfig& c,
                        const std::string& pair_label, int m);

// All substituted copies of the relations for exponent tuples with
// |m_j| <= bound over the paired labels. Exponents +-1 already generate
// everything the larger powers would, hence the default.
std::vector<Relation> invariance_orbit(const std::vector<Relation>& rels,
                                       const PunctureConfig& c, int bound = 1);

// Rewrite every letter by the braid action of c.
std::vector<Relation> conjugate_generators(const std::vector<Relation>& rels,
                                           const ArtinWord& c);

// Text formats: `gen: ...` / `rel: ...` lines, stable ordering.
std::string gword_text(const GWord& w, const PunctureConfig& c,
                       bool display_unsigned);
std::string relation_text(const Relation& r, const PunctureConfig& c,
                          bool display_unsigned);
std::string presentation_text(const GPresentation& p, bool display_unsigned);
GWord parse_gword(const std::string& text, const PunctureConfig& c);

}  // namespace mtk
