#pragma once

// Finitely presented group machinery: Tietze simplification, abelianization
// through Smith normal form, permutation-image validation, Todd-Coxeter
// coset enumeration (HLT with lookahead) and Reidemeister-Schreier subgroup
// presentations.

#include "mtk/braid.hpp"
#include "mtk/vankampen.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace mtk {

using BigInt = boost::multiprecision::cpp_int;

// Relators are words over generator indices: letters +g / -g, 1-based.
struct FpPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

std::vector<int> free_reduce(const std::vector<int>& w);
std::vector<int> cyclic_reduce(const std::vector<int>& w);
// Free + cyclic reduction of every relator, empties dropped, duplicates
// (up to rotation and inversion) collapsed.
FpPresentation normalized(const FpPresentation& p);

// Deterministic bounded simplification: eliminate generators that occur
// exactly once in some relator, shortest relator first, then re-normalize.
// Never increases the generator count.
FpPresentation tietze_simplify(const FpPresentation& p, int effort = 10);

struct Abelianization {
  long long free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, divisibility chain
  bool operator==(const Abelianization& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};
Abelianization abelianize(const FpPresentation& p);

// Smith normal form diagonal of an integer matrix (exposed for tests).
std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m);

struct HomCheck {
  bool ok = true;
  std::vector<std::string> violations;
};
// Images indexed like p.generators; all permutations of one degree.
HomCheck check_homomorphism(const FpPresentation& p,
                            const std::vector<Perm>& images,
                            bool require_transpositions = false);

struct CosetTable {
  int generator_count = 0;
  // row[c][2*g] = image of coset c under generator g+1,
  // row[c][2*g+1] = image under its inverse; cosets 0-based, 0 = subgroup.
  std::vector<std::vector<long long>> row;

  long long index() const { return static_cast<long long>(row.size()); }
  Perm action(int gen_1based) const;
  std::string records() const;  // line-delimited export
};

struct TCResult {
  bool completed = false;
  long long max_live = 0;
  CosetTable table;  // valid only when completed
};

// HLT with lookahead, deterministic filling order. `bound` caps the number
// of simultaneously live cosets; hitting it after lookahead reports
// overflow (completed = false), never a wrong answer.
TCResult todd_coxeter(const FpPresentation& p,
                      const std::vector<std::vector<int>>& subgroup_gens,
                      long long bound);

// Coset table of the kernel of generators -> images (cosets = elements of
// the image subgroup, deterministic BFS numbering).
CosetTable coset_table_from_action(const std::vector<Perm>& images);

// Subgroup presentation from a completed coset table: Schreier generators
// on the non-tree edges, relators rewritten through every coset.
FpPresentation reidemeister_schreier(const FpPresentation& p,
                                     const CosetTable& table);

// Shared plain-text format: `gen: a b c`, `rel: <word>` or `rel: <w> = <w>`.
FpPresentation parse_presentation(const std::string& text);
std::string presentation_to_text(const FpPresentation& p);

// Fold van Kampen relations into relators over the puncture alphabet.
FpPresentation from_gpresentation(const GPresentation& g,
                                  CuspForm form = CuspForm::Braid);

}  // namespace mtk
