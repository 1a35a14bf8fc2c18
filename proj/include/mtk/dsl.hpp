#pragma once

// ASCII concrete syntax for the factorization notation: markers Z / uZ / bZ,
// skip decorations, subscript index groups, exponents, conjugation
// superscripts, indexed families, named bindings and declared-degree stubs.
//
//   Z^2_{33',44'}                 plain composite full twist
//   uZ^3_{11',4}                  underline (below) tangency factor
//   bZ^3_{2',44'}                 bar (above)
//   uZ(4)(4')^2_{11',55'}         skips: above at 4, 4'
//   uZ(6)-(7')^2_{11',88'}        skip range, inclusive in label order
//   (uZ^2_{4'i})_{i=22',55',6,6'} indexed family
//   (uZ^2_{ii',99'})_{i=2,4-6,8}  integer ranges in family values
//   (uZ^2_{ii',1717'})_{i=2-16!3!7!9!14}  with exclusions
//   (A)^{B C}                     conjugation, binds tighter than product
//   Id                            empty product
//
// Files are line oriented: `#` comments, `let NAME = expr`,
// `stub NAME = degree`, `factorization NAME = expr`, `include "file"`,
// trailing backslash continues a line.

#include "mtk/factorization.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace mtk {
namespace dsl {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" +
                           std::to_string(col_)),
        line(line_), col(col_) {}
};

struct Group {
  std::vector<std::string> members;  // 1 (single) or 2 (pair / juxtaposed)
  bool operator==(const Group& o) const { return members == o.members; }
};

struct SkipItem {
  std::string from, to;  // single item has from == to
  bool is_range = false;
  bool operator==(const SkipItem& o) const {
    return from == o.from && to == o.to && is_range == o.is_range;
  }
};

enum class Marker { Plain, Under, Bar };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Atom {
  Marker marker = Marker::Plain;
  std::vector<SkipItem> skips;
  std::vector<Group> groups;  // one or two
  int exponent = 1;
};

struct Expr {
  enum Kind { AtomK, RefK, ProductK, ConjK, FamilyK } kind = ProductK;
  Atom atom;                      // AtomK
  std::string name;               // RefK
  std::vector<ExprPtr> children;  // ProductK: factors; ConjK/FamilyK: {base}
  std::vector<ExprPtr> conj;      // ConjK: superscript product terms
  std::string var;                // FamilyK
  std::vector<Group> values;      // FamilyK
};

bool equal(const ExprPtr& a, const ExprPtr& b);

ExprPtr parse_expr(const std::string& text);
std::string serialize(const ExprPtr& e);

struct File {
  // Ordered bindings; factorization entries are also bindings.
  std::vector<std::pair<std::string, ExprPtr>> bindings;
  std::map<std::string, ExprPtr> by_name;
  std::map<std::string, long long> stubs;         // declared-degree symbols
  std::vector<std::string> factorizations;        // declared entry points
};

// include resolution callback: returns file content for a path.
using IncludeLoader = std::function<std::string(const std::string&)>;
File parse_file(const std::string& text, const IncludeLoader& loader = {});
File parse_file_at(const std::string& path);  // loads includes relative to it

// Flattens families, expands composite subscripts, resolves conjugators to
// braid words and attaches exponents; stub references become stub factors.
Factorization resolve(const File& file, const std::string& entry,
                      const PunctureConfig& config,
                      SideConvention conv = default_side_convention());
// Resolve a bare expression (no references).
Factorization resolve_expr(const ExprPtr& e, const PunctureConfig& config,
                           SideConvention conv = default_side_convention());

}  // namespace dsl
}  // namespace mtk
