#include "mtk/dsl.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace mtk {
namespace dsl {

namespace {

// ---------------------------------------------------------------------------
// Lexing / parsing

struct Cursor {
  const std::string& s;
  size_t i = 0;
  int line = 1, col = 1;

  explicit Cursor(const std::string& text) : s(text) {}

  bool eof() const { return i >= s.size(); }
  char peek(size_t k = 0) const { return i + k < s.size() ? s[i + k] : '\0'; }
  char get() {
    char c = s[i++];
    if (c == '\n') { ++line; col = 1; } else { ++col; }
    return c;
  }
  void skip_ws() {
    while (!eof() && std::isspace((unsigned char)peek())) get();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }
  bool try_consume(char c) {
    if (peek() == c) { get(); return true; }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
};

bool ident_start(char c) { return std::isalpha((unsigned char)c); }
bool ident_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

std::string read_ident(Cursor& cur) {
  std::string out;
  while (!cur.eof() && ident_char(cur.peek())) out.push_back(cur.get());
  return out;
}

int read_int(Cursor& cur) {
  bool negative = cur.try_consume('-');
  if (!std::isdigit((unsigned char)cur.peek())) cur.fail("expected integer");
  long v = 0;
  while (std::isdigit((unsigned char)cur.peek())) v = v * 10 + (cur.get() - '0');
  return negative ? (int)-v : (int)v;
}

// A label atom inside subscripts/skips: INT or single-letter var, primed or not.
std::string read_label_atom(Cursor& cur) {
  std::string out;
  if (std::isdigit((unsigned char)cur.peek())) {
    while (std::isdigit((unsigned char)cur.peek())) out.push_back(cur.get());
  } else if (ident_start(cur.peek())) {
    out.push_back(cur.get());
  } else {
    cur.fail("expected label");
  }
  if (cur.peek() == '\'') out.push_back(cur.get());
  return out;
}

bool is_primed(const std::string& l) { return !l.empty() && l.back() == '\''; }
std::string base_of(const std::string& l) {
  return is_primed(l) ? l.substr(0, l.size() - 1) : l;
}

// Turn one comma-separated segment into subscript groups. Rules:
//  - one unprimed-then-primed atom pair with equal bases => a pair group;
//  - a single primed atom whose base splits into two equal decimal halves
//    (e.g. 33' or 1010') => the pair group (3,3') / (10,10');
//  - a single atom otherwise => a singleton group;
//  - two atoms otherwise => two singleton groups (juxtaposed slots).
void segment_to_groups(Cursor& cur, std::vector<std::string> atoms,
                       std::vector<Group>& out) {
  if (atoms.size() == 1) {
    const std::string& a = atoms[0];
    if (is_primed(a)) {
      std::string b = base_of(a);
      if (b.size() >= 2 && b.size() % 2 == 0 &&
          b.substr(0, b.size() / 2) == b.substr(b.size() / 2) &&
          b[0] != '0') {
        std::string h = b.substr(0, b.size() / 2);
        out.push_back(Group{{h, h + "'"}});
        return;
      }
    }
    out.push_back(Group{{a}});
    return;
  }
  if (atoms.size() == 2) {
    if (!is_primed(atoms[0]) && is_primed(atoms[1]) &&
        base_of(atoms[0]) == base_of(atoms[1])) {
      out.push_back(Group{{atoms[0], atoms[1]}});
      return;
    }
    out.push_back(Group{{atoms[0]}});
    out.push_back(Group{{atoms[1]}});
    return;
  }
  cur.fail("too many labels in one subscript segment");
}

std::vector<Group> parse_groups(Cursor& cur) {
  std::vector<Group> groups;
  cur.expect('{');
  for (;;) {
    cur.skip_ws();
    std::vector<std::string> atoms;
    while (cur.peek() != ',' && cur.peek() != '}') {
      atoms.push_back(read_label_atom(cur));
      cur.skip_ws();
    }
    if (atoms.empty()) cur.fail("empty subscript segment");
    segment_to_groups(cur, std::move(atoms), groups);
    if (cur.try_consume(',')) continue;
    cur.expect('}');
    break;
  }
  return groups;
}

// Family values: groups, integer ranges a-b, exclusions !v.
std::vector<Group> parse_family_values(Cursor& cur) {
  std::vector<Group> values;
  std::vector<std::string> excluded;
  for (;;) {
    cur.skip_ws();
    if (cur.try_consume('!')) {
      excluded.push_back(read_label_atom(cur));
    } else {
      std::vector<std::string> atoms;
      atoms.push_back(read_label_atom(cur));
      cur.skip_ws();
      if (cur.peek() == '-' && !is_primed(atoms[0])) {
        cur.get();
        std::string hi = read_label_atom(cur);
        int lo = std::stoi(atoms[0]);
        int hiv = std::stoi(base_of(hi));
        if (is_primed(hi) || hiv < lo) cur.fail("bad family range");
        for (int v = lo; v <= hiv; ++v) values.push_back(Group{{std::to_string(v)}});
      } else {
        while (cur.peek() != ',' && cur.peek() != '}' && cur.peek() != '!') {
          atoms.push_back(read_label_atom(cur));
          cur.skip_ws();
        }
        std::vector<Group> gs;
        segment_to_groups(cur, std::move(atoms), gs);
        if (gs.size() != 1) cur.fail("family value must be a single group");
        values.push_back(gs[0]);
      }
    }
    cur.skip_ws();
    if (cur.try_consume(',')) continue;
    if (cur.peek() == '!') continue;
    break;
  }
  if (!excluded.empty()) {
    std::vector<Group> kept;
    for (auto& v : values) {
      bool drop = false;
      for (auto& e : excluded)
        if (v.members.size() == 1 && v.members[0] == e) drop = true;
      if (!drop) kept.push_back(v);
    }
    values = std::move(kept);
  }
  return values;
}

ExprPtr parse_product(Cursor& cur, char terminator);

ExprPtr parse_primary(Cursor& cur) {
  cur.skip_ws();
  if (cur.try_consume('(')) {
    ExprPtr inner = parse_product(cur, ')');
    cur.expect(')');
    return inner;
  }
  if (std::isdigit((unsigned char)cur.peek()))
    cur.fail("unexpected digit; labels only appear inside subscripts");
  if (!ident_start(cur.peek())) cur.fail("expected a factor");
  // Atom markers or a reference name. Idents may contain underscores, so an
  // exponent-less atom like Z_{44'} must be peeled off its marker by hand.
  size_t save_i = cur.i;
  int save_line = cur.line, save_col = cur.col;
  std::string word = read_ident(cur);
  std::string marker;
  for (const char* m : {"uZ", "bZ", "Z"}) {
    size_t len = std::string(m).size();
    if (word == m || (word.rfind(m, 0) == 0 && word.size() > len && word[len] == '_')) {
      marker = m;
      break;
    }
  }
  if (marker.empty()) {
    if (word == "Id") {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::ProductK;
      return e;
    }
    auto e = std::make_shared<Expr>();
    e->kind = Expr::RefK;
    e->name = word;
    return e;
  }
  // rewind to just past the marker (idents never span lines)
  cur.i = save_i + marker.size();
  cur.line = save_line;
  cur.col = save_col + static_cast<int>(marker.size());
  word = marker;
  auto e = std::make_shared<Expr>();
  e->kind = Expr::AtomK;
  e->atom.marker = word == "Z"    ? Marker::Plain
                   : word == "uZ" ? Marker::Under
                                  : Marker::Bar;
  // Skip decorations: (4)(4') or (6)-(7').
  while (cur.peek() == '(') {
    cur.get();
    std::string from = read_label_atom(cur);
    cur.expect(')');
    if (cur.peek() == '-' && cur.peek(1) == '(') {
      cur.get();
      cur.get();
      std::string to = read_label_atom(cur);
      cur.expect(')');
      e->atom.skips.push_back(SkipItem{from, to, true});
    } else {
      e->atom.skips.push_back(SkipItem{from, from, false});
    }
  }
  // Exponent before subscript.
  bool have_exp = false;
  if (cur.peek() == '^' && cur.peek(1) != '{') {
    cur.get();
    e->atom.exponent = read_int(cur);
    have_exp = true;
  }
  cur.skip_ws();
  if (!cur.try_consume('_')) cur.fail("atom needs a subscript");
  e->atom.groups = parse_groups(cur);
  if (e->atom.groups.empty() || e->atom.groups.size() > 2)
    cur.fail("atom subscript needs one or two index groups");
  // Exponent after subscript.
  if (!have_exp && cur.peek() == '^' && cur.peek(1) != '{') {
    cur.get();
    e->atom.exponent = read_int(cur);
  }
  if (e->atom.exponent == 0) cur.fail("zero exponent");
  return e;
}

ExprPtr parse_term(Cursor& cur) {
  ExprPtr base = parse_primary(cur);
  for (;;) {
    cur.skip_ws();
    if (cur.peek() == '^' && cur.peek(1) == '{') {
      cur.get();
      cur.get();
      ExprPtr conj = parse_product(cur, '}');
      cur.expect('}');
      auto e = std::make_shared<Expr>();
      e->kind = Expr::ConjK;
      e->children = {base};
      if (conj->kind == Expr::ProductK)
        e->conj = conj->children;
      else
        e->conj = {conj};
      if (e->conj.empty()) cur.fail("empty conjugator");
      base = e;
      continue;
    }
    if (cur.peek() == '_' && cur.peek(1) == '{') {
      // family subscript: `_{var=...}`
      size_t save_i = cur.i;
      int save_line = cur.line, save_col = cur.col;
      cur.get();
      cur.get();
      cur.skip_ws();
      if (ident_start(cur.peek())) {
        std::string var = read_ident(cur);
        cur.skip_ws();
        if (cur.try_consume('=')) {
          auto e = std::make_shared<Expr>();
          e->kind = Expr::FamilyK;
          e->children = {base};
          e->var = var;
          e->values = parse_family_values(cur);
          cur.expect('}');
          if (e->values.empty()) cur.fail("empty family value list");
          base = e;
          continue;
        }
      }
      cur.i = save_i;
      cur.line = save_line;
      cur.col = save_col;
      break;
    }
    break;
  }
  return base;
}

ExprPtr parse_product(Cursor& cur, char terminator) {
  auto prod = std::make_shared<Expr>();
  prod->kind = Expr::ProductK;
  for (;;) {
    cur.skip_ws();
    while (cur.peek() == '*' || cur.peek() == '.') {
      cur.get();
      cur.skip_ws();
    }
    if (cur.eof() || cur.peek() == terminator) break;
    prod->children.push_back(parse_term(cur));
  }
  if (prod->children.size() == 1) return prod->children[0];
  return prod;
}

}  // namespace

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::AtomK:
      return a->atom.marker == b->atom.marker && a->atom.skips == b->atom.skips &&
             a->atom.groups == b->atom.groups &&
             a->atom.exponent == b->atom.exponent;
    case Expr::RefK:
      return a->name == b->name;
    case Expr::ProductK: {
      if (a->children.size() != b->children.size()) return false;
      for (size_t i = 0; i < a->children.size(); ++i)
        if (!equal(a->children[i], b->children[i])) return false;
      return true;
    }
    case Expr::ConjK: {
      if (a->conj.size() != b->conj.size()) return false;
      for (size_t i = 0; i < a->conj.size(); ++i)
        if (!equal(a->conj[i], b->conj[i])) return false;
      return equal(a->children[0], b->children[0]);
    }
    case Expr::FamilyK: {
      if (a->var != b->var || !(a->values == b->values)) return false;
      return equal(a->children[0], b->children[0]);
    }
  }
  return false;
}

ExprPtr parse_expr(const std::string& text) {
  Cursor cur(text);
  ExprPtr e = parse_product(cur, '\0');
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input");
  return e;
}

namespace {

void serialize_into(const ExprPtr& e, std::ostream& os, bool parenthesize_product);

void serialize_group(const Group& g, std::ostream& os) {
  if (g.members.size() == 2)
    os << g.members[0] << g.members[1];
  else
    os << g.members[0];
}

void serialize_atom(const Atom& a, std::ostream& os) {
  os << (a.marker == Marker::Plain ? "Z" : a.marker == Marker::Under ? "uZ" : "bZ");
  for (const auto& s : a.skips) {
    os << '(' << s.from << ')';
    if (s.is_range) os << "-(" << s.to << ')';
  }
  if (a.exponent != 1) os << '^' << a.exponent;
  os << "_{";
  for (size_t i = 0; i < a.groups.size(); ++i) {
    if (i) os << ',';
    serialize_group(a.groups[i], os);
  }
  os << '}';
}

void serialize_into(const ExprPtr& e, std::ostream& os, bool parenthesize_product) {
  switch (e->kind) {
    case Expr::AtomK:
      serialize_atom(e->atom, os);
      break;
    case Expr::RefK:
      os << e->name;
      break;
    case Expr::ProductK:
      if (e->children.empty()) {
        os << "Id";
        break;
      }
      if (parenthesize_product && e->children.size() > 1) os << '(';
      for (size_t i = 0; i < e->children.size(); ++i) {
        if (i) os << ' ';
        serialize_into(e->children[i], os, true);
      }
      if (parenthesize_product && e->children.size() > 1) os << ')';
      break;
    case Expr::ConjK:
      os << '(';
      serialize_into(e->children[0], os, false);
      os << ")^{";
      for (size_t i = 0; i < e->conj.size(); ++i) {
        if (i) os << ' ';
        serialize_into(e->conj[i], os, true);
      }
      os << '}';
      break;
    case Expr::FamilyK:
      os << '(';
      serialize_into(e->children[0], os, false);
      os << ")_{" << e->var << '=';
      for (size_t i = 0; i < e->values.size(); ++i) {
        if (i) os << ',';
        serialize_group(e->values[i], os);
      }
      os << '}';
      break;
  }
}

}  // namespace

std::string serialize(const ExprPtr& e) {
  std::ostringstream os;
  serialize_into(e, os, false);
  return os.str();
}

// ---------------------------------------------------------------------------
// File parsing

File parse_file(const std::string& text, const IncludeLoader& loader) {
  File f;
  std::istringstream is(text);
  std::string raw, logical;
  int lineno = 0, start_line = 0;
  auto process = [&](const std::string& stmt, int at_line) {
    Cursor cur(stmt);
    cur.line = at_line;
    cur.skip_ws();
    if (cur.eof()) return;
    std::string kw = read_ident(cur);
    cur.skip_ws();
    if (kw == "include") {
      if (!cur.try_consume('"')) cur.fail("include needs a quoted path");
      std::string path;
      while (!cur.eof() && cur.peek() != '"') path.push_back(cur.get());
      cur.expect('"');
      if (!loader) cur.fail("includes not available here");
      File sub = parse_file(loader(path), loader);
      for (auto& [n, e] : sub.bindings) {
        if (!f.by_name.emplace(n, e).second)
          cur.fail("duplicate binding " + n + " from include");
        f.bindings.push_back({n, e});
      }
      for (auto& [n, d] : sub.stubs) f.stubs[n] = d;
      for (auto& n : sub.factorizations) f.factorizations.push_back(n);
      return;
    }
    if (kw == "let" || kw == "factorization") {
      std::string name = read_ident(cur);
      if (name.empty()) cur.fail("binding needs a name");
      cur.skip_ws();
      cur.expect('=');
      ExprPtr e = parse_product(cur, '\0');
      if (!f.by_name.emplace(name, e).second) cur.fail("duplicate binding " + name);
      f.bindings.push_back({name, e});
      if (kw == "factorization") f.factorizations.push_back(name);
      return;
    }
    if (kw == "stub") {
      std::string name = read_ident(cur);
      if (name.empty()) cur.fail("stub needs a name");
      cur.skip_ws();
      cur.expect('=');
      cur.skip_ws();
      long long d = read_int(cur);
      f.stubs[name] = d;
      return;
    }
    cur.fail("unknown directive '" + kw + "'");
  };
  while (std::getline(is, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    bool cont = false;
    std::string chunk = raw;
    while (!chunk.empty() &&
           std::isspace((unsigned char)chunk.back()))
      chunk.pop_back();
    if (!chunk.empty() && chunk.back() == '\\') {
      chunk.pop_back();
      cont = true;
    }
    if (logical.empty()) start_line = lineno;
    // keep physical newlines so error positions stay exact
    logical += chunk;
    logical += '\n';
    if (cont) continue;
    process(logical, start_line);
    logical.clear();
  }
  if (!logical.empty()) process(logical, start_line);
  return f;
}

File parse_file_at(const std::string& path) {
  namespace fs = std::filesystem;
  fs::path base = fs::path(path).parent_path();
  auto load = [&](const std::string& rel) -> std::string {
    fs::path p = base / rel;
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot open include: " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_file(os.str(), load);
}

// ---------------------------------------------------------------------------
// Resolution

namespace {

struct ResolveCtx {
  const File* file = nullptr;
  const PunctureConfig* config = nullptr;
  SideConvention conv = SideConvention::BelowPositive;
  std::map<std::string, Group> env;          // family variable bindings
  std::vector<ArtinWord> conj_stack;         // innermost first
  std::string group_name;                    // top-level reference name
  std::string detail;                        // nested reference path
  int composite_counter = 0;
  std::set<std::string> in_progress;         // cycle guard
  Factorization* out = nullptr;
};

Group substitute_group(const Group& g, const ResolveCtx& ctx) {
  // Pair group over a variable: (i,i') with i bound to "2" gives (2,2').
  if (g.members.size() == 2) {
    auto it = ctx.env.find(g.members[0]);
    if (it != ctx.env.end()) {
      if (it->second.members.size() != 1 || is_primed(it->second.members[0]))
        throw std::runtime_error("family value for paired slot must be unprimed: " +
                                 g.members[0]);
      std::string v = it->second.members[0];
      return Group{{v, v + "'"}};
    }
    return g;
  }
  auto it = ctx.env.find(g.members[0]);
  if (it != ctx.env.end()) return it->second;
  // primed variable: i' with i bound to 2 gives 2'.
  if (is_primed(g.members[0])) {
    auto it2 = ctx.env.find(base_of(g.members[0]));
    if (it2 != ctx.env.end()) {
      if (it2->second.members.size() != 1)
        throw std::runtime_error("cannot prime a pair value");
      return Group{{it2->second.members[0] + "'"}};
    }
  }
  return g;
}

std::vector<std::string> expand_skips(const Atom& a, const ResolveCtx& ctx) {
  std::vector<std::string> labels;
  const PunctureConfig& c = *ctx.config;
  for (const auto& s : a.skips) {
    // skips may also mention family variables
    auto subst = [&](const std::string& l) {
      Group g = substitute_group(Group{{l}}, ctx);
      if (g.members.size() != 1)
        throw std::runtime_error("skip label cannot be a pair");
      return g.members[0];
    };
    std::string from = subst(s.from);
    if (!s.is_range) {
      labels.push_back(from);
      continue;
    }
    std::string to = subst(s.to);
    int p = c.position(from), q = c.position(to);
    if (p > q) std::swap(p, q);
    for (int m = p; m <= q; ++m) labels.push_back(c.label(m));
  }
  return labels;
}

void emit_factor(ResolveCtx& ctx, const BandTwist& t, int exponent,
                 const std::vector<ArtinWord>& extra_conj, int serial,
                 const std::string& what) {
  Factor f;
  f.twist = t;
  f.exponent = exponent;
  f.conjugators = extra_conj;
  for (const auto& w : ctx.conj_stack) f.conjugators.push_back(w);
  f.origin_group = ctx.group_name.empty() ? std::string("main") : ctx.group_name;
  f.origin_detail = ctx.detail.empty() ? what : ctx.detail + "/" + what;
  f.composite_serial = serial;
  ctx.out->factors.push_back(std::move(f));
}

ArtinWord resolve_word(const ExprPtr& e, ResolveCtx& ctx);

std::string atom_text(const Atom& a, const ResolveCtx& ctx) {
  Atom b = a;
  for (auto& g : b.groups) g = substitute_group(g, ctx);
  auto e = std::make_shared<Expr>();
  e->kind = Expr::AtomK;
  e->atom = b;
  return serialize(e);
}

void resolve_atom_factor(const Atom& a0, ResolveCtx& ctx) {
  Atom a = a0;
  for (auto& g : a.groups) g = substitute_group(g, ctx);
  const PunctureConfig& c = *ctx.config;
  Side base = a.marker == Marker::Bar ? Side::Above : Side::Below;
  std::vector<std::string> opposite = expand_skips(a, ctx);
  std::string what = atom_text(a0, ctx);
  int r = a.exponent;

  if (a.groups.size() == 1) {
    const Group& g = a.groups[0];
    if (g.members.size() != 2)
      throw std::runtime_error("single-group atom needs a pair subscript: " + what);
    BandTwist t = make_band(c, g.members[0], g.members[1], opposite, base);
    emit_factor(ctx, t, r, {}, -1, what);
    return;
  }

  Group L = a.groups[0], R = a.groups[1];
  // order the two groups left to right by position
  auto leftmost = [&](const Group& g) {
    int m = c.count() + 1;
    for (auto& l : g.members) m = std::min(m, c.position(l));
    return m;
  };
  if (leftmost(L) > leftmost(R)) std::swap(L, R);

  if (r == 2 || r == -2 || (r == 1 || r == -1)) {
    auto atoms = pair_twist_expand(c, L.members, R.members, opposite, base);
    int serial = -1;
    if (atoms.size() > 1) serial = ctx.composite_counter++;
    if (r < 0) std::reverse(atoms.begin(), atoms.end());
    for (auto& t : atoms) emit_factor(ctx, t, r, {}, serial, what);
    return;
  }
  if (r == 3) {
    // Tangency: three cusps. Pair side doubles, the repeated band is
    // conjugated by the inverse pair half twist (pair left) or the pair
    // half twist (pair right); pinned by the worked cusp relations.
    int serial = ctx.composite_counter++;
    if (L.members.size() == 2 && R.members.size() == 1) {
      const std::string k = R.members[0];
      BandTwist t1 = make_band(c, L.members[1], k, opposite, base);
      BandTwist t2 = make_band(c, L.members[0], k, opposite, base);
      emit_factor(ctx, t1, 3, {}, serial, what);
      emit_factor(ctx, t2, 3, {}, serial, what);
      emit_factor(ctx, t2, 3, {rho_twist(c, L.members[0], -1, ctx.conv)}, serial, what);
    } else if (L.members.size() == 1 && R.members.size() == 2) {
      const std::string k = L.members[0];
      BandTwist t1 = make_band(c, k, R.members[0], opposite, base);
      BandTwist t2 = make_band(c, k, R.members[1], opposite, base);
      emit_factor(ctx, t1, 3, {}, serial, what);
      emit_factor(ctx, t2, 3, {}, serial, what);
      emit_factor(ctx, t2, 3, {rho_twist(c, R.members[0], 1, ctx.conv)}, serial, what);
    } else if (L.members.size() == 1 && R.members.size() == 1) {
      BandTwist t = make_band(c, L.members[0], R.members[0], opposite, base);
      emit_factor(ctx, t, 3, {}, -1, what);
    } else {
      throw std::runtime_error("tangency between two pairs is not defined: " + what);
    }
    return;
  }
  throw std::runtime_error("unsupported composite exponent " + std::to_string(r) +
                           " in " + what);
}

void resolve_into(const ExprPtr& e, ResolveCtx& ctx);

void resolve_ref(const std::string& name, ResolveCtx& ctx) {
  if (ctx.file && ctx.file->stubs.count(name)) {
    Factor f;
    f.is_stub = true;
    f.stub_degree = ctx.file->stubs.at(name);
    f.twist.config = *ctx.config;
    f.origin_group = ctx.group_name.empty() ? std::string("main") : ctx.group_name;
    f.origin_detail = ctx.detail.empty() ? name : ctx.detail + "/" + name;
    for (const auto& w : ctx.conj_stack) f.conjugators.push_back(w);
    ctx.out->factors.push_back(std::move(f));
    return;
  }
  if (!ctx.file || !ctx.file->by_name.count(name))
    throw std::runtime_error("unknown symbol '" + name +
                             "' (declare it with let/stub or bind it)");
  if (ctx.in_progress.count(name))
    throw std::runtime_error("cyclic reference through '" + name + "'");
  ctx.in_progress.insert(name);
  std::string saved_group = ctx.group_name;
  std::string saved_detail = ctx.detail;
  if (ctx.group_name.empty())
    ctx.group_name = name;
  else if (ctx.detail.empty())
    ctx.detail = name;
  else
    ctx.detail += "/" + name;
  resolve_into(ctx.file->by_name.at(name), ctx);
  ctx.group_name = saved_group;
  ctx.detail = saved_detail;
  ctx.in_progress.erase(name);
}

ArtinWord resolve_word(const ExprPtr& e, ResolveCtx& ctx) {
  const PunctureConfig& c = *ctx.config;
  switch (e->kind) {
    case Expr::AtomK: {
      Atom a = e->atom;
      for (auto& g : a.groups) g = substitute_group(g, ctx);
      Side base = a.marker == Marker::Bar ? Side::Above : Side::Below;
      std::vector<std::string> opposite = expand_skips(a, ctx);
      if (a.groups.size() == 1) {
        const Group& g = a.groups[0];
        if (g.members.size() != 2)
          throw std::runtime_error("single-group atom needs a pair subscript");
        int p = c.position(g.members[0]);
        int q = c.position(g.members[1]);
        if (p > q) std::swap(p, q);
        BandTwist t = make_band(c, c.label(p), c.label(q), opposite, base);
        return power(band_word(t, ctx.conv), a.exponent);
      }
      Group L = a.groups[0], R = a.groups[1];
      auto leftmost = [&](const Group& g) {
        int m = c.count() + 1;
        for (auto& l : g.members) m = std::min(m, c.position(l));
        return m;
      };
      if (leftmost(L) > leftmost(R)) std::swap(L, R);
      int lpos = leftmost(L), rpos = leftmost(R);
      std::vector<Side> flags;
      for (int m = lpos + (int)L.members.size(); m < rpos; ++m) {
        bool opp = false;
        for (auto& lab : opposite)
          if (c.position(lab) == m) opp = true;
        Side s = base;
        if (opp) s = base == Side::Below ? Side::Above : Side::Below;
        flags.push_back(s);
      }
      return fat_band_word(c, lpos, (int)L.members.size(), rpos,
                           (int)R.members.size(), flags, a.exponent, ctx.conv);
    }
    case Expr::RefK: {
      if (ctx.file && ctx.file->stubs.count(e->name))
        throw std::runtime_error("stub '" + e->name +
                                 "' cannot be used inside a conjugator");
      if (!ctx.file || !ctx.file->by_name.count(e->name))
        throw std::runtime_error("unknown symbol '" + e->name + "' in conjugator");
      return resolve_word(ctx.file->by_name.at(e->name), ctx);
    }
    case Expr::ProductK: {
      ArtinWord w(c.count());
      for (const auto& ch : e->children) w = multiply(w, resolve_word(ch, ctx));
      return w;
    }
    case Expr::ConjK: {
      ArtinWord base = resolve_word(e->children[0], ctx);
      ArtinWord conj(c.count());
      for (const auto& t : e->conj) conj = multiply(conj, resolve_word(t, ctx));
      return conjugate(base, conj);
    }
    case Expr::FamilyK: {
      ArtinWord w(c.count());
      for (const auto& v : e->values) {
        auto saved = ctx.env;
        ctx.env[e->var] = v;
        w = multiply(w, resolve_word(e->children[0], ctx));
        ctx.env = std::move(saved);
      }
      return w;
    }
  }
  throw std::logic_error("resolve_word: bad expr");
}

void resolve_into(const ExprPtr& e, ResolveCtx& ctx) {
  switch (e->kind) {
    case Expr::AtomK:
      resolve_atom_factor(e->atom, ctx);
      return;
    case Expr::RefK:
      resolve_ref(e->name, ctx);
      return;
    case Expr::ProductK:
      for (const auto& ch : e->children) resolve_into(ch, ctx);
      return;
    case Expr::ConjK: {
      std::vector<ArtinWord> words;
      for (const auto& t : e->conj) words.push_back(resolve_word(t, ctx));
      // inner factors first: prepend to the active stack
      std::vector<ArtinWord> saved = ctx.conj_stack;
      std::vector<ArtinWord> merged = words;
      for (auto& w : saved) merged.push_back(w);
      ctx.conj_stack = std::move(merged);
      resolve_into(e->children[0], ctx);
      ctx.conj_stack = std::move(saved);
      return;
    }
    case Expr::FamilyK: {
      for (const auto& v : e->values) {
        auto saved = ctx.env;
        ctx.env[e->var] = v;
        resolve_into(e->children[0], ctx);
        ctx.env = std::move(saved);
      }
      return;
    }
  }
}

}  // namespace

Factorization resolve(const File& file, const std::string& entry,
                      const PunctureConfig& config, SideConvention conv) {
  if (!file.by_name.count(entry))
    throw std::runtime_error("no such factorization: " + entry);
  Factorization out;
  out.config = config;
  ResolveCtx ctx;
  ctx.file = &file;
  ctx.config = &config;
  ctx.conv = conv;
  ctx.out = &out;
  resolve_into(file.by_name.at(entry), ctx);
  return out;
}

Factorization resolve_expr(const ExprPtr& e, const PunctureConfig& config,
                           SideConvention conv) {
  Factorization out;
  out.config = config;
  ResolveCtx ctx;
  ctx.config = &config;
  ctx.conv = conv;
  ctx.out = &out;
  resolve_into(e, ctx);
  return out;
}

}  // namespace dsl
}  // namespace mtk
