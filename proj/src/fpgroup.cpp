#include "mtk/fpgroup.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mtk {

std::vector<int> free_reduce(const std::vector<int>& w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (int l : w) {
    if (!r.empty() && r.back() == -l)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

std::vector<int> cyclic_reduce(const std::vector<int>& w) {
  std::vector<int> r = free_reduce(w);
  while (r.size() >= 2 && r.front() == -r.back()) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

namespace {

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

// Canonical representative of a relator up to rotation and inversion.
std::vector<int> relator_canon(const std::vector<int>& w) {
  if (w.empty()) return w;
  std::vector<int> best;
  auto consider = [&](std::vector<int> v) {
    for (size_t k = 0; k < v.size(); ++k) {
      std::rotate(v.begin(), v.begin() + 1, v.end());
      if (best.empty() || v < best) best = v;
    }
  };
  consider(w);
  consider(inverse_word(w));
  return best;
}

}  // namespace

FpPresentation normalized(const FpPresentation& p) {
  FpPresentation q;
  q.generators = p.generators;
  std::set<std::vector<int>> seen;
  for (const auto& r : p.relators) {
    std::vector<int> c = cyclic_reduce(r);
    if (c.empty()) continue;
    std::vector<int> canon = relator_canon(c);
    if (seen.insert(canon).second) q.relators.push_back(c);
  }
  return q;
}

FpPresentation tietze_simplify(const FpPresentation& p0, int effort) {
  FpPresentation p = normalized(p0);
  for (int pass = 0; pass < effort; ++pass) {
    // Find a relator featuring some generator exactly once.
    size_t best_rel = p.relators.size();
    int best_gen = 0;
    for (size_t ri = 0; ri < p.relators.size(); ++ri) {
      const auto& r = p.relators[ri];
      std::map<int, int> occ;
      for (int l : r) occ[std::abs(l)] += 1;
      for (auto [g, k] : occ) {
        if (k != 1) continue;
        if (best_rel == p.relators.size() ||
            r.size() < p.relators[best_rel].size() ||
            (r.size() == p.relators[best_rel].size() && g < best_gen)) {
          best_rel = ri;
          best_gen = g;
        }
      }
    }
    if (best_rel == p.relators.size()) break;
    // Solve the relator for the generator: g = word over the others.
    std::vector<int> r = p.relators[best_rel];
    size_t at = 0;
    while (std::abs(r[at]) != best_gen) ++at;
    std::rotate(r.begin(), r.begin() + at, r.end());  // now r[0] = +-g
    std::vector<int> rest(r.begin() + 1, r.end());
    // r = g^e * rest = 1  =>  g^e = rest^-1.
    std::vector<int> value =
        r[0] > 0 ? inverse_word(rest) : rest;  // g = value
    // Substitute and drop the generator (reindex above it).
    FpPresentation q;
    for (size_t gi = 0; gi < p.generators.size(); ++gi)
      if ((int)gi + 1 != best_gen) q.generators.push_back(p.generators[gi]);
    auto map_letter = [&](int l) {
      int g = std::abs(l);
      return (g > best_gen ? (l > 0 ? g - 1 : -(g - 1)) : l);
    };
    for (size_t ri = 0; ri < p.relators.size(); ++ri) {
      if (ri == best_rel) continue;
      std::vector<int> out;
      for (int l : p.relators[ri]) {
        if (std::abs(l) == best_gen) {
          const std::vector<int>& v = l > 0 ? value : inverse_word(value);
          for (int x : v) out.push_back(map_letter(x));
        } else {
          out.push_back(map_letter(l));
        }
      }
      q.relators.push_back(out);
    }
    p = normalized(q);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;
  size_t top = 0, left = 0;
  while (top < rows && left < cols) {
    // Least absolute nonzero pivot in the remaining block.
    size_t pr = rows, pc = cols;
    BigInt best = 0;
    for (size_t i = top; i < rows; ++i)
      for (size_t j = left; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        BigInt a = abs(m[i][j]);
        if (pr == rows || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr == rows) break;  // all zero
    std::swap(m[top], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][left], m[i][pc]);
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = top + 1; i < rows; ++i) {
        if (m[i][left] == 0) continue;
        BigInt q = m[i][left] / m[top][left];
        if (q != 0)
          for (size_t j = left; j < cols; ++j) m[i][j] -= q * m[top][j];
        if (m[i][left] != 0) {
          std::swap(m[top], m[i]);
          again = true;
        }
      }
      for (size_t j = left + 1; j < cols; ++j) {
        if (m[top][j] == 0) continue;
        BigInt q = m[top][j] / m[top][left];
        if (q != 0)
          for (size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][left];
        if (m[top][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][left], m[i][j]);
          again = true;
        }
      }
    }
    diag.push_back(abs(m[top][left]));
    ++top;
    ++left;
  }
  // Divisibility chain.
  bool fixed = true;
  while (fixed) {
    fixed = false;
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      if (diag[i] == 0 || diag[i + 1] % diag[i] == 0) {
        if (diag[i] == 0 && diag[i + 1] != 0) {
          std::swap(diag[i], diag[i + 1]);
          fixed = true;
        }
        continue;
      }
      BigInt g = gcd(diag[i], diag[i + 1]);
      BigInt l = diag[i] / g * diag[i + 1];
      diag[i] = g;
      diag[i + 1] = l;
      fixed = true;
    }
  }
  return diag;
}

Abelianization abelianize(const FpPresentation& p) {
  size_t g = p.generators.size();
  std::vector<std::vector<BigInt>> m;
  for (const auto& r : p.relators) {
    std::vector<BigInt> row(g, 0);
    for (int l : r) row[std::abs(l) - 1] += (l > 0 ? 1 : -1);
    m.push_back(std::move(row));
  }
  Abelianization a;
  if (m.empty()) {
    a.free_rank = static_cast<long long>(g);
    return a;
  }
  std::vector<BigInt> diag = smith_diagonal(std::move(m));
  size_t nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) a.torsion.push_back(d);
  }
  a.free_rank = static_cast<long long>(g - nonzero);
  return a;
}

// ---------------------------------------------------------------------------
// Homomorphism validation

HomCheck check_homomorphism(const FpPresentation& p,
                            const std::vector<Perm>& images,
                            bool require_transpositions) {
  HomCheck out;
  if (images.size() != p.generators.size())
    throw std::invalid_argument("check_homomorphism: one image per generator required");
  int degree = images.empty() ? 0 : images[0].size();
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i].size() != degree)
      throw std::invalid_argument("check_homomorphism: mixed permutation degrees");
    if (require_transpositions) {
      int moved = 0;
      for (int k = 0; k < degree; ++k)
        if (images[i][k] != k) ++moved;
      bool swap2 = moved == 2;
      if (swap2) {
        int a = -1;
        for (int k = 0; k < degree; ++k)
          if (images[i][k] != k) { a = k; break; }
        swap2 = images[i][images[i][a]] == a;
      }
      if (!swap2) {
        out.ok = false;
        out.violations.push_back("image of " + p.generators[i] +
                                 " is not a transposition");
      }
    }
  }
  for (size_t ri = 0; ri < p.relators.size(); ++ri) {
    Perm acc = Perm::identity(degree);
    for (int l : p.relators[ri]) {
      const Perm& im = images[std::abs(l) - 1];
      acc = acc.then(l > 0 ? im : im.inverse());
    }
    if (!acc.is_identity()) {
      out.ok = false;
      std::ostringstream os;
      os << "relator " << ri + 1 << " maps to " << acc.cycle_string();
      out.violations.push_back(os.str());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter (HLT with lookahead)

namespace {

constexpr long long kUndef = -1;

struct Enumerator {
  int g;                                   // generator count
  std::vector<std::vector<long long>> tab; // [coset][2g]
  std::vector<long long> rep;              // union-find for coincidences
  std::deque<std::pair<long long, long long>> merges;
  long long live = 0, max_live = 0;
  long long bound;

  explicit Enumerator(int gens, long long bound_)
      : g(gens), bound(bound_) {
    new_coset();
  }

  static int col(int letter) {
    int a = std::abs(letter) - 1;
    return 2 * a + (letter > 0 ? 0 : 1);
  }
  static int invcol(int letter) { return col(-letter); }

  long long find(long long c) {
    while (rep[c] != c) {
      rep[c] = rep[rep[c]];
      c = rep[c];
    }
    return c;
  }

  long long new_coset() {
    tab.emplace_back(2 * g, kUndef);
    rep.push_back(static_cast<long long>(tab.size()) - 1);
    ++live;
    max_live = std::max(max_live, live);
    return static_cast<long long>(tab.size()) - 1;
  }

  void set_entry(long long c, int letter, long long d) {
    long long& fwd = tab[c][col(letter)];
    if (fwd == kUndef)
      fwd = d;
    else if (find(fwd) != find(d))
      merges.push_back({fwd, d});
    long long& back = tab[d][invcol(letter)];
    if (back == kUndef)
      back = c;
    else if (find(back) != find(c))
      merges.push_back({back, c});
  }

  void process_merges() {
    while (!merges.empty()) {
      auto [a, b] = merges.front();
      merges.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      rep[b] = a;
      --live;
      for (int k = 0; k < 2 * g; ++k) {
        long long t = tab[b][k];
        if (t == kUndef) continue;
        long long& slot = tab[a][k];
        if (slot == kUndef)
          slot = t;
        else if (find(slot) != find(t))
          merges.push_back({slot, t});
      }
    }
  }

  // Scan relator r at coset c; fill gaps by defining cosets when allowed.
  // Returns false if a definition was needed but the bound is hit.
  bool scan(const std::vector<int>& r, long long c, bool fill) {
    c = find(c);
    long long f = c;
    size_t fi = 0;
    while (fi < r.size()) {
      long long t = tab[f][col(r[fi])];
      if (t == kUndef) break;
      f = find(t);
      ++fi;
    }
    if (fi == r.size()) {
      if (f != c) merges.push_back({f, c});
      process_merges();
      return true;
    }
    long long b = c;
    size_t bi = r.size();
    while (bi > fi) {
      long long t = tab[b][invcol(r[bi - 1])];
      if (t == kUndef) break;
      b = find(t);
      --bi;
    }
    if (bi == fi) {  // both scans reached the same position: coincidence
      if (find(f) != find(b)) merges.push_back({f, b});
      process_merges();
      return true;
    }
    if (bi == fi + 1) {  // one gap: deduction
      set_entry(f, r[fi], b);
      process_merges();
      return true;
    }
    if (!fill) return true;
    // Define cosets to close the gap, honoring the bound.
    while (bi > fi + 1) {
      if (live >= bound) return false;
      long long n = new_coset();
      set_entry(f, r[fi], n);
      process_merges();
      f = find(f);
      long long t = tab[f][col(r[fi])];
      if (t == kUndef) return true;  // collapsed under us; retry later
      f = find(t);
      ++fi;
    }
    set_entry(f, r[fi], find(b));
    process_merges();
    return true;
  }

  bool lookahead(const std::vector<std::vector<int>>& rels) {
    long long before = live;
    for (long long c = 0; c < (long long)tab.size(); ++c) {
      if (find(c) != c) continue;
      for (const auto& r : rels) scan(r, c, false);
    }
    return live < before;
  }
};

}  // namespace

TCResult todd_coxeter(const FpPresentation& p,
                      const std::vector<std::vector<int>>& subgroup_gens,
                      long long bound) {
  if (bound < 1) throw std::invalid_argument("todd_coxeter: bound must be >= 1");
  FpPresentation q = normalized(p);
  Enumerator en(static_cast<int>(q.generators.size()), bound);
  TCResult res;

  for (const auto& w : subgroup_gens) {
    std::vector<int> r = free_reduce(w);
    if (!en.scan(r, 0, true)) {
      res.max_live = en.max_live;
      return res;
    }
  }
  for (long long c = 0; c < (long long)en.tab.size(); ++c) {
    if (en.find(c) != c) continue;
    for (const auto& r : q.relators) {
      if (!en.scan(r, c, true)) {
        if (en.lookahead(q.relators)) {
          if (!en.scan(r, c, true)) {
            res.max_live = en.max_live;
            return res;
          }
        } else {
          res.max_live = en.max_live;
          return res;
        }
      }
      if (en.find(c) != c) break;  // merged away; restart row later
    }
    if (en.find(c) != c) continue;
    // Fill any undefined entries of this row (HLT row filling).
    for (int k = 0; k < 2 * en.g; ++k) {
      long long cc = en.find(c);
      if (en.tab[cc][k] != kUndef) continue;
      if (en.live >= bound) {
        if (!en.lookahead(q.relators)) {
          res.max_live = en.max_live;
          return res;
        }
        cc = en.find(c);
        if (en.tab[cc][k] != kUndef) continue;
        if (en.live >= bound) {
          res.max_live = en.max_live;
          return res;
        }
      }
      long long n = en.new_coset();
      int letter = (k % 2 == 0) ? (k / 2 + 1) : -(k / 2 + 1);
      en.set_entry(cc, letter, n);
      en.process_merges();
    }
  }

  // Verify every relator closes at every live coset (paranoia pass).
  for (long long c = 0; c < (long long)en.tab.size(); ++c) {
    if (en.find(c) != c) continue;
    for (const auto& r : q.relators) en.scan(r, c, true);
  }
  en.process_merges();

  // Compact and standardize: BFS from coset 0 in column order.
  std::vector<long long> live_list;
  for (long long c = 0; c < (long long)en.tab.size(); ++c)
    if (en.find(c) == c) live_list.push_back(c);
  std::map<long long, long long> order;
  std::deque<long long> bfs{en.find(0)};
  order[en.find(0)] = 0;
  while (!bfs.empty()) {
    long long c = bfs.front();
    bfs.pop_front();
    for (int k = 0; k < 2 * en.g; ++k) {
      long long t = en.tab[c][k];
      if (t == kUndef) {
        res.max_live = en.max_live;
        return res;  // incomplete: treat as overflow
      }
      t = en.find(t);
      if (!order.count(t)) {
        order[t] = static_cast<long long>(order.size());
        bfs.push_back(t);
      }
    }
  }
  if (order.size() != live_list.size()) {
    res.max_live = en.max_live;
    return res;
  }
  CosetTable tab;
  tab.generator_count = en.g;
  tab.row.assign(order.size(), std::vector<long long>(2 * en.g, kUndef));
  for (auto [c, idx] : order)
    for (int k = 0; k < 2 * en.g; ++k)
      tab.row[idx][k] = order.at(en.find(en.tab[c][k]));
  res.completed = true;
  res.max_live = en.max_live;
  res.table = std::move(tab);
  return res;
}

Perm CosetTable::action(int gen_1based) const {
  std::vector<int> img(row.size());
  for (size_t c = 0; c < row.size(); ++c)
    img[c] = static_cast<int>(row[c][2 * (gen_1based - 1)]);
  return Perm(std::move(img));
}

std::string CosetTable::records() const {
  std::ostringstream os;
  for (size_t c = 0; c < row.size(); ++c) {
    os << "coset " << c + 1;
    for (int gidx = 0; gidx < generator_count; ++gidx)
      os << ' ' << row[c][2 * gidx] + 1;
    os << '\n';
  }
  return os.str();
}

CosetTable coset_table_from_action(const std::vector<Perm>& images) {
  if (images.empty())
    throw std::invalid_argument("coset_table_from_action: no generators");
  int degree = images[0].size();
  for (const auto& p : images)
    if (p.size() != degree)
      throw std::invalid_argument("coset_table_from_action: mixed degrees");
  std::map<Perm, long long> index;
  std::vector<Perm> elems;
  std::deque<Perm> bfs;
  Perm id = Perm::identity(degree);
  index[id] = 0;
  elems.push_back(id);
  bfs.push_back(id);
  while (!bfs.empty()) {
    Perm e = bfs.front();
    bfs.pop_front();
    for (const auto& g : images) {
      Perm f = e.then(g);
      if (!index.count(f)) {
        index[f] = static_cast<long long>(elems.size());
        elems.push_back(f);
        bfs.push_back(f);
      }
    }
  }
  CosetTable t;
  t.generator_count = static_cast<int>(images.size());
  t.row.assign(elems.size(), std::vector<long long>(2 * images.size(), 0));
  for (size_t c = 0; c < elems.size(); ++c) {
    for (size_t gi = 0; gi < images.size(); ++gi) {
      t.row[c][2 * gi] = index.at(elems[c].then(images[gi]));
      t.row[c][2 * gi + 1] = index.at(elems[c].then(images[gi].inverse()));
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Reidemeister-Schreier

FpPresentation reidemeister_schreier(const FpPresentation& p,
                                     const CosetTable& table) {
  int g = table.generator_count;
  if (g != (int)p.generators.size())
    throw std::invalid_argument("reidemeister_schreier: table/presentation mismatch");
  long long n = table.index();
  for (const auto& r : table.row)
    for (long long v : r)
      if (v < 0) throw std::invalid_argument("reidemeister_schreier: incomplete table");

  // Schreier tree by BFS from coset 0, scanning positive then inverse columns.
  std::vector<std::pair<long long, int>> parent(n, {-1, 0});  // (coset, letter)
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  std::deque<long long> bfs{0};
  while (!bfs.empty()) {
    long long c = bfs.front();
    bfs.pop_front();
    for (int k = 0; k < 2 * g; ++k) {
      long long t = table.row[c][k];
      if (seen[t]) continue;
      seen[t] = 1;
      parent[t] = {c, (k % 2 == 0) ? k / 2 + 1 : -(k / 2 + 1)};
      bfs.push_back(t);
    }
  }
  // tree edge marker: edge (c, +a) is a tree edge if it defines c*a or if
  // (c*a, a^-1) defines c.
  auto is_tree = [&](long long c, int a) {
    long long t = table.row[c][2 * (a - 1)];
    if (parent[t].first == c && parent[t].second == a) return true;
    if (parent[c].first == t && parent[c].second == -a) return true;
    return false;
  };
  // Schreier generator numbering for non-tree (coset, positive gen) pairs.
  std::map<std::pair<long long, int>, int> sgen;
  std::vector<std::string> names;
  for (long long c = 0; c < n; ++c)
    for (int a = 1; a <= g; ++a)
      if (!is_tree(c, a)) {
        int id = static_cast<int>(sgen.size()) + 1;
        sgen[{c, a}] = id;
        std::ostringstream nm;
        nm << "x" << id;
        names.push_back(nm.str());
      }
  FpPresentation out;
  out.generators = names;
  // Rewrite each relator at each coset.
  for (long long c = 0; c < n; ++c) {
    for (const auto& r : p.relators) {
      std::vector<int> word;
      long long cur = c;
      for (int l : r) {
        if (l > 0) {
          if (!is_tree(cur, l)) word.push_back(sgen.at({cur, l}));
          cur = table.row[cur][2 * (l - 1)];
        } else {
          long long prev = table.row[cur][2 * (-l - 1) + 1];
          if (!is_tree(prev, -l)) word.push_back(-sgen.at({prev, -l}));
          cur = prev;
        }
      }
      if (cur != c)
        throw std::logic_error("reidemeister_schreier: relator does not close");
      word = cyclic_reduce(word);
      if (!word.empty()) out.relators.push_back(std::move(word));
    }
  }
  return normalized(out);
}

// ---------------------------------------------------------------------------
// Text I/O

FpPresentation parse_presentation(const std::string& text) {
  FpPresentation p;
  std::map<std::string, int> index;
  std::istringstream is(text);
  std::string line;
  auto word_of = [&](const std::string& s) {
    std::vector<int> w;
    std::istringstream ws(s);
    std::string tok;
    while (ws >> tok) {
      if (tok == "()") continue;
      if (tok == "1" && !index.count("1")) continue;  // legacy empty marker
      int sign = 1;
      std::string label = tok;
      auto caret = tok.find('^');
      if (caret != std::string::npos) {
        label = tok.substr(0, caret);
        int e = std::stoi(tok.substr(caret + 1));
        if (e == -1)
          sign = -1;
        else if (e != 1)
          throw std::runtime_error("presentation words use ^-1 only");
      }
      auto it = index.find(label);
      if (it == index.end())
        throw std::runtime_error("undeclared generator '" + label + "'");
      w.push_back(sign * it->second);
    }
    return w;
  };
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "gen:") {
      std::string name;
      while (ls >> name) {
        if (index.count(name)) throw std::runtime_error("duplicate generator " + name);
        index[name] = static_cast<int>(p.generators.size()) + 1;
        p.generators.push_back(name);
      }
    } else if (kw == "rel:") {
      std::string rest;
      std::getline(ls, rest);
      auto eq = rest.find('=');
      std::vector<int> w;
      if (eq == std::string::npos) {
        w = word_of(rest);
      } else {
        std::vector<int> lhs = word_of(rest.substr(0, eq));
        std::vector<int> rhs = word_of(rest.substr(eq + 1));
        w = lhs;
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) w.push_back(-*it);
      }
      p.relators.push_back(free_reduce(w));
    } else {
      throw std::runtime_error("presentation lines start with gen: or rel:");
    }
  }
  return p;
}

std::string presentation_to_text(const FpPresentation& p) {
  std::ostringstream os;
  os << "gen:";
  for (const auto& g : p.generators) os << ' ' << g;
  os << '\n';
  for (const auto& r : p.relators) {
    os << "rel:";
    if (r.empty()) os << " ()";
    for (int l : r) {
      os << ' ' << p.generators[std::abs(l) - 1];
      if (l < 0) os << "^-1";
    }
    os << '\n';
  }
  return os.str();
}

FpPresentation from_gpresentation(const GPresentation& g, CuspForm form) {
  FpPresentation p;
  for (int pos = 1; pos <= g.config.count(); ++pos)
    p.generators.push_back(g.config.label(pos));
  auto word_of = [&](const GWord& w) {
    std::vector<int> out;
    for (const auto& l : w.letters) out.push_back(l.sign * l.pos);
    return out;
  };
  auto push = [&](std::vector<int> w) { p.relators.push_back(free_reduce(w)); };
  for (const auto& r : g.relations) {
    std::vector<int> a = word_of(r.lhs);
    std::vector<int> b = word_of(r.rhs);
    auto cat = [](std::vector<int> x, const std::vector<int>& y) {
      x.insert(x.end(), y.begin(), y.end());
      return x;
    };
    std::vector<int> ai = inverse_word(a), bi = inverse_word(b);
    switch (r.kind) {
      case RelKind::Branch:
      case RelKind::Square:
      case RelKind::Custom:
        push(cat(a, bi));
        break;
      case RelKind::Node:
        push(cat(cat(cat(ai, bi), a), b));
        break;
      case RelKind::Cusp:
        if (form == CuspForm::Braid) {
          // aba (bab)^-1
          push(cat(cat(cat(cat(cat(a, b), a), bi), ai), bi));
        } else {
          push(cat(cat(cat(cat(cat(a, b), a), b), a), b));
        }
        break;
    }
  }
  return p;
}

}  // namespace mtk
