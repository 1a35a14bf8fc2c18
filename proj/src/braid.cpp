#include "mtk/braid.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace mtk {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw std::invalid_argument("Perm: not a permutation");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return Perm(std::move(v));
}

Perm Perm::delta(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i, int j) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k;
  std::swap(v[i], v[j]);
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::then(const Perm& other) const {
  assert(size() == other.size());
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[i] = other.img_[img_[i]];
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i]] = i;
  Perm p;
  p.img_ = std::move(v);
  return p;
}

std::string Perm::cycle_string(int base) const {
  std::vector<char> seen(img_.size(), 0);
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) os << ' ';
      os << j + base;
      seen[j] = 1;
      first = false;
      j = img_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

// ---------------------------------------------------------------------------
// Words

ArtinWord::ArtinWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
  for (int l : letters) {
    int i = l > 0 ? l : -l;
    if (i < 1 || i > strands - 1)
      throw std::invalid_argument("ArtinWord: generator index out of range");
  }
}

ArtinWord ArtinWord::reduced() const {
  ArtinWord r(strands);
  r.letters.reserve(letters.size());
  for (int l : letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

ArtinWord multiply(const ArtinWord& a, const ArtinWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("multiply: mismatched strand count");
  ArtinWord r(a.strands);
  r.letters = a.letters;
  for (int l : b.letters) {
    if (!r.letters.empty() && r.letters.back() == -l)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

ArtinWord inverse(const ArtinWord& a) {
  ArtinWord r(a.strands);
  r.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

ArtinWord power(const ArtinWord& a, int k) {
  ArtinWord r(a.strands);
  const ArtinWord base = k >= 0 ? a : inverse(a);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = multiply(r, base);
  return r;
}

ArtinWord conjugate(const ArtinWord& a, const ArtinWord& c) {
  if (a.strands != c.strands)
    throw std::invalid_argument("conjugate: mismatched strand count");
  return multiply(multiply(inverse(c), a), c);
}

long long degree(const ArtinWord& a) {
  long long d = 0;
  for (int l : a.letters) d += l > 0 ? 1 : -1;
  return d;
}

ArtinWord full_twist(int n) {
  if (n < 2) throw std::invalid_argument("full_twist: need n >= 2");
  ArtinWord w(n);
  w.letters.reserve(static_cast<size_t>(n) * (n - 1));
  for (int rep = 0; rep < n; ++rep)
    for (int i = 1; i <= n - 1; ++i) w.letters.push_back(i);
  return w;
}

Perm induced_permutation(const ArtinWord& a) {
  std::vector<int> img(a.strands);
  for (int i = 0; i < a.strands; ++i) img[i] = i;
  // Track positions: crossing at i swaps the strands currently at i-1, i.
  std::vector<int> at(a.strands);  // at[pos] = strand occupying pos
  for (int i = 0; i < a.strands; ++i) at[i] = i;
  for (int l : a.letters) {
    int i = (l > 0 ? l : -l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  for (int pos = 0; pos < a.strands; ++pos) img[at[pos]] = pos;
  return Perm(std::move(img));
}

// ---------------------------------------------------------------------------
// Garside machinery

namespace garside {

namespace {

// Inversion matrix: row i holds bits j>i with (i,j) inverted (p[i] > p[j]).
struct InvSet {
  int n;
  std::vector<std::vector<uint64_t>> rows;
  explicit InvSet(int n_) : n(n_), rows(n_, std::vector<uint64_t>((n_ + 63) / 64, 0)) {}
  void set(int i, int j) { rows[i][j >> 6] |= (uint64_t(1) << (j & 63)); }
  bool get(int i, int j) const {
    return (rows[i][j >> 6] >> (j & 63)) & 1;
  }
  void or_in(int i, const std::vector<uint64_t>& other) {
    for (size_t w = 0; w < rows[i].size(); ++w) rows[i][w] |= other[w];
  }
};

InvSet inversions(const Perm& p) {
  InvSet s(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s.set(i, j);
  return s;
}

// Build the permutation whose inversion set is s (s must be transitively
// closed; the result is validated).
Perm perm_from_inversions(const InvSet& s) {
  int n = s.n;
  std::vector<int> img(n, 0);
  for (int i = 0; i < n; ++i) {
    int rank = 0;
    for (int j = 0; j < i; ++j)
      if (!s.get(j, i)) ++rank;  // j finishes before i
    for (int j = i + 1; j < n; ++j)
      if (s.get(i, j)) ++rank;  // j forced before i
    img[i] = rank;
  }
  return Perm(std::move(img));  // throws if s was not an inversion set
}

}  // namespace

// Join in the left weak order: the inversion set is the transitive closure
// of Inv(u) | Inv(v).
Perm left_join(const Perm& u, const Perm& v) {
  int n = u.size();
  InvSet su = inversions(u);
  InvSet sv = inversions(v);
  for (int i = 0; i < n; ++i) su.or_in(i, sv.rows[i]);
  // Closure: (i,j),(j,k) => (i,k). Process i descending so rows[j] (j>i)
  // are already closed.
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j)
      if (su.get(i, j)) su.or_in(i, su.rows[j]);
  }
  return perm_from_inversions(su);
}

Perm left_meet(const Perm& u, const Perm& v) {
  // x <=_L a  iff  a^-1 Delta <=_R x^-1 Delta, and right order on simples is
  // the left order on inverses; so the meet is computed from the join of the
  // inverted complements.
  int n = u.size();
  Perm d = Perm::delta(n);
  Perm cu = u.inverse().then(d);  // u * cu = Delta
  Perm cv = v.inverse().then(d);
  Perm j = left_join(cu.inverse(), cv.inverse()).inverse();
  // meet * j = Delta
  return d.then(j.inverse());
}

bool left_weighted(const Perm& a, const Perm& b) {
  // Starting set of b must be contained in the finishing set of a:
  // whenever sigma_i <=_L b (b[i] > b[i+1]) we need a >=_R sigma_i
  // (a^-1[i] > a^-1[i+1]).
  Perm ai = a.inverse();
  for (int i = 0; i + 1 < a.size(); ++i)
    if (b[i] > b[i + 1] && ai[i] < ai[i + 1]) return false;
  return true;
}

std::vector<int> simple_word(const Perm& p) {
  std::vector<int> word;
  Perm q = p;
  int n = q.size();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (q[i] > q[i + 1]) {
        word.push_back(i + 1);
        q = Perm::transposition(n, i, i + 1).then(q);
        progress = true;
        break;
      }
    }
  }
  assert(q.is_identity());
  return word;
}

}  // namespace garside

namespace {

// Left-weighted maintenance over a deque of simple factors. The word is
// consumed from its last letter to its first, so new material enters at the
// FRONT and Delta powers accumulate there without twisting the whole list.
struct FactorList {
  int n;
  Perm delta;
  long long delta_power = 0;
  std::deque<Perm> fs;

  explicit FactorList(int n_) : n(n_), delta(Perm::delta(n_)) {}

  Perm tau_pow(const Perm& p, long long q) const {
    // Delta^-q p Delta^q; tau is an involution.
    if ((q & 1) == 0) return p;
    return delta.then(p).then(delta);
  }

  // Repair pair (i, i+1) into left-weighted form; returns true if changed.
  bool repair(size_t i) {
    Perm& a = fs[i];
    Perm& b = fs[i + 1];
    if (garside::left_weighted(a, b)) return false;  // cheap common case
    Perm comp = a.inverse().then(delta);  // a * comp = Delta
    Perm x = garside::left_meet(comp, b);
    if (x.is_identity()) return false;
    a = a.then(x);
    b = x.inverse().then(b);
    return true;
  }

  // Prepend a simple factor and cascade rightwards while pairs change.
  // Shrinking the right factor of a repaired pair can re-expose its left
  // neighbour, so the cascade walks both ways via a small work queue.
  void push_front_simple(const Perm& s) {
    if (s.is_identity()) return;
    if (s == delta) {
      delta_power += 1;
      // Delta commutes up to tau with everything already in the list.
      for (auto& f : fs) f = delta.then(f).then(delta);
      return;
    }
    fs.push_front(s);
    std::deque<size_t> dirty{0};
    while (!dirty.empty()) {
      size_t i = dirty.front();
      dirty.pop_front();
      if (i + 1 >= fs.size()) continue;
      if (!repair(i)) continue;
      if (fs[i + 1].is_identity()) {
        fs.erase(fs.begin() + static_cast<long>(i) + 1);
      } else {
        dirty.push_back(i + 1);
      }
      if (fs[i].is_identity()) {
        // only possible transiently for the freshly inserted factor
        fs.erase(fs.begin() + static_cast<long>(i));
        if (i > 0) dirty.push_back(i - 1);
      } else if (fs[i] == delta) {
        fs.erase(fs.begin() + static_cast<long>(i));
        delta_power += 1;
        for (size_t k = 0; k < i; ++k) fs[k] = delta.then(fs[k]).then(delta);
        if (i > 0) dirty.push_back(i - 1);
      } else if (i > 0) {
        dirty.push_back(i - 1);
      }
    }
  }

  void finish() {
    // Global sweeps until stable; guarantees left-weightedness even if the
    // local cascades missed a distant pair.
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = 0; i + 1 < fs.size();) {
        if (repair(i)) {
          changed = true;
          if (fs[i + 1].is_identity())
            fs.erase(fs.begin() + static_cast<long>(i) + 1);
        } else {
          ++i;
        }
      }
    }
    while (!fs.empty() && fs.front() == delta) {
      fs.pop_front();
      delta_power += 1;
    }
    while (!fs.empty() && fs.front().is_identity()) fs.pop_front();
  }
};

}  // namespace

NormalForm normal_form(const ArtinWord& a) {
  if (a.strands < 1) throw std::invalid_argument("normal_form: empty braid group");
  FactorList fl(a.strands);
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
    int l = *it;
    int i = (l > 0 ? l : -l) - 1;
    Perm t = Perm::transposition(a.strands, i, i + 1);
    if (l > 0) {
      // sigma * Delta^q * T = Delta^q * tau^q(sigma) * T
      fl.push_front_simple(fl.tau_pow(t, fl.delta_power));
    } else {
      // sigma^-1 * Delta^q * T = Delta^(q-1) * tau^q(Delta sigma^-1) * T
      Perm c = fl.delta.then(t);
      c = fl.tau_pow(c, fl.delta_power);
      fl.delta_power -= 1;
      fl.push_front_simple(c);
    }
  }
  fl.finish();
  NormalForm nf;
  nf.strands = a.strands;
  nf.delta_power = fl.delta_power;
  nf.factors.assign(fl.fs.begin(), fl.fs.end());
  return nf;
}

ArtinWord to_word(const NormalForm& nf) {
  ArtinWord w(nf.strands);
  std::vector<int> dword = garside::simple_word(Perm::delta(nf.strands));
  long long p = nf.delta_power;
  if (p >= 0) {
    for (long long k = 0; k < p; ++k)
      w.letters.insert(w.letters.end(), dword.begin(), dword.end());
  } else {
    for (long long k = 0; k < -p; ++k)
      for (auto it = dword.rbegin(); it != dword.rend(); ++it)
        w.letters.push_back(-*it);
  }
  for (const Perm& f : nf.factors) {
    std::vector<int> fw = garside::simple_word(f);
    w.letters.insert(w.letters.end(), fw.begin(), fw.end());
  }
  return w;
}

bool equals(const ArtinWord& a, const ArtinWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("equals: mismatched strand count");
  return normal_form(a) == normal_form(b);
}

// ---------------------------------------------------------------------------
// Dynnikov coordinates
//
// Coordinates (a_i, b_i), i = 1..N-2, of an integral lamination on the
// N-punctured disk, with the update rules of Dynnikov's action. The braid is
// embedded into B_{N} with N = n+3: a padding puncture on each side and an
// anchor puncture next to the right padding. The anchor keeps the action of
// the center nontrivial (arcs to the boundary become loops around the
// anchor). The base multiloop a = 0, b = -1 is the standard curve diagram.

namespace {

using Coord = cpp_int;

struct Lamination {
  // 1-based arrays of size N-2.
  std::vector<Coord> a, b;
};

Coord pos(const Coord& x) { return x > 0 ? x : Coord(0); }
Coord neg(const Coord& x) { return x < 0 ? x : Coord(0); }

// Act by sigma_j (1-based, interior: 2 <= j <= N-2) or its inverse.
void apply_sigma(Lamination& L, int j, bool inv) {
  // Touches (a_{j-1}, b_{j-1}, a_j, b_j).
  Coord& a1 = L.a[j - 1];
  Coord& b1 = L.b[j - 1];
  Coord& a2 = L.a[j];
  Coord& b2 = L.b[j];
  Coord na1, nb1, na2, nb2;
  if (!inv) {
    Coord z = a1 - a2 + pos(b2) - neg(b1);
    na1 = a1 + pos(b1) + pos(pos(b2) - z);
    nb1 = b2 - pos(z);
    na2 = a2 + neg(b2) + neg(neg(b1) + z);
    nb2 = b1 + pos(z);
  } else {
    Coord z = a1 - a2 - pos(b2) + neg(b1);
    na1 = a1 - pos(b1) - pos(pos(b2) + z);
    nb1 = b2 + neg(z);
    na2 = a2 - neg(b2) - neg(neg(b1) - z);
    nb2 = b1 - neg(z);
  }
  a1 = na1;
  b1 = nb1;
  a2 = na2;
  b2 = nb2;
}

Lamination act(const ArtinWord& w) {
  int N = w.strands + 3;
  Lamination L;
  L.a.assign(N - 1, Coord(0));  // index 1..N-2 used
  L.b.assign(N - 1, Coord(0));
  for (int i = 1; i <= N - 2; ++i) {
    L.a[i] = 0;
    L.b[i] = -1;
  }
  for (int l : w.letters) {
    int i = l > 0 ? l : -l;
    apply_sigma(L, i + 1, l < 0);  // shift by the left padding strand
  }
  return L;
}

}  // namespace

bool dynnikov_equal(const ArtinWord& a, const ArtinWord& b) {
  if (a.strands != b.strands)
    throw std::invalid_argument("dynnikov_equal: mismatched strand count");
  Lamination la = act(a);
  Lamination lb = act(b);
  return la.a == lb.a && la.b == lb.b;
}

std::vector<std::string> dynnikov_coordinates(const ArtinWord& a) {
  Lamination l = act(a);
  std::vector<std::string> out;
  for (size_t i = 1; i < l.a.size(); ++i) {
    out.push_back(l.a[i].str());
    out.push_back(l.b[i].str());
  }
  return out;
}

}  // namespace mtk
