#include "mtk/factorization.hpp"

#include <algorithm>
#include <sstream>

namespace mtk {

ArtinWord conjugator_word(const Factor& f, int strands) {
  ArtinWord c(strands);
  for (const auto& w : f.conjugators) c = multiply(c, w);
  return c;
}

ArtinWord factor_word(const Factor& f, SideConvention conv) {
  if (f.is_stub)
    throw std::invalid_argument("factor_word: stub factor has no braid (" +
                                f.origin_detail + ")");
  ArtinWord base = power(band_word(f.twist, conv), f.exponent);
  ArtinWord c = conjugator_word(f, f.twist.config.count());
  if (c.letters.empty()) return base;
  return conjugate(base, c);
}

long long factor_degree(const Factor& f) {
  return f.is_stub ? f.stub_degree : f.exponent;
}

bool Factorization::has_stub() const {
  for (const auto& f : factors)
    if (f.is_stub) return true;
  return false;
}

ArtinWord product_word(const Factorization& f, SideConvention conv) {
  ArtinWord w(f.strands());
  for (const auto& fac : f.factors) w = multiply(w, factor_word(fac, conv));
  return w;
}

NormalForm product_braid(const Factorization& f, SideConvention conv) {
  return normal_form(product_word(f, conv));
}

DegreeReport degree_report(const Factorization& f) {
  DegreeReport rep;
  std::map<std::string, size_t> index;
  std::map<std::string, int> last_serial;  // per group, to count composites
  for (const auto& fac : f.factors) {
    auto it = index.find(fac.origin_group);
    if (it == index.end()) {
      index.emplace(fac.origin_group, rep.groups.size());
      rep.groups.push_back({fac.origin_group, {}, 0, 0, 0, 0});
      it = index.find(fac.origin_group);
    }
    auto& g = rep.groups[it->second];
    if (fac.is_stub) {
      g.stub_degree += fac.stub_degree;
      rep.stub_degree += fac.stub_degree;
      g.total_degree += fac.stub_degree;
      rep.total_degree += fac.stub_degree;
      continue;
    }
    g.count_by_exponent[fac.exponent] += 1;
    g.factor_count += 1;
    g.total_degree += fac.exponent;
    rep.factor_count += 1;
    rep.total_degree += fac.exponent;
    if (fac.composite_serial >= 0) {
      auto& last = last_serial[fac.origin_group];
      if (last != fac.composite_serial + 1) {
        g.composite_count += 1;
        rep.composite_count += 1;
        last = fac.composite_serial + 1;
      }
    }
  }
  return rep;
}

long long residual_degree(const Factorization& f, int n) {
  long long sum = 0;
  for (const auto& fac : f.factors) sum += factor_degree(fac);
  return static_cast<long long>(n) * (n - 1) - sum;
}

CheckResult check_full_twist(const Factorization& f, SideConvention conv) {
  CheckResult res;
  if (f.has_stub()) {
    res.message = "factorization contains unresolved stub factors";
    return res;
  }
  int n = f.strands();
  ArtinWord prod = product_word(f, conv);
  res.degree_delta = degree(prod) - static_cast<long long>(n) * (n - 1);
  NormalForm nf = normal_form(prod);
  NormalForm ft;
  ft.strands = n;
  ft.delta_power = 2;
  if (nf == ft) {
    res.pass = true;
    res.message = "product equals the full twist";
    return res;
  }
  std::ostringstream os;
  os << "product differs from the full twist: degree delta " << res.degree_delta;
  if (nf.delta_power != 2)
    os << ", delta power " << nf.delta_power << " (expected 2)";
  if (!nf.factors.empty()) {
    res.first_divergence = 0;  // the full twist has no canonical factors
    os << ", first divergent canonical factor " << nf.factors.front().cycle_string()
       << " (canonical length " << nf.factors.size() << ")";
  }
  res.message = os.str();
  return res;
}

bool invariance_check(const Factorization& f, const ArtinWord& rho,
                      bool by_composite, SideConvention conv) {
  // Collect comparison units: ranges of factors.
  std::vector<std::pair<size_t, size_t>> units;
  size_t i = 0;
  while (i < f.factors.size()) {
    if (f.factors[i].is_stub)
      throw std::invalid_argument("invariance_check: stub factor present");
    size_t j = i + 1;
    if (by_composite && f.factors[i].composite_serial >= 0) {
      while (j < f.factors.size() &&
             f.factors[j].composite_serial == f.factors[i].composite_serial)
        ++j;
    }
    units.push_back({i, j});
    i = j;
  }
  for (auto [b, e] : units) {
    ArtinWord w(f.strands());
    for (size_t k = b; k < e; ++k) w = multiply(w, factor_word(f.factors[k], conv));
    if (!equals(conjugate(w, rho), w)) return false;
  }
  return true;
}

Factorization complex_conjugate(const Factorization& f) {
  // The mirror sends a positive twist along a path to the positive twist
  // along the mirrored path, negates conjugator letters, and reverses the
  // order in which the discriminant loops are listed.
  Factorization g;
  g.config = f.config;
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    Factor fac = *it;
    if (!fac.is_stub) fac.twist = complex_conjugate(fac.twist);
    for (auto& c : fac.conjugators)
      for (auto& l : c.letters) l = -l;
    g.factors.push_back(std::move(fac));
  }
  return g;
}

Factorization conjugate_factors(const Factorization& f, const ArtinWord& c) {
  Factorization g = f;
  for (auto& fac : g.factors) {
    if (fac.is_stub) continue;
    fac.conjugators.push_back(c);
  }
  return g;
}

void hurwitz_move_right(Factorization& f, size_t k, SideConvention conv) {
  if (k + 1 >= f.factors.size())
    throw std::out_of_range("hurwitz_move_right: index");
  // (a, b) -> (a b a^-1, a): keep words, fold into conjugators.
  Factor a = f.factors[k];
  Factor b = f.factors[k + 1];
  ArtinWord wa = factor_word(a, conv);
  Factor b2 = b;
  b2.conjugators.push_back(inverse(wa));  // a b a^-1 = (b)^(a^-1)
  f.factors[k] = b2;
  f.factors[k + 1] = a;
}

void hurwitz_move_left(Factorization& f, size_t k, SideConvention conv) {
  if (k + 1 >= f.factors.size())
    throw std::out_of_range("hurwitz_move_left: index");
  // (a, b) -> (b, b^-1 a b)
  Factor a = f.factors[k];
  Factor b = f.factors[k + 1];
  ArtinWord wb = factor_word(b, conv);
  Factor a2 = a;
  a2.conjugators.push_back(wb);  // b^-1 a b = (a)^b
  f.factors[k] = b;
  f.factors[k + 1] = a2;
}

Factorization line_arrangement(int n) {
  Factorization f;
  f.config = PunctureConfig::plain(n);
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) {
      Factor fac;
      fac.twist = BandTwist{
          PathDescriptor::all_below(f.config, std::to_string(i), std::to_string(j)),
          f.config};
      fac.exponent = 2;
      fac.origin_group = "lines";
      fac.origin_detail = "Z2_" + std::to_string(i) + "," + std::to_string(j);
      f.factors.push_back(std::move(fac));
    }
  }
  return f;
}

Factorization paired_full_twist(int m) {
  Factorization f;
  f.config = PunctureConfig::paired(m);
  int serial = 0;
  for (int j = 2; j <= m; ++j) {
    for (int i = 1; i < j; ++i) {
      auto atoms = pair_twist_expand(
          f.config, {std::to_string(i), std::to_string(i) + "'"},
          {std::to_string(j), std::to_string(j) + "'"}, {});
      for (auto& t : atoms) {
        Factor fac;
        fac.twist = t;
        fac.exponent = 2;
        fac.origin_group = "pairs";
        fac.origin_detail =
            "Z2_" + std::to_string(i) + std::to_string(i) + "'," +
            std::to_string(j) + std::to_string(j) + "'";
        fac.composite_serial = serial;
        f.factors.push_back(std::move(fac));
      }
      ++serial;
    }
  }
  for (int i = 1; i <= m; ++i) {
    Factor fac;
    fac.twist = BandTwist{
        PathDescriptor::all_below(f.config, std::to_string(i), std::to_string(i) + "'"),
        f.config};
    fac.exponent = 2;
    fac.origin_group = "pairs";
    fac.origin_detail = "rho2_" + std::to_string(i);
    f.factors.push_back(std::move(fac));
  }
  return f;
}

}  // namespace mtk
