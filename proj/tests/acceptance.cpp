// Acceptance suite: one check per criterion, one PASS/FAIL line each.

#include "mtk/dsl.hpp"
#include "mtk/factorization.hpp"
#include "mtk/fpgroup.hpp"
#include "mtk/invariants.hpp"
#include "mtk/vankampen.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

using namespace mtk;

namespace {

int failures = 0;

void criterion(int number, const std::string& what,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s criterion %2d [%5lld ms]: %s%s%s\n", ok ? "PASS" : "FAIL",
              number, (long long)ms, what.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failures;
}

std::string data_path(const std::string& name) {
  return std::string(MTK_DATA_DIR) + "/" + name;
}

std::vector<int> disp(const GWord& w) {
  GWord v = w.reduced().unsigned_display();
  std::vector<int> out;
  for (const auto& l : v.letters) out.push_back(l.pos);
  return out;
}

Factorization resolve_file(const std::string& file, const std::string& entry,
                           const PunctureConfig& config) {
  dsl::File f = dsl::parse_file_at(data_path(file));
  return dsl::resolve(f, entry, config);
}

ArtinWord random_word(std::mt19937_64& rng, int n, int len) {
  ArtinWord w(n);
  for (int i = 0; i < len; ++i) {
    int g = 1 + (int)(rng() % (n - 1));
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}

}  // namespace

int main() {
  const PunctureConfig c54 = PunctureConfig::paired(27);
  const PunctureConfig c12 = PunctureConfig::paired(6);

  // 1. Parasitic count: 216 composites -> 864 atomic degree-2 factors, 1728.
  criterion(1, "parasitic D expansion: 216 composites, 864 factors, degree 1728",
            [&](std::string& detail) {
              Factorization f = resolve_file("parasitic_D.mt", "D_ALL", c54);
              DegreeReport rep = degree_report(f);
              std::ostringstream os;
              os << rep.composite_count << " composites, " << rep.factor_count
                 << " factors, degree " << rep.total_degree;
              detail = os.str();
              for (const auto& g : rep.groups)
                for (const auto& [e, k] : g.count_by_exponent)
                  if (e != 2) return false;
              return rep.composite_count == 216 && rep.factor_count == 864 &&
                     rep.total_degree == 1728;
            });

  // 2. Vertex bookkeeping: 20/12/2 + 48 per vertex; 1134; grand 2862.
  criterion(2, "vertex bookkeeping: 9 x (20,12,2 | stub 48) = 1134; total 2862",
            [&](std::string& detail) {
              Factorization hv = resolve_file("hv_heads.mt", "HV_ALL", c12);
              DegreeReport rep = degree_report(hv);
              if (rep.groups.size() != 9) return false;
              for (const auto& g : rep.groups) {
                if (g.count_by_exponent.at(2) != 20) return false;
                if (g.count_by_exponent.at(3) != 12) return false;
                if (g.count_by_exponent.at(1) != 2) return false;
                if (g.stub_degree != 48) return false;
                if (g.total_degree != 126) return false;
              }
              Factorization cs = resolve_file("parasitic_C.mt", "C_ALL", c54);
              long long total =
                  rep.total_degree + degree_report(cs).total_degree;
              std::ostringstream os;
              os << "per vertex 126, vertices " << rep.total_degree
                 << ", parasitic " << degree_report(cs).total_degree
                 << ", grand " << total;
              detail = os.str();
              return rep.total_degree == 1134 && total == 2862 &&
                     total == 54 * 53;
            });

  // 3. Residual degree of the full bundle is 0.
  criterion(3, "residual degree of the full bundle is 0", [&](std::string& detail) {
    Factorization cs = resolve_file("parasitic_C.mt", "C_ALL", c54);
    Factorization hv = resolve_file("hv_heads.mt", "HV_ALL", c12);
    long long residual = residual_degree(cs, 54) -
                         degree_report(hv).total_degree;
    std::ostringstream os;
    os << "2862 - 1728 - 1134 = " << residual;
    detail = os.str();
    return residual == 0 && residual_degree(cs, 54) == 1134;
  });

  // 4. Full twist verification at desk scale.
  criterion(4, "full-twist checks: letters n<=54, line arrangements, drops",
            [&](std::string& detail) {
              for (int n = 2; n <= 54; ++n) {
                Factorization f;
                f.config = PunctureConfig::plain(n);
                for (int l : full_twist(n).letters) {
                  Factor fac;
                  fac.twist = BandTwist{
                      PathDescriptor::all_below(f.config, std::to_string(l),
                                                std::to_string(l + 1)),
                      f.config};
                  fac.exponent = 1;
                  f.factors.push_back(std::move(fac));
                }
                if (!check_full_twist(f).pass) {
                  detail = "letter factorization failed at n=" + std::to_string(n);
                  return false;
                }
              }
              for (int n : {3, 4, 5}) {
                if (!check_full_twist(line_arrangement(n)).pass) {
                  detail = "line arrangement failed at n=" + std::to_string(n);
                  return false;
                }
              }
              for (int n : {3, 4, 5}) {
                Factorization f = line_arrangement(n);
                for (size_t k = 0; k < f.factors.size(); ++k) {
                  Factorization g = f;
                  g.factors.erase(g.factors.begin() + k);
                  CheckResult res = check_full_twist(g);
                  if (res.pass || res.degree_delta != -2) {
                    detail = "drop test failed";
                    return false;
                  }
                }
              }
              return true;
            });

  // 5. Oracle agreement on 1000 random pairs in B4 and B6.
  criterion(5, "normal form vs Dynnikov oracle: 1000 pairs in B4 and B6",
            [&](std::string& detail) {
              std::mt19937_64 rng(20260809);
              long long disagreements = 0, equal_cases = 0;
              for (int n : {4, 6}) {
                for (int t = 0; t < 1000; ++t) {
                  ArtinWord a = random_word(rng, n, 4 + (int)(rng() % 26));
                  ArtinWord b;
                  if (t % 2 == 0) {
                    b = a;
                    for (int s = 0; s < 10; ++s) {
                      size_t pos = rng() % (b.letters.size() + 1);
                      int g = 1 + (int)(rng() % (n - 1));
                      int sg = rng() % 2 ? g : -g;
                      b.letters.insert(b.letters.begin() + pos, {sg, -sg});
                    }
                  } else {
                    b = random_word(rng, n, 4 + (int)(rng() % 26));
                  }
                  bool garside = equals(a, b);
                  bool dynnikov = dynnikov_equal(a, b);
                  if (garside) ++equal_cases;
                  if (garside != dynnikov) ++disagreements;
                }
              }
              std::ostringstream os;
              os << "2000 pairs, " << equal_cases << " equal, "
                 << disagreements << " disagreements";
              detail = os.str();
              return disagreements == 0 && equal_cases >= 900;
            });

  // 6. Van Kampen golden fixtures.
  criterion(6, "van Kampen golden fixtures (Rel 62, cusps, nodes, bar-Gammas)",
            [&](std::string& detail) {
              dsl::File file = dsl::parse_file_at(data_path("hv_heads.mt"));
              Factorization hv2 = dsl::resolve(file, "HV2", c12);
              if (hv2.factors.size() != 36) {
                detail = "unexpected factor count";
                return false;
              }
              using V = std::vector<int>;
              // (i) relation 62
              Relation r62 = relation_from_factor(hv2.factors[33]);
              if (disp(r62.lhs) != V{9, 4, 3, 2, 1, 9, 1, 2, 3, 4, 9} ||
                  disp(r62.rhs) != V{12, 11, 10, 11, 12}) {
                detail = "relation 62 mismatch";
                return false;
              }
              // (ii) the three cusps
              std::vector<V> cusp_a = {{4}, {3}, {3, 4, 3}};
              for (int k = 0; k < 3; ++k) {
                Relation r = relation_from_factor(hv2.factors[9 + k]);
                if (r.kind != RelKind::Cusp || disp(r.lhs) != cusp_a[k] ||
                    disp(r.rhs) != V{7}) {
                  detail = "cusp fixture mismatch";
                  return false;
                }
              }
              // (iii) the two nodes
              Relation n1 = relation_from_factor(hv2.factors[31]);
              Relation n2 = relation_from_factor(hv2.factors[32]);
              if (disp(n1.lhs) != V{1, 2, 3, 2, 1} || disp(n1.rhs) != V{9} ||
                  disp(n2.lhs) != V{1, 2, 4, 2, 1} || disp(n2.rhs) != V{9}) {
                detail = "node fixture mismatch";
                return false;
              }
              // (iv) bar-Gamma substitutions from the stub conjugators
              const Factor& stub = hv2.factors[34];
              if (!stub.is_stub || stub.conjugators.size() != 2) {
                detail = "stub conjugator shape";
                return false;
              }
              auto bar = [&](int pos) {
                GWord g = GWord::gen(pos);
                for (const auto& w : stub.conjugators) g = transport(g, w);
                return disp(g);
              };
              bool ok = bar(5) == V{7, 5, 7} && bar(6) == V{7, 6, 7} &&
                        bar(7) == V{7, 6, 5, 7, 5, 6, 7} &&
                        bar(9) == V{9, 11, 12, 9, 12, 11, 9} &&
                        bar(10) ==
                            V{9, 11, 12, 9, 12, 11, 10, 11, 12, 9, 12, 11, 9} &&
                        bar(11) == V{9, 11, 9} && bar(12) == V{9, 12, 9};
              for (int pos : {1, 2, 3, 4, 8}) ok = ok && bar(pos) == V{pos};
              if (!ok) detail = "bar-Gamma mismatch";
              return ok;
            });

  // 7. Homomorphism validation.
  criterion(7, "transposition assignment kills all 74 fixture relations",
            [&](std::string& detail) {
              std::ifstream in(data_path("hv2_relations.txt"));
              std::ostringstream os;
              os << in.rdbuf();
              FpPresentation p = parse_presentation(os.str());
              if (p.relators.size() != 74) {
                detail = "fixture has " + std::to_string(p.relators.size()) +
                         " relators";
                return false;
              }
              auto tr = [](int a, int b) {
                std::vector<int> img(8);
                for (int i = 0; i < 8; ++i) img[i] = i;
                std::swap(img[a - 1], img[b - 1]);
                return Perm(img);
              };
              Perm t1 = tr(5, 8), t2 = tr(2, 4), t3 = tr(2, 3), t4 = tr(1, 2),
                   t5 = tr(5, 6), t6 = tr(6, 7);
              std::vector<Perm> images = {t1, t1, t2, t2, t3, t3,
                                          t4, t4, t5, t5, t6, t6};
              HomCheck hc = check_homomorphism(p, images, true);
              if (!hc.ok) detail = hc.violations.front();
              // factorization-level: induced permutations of verified
              // factorizations multiply to the identity
              for (int n : {3, 4, 5}) {
                if (!induced_permutation(product_word(line_arrangement(n)))
                         .is_identity())
                  return false;
              }
              if (!induced_permutation(product_word(paired_full_twist(3)))
                       .is_identity())
                return false;
              return hc.ok;
            });

  // 8. Invariance suite.
  criterion(8, "invariance: all 216 composites at n=54; conjugated twists at n<=6",
            [&](std::string& detail) {
              Factorization d = resolve_file("parasitic_D.mt", "D_ALL", c54);
              // group factors by composite serial
              size_t i = 0;
              int checked = 0;
              while (i < d.factors.size()) {
                size_t j = i + 1;
                while (j < d.factors.size() &&
                       d.factors[j].composite_serial ==
                           d.factors[i].composite_serial)
                  ++j;
                ArtinWord prod(54);
                for (size_t k = i; k < j; ++k)
                  prod = multiply(prod, factor_word(d.factors[k]));
                NormalForm base = normal_form(prod);
                // the two pairs of this composite
                std::string li = d.factors[i].twist.path.left_end;
                std::string ri = d.factors[i].twist.path.right_end;
                if (li.back() == '\'') li.pop_back();
                if (ri.back() == '\'') ri.pop_back();
                for (const std::string& pair : {li, ri}) {
                  for (int m : {1, -1}) {
                    ArtinWord rho = rho_twist(c54, pair, m);
                    if (normal_form(conjugate(prod, rho)) != base) {
                      detail = "composite " + d.factors[i].origin_detail +
                               " moved by rho_" + pair;
                      return false;
                    }
                  }
                }
                ++checked;
                i = j;
              }
              if (checked != 216) {
                detail = "checked " + std::to_string(checked) + " composites";
                return false;
              }
              // complex conjugation at n <= 6
              for (int n : {3, 4, 5, 6})
                if (!check_full_twist(complex_conjugate(line_arrangement(n))).pass) {
                  detail = "conjugated line arrangement failed";
                  return false;
                }
              for (int m : {2, 3})
                if (!check_full_twist(complex_conjugate(paired_full_twist(m))).pass) {
                  detail = "conjugated paired twist failed";
                  return false;
                }
              detail = "216 composites x 4 twists verified at n=54";
              return true;
            });

  // 9. Chern / index.
  criterion(9, "Chern numbers: 576*18!, 282*18!, tau = 4*18! > 0",
            [&](std::string& detail) {
              BranchData b{18, 54, 1080, 216, 54};
              BigInt f18 = factorial(18);
              BigInt c1 = chern_c1_sq(b), c2 = chern_c2(b), tau = index_tau(b);
              std::ostringstream os;
              os << factored_form(c1, 18) << "; " << factored_form(c2, 18)
                 << "; tau " << factored_form(tau, 18);
              detail = os.str();
              return c1 == 576 * f18 && c2 == 282 * f18 && tau == 4 * f18 &&
                     tau > 0;
            });

  // 10. Group machinery units.
  criterion(10, "coset enumeration, Reidemeister-Schreier, abelianization",
            [&](std::string& detail) {
              FpPresentation s3;
              s3.generators = {"a", "b"};
              s3.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}};
              TCResult r = todd_coxeter(s3, {{1}}, 100);
              if (!r.completed || r.table.index() != 3) {
                detail = "S3 enumeration";
                return false;
              }
              FpPresentation z;
              z.generators = {"a"};
              TCResult rz = todd_coxeter(z, {{1, 1}}, 10);
              if (!rz.completed || rz.table.index() != 2) return false;
              FpPresentation kernel = reidemeister_schreier(z, rz.table);
              if (kernel.generators.size() != 1 || !kernel.relators.empty()) {
                detail = "kernel of Z -> Z/2 is not Z";
                return false;
              }
              // Nielsen-Schreier on random free-group subgroups, index <= 50
              std::mt19937_64 rng(77);
              int tested = 0;
              for (int trial = 0; trial < 40 && tested < 10; ++trial) {
                int degree = 2 + (int)(rng() % 5);
                int gens = 2 + (int)(rng() % 2);
                std::vector<Perm> images;
                for (int g = 0; g < gens; ++g) {
                  std::vector<int> img(degree);
                  for (int k = 0; k < degree; ++k) img[k] = k;
                  for (int s = 0; s < degree; ++s) {
                    int a = (int)(rng() % degree), bb = (int)(rng() % degree);
                    std::swap(img[a], img[bb]);
                  }
                  images.push_back(Perm(img));
                }
                CosetTable t = coset_table_from_action(images);
                if (t.index() > 50) continue;
                FpPresentation freep;
                for (int g = 0; g < gens; ++g)
                  freep.generators.push_back(std::string(1, char('a' + g)));
                FpPresentation sg = reidemeister_schreier(freep, t);
                if (!sg.relators.empty() ||
                    (long long)sg.generators.size() != t.index() * (gens - 1) + 1) {
                  detail = "Nielsen-Schreier count failed";
                  return false;
                }
                ++tested;
              }
              if (tested < 5) {
                detail = "not enough Nielsen-Schreier samples";
                return false;
              }
              // abelianization invariant under Tietze on the fixture
              std::ifstream in(data_path("hv2_relations.txt"));
              std::ostringstream os;
              os << in.rdbuf();
              FpPresentation fix = parse_presentation(os.str());
              if (!(abelianize(fix) == abelianize(tietze_simplify(fix)))) {
                detail = "abelianization changed under simplification";
                return false;
              }
              return true;
            });

  std::printf(failures ? "ACCEPTANCE: %d criterion(s) FAILED\n"
                       : "ACCEPTANCE: all criteria passed\n",
              failures);
  return failures ? 1 : 0;
}
