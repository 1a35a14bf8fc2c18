#include "mtk/vankampen.hpp"

#include "mtk/dsl.hpp"
#include "mtk/fpgroup.hpp"

#include <doctest.h>

#include <random>

using namespace mtk;

namespace {

std::string data_path(const std::string& name) {
  return std::string(MTK_DATA_DIR) + "/" + name;
}

std::vector<int> disp(const GWord& w) {
  GWord v = w.reduced().unsigned_display();
  std::vector<int> out;
  for (const auto& l : v.letters) out.push_back(l.pos);
  return out;
}

using V = std::vector<int>;

Factorization resolve_hv2() {
  static dsl::File file = dsl::parse_file_at(data_path("hv_heads.mt"));
  return dsl::resolve(file, "HV2", PunctureConfig::paired(6));
}

}  // namespace

TEST_CASE("gword basics") {
  GWord w{{GLetter{3, 1}, GLetter{3, -1}, GLetter{5, 1}}};
  CHECK(disp(w) == V{5});
  GWord a = GWord::gen(2), b = GWord::gen(4);
  CHECK(gconjugate(a, b).letters.size() == 3);
  CHECK((a * a.inverse()).letters.empty());
}

TEST_CASE("loops of bare monotone bands") {
  PunctureConfig c = PunctureConfig::plain(4);
  // adjacent: plain generators
  auto [a0, b0] = loops_from_path(PathDescriptor::all_below(c, "2", "3"), c);
  CHECK(disp(a0) == V{2});
  CHECK(disp(b0) == V{3});
  // below path: both loops plain
  auto [a1, b1] = loops_from_path(PathDescriptor::all_below(c, "1", "3"), c);
  CHECK(disp(a1) == V{1});
  CHECK(disp(b1) == V{3});
  // above path: the right loop is conjugated through the skipped puncture
  auto [a2, b2] = loops_from_path(PathDescriptor::with_above(c, "1", "3", {"2"}), c);
  CHECK(disp(a2) == V{1});
  CHECK(b2.reduced().letters ==
        std::vector<GLetter>{{2, 1}, {3, 1}, {2, -1}});
  // reversing all flags moves the conjugation to the other flagged side
  auto [a3, b3] =
      loops_from_path(PathDescriptor::with_above(c, "1", "4", {"3"}), c);
  auto [a4, b4] =
      loops_from_path(PathDescriptor::with_above(c, "1", "4", {"2"}), c);
  CHECK(b3.reduced().letters ==
        std::vector<GLetter>{{3, 1}, {4, 1}, {3, -1}});
  CHECK(b4.reduced().letters ==
        std::vector<GLetter>{{2, 1}, {4, 1}, {2, -1}});
  CHECK(disp(a3) == V{1});
  CHECK(disp(a4) == V{1});
}

TEST_CASE("figure 6 branch point: relation 62") {
  Factorization hv2 = resolve_hv2();
  REQUIRE(hv2.factors.size() == 36);
  const Factor& branch = hv2.factors[33];
  REQUIRE(branch.exponent == 1);
  REQUIRE(branch.origin_detail.find("Z_{55'}") != std::string::npos);
  Relation r = relation_from_factor(branch);
  CHECK(r.kind == RelKind::Branch);
  CHECK(disp(r.lhs) == V{9, 4, 3, 2, 1, 9, 1, 2, 3, 4, 9});
  CHECK(disp(r.rhs) == V{12, 11, 10, 11, 12});
}

TEST_CASE("figure 7 cusps") {
  Factorization hv2 = resolve_hv2();
  // factors 9,10,11 are the three cusps of the second tangency
  std::vector<V> expected_a = {{4}, {3}, {3, 4, 3}};
  for (int k = 0; k < 3; ++k) {
    const Factor& f = hv2.factors[9 + k];
    REQUIRE(f.exponent == 3);
    Relation r = relation_from_factor(f);
    CHECK(r.kind == RelKind::Cusp);
    CHECK(disp(r.lhs) == expected_a[k]);
    CHECK(disp(r.rhs) == V{7});
  }
}

TEST_CASE("figure 8 nodes") {
  Factorization hv2 = resolve_hv2();
  const Factor& n1 = hv2.factors[31];
  const Factor& n2 = hv2.factors[32];
  REQUIRE(n1.exponent == 2);
  REQUIRE(n1.conjugators.size() == 1);
  Relation r1 = relation_from_factor(n1);
  Relation r2 = relation_from_factor(n2);
  CHECK(r1.kind == RelKind::Node);
  CHECK(disp(r1.lhs) == V{1, 2, 3, 2, 1});
  CHECK(disp(r1.rhs) == V{9});
  CHECK(disp(r2.lhs) == V{1, 2, 4, 2, 1});
  CHECK(disp(r2.rhs) == V{9});
}

TEST_CASE("bar generators from the stub conjugators") {
  Factorization hv2 = resolve_hv2();
  const Factor& stub = hv2.factors[34];
  REQUIRE(stub.is_stub);
  REQUIRE(stub.conjugators.size() == 2);
  auto bar = [&](int pos) {
    GWord g = GWord::gen(pos);
    for (const auto& c : stub.conjugators) g = transport(g, c);
    return disp(g);
  };
  for (int pos : {1, 2, 3, 4, 8}) CHECK(bar(pos) == V{pos});
  CHECK(bar(5) == V{7, 5, 7});
  CHECK(bar(6) == V{7, 6, 7});
  CHECK(bar(7) == V{7, 6, 5, 7, 5, 6, 7});
  CHECK(bar(9) == V{9, 11, 12, 9, 12, 11, 9});
  CHECK(bar(10) == V{9, 11, 12, 9, 12, 11, 10, 11, 12, 9, 12, 11, 9});
  CHECK(bar(11) == V{9, 11, 9});
  CHECK(bar(12) == V{9, 12, 9});
}

TEST_CASE("braid action laws") {
  PunctureConfig c = PunctureConfig::paired(3);
  std::mt19937_64 rng(41);
  auto rnd_word = [&](int len) {
    ArtinWord w(6);
    for (int i = 0; i < len; ++i) {
      int g = 1 + (int)(rng() % 5);
      w.letters.push_back(rng() % 2 ? g : -g);
    }
    return w;
  };
  auto rnd_gword = [&]() {
    GWord g;
    int len = 1 + (int)(rng() % 4);
    for (int i = 0; i < len; ++i)
      g.letters.push_back(GLetter{1 + (int)(rng() % 6), rng() % 2 ? 1 : -1});
    return g.reduced();
  };
  for (int t = 0; t < 60; ++t) {
    ArtinWord u = rnd_word(6), v = rnd_word(6);
    GWord g = rnd_gword();
    // action(c1 c2) = action(c2) o action(c1)
    CHECK(apply_braid_action(g, multiply(u, v)) ==
          apply_braid_action(apply_braid_action(g, u), v));
    // well-defined on equal words
    ArtinWord braid_rel1(6, {2, 3, 2}), braid_rel2(6, {3, 2, 3});
    CHECK(apply_braid_action(g, braid_rel1) == apply_braid_action(g, braid_rel2));
    // inverse action inverts
    CHECK(apply_braid_action(apply_braid_action(g, u), inverse(u)) == g.reduced());
  }
}

TEST_CASE("pair substitution and orbit") {
  PunctureConfig c = PunctureConfig::paired(2);
  GWord g2 = GWord::gen(1);   // Gamma_1
  GWord g2p = GWord::gen(2);  // Gamma_1'
  // m = 1: j -> j', j' -> j' j j'^-1
  CHECK(pair_substitution(g2, c, "1", 1) == g2p);
  GWord img = pair_substitution(g2p, c, "1", 1);
  CHECK(img.letters == std::vector<GLetter>{{2, 1}, {1, 1}, {2, -1}});
  // m = 1 twice equals m = 2 once
  GWord twice = pair_substitution(pair_substitution(g2p, c, "1", 1), c, "1", 1);
  CHECK(twice == pair_substitution(g2p, c, "1", 2));
  // m and -m cancel
  CHECK(pair_substitution(pair_substitution(g2p, c, "1", 1), c, "1", -1) == g2p);
  // substitution agrees with the braid action of the pair half twist
  // (letter for letter in the involution display; the signed conjugators
  // differ by the generator squares)
  for (int pos : {1, 2}) {
    GWord base = GWord::gen(pos);
    CHECK(pair_substitution(base, c, "1", 1).unsigned_display() ==
          apply_braid_action(base, rho_twist(c, "1", 1)).unsigned_display());
  }
  // orbit: zero bound returns the originals
  std::vector<Relation> rels(1);
  rels[0].kind = RelKind::Node;
  rels[0].lhs = g2;
  rels[0].rhs = GWord::gen(3);
  auto orb0 = invariance_orbit(rels, c, 0);
  REQUIRE(orb0.size() == 1);
  CHECK(orb0[0].lhs == rels[0].lhs);
  auto orb1 = invariance_orbit(rels, c, 1);
  CHECK(orb1.size() == 9);  // 3^2 tuples over two pairs
  CHECK(orb1[0].lhs == rels[0].lhs);  // zero tuple first
}

TEST_CASE("conjugate_generators") {
  PunctureConfig c = PunctureConfig::paired(3);
  std::vector<Relation> rels(1);
  rels[0].kind = RelKind::Branch;
  rels[0].lhs = GWord::gen(1);
  rels[0].rhs = GWord::gen(2);
  auto same = conjugate_generators(rels, ArtinWord(6));
  CHECK(same[0].lhs == rels[0].lhs);
  auto moved = conjugate_generators(rels, rho_twist(c, "1", 1));
  CHECK(moved[0].lhs == GWord::gen(2));
}

TEST_CASE("branch point relation of an adjacent band") {
  PunctureConfig c = PunctureConfig::plain(4);
  Factor f;
  f.twist = BandTwist{PathDescriptor::all_below(c, "2", "3"), c};
  f.exponent = 1;
  Relation r = relation_from_factor(f);
  CHECK(r.kind == RelKind::Branch);
  CHECK(disp(r.lhs) == V{2});
  CHECK(disp(r.rhs) == V{3});
  Factor bad = f;
  bad.exponent = 4;
  CHECK_THROWS_AS(relation_from_factor(bad), std::invalid_argument);
}

TEST_CASE("presentation from factorization") {
  PunctureConfig c = PunctureConfig::paired(2);
  Factorization empty;
  empty.config = c;
  GPresentation p0 = presentation_from_factorization(empty);
  CHECK(p0.relations.empty());  // free group on the alphabet

  Factorization f;
  f.config = c;
  Factor node;
  node.twist = BandTwist{PathDescriptor::all_below(c, "1'", "2"), c};
  node.exponent = 2;
  f.factors.push_back(node);
  GPresentation p1 = presentation_from_factorization(f);
  REQUIRE(p1.relations.size() == 1);
  CHECK(p1.relations[0].kind == RelKind::Node);
  CHECK(relation_text(p1.relations[0], c, true) == "1' 2 = 2 1'");

  GPresentation p2 =
      presentation_from_factorization(f, PresentationMode::Quotient);
  CHECK(p2.relations.size() == 1 + 4);
  CHECK(p2.relations.back().kind == RelKind::Square);

  // stub factors are rejected
  Factor stub;
  stub.is_stub = true;
  stub.twist.config = c;
  f.factors.push_back(stub);
  CHECK_THROWS_AS(presentation_from_factorization(f), std::invalid_argument);
}

TEST_CASE("presentation text round trip") {
  PunctureConfig c = PunctureConfig::paired(2);
  GWord w = parse_gword("1 2' 1^-1", c);
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[2].sign == -1);
  CHECK(gword_text(w, c, false) == "1 2' 1^-1");
  CHECK(gword_text(w, c, true) == "1 2' 1");
  CHECK(gword_text(GWord{}, c, false) == "()");
}

TEST_CASE("cusp relation forms define the same quotient") {
  // <a,b | a^2, b^2, aba=bab> and <a,b | a^2, b^2, ababab> both present S_3.
  FpPresentation braid_form;
  braid_form.generators = {"a", "b"};
  braid_form.relators = {{1, 1}, {2, 2}, {1, 2, 1, -2, -1, -2}};
  FpPresentation invol_form;
  invol_form.generators = {"a", "b"};
  invol_form.relators = {{1, 1}, {2, 2}, {1, 2, 1, 2, 1, 2}};
  TCResult r1 = todd_coxeter(braid_form, {}, 100);
  TCResult r2 = todd_coxeter(invol_form, {}, 100);
  REQUIRE(r1.completed);
  REQUIRE(r2.completed);
  CHECK(r1.table.index() == 6);
  CHECK(r2.table.index() == 6);
  // each form's extra relator acts trivially in the other's coset action
  auto check_cross = [](const FpPresentation& p, const CosetTable& t,
                        const std::vector<int>& extra) {
    std::vector<Perm> images;
    for (size_t gi = 1; gi <= p.generators.size(); ++gi)
      images.push_back(t.action(static_cast<int>(gi)));
    FpPresentation q;
    q.generators = p.generators;
    q.relators = {extra};
    CHECK(check_homomorphism(q, images).ok);
  };
  check_cross(braid_form, r2.table, braid_form.relators[2]);
  check_cross(invol_form, r1.table, invol_form.relators[2]);
}
