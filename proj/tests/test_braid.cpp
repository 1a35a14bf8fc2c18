#include "mtk/braid.hpp"

#include <doctest.h>

#include <future>
#include <random>

using namespace mtk;

namespace {
ArtinWord W(int n, std::initializer_list<int> ls) { return ArtinWord(n, ls); }

ArtinWord random_word(std::mt19937_64& rng, int n, int len) {
  ArtinWord w(n);
  for (int i = 0; i < len; ++i) {
    int g = 1 + (int)(rng() % (n - 1));
    w.letters.push_back(rng() % 2 ? g : -g);
  }
  return w;
}
}  // namespace

TEST_CASE("free reduction and multiply") {
  CHECK(multiply(W(3, {1}), W(3, {-1})).empty());
  CHECK(multiply(W(3, {1, 2}), W(3, {-2, -1})).empty());
  ArtinWord u = W(3, {1, 2, 1});
  ArtinWord v = W(3, {2, 1, 2});
  CHECK(u.letters != v.letters);  // distinct words
  CHECK(equals(u, v));            // equal braids
  CHECK_THROWS_AS(multiply(W(3, {1}), W(4, {1})), std::invalid_argument);
  // reduce() is idempotent on unreduced storage
  ArtinWord raw(3);
  raw.letters = {1, -1, 2, 2, -2, -2};
  CHECK(raw.reduced().empty());
  CHECK(raw.reduced().reduced() == raw.reduced());
}

TEST_CASE("degree") {
  CHECK(degree(full_twist(54)) == 2862);
  CHECK(degree(W(3, {})) == 0);
  CHECK(degree(W(4, {2, 1, -1, -3})) == 0);
  // half twist cubed has degree 3
  ArtinWord band = W(4, {3, 2, 1, -2, -3});
  CHECK(degree(power(band, 3)) == 3 * degree(band));
}

TEST_CASE("conjugate") {
  ArtinWord s1 = W(3, {1});
  CHECK(conjugate(s1, W(3, {})) == s1);
  Perm p = induced_permutation(conjugate(s1, W(3, {2})));
  CHECK(p == Perm::transposition(3, 0, 2));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    ArtinWord a = random_word(rng, 5, 12), c = random_word(rng, 5, 12);
    CHECK(degree(conjugate(a, c)) == degree(a));
  }
}

TEST_CASE("full twist") {
  CHECK(full_twist(2).letters == std::vector<int>{1, 1});
  CHECK(degree(full_twist(3)) == 6);
  CHECK_THROWS_AS(full_twist(1), std::invalid_argument);
  // Delta_3 * Delta_3 equals the full twist (normal-form oracle)
  ArtinWord d3 = W(3, {1, 2, 1});
  CHECK(equals(multiply(d3, d3), full_twist(3)));
  // centrality: commutes with every generator, n <= 8
  for (int n = 2; n <= 8; ++n) {
    ArtinWord ft = full_twist(n);
    for (int i = 1; i < n; ++i) {
      ArtinWord s(n, {i});
      CHECK(equals(multiply(ft, s), multiply(s, ft)));
    }
  }
}

TEST_CASE("normal form structure") {
  NormalForm e = normal_form(W(3, {}));
  CHECK(e.delta_power == 0);
  CHECK(e.factors.empty());
  CHECK(normal_form(W(3, {1, 2, 1})) == normal_form(W(3, {2, 1, 2})));
  NormalForm ft = normal_form(full_twist(4));
  CHECK(ft.delta_power == 2);
  CHECK(ft.factors.empty());

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    int n = 3 + (int)(rng() % 4);
    ArtinWord w = random_word(rng, n, 1 + (int)(rng() % 30));
    NormalForm nf = normal_form(w);
    Perm d = Perm::delta(n);
    for (size_t i = 0; i < nf.factors.size(); ++i) {
      CHECK(!nf.factors[i].is_identity());
      CHECK(nf.factors[i] != d);
      if (i + 1 < nf.factors.size())
        CHECK(garside::left_weighted(nf.factors[i], nf.factors[i + 1]));
    }
    // re-normalizing the underlying word reproduces the form exactly
    CHECK(normal_form(to_word(nf)) == nf);
    CHECK(normal_form(multiply(w, inverse(w))).is_trivial());
  }
}

TEST_CASE("garside lattice sanity") {
  for (int n : {3, 5}) {
    Perm d = Perm::delta(n);
    Perm id = Perm::identity(n);
    CHECK(garside::left_meet(d, d) == d);
    CHECK(garside::left_meet(id, d) == id);
    for (int i = 0; i + 1 < n - 1; ++i) {
      Perm a = Perm::transposition(n, i, i + 1);
      Perm b = Perm::transposition(n, i + 1, i + 2);
      CHECK(garside::left_meet(a, b) == id);
      Perm j = garside::left_join(a, b);
      CHECK(j != id);
      CHECK(garside::left_meet(j, a) == a);
      CHECK(garside::left_meet(j, b) == b);
    }
  }
}

TEST_CASE("induced permutation") {
  for (int n : {3, 5}) {
    for (int i = 1; i < n; ++i)
      CHECK(induced_permutation(ArtinWord(n, {i})) ==
            Perm::transposition(n, i - 1, i));
    CHECK(induced_permutation(full_twist(n)).is_identity());
  }
  // band Z_{ij} induces the endpoint transposition
  ArtinWord band = W(5, {4, 3, 2, 1, -2, -3, -4});
  CHECK(induced_permutation(band) == Perm::transposition(5, 0, 4));
  // multiplicative on products
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    ArtinWord a = random_word(rng, 6, 10), b = random_word(rng, 6, 10);
    CHECK(induced_permutation(multiply(a, b)) ==
          induced_permutation(a).then(induced_permutation(b)));
  }
}

TEST_CASE("values are safe to share across threads") {
  // pure operations on shared immutable inputs
  std::mt19937_64 rng(71);
  std::vector<ArtinWord> words;
  for (int t = 0; t < 24; ++t) words.push_back(random_word(rng, 6, 40));
  std::vector<NormalForm> serial;
  for (const auto& w : words) serial.push_back(normal_form(w));
  std::vector<std::future<NormalForm>> jobs;
  for (const auto& w : words)
    jobs.push_back(std::async(std::launch::async, [&w] { return normal_form(w); }));
  for (size_t i = 0; i < words.size(); ++i)
    CHECK(jobs[i].get() == serial[i]);
}

TEST_CASE("dynnikov oracle") {
  CHECK(dynnikov_equal(W(3, {1, 2}), W(3, {1, 2})));
  CHECK(dynnikov_equal(W(3, {1, 2, 1}), W(3, {2, 1, 2})));
  CHECK(!dynnikov_equal(W(3, {1}), W(3, {2})));
  CHECK(!dynnikov_equal(full_twist(3), W(3, {})));
  CHECK(!dynnikov_equal(W(2, {1, 1}), W(2, {})));
  CHECK_THROWS_AS(dynnikov_equal(W(3, {1}), W(4, {1})), std::invalid_argument);

  // agreement with the normal form on random pairs, including
  // equal-by-construction rewrites
  std::mt19937_64 rng(23);
  int equal_seen = 0;
  for (int t = 0; t < 250; ++t) {
    int n = 4;
    ArtinWord a = random_word(rng, n, 3 + (int)(rng() % 18));
    ArtinWord b;
    if (t % 2 == 0) {
      b = a;
      for (int s = 0; s < 8; ++s) {
        size_t pos = rng() % (b.letters.size() + 1);
        int g = 1 + (int)(rng() % (n - 1));
        int sg = rng() % 2 ? g : -g;
        b.letters.insert(b.letters.begin() + pos, {sg, -sg});
      }
    } else {
      b = random_word(rng, n, 3 + (int)(rng() % 18));
    }
    bool g = equals(a, b);
    bool d = dynnikov_equal(a, b);
    if (g) ++equal_seen;
    CHECK(g == d);
  }
  CHECK(equal_seen >= 100);
}
