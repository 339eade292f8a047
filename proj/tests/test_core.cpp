#include <doctest.h>

#include "linemetric/certificates.hpp"
#include "linemetric/core.hpp"
#include "linemetric/line_metrics.hpp"
#include "support.hpp"

using namespace linemetric;

TEST_CASE("permutations validate and parse") {
  CHECK(Perm::parse("1,3,2").str() == "1,3,2");
  CHECK(Perm::parse("2, 1, 3")(1) == 2);
  CHECK_THROWS_AS(Perm::parse("1,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("1,2,4"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Perm::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Perm(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("antipode, inverse, canonical and composition") {
  CHECK(antipode(Perm::identity(3)) == Perm::parse("3,2,1"));
  const Perm p = Perm::parse("2,4,1,3");
  CHECK(p.antipode().antipode() == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(compose(p, Perm::parse("2,1,3,4")) == Perm::parse("4,2,1,3"));
  CHECK(p.canonical() == std::min(p, p.antipode()));
  CHECK(Perm::parse("3,2,1").canonical() == Perm::identity(3));
  const auto perms = all_perms(4);
  CHECK(perms.size() == 24);
  CHECK(std::is_sorted(perms.begin(), perms.end()));
}

TEST_CASE("M(pi^-) = M(pi) for every permutation of four points") {
  for (const Perm& p : all_perms(4)) CHECK(embed(p.antipode()) == embed(p));
}

TEST_CASE("words") {
  const Word w = Word::parse("1001");
  CHECK(w.size() == 4);
  CHECK(w.contains(1));
  CHECK_FALSE(w.contains(2));
  CHECK(w.count() == 2);
  CHECK(w.complement().str() == "0110");
  CHECK(w.complement().complement() == w);
  CHECK(w.canonical() == w);
  CHECK(Word::parse("0110").canonical() == w);
  CHECK(Word::prefix(4, 2).str() == "1100");
  CHECK_FALSE(Word::parse("0000").proper());
  CHECK_FALSE(Word::parse("1111").proper());
  CHECK_THROWS_AS(Word::parse("10a1"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Word(3, 0b1000), std::invalid_argument);
  CHECK(proper_words(4).size() == 14);

  const Perm p = Perm::parse("2,3,1,4");
  // image {p(1), p(4)} = {2, 4}; preimage {j : p(j) in {1,4}} = {3, 4}
  CHECK(w.image(p).str() == "0101");
  CHECK(w.preimage(p).str() == "0011");
  CHECK(w.image(p).preimage(p) == w);
}

TEST_CASE("word structure") {
  const WordStructure a = word_structure(Word::parse("1001"));
  CHECK(a.slopes == 2);
  CHECK(a.hills == std::vector<Run>{{1, 1}, {4, 4}});
  CHECK(a.valleys == std::vector<Run>{{2, 3}});
  CHECK_FALSE(a.alternating);

  const WordStructure b = word_structure(Word::parse("10101"));
  CHECK(b.slopes == 4);
  CHECK(b.alternating);
  CHECK(word_structure(Word::parse("1110")).slopes == 1);
  CHECK(run_lengths(Word::parse("1100010")) == std::vector<int>{2, 3, 1, 1});
  CHECK_THROWS_AS(word_structure(Word::parse("000")), std::invalid_argument);
  CHECK_THROWS_AS(word_structure(Word::parse("111")), std::invalid_argument);

  for (int n = 2; n <= 7; ++n) {
    for (const Word& u : proper_words(n)) {
      CHECK(word_structure(u).slopes == word_structure(u.complement()).slopes);
      CHECK(static_cast<int>(run_lengths(u).size()) == word_structure(u).slopes + 1);
    }
  }
}

TEST_CASE("symmetric zero-diagonal matrices") {
  SymZMat m(3);
  m.set(2, 1, Rat(5));
  CHECK(m.at(1, 2) == Rat(5));
  CHECK(m.at(2, 1) == Rat(5));
  CHECK(m.at(3, 3) == Rat(0));
  CHECK_THROWS_AS(m.set(2, 2, Rat(1)), std::invalid_argument);
  CHECK_NOTHROW(m.set(2, 2, Rat(0)));
  CHECK_THROWS_AS(SymZMat::from_rows({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymZMat::from_rows({{1, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SymZMat::from_rows({{0, 1, 2}, {1, 0}}), std::invalid_argument);
  CHECK(upper_pairs(4) == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(SymZMat::all_ones(3).upper().size() == 3);
  CHECK(Rat(2) * m - m == m);
}

TEST_CASE("inner product examples") {
  for (int n = 3; n <= 5; ++n) CHECK(inner_product(SymZMat::zero(n), SymZMat::all_ones(n)) == Rat(0));
  CHECK(inner_product(base_certificate("C_1001").matrix, cut_metric(Word::parse("1001"))) == Rat(-4));
  CHECK(inner_product(SymZMat::all_ones(3), embed(Perm::identity(3))) == Rat(8));
  CHECK_THROWS_AS(inner_product(SymZMat(3), SymZMat(4)), std::invalid_argument);
}

TEST_CASE("inner product: symmetric, bilinear, equal to the trace form") {
  auto g = support::make_rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    const SymZMat a = support::random_matrix(g, n);
    const SymZMat b = support::random_matrix(g, n);
    const SymZMat c = support::random_matrix(g, n);
    const Rat s = support::random_rat(g);
    CHECK(inner_product(a, b) == support::trace_product(a, b));
    CHECK(inner_product(a, b) == inner_product(b, a));
    CHECK(inner_product(s * a + c, b) == s * inner_product(a, b) + inner_product(c, b));
  }
}

TEST_CASE("conjugation") {
  const SymZMat m = embed(Perm::identity(3));
  CHECK(conjugate(m, Perm::identity(3)) == m);
  CHECK(conjugate(m, Perm::parse("2,1,3")) == embed(Perm::parse("2,1,3")));
  CHECK_THROWS_AS(conjugate(m, Perm::identity(4)), std::invalid_argument);

  auto g = support::make_rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 4;
    const Perm s = support::random_perm(g, n);
    const RatVec x = support::random_vec(g, n);
    const SymZMat a = support::random_matrix(g, n);
    const SymZMat b = support::random_matrix(g, n);
    CHECK(conjugate(embed(x), s) == embed(support::permuted(x, s)));
    CHECK(conjugate(conjugate(a, s), s.inverse()) == a);
    CHECK(conjugate(a + b, s) == conjugate(a, s) + conjugate(b, s));
    CHECK(inner_product(conjugate(a, s), conjugate(b, s)) == inner_product(a, b));
  }
}
