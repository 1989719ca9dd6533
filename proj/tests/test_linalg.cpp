#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fsc/linalg.hpp"

using fsc::GF;
using fsc::Mat;
using fsc::Rat;
using fsc::Vec;

namespace {

GF g7(long long v) { return GF::make(v, 7); }

template <class S>
Mat<S> from_rows(std::initializer_list<std::initializer_list<S>> rows) {
  Mat<S> m(static_cast<fsc::Index>(rows.size()),
           static_cast<fsc::Index>(rows.begin()->size()));
  fsc::Index i = 0;
  for (const auto& r : rows) {
    fsc::Index j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("Rat arithmetic is exact and normalized") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - a == Rat(0));
  CHECK(a * Rat(3) == Rat(1));
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-4, 8).str() == "-1/2");
  CHECK(Rat(7, 2).floor() == 3);
  CHECK(Rat(7, 2).ceil() == 4);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).ceil() == -3);
  CHECK(Rat(6, 3).is_integer());
}

TEST_CASE("GF arithmetic, inverses and literal coercion") {
  CHECK(g7(3) + g7(5) == g7(1));
  CHECK(g7(3) * g7(5) == g7(1));
  CHECK(g7(1) / g7(3) == g7(5));
  CHECK(-g7(1) == g7(6));
  // bare literals adopt the partner's modulus
  CHECK(g7(3) + GF(11) == g7(0));
  CHECK(GF(0) == g7(7));
  // mixed moduli must refuse
  CHECK_THROWS_AS((void)(g7(1) + GF::make(1, 5)), fsc::input_error);
}

TEST_CASE("rref canonical forms") {
  SUBCASE("identity is fixed") {
    Mat<Rat> id = from_rows<Rat>({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    auto rr = fsc::rref(id);
    CHECK(rr.pivots == std::vector<fsc::Index>{0, 1});
    CHECK(rr.mat == id);
  }
  SUBCASE("[[2,4]] over F_5 scales to [[1,2]]") {
    Mat<GF> m = from_rows<GF>({{GF::make(2, 5), GF::make(4, 5)}});
    auto rr = fsc::rref(m);
    CHECK(rr.mat(0, 0) == GF::make(1, 5));
    CHECK(rr.mat(0, 1) == GF::make(2, 5));
  }
  SUBCASE("rank-1 duplicate rows") {
    Mat<Rat> m = from_rows<Rat>({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}});
    auto rr = fsc::rref(m);
    CHECK(rr.pivots == std::vector<fsc::Index>{0});
    CHECK(rr.mat(1, 0) == Rat(0));
    CHECK(rr.mat(1, 1) == Rat(0));
  }
  SUBCASE("idempotent") {
    Mat<Rat> m = from_rows<Rat>(
        {{Rat(2), Rat(4), Rat(1)}, {Rat(1), Rat(2), Rat(3)}, {Rat(3), Rat(6), Rat(4)}});
    auto r1 = fsc::rref(m);
    auto r2 = fsc::rref(r1.mat);
    CHECK(r1.mat == r2.mat);
    CHECK(r1.pivots == r2.pivots);
  }
}

TEST_CASE("nullspace dimensions and exactness") {
  SUBCASE("identity has empty kernel") {
    Mat<Rat> id = Mat<Rat>::Identity(3, 3);
    CHECK(fsc::nullspace(id).cols() == 0);
  }
  SUBCASE("zero 1x3 has full kernel") {
    Mat<Rat> z(1, 3);
    z.setConstant(Rat(0));
    CHECK(fsc::nullspace(z).cols() == 3);
  }
  SUBCASE("[[1,2,3]] has 2-dim kernel, M v = 0 exactly") {
    Mat<Rat> m = from_rows<Rat>({{Rat(1), Rat(2), Rat(3)}});
    Mat<Rat> n = fsc::nullspace(m);
    REQUIRE(n.cols() == 2);
    Mat<Rat> prod = m * n;
    for (fsc::Index i = 0; i < prod.rows(); ++i)
      for (fsc::Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == Rat(0));
    // canonical convention: first free column is column 1
    CHECK(n(1, 0) == Rat(1));
    CHECK(n(0, 0) == Rat(-2));
    CHECK(n(2, 0) == Rat(0));
  }
}

TEST_CASE("solve: canonical solution or NONE") {
  SUBCASE("identity reproduces b") {
    Mat<Rat> id = Mat<Rat>::Identity(2, 2);
    Vec<Rat> b(2);
    b << Rat(5), Rat(-3);
    auto x = fsc::solve(id, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == Rat(5));
    CHECK((*x)(1) == Rat(-3));
  }
  SUBCASE("[[0]] x = [1] is inconsistent") {
    Mat<Rat> m(1, 1);
    m(0, 0) = Rat(0);
    Vec<Rat> b(1);
    b(0) = Rat(1);
    CHECK(!fsc::solve(m, b).has_value());
  }
  SUBCASE("[[1,1]] x = [2] over F_3 gives [2,0]") {
    Mat<GF> m(1, 2);
    m(0, 0) = GF::make(1, 3);
    m(0, 1) = GF::make(1, 3);
    Vec<GF> b(1);
    b(0) = GF::make(2, 3);
    auto x = fsc::solve(m, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == GF::make(2, 3));
    CHECK((*x)(1) == GF::make(0, 3));
  }
  SUBCASE("dimension mismatch throws") {
    Mat<Rat> m(2, 2);
    m.setConstant(Rat(1));
    Vec<Rat> b(3);
    b.setConstant(Rat(1));
    CHECK_THROWS_AS((void)fsc::solve(m, b), fsc::input_error);
  }
}

TEST_CASE("random property sweep: rank-nullity, kernel, substitution") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> dim(1, 8), val(-4, 4);
  for (int iter = 0; iter < 40; ++iter) {
    const fsc::Index r = dim(rng), c = dim(rng);
    Mat<Rat> mq(r, c);
    Mat<GF> mp(r, c);
    for (fsc::Index i = 0; i < r; ++i)
      for (fsc::Index j = 0; j < c; ++j) {
        int v = val(rng);
        mq(i, j) = Rat(v);
        mp(i, j) = GF::make(v, 13);
      }
    auto nq = fsc::nullspace(mq);
    auto np = fsc::nullspace(mp);
    CHECK(fsc::rank(mq) + nq.cols() == c);
    CHECK(fsc::rank(mp) + np.cols() == c);
    if (nq.cols() > 0) {
      Mat<Rat> prod = mq * nq;
      for (fsc::Index i = 0; i < prod.rows(); ++i)
        for (fsc::Index j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == Rat(0));
    }
    // b in the column span must be solvable, and the solution must substitute
    Vec<Rat> coeff(c);
    for (fsc::Index j = 0; j < c; ++j) coeff(j) = Rat(val(rng));
    Vec<Rat> b = mq * coeff;
    auto x = fsc::solve(mq, b);
    REQUIRE(x.has_value());
    Vec<Rat> back = mq * *x;
    for (fsc::Index i = 0; i < r; ++i) CHECK(back(i) == b(i));
  }
}
