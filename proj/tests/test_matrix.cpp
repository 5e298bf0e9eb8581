#include <doctest.h>

#include <random>

#include "suppcode/construct.hpp"
#include "suppcode/matrix.hpp"
#include "suppcode/projective.hpp"

using namespace suppcode;

TEST_CASE("rank of identity and zero matrices") {
  FieldPtr f2 = Field::make(2);
  CHECK(Matrix::identity(f2, 3).rank() == 3);
  CHECK(Matrix(f2, 3, 5).rank() == 0);
}

TEST_CASE("kernel basis spans the null space") {
  FieldPtr f2 = Field::make(2);
  const Matrix h3 = hamming_pcm(f2, 3);
  const Matrix ker = h3.kernel_basis();
  CHECK(ker.rows() == 4);  // k = n - m = 7 - 3
  for (int i = 0; i < ker.rows(); ++i) {
    const std::vector<int> row = ker.row(i);
    for (int v : h3.mul_vec(row)) CHECK(v == 0);
  }
  CHECK(Matrix::identity(f2, 4).kernel_basis().rows() == 0);

  const Matrix single = Matrix::from_rows(f2, {{1, 1}});
  const Matrix k1 = single.kernel_basis();
  REQUIRE(k1.rows() == 1);
  CHECK(k1.row(0) == std::vector<int>{1, 1});
}

TEST_CASE("rank equals rank of the transpose on random matrices") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 40; ++trial) {
    FieldPtr f = Field::make(trial % 2 ? 2 : 3);
    const int r = 1 + static_cast<int>(rng() % 5);
    const int c = 1 + static_cast<int>(rng() % 7);
    Matrix m(f, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.set(i, j, static_cast<int>(rng() % f->q()));
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("inverse multiplies back to the identity") {
  FieldPtr f3 = Field::make(3);
  const Matrix m = Matrix::from_rows(f3, {{1, 2, 0}, {0, 1, 1}, {2, 0, 1}});
  REQUIRE(m.rank() == 3);
  CHECK(m * m.inverse() == Matrix::identity(f3, 3));
  CHECK_THROWS(Matrix(f3, 2, 2).inverse());
}

TEST_CASE("projective normalization matches the worked example") {
  FieldPtr f3 = Field::make(3);
  const std::vector<int> v{0, 2, 1};
  const NormalizedPoint np = normalize_point(*f3, v);
  CHECK(np.scale == 2);
  CHECK(point_vector(*f3, 3, np.index) == std::vector<int>{0, 1, 2});
}

TEST_CASE("binary points are self-canonical") {
  FieldPtr f2 = Field::make(2);
  const std::vector<int> v{1, 0, 1};
  const NormalizedPoint np = normalize_point(*f2, v);
  CHECK(np.scale == 1);
  CHECK(point_vector(*f2, 3, np.index) == v);
}

TEST_CASE("point counts match (q^m-1)/(q-1)") {
  CHECK(projective_count(3, 2) == 4);
  CHECK(projective_count(2, 3) == 7);
  CHECK(projective_count(3, 5) == 121);
}

TEST_CASE("point enumeration is a bijection and normalization is idempotent") {
  for (auto [p, e, m] : {std::tuple{2, 1, 4}, {3, 1, 3}, {2, 2, 2}}) {
    FieldPtr f = Field::make(p, e);
    const long long n = projective_count(f->q(), m);
    for (long long i = 0; i < n; ++i) {
      const std::vector<int> v = point_vector(*f, m, i);
      const NormalizedPoint np = normalize_point(*f, v);
      CHECK(np.index == i);
      CHECK(np.scale == 1);
      // all scalar multiples collapse onto the same point
      for (int lambda = 2; lambda < f->q(); ++lambda) {
        std::vector<int> w(v.size());
        for (size_t t = 0; t < v.size(); ++t) w[t] = f->mul(lambda, v[t]);
        const NormalizedPoint np2 = normalize_point(*f, w);
        CHECK(np2.index == i);
        CHECK(np2.scale == lambda);
      }
    }
  }
}

TEST_CASE("point order is ascending base-q value with row 0 most significant") {
  FieldPtr f2 = Field::make(2);
  long long prev = -1;
  for (long long i = 0; i < projective_count(2, 3); ++i) {
    const long long val = vector_value(2, point_vector(*f2, 3, i));
    CHECK(val > prev);
    prev = val;
  }
  CHECK(prev == 7);  // binary: representatives are exactly 1..7
}

TEST_CASE("zero vector cannot be normalized") {
  FieldPtr f2 = Field::make(2);
  const std::vector<int> z{0, 0, 0};
  CHECK_THROWS_AS(normalize_point(*f2, z), std::invalid_argument);
}

TEST_CASE("the weight-4 column matrix has rank 6") {
  const Matrix h74 = binomial_7_4_pcm();
  CHECK(h74.rows() == 7);
  CHECK(h74.cols() == 35);
  CHECK(h74.rank() == 6);
}
