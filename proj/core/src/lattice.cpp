#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace toric {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.rank() != rank()) throw DomainError("rank mismatch in vector addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.rank() != rank()) throw DomainError("rank mismatch in vector subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) return a.rank() <=> b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.to_string(); }

Integer dot(const LatticeVector& m, const LatticeVector& n) {
  if (m.rank() != n.rank()) throw DomainError("rank mismatch in pairing");
  Integer s = 0;
  for (std::size_t i = 0; i < m.rank(); ++i) s += m[i] * n[i];
  return s;
}

Covector::Covector(const LatticeVector& integral) {
  coords_.reserve(integral.rank());
  for (const auto& c : integral) coords_.emplace_back(c);
}

Rational Covector::pair(const LatticeVector& n) const {
  if (n.rank() != rank()) throw DomainError("rank mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += coords_[i] * Rational(n[i]);
  return s;
}

Integer Covector::denominator() const {
  Integer l = 1;
  for (const auto& c : coords_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

LatticeVector Covector::scaled_to_integral() const {
  Integer k = denominator();
  std::vector<Integer> out;
  out.reserve(rank());
  for (const auto& c : coords_) {
    Rational s = c * Rational(k);
    out.emplace_back(s.get_num());
  }
  return LatticeVector(std::move(out));
}

std::string Covector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rank() != cols) throw DomainError("row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(rows.size(), cols);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols) throw DomainError("ragged matrix literal");
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  LatticeVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

LatticeVector IntMatrix::col(std::size_t j) const {
  LatticeVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LatticeVector IntMatrix::apply(const LatticeVector& v) const {
  if (v.rank() != cols_) throw DomainError("matrix/vector size mismatch");
  LatticeVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DomainError("inverse of a non-square matrix");
  Integer det = determinant(a);
  if (det != 1 && det != -1) throw DomainError("matrix is not unimodular");
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a(i, j);
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j].get_num();
  return inv;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = v.content();
  if (g == 0) throw DomainError("primitive: zero vector " + v.to_string());
  LatticeVector out(v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < m; ++c) {
    while (true) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (piv == m || mpz_cmpabs(h(i, c).get_mpz_t(), h(piv, c).get_mpz_t()) < 0) piv = i;
      }
      if (piv == m) break;
      h.swap_rows(r, piv);
      u.swap_rows(r, piv);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = floor_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix d = a;
  IntMatrix p = IntMatrix::identity(m);
  IntMatrix q = IntMatrix::identity(n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pi == m || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == m) break;
      found = true;
      d.swap_rows(t, pi);
      p.swap_rows(t, pi);
      d.swap_cols(t, pj);
      q.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer f = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -f);
        p.add_row_multiple(i, t, -f);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer f = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -f);
        q.add_col_multiple(j, t, -f);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) continue;
          d.add_row_multiple(t, i, 1);
          p.add_row_multiple(t, i, 1);
          divisible = false;
          break;
        }
      if (divisible) break;
    }
    if (!found) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      p.negate_row(t);
    }
  }
  SmithForm out{std::move(d), std::move(p), std::move(q), 0};
  while (out.rank < std::min(m, n) && out.d(out.rank, out.rank) != 0) ++out.rank;
  return out;
}

Integer lattice_determinant(std::span<const LatticeVector> vs) {
  if (vs.empty()) return 1;
  SmithForm s = smith_normal_form(IntMatrix::from_rows(vs, vs.front().rank()));
  if (s.rank != vs.size()) throw DomainError("lattice_determinant: vectors are linearly dependent");
  Integer prod = 1;
  for (const auto& f : s.invariant_factors()) prod *= f;
  return prod;
}

std::size_t rank_of(std::span<const LatticeVector> vs) {
  if (vs.empty()) return 0;
  return smith_normal_form(IntMatrix::from_rows(vs, vs.front().rank())).rank;
}

LatticeVector SpanLattice::coordinates(const LatticeVector& x) const {
  LatticeVector c(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < x.rank(); ++i) s += x[i] * to_coords(i, j);
    c[j] = s;
  }
  return c;
}

LatticeVector SpanLattice::lift(const LatticeVector& c) const {
  LatticeVector x(basis.cols());
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < basis.cols(); ++i) x[i] += c[j] * basis(j, i);
  return x;
}

LatticeVector SpanLattice::lift_functional(const LatticeVector& a) const {
  LatticeVector w(to_coords.rows());
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < to_coords.rows(); ++i) w[i] += a[j] * to_coords(i, j);
  return w;
}

std::vector<LatticeVector> SpanLattice::orthogonal() const {
  std::vector<LatticeVector> out;
  for (std::size_t j = dim; j < to_coords.cols(); ++j) out.push_back(to_coords.col(j));
  return out;
}

SpanLattice span_lattice(std::span<const LatticeVector> vs, std::size_t rank) {
  SpanLattice out;
  if (vs.empty()) {
    out.basis = IntMatrix::identity(rank);
    out.to_coords = IntMatrix::identity(rank);
    return out;
  }
  SmithForm s = smith_normal_form(IntMatrix::from_rows(vs, rank));
  out.dim = s.rank;
  out.to_coords = s.q;
  out.basis = unimodular_inverse(s.q);
  return out;
}

LatticeVector normal_vector(std::span<const LatticeVector> vs) {
  const std::size_t d = vs.size() + 1;
  LatticeVector n(d);
  if (d == 2) {
    n[0] = -vs[0][1];
    n[1] = vs[0][0];
    return n.is_zero() ? n : primitive(n);
  }
  if (d == 3) {
    const auto& a = vs[0];
    const auto& b = vs[1];
    n[0] = a[1] * b[2] - a[2] * b[1];
    n[1] = a[2] * b[0] - a[0] * b[2];
    n[2] = a[0] * b[1] - a[1] * b[0];
    return n.is_zero() ? n : primitive(n);
  }
  for (std::size_t skip = 0; skip < d; ++skip) {
    IntMatrix minor(d - 1, d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      std::size_t cj = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == skip) continue;
        minor(i, cj++) = vs[i][j];
      }
    }
    Integer det = determinant(minor);
    n[skip] = (skip % 2 == 0) ? det : Integer(-det);
  }
  if (n.is_zero()) return n;
  return primitive(n);
}

std::optional<std::vector<Rational>> solve_rational(std::span<const LatticeVector> rows,
                                                    std::span<const Rational> rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = m ? rows.front().rank() : 0;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
    a[i][n] = rhs[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][n] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = a[i][n];
  return x;
}

std::vector<LatticeVector> integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<LatticeVector> out;
  for (std::size_t j = s.rank; j < a.cols(); ++j) out.push_back(s.q.col(j));
  return out;
}

}  // namespace toric
