#include "octodp/rational_lp.hpp"

#include "octodp/error.hpp"

namespace octodp {

namespace {

// Dense tableau for  max c^T x  s.t.  T x + s = b, x, s >= 0, with b >= 0 so
// the slack basis is feasible from the start.
class Tableau {
 public:
  Tableau(const RatMatrix& constraints, const std::vector<Rational>& rhs,
          const std::vector<Rational>& objective)
      : m_(constraints.rows()),
        n_(constraints.cols()),
        width_(n_ + m_ + 1),
        cells_((m_ + 1) * width_),
        basis_(m_) {
    for (std::size_t r = 0; r < m_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) at(r, c) = constraints(r, c);
      at(r, n_ + r) = 1;
      at(r, width_ - 1) = rhs[r];
      basis_[r] = n_ + r;
    }
    // Objective row holds reduced costs -c.
    for (std::size_t c = 0; c < n_; ++c) at(m_, c) = -objective[c];
  }

  void optimize() {
    for (;;) {
      std::size_t enter = width_;
      for (std::size_t c = 0; c + 1 < width_; ++c) {
        if (at(m_, c) < 0) {
          enter = c;
          break;
        }
      }
      if (enter == width_) return;
      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (at(r, enter) <= 0) continue;
        const Rational ratio = at(r, width_ - 1) / at(r, enter);
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == m_) throw InvariantError("simplex: objective unbounded");
      pivot(leave, enter);
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = at(r, width_ - 1);
    }
    return x;
  }

 private:
  Rational& at(std::size_t r, std::size_t c) { return cells_[r * width_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r * width_ + c]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / at(row, col);
    for (std::size_t c = 0; c < width_; ++c) at(row, c) *= inv;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const Rational f = at(r, col);
      for (std::size_t c = 0; c < width_; ++c) {
        if (at(row, c) != 0) at(r, c) -= f * at(row, c);
      }
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<Rational> cells_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> strictly_positive_point(const RatMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Variables: w+ (n), w- (n), t. Rows: -A w+ + A w- + t <= 0, then t <= 1.
  RatMatrix t(m + 1, 2 * n + 1);
  std::vector<Rational> rhs(m + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      t(r, c) = -a(r, c);
      t(r, n + c) = a(r, c);
    }
    t(r, 2 * n) = 1;
  }
  t(m, 2 * n) = 1;
  rhs[m] = 1;
  std::vector<Rational> objective(2 * n + 1);
  objective[2 * n] = 1;

  Tableau tableau(t, rhs, objective);
  tableau.optimize();
  const auto x = tableau.solution();
  if (x[2 * n] <= 0) return std::nullopt;
  std::vector<Rational> w(n);
  for (std::size_t c = 0; c < n; ++c) w[c] = x[c] - x[n + c];
  return w;
}

}  // namespace octodp
