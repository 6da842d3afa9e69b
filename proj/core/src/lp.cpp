#include "tperf/lp.hpp"

#include "tperf/error.hpp"

namespace tperf {

namespace {

// Tableau layout: rows 0..m-1 constraints, row m objective, row m+1 the
// phase-one objective. Column n is the artificial variable, n+1 the rhs.
// basic[i] / nonbasic[j] hold variable ids: 0..n-1 structural, n..n+m-1
// slack, -1 artificial.
class Tableau {
 public:
  Tableau(const std::vector<QVec>& a, const QVec& b, const QVec& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        d_(m_ + 2, QVec(n_ + 2, 0)),
        basic_(m_),
        nonbasic_(n_ + 1) {
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(a[i].size()) != n_) throw PreconditionError("constraint width mismatch");
      for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
      basic_[i] = n_ + i;
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  LpResult solve() {
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    if (m_ > 0 && d_[r][n_ + 1] < 0) {
      pivot(r, n_);
      if (!run(true) || d_[m_ + 1][n_ + 1] < 0) throw Infeasible("linear program is infeasible");
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        // Drive the artificial variable out on any nonzero entry.
        int s = -1;
        for (int j = 0; j <= n_; ++j)
          if (d_[i][j] != 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
        if (s >= 0) pivot(i, s);
      }
    }
    if (!run(false)) throw Unbounded("linear program is unbounded");
    LpResult out;
    out.point.assign(n_, 0);
    for (int i = 0; i < m_; ++i)
      if (basic_[i] >= 0 && basic_[i] < n_) out.point[basic_[i]] = d_[i][n_ + 1];
    out.value = d_[m_][n_ + 1];
    out.dual.assign(m_, 0);
    for (int j = 0; j <= n_; ++j)
      if (nonbasic_[j] >= n_) out.dual[nonbasic_[j] - n_] = d_[m_][j];
    return out;
  }

 private:
  void pivot(int r, int s) {
    const Rational inv = 1 / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || d_[i][s] == 0) continue;
      const Rational f = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j)
        if (j != s && d_[r][j] != 0) d_[i][j] -= d_[r][j] * f;
      d_[i][s] = -f;
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s) d_[r][j] *= inv;
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland's rule: entering variable is the lowest id with negative reduced
  // cost; ties in the ratio test go to the lowest basic id.
  bool run(bool phase_one) {
    const int x = phase_one ? m_ + 1 : m_;
    while (true) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (!phase_one && nonbasic_[j] == -1) continue;
        if (d_[x][j] < 0 && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= 0) continue;
        Rational ratio = d_[i][n_ + 1] / d_[i][s];
        if (r == -1 || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_, n_;
  std::vector<QVec> d_;
  std::vector<int> basic_, nonbasic_;
};

// Row of the form -x_i <= 0.
int nonnegativity_index(const Inequality& row) {
  if (row.rhs != 0) return -1;
  int idx = -1;
  for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
    if (row.coeffs[j] == 0) continue;
    if (idx != -1 || row.coeffs[j] >= 0) return -1;
    idx = static_cast<int>(j);
  }
  return idx;
}

}  // namespace

LpResult simplex_max(const std::vector<QVec>& a, const QVec& b, const QVec& c) {
  if (a.size() != b.size()) throw PreconditionError("constraint count mismatch");
  return Tableau(a, b, c).solve();
}

LpResult lp_optimize(const HPolytope& p, const QVec& objective, Sense sense) {
  const int d = p.dim;
  if (static_cast<int>(objective.size()) != d) throw PreconditionError("objective dimension mismatch");
  std::vector<bool> nonneg(d, false);
  std::vector<const Inequality*> rest;
  for (const auto& row : p.rows) {
    int i = nonnegativity_index(row);
    if (i >= 0) nonneg[i] = true;
    else rest.push_back(&row);
  }
  // Column layout: one column per variable, plus a negative-part column for
  // every variable lacking a sign constraint.
  std::vector<int> negative_col(d, -1);
  int cols = d;
  for (int i = 0; i < d; ++i)
    if (!nonneg[i]) negative_col[i] = cols++;

  std::vector<QVec> a;
  QVec b;
  for (const auto* row : rest) {
    QVec line(cols, 0);
    for (int i = 0; i < d; ++i) {
      line[i] = row->coeffs[i];
      if (negative_col[i] >= 0) line[negative_col[i]] = -row->coeffs[i];
    }
    a.push_back(std::move(line));
    b.push_back(row->rhs);
  }
  QVec c(cols, 0);
  const Rational sign = sense == Sense::Maximize ? 1 : -1;
  for (int i = 0; i < d; ++i) {
    c[i] = sign * objective[i];
    if (negative_col[i] >= 0) c[negative_col[i]] = -c[i];
  }
  LpResult raw = simplex_max(a, b, c);
  LpResult out;
  out.value = sign * raw.value;
  out.point.assign(d, 0);
  for (int i = 0; i < d; ++i) {
    out.point[i] = raw.point[i];
    if (negative_col[i] >= 0) out.point[i] -= raw.point[negative_col[i]];
  }
  return out;
}

bool in_convex_hull(const std::vector<QVec>& points, const QVec& x) {
  if (points.empty()) return false;
  // Feasibility of sum l_k p_k = x, sum l_k = 1, l >= 0, as inequality pairs.
  const std::size_t k = points.size();
  std::vector<QVec> a;
  QVec b;
  for (std::size_t i = 0; i <= x.size(); ++i) {
    QVec row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = i < x.size() ? points[j][i] : Rational(1);
    const Rational rhs = i < x.size() ? x[i] : Rational(1);
    a.push_back(row);
    b.push_back(rhs);
    for (auto& v : row) v = -v;
    a.push_back(std::move(row));
    b.push_back(-rhs);
  }
  try {
    simplex_max(a, b, QVec(k, 0));
    return true;
  } catch (const Infeasible&) {
    return false;
  }
}

}  // namespace tperf
