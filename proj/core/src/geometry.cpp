#include "tperf/geometry.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>

#include "tperf/error.hpp"
#include "tperf/graph.hpp"
#include "tperf/lp.hpp"

namespace tperf {

namespace {

constexpr std::array<std::pair<RowKind, const char*>, 8> kKindNames{{
    {RowKind::Nonnegativity, "nonneg"},
    {RowKind::Edge, "edge"},
    {RowKind::Clique, "clique"},
    {RowKind::OddCycle, "oddcycle"},
    {RowKind::Bound, "bound"},
    {RowKind::Facet, "facet"},
    {RowKind::Equality, "equality"},
    {RowKind::Other, "other"},
}};

using IntVec = std::vector<Integer>;

void make_primitive(IntVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Scales a rational row to a primitive integer row with the same sign.
IntVec integer_row(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  make_primitive(out);
  return out;
}

Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<QVec>& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<QVec> null_space(std::vector<QVec> m, int cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Inverse of a square nonsingular matrix.
std::vector<QVec> inverse(const std::vector<QVec>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<QVec> aug(n, QVec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  rref(aug, n);
  std::vector<QVec> inv(n, QVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace

std::string to_string(RowKind kind) {
  for (auto [k, name] : kKindNames)
    if (k == kind) return name;
  return "other";
}

RowKind parse_row_kind(const std::string& name) {
  for (auto [k, n] : kKindNames)
    if (name == n) return k;
  throw ParseError("unknown row kind '" + name + "'", 0);
}

Rational parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view num = text.substr(0, slash);
  if (!valid_int(num, true)) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  std::string n(num[0] == '+' ? num.substr(1) : num);
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(Integer(n));
  } else {
    std::string_view den = text.substr(slash + 1);
    if (!valid_int(den, false) || std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; }))
      throw ParseError("malformed rational '" + std::string(text) + "'", slash + 1);
    q = Rational(Integer(n), Integer(std::string(den)));
    q.canonicalize();
  }
  return q;
}

int rank(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(rref(rows, static_cast<int>(rows.front().size())).size());
}

std::vector<std::vector<Integer>> extreme_rays(int dim, std::vector<std::vector<Integer>> rows) {
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw PreconditionError("row dimension mismatch");
    make_primitive(r);
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const IntVec& r) {
                              return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
                            }),
             rows.end());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const std::size_t m = rows.size();

  // Greedy basis of dim independent rows, in sorted order.
  std::vector<std::size_t> basis;
  {
    std::vector<QVec> chosen;
    for (std::size_t i = 0; i < m && static_cast<int>(basis.size()) < dim; ++i) {
      std::vector<QVec> trial = chosen;
      trial.emplace_back(rows[i].begin(), rows[i].end());
      if (rank(trial) == static_cast<int>(trial.size())) {
        chosen = std::move(trial);
        basis.push_back(i);
      }
    }
    if (static_cast<int>(basis.size()) < dim) throw Unbounded("cone is not pointed");
  }

  struct Ray {
    IntVec coords;
    Bitset zeros;
  };
  std::vector<Ray> rays;
  {
    std::vector<QVec> b;
    for (auto i : basis) b.emplace_back(rows[i].begin(), rows[i].end());
    auto inv = inverse(b);
    for (int j = 0; j < dim; ++j) {
      QVec col(dim);
      for (int i = 0; i < dim; ++i) col[i] = inv[i][j];
      Ray r{integer_row(col), Bitset(m)};
      for (int k = 0; k < dim; ++k)
        if (k != j) r.zeros.set(basis[k]);
      rays.push_back(std::move(r));
    }
  }

  Bitset in_basis(m);
  for (auto i : basis) in_basis.set(i);
  for (std::size_t k = 0; k < m; ++k) {
    if (in_basis[k]) continue;
    const IntVec& h = rows[k];
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(h, rays[i].coords);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
      else rays[i].zeros.set(k);
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].zeros & rays[q].zeros;
        if (static_cast<int>(common.count()) < dim - 2) continue;
        // Combinatorial adjacency: no third ray is zero on all of `common`.
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && common.is_subset_of(rays[t].zeros)) adjacent = false;
        if (!adjacent) continue;
        Ray r{IntVec(dim), common};
        Integer vp = val[p], vq = -val[q];
        for (int c = 0; c < dim; ++c) r.coords[c] = vp * rays[q].coords[c] + vq * rays[p].coords[c];
        make_primitive(r.coords);
        r.zeros.set(k);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.coords));
  std::sort(out.begin(), out.end());
  return out;
}

VRep enumerate_vertices(const HPolytope& p) {
  const int d = p.dim;
  std::vector<IntVec> rows;
  rows.reserve(p.rows.size() + 1);
  for (const auto& ineq : p.rows) {
    if (static_cast<int>(ineq.coeffs.size()) != d) throw PreconditionError("row dimension mismatch");
    // rhs * x0 - coeffs . x >= 0
    QVec h;
    h.reserve(d + 1);
    h.push_back(ineq.rhs);
    for (const auto& c : ineq.coeffs) h.push_back(-c);
    rows.push_back(integer_row(h));
  }
  IntVec x0(d + 1, 0);
  x0[0] = 1;
  rows.push_back(std::move(x0));

  VRep out;
  out.dim = d;
  for (const auto& ray : extreme_rays(d + 1, std::move(rows))) {
    if (ray[0] == 0) throw Unbounded("polytope has a recession direction");
    QVec v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = Rational(ray[i + 1], ray[0]);
      v[i].canonicalize();
    }
    out.vertices.push_back(std::move(v));
  }
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
  return out;
}

bool contains(const HPolytope& p, const QVec& x) {
  for (const auto& r : p.rows)
    if (dot(r.coeffs, x) > r.rhs) return false;
  return true;
}

std::vector<int> tight_rows(const HPolytope& p, const QVec& x) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.rows.size(); ++i)
    if (dot(p.rows[i].coeffs, x) == p.rows[i].rhs) out.push_back(static_cast<int>(i));
  return out;
}

bool is_vertex(const HPolytope& p, const QVec& x) {
  if (static_cast<int>(x.size()) != p.dim || !contains(p, x)) return false;
  std::vector<QVec> tight;
  for (int i : tight_rows(p, x)) tight.push_back(p.rows[i].coeffs);
  return rank(std::move(tight)) == p.dim;
}

HPolytope remove_redundant(const HPolytope& p) {
  HPolytope kept = p;
  for (std::size_t i = 0; i < kept.rows.size();) {
    HPolytope others{kept.dim, {}};
    for (std::size_t j = 0; j < kept.rows.size(); ++j)
      if (j != i) others.rows.push_back(kept.rows[j]);
    bool redundant = false;
    try {
      redundant = lp_optimize(others, kept.rows[i].coeffs, Sense::Maximize).value <= kept.rows[i].rhs;
    } catch (const Unbounded&) {
    } catch (const Infeasible&) {
    }
    if (redundant) kept.rows.erase(kept.rows.begin() + static_cast<std::ptrdiff_t>(i));
    else ++i;
  }
  return kept;
}

HPolytope hull_of_points(int dim, const std::vector<QVec>& points) {
  if (points.empty()) throw PreconditionError("hull of no points");
  // Unknown (b, a): the inequality a . x <= b is valid iff b - a . p >= 0.
  std::vector<QVec> m;
  for (const auto& pt : points) {
    if (static_cast<int>(pt.size()) != dim) throw PreconditionError("point dimension mismatch");
    QVec row{1};
    for (const auto& c : pt) row.push_back(-c);
    m.push_back(std::move(row));
  }
  auto lineality = null_space(m, dim + 1);
  std::vector<IntVec> rows;
  for (const auto& r : m) rows.push_back(integer_row(r));
  for (const auto& l : lineality) {
    IntVec v = integer_row(l);
    rows.push_back(v);
    for (auto& x : v) x = -x;
    rows.push_back(std::move(v));
  }

  HPolytope out{dim, {}};
  for (const auto& ray : extreme_rays(dim + 1, rows)) {
    bool touches = false;
    for (const auto& r : m) {
      Rational exact = 0;
      for (int c = 0; c <= dim; ++c) exact += Rational(ray[c]) * r[c];
      if (exact == 0) {
        touches = true;
        break;
      }
    }
    // What remains of the trivial row 0 <= 1 is tight at no point.
    if (!touches) continue;
    Inequality ineq;
    ineq.rhs = Rational(ray[0]);
    for (int c = 1; c <= dim; ++c) ineq.coeffs.push_back(Rational(ray[c]));
    ineq.kind = RowKind::Facet;
    out.rows.push_back(std::move(ineq));
  }
  for (const auto& l : lineality) {
    Inequality up, down;
    up.rhs = l[0];
    down.rhs = -l[0];
    for (int c = 1; c <= dim; ++c) {
      up.coeffs.push_back(l[c]);
      down.coeffs.push_back(-l[c]);
    }
    up.kind = down.kind = RowKind::Equality;
    out.rows.push_back(std::move(up));
    out.rows.push_back(std::move(down));
  }
  return out;
}

void write_hpolytope(std::ostream& out, const HPolytope& p) {
  out << "hpolytope " << p.dim << ' ' << p.rows.size() << '\n';
  for (const auto& r : p.rows) {
    out << to_string(r.kind) << ' ' << r.support.size();
    for (int s : r.support) out << ' ' << s;
    out << " |";
    for (const auto& c : r.coeffs) out << ' ' << to_fraction_string(c);
    out << " <= " << to_fraction_string(r.rhs) << '\n';
  }
}

void write_vrep(std::ostream& out, const VRep& v) {
  out << "vrep " << v.dim << ' ' << v.vertices.size() << '\n';
  for (const auto& x : v.vertices) {
    for (std::size_t i = 0; i < x.size(); ++i) out << (i ? " " : "") << to_fraction_string(x[i]);
    out << '\n';
  }
}

namespace {

std::string expect_token(std::istream& in, std::size_t line) {
  std::string t;
  if (!(in >> t)) throw ParseError("unexpected end of input", line);
  return t;
}

long long expect_count(std::istream& in, std::size_t line) {
  std::string t = expect_token(in, line);
  try {
    std::size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size() || v < 0) throw ParseError("bad count '" + t + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad count '" + t + "'", line);
  }
}

}  // namespace

HPolytope read_hpolytope(std::istream& in) {
  if (expect_token(in, 0) != "hpolytope") throw ParseError("expected 'hpolytope'", 0);
  HPolytope p;
  p.dim = static_cast<int>(expect_count(in, 0));
  long long n = expect_count(in, 0);
  for (long long i = 1; i <= n; ++i) {
    const std::size_t line = static_cast<std::size_t>(i);
    Inequality r;
    r.kind = parse_row_kind(expect_token(in, line));
    long long k = expect_count(in, line);
    for (long long j = 0; j < k; ++j) r.support.push_back(static_cast<int>(expect_count(in, line)));
    if (expect_token(in, line) != "|") throw ParseError("expected '|'", line);
    for (int j = 0; j < p.dim; ++j) r.coeffs.push_back(parse_rational(expect_token(in, line)));
    if (expect_token(in, line) != "<=") throw ParseError("expected '<='", line);
    r.rhs = parse_rational(expect_token(in, line));
    p.rows.push_back(std::move(r));
  }
  return p;
}

VRep read_vrep(std::istream& in) {
  if (expect_token(in, 0) != "vrep") throw ParseError("expected 'vrep'", 0);
  VRep v;
  v.dim = static_cast<int>(expect_count(in, 0));
  long long n = expect_count(in, 0);
  for (long long i = 1; i <= n; ++i) {
    QVec x;
    for (int j = 0; j < v.dim; ++j) x.push_back(parse_rational(expect_token(in, static_cast<std::size_t>(i))));
    v.vertices.push_back(std::move(x));
  }
  return v;
}

std::string to_text(const HPolytope& p) {
  std::ostringstream s;
  write_hpolytope(s, p);
  return s.str();
}

std::string to_text(const VRep& v) {
  std::ostringstream s;
  write_vrep(s, v);
  return s.str();
}

}  // namespace tperf
