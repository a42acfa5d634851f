#include <algorithm>

#include "twist/chevalley.hpp"

// Structure constant generation. Positive-pair constants N_{a,b} are built by
// height induction from the extraspecial pairs (Jacobi identities determine
// every other sign), mixed-sign constants follow from the coroot relations,
// and the commutator tail constants are extracted from the adjoint action of
// the rank-two subalgebra spanned by the pair, with the scalars (t, u) kept
// as polynomial indeterminates.

namespace twist {

namespace {

Root add_roots(const Root& a, const Root& b) {
  Root s = a;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] += b.coeffs[i];
  return s;
}

Root sub_roots(const Root& a, const Root& b) {
  Root s = a;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) s.coeffs[i] -= b.coeffs[i];
  return s;
}

Root scale_root(const Root& a, int k) {
  Root s = a;
  for (int& c : s.coeffs) c *= k;
  return s;
}

bool is_positive(const Root& r) {
  bool nonzero = false;
  for (int c : r.coeffs) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

// Down string length: max k >= 0 with b - k*a in Phi.
int string_down(const RootSystem& rs, const Root& a, const Root& b) {
  int p = 0;
  Root r = b;
  for (;;) {
    r = sub_roots(r, a);
    bool zero = std::all_of(r.coeffs.begin(), r.coeffs.end(), [](int c) { return c == 0; });
    if (zero || !rs.is_root(r)) break;
    ++p;
  }
  return p;
}

// Tiny exact bivariate polynomials over Q, for the tail extraction.
struct Poly2 {
  std::map<std::pair<int, int>, Rational> terms;  // (deg_t, deg_u) -> coeff

  static Poly2 constant(const Rational& c) {
    Poly2 p;
    if (c != 0) p.terms[{0, 0}] = c;
    return p;
  }
  static Poly2 monomial(int dt, int du, const Rational& c) {
    Poly2 p;
    if (c != 0) p.terms[{dt, du}] = c;
    return p;
  }
  bool zero() const { return terms.empty(); }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [k, v] : o.terms) {
      auto it = terms.find(k);
      if (it == terms.end()) {
        terms.emplace(k, v);
      } else {
        it->second += v;
        if (it->second == 0) terms.erase(it);
      }
    }
    return *this;
  }
  Poly2 operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [ka, va] : terms)
      for (const auto& [kb, vb] : o.terms) {
        auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
        auto it = r.terms.find(key);
        if (it == r.terms.end()) {
          r.terms.emplace(key, va * vb);
        } else {
          it->second += va * vb;
          if (it->second == 0) r.terms.erase(it);
        }
      }
    return r;
  }
  Poly2 operator*(const Rational& c) const {
    Poly2 r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms) r.terms.emplace(k, v * c);
    return r;
  }
  Poly2 operator-() const { return *this * Rational(-1); }
};

using PolyMatrix = std::vector<std::vector<Poly2>>;

PolyMatrix pm_identity(std::size_t n) {
  PolyMatrix m(n, std::vector<Poly2>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly2::constant(1);
  return m;
}

PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b) {
  std::size_t n = a.size();
  PolyMatrix c(n, std::vector<Poly2>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j].zero()) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  return c;
}

bool pm_is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& p : row)
      if (!p.zero()) return false;
  return true;
}

bool pm_is_identity(PolyMatrix a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] += Poly2::constant(-1);
  return pm_is_zero(a);
}

// The rank-two subalgebra spanned by a pair of roots, with explicit rational
// ad matrices. Basis: e_r for every root r in the integer span of the pair,
// then two Cartan slots acting as the coroots of the pair.
class PairAlgebra {
public:
  PairAlgebra(const RootSystem& r, const StructureConstants& sc, Root a, Root b)
      : rs_(r), sc_(sc), a_(std::move(a)), b_(std::move(b)) {
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n) {
        if (m == 0 && n == 0) continue;
        Root cand = add_roots(scale_root(a_, m), scale_root(b_, n));
        if (rs_.is_root(cand) && !pos_.count(cand.coeffs)) {
          pos_.emplace(cand.coeffs, int(roots_.size()));
          roots_.push_back(cand);
        }
      }
    dim_ = roots_.size() + 2;
  }

  std::size_t dim() const { return dim_; }

  // exp(c * ad(e_g)) with a polynomial scalar c
  PolyMatrix exp_ad(const Root& g, const Poly2& c) const {
    auto a = ad(g);
    PolyMatrix acc = pm_identity(dim_);
    PolyMatrix power = pm_identity(dim_);  // (c * ad)^k / k!
    Rational fact = 1;
    for (std::size_t k = 1; k <= dim_; ++k) {
      PolyMatrix next(dim_, std::vector<Poly2>(dim_));
      bool nonzero = false;
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t l = 0; l < dim_; ++l) {
          if (a[i][l] == 0) continue;
          Poly2 ca = c * a[i][l];
          for (std::size_t j = 0; j < dim_; ++j) {
            if (power[l][j].zero()) continue;
            next[i][j] += ca * power[l][j];
            nonzero = true;
          }
        }
      if (!nonzero) break;
      power = std::move(next);
      fact *= Rational(std::int64_t(k));
      Rational invf = Rational(1) / fact;
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) acc[i][j] += power[i][j] * invf;
    }
    return acc;
  }

  PolyMatrix log(const PolyMatrix& m) const {
    PolyMatrix x = m;  // m - I, nilpotent
    for (std::size_t i = 0; i < dim_; ++i) x[i][i] += Poly2::constant(-1);
    PolyMatrix acc(dim_, std::vector<Poly2>(dim_));
    PolyMatrix power = pm_identity(dim_);
    for (std::size_t k = 1; k <= dim_ + 1; ++k) {
      power = pm_mul(power, x);
      if (pm_is_zero(power)) break;
      Rational c = Rational(k % 2 == 1 ? 1 : -1) / Rational(std::int64_t(k));
      for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) acc[i][j] += power[i][j] * c;
    }
    return acc;
  }

  // coefficient of e_g in X where log M = ad(X), read off a Cartan column
  Poly2 coefficient_of(const PolyMatrix& logm, const Root& g) const {
    int pa = rs_.pairing(g, a_);
    std::size_t col = roots_.size();
    if (pa == 0) {
      pa = rs_.pairing(g, b_);
      col = roots_.size() + 1;
    }
    // ad(X)(t_col) = -sum_g c_g <g, .> e_g
    return logm[pos_.at(g.coeffs)][col] * (Rational(-1) / Rational(pa));
  }

private:
  // coefficients of g^vee in terms of (a^vee, b^vee)
  std::pair<Rational, Rational> coroot_coeffs(const Root& g) const {
    Rational aa = rs_.pairing(a_, a_), ab = rs_.pairing(a_, b_);
    Rational ba = rs_.pairing(b_, a_), bb = rs_.pairing(b_, b_);
    Rational ax = rs_.pairing(a_, g), bx = rs_.pairing(b_, g);
    Rational det = aa * bb - ab * ba;
    return {(ax * bb - ab * bx) / det, (aa * bx - ax * ba) / det};
  }

  std::vector<std::vector<Rational>> ad(const Root& g) const {
    std::vector<std::vector<Rational>> m(dim_, std::vector<Rational>(dim_, 0));
    int gi = signed_index(g);
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      const Root& y = roots_[k];
      Root s = add_roots(g, y);
      bool zero = std::all_of(s.coeffs.begin(), s.coeffs.end(), [](int c) { return c == 0; });
      if (zero) {
        auto [c1, c2] = coroot_coeffs(g);
        m[roots_.size()][k] = c1;
        m[roots_.size() + 1][k] = c2;
      } else if (rs_.is_root(s)) {
        m[pos_.at(s.coeffs)][k] = sc_.n_constant(gi, signed_index(y));
      }
    }
    m[pos_.at(g.coeffs)][roots_.size()] = -Rational(rs_.pairing(g, a_));
    m[pos_.at(g.coeffs)][roots_.size() + 1] = -Rational(rs_.pairing(g, b_));
    return m;
  }

  int signed_index(const Root& r) const {
    if (is_positive(r)) return rs_.index_of(r);
    return -rs_.index_of(scale_root(r, -1));
  }

  const RootSystem& rs_;
  const StructureConstants& sc_;
  Root a_, b_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> pos_;
  std::size_t dim_ = 0;
};

}  // namespace

StructureConstants StructureConstants::compute(RootSystem rs, Options opts) {
  StructureConstants sc(std::move(rs));
  const RootSystem& R = sc.rs_;
  const int N = R.count();
  const int base_sign = opts.negate_extraspecial ? -1 : 1;

  auto norm = [&](const Root& r) { return R.inner(r, r); };

  // Positive pairs, by increasing height of the sum (index order is height
  // monotone).
  for (int g = 1; g <= N; ++g) {
    const Root& gamma = R.root(g);
    if (R.height_of(g) < 2) continue;

    // defining pair: first simple alpha_i with gamma - alpha_i positive
    int def_i = 0;
    Root gpr;
    for (int i = 1; i <= R.rank(); ++i) {
      Root r = sub_roots(gamma, R.root(i));
      if (is_positive(r) && R.is_positive_root(r)) {
        def_i = i;
        gpr = r;
        break;
      }
    }
    if (def_i == 0) fail(Errc::ValidationError, "no simple summand found");
    int gpr_idx = R.index_of(gpr);
    int p0 = string_down(R, R.root(def_i), gpr);
    sc.n_[{def_i, gpr_idx}] = base_sign * (p0 + 1);
    sc.n_[{gpr_idx, def_i}] = -base_sign * (p0 + 1);

    // remaining decompositions gamma = alpha + beta via the Jacobi identity
    // for (e_{alpha_i}, e_{gamma'}, e_{-alpha}), coefficient at e_beta
    for (int a = 1; a <= N; ++a) {
      Root beta_r = sub_roots(gamma, R.root(a));
      if (!is_positive(beta_r) || !R.is_positive_root(beta_r)) continue;
      int b = R.index_of(beta_r);
      if (b <= a) continue;
      if (a == def_i || b == def_i) continue;

      const Root& alpha = R.root(a);
      const Root& beta = beta_r;
      const Root& alpha_i = R.root(def_i);

      Rational acc = 0;
      Root xi = sub_roots(beta, alpha_i);
      if (R.is_root(xi)) {
        int n_a_xi = sc.n_.at({a, R.index_of(xi)});
        int n_i_xi = sc.n_.at({def_i, R.index_of(xi)});
        acc += Rational(n_a_xi) * Rational(n_i_xi) * Rational(norm(xi)) / Rational(norm(gpr));
      }
      Root zeta = sub_roots(alpha, alpha_i);
      if (R.is_root(zeta)) {
        int n_i_z = sc.n_.at({def_i, R.index_of(zeta)});
        int n_b_z = sc.n_.at({b, R.index_of(zeta)});
        acc -= Rational(n_i_z) * Rational(n_b_z) * Rational(norm(zeta)) * Rational(norm(beta)) /
               (Rational(norm(alpha)) * Rational(norm(gpr)));
      }
      Rational value = acc * Rational(norm(gamma)) /
                       (Rational(sc.n_.at({def_i, gpr_idx})) * Rational(norm(beta)));
      if (denominator(value) != 1)
        fail(Errc::ValidationError, "non-integral structure constant");
      int v = int(numerator(value).convert_to<long long>());
      int expect = string_down(R, alpha, beta) + 1;
      if (v != expect && v != -expect)
        fail(Errc::ValidationError, "structure constant magnitude mismatch");
      sc.n_[{a, b}] = v;
      sc.n_[{b, a}] = -v;
    }
  }

  // Extend to every signed pair whose sum is a root, using
  // N_{mu,-nu} = N_{mu-nu,nu} (mu-nu,mu-nu)/(mu,mu) when mu-nu > 0 and
  // N_{mu,-nu} = N_{nu,-mu} otherwise.
  auto root_of = [&](int x) { return x > 0 ? R.root(x) : scale_root(R.root(-x), -1); };
  auto mixed = [&](int pos_idx, int neg_idx) {  // value of N_{mu, -nu}
    const Root mu = R.root(pos_idx), nu = R.root(neg_idx);
    Root delta = sub_roots(mu, nu);
    Rational val;
    if (is_positive(delta)) {
      val = Rational(sc.n_.at({R.index_of(delta), neg_idx})) * Rational(norm(delta)) /
            Rational(norm(mu));
    } else {
      Root dp = scale_root(delta, -1);
      val = Rational(sc.n_.at({R.index_of(dp), pos_idx})) * Rational(norm(dp)) /
            Rational(norm(nu));
    }
    if (denominator(val) != 1) fail(Errc::ValidationError, "non-integral mixed constant");
    return int(numerator(val).convert_to<long long>());
  };
  for (int x = -N; x <= N; ++x) {
    if (x == 0) continue;
    for (int y = -N; y <= N; ++y) {
      if (y == 0 || sc.n_.count({x, y})) continue;
      if (!R.is_root(add_roots(root_of(x), root_of(y)))) continue;
      int v;
      if (x < 0 && y < 0) v = -sc.n_.at({-x, -y});
      else if (x > 0 && y < 0) v = mixed(x, -y);
      else v = -mixed(y, -x);
      sc.n_[{x, y}] = v;
    }
  }

  // Validation sweep: antisymmetry and the root-string magnitude rule on the
  // full table.
  for (const auto& [key, v] : sc.n_) {
    auto [x, y] = key;
    if (sc.n_.at({y, x}) != -v) fail(Errc::ValidationError, "antisymmetry violated");
    int p = string_down(R, root_of(x), root_of(y));
    if (v != p + 1 && v != -(p + 1))
      fail(Errc::ValidationError, "string magnitude rule violated");
  }

  // Commutator tails for each ordered pair of distinct positive roots.
  for (int a = 1; a <= N; ++a) {
    for (int b = 1; b <= N; ++b) {
      if (a == b) continue;
      const Root& ra = R.root(a);
      const Root& rb = R.root(b);
      std::vector<TailTerm> terms;
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          Root cand = add_roots(scale_root(ra, i), scale_root(rb, j));
          if (R.is_positive_root(cand)) terms.push_back({R.index_of(cand), i, j, 0});
        }
      if (terms.empty()) continue;
      std::sort(terms.begin(), terms.end(),
                [](const TailTerm& s, const TailTerm& t) { return s.root_index < t.root_index; });

      if (terms.size() == 1) {
        // the tail factor is central within <x_a, x_b>, so c11 = N_{a,b}
        terms[0].c = sc.n_.at({a, b});
      } else {
        PairAlgebra pa(R, sc, ra, rb);
        Poly2 t = Poly2::monomial(1, 0, 1), u = Poly2::monomial(0, 1, 1);
        PolyMatrix m = pm_mul(pm_mul(pa.exp_ad(ra, -t), pa.exp_ad(rb, -u)),
                              pm_mul(pa.exp_ad(ra, t), pa.exp_ad(rb, u)));
        for (TailTerm& term : terms) {
          Poly2 f = pa.coefficient_of(pa.log(m), R.root(term.root_index));
          if (f.terms.size() != 1)
            fail(Errc::ValidationError, "tail coefficient is not a monomial");
          auto [key, coeff] = *f.terms.begin();
          if (key.first != term.i || key.second != term.j || denominator(coeff) != 1)
            fail(Errc::ValidationError, "unexpected tail monomial");
          long long c = numerator(coeff).convert_to<long long>();
          int sign = (term.i + term.j) % 2 == 0 ? 1 : -1;
          term.c = int(sign * c);
          m = pm_mul(pa.exp_ad(R.root(term.root_index), -f), m);
        }
        if (!pm_is_identity(m))
          fail(Errc::ValidationError, "tail extraction did not exhaust the commutator");
      }
      for (const TailTerm& term : terms)
        if (term.c == 0 || term.c < -3 || term.c > 3)
          fail(Errc::ValidationError, "tail constant out of range");
      sc.tails_[{a, b}] = std::move(terms);
    }
  }

  return sc;
}

int StructureConstants::n_constant(int x, int y) const {
  auto it = n_.find({x, y});
  if (it == n_.end()) fail(Errc::NotARoot, "sum of the pair is not a root");
  return it->second;
}

bool StructureConstants::sum_is_root(int x, int y) const { return n_.count({x, y}) > 0; }

const std::vector<TailTerm>& StructureConstants::tail(int a, int b) const {
  if (a < 1 || a > rs_.count() || b < 1 || b > rs_.count())
    fail(Errc::NotAPositiveRoot, "tail indices out of range");
  if (a == b) fail(Errc::EqualOrOppositeRoots, "commutator tail needs distinct roots");
  static const std::vector<TailTerm> empty;
  auto it = tails_.find({a, b});
  return it == tails_.end() ? empty : it->second;
}

int StructureConstants::c_constant(int i, int j, int a, int b) const {
  for (const TailTerm& t : tail(a, b))
    if (t.i == i && t.j == j) return t.c;
  fail(Errc::NotARoot, "i*alpha + j*beta is not a root");
}

}  // namespace twist
