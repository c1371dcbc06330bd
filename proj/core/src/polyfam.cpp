#include "hlcbs/polyfam.hpp"

#include <mutex>
#include <vector>

#include "hlcbs/errors.hpp"

namespace hlcbs::polyfam {

namespace {

// Sequence memo indexed from `first`; extend() runs under the lock so the
// recursion is always computed by a single writer.
template <typename T>
class Memo {
 public:
  explicit Memo(int first) : first_(first) {}

  template <typename Step>
  T get(int index, Step step) {
    std::lock_guard lock(mu_);
    while (static_cast<int>(values_.size()) <= index - first_) {
      const int next = first_ + static_cast<int>(values_.size());
      values_.push_back(step(next, values_));
    }
    return values_[static_cast<std::size_t>(index - first_)];
  }

 private:
  int first_;
  std::mutex mu_;
  std::vector<T> values_;
};

void require_index(int k, int min, const char* what) {
  if (k < min)
    throw DomainError(std::string(what) + " index " + std::to_string(k) + " below " + std::to_string(min));
}

// 2x(1-x) = 2x - 2x^2
const UniPoly& two_x_one_minus_x() {
  static const UniPoly p{0, 2, -2};
  return p;
}

const UniPoly& x_one_minus_x() {
  static const UniPoly p{0, 1, -1};
  return p;
}

}  // namespace

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static std::mutex mu;
  static std::vector<std::vector<mpz_class>> rows{{1}};
  std::lock_guard lock(mu);
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<mpz_class> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

mpz_class stirling2(long n, long m) {
  if (n < 0 || m < 0 || m > n) return 0;
  // rows[n][m], S(n, m) = m S(n-1, m) + S(n-1, m-1)
  static std::mutex mu;
  static std::vector<std::vector<mpz_class>> rows{{1}};
  std::lock_guard lock(mu);
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const std::size_t r = prev.size();
    std::vector<mpz_class> row(r + 1);
    row[0] = 0;
    for (std::size_t j = 1; j <= r; ++j) {
      mpz_class v = prev[j - 1];
      if (j < r) v += mpz_class(static_cast<unsigned long>(j)) * prev[j];
      row[j] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
}

UniPoly q_poly(int k) {
  require_index(k, -1, "q");
  static Memo<UniPoly> memo(-1);
  return memo.get(k, [](int idx, const std::vector<UniPoly>& prev) {
    if (idx == -1) return UniPoly::constant(1);
    const int j = idx - 1;  // q_{j+1} from q_j
    const UniPoly& q = prev.back();
    return UniPoly::linear(Rational(2 * (j + 1)), 1) * q + two_x_one_minus_x() * q.derivative();
  });
}

UniPoly p_poly(int k) {
  require_index(k, -1, "p");
  static Memo<UniPoly> memo(-1);
  return memo.get(k, [](int idx, const std::vector<UniPoly>& prev) {
    if (idx == -1) return UniPoly{};
    const int j = idx - 1;
    const UniPoly& p = prev.back();
    return UniPoly::linear(Rational(2 * j), 2) * p + two_x_one_minus_x() * p.derivative() + q_poly(j);
  });
}

BiPoly p_a_poly(int k) {
  require_index(k, -1, "p_a");
  static Memo<BiPoly> memo(-1);
  return memo.get(k, [](int idx, const std::vector<BiPoly>& prev) {
    if (idx == -1) return BiPoly{};
    const int j = idx - 1;
    const BiPoly& p = prev.back();
    // 2((j+1-a)x + a) = (2a) + (2(j+1) - 2a) x
    const BiPoly factor(std::vector<UniPoly>{UniPoly{0, 2}, UniPoly{Rational(2 * (j + 1)), -2}});
    return factor * p + BiPoly::from_x(two_x_one_minus_x()) * p.derivative_x() + BiPoly::from_x(q_poly(j));
  });
}

EulerianPoly eulerian(int n) {
  require_index(n, 0, "eulerian");
  static Memo<EulerianPoly> memo(0);
  return memo.get(n, [](int idx, const std::vector<EulerianPoly>& prev) {
    if (idx == 0) return EulerianPoly(BiPoly::from_x(UniPoly::constant(1)));
    const int m = idx - 1;
    const BiPoly& e = prev.back().as_bipoly();
    // (y + m x) as a polynomial in x over Q[y]
    const BiPoly factor(std::vector<UniPoly>{UniPoly{0, 1}, UniPoly::constant(m)});
    return EulerianPoly(factor * e + BiPoly::from_x(x_one_minus_x()) * e.derivative_x());
  });
}

EulerianPoly eulerian_gf_oracle(int n) {
  require_index(n, 0, "eulerian_gf_oracle");
  const auto order = static_cast<std::size_t>(n);
  using Series = std::vector<BiPoly>;  // coefficient of t^i, truncated at t^order

  auto multiply = [order](const Series& a, const Series& b) {
    Series r(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  };

  // (1-x)/(e^{t(x-1)} - x) = 1/(1 - U), U = sum_{j>=1} (x-1)^{j-1} t^j / j!
  Series u(order + 1);
  for (std::size_t j = 1; j <= order; ++j) {
    const UniPoly xm1_pow = pow(UniPoly{-1, 1}, static_cast<unsigned>(j - 1));
    u[j] = BiPoly::from_x(xm1_pow.scaled(Rational(mpz_class(1), exact::factorial(static_cast<long>(j)))));
  }

  // (1 - U)^{-y} = sum_m (y)_m / m! U^m; U = O(t) so m <= order suffices.
  Series total(order + 1);
  Series u_pow(order + 1);
  u_pow[0] = BiPoly::from_x(UniPoly::constant(1));
  UniPoly rising = UniPoly::constant(1);  // (y)_m
  for (std::size_t m = 0; m <= order; ++m) {
    const UniPoly weight = rising.scaled(Rational(mpz_class(1), exact::factorial(static_cast<long>(m))));
    const BiPoly w = BiPoly::from_param(weight);
    for (std::size_t i = 0; i <= order; ++i)
      if (!u_pow[i].is_zero()) total[i] += w * u_pow[i];
    rising = rising * UniPoly{Rational(static_cast<long>(m)), 1};
    u_pow = multiply(u_pow, u);
  }

  BiPoly e = total[order];
  const BiPoly scale = BiPoly::from_x(UniPoly::constant(Rational(exact::factorial(n))));
  return EulerianPoly(scale * e);
}

Rational poly_bernoulli(int n, int k) {
  require_index(n, 0, "poly_bernoulli");
  Rational sum;
  for (int m = 0; m <= n; ++m) {
    const mpz_class s = stirling2(n, m);
    if (s == 0) continue;
    Rational term(mpz_class(exact::factorial(m) * s));
    term /= pow(Rational(m + 1), k);
    if ((m + n) % 2 != 0) term = -term;
    sum += term;
  }
  return sum;
}

Rational alpha(int n, const Rational& a) {
  require_index(n, 0, "alpha");
  std::vector<Rational> values{Rational(1)};
  Rational a_pow = a;
  for (int m = 1; m <= n; ++m) {
    Rational rhs = Rational(2) * values.back();
    for (int l = 0; l < m; ++l) rhs += Rational(binomial(m, l)) * values[static_cast<std::size_t>(l)];
    rhs += Rational(3) * a_pow;
    values.push_back(rhs / Rational(3));
    a_pow *= a;
  }
  return values[static_cast<std::size_t>(n)];
}

namespace {

const Rational kHalf(1, 2);

std::vector<UniPoly> eulerian_at_half(int n) {
  std::vector<UniPoly> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) out.push_back(eulerian(m).at_y(kHalf));
  return out;
}

}  // namespace

BiPoly p_from_eulerian(int n) {
  require_index(n, 0, "p_from_eulerian");
  const auto eh = eulerian_at_half(n);
  const UniPoly a_minus_1{-1, 1};
  const UniPoly one_minus_x{1, -1};
  BiPoly sum;
  for (int j = 0; j <= n; ++j) {
    for (int l = 0; l <= j; ++l) {
      const auto d = static_cast<unsigned>(j - l);
      const Rational c(mpz_class(binomial(n + 1, j + 1) * binomial(j, l)));
      const UniPoly x_part = (pow(one_minus_x, d) * eh[static_cast<std::size_t>(n - j)] * eh[static_cast<std::size_t>(l)]).scaled(c);
      sum += BiPoly::from_param(pow(a_minus_1, d)) * BiPoly::from_x(x_part);
    }
  }
  return BiPoly::from_x(UniPoly::constant(pow(Rational(2), n))) * sum;
}

UniPoly bm_p_poly(int n) {
  require_index(n, 0, "bm_p_poly");
  const auto eh = eulerian_at_half(n);
  UniPoly sum;
  for (int k = 0; k <= n; ++k)
    sum += (eh[static_cast<std::size_t>(n - k)] * eh[static_cast<std::size_t>(k)]).scaled(Rational(binomial(n + 1, k)));
  return sum.scaled(pow(Rational(2), n));
}

UniPoly bm_q_poly(int n) {
  require_index(n, 0, "bm_q_poly");
  return eulerian(n).at_y(kHalf).scaled(pow(Rational(2), n));
}

}  // namespace hlcbs::polyfam
