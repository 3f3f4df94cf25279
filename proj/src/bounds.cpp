#include "primrt/bounds.hpp"

#include <algorithm>
#include <string>

#include "primrt/akn.hpp"
#include "primrt/error.hpp"

namespace primrt {

namespace {

std::size_t isqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Branch boundaries, clamped so that tiny n still starts from B_2 = 1.
struct Branches {
  std::size_t root;  // max(floor(sqrt n), 2)
  std::size_t half;  // max(floor(n/2), root)
};

Branches branches(std::size_t n) {
  Branches b;
  b.root = std::max<std::size_t>(isqrt(n), 2);
  b.half = std::max(n / 2, b.root);
  return b;
}

void require_kn(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) {
    throw Error(ErrorKind::out_of_range, "need 2 <= k <= n, got n = " + std::to_string(n) +
                                             ", k = " + std::to_string(k));
  }
}

Rational step(std::size_t n, std::size_t k, const Branches& br, MidrangeRule rule) {
  const auto N = static_cast<std::int64_t>(n);
  const auto K = static_cast<std::int64_t>(k);
  if (k < br.root) return Rational(N) * (Rational(1) + Rational(K * (K - 1), 2));
  if (k < br.half) {
    if (rule == MidrangeRule::ceiling) {
      const std::int64_t spread = (N - 1) / K;  // ceil((n-k)/k)
      return Rational(N * (1 + N - spread), 2);
    }
    return Rational(N) * (Rational(1) + Rational(N * (K - 1), 2 * K));
  }
  return Rational(N * N, 2);
}

}  // namespace

std::vector<Rational> bk_row(std::size_t n, std::size_t kmax, MidrangeRule rule) {
  require_kn(n, kmax);
  const Branches br = branches(n);
  std::vector<Rational> row(kmax + 1, Rational(0));
  row[2] = Rational(1);
  for (std::size_t k = 2; k < kmax; ++k) row[k + 1] = row[k] + step(n, k, br, rule);
  return row;
}

Rational bk_recursive(std::size_t n, std::size_t k, MidrangeRule rule) {
  return bk_row(n, k, rule)[k];
}

Rational bk_closed(std::size_t n, std::size_t k) {
  require_kn(n, k);
  const Branches br = branches(n);
  const auto N = static_cast<std::int64_t>(n);
  auto cubic = [N](std::int64_t K) {
    return Rational(N * (K * K * K - 3 * K * K + 8 * K - 12), 6) + Rational(1);
  };
  auto middle = [&](std::size_t kk) {
    Rational harmonic(0);
    for (std::size_t i = br.root; i < kk; ++i) harmonic += Rational(1, static_cast<std::int64_t>(i));
    const auto span = static_cast<std::int64_t>(kk - br.root);
    return cubic(static_cast<std::int64_t>(br.root)) + Rational(N * (N + 2) * span, 2) -
           Rational(N * N, 2) * harmonic;
  };
  if (k <= br.root) return cubic(static_cast<std::int64_t>(k));
  if (k <= br.half) return middle(k);
  return middle(br.half) + Rational(static_cast<std::int64_t>(k - br.half) * N * N, 2);
}

std::vector<std::int64_t> tilde_u_doubled_row(std::size_t n, std::size_t k) {
  require_kn(n, k);
  const auto N = static_cast<std::int64_t>(n);
  // Entries at index >= k stay 0; h + p never exceeds n.
  std::vector<std::int64_t> u(std::max(n, k) + 2, 0);
  for (std::size_t h = k - 1; h >= 2; --h) {
    std::int64_t best = 0;
    const std::size_t pmax = std::min(h, n - h);
    for (std::size_t p = 1; p <= pmax; ++p) {
      const std::int64_t jump = u[h + p] + N * (N - 1);
      const std::int64_t crawl =
          u[h + 1] + N * (N + 1 - static_cast<std::int64_t>(akp_hat(n, h, p)));
      best = std::max(best, std::min(jump, crawl));
    }
    u[h] = best;
  }
  u.resize(k + 1);
  return u;
}

Rational tilde_u(std::size_t n, std::size_t k, std::size_t h) {
  require_kn(n, k);
  if (h < 2) throw Error(ErrorKind::out_of_range, "need h >= 2, got h = " + std::to_string(h));
  if (h >= k) return Rational(0);
  return Rational(tilde_u_doubled_row(n, k)[h], 2);
}

FBound f_bound(std::size_t n, std::size_t k, const std::vector<Rational>& b_row) {
  require_kn(n, k);
  if (b_row.size() <= k) throw Error(ErrorKind::out_of_range, "B row shorter than k");
  const auto u = tilde_u_doubled_row(n, k);
  FBound best{b_row[k], k};
  for (std::size_t h = 2; h < k; ++h) {
    Rational candidate = b_row[h] + Rational(u[h], 2);
    if (candidate < best.value || (candidate == best.value && h < best.argmin_h)) {
      best.value = std::move(candidate);
      best.argmin_h = h;
    }
  }
  return best;
}

FBound f_bound(std::size_t n, std::size_t k) { return f_bound(n, k, bk_row(n, k)); }

Rational szykula_bound(std::size_t n) {
  if (n < 1) throw Error(ErrorKind::out_of_range, "need n >= 1");
  const mpz_class N(static_cast<unsigned long>(n));
  const mpz_class num = 15617 * N * N * N + 7500 * N * N + 9375 * N - 31250;
  return Rational::from_mpz(num, mpz_class(93750));
}

BoundTable bound_table(std::size_t n, std::size_t kmax, bool with_tilde_u, MidrangeRule rule) {
  require_kn(n, kmax);
  BoundTable t;
  t.n = n;
  const auto b = bk_row(n, kmax, rule);
  for (std::size_t k = 2; k <= kmax; ++k) {
    t.values.emplace(BoundKey{BoundKind::b, k}, b[k]);
    FBound f = f_bound(n, k, b);
    t.values.emplace(BoundKey{BoundKind::f, k}, f.value);
    t.f_argmin.emplace(BoundKey{BoundKind::f, k}, f.argmin_h);
    if (with_tilde_u) {
      const auto u = tilde_u_doubled_row(n, k);
      for (std::size_t h = 2; h <= k; ++h) {
        t.values.emplace(BoundKey{BoundKind::tilde_u, k, h}, Rational(u[h], 2));
      }
    }
  }
  return t;
}

}  // namespace primrt
