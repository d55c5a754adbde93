#include "vbsge/ge.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace vbsge {

namespace detail {

int thread_budget(int tasks) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("VBS_GE_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<unsigned>(hw, static_cast<unsigned>(std::max(tasks, 1))));
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const int threads = thread_budget(count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double eps_from(const NormResult& lambda_sq, int length) {
  return lambda_sq.exact_zero ? kInf : -lambda_sq.log2value / length;
}

NormResult sector_lambda_sq(const ChainSpec& chain, Sector sector, ObcMode mode) {
  if (is_pbc(chain.boundary)) {
    const NormResult overlap = overlap_pbc(chain, sector);
    if (overlap.exact_zero) return overlap;
    const NormResult nrm = norm_pbc(chain);
    return {overlap.log2value - nrm.log2value, false};
  }
  if (const auto* o = std::get_if<Obc>(&chain.boundary)) {
    const ScaledMatrix rows = obc_row_product(chain, sector);
    const double w = rows.is_zero() ? 0.0 : rows.body()(o->p - 1, o->q - 1);
    if (w == 0.0) return {.exact_zero = true};
    const ObcNorms norms = obc_norms(chain);
    return {2.0 * (std::log2(std::abs(w)) + rows.log2scale()) - norms.log2_at(o->p, o->q),
            false};
  }
  return overlap_obc(chain, sector, mode);
}

}  // namespace

GeResult ge(const ChainSpec& chain, ObcMode mode) {
  GeResult r;
  r.s = chain.spin.s;
  r.length = chain.length;
  r.boundary = chain.boundary;
  r.mode = mode;
  r.log2_lambda_sq_even = sector_lambda_sq(chain, Sector::Even, mode);
  r.log2_lambda_sq_odd = sector_lambda_sq(chain, Sector::Odd, mode);
  r.eps_even = eps_from(r.log2_lambda_sq_even, chain.length);
  r.eps_odd = eps_from(r.log2_lambda_sq_odd, chain.length);
  r.eps = std::min(r.eps_even, r.eps_odd);
  return r;
}

ExtrapolatedGe extrapolate(std::span<const std::pair<int, double>> points) {
  if (points.size() < 3) {
    throw std::invalid_argument("extrapolate: need at least 3 points");
  }
  const int parity = points.front().first % 2;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].first % 2 != parity) {
      throw std::invalid_argument("extrapolate: chain lengths must share one parity");
    }
    if (!std::isfinite(points[i].second)) {
      throw std::invalid_argument("extrapolate: eps values must be finite");
    }
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("extrapolate: chain lengths must be distinct");
      }
    }
  }
  // least squares for eps(L) = a + b / L
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sxx = 0.0, sy = 0.0, sxy = 0.0;
  for (const auto& [L, eps] : points) {
    const double x = 1.0 / L;
    sx += x;
    sxx += x * x;
    sy += eps;
    sxy += x * eps;
  }
  const double det = n * sxx - sx * sx;
  const double b = (n * sxy - sx * sy) / det;
  const double a = (sy - b * sx) / n;
  double ss = 0.0;
  for (const auto& [L, eps] : points) {
    const double r = a + b / L - eps;
    ss += r * r;
  }
  return {a, b, std::sqrt(ss / n)};
}

GlobalGe global_ge(const GeResult& result) {
  if (!std::isfinite(result.eps_even)) {
    throw std::domain_error("global_ge: eps_even is infinite, E_G is undefined");
  }
  return {result.eps_even * result.length};
}

GlobalGe global_ge(const ChainSpec& chain, ObcMode mode) { return global_ge(ge(chain, mode)); }

double asymptotic_norm_error(const ChainSpec& chain) {
  if (is_pbc(chain.boundary)) {
    throw std::invalid_argument("asymptotic_norm_error: chain must be open");
  }
  const ObcNorms norms = obc_norms(chain);
  const double total = std::log2(norms.body.sum()) + norms.log2scale;
  return total - log2_c_l(chain.spin, chain.length);
}

double obc_norm_equalization_error(const ChainSpec& chain) {
  if (is_pbc(chain.boundary)) {
    throw std::invalid_argument("obc_norm_equalization_error: chain must be open");
  }
  const ObcNorms norms = obc_norms(chain);
  const int n = chain.spin.bond_dim();
  const double target = log2_c_l(chain.spin, chain.length) - 2.0 * std::log2(double(n));
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      worst = std::max(worst, std::abs(norms.log2_at(a + 1, b + 1) - target));
    }
  }
  return worst;
}

std::vector<SweepRow> sweep(std::span<const int> spins, std::span<const int> lengths,
                            const Boundary& boundary, ObcMode mode) {
  if (spins.empty()) throw std::invalid_argument("sweep: empty spin list");
  if (lengths.empty()) throw std::invalid_argument("sweep: empty length list");
  std::vector<SweepRow> rows(spins.size() * lengths.size());
  const int per_spin = static_cast<int>(lengths.size());
  detail::parallel_for(static_cast<int>(rows.size()), [&](int idx) {
    SweepRow& row = rows[idx];
    row.s = spins[idx / per_spin];
    row.length = lengths[idx % per_spin];
    try {
      row.result = ge(ChainSpec(SpinSpec(row.s), row.length, boundary), mode);
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
  });
  return rows;
}

}  // namespace vbsge
