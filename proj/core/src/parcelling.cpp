#include "qm/parcelling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <tuple>

#include "qm/errors.hpp"

namespace qm {
namespace {

void check_mu(const std::vector<int>& mu) {
  long total = 0;
  for (int m : mu) {
    if (m <= 0) throw InvalidArgument("multiplicities must be positive");
    total += m;
  }
  if (total % 2 != 0) throw InvalidArgument("total multiplicity must be even");
  if (total > 24) throw ExplosionGuard("total multiplicity exceeds 24", static_cast<double>(total));
}

using Memo = std::map<std::vector<int>, std::uint64_t>;

std::uint64_t count_sorted(std::vector<int> ms, Memo& memo);

void distribute(const std::vector<int>& rest, std::size_t j, int r, std::vector<int>& left, std::uint64_t& total,
                Memo& memo) {
  if (r == 0) {
    std::vector<int> next;
    for (std::size_t t = 0; t < rest.size(); ++t)
      if (left[t] > 0) next.push_back(left[t]);
    total += count_sorted(std::move(next), memo);
    return;
  }
  if (j == rest.size()) return;
  for (int x = 0; x <= std::min(r, left[j]); ++x) {
    left[j] -= x;
    distribute(rest, j + 1, r - x, left, total, memo);
    left[j] += x;
  }
}

std::uint64_t count_sorted(std::vector<int> ms, Memo& memo) {
  std::erase(ms, 0);
  if (ms.empty()) return 1;
  std::sort(ms.begin(), ms.end(), std::greater<>());
  if (const auto it = memo.find(ms); it != memo.end()) return it->second;
  const int a = ms.front();
  const std::vector<int> rest(ms.begin() + 1, ms.end());
  std::uint64_t total = 0;
  for (int s = 0; 2 * s <= a; ++s) {
    std::vector<int> left = rest;
    distribute(rest, 0, a - 2 * s, left, total, memo);
  }
  memo.emplace(ms, total);
  return total;
}

void enumerate(std::vector<int>& rem, std::vector<Parcel>& current, std::vector<GenParcelling>& out, int prev_i,
               int min_partner) {
  const int n = static_cast<int>(rem.size());
  int i = 0;
  while (i < n && rem[static_cast<std::size_t>(i)] == 0) ++i;
  if (i == n) {
    out.push_back({current});
    return;
  }
  const auto ui = static_cast<std::size_t>(i);
  for (int j = (i == prev_i ? min_partner : i); j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (j == i) {
      if (rem[ui] < 2) continue;
      rem[ui] -= 2;
    } else {
      if (rem[uj] < 1) continue;
      --rem[ui];
      --rem[uj];
    }
    current.push_back({i, j});
    enumerate(rem, current, out, i, j);
    current.pop_back();
    if (j == i) {
      rem[ui] += 2;
    } else {
      ++rem[ui];
      ++rem[uj];
    }
  }
}

GenParcelling sorted(std::vector<Parcel> parcels) {
  for (auto& p : parcels)
    if (p.a > p.b) std::swap(p.a, p.b);
  std::sort(parcels.begin(), parcels.end());
  return {std::move(parcels)};
}

std::vector<Vec3> images(const ConicDivisor& div, const ConicParam& alpha) {
  std::vector<Vec3> x;
  for (const auto& p : div.points) x.push_back(canonical_projective(conic_point(alpha, p.point)));
  return x;
}

}  // namespace

std::uint64_t kappa(int d) {
  if (d < 0) throw InvalidArgument("kappa of a negative degree");
  if (d > 16) throw OverflowError("(2d-1)!! exceeds the 64-bit guard", d);
  std::uint64_t k = 1;
  for (int j = 1; j <= d; ++j) k *= static_cast<std::uint64_t>(2 * j - 1);
  return k;
}

std::uint64_t count_parcellings(const std::vector<int>& mu) {
  check_mu(mu);
  Memo memo;
  return count_sorted(mu, memo);
}

std::vector<GenParcelling> enumerate_parcellings(const std::vector<int>& mu, std::size_t limit) {
  const std::uint64_t count = count_parcellings(mu);
  if (count > limit) throw ExplosionGuard("too many parcellings to enumerate", static_cast<double>(count));
  std::vector<int> rem = mu;
  std::vector<Parcel> current;
  std::vector<GenParcelling> out;
  out.reserve(count);
  enumerate(rem, current, out, -1, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_generalized_parcelling(const GenParcelling& g, const std::vector<int>& mu) {
  std::vector<int> sum(mu.size(), 0);
  for (const auto& p : g.parcels) {
    if (p.a < 0 || p.b < 0 || p.a >= static_cast<int>(mu.size()) || p.b >= static_cast<int>(mu.size())) return false;
    sum[static_cast<std::size_t>(p.a)] += 1;
    sum[static_cast<std::size_t>(p.b)] += 1;
  }
  return sum == mu;
}

std::vector<int> conjugation_map(const ConicDivisor& div, const ConicParam& alpha, double tol) {
  const auto x = images(div, alpha);
  const std::size_t n = x.size();
  std::vector<int> partner(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 target = x[i].conjugate();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = chordal_distance(x[j], target);
      if (dist < best) {
        best = dist;
        partner[i] = static_cast<int>(j);
      }
    }
    if (best > tol) throw NotConjugateClosed("divisor is not closed under conjugation", best);
    if (div.points[static_cast<std::size_t>(partner[i])].multiplicity != div.points[i].multiplicity)
      throw NotConjugateClosed("conjugate points carry different multiplicities", best);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (partner[static_cast<std::size_t>(partner[i])] != static_cast<int>(i))
      throw NotConjugateClosed("conjugation pairing is not an involution");
  return partner;
}

GenParcelling canonical_parcelling(const ConicDivisor& div, const ConicParam& alpha, ParcellingMode mode,
                                   double tol) {
  std::vector<Parcel> parcels;
  if (mode == ParcellingMode::RealDefinite) {
    const auto partner = conjugation_map(div, alpha, tol);
    for (std::size_t i = 0; i < partner.size(); ++i) {
      const int j = partner[i];
      const int m = div.points[i].multiplicity;
      const int ii = static_cast<int>(i);
      if (j == ii) {
        if (m % 2 != 0) throw NotConjugateClosed("real point of odd multiplicity cannot be paired");
        for (int t = 0; t < m / 2; ++t) parcels.push_back({ii, ii});
      } else if (ii < j) {
        for (int t = 0; t < m; ++t) parcels.push_back({ii, j});
      }
    }
    return sorted(std::move(parcels));
  }

  std::vector<int> leftover;
  for (std::size_t i = 0; i < div.points.size(); ++i) {
    const int m = div.points[i].multiplicity;
    const int ii = static_cast<int>(i);
    for (int t = 0; t < m / 2; ++t) parcels.push_back({ii, ii});
    if (m % 2 == 1) leftover.push_back(ii);
  }
  auto key = [&](int i) {
    const ProjPoint& p = div.points[static_cast<std::size_t>(i)].point;
    if (p.u0 == cplx(0.0)) return std::make_pair(std::numbers::pi + 1.0, std::numeric_limits<double>::infinity());
    const cplx r = p.u1 / p.u0;
    return std::make_pair(std::arg(r), std::abs(r));
  };
  std::stable_sort(leftover.begin(), leftover.end(), [&](int a, int b) { return key(a) < key(b); });
  for (std::size_t t = 0; t + 1 < leftover.size(); t += 2) parcels.push_back({leftover[t], leftover[t + 1]});
  return sorted(std::move(parcels));
}

EquivariantChoice real_equivariant_parcelling(const ConicDivisor& div, const ConicParam& alpha, double tol) {
  const auto partner = conjugation_map(div, alpha, tol);
  const auto x = images(div, alpha);
  std::vector<Parcel> parcels;
  std::vector<int> real_left;
  int real_occurrences = 0;
  for (std::size_t i = 0; i < partner.size(); ++i) {
    const int j = partner[i];
    const int m = div.points[i].multiplicity;
    const int ii = static_cast<int>(i);
    if (j == ii) {
      real_occurrences += m;
      for (int t = 0; t < m / 2; ++t) parcels.push_back({ii, ii});
      if (m % 2 == 1) real_left.push_back(ii);
    } else if (ii < j) {
      for (int t = 0; t < m; ++t) parcels.push_back({ii, j});
    }
  }
  auto key = [&](int i) {
    const Vec3& v = x[static_cast<std::size_t>(i)];
    return std::make_tuple(v[0].real(), v[1].real(), v[2].real());
  };
  std::stable_sort(real_left.begin(), real_left.end(), [&](int a, int b) { return key(a) < key(b); });
  for (std::size_t t = 0; t + 1 < real_left.size(); t += 2) parcels.push_back({real_left[t], real_left[t + 1]});
  return {sorted(std::move(parcels)), real_occurrences <= 2};
}

std::vector<GenParcelling> enumerate_equivariant_parcellings(const ConicDivisor& div, const ConicParam& alpha,
                                                             double tol) {
  const auto partner = conjugation_map(div, alpha, tol);
  std::vector<GenParcelling> out;
  for (auto& g : enumerate_parcellings(div.multiplicities())) {
    std::vector<Parcel> image;
    for (const auto& p : g.parcels)
      image.push_back({partner[static_cast<std::size_t>(p.a)], partner[static_cast<std::size_t>(p.b)]});
    if (sorted(std::move(image)) == g) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace qm
