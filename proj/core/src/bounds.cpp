#include "quditmap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace quditmap::bounds {

namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double result = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(result);
}

double pow2(std::size_t k) { return std::ldexp(1.0, static_cast<int>(k)); }

void require_string_length(std::size_t p, std::size_t k) {
  if (p < 2 || p > k) {
    throw std::domain_error("string length p=" + std::to_string(p) + " must satisfy 2 <= p <= K=" +
                            std::to_string(k));
  }
}

void require_band(std::size_t w, std::size_t d) {
  if (w < 1 || w > d) {
    throw std::domain_error("band w=" + std::to_string(w) + " must satisfy 1 <= w <= d=" + std::to_string(d));
  }
}

std::size_t merge_count(std::vector<std::size_t>& v, std::vector<std::size_t>& scratch, std::size_t lo,
                        std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::size_t count = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t out = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += mid - i;
      scratch[out++] = v[j++];
    } else {
      scratch[out++] = v[i++];
    }
  }
  while (i < mid) scratch[out++] = v[i++];
  while (j < hi) scratch[out++] = v[j++];
  std::copy(scratch.begin() + static_cast<long>(lo), scratch.begin() + static_cast<long>(hi),
            v.begin() + static_cast<long>(lo));
  return count;
}

}  // namespace

double cluster_bound(std::size_t p, std::size_t k) {
  require_string_length(p, k);
  return static_cast<double>(k - p) * static_cast<double>(p) / 2.0;
}

double shuttle_bound(std::size_t p, std::size_t k) {
  require_string_length(p, k);
  return 2.0 * static_cast<double>(k - p);
}

double length_distribution(std::size_t p, std::size_t h, std::size_t k) {
  if (h > p || p > k) {
    throw std::domain_error("length_distribution requires h <= p <= K");
  }
  return 0.5 * pow2(h) * binomial(k - h, p - h);
}

double single_term_bound(std::size_t h, std::size_t k) {
  if (h > k) throw std::domain_error("single_term_bound requires h <= K");
  return 0.5 * pow2(k) * static_cast<double>(k - h);
}

double all_strings_bound(std::size_t k) {
  if (k < 3) return 0.0;
  const double d = pow2(k);
  const double log_d = static_cast<double>(k);
  return (d * log_d * log_d - 2.0 * d * log_d + 3.0 * d - 12.0) / 8.0;
}

std::size_t all_strings_lower(std::size_t k) {
  const std::size_t half = k / 2;
  const double groups = binomial(k, half);
  const double initial = static_cast<double>(half + 1);
  if (groups <= initial) return 0;
  return static_cast<std::size_t>(std::ceil((groups - initial) / 2.0));
}

double two_particle_all_bound(std::size_t k) {
  const double d = pow2(k);
  const double log_d = static_cast<double>(k);
  const double d2 = d * d;
  return 0.5 * (d2 * log_d * log_d - d2 * log_d + 0.75 * d2 - 3.0);
}

std::size_t two_particle_lower(std::size_t k) { return all_strings_lower(2 * k); }

std::vector<std::size_t> grouped_ordering(std::size_t w, std::size_t d) {
  require_band(w, d);
  std::vector<std::size_t> order;
  order.reserve(d);
  for (std::size_t r = 0; r < w; ++r) {
    for (std::size_t q = r; q < d; q += w) order.push_back(q);
  }
  return order;
}

std::size_t inversion_count(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> work = order;
  std::vector<std::size_t> scratch(order.size());
  return merge_count(work, scratch, 0, work.size());
}

double unary_inversion_bound(std::size_t w, std::size_t d) {
  require_band(w, d);
  const double wd = static_cast<double>(w);
  const double dd = static_cast<double>(d);
  return dd * dd * (wd - 1.0) / (4.0 * wd) - dd * (wd - 1.0) / 4.0;
}

double unary_linear_bound(std::size_t w, std::size_t d) {
  require_band(w, d);
  return 2.0 * static_cast<double>(d - w) * static_cast<double>(w);
}

double unary_dense_bound(std::size_t d, bool corrected) {
  const double dd = static_cast<double>(d);
  return corrected ? dd * dd / 2.0 - 1.5 * dd + 1.0 : dd * dd / 2.0 - 1.5 + 1.0;
}

double unary_two_particle_bound(TwoParticleKind kind, std::size_t w, std::size_t d) {
  const double d2 = static_cast<double>(d) * static_cast<double>(d);
  switch (kind) {
    case TwoParticleKind::DiagDiag:
    case TwoParticleKind::Banded1: return d2;
    case TwoParticleKind::BandedWide:
      if (w < 2) throw std::domain_error("wide-band two-particle bound needs w > 1");
      return d2 + 2.0 * std::min(unary_inversion_bound(w, d), unary_linear_bound(w, d));
  }
  throw std::logic_error("unreachable");
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["operator"] = operator_label;
  j["encoding"] = encoding;
  j["d"] = d;
  j["qubits_per_particle"] = qubits_per_particle;
  j["two_particle"] = two_particle;
  j["extrapolated"] = extrapolated;
  j["bands"] = bands;
  j["bounds"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : values) j["bounds"][name] = value;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : metadata) j["metadata"][name] = value;
  return j.dump(2);
}

BoundReport report(const RegistryOperator& op, const EncodingScheme& scheme, const ReportOptions& options) {
  BoundReport rep;
  rep.encoding = scheme.token();
  rep.d = scheme.levels();
  rep.qubits_per_particle = scheme.qubit_count();

  std::vector<const DLevelOperator*> factors;
  if (const auto* one = std::get_if<DLevelOperator>(&op)) {
    rep.operator_label = one->label();
    factors.push_back(one);
  } else {
    const auto& two = std::get<TwoParticleOperator>(op);
    rep.operator_label = two.label();
    rep.two_particle = true;
    for (const auto& p : two.products()) {
      factors.push_back(&p.first);
      factors.push_back(&p.second);
    }
  }
  if (factors.front()->levels() != scheme.levels()) {
    throw std::domain_error("bounds: operator and encoding disagree on d");
  }

  BandProfile bands;
  for (const auto* f : factors) {
    const BandProfile b = band_profile(*f);
    bands.insert(b.begin(), b.end());
  }
  rep.bands.assign(bands.begin(), bands.end());

  const std::size_t d = scheme.levels();
  if (scheme.is_compact()) {
    const std::size_t k = scheme.qubit_count();
    rep.extrapolated = (std::size_t{1} << k) != d;
    if (!rep.two_particle) {
      const DLevelOperator& one = *factors.front();
      double total = 0.0;
      for (const auto& [idx, value] : one.entries()) {
        if (idx.first >= idx.second) continue;
        const std::size_t h = hamming(scheme.encode(idx.first), scheme.encode(idx.second));
        const double bound = single_term_bound(h, k);
        rep.values["UB_single_term_h" + std::to_string(h)] = bound;
        total += bound;
      }
      rep.values["UB_single_term_total"] = total;
      rep.values["UB_all_strings"] = all_strings_bound(k);
      rep.values["LB_all_strings"] = static_cast<double>(all_strings_lower(k));
    } else {
      rep.values["UB_all_strings_2K"] = two_particle_all_bound(k);
      rep.values["LB_all_strings_2K"] = static_cast<double>(two_particle_lower(k));
    }
  } else if (scheme.kind() == EncodingKind::Unary) {
    std::vector<std::size_t> off_diagonal;
    for (std::size_t w : bands) {
      if (w > 0) off_diagonal.push_back(w);
    }
    if (!rep.two_particle) {
      double inversion = 0.0;
      double linear = 0.0;
      for (std::size_t w : off_diagonal) {
        const double inv = unary_inversion_bound(w, d);
        const double lin = unary_linear_bound(w, d);
        rep.values["UB_unary_inversion_w" + std::to_string(w)] = inv;
        rep.values["UB_unary_linear_w" + std::to_string(w)] = lin;
        inversion += inv;
        linear += lin;
      }
      rep.values["UB_unary_inversion"] = inversion;
      rep.values["UB_unary_linear"] = linear;
      if (off_diagonal.size() == d - 1) {
        rep.values["UB_unary_dense"] = unary_dense_bound(d, options.dense_corrected);
        rep.metadata["depth_unary_dense"] = 2.0 * static_cast<double>(d) - 3.0;
        rep.metadata["dense_bound_corrected"] = options.dense_corrected ? 1.0 : 0.0;
      }
    } else {
      const std::size_t w = off_diagonal.empty() ? 0 : off_diagonal.back();
      const TwoParticleKind kind = w == 0   ? TwoParticleKind::DiagDiag
                                   : w == 1 ? TwoParticleKind::Banded1
                                            : TwoParticleKind::BandedWide;
      rep.values["UB_unary_2pcl"] = unary_two_particle_bound(kind, w, d);
      if (kind != TwoParticleKind::BandedWide) {
        rep.metadata["depth_unary_2pcl"] = 2.0 * static_cast<double>(d) - 1.0;
      }
    }
  }
  return rep;
}

}  // namespace quditmap::bounds
