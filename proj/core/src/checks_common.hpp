#pragma once

#include <string>
#include <utility>

#include "supercong/checks.hpp"
#include "supercong/series.hpp"

namespace supercong::detail {

inline void require_prime_ge5(std::uint64_t p, const char* what) {
  if (p < 5 || !is_prime(p))
    throw NotPrime(std::string(what) + ": p must be a prime >= 5, got " + std::to_string(p));
}

inline Valuation require_p_integral(const ExactRational& x, std::uint64_t p, const std::string& what) {
  Valuation v = vp(x, p);
  if (v < 0) throw NotPIntegral(what + " has p in its denominator (v_p = " + v.to_string() + ")");
  return v;
}

inline std::string idx(const char* name, long long i) { return std::string(name) + "=" + std::to_string(i); }

inline std::string label(const std::string& base, std::initializer_list<std::pair<const char*, long long>> ix) {
  std::string s = base + "[";
  bool first = true;
  for (const auto& [k, v] : ix) {
    if (!first) s += ",";
    s += idx(k, v);
    first = false;
  }
  return s + "]";
}

/// Runs body(report); precision and p-integrality failures become error status.
template <class Body>
CheckReport guarded(CheckReport report, Body&& body) {
  try {
    body(report);
  } catch (const NotPIntegral& e) {
    report.error(std::string("NotPIntegral: ") + e.what());
  } catch (const OutOfPrecision& e) {
    report.error(std::string("OutOfPrecision: ") + e.what());
  }
  return report;
}

inline CheckReport make_report(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  return r;
}

/// H^p, H^{2p}, H^{3p}, all truncated to the precision of H.
struct HPowers {
  TruncatedSeries hp, h2p, h3p;
  const TruncatedSeries& get(int r) const { return r == 1 ? hp : (r == 2 ? h2p : h3p); }
};

inline HPowers h_powers(const TruncatedSeries& H, std::uint64_t p) {
  TruncatedSeries hp = pow_int(H, static_cast<std::int64_t>(p));
  TruncatedSeries h2p = mul(hp, hp);
  TruncatedSeries h3p = mul(h2p, hp);
  return {std::move(hp), std::move(h2p), std::move(h3p)};
}

}  // namespace supercong::detail
