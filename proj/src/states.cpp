#include "qng/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "qng/error.hpp"
#include "qng/quadrature.hpp"
#include "qng/rng.hpp"

namespace qng {
namespace {

constexpr double kPi = std::numbers::pi;

// Per-level populations of an (untruncated) single-mode distribution: returns
// w_n for n = 0.. until the terms are negligible past `min_levels`. Parity
// states vanish on every other level, so the stop looks at the last four
// levels relative to the largest weight seen.
std::vector<double> populations(const std::function<double(int)>& log_weight, int min_levels) {
  std::vector<double> w;
  double peak = 0.0;
  for (int n = 0;; ++n) {
    const double lw = log_weight(n);
    w.push_back(std::isfinite(lw) ? std::exp(lw) : 0.0);
    peak = std::max(peak, w.back());
    if (n >= min_levels && n > 8 && peak > 0.0) {
      const double recent = *std::max_element(w.end() - 4, w.end());
      if (recent < 1e-40 * peak) break;
    }
    if (n > 100000) break;
  }
  return w;
}

double tail_from(const std::vector<double>& w, int cutoff, double total) {
  double tail = 0.0;
  for (std::size_t n = static_cast<std::size_t>(cutoff); n < w.size(); ++n) tail += w[n];
  return tail / total;
}

int required_cutoff(const std::vector<double>& w, double total, double tol) {
  double tail = 0.0;
  for (std::size_t n = w.size(); n-- > 0;) {
    if ((tail + w[n]) / total > tol) return static_cast<int>(n) + 1;
    tail += w[n];
  }
  return 1;
}

[[noreturn]] void truncation_failure(const StateSpec& spec, int cutoff, int needed, double tail) {
  std::ostringstream os;
  os << "cutoff " << cutoff << " too small for " << to_string(spec) << " (tail mass " << tail
     << "); need cutoff >= " << needed;
  throw TruncationError(os.str(), needed);
}

// Single-mode pure state from log-magnitudes and signs/phases per level.
FockState single_mode_from_weights(const StateSpec& spec, int cutoff, double tol,
                                   const std::function<double(int)>& log_weight,
                                   const std::function<cplx(int)>& phase) {
  const auto w = populations(log_weight, cutoff);
  double total = 0.0;
  for (double v : w) total += v;
  const double tail = tail_from(w, cutoff, total);
  if (tail > tol) truncation_failure(spec, cutoff, required_cutoff(w, total, tol), tail);
  CVector amps = CVector::Zero(cutoff);
  for (int n = 0; n < cutoff && n < static_cast<int>(w.size()); ++n)
    amps(n) = std::sqrt(w[static_cast<std::size_t>(n)] / total) * phase(n);
  return FockState::from_amplitudes(std::move(amps), 1, cutoff, tail);
}

FockState diagonal_state(const StateSpec& spec, int cutoff, double tol, const std::function<double(int)>& log_weight) {
  const auto w = populations(log_weight, cutoff);
  double total = 0.0;
  for (double v : w) total += v;
  const double tail = tail_from(w, cutoff, total);
  if (tail > tol) truncation_failure(spec, cutoff, required_cutoff(w, total, tol), tail);
  CMatrix rho = CMatrix::Zero(cutoff, cutoff);
  for (int n = 0; n < cutoff && n < static_cast<int>(w.size()); ++n) rho(n, n) = w[static_cast<std::size_t>(n)] / total;
  return FockState::from_density(std::move(rho), 1, cutoff, tail);
}

double log_coherent_weight(int n, double gamma) {
  // |gamma^n / sqrt(n!)|^2 without the e^{-gamma^2} factor
  if (gamma == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  return 2.0 * n * std::log(std::abs(gamma)) - std::lgamma(n + 1.0);
}

void require_cutoff(const StateSpec& spec, int cutoff, int needed) {
  if (cutoff < needed) truncation_failure(spec, cutoff, needed, 1.0);
}

double parse_double(std::string_view s, std::string_view context) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("bad number '" + std::string(s) + "' in " + std::string(context));
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kNames[] = {
    {Family::Fock, "fock"},
    {Family::PhaseAveragedCoherent, "pacs"},
    {Family::EvenCat, "evencat"},
    {Family::OddCat, "oddcat"},
    {Family::Pnes, "pnes"},
    {Family::PhotonSubtractedTmsv, "pstmsv"},
    {Family::EntangledCoherent, "ecs"},
    {Family::NoisySinglePhoton, "noisy1"},
    {Family::RandomPure, "randpure"},
    {Family::RandomMixed, "randmixed"},
    {Family::Coherent, "coherent"},
    {Family::SqueezedVacuum, "squeezed"},
    {Family::Thermal, "thermal"},
    {Family::Tmsv, "tmsv"},
};

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

int StateSpec::modes() const {
  switch (family) {
    case Family::Pnes:
    case Family::PhotonSubtractedTmsv:
    case Family::EntangledCoherent:
    case Family::Tmsv:
      return 2;
    default:
      return 1;
  }
}

void StateSpec::validate() const {
  auto fail = [&](const char* what) { throw DomainError(to_string(*this) + ": " + what); };
  if (!std::isfinite(a) || !std::isfinite(b)) fail("non-finite parameter");
  switch (family) {
    case Family::Fock:
      if (a < 0 || a != std::floor(a)) fail("photon number must be a non-negative integer");
      break;
    case Family::PhaseAveragedCoherent:
    case Family::EvenCat:
    case Family::EntangledCoherent:
      if (a < 0) fail("gamma must be >= 0");
      if (family == Family::EntangledCoherent && a == 0) fail("gamma must be > 0");
      break;
    case Family::OddCat:
      if (a <= 0) fail("odd cat needs gamma > 0");
      break;
    case Family::Pnes:
    case Family::NoisySinglePhoton:
      if (a < 0 || a > 1) fail("f must lie in [0, 1]");
      break;
    case Family::PhotonSubtractedTmsv:
      if (a <= 0) fail("squeezing must be > 0");
      break;
    case Family::RandomPure:
    case Family::RandomMixed:
      if (a < 1 || a != std::floor(a)) fail("n_max must be an integer >= 1");
      break;
    case Family::Coherent:
      break;
    case Family::SqueezedVacuum:
    case Family::Tmsv:
      if (a < 0) fail("squeezing must be >= 0");
      break;
    case Family::Thermal:
      if (a < 0) fail("mean photon number must be >= 0");
      break;
  }
}

std::string family_name(Family family) {
  for (const auto& fn : kNames)
    if (fn.family == family) return fn.name;
  return "unknown";
}

std::string to_string(const StateSpec& spec) {
  std::string out = family_name(spec.family);
  switch (spec.family) {
    case Family::Fock:
      return out + ":" + std::to_string(static_cast<long long>(spec.a));
    case Family::RandomPure:
    case Family::RandomMixed:
      return out + ":" + std::to_string(static_cast<long long>(spec.a)) + ":seed=" + std::to_string(spec.seed);
    case Family::PhotonSubtractedTmsv:
      return out + ":" + format_number(spec.a) + ":" + format_number(spec.b);
    default:
      return out + ":" + format_number(spec.a);
  }
}

StateSpec parse_state_spec(std::string_view text) {
  if (text == "vacuum") return StateSpec::fock(0);
  const auto parts = split(text, ':');
  const std::string_view head = parts.front();
  const FamilyName* found = nullptr;
  for (const auto& fn : kNames)
    if (head == fn.name) found = &fn;
  if (found == nullptr) throw ParseError("unknown state family '" + std::string(head) + "'");

  StateSpec spec;
  spec.family = found->family;
  auto need = [&](std::size_t count) {
    if (parts.size() != count) throw ParseError("wrong number of fields in state spec '" + std::string(text) + "'");
  };
  switch (spec.family) {
    case Family::RandomPure:
    case Family::RandomMixed: {
      if (parts.size() != 2 && parts.size() != 3) need(3);
      spec.a = parse_double(parts[1], text);
      if (parts.size() == 3) {
        std::string_view s = parts[2];
        if (s.rfind("seed=", 0) == 0) s.remove_prefix(5);
        std::uint64_t seed = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad seed in '" + std::string(text) + "'");
        spec.seed = seed;
      }
      break;
    }
    case Family::PhotonSubtractedTmsv:
      if (parts.size() != 2) need(3);
      spec.a = parse_double(parts[1], text);
      if (parts.size() == 3) spec.b = parse_double(parts[2], text);
      break;
    default:
      need(2);
      spec.a = parse_double(parts[1], text);
  }
  try {
    spec.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return spec;
}

int default_cutoff(const StateSpec& spec) {
  if (spec.family == Family::EntangledCoherent) return 40;
  return spec.modes() == 1 ? kDefaultCutoffSingle : kDefaultCutoffTwo;
}

RVector random_real_amplitudes(int n_max, std::uint64_t seed) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  Rng rng = Rng::stream(seed, 0);
  RVector c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) c(n) = rng.normal();
  return c / c.norm();
}

FockState random_pure(int n_max, std::uint64_t seed, int cutoff) {
  if (cutoff == 0) cutoff = n_max + 1;
  if (cutoff < n_max + 1) throw TruncationError("cutoff below n_max + 1", n_max + 1);
  const RVector c = random_real_amplitudes(n_max, seed);
  CVector amps = CVector::Zero(cutoff);
  for (int n = 0; n <= n_max; ++n) amps(n) = c(n);
  return FockState::from_amplitudes(std::move(amps), 1, cutoff);
}

FockState random_mixed(int n_max, std::uint64_t seed, int cutoff) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (cutoff == 0) cutoff = n_max + 1;
  if (cutoff < n_max + 1) throw TruncationError("cutoff below n_max + 1", n_max + 1);
  Rng rng = Rng::stream(seed, 0);
  CVector chi1 = CVector::Zero(cutoff), chi2 = CVector::Zero(cutoff);
  for (int n = 0; n <= n_max; ++n) chi1(n) = rng.normal();
  for (int n = 0; n <= n_max; ++n) chi2(n) = rng.normal();
  const double f = rng.uniform();
  return mix(f, FockState::from_amplitudes(chi1, 1, cutoff), FockState::from_amplitudes(chi2, 1, cutoff));
}

double cat_mean_photon_number(double gamma, bool even) {
  const double g2 = gamma * gamma;
  if (g2 == 0.0) return even ? 0.0 : 1.0;
  // gamma^2 (e^{2g2} -+ 1) / (e^{2g2} +- 1) = gamma^2 tanh(g2) or gamma^2 coth(g2)
  return even ? g2 * std::tanh(g2) : g2 / std::tanh(g2);
}

double cat_gamma_for_energy(double energy, bool even) {
  if (energy < 0 || (!even && energy < 1.0)) throw DomainError("energy out of range for cat state");
  double lo = 0.0, hi = std::max(1.0, std::sqrt(energy) + 2.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (cat_mean_photon_number(mid, even) < energy ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double pnes_fraction_for_squeezing(double s) {
  const double sh = std::sinh(s);
  return sh * sh / std::cosh(2.0 * s);
}

FockState build(const StateSpec& spec, int cutoff, double tol) {
  spec.validate();
  if (cutoff < 1) throw ShapeError("cutoff must be >= 1");
  switch (spec.family) {
    case Family::Fock: {
      const int n = static_cast<int>(spec.a);
      require_cutoff(spec, cutoff, n + 1);
      CVector amps = CVector::Zero(cutoff);
      amps(n) = 1.0;
      return FockState::from_amplitudes(std::move(amps), 1, cutoff);
    }
    case Family::PhaseAveragedCoherent: {
      const double g = spec.a;
      return diagonal_state(spec, cutoff, tol, [g](int n) { return log_coherent_weight(n, g) - g * g; });
    }
    case Family::EvenCat:
    case Family::OddCat: {
      const double g = spec.a;
      const int parity = spec.family == Family::EvenCat ? 0 : 1;
      return single_mode_from_weights(
          spec, cutoff, tol,
          [g, parity](int n) { return n % 2 == parity ? log_coherent_weight(n, g) : -std::numeric_limits<double>::infinity(); },
          [g](int n) { return (g < 0 && n % 2 == 1) ? cplx(-1.0) : cplx(1.0); });
    }
    case Family::Coherent: {
      const double g = spec.a;
      return single_mode_from_weights(spec, cutoff, tol, [g](int n) { return log_coherent_weight(n, g); },
                                      [g](int n) { return (g < 0 && n % 2 == 1) ? cplx(-1.0) : cplx(1.0); });
    }
    case Family::SqueezedVacuum: {
      const double r = spec.a;
      const double lam = std::tanh(r);
      // c_{2m} = (-tanh r)^m sqrt((2m)!) / (2^m m!) / sqrt(cosh r)
      return single_mode_from_weights(
          spec, cutoff, tol,
          [lam](int n) {
            if (n % 2 == 1) return -std::numeric_limits<double>::infinity();
            const int m = n / 2;
            if (lam == 0.0) return m == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
            return 2.0 * m * std::log(lam) + std::lgamma(2.0 * m + 1) - 2.0 * m * std::log(2.0) - 2.0 * std::lgamma(m + 1.0);
          },
          [](int n) { return (n / 2) % 2 == 1 ? cplx(-1.0) : cplx(1.0); });
    }
    case Family::Thermal: {
      const double nb = spec.a;
      return diagonal_state(spec, cutoff, tol, [nb](int n) {
        if (nb == 0.0) return n == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
        return n * std::log(nb) - (n + 1) * std::log1p(nb);
      });
    }
    case Family::NoisySinglePhoton: {
      require_cutoff(spec, cutoff, 2);
      CMatrix rho = CMatrix::Zero(cutoff, cutoff);
      rho(0, 0) = 1.0 - spec.a;
      rho(1, 1) = spec.a;
      return FockState::from_density(std::move(rho), 1, cutoff);
    }
    case Family::RandomPure:
      require_cutoff(spec, cutoff, static_cast<int>(spec.a) + 1);
      return random_pure(static_cast<int>(spec.a), spec.seed, cutoff);
    case Family::RandomMixed:
      require_cutoff(spec, cutoff, static_cast<int>(spec.a) + 1);
      return random_mixed(static_cast<int>(spec.a), spec.seed, cutoff);
    case Family::Pnes: {
      require_cutoff(spec, cutoff, 2);
      CVector amps = CVector::Zero(static_cast<Eigen::Index>(cutoff) * cutoff);
      amps(static_cast<Eigen::Index>(two_mode_index(0, 0, cutoff))) = std::sqrt(1.0 - spec.a);
      amps(static_cast<Eigen::Index>(two_mode_index(1, 1, cutoff))) = std::sqrt(spec.a);
      return FockState::from_amplitudes(std::move(amps), 2, cutoff);
    }
    case Family::Tmsv:
    case Family::PhotonSubtractedTmsv: {
      // TMSV: c_n = (-e^{i varphi} tanh s)^n / cosh s on |n, n>.
      // a1 a2 TMSV = sum_n n c_n |n-1, n-1>.
      const bool subtracted = spec.family == Family::PhotonSubtractedTmsv;
      const double lam = std::tanh(spec.a);
      const cplx step = -std::polar(1.0, spec.b);
      const auto log_weight = [lam, subtracted](int m) {
        if (lam == 0.0) return m == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
        const int n = subtracted ? m + 1 : m;
        return 2.0 * n * std::log(lam) + (subtracted ? 2.0 * std::log(static_cast<double>(n)) : 0.0);
      };
      const auto w = populations(log_weight, cutoff);
      double total = 0.0;
      for (double v : w) total += v;
      const double tail = tail_from(w, cutoff, total);
      if (tail > tol) truncation_failure(spec, cutoff, required_cutoff(w, total, tol), tail);
      CVector amps = CVector::Zero(static_cast<Eigen::Index>(cutoff) * cutoff);
      for (int m = 0; m < cutoff && m < static_cast<int>(w.size()); ++m) {
        const int n = subtracted ? m + 1 : m;
        amps(static_cast<Eigen::Index>(two_mode_index(m, m, cutoff))) =
            std::sqrt(w[static_cast<std::size_t>(m)] / total) * std::pow(step, n);
      }
      return FockState::from_amplitudes(std::move(amps), 2, cutoff, tail);
    }
    case Family::EntangledCoherent: {
      // sqrt(N) (|g,g> - |-g,-g>), N = 1 / (2 - 2 e^{-4 g^2})
      const double g = spec.a;
      const double norm = 1.0 / (2.0 - 2.0 * std::exp(-4.0 * g * g));
      CVector amps = CVector::Zero(static_cast<Eigen::Index>(cutoff) * cutoff);
      double kept = 0.0;
      for (int n1 = 0; n1 < cutoff; ++n1)
        for (int n2 = 0; n2 < cutoff; ++n2) {
          if ((n1 + n2) % 2 == 0) continue;
          const double lw = log_coherent_weight(n1, g) + log_coherent_weight(n2, g);
          const double amp = 2.0 * std::sqrt(norm) * std::exp(-g * g + 0.5 * lw);
          amps(static_cast<Eigen::Index>(two_mode_index(n1, n2, cutoff))) = amp;
          kept += amp * amp;
        }
      const double tail = std::max(0.0, 1.0 - kept);
      if (tail > tol) {
        int needed = cutoff;
        while (true) {
          ++needed;
          double k2 = 0.0;
          for (int n1 = 0; n1 < needed; ++n1)
            for (int n2 = 0; n2 < needed; ++n2)
              if ((n1 + n2) % 2 == 1) k2 += 4.0 * norm * std::exp(-2.0 * g * g + log_coherent_weight(n1, g) + log_coherent_weight(n2, g));
          if (1.0 - k2 <= tol || needed > 400) break;
        }
        truncation_failure(spec, cutoff, needed, tail);
      }
      return FockState::from_amplitudes(std::move(amps), 2, cutoff, tail);
    }
  }
  throw DomainError("unhandled state family");
}

namespace {

// Printed density e^{-x^2} H_n(x)^2 / (2^n n! sqrt(pi)), with the physicists'
// Hermite polynomial from its three-term recurrence in extended precision.
double fock_density(int n, double x) {
  long double h_prev = 1.0L, h = 2.0L * x;
  if (n == 0) h = 1.0L;
  for (int k = 1; k < n; ++k) {
    const long double next = 2.0L * x * h - 2.0L * k * h_prev;
    h_prev = h;
    h = next;
  }
  const long double log_norm = n * std::log(2.0L) + std::lgamma(static_cast<long double>(n) + 1.0L) + 0.5L * std::log(static_cast<long double>(kPi));
  return static_cast<double>(std::exp(-static_cast<long double>(x) * x - log_norm) * h * h);
}

double cat_density(double gamma, bool even, double phi, double x) {
  const double sign = even ? 1.0 : -1.0;
  const double c = std::cos(phi), s = std::sin(phi);
  const double z = 2.0 * std::sqrt(2.0) * gamma * x * c;
  const double base = -x * x - 2.0 * gamma * gamma * c * c;
  const double denom = 1.0 + sign * std::exp(-2.0 * gamma * gamma);
  // cosh(z) e^{base} computed without overflow
  const double cosh_term = 0.5 * (std::exp(base + std::abs(z)) + std::exp(base - std::abs(z)));
  const double cos_term = std::exp(base) * std::cos(2.0 * std::sqrt(2.0) * gamma * x * s);
  return (cosh_term + sign * cos_term) / (std::sqrt(kPi) * denom);
}

// The interference term enters with (2x^2 - 1): <x1 x2> = +sqrt(f(1-f)) at phi1 = phi2 = 0.
double pnes_density(double f, double theta1, double phi1, double phi2, double x) {
  const double x2 = x * x, x4 = x2 * x2;
  const double bracket = 8.0 + f * (-5.0 + 4.0 * x2 + 4.0 * x4) + f * (-3.0 + 12.0 * x2 - 4.0 * x4) * std::cos(4.0 * theta1) +
                         8.0 * std::sqrt(f * (1.0 - f)) * (2.0 * x2 - 1.0) * std::cos(phi1 + phi2) * std::sin(2.0 * theta1);
  return std::exp(-x2) / (8.0 * std::sqrt(kPi)) * bracket;
}

}  // namespace

QuadratureDistribution analytic_quadrature(const StateSpec& spec, const QuadratureDirection& direction,
                                           const QuadratureGrid& grid) {
  spec.validate();
  if (direction.modes() != spec.modes()) throw ShapeError("direction arity does not match the state");
  const auto xs = grid.abscissae();
  std::vector<double> p(xs.size());
  switch (spec.family) {
    case Family::Fock: {
      const int n = static_cast<int>(spec.a);
      for (std::size_t i = 0; i < xs.size(); ++i) p[i] = fock_density(n, xs[i]);
      break;
    }
    case Family::PhaseAveragedCoherent: {
      const double g = spec.a;
      for (int n = 0;; ++n) {
        const double w = std::exp(log_coherent_weight(n, g) - g * g);
        if (w > 0.0)
          for (std::size_t i = 0; i < xs.size(); ++i) p[i] += w * fock_density(n, xs[i]);
        if (n > g * g + 10 && w < 1e-20) break;
      }
      break;
    }
    case Family::EvenCat:
    case Family::OddCat: {
      const bool even = spec.family == Family::EvenCat;
      for (std::size_t i = 0; i < xs.size(); ++i) p[i] = cat_density(spec.a, even, direction.phis()[0], xs[i]);
      break;
    }
    case Family::Pnes: {
      const auto& ph = direction.phis();
      for (std::size_t i = 0; i < xs.size(); ++i) p[i] = pnes_density(spec.a, direction.thetas()[0], ph[0], ph[1], xs[i]);
      break;
    }
    default:
      throw NotAnalytic("no closed-form quadrature distribution for " + family_name(spec.family));
  }
  return QuadratureDistribution(grid, std::move(p));
}

std::vector<StateSpec> catalog_sweep() {
  std::vector<StateSpec> out;
  for (int n = 0; n <= 10; ++n) out.push_back(StateSpec::fock(n));
  for (double g : {0.25, 0.5, 1.0, 1.5, 2.0}) out.push_back(StateSpec::phase_averaged_coherent(g));
  for (double g : {0.5, 0.8, 1.0, 1.3, 1.6, 2.0}) out.push_back(StateSpec::even_cat(g));
  for (double g : {0.5, 0.8, 1.0, 1.3, 1.6, 2.0}) out.push_back(StateSpec::odd_cat(g));
  for (double f : {0.1, 0.25, 0.4, 0.6, 0.9}) out.push_back(StateSpec::noisy_single_photon(f));
  for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) out.push_back(StateSpec::pnes(f));
  out.push_back(StateSpec::photon_subtracted_tmsv(0.3, 0.0));
  out.push_back(StateSpec::photon_subtracted_tmsv(0.5, 0.7));
  out.push_back(StateSpec::entangled_coherent(0.5));
  out.push_back(StateSpec::entangled_coherent(1.0));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) out.push_back(StateSpec::random_pure(5, seed));
  for (std::uint64_t seed = 1; seed <= 4; ++seed) out.push_back(StateSpec::random_mixed(5, seed));
  out.push_back(StateSpec::coherent(1.0));
  out.push_back(StateSpec::squeezed_vacuum(0.5));
  out.push_back(StateSpec::thermal(1.0));
  out.push_back(StateSpec::tmsv(0.5));
  return out;
}

}  // namespace qng
