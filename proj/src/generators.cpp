#include "tscx/generators.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "tscx/error.hpp"
#include "tscx/rng.hpp"

namespace tscx {

double normal_quantile(double p) {
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r + 6.7265770927008700853e+4) * r +
                4.5921953931549871457e+4) * r + 1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r + 3.9307895800092710610e+4) * r +
                2.1213794301586595867e+4) * r + 5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0);
  }
  double r = q < 0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r + 2.41780725177450611770e-1) * r +
                1.27045825245236838258e+0) * r + 3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
             4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r + 1.51986665636164571966e-2) * r +
                 1.48103976427480074590e-1) * r + 6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
  } else {
    r -= 5.0;
    value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r + 1.24266094738807843860e-3) * r +
                2.65321895265761230930e-2) * r + 2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
             5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r + 1.84631831751005468180e-5) * r +
                 7.86869131145613259100e-4) * r + 1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0 ? -value : value;
}

double Xoshiro256::normal() noexcept { return normal_quantile(uniform_open()); }

double Xoshiro256::exponential(double rate) noexcept { return -std::log1p(-uniform()) / rate; }

Series generate_iid(IidDistribution dist, std::size_t n, std::uint64_t seed, double rate) {
  if (n < 1) throw Error(ErrorKind::usage, "series length must be >= 1");
  if (!(rate > 0.0) || !std::isfinite(rate)) throw Error(ErrorKind::usage, "exponential rate must be > 0");
  Xoshiro256 rng(seed);
  std::vector<double> out(n);
  switch (dist) {
    case IidDistribution::uniform:
      for (auto& v : out) v = rng.uniform();
      return Series(std::move(out), "uniform");
    case IidDistribution::normal:
      for (auto& v : out) v = rng.normal();
      return Series(std::move(out), "normal");
    case IidDistribution::exponential:
      for (auto& v : out) v = rng.exponential(rate);
      return Series(std::move(out), "exponential");
  }
  throw Error(ErrorKind::usage, "unknown distribution");
}

Series logistic_map(double r, double x0, std::size_t keep, std::size_t total) {
  if (!(r > 0.0 && r <= 4.0)) throw Error(ErrorKind::usage, "logistic r must lie in (0, 4]");
  if (!(x0 > 0.0 && x0 < 1.0)) throw Error(ErrorKind::usage, "logistic x0 must lie in (0, 1)");
  if (keep < 1 || keep > total) throw Error(ErrorKind::usage, "logistic map needs 1 <= keep <= total");

  std::vector<double> out;
  out.reserve(keep);
  const std::size_t first_kept = total - keep;
  double x = x0;
  for (std::size_t i = 0; i < total; ++i) {
    if (i > 0) x = r * x * (1.0 - x);
    if (!(x > 0.0 && x < 1.0)) throw Error(ErrorKind::numerical, "orbit escaped (0, 1) at step " + std::to_string(i));
    if (i >= first_kept) out.push_back(x);
  }
  std::ostringstream label;
  label << "logistic_r" << r;
  return Series(std::move(out), label.str());
}

bool is_stationary(std::span<const double> ar) {
  // Step-down (reverse Levinson) recursion: stationary iff every partial
  // autocorrelation has modulus < 1.
  std::vector<double> a(ar.begin(), ar.end());
  for (std::size_t k = a.size(); k > 0; --k) {
    const double phi = a[k - 1];
    if (!std::isfinite(phi) || std::abs(phi) >= 1.0) return false;
    const double denom = 1.0 - phi * phi;
    std::vector<double> next(k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) next[j] = (a[j] + phi * a[k - 2 - j]) / denom;
    a = std::move(next);
  }
  return true;
}

Series arma_simulate(std::span<const double> ar, std::span<const double> ma, std::size_t n, std::size_t burn_in,
                     std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::usage, "series length must be >= 1");
  if (!is_stationary(ar)) throw Error(ErrorKind::usage, "unstable process: AR polynomial has a root on or inside the unit circle");
  for (double c : ma) {
    if (!std::isfinite(c)) throw Error(ErrorKind::usage, "MA coefficients must be finite");
  }

  Xoshiro256 rng(seed);
  const std::size_t total = burn_in + n;
  std::vector<double> x(total, 0.0);
  std::vector<double> e(total, 0.0);
  for (std::size_t t = 0; t < total; ++t) {
    e[t] = rng.normal();
    double v = e[t];
    for (std::size_t i = 0; i < ar.size() && i < t; ++i) v += ar[i] * x[t - 1 - i];
    for (std::size_t j = 0; j < ma.size() && j < t; ++j) v += ma[j] * e[t - 1 - j];
    x[t] = v;
  }
  std::ostringstream label;
  label << "arma(" << ar.size() << "," << ma.size() << ")";
  return Series(std::vector<double>(x.begin() + static_cast<std::ptrdiff_t>(burn_in), x.end()), label.str());
}

Series add_noise(const Series& series, double amount, NoiseScale scale, std::uint64_t seed) {
  if (!(amount >= 0.0) || !std::isfinite(amount)) throw Error(ErrorKind::usage, "noise amount must be >= 0");
  const double sigma = scale == NoiseScale::relative_sd ? amount * summary(series).sd : amount;
  if (sigma == 0.0) return series;
  Xoshiro256 rng(seed);
  std::vector<double> out(series.values().begin(), series.values().end());
  for (auto& v : out) v += sigma * rng.normal();
  return Series(std::move(out), series.label() + "+noise");
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::uniform: return "uniform";
    case GeneratorKind::normal: return "normal";
    case GeneratorKind::exponential: return "exponential";
    case GeneratorKind::logistic_map: return "logistic_map";
    case GeneratorKind::arma: return "arma";
    case GeneratorKind::noise_overlay: return "noise_overlay";
  }
  return "unknown";
}

namespace {

GeneratorKind parse_kind(const std::string& s) {
  for (auto k : {GeneratorKind::uniform, GeneratorKind::normal, GeneratorKind::exponential,
                 GeneratorKind::logistic_map, GeneratorKind::arma, GeneratorKind::noise_overlay}) {
    if (s == to_string(k)) return k;
  }
  throw Error(ErrorKind::usage, "unknown generator kind '" + s + "'");
}

GeneratorSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::usage, "generator spec must be a JSON object");
  GeneratorSpec spec;
  spec.kind = parse_kind(j.at("kind").get<std::string>());
  spec.length = j.value("length", std::size_t{1000});
  spec.burn_in = j.value("burn_in", spec.kind == GeneratorKind::arma ? kDefaultArmaBurnIn : std::size_t{0});
  spec.seed = j.value("seed", std::uint64_t{0});

  const nlohmann::json params = j.value("params", nlohmann::json::object());
  switch (spec.kind) {
    case GeneratorKind::exponential:
      spec.rate = params.value("rate", 1.0);
      break;
    case GeneratorKind::logistic_map:
      spec.r = params.value("r", 3.5);
      spec.x0 = params.value("x0", 0.3);
      break;
    case GeneratorKind::arma:
      spec.ar = params.value("ar", std::vector<double>{});
      spec.ma = params.value("ma", std::vector<double>{});
      break;
    case GeneratorKind::noise_overlay:
      if (params.contains("sd_multiplier")) {
        spec.noise_scale = NoiseScale::relative_sd;
        spec.noise_amount = params.at("sd_multiplier").get<double>();
      } else {
        spec.noise_scale = NoiseScale::absolute;
        spec.noise_amount = params.value("sd", 0.0);
      }
      if (!j.contains("base")) throw Error(ErrorKind::usage, "noise_overlay needs a 'base' generator spec");
      spec.base = std::make_shared<const GeneratorSpec>(spec_from_json(j.at("base")));
      break;
    default:
      break;
  }
  return spec;
}

nlohmann::json spec_to_json(const GeneratorSpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  switch (spec.kind) {
    case GeneratorKind::exponential: params["rate"] = spec.rate; break;
    case GeneratorKind::logistic_map:
      params["r"] = spec.r;
      params["x0"] = spec.x0;
      break;
    case GeneratorKind::arma:
      params["ar"] = spec.ar;
      params["ma"] = spec.ma;
      break;
    case GeneratorKind::noise_overlay:
      params[spec.noise_scale == NoiseScale::relative_sd ? "sd_multiplier" : "sd"] = spec.noise_amount;
      break;
    default: break;
  }
  nlohmann::json j = {{"kind", std::string(to_string(spec.kind))},
                      {"params", params},
                      {"length", spec.length},
                      {"burn_in", spec.burn_in},
                      {"seed", spec.seed}};
  if (spec.kind == GeneratorKind::noise_overlay && spec.base) j["base"] = spec_to_json(*spec.base);
  return j;
}

}  // namespace

void validate(const GeneratorSpec& spec) {
  if (spec.length < 1) throw Error(ErrorKind::usage, "generator length must be >= 1");
  switch (spec.kind) {
    case GeneratorKind::exponential:
      if (!(spec.rate > 0.0)) throw Error(ErrorKind::usage, "exponential rate must be > 0");
      break;
    case GeneratorKind::logistic_map:
      if (!(spec.r > 0.0 && spec.r <= 4.0)) throw Error(ErrorKind::usage, "logistic r must lie in (0, 4]");
      if (!(spec.x0 > 0.0 && spec.x0 < 1.0)) throw Error(ErrorKind::usage, "logistic x0 must lie in (0, 1)");
      break;
    case GeneratorKind::arma:
      if (!is_stationary(spec.ar)) throw Error(ErrorKind::usage, "unstable process");
      break;
    case GeneratorKind::noise_overlay:
      if (!spec.base) throw Error(ErrorKind::usage, "noise_overlay needs a base spec");
      if (!(spec.noise_amount >= 0.0)) throw Error(ErrorKind::usage, "noise amount must be >= 0");
      validate(*spec.base);
      break;
    default: break;
  }
}

Series generate(const GeneratorSpec& spec) {
  validate(spec);
  const std::size_t total = spec.burn_in + spec.length;
  auto drop_burn_in = [&](const Series& s) {
    if (spec.burn_in == 0) return s;
    return Series(std::vector<double>(s.values().begin() + static_cast<std::ptrdiff_t>(spec.burn_in), s.values().end()),
                  s.label());
  };
  switch (spec.kind) {
    case GeneratorKind::uniform: return drop_burn_in(generate_iid(IidDistribution::uniform, total, spec.seed));
    case GeneratorKind::normal: return drop_burn_in(generate_iid(IidDistribution::normal, total, spec.seed));
    case GeneratorKind::exponential:
      return drop_burn_in(generate_iid(IidDistribution::exponential, total, spec.seed, spec.rate));
    case GeneratorKind::logistic_map: return logistic_map(spec.r, spec.x0, spec.length, total);
    case GeneratorKind::arma: return arma_simulate(spec.ar, spec.ma, spec.length, spec.burn_in, spec.seed);
    case GeneratorKind::noise_overlay: {
      const Series base = generate(*spec.base);
      return add_noise(base, spec.noise_amount, spec.noise_scale, spec.seed);
    }
  }
  throw Error(ErrorKind::usage, "unknown generator kind");
}

GeneratorSpec parse_generator_spec(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
    GeneratorSpec spec = spec_from_json(j);
    validate(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::usage, std::string("invalid generator spec: ") + e.what());
  }
}

std::string to_json(const GeneratorSpec& spec) { return spec_to_json(spec).dump(); }

}  // namespace tscx
