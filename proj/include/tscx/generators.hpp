#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tscx/series.hpp"

namespace tscx {

enum class IidDistribution { uniform, normal, exponential };

// Uniform(0,1) on [0,1), Normal(0,1) by inverse CDF, Exponential(rate) by
// inverse CDF. Bit-identical for a given (dist, n, seed).
Series generate_iid(IidDistribution dist, std::size_t n, std::uint64_t seed, double rate = 1.0);

// Iterates x <- r x (1 - x). The orbit x0, x1, ..., x_{total-1} has `total`
// points counting x0 itself; the last `keep` are returned.
Series logistic_map(double r, double x0, std::size_t keep, std::size_t total);

inline constexpr std::size_t kDefaultArmaBurnIn = 500;

// True when every root of 1 - ar_1 z - ... - ar_p z^p lies outside the unit
// circle (checked through the partial autocorrelations).
bool is_stationary(std::span<const double> ar);

// x_t = sum ar_i x_{t-i} + e_t + sum ma_j e_{t-j}, e_t iid N(0,1), zero
// initial state; the first burn_in outputs are discarded.
Series arma_simulate(std::span<const double> ar, std::span<const double> ma, std::size_t n, std::size_t burn_in,
                     std::uint64_t seed);

enum class NoiseScale {
  relative_sd,  // sigma = amount * sample SD of the input
  absolute,     // sigma = amount
};

Series add_noise(const Series& series, double amount, NoiseScale scale, std::uint64_t seed);

enum class GeneratorKind { uniform, normal, exponential, logistic_map, arma, noise_overlay };

std::string_view to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::uniform;
  std::size_t length = 1000;
  std::size_t burn_in = 0;
  std::uint64_t seed = 0;

  double rate = 1.0;  // exponential
  double r = 3.5;     // logistic_map
  double x0 = 0.3;    // logistic_map
  std::vector<double> ar;  // arma
  std::vector<double> ma;  // arma
  double noise_amount = 0.0;  // noise_overlay
  NoiseScale noise_scale = NoiseScale::absolute;
  std::shared_ptr<const GeneratorSpec> base;  // noise_overlay input
};

// Checks kind-specific ranges; throws Error(usage) on violation.
void validate(const GeneratorSpec& spec);

Series generate(const GeneratorSpec& spec);

// JSON object with fields kind, params, length, burn_in, seed (and base for
// noise_overlay). A missing burn_in defaults to 500 for arma and 0 otherwise.
GeneratorSpec parse_generator_spec(std::string_view json_text);
std::string to_json(const GeneratorSpec& spec);

}  // namespace tscx
