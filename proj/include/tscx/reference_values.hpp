#pragma once

// Published reference scores used by the reproduction harness and the
// acceptance suite. Each block notes the source table, row set and columns.

#include <array>
#include <cstddef>
#include <string_view>

namespace tscx::reference {

// One column (or one scale) of a score table.
struct ScoreColumn {
  double sampen;
  double permen;
  double permtest;
  double permtest_p;
  double runs;
  double runs_p;
};

inline constexpr std::array<std::size_t, 6> kScales{1, 2, 3, 4, 5, 10};

// Comparison tolerances for deterministic cells.
inline constexpr double kEntropyTol = 1e-3;
inline constexpr double kChiSquareTol = 0.5;
inline constexpr double kRunsTol = 0.05;

// Logistic recipe: x0 = 0.3, 5000 points counting x0, keep the last 1000.
inline constexpr double kLogisticX0 = 0.3;
inline constexpr std::size_t kLogisticTotal = 5000;
inline constexpr std::size_t kLogisticKeep = 1000;
inline constexpr double kLogisticNoiseSd = 0.1;

// Table 1, "MSE analysis for random data": Uniform, Normal, Exponential
// blocks, columns = scale factors 1, 2, 3, 4, 5, 10. Random draws; the
// harness checks bands, not these points.
inline constexpr std::array<ScoreColumn, 6> kTable1Uniform{{
    {2.238808, 0.987112, 108.3935, 0.7471, -0.8859, 0.3757},
    {2.32396, 0.973145, 120.7855, 0.437094, -0.44766, 0.654397},
    {2.100495, 0.946222, 130.3399, 0.224877, 0.547999, 0.583693},
    {2.089392, 0.951224, 117.9717, 0.509409, -0.63373, 0.526258},
    {2.374906, 0.917653, 145.9562, 0.04717, -0.42533, 0.670593},
    {1.856298, 0.860831, 111.9328, 0.664233, -1.80916, 0.070426},
}};
inline constexpr std::array<ScoreColumn, 6> kTable1Normal{{
    {2.168564, 0.988476, 117.9929, 0.5089, -0.6328, 0.5269},
    {2.155924, 0.971931, 130.3844, 0.224066, 0.089532, 0.928659},
    {2.27835, 0.968727, 119.4328, 0.471603, -0.3288, 0.742307},
    {2.197225, 0.942845, 132.3682, 0.189728, -1.26746, 0.204991},
    {2.083466, 0.92731, 163.9508, 0.003987, -0.56711, 0.570638},
    {2.261763, 0.884947, 111.9328, 0.664233, -0.60305, 0.546473},
}};
inline constexpr std::array<ScoreColumn, 6> kTable1Exponential{{
    {1.669779, 0.98541, 93.9944, 0.9561, -0.5062, 0.6127},
    {1.665106, 0.985588, 127.9846, 0.270497, -2.68597, 0.007232},
    {1.768694, 0.959452, 123.0685, 0.380607, -0.8768, 0.380596},
    {1.650423, 0.953136, 108.374, 0.74757, 0.633729, 0.526258},
    {1.836711, 0.930561, 109.967, 0.711414, -0.14178, 0.887255},
    {1.581786, 0.873627, 111.9328, 0.664233, -1.20611, 0.227776},
}};

// Table 1 statistical bands at scale 1 (30 replications of 1000 points).
inline constexpr double kUniformSampEnLo = 2.1, kUniformSampEnHi = 2.4;
inline constexpr double kNormalPermEnLo = 0.975, kNormalPermEnHi = 0.995;
inline constexpr double kExponentialSampEnLo = 1.5, kExponentialSampEnHi = 1.8;
inline constexpr double kNullPValueFraction = 0.80;
inline constexpr double kMonotonePermEnFraction = 27.0 / 30.0;

// Table 2, "Scores for logistic map": columns r=3.5, r=3.7, r=3.9 and
// r=3.5 with N(0,0.1) noise.
inline constexpr std::array<std::string_view, 4> kTable2Labels{"r=3.5", "r=3.7", "r=3.9",
                                                               "r=3.5 with N(0,0.1) noise"};
inline constexpr std::array<double, 3> kTable2Rates{3.5, 3.7, 3.9};
inline constexpr std::array<ScoreColumn, 4> kTable2{{
    {0.0000, 0.2896, 5799.6520, 0.0, 31.5753, 0.0},
    {0.3479, 0.4978, 2781.8331, 0.0, 26.9561, 0.0},
    {0.4883, 0.6185, 1200.3280, 0.0, 14.3252, 0.0},
    {1.4431, 0.6781, 936.3438, 0.0, 28.2849, 0.0},
}};
// Band for the noisy column's SampEn (seed unknown; mean over replications).
inline constexpr double kTable2NoiseSampEnBand = 0.25;
inline constexpr double kTable2MaxP = 1e-10;

// Table 3, "MSE analysis for logistic map": r=3.7 and r=3.5 + N(0,0.1)
// blocks, columns = scale factors.
inline constexpr std::array<ScoreColumn, 6> kTable3Logistic37{{
    {0.3479, 0.4978, 2781.8331, 0.0000, 26.9561, 0.0000},
    {0.7899, 0.8134, 262.3685, 0.0000, -17.2798, 0.0000},
    {1.0515, 0.8494, 181.2398, 0.0002, 11.2888, 0.0000},
    {1.3852, 0.9134, 127.5694, 0.2791, -9.1257, 0.0000},
    {1.2181, 0.8667, 133.9598, 0.1649, 6.2382, 0.0000},
    {2.1832, 0.8239, 123.9256, 0.3601, 0.2010, 0.8407},
}};
inline constexpr std::array<ScoreColumn, 6> kTable3Logistic35Noise{{
    {1.4431, 0.6781, 936.3438, 0.0000, 28.2849, 0.0000},
    {2.2351, 0.9561, 103.9875, 0.8349, 2.1488, 0.0317},
    {1.8983, 0.7941, 246.6824, 0.0000, 10.3024, 0.0000},
    {2.3735, 0.9449, 103.5751, 0.8421, -1.3942, 0.1633},
    {2.2532, 0.8389, 169.9490, 0.0015, 4.2533, 0.0000},
    {2.2824, 0.8578, 123.9256, 0.3601, -0.4020, 0.6877},
}};

// "Scores for Santa Fe data": clean, sd/10, sd/5 and 1 sd noise columns.
inline constexpr std::array<std::string_view, 4> kSantaFeLabels{"clean", "sd/10 noise", "sd/5 noise", "1 sd noise"};
inline constexpr std::array<double, 4> kSantaFeNoise{0.0, 0.1, 0.2, 1.0};
inline constexpr std::array<ScoreColumn, 4> kSantaFe{{
    {0.7570, 0.5809, 1562.7060, 0.0, -15.3711, 0.0},
    {1.0441, 0.6933, 1045.5370, 0.0, -14.9967, 0.0},
    {1.3147, 0.7631, 817.5509, 0.0, -14.6170, 0.0},
    {2.1233, 0.9529, 198.3881, 0.0, -6.7707, 0.0},
}};

// "MSE analysis for Santa Fe data": clean and N(0, 0.2 sd) blocks.
inline constexpr std::array<ScoreColumn, 6> kSantaFeMseClean{{
    {0.7570, 0.5809, 1562.7060, 0.0000, -15.3711, 0.0000},
    {0.5752, 0.6306, 622.3253, 0.0000, 1.7011, 0.0889},
    {0.6507, 0.6316, 610.2527, 0.0000, 10.5226, 0.0000},
    {0.6111, 0.5927, 540.2703, 0.0000, 11.6606, 0.0000},
    {0.6406, 0.7528, 181.9454, 0.0002, 2.4102, 0.0159},
    {1.4328, 0.7734, 183.8897, 0.0001, 3.4173, 0.0006},
}};
inline constexpr std::array<ScoreColumn, 6> kSantaFeMseNoise{{
    {1.3401, 0.7443, 939.9436, 0.0000, -14.8702, 0.0000},
    {1.1230, 0.7534, 415.9501, 0.0000, 1.5221, 0.1280},
    {1.1285, 0.7135, 381.2034, 0.0000, 10.3024, 0.0000},
    {1.1460, 0.6995, 348.3164, 0.0000, 10.9002, 0.0000},
    {1.2615, 0.8386, 157.9526, 0.0098, 2.9773, 0.0029},
    {2.2513, 0.8236, 135.9184, 0.1376, 3.4173, 0.0006},
}};

// ARMA processes: "Score for ARMA data" columns ARMA(2,2), ARMA(1,1),
// ARMA(1,0), and the per-process MSE blocks.
struct ArmaRecipe {
  std::string_view label;
  std::array<double, 2> ar;
  std::size_t ar_order;
  std::array<double, 2> ma;
  std::size_t ma_order;
};
inline constexpr std::array<ArmaRecipe, 3> kArmaRecipes{{
    {"ARMA(2,2)", {0.9, -0.2}, 2, {-0.7, 0.1}, 2},
    {"ARMA(1,1)", {0.7, 0.0}, 1, {-0.2, 0.0}, 1},
    {"ARMA(1,0)", {0.9, 0.0}, 1, {0.0, 0.0}, 0},
}};
inline constexpr std::size_t kArmaLength = 1000;
inline constexpr std::array<ScoreColumn, 3> kArmaTable{{
    {2.2286, 0.9833, 126.3924, 0.3041, -3.9865, 0.0001},
    {2.0238, 0.9795, 147.9911, 0.0369, -10.9470, 0.0000},
    {1.4650, 0.9173, 236.7858, 0.0000, -21.8939, 0.0000},
}};
inline constexpr std::array<std::array<ScoreColumn, 6>, 3> kArmaMse{{
    {{
        {2.1533, 0.9846, 131.1921, 0.2096, -4.4927, 0.0000},
        {2.2500, 0.9758, 89.5892, 0.9797, -1.8802, 0.0601},
        {2.0808, 0.9559, 126.7042, 0.2974, -2.0824, 0.0373},
        {2.0424, 0.9497, 151.5636, 0.0235, -1.3942, 0.1633},
        {2.1864, 0.9235, 115.9652, 0.5616, 0.5671, 0.5706},
        {1.7383, 0.8329, 123.9256, 0.3601, 0.8041, 0.4214},
    }},
    {{
        {2.0238, 0.9795, 147.9911, 0.0369, -10.9470, 0.0000},
        {2.0806, 0.9608, 135.1838, 0.1474, -6.8045, 0.0000},
        {2.1228, 0.9486, 141.2470, 0.0802, -4.1648, 0.0000},
        {2.2407, 0.9348, 108.3740, 0.7476, -3.2954, 0.0010},
        {2.0680, 0.9217, 109.9670, 0.7114, -0.9924, 0.3210},
        {2.8134, 0.8586, 111.9328, 0.6642, -1.0051, 0.3149},
    }},
    {{
        {1.4650, 0.9173, 236.7858, 0.0000, -21.8939, 0.0000},
        {1.6371, 0.8782, 269.5677, 0.0000, -15.2205, 0.0000},
        {1.7735, 0.8527, 184.8755, 0.0001, -10.8504, 0.0000},
        {1.8615, 0.8691, 161.1613, 0.0061, -7.6048, 0.0000},
        {1.8197, 0.8503, 157.9526, 0.0098, -6.6636, 0.0000},
        {2.7300, 0.8322, 111.9328, 0.6642, -1.8092, 0.0704},
    }},
}};
inline constexpr double kArmaOrderingFraction = 0.9;
inline constexpr double kArmaAr1PermTestMaxP = 1e-3;
inline constexpr double kArmaArma22RunsMaxP = 1e-2;

}  // namespace tscx::reference
