#pragma once

// Closed-form single-cavity dressed states of the effective model and the
// A = 0 two-cavity level gaps built from them.

#include <utility>
#include <vector>

#include "jcdimer/model.hpp"

namespace jcdimer {

enum class Branch { minus, plus };

struct DressedState {
  int n = 1;
  Branch branch = Branch::minus;
  double mixing_angle = 0.0;
  double excited_amplitude = 0.0;  // on |e, n-1>
  double ground_amplitude = 0.0;   // on |g, n>
};

// theta_n = atan2(2 sqrt(2) g sqrt(n), Delta + J), in (0, pi).
double mixing_angle(int n, const ModelParams& params);

// minus: (sin(theta/2), -cos(theta/2)); plus: (cos(theta/2), sin(theta/2)).
DressedState dressed_state(int n, Branch branch, const ModelParams& params);

// n omega_c + (Delta+J)/2 -/+ sqrt((Delta+J)^2 + 8 g^2 n)/2; zero for n = 0.
double dressed_energy(int n, Branch branch, const ModelParams& params);

struct GapSet {
  double dE1 = 0.0;
  double dE2 = 0.0;
  double dE3 = 0.0;
  double dE4 = 0.0;
};

// Gaps between the five A = 0 two-excitation levels, lowest first.
GapSet energy_gaps(const ModelParams& params);

struct GapRow {
  double J = 0.0;
  GapSet gaps;
};

// Uniform J grid from j_min to j_max (inclusive) at the detuning in `params`.
std::vector<GapRow> gap_curve(double j_min, double j_max, int resolution, const ModelParams& params);

// Every sum E^{k,b1} + E^{N-k,b2} over k and branches, with multiplicity, sorted
// ascending. Equals the A = 0 spectrum of the effective Hamiltonian.
std::vector<double> decoupled_sector_energies(const ModelParams& params);

}  // namespace jcdimer
