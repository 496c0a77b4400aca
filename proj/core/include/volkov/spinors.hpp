#pragma once

#include "volkov/clifford.hpp"
#include "volkov/lorentz.hpp"

namespace volkov {

/// Particle (+) / antiparticle (-) branch label.
enum class Branch : int { particle = +1, antiparticle = -1 };

inline int sign(Branch b) { return static_cast<int>(b); }

/// Spin label s in {1, 2}; maps to the two-spinors
/// phi_1 = chi_2 = (1 0)^T, phi_2 = chi_1 = (0 1)^T.
enum class Spin : int { s1 = 1, s2 = 2 };

inline constexpr Spin both_spins[2] = {Spin::s1, Spin::s2};

/// Free particle/antiparticle bispinor, normalized to u^dag u = 1:
/// prefactor sqrt((p0+m)/(2 p0)), upper block phi_s and lower block
/// (p.sigma phi_s)/(p0+m) for the particle branch, mirrored for the
/// antiparticle branch.
BiSpinor free_spinor(const OnShellMomentum& p, Spin s, Branch branch);

/// Sum over spins of u u^dag. Cross-checked internally against the
/// closed form (slash(p) +- m) gamma^0 / (2 p0); throws std::logic_error
/// if the two constructions disagree beyond 1e-12.
SpinMatrix spinor_completeness(const OnShellMomentum& p, Branch branch);

/// The closed form (slash(p) +- m) gamma^0 / (2 p0) on its own.
SpinMatrix free_projector(const OnShellMomentum& p, Branch branch);

}  // namespace volkov
