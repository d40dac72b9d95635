#pragma once

#include <ostream>
#include <string>

#include "ncp/config.hpp"
#include "ncp/cotangent.hpp"
#include "ncp/kibler.hpp"
#include "ncp/trajectory.hpp"

namespace ncp {

/// Header row `t,r,theta,phi,x,y,z`, then one row per sample, %.15g.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Parses a file produced by write_trajectory_csv.
Trajectory read_trajectory_csv(std::istream& in);

/// Object with a "metadata" header (parameters, potential, sampling) and a
/// "samples" array of {t, r, theta, phi, x, y, z} objects.
void write_trajectory_json(std::ostream& out, const Trajectory& traj, const ModelConfig& config,
                           PotentialKind kind, int n_samples, double angle_max);

/// Two-panel orthographic projection (xz left, xy right), polylines on a
/// fixed viewport scaled to the largest |coordinate|.
void write_trajectory_svg(std::ostream& out, const Trajectory& traj);

std::string cone_json(const EllipticCone& cone);
std::string quadric_json(const QuadricSurface& quadric);

}  // namespace ncp
