#include "ncp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace ncp {

namespace {

std::string fmt15(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

}  // namespace

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << "t,r,theta,phi,x,y,z\n";
    for (const auto& s : traj.samples) {
        out << fmt15(s.t) << ',' << fmt15(s.r) << ',' << fmt15(s.theta) << ',' << fmt15(s.phi)
            << ',' << fmt15(s.x) << ',' << fmt15(s.y) << ',' << fmt15(s.z) << '\n';
    }
}

Trajectory read_trajectory_csv(std::istream& in) {
    Trajectory traj;
    std::string line;
    if (!std::getline(in, line) || line != "t,r,theta,phi,x,y,z")
        throw std::runtime_error("trajectory CSV: bad header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TrajectorySample s{};
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", &s.t, &s.r, &s.theta, &s.phi,
                        &s.x, &s.y, &s.z) != 7)
            throw std::runtime_error("trajectory CSV: bad row: " + line);
        traj.samples.push_back(s);
    }
    return traj;
}

void write_trajectory_json(std::ostream& out, const Trajectory& traj, const ModelConfig& config,
                           PotentialKind kind, int n_samples, double angle_max) {
    nlohmann::json doc;
    doc["metadata"] = {
        {"potential", to_string(kind)},
        {"mu", config.params.mu},
        {"kappa", config.params.kappa},
        {"rho", config.params.rho},
        {"gamma", config.params.gamma},
        {"hbar", config.params.hbar},
        {"energy_abs", config.consts.energy_abs},
        {"alpha_theta", config.consts.alpha_theta},
        {"alpha_phi", config.consts.alpha_phi},
        {"n_samples", n_samples},
        {"angle_max", angle_max},
    };
    auto& rows = doc["samples"];
    rows = nlohmann::json::array();
    for (const auto& s : traj.samples) {
        rows.push_back({{"t", s.t},
                        {"r", s.r},
                        {"theta", s.theta},
                        {"phi", s.phi},
                        {"x", s.x},
                        {"y", s.y},
                        {"z", s.z}});
    }
    out << doc.dump(2) << '\n';
}

void write_trajectory_svg(std::ostream& out, const Trajectory& traj) {
    const int panel = 480, margin = 30;
    double extent = 0.0;
    for (const auto& s : traj.samples)
        extent = std::max({extent, std::fabs(s.x), std::fabs(s.y), std::fabs(s.z)});
    if (extent == 0.0) extent = 1.0;
    const double scale = (panel / 2.0 - margin) / extent;
    auto panel_polyline = [&](double cx, double cy, auto proj_u, auto proj_v) {
        out << "  <polyline fill=\"none\" stroke=\"#205080\" stroke-width=\"1\" points=\"";
        for (const auto& s : traj.samples)
            out << fmt15(cx + proj_u(s) * scale) << ',' << fmt15(cy - proj_v(s) * scale) << ' ';
        out << "\"/>\n";
    };
    const double w = 2 * panel, h = panel;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    out << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    for (int i = 0; i < 2; ++i) {
        const double cx = panel / 2.0 + i * panel, cy = panel / 2.0;
        out << "  <line x1=\"" << cx - panel / 2.0 + margin << "\" y1=\"" << cy << "\" x2=\""
            << cx + panel / 2.0 - margin << "\" y2=\"" << cy
            << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        out << "  <line x1=\"" << cx << "\" y1=\"" << margin << "\" x2=\"" << cx << "\" y2=\""
            << h - margin << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    panel_polyline(panel / 2.0, panel / 2.0, [](const TrajectorySample& s) { return s.x; },
                   [](const TrajectorySample& s) { return s.z; });
    panel_polyline(panel * 1.5, panel / 2.0, [](const TrajectorySample& s) { return s.x; },
                   [](const TrajectorySample& s) { return s.y; });
    out << "  <text x=\"" << panel / 2.0 << "\" y=\"" << margin - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">x-z</text>\n";
    out << "  <text x=\"" << panel * 1.5 << "\" y=\"" << margin - 10
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">x-y</text>\n";
    out << "</svg>\n";
}

std::string cone_json(const EllipticCone& cone) {
    nlohmann::json doc;
    doc["kind"] = "elliptic_cone";
    doc["theta_c"] = cone.theta_c;
    doc["theta_xz"] = cone.theta_xz;
    doc["theta_yz"] = cone.theta_yz;
    auto rows = nlohmann::json::array();
    for (const auto& row : cone.rotation) rows.push_back({row[0], row[1], row[2]});
    doc["rotation"] = rows;
    return doc.dump(2);
}

std::string quadric_json(const QuadricSurface& quadric) {
    nlohmann::json doc;
    switch (quadric.kind) {
        case QuadricKind::Ellipsoid: doc["kind"] = "ellipsoid"; break;
        case QuadricKind::HyperboloidTwoSheets: doc["kind"] = "hyperboloid_two_sheets"; break;
        case QuadricKind::Paraboloid: doc["kind"] = "paraboloid"; break;
    }
    doc["p"] = quadric.p;
    doc["q"] = quadric.q;
    doc["z_shift"] = quadric.z_shift;
    doc["a_xy"] = quadric.a_xy;
    doc["a_z"] = quadric.a_z;
    return doc.dump(2);
}

}  // namespace ncp
