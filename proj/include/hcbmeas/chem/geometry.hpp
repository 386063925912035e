// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hcbmeas::chem {

struct Atom {
  std::string element;
  Eigen::Vector3d position;  // Angstrom
};

enum class Shape { line, ring, square, random, custom };

std::string to_string(Shape shape);
Shape parse_shape(std::string_view text);

/// Nuclear framework of a molecule. Coordinates are in Angstrom.
struct Geometry {
  std::vector<Atom> atoms;
  Shape shape = Shape::custom;
  std::optional<std::uint64_t> seed;

  std::size_t size() const { return atoms.size(); }
  double min_distance() const;
};

/// Minimum separation accepted for any two atoms (Angstrom).
inline constexpr double kMinAtomDistance = 0.1;
/// Rejection radius used by the random-geometry generator (Angstrom).
inline constexpr double kRandomMinDistance = 0.8;

/// Builds a hydrogen cluster.
///
/// line:   atom i at (0, 0, i * spacing).
/// ring:   regular polygon with edge length `spacing` in the xy plane.
/// square: 2 x (n/2) rectangular ladder with edge `spacing` (n = 4 is the
///         square).
/// random: uniform placement in a cube of side spacing * n^(1/3) with
///         rejection below kRandomMinDistance; deterministic in `seed`.
Geometry build_geometry(int n, double spacing, Shape shape,
                        std::optional<std::uint64_t> seed = std::nullopt);

/// Throws std::invalid_argument if two atoms are closer than
/// kMinAtomDistance.
void validate(const Geometry& geometry);

/// XYZ text: optional "count" and comment lines, then "El x y z" rows.
Geometry parse_xyz(std::string_view text);
Geometry read_xyz(const std::string& path);
std::string format_xyz(const Geometry& geometry);

}  // namespace hcbmeas::chem
