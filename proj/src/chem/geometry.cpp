// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#include "hcbmeas/chem/geometry.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hcbmeas::chem {

std::string to_string(Shape shape) {
  switch (shape) {
    case Shape::line: return "line";
    case Shape::ring: return "ring";
    case Shape::square: return "square";
    case Shape::random: return "random";
    case Shape::custom: return "custom";
  }
  return "custom";
}

Shape parse_shape(std::string_view text) {
  if (text == "line" || text == "linear") return Shape::line;
  if (text == "ring" || text == "circular") return Shape::ring;
  if (text == "square") return Shape::square;
  if (text == "random" || text == "free") return Shape::random;
  if (text == "custom") return Shape::custom;
  throw std::invalid_argument("unknown geometry shape '" + std::string(text) +
                              "'");
}

double Geometry::min_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      best = std::min(best, (atoms[i].position - atoms[j].position).norm());
  return best;
}

void validate(const Geometry& geometry) {
  for (const auto& atom : geometry.atoms) {
    if (!atom.position.allFinite())
      throw std::invalid_argument("non-finite atom coordinate");
  }
  if (geometry.size() >= 2 && geometry.min_distance() <= kMinAtomDistance)
    throw std::invalid_argument("atoms closer than 0.1 Angstrom");
}

Geometry build_geometry(int n, double spacing, Shape shape,
                        std::optional<std::uint64_t> seed) {
  if (n < 2) throw std::invalid_argument("geometry needs at least 2 atoms");
  if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be > 0");
  if (shape != Shape::random && spacing <= 0.3)
    throw std::invalid_argument("spacing must exceed 0.3 Angstrom");

  Geometry geo;
  geo.shape = shape;
  geo.seed = seed;
  auto add = [&](double x, double y, double z) {
    geo.atoms.push_back({"H", Eigen::Vector3d(x, y, z)});
  };

  switch (shape) {
    case Shape::line:
      for (int i = 0; i < n; ++i) add(0.0, 0.0, i * spacing);
      break;
    case Shape::ring: {
      const double radius = spacing / (2.0 * std::sin(std::numbers::pi / n));
      for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / n;
        add(radius * std::cos(phi), radius * std::sin(phi), 0.0);
      }
      break;
    }
    case Shape::square:
      if (n % 2 != 0)
        throw std::invalid_argument("square shape needs an even atom count");
      // Walk around the ladder so consecutive atoms are neighbours.
      for (int i = 0; i < n / 2; ++i) add(i * spacing, 0.0, 0.0);
      for (int i = n / 2 - 1; i >= 0; --i) add(i * spacing, spacing, 0.0);
      break;
    case Shape::random: {
      if (!seed) throw std::invalid_argument("random shape needs a seed");
      std::mt19937_64 rng(*seed);
      const double side = spacing * std::cbrt(static_cast<double>(n));
      std::uniform_real_distribution<double> coord(0.0, side);
      int attempts = 0;
      while (static_cast<int>(geo.atoms.size()) < n) {
        if (++attempts > 100000)
          throw std::runtime_error("random geometry placement failed");
        Eigen::Vector3d trial(coord(rng), coord(rng), coord(rng));
        bool ok = true;
        for (const auto& atom : geo.atoms)
          if ((atom.position - trial).norm() < kRandomMinDistance) ok = false;
        if (ok) add(trial.x(), trial.y(), trial.z());
      }
      break;
    }
    case Shape::custom:
      throw std::invalid_argument("custom geometries come from XYZ input");
  }
  validate(geo);
  return geo;
}

Geometry parse_xyz(std::string_view text) {
  Geometry geo;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t expected = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first[0] == '#') continue;
    double x, y, z;
    if (fields >> x >> y >> z) {
      geo.atoms.push_back({first, Eigen::Vector3d(x, y, z)});
      continue;
    }
    // Count line, or the free-form comment after it.
    if (geo.atoms.empty() && line_no == 1 &&
        first.find_first_not_of("0123456789") == std::string::npos) {
      expected = std::stoul(first);
      if (std::getline(in, line)) ++line_no;
      continue;
    }
    throw std::invalid_argument("malformed XYZ line " +
                                std::to_string(line_no) + ": " + line);
  }
  if (expected != 0 && expected != geo.atoms.size())
    throw std::invalid_argument("XYZ atom count does not match header");
  validate(geo);
  return geo;
}

Geometry read_xyz(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_xyz(buffer.str());
}

std::string format_xyz(const Geometry& geometry) {
  std::ostringstream out;
  out << geometry.size() << "\n" << to_string(geometry.shape) << "\n";
  out << std::fixed << std::setprecision(10);
  for (const auto& atom : geometry.atoms)
    out << atom.element << " " << atom.position.x() << " "
        << atom.position.y() << " " << atom.position.z() << "\n";
  return out.str();
}

}  // namespace hcbmeas::chem
