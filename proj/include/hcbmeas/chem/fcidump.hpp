// Copyright 2026 The hcbmeas Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hcbmeas/chem/integral_tensors.hpp"

namespace hcbmeas::chem {

class FcidumpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses FCIDUMP text. Records are "value i j k l" with 1-based chemist
/// labels; "value i j 0 0" is h_ij and "value 0 0 0 0" the core energy.
/// Orbital-energy records ("value i 0 0 0") are ignored.
IntegralTensors parse_fcidump(std::string_view text);
IntegralTensors read_fcidump(const std::string& path);

std::string format_fcidump(const IntegralTensors& t);
void write_fcidump(const IntegralTensors& t, const std::string& path);

}  // namespace hcbmeas::chem
