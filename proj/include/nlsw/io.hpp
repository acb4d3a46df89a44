// Copyright 2026 The nlsw Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>

#include "nlsw/bloch.hpp"
#include "nlsw/energy.hpp"
#include "nlsw/evolution.hpp"
#include "nlsw/reduced.hpp"
#include "nlsw/wave.hpp"

namespace nlsw {

using json = nlohmann::ordered_json;

json to_json(const WaveProfile& w);
WaveProfile profile_from_json(const json& j);
json to_json(const StabilityReport& r);
json to_json(const QuartetReport& r);
json to_json(const HessianReport& r);

std::string spectrum_csv(const BlochSpectrum& s);
std::string sweep_csv(const StabilityReport& r);
std::string trajectory_csv(const Trajectory& t);

// Shortest decimal form that round-trips.
std::string format_double(double x);

// Writes to a temporary file in the same directory, then renames.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace nlsw
