// Copyright 2026 The Cyber Alliance Game Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// SVG and binary PPM rendering of phase grids.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cag/equilibrium.hpp"
#include "cag/phase_sweep.hpp"

namespace cag {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

std::string to_hex(Rgb color);  // "#1f77b4"

// Parses "#rrggbb". Throws Error{ValidationError}.
Rgb parse_rgb(std::string_view text);

class Palette {
 public:
  // Blue SS, green SA, red AS, orange AA, light gray NONE.
  Palette();

  Rgb profile_color(Profile profile) const {
    return profiles_[profile_index(profile)];
  }
  Rgb none_color() const noexcept { return none_; }

  void set_profile_color(Profile profile, Rgb color) {
    profiles_[profile_index(profile)] = color;
  }
  void set_none_color(Rgb color) { none_ = color; }

  // Applies an override keyed "SS", "SA", "AS", "AA" or "NONE".
  // Throws Error{ValidationError} on an unknown key.
  void set(std::string_view key, Rgb color);

  // One color for a singleton or empty tag; the member colors, in canonical
  // order, for a multi-equilibrium tag (rendered as stripes).
  std::vector<Rgb> colors(RegionTag tag) const;

  // Throws Error{ValidationError} when two singleton colors coincide.
  void validate() const;

 private:
  std::array<Rgb, 4> profiles_;
  Rgb none_;
};

// Throws Error{EmptyGrid}.
std::string render_svg(const PhaseGrid& grid, const Palette& palette);

// Binary P6 image, cell_pixels square pixels per cell, row 0 at q = 1.
// Throws Error{EmptyGrid, OutOfRange}.
std::string render_ppm(const PhaseGrid& grid, const Palette& palette,
                       int cell_pixels);

}  // namespace cag
