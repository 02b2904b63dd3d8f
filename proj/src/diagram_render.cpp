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

#include "cag/diagram_render.hpp"

#include <algorithm>
#include <cstdio>

#include "cag/error.hpp"
#include "cag/format.hpp"

namespace cag {
namespace {

constexpr double kPlotSize = 480.0;
constexpr double kLeft = 60.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;
constexpr double kLegendWidth = 180.0;
constexpr double kStripe = 4.0;
constexpr int kPixelStripe = 2;

void require_cells(const PhaseGrid& grid) {
  if (grid.p_count() == 0 || grid.q_count() == 0) {
    throw Error(ErrorCode::kEmptyGrid, "nothing to render");
  }
}

std::string num(double v) { return fixed(v, 4); }

std::string pattern_id(RegionTag tag) {
  std::string id = "stripe-" + tag.str();
  std::replace(id.begin(), id.end(), '+', '-');
  return id;
}

std::string fill_for(RegionTag tag, const Palette& palette) {
  const auto colors = palette.colors(tag);
  if (colors.size() == 1) return to_hex(colors.front());
  return "url(#" + pattern_id(tag) + ")";
}

// Legend order: mask ascending, NONE last.
std::vector<RegionTag> legend_order(std::vector<RegionTag> tags) {
  std::sort(tags.begin(), tags.end(), [](RegionTag a, RegionTag b) {
    const int ka = a.empty() ? 16 : a.mask();
    const int kb = b.empty() ? 16 : b.mask();
    return ka < kb;
  });
  return tags;
}

}  // namespace

std::string to_hex(Rgb color) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", color.r, color.g, color.b);
  return buf;
}

Rgb parse_rgb(std::string_view text) {
  auto hex = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (text.size() != 7 || text[0] != '#') {
    throw Error(ErrorCode::kValidationError,
                "color \"" + std::string(text) + "\" is not #rrggbb");
  }
  std::array<std::uint8_t, 3> channels{};
  for (std::size_t c = 0; c < 3; ++c) {
    const int hi = hex(text[1 + 2 * c]);
    const int lo = hex(text[2 + 2 * c]);
    if (hi < 0 || lo < 0) {
      throw Error(ErrorCode::kValidationError,
                  "color \"" + std::string(text) + "\" is not #rrggbb");
    }
    channels[c] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return {channels[0], channels[1], channels[2]};
}

Palette::Palette()
    : profiles_{{{31, 119, 180}, {44, 160, 44}, {214, 39, 40}, {255, 127, 14}}},
      none_{220, 220, 220} {}

void Palette::set(std::string_view key, Rgb color) {
  if (key == "NONE") {
    none_ = color;
    return;
  }
  for (const Profile& profile : kProfiles) {
    if (key == profile_tag(profile)) {
      set_profile_color(profile, color);
      return;
    }
  }
  throw Error(ErrorCode::kValidationError,
              "unknown palette key \"" + std::string(key) + "\"");
}

std::vector<Rgb> Palette::colors(RegionTag tag) const {
  if (tag.empty()) return {none_};
  std::vector<Rgb> out;
  for (const Profile& profile : tag.profiles()) {
    out.push_back(profile_color(profile));
  }
  return out;
}

void Palette::validate() const {
  for (std::size_t a = 0; a < profiles_.size(); ++a) {
    for (std::size_t b = a + 1; b < profiles_.size(); ++b) {
      if (profiles_[a] == profiles_[b]) {
        throw Error(ErrorCode::kValidationError,
                    profile_tag(kProfiles[a]) + " and " +
                        profile_tag(kProfiles[b]) + " share color " +
                        to_hex(profiles_[a]));
      }
    }
  }
}

std::string render_svg(const PhaseGrid& grid, const Palette& palette) {
  require_cells(grid);
  const double cell_w = kPlotSize / static_cast<double>(grid.p_count());
  const double cell_h = kPlotSize / static_cast<double>(grid.q_count());
  const double width = kLeft + kPlotSize + kLegendWidth;
  const double height = kTop + kPlotSize + kBottom;
  const auto tags = legend_order(grid.tags());

  std::string out;
  out.reserve(grid.cells().size() * 96 + 4096);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " +
         num(width) + " " + num(height) + "\">\n";

  out += "<defs>\n";
  for (RegionTag tag : tags) {
    const auto colors = palette.colors(tag);
    if (colors.size() < 2) continue;
    const double period = kStripe * static_cast<double>(colors.size());
    out += "<pattern id=\"" + pattern_id(tag) +
           "\" patternUnits=\"userSpaceOnUse\" width=\"" + num(period) +
           "\" height=\"" + num(period) +
           "\" patternTransform=\"rotate(45)\">\n";
    for (std::size_t k = 0; k < colors.size(); ++k) {
      out += "<rect x=\"" + num(kStripe * static_cast<double>(k)) +
             "\" y=\"0.0000\" width=\"" + num(kStripe) + "\" height=\"" +
             num(period) + "\" fill=\"" + to_hex(colors[k]) + "\"/>\n";
    }
    out += "</pattern>\n";
  }
  out += "</defs>\n";

  out += "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t i = 0; i < grid.p_count(); ++i) {
    const std::string x = num(kLeft + static_cast<double>(i) * cell_w);
    for (std::size_t j = 0; j < grid.q_count(); ++j) {
      const double y =
          kTop + static_cast<double>(grid.q_count() - 1 - j) * cell_h;
      out += "<rect class=\"cell\" x=\"" + x + "\" y=\"" + num(y) +
             "\" width=\"" + num(cell_w) + "\" height=\"" + num(cell_h) +
             "\" fill=\"" + fill_for(grid.cell(i, j).tag, palette) + "\"/>\n";
    }
  }
  out += "</g>\n";

  // Frame, ticks and axis labels.
  const double bottom = kTop + kPlotSize;
  out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(kPlotSize) + "\" height=\"" + num(kPlotSize) +
         "\" fill=\"none\" stroke=\"#000000\"/>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (double t : {0.0, 0.5, 1.0}) {
    const double x = kLeft + t * kPlotSize;
    const double y = bottom - t * kPlotSize;
    out += "<text x=\"" + num(x) + "\" y=\"" + num(bottom + 16.0) +
           "\" text-anchor=\"middle\">" + fixed(t, 1) + "</text>\n";
    out += "<text x=\"" + num(kLeft - 6.0) + "\" y=\"" + num(y + 4.0) +
           "\" text-anchor=\"end\">" + fixed(t, 1) + "</text>\n";
  }
  out += "<text class=\"axis-label\" x=\"" + num(kLeft + kPlotSize / 2.0) +
         "\" y=\"" + num(bottom + 38.0) + "\" text-anchor=\"middle\">p</text>\n";
  out += "<text class=\"axis-label\" x=\"" + num(kLeft - 40.0) + "\" y=\"" +
         num(kTop + kPlotSize / 2.0) + "\" text-anchor=\"middle\">q</text>\n";

  // Legend.
  const double legend_x = kLeft + kPlotSize + 20.0;
  for (std::size_t k = 0; k < tags.size(); ++k) {
    const double y = kTop + 10.0 + 22.0 * static_cast<double>(k);
    out += "<rect class=\"legend-swatch\" x=\"" + num(legend_x) + "\" y=\"" +
           num(y) + "\" width=\"14.0000\" height=\"14.0000\" fill=\"" +
           fill_for(tags[k], palette) + "\" stroke=\"#000000\"/>\n";
    out += "<text class=\"legend-label\" x=\"" + num(legend_x + 20.0) +
           "\" y=\"" + num(y + 11.0) + "\">" + tags[k].str() + "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string render_ppm(const PhaseGrid& grid, const Palette& palette,
                       int cell_pixels) {
  require_cells(grid);
  if (cell_pixels < 1) {
    throw Error(ErrorCode::kOutOfRange,
                "cell_pixels must be positive, got " +
                    std::to_string(cell_pixels));
  }
  const auto px = static_cast<std::size_t>(cell_pixels);
  const std::size_t width = grid.p_count() * px;
  const std::size_t height = grid.q_count() * px;
  std::string out = "P6\n" + std::to_string(width) + " " +
                    std::to_string(height) + "\n255\n";
  const std::size_t header = out.size();
  std::array<std::vector<Rgb>, 16> by_mask;
  for (std::uint8_t mask = 0; mask < 16; ++mask) {
    by_mask[mask] = palette.colors(RegionTag(mask));
  }
  out.resize(header + width * height * 3);

  std::size_t at = header;
  for (std::size_t y = 0; y < height; ++y) {
    const std::size_t j = grid.q_count() - 1 - y / px;
    for (std::size_t x = 0; x < width; ++x) {
      const auto& colors = by_mask[grid.cell(x / px, j).tag.mask()];
      const Rgb c = colors[((x + y) / kPixelStripe) % colors.size()];
      out[at++] = static_cast<char>(c.r);
      out[at++] = static_cast<char>(c.g);
      out[at++] = static_cast<char>(c.b);
    }
  }
  return out;
}

}  // namespace cag
