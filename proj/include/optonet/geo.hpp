#pragma once

#include <string_view>

#include "optonet/rng.hpp"

namespace optonet::geo {

inline constexpr double kEarthRadiusKm = 6371.0;
// Two nodes of a generated network are never placed closer than this.
inline constexpr double kMinNodeSpacingKm = 80.0;

struct GeoPoint {
    double latitude_deg = 0.0;
    double longitude_deg = 0.0;
};

// Validating constructor: finite, |lat| <= 90, |lon| <= 180. Throws InputError.
GeoPoint make_geo_point(double latitude_deg, double longitude_deg);

enum class RegionScale { large, medium, small };

std::string_view to_string(RegionScale scale);
RegionScale region_scale_from_string(std::string_view text);

// Axis-aligned lon/lat rectangle used for node placement.
struct Region {
    GeoPoint min_corner;
    GeoPoint max_corner;
    RegionScale scale = RegionScale::large;
};

// Validates min < max on both axes.
Region make_region(GeoPoint min_corner, GeoPoint max_corner, RegionScale scale);

// The three built-in placement rectangles (continental-US derived bounds).
Region builtin_region(RegionScale scale);

// Great-circle distance on a 6371 km sphere.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

// Geodesic distance -> deployed fibre length: short links take detours
// (factor 1.5), mid-range links are pinned to 1500 km, long links are
// closer to straight (factor 1.25). Continuous except at the 1000 km step.
double fibre_length_km(double haversine_km);

// Uniform point in the rectangle (uniform in lon/lat, not in area).
// Draws longitude then latitude, one uniform each.
GeoPoint sample_point(const Region& region, Rng& rng);

}  // namespace optonet::geo
