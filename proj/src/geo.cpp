#include "optonet/geo.hpp"

#include <cmath>
#include <string>

#include "optonet/errors.hpp"

namespace optonet::geo {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
double radians(double degrees) { return degrees * (kPi / 180.0); }
}  // namespace

GeoPoint make_geo_point(double latitude_deg, double longitude_deg) {
    if (!std::isfinite(latitude_deg) || !std::isfinite(longitude_deg)) {
        throw InputError("geo: non-finite coordinate");
    }
    if (latitude_deg < -90.0 || latitude_deg > 90.0) {
        throw InputError("geo: latitude " + std::to_string(latitude_deg) + " outside [-90, 90]");
    }
    if (longitude_deg < -180.0 || longitude_deg > 180.0) {
        throw InputError("geo: longitude " + std::to_string(longitude_deg) + " outside [-180, 180]");
    }
    return GeoPoint{latitude_deg, longitude_deg};
}

std::string_view to_string(RegionScale scale) {
    switch (scale) {
        case RegionScale::large: return "large";
        case RegionScale::medium: return "medium";
        case RegionScale::small: return "small";
    }
    throw ComputeError("geo: invalid RegionScale");
}

RegionScale region_scale_from_string(std::string_view text) {
    if (text == "large") return RegionScale::large;
    if (text == "medium") return RegionScale::medium;
    if (text == "small") return RegionScale::small;
    throw InputError("geo: unknown region scale '" + std::string(text) + "'");
}

Region make_region(GeoPoint min_corner, GeoPoint max_corner, RegionScale scale) {
    make_geo_point(min_corner.latitude_deg, min_corner.longitude_deg);
    make_geo_point(max_corner.latitude_deg, max_corner.longitude_deg);
    if (!(min_corner.latitude_deg < max_corner.latitude_deg) ||
        !(min_corner.longitude_deg < max_corner.longitude_deg)) {
        throw InputError("geo: region corners must satisfy min < max on both axes");
    }
    return Region{min_corner, max_corner, scale};
}

Region builtin_region(RegionScale scale) {
    switch (scale) {
        case RegionScale::large:
            return make_region(GeoPoint{31.68, -124.86}, GeoPoint{48.1261, -67.39}, scale);
        case RegionScale::medium:
            return make_region(GeoPoint{31.68, -124.86}, GeoPoint{48.12, -96.12}, scale);
        case RegionScale::small:
            return make_region(GeoPoint{31.68, -124.86}, GeoPoint{39.90, -96.12}, scale);
    }
    throw ComputeError("geo: invalid RegionScale");
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = radians(a.latitude_deg);
    const double lat2 = radians(b.latitude_deg);
    const double dlat = radians(b.latitude_deg - a.latitude_deg);
    const double dlon = radians(b.longitude_deg - a.longitude_deg);
    const double s1 = std::sin(dlat / 2.0);
    const double s2 = std::sin(dlon / 2.0);
    double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
    // Guard fp noise before the sqrt/asin; h is a squared sine.
    if (h < 0.0) h = 0.0;
    if (h > 1.0) h = 1.0;
    return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

double fibre_length_km(double haversine_km) {
    if (!(haversine_km >= 0.0)) {
        throw InputError("geo: fibre length undefined for negative distance");
    }
    if (haversine_km < 1000.0) return 1.5 * haversine_km;
    if (haversine_km <= 1200.0) return 1500.0;
    return 1.25 * haversine_km;
}

GeoPoint sample_point(const Region& region, Rng& rng) {
    const double lon = rng.uniform(region.min_corner.longitude_deg, region.max_corner.longitude_deg);
    const double lat = rng.uniform(region.min_corner.latitude_deg, region.max_corner.latitude_deg);
    return GeoPoint{lat, lon};
}

}  // namespace optonet::geo
