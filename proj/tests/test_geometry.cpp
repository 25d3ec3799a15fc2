#include <cmath>
#include <random>

#include "doctest.h"
#include "fsosn/errors.hpp"
#include "fsosn/geometry.hpp"

using namespace fsosn;

namespace {

// Point on a sphere of the given radius from latitude/longitude in radians.
Vec3 on_sphere(double radius, double lat, double lon) {
    return {radius * std::cos(lat) * std::cos(lon), radius * std::cos(lat) * std::sin(lon), radius * std::sin(lat)};
}

}  // namespace

TEST_CASE("distance") {
    CHECK(distance({0, 0, 0}, {3, 4, 0}) == doctest::Approx(5.0));
    const Vec3 p{1234.5, -77.0, 6000.25};
    CHECK(distance(p, p) == 0.0);

    // Neighbouring slots of a 66-satellite ring at 6,928 km.
    const double step = 2.0 * kPi / 66.0;
    const double chord = distance(on_sphere(6928.0, 0.0, 0.0), on_sphere(6928.0, 0.0, step));
    CHECK(chord == doctest::Approx(659.2950256537732).epsilon(1e-12));
    CHECK(std::abs(chord - 659.5) <= 1.0);
}

TEST_CASE("distance is a metric on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-8000.0, 8000.0);
    for (int i = 0; i < 2000; ++i) {
        const Vec3 a{coord(rng), coord(rng), coord(rng)};
        const Vec3 b{coord(rng), coord(rng), coord(rng)};
        const Vec3 c{coord(rng), coord(rng), coord(rng)};
        CHECK(distance(a, b) >= 0.0);
        CHECK(distance(a, b) == distance(b, a));
        CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-9);
    }
}

TEST_CASE("line of sight") {
    const double occlusion = 6378.0 + 80.0;
    SUBCASE("antipodal satellites are blocked") {
        CHECK_FALSE(has_line_of_sight({6928, 0, 0}, {-6928, 0, 0}, occlusion));
    }
    SUBCASE("coincident points see each other") {
        CHECK(has_line_of_sight({6928, 0, 0}, {6928, 0, 0}, occlusion));
    }
    SUBCASE("5,000 km chord clears the 80 km layer") {
        // Half-angle of a 5,000 km chord at radius 6,928 km.
        const double half = std::asin(2500.0 / 6928.0);
        const Vec3 p = on_sphere(6928.0, 0.0, -half);
        const Vec3 q = on_sphere(6928.0, 0.0, half);
        CHECK(distance(p, q) == doctest::Approx(5000.0));
        // Closest approach sqrt(6928^2 - 2500^2) = 6461.2 km > 6458 km.
        CHECK(has_line_of_sight(p, q, occlusion));
        CHECK_FALSE(has_line_of_sight(p, q, 6462.0));
    }
    SUBCASE("endpoint inside the occlusion sphere") {
        CHECK_THROWS_AS(has_line_of_sight({6400, 0, 0}, {6928, 0, 0}, occlusion), DomainError);
    }
}

TEST_CASE("line of sight is symmetric and agrees with the grazing range") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> lat(-kPi / 2, kPi / 2);
    std::uniform_real_distribution<double> lon(-kPi, kPi);
    const double range = max_lisl_range(550.0, 80.0);
    int visible = 0;
    for (int i = 0; i < 5000; ++i) {
        const Vec3 p = on_sphere(6928.0, lat(rng), lon(rng));
        const Vec3 q = on_sphere(6928.0, lat(rng), lon(rng));
        const bool los = has_line_of_sight(p, q, 6458.0);
        CHECK(los == has_line_of_sight(q, p, 6458.0));
        const double d = distance(p, q);
        if (std::abs(d - range) < 1e-6) continue;
        CHECK(los == (d <= range));
        visible += los ? 1 : 0;
    }
    CHECK(visible > 0);
}

TEST_CASE("max LISL range") {
    CHECK(std::abs(max_lisl_range(550.0, 80.0) - 5016.0) <= 1.0);
    CHECK(max_lisl_range(550.0, 550.0) == 0.0);
    CHECK(max_lisl_range(550.0, 0.0) == doctest::Approx(5410.471328821547).epsilon(1e-12));

    double previous = 0.0;
    for (double alt = 100.0; alt <= 2000.0; alt += 50.0) {
        const double r = max_lisl_range(alt, 80.0);
        CHECK(r > previous);
        previous = r;
    }
    previous = max_lisl_range(550.0, 0.0) + 1.0;
    for (double clearance = 0.0; clearance <= 500.0; clearance += 25.0) {
        const double r = max_lisl_range(550.0, clearance);
        CHECK(r < previous);
        previous = r;
    }
}

TEST_CASE("great circle distance") {
    CHECK(great_circle_distance({12.0, 34.0}, {12.0, 34.0}, 6378.0) == 0.0);
    CHECK(great_circle_distance({0.0, 0.0}, {0.0, 180.0}, 6378.0) == doctest::Approx(kPi * 6378.0));
    // Nearly antipodal pair stays finite and close to half the circumference.
    CHECK(great_circle_distance({0.0, 0.0}, {1e-9, 180.0}, 6378.0) == doctest::Approx(kPi * 6378.0));

    const double toronto_istanbul = great_circle_distance({43.6489, -79.3817}, {41.1065, 29.0278}, 6378.0);
    CHECK(toronto_istanbul == doctest::Approx(8197.717182483897).epsilon(1e-9));
    CHECK(std::abs(toronto_istanbul - 8198.0) <= 0.01 * 8198.0);
}

TEST_CASE("latitude") {
    CHECK(latitude_of({6378, 0, 0}) == 0.0);
    CHECK(latitude_of({0, 0, 6928}) == doctest::Approx(90.0));
    CHECK(latitude_of({0, 0, -10}) == doctest::Approx(-90.0));
    CHECK_THROWS_AS(latitude_of({0, 0, 0}), DomainError);
}

TEST_CASE("elevation") {
    const Vec3 station{6378, 0, 0};
    CHECK(elevation_deg(station, {7000, 0, 0}) == doctest::Approx(90.0));
    CHECK(elevation_deg(station, {6378, 100, 0}) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(elevation_deg(station, {6000, 500, 0}) < 0.0);
}

TEST_CASE("propagation delay") {
    CHECK(propagation_delay_ms(299.792458, 299'792'458.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(propagation_delay_ms(0.0, 299'792'458.0) == 0.0);
}

TEST_CASE("physical constants validation") {
    PhysicalConstants c;
    CHECK_NOTHROW(c.validate());
    c.node_delay_ms = 0.0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
}
