#pragma once

// SVG figures of evaluated constructions. Coordinates are computed exactly and
// only rounded when written out; the exact values go into a comment block.

#include <stdexcept>
#include <string>
#include <vector>

#include "bfly/dsl.hpp"

namespace bfly::render {

enum class Style { construction, result, highlight };

const char* style_class(Style s);

struct ScenePoint {
    std::string name;
    Point<Rational> at;
    Style style = Style::construction;
};

struct SceneSegment {
    Point<Rational> from, to;
    Style style = Style::construction;
};

struct SceneLine {
    std::string name;
    Line<Rational> line;
    Style style = Style::construction;
};

struct SceneCircle {
    std::string name;
    Circle<Rational> circle;
    Style style = Style::construction;
};

struct Scene {
    std::string title;
    std::vector<ScenePoint> points;
    std::vector<SceneSegment> segments;
    std::vector<SceneLine> lines;
    std::vector<SceneCircle> circles;  // only circles with positive squared radius are drawn

    bool empty() const { return points.empty() && segments.empty() && lines.empty() && circles.empty(); }
};

class EmptyScene : public std::invalid_argument {
public:
    EmptyScene() : std::invalid_argument("EmptyScene: nothing to draw") {}
};

/// Named points, lines and circles of the instance. Points named in assertions
/// are results; segments and objects that assertions compare are highlighted.
Scene scene_from(const dsl::Construction& c, const dsl::Instance& inst, std::string title = {});

/// Shortest decimal string within 1e-6 of x ("-0" never appears).
std::string decimal(const Rational& x);

/// Standalone SVG 1.1 document. Throws EmptyScene, std::invalid_argument for width < 64.
std::string render_svg(const Scene& scene, int width_px = 640);

} // namespace bfly::render
