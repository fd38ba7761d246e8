#include "bfly/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace bfly::render {

const char* style_class(Style s) {
    switch (s) {
    case Style::construction: return "construction";
    case Style::result: return "result";
    case Style::highlight: return "highlight";
    }
    return "construction";
}

std::string decimal(const Rational& x) {
    // Smallest number of fractional digits whose rounding lies within 1e-6.
    const Rational tolerance(BigInt(1), BigInt(1000000));
    BigInt scale = 1;
    for (int digits = 0;; ++digits, scale *= 10) {
        const mpq_class scaled = x.raw() * mpq_class(scale);
        // Round half away from zero.
        mpz_class n = scaled.get_num() * 2 + (sgn(scaled) >= 0 ? scaled.get_den() : -scaled.get_den());
        n /= scaled.get_den() * 2;  // truncating division
        if (digits < 6 && (Rational(n, scale) - x).abs() > tolerance)
            continue;
        const bool negative = sgn(n) < 0;
        std::string s = mpz_class(abs(n)).get_str();
        if (digits > 0) {
            if (s.size() <= static_cast<std::size_t>(digits))
                s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
            s.insert(s.size() - static_cast<std::size_t>(digits), ".");
            while (s.back() == '0')
                s.pop_back();
            if (s.back() == '.')
                s.pop_back();
        }
        return negative && s != "0" ? "-" + s : s;
    }
}

namespace {

using Pt = Point<Rational>;

struct Collector {
    const dsl::Instance& inst;
    Scene scene;

    ScenePoint* find_point(const std::string& name) {
        for (auto& p : scene.points)
            if (p.name == name)
                return &p;
        return nullptr;
    }

    void highlight_segment(const Pt& from, const Pt& to) {
        if (from != to)
            scene.segments.push_back({from, to, Style::highlight});
    }

    // Every line(X, Y) between named points is drawn as the segment XY.
    void collect_segments(const dsl::Expr& e) {
        if (e.kind == dsl::Expr::Kind::call && e.text == "line" &&
            e.args[0].kind == dsl::Expr::Kind::identifier && e.args[1].kind == dsl::Expr::Kind::identifier) {
            const Pt p = point(e.args[0]), q = point(e.args[1]);
            for (const auto& s : scene.segments)
                if ((s.from == p && s.to == q) || (s.from == q && s.to == p))
                    return;
            if (p != q)
                scene.segments.push_back({p, q, Style::construction});
            return;
        }
        for (const auto& a : e.args)
            collect_segments(a);
    }

    void mark(const dsl::Expr& arg) {
        using K = dsl::Expr::Kind;
        if (arg.kind == K::identifier) {
            if (ScenePoint* p = find_point(arg.text)) {
                if (p->style == Style::construction)
                    p->style = Style::result;
                return;
            }
            for (auto& l : scene.lines)
                if (l.name == arg.text)
                    l.style = Style::highlight;
            for (auto& c : scene.circles)
                if (c.name == arg.text)
                    c.style = Style::highlight;
            return;
        }
        if (arg.kind == K::call && arg.text == "line") {
            highlight_segment(point(arg.args[0]), point(arg.args[1]));
            for (const auto& a : arg.args)
                mark(a);
            return;
        }
        const auto value = dsl::evaluate_expr(arg, inst.env);
        if (const auto* l = std::get_if<Line<Rational>>(&value))
            scene.lines.push_back({"", *l, Style::highlight});
        else if (const auto* c = std::get_if<Circle<Rational>>(&value))
            add_circle("", *c, Style::highlight);
    }

    Pt point(const dsl::Expr& e) const { return std::get<Pt>(dsl::evaluate_expr(e, inst.env)); }

    void add_circle(const std::string& name, const Circle<Rational>& c, Style style) {
        const Rational r2 = (c.d * c.d + c.e * c.e) / Rational(4) - c.f;
        if (r2.sign() > 0)
            scene.circles.push_back({name, c, style});
    }
};

} // namespace

Scene scene_from(const dsl::Construction& c, const dsl::Instance& inst, std::string title) {
    Collector col{inst, {}};
    col.scene.title = std::move(title);
    for (const auto& s : c.statements) {
        const auto* d = std::get_if<dsl::Definition>(&s);
        if (!d)
            continue;
        const auto& value = inst.env.at(d->name);
        if (const auto* p = std::get_if<Pt>(&value))
            col.scene.points.push_back({d->name, *p, Style::construction});
        else if (const auto* l = std::get_if<Line<Rational>>(&value))
            col.scene.lines.push_back({d->name, *l, Style::construction});
        else if (const auto* circ = std::get_if<Circle<Rational>>(&value))
            col.add_circle(d->name, *circ, Style::construction);
        col.collect_segments(d->value);
    }
    for (const dsl::Assertion* a : c.assertions()) {
        if (a->predicate == dsl::Predicate::midpoint)
            col.highlight_segment(col.point(a->args[1]), col.point(a->args[2]));
        for (const auto& arg : a->args)
            col.mark(arg);
    }
    return std::move(col.scene);
}

namespace {

struct Viewport {
    Rational xmin, xmax, ymin, ymax;
    Rational scale;  // pixels per unit
    int width = 0, height = 0;

    Rational sx(const Rational& x) const { return (x - xmin) * scale; }
    Rational sy(const Rational& y) const { return (ymax - y) * scale; }
    bool contains(const Pt& p) const { return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax; }
};

/// A rational slightly above the radius; only used for the viewport.
Rational radius_bound(const Circle<Rational>& c) {
    const Rational cx = -c.d / Rational(2), cy = -c.e / Rational(2);
    const double r = std::sqrt((cx * cx + cy * cy - c.f).to_double());
    return Rational(BigInt(std::ceil(r * 1e6)), BigInt(1000000));
}

Viewport make_viewport(const Scene& scene, int width) {
    std::vector<Pt> pts;
    for (const auto& p : scene.points)
        pts.push_back(p.at);
    for (const auto& s : scene.segments) {
        pts.push_back(s.from);
        pts.push_back(s.to);
    }
    for (const auto& c : scene.circles) {
        const Pt center{-c.circle.d / Rational(2), -c.circle.e / Rational(2)};
        const Rational r = radius_bound(c.circle);
        pts.push_back({center.x - r, center.y - r});
        pts.push_back({center.x + r, center.y + r});
    }
    if (pts.empty())
        pts.push_back({});
    Viewport v;
    v.xmin = v.xmax = pts[0].x;
    v.ymin = v.ymax = pts[0].y;
    for (const auto& p : pts) {
        v.xmin = std::min(v.xmin, p.x);
        v.xmax = std::max(v.xmax, p.x);
        v.ymin = std::min(v.ymin, p.y);
        v.ymax = std::max(v.ymax, p.y);
    }
    // Keep the aspect ratio sane for flat figures, then add a 10% margin.
    Rational w = v.xmax - v.xmin, h = v.ymax - v.ymin;
    const Rational span = std::max({w, h, Rational(1)});
    const Rational floor_span = span / Rational(4);
    if (w < floor_span) {
        v.xmin -= (floor_span - w) / Rational(2);
        v.xmax += (floor_span - w) / Rational(2);
        w = floor_span;
    }
    if (h < floor_span) {
        v.ymin -= (floor_span - h) / Rational(2);
        v.ymax += (floor_span - h) / Rational(2);
        h = floor_span;
    }
    const Rational margin = span / Rational(10);
    v.xmin -= margin;
    v.xmax += margin;
    v.ymin -= margin;
    v.ymax += margin;
    w += margin * Rational(2);
    h += margin * Rational(2);
    v.width = width;
    v.scale = Rational(width) / w;
    const Rational hp = h * v.scale;
    v.height = std::max(1, static_cast<int>(std::lround(hp.to_double())));
    // Keep the vertical scale exact by trimming ymin to the rounded height.
    v.ymin = v.ymax - Rational(v.height) / v.scale;
    return v;
}

/// Exact clip of an infinite line to the viewport; false if it misses.
bool clip(const Line<Rational>& l, const Viewport& v, Pt& from, Pt& to) {
    std::vector<Pt> hits;
    auto add = [&](const Pt& p) {
        if (v.contains(p) && std::find(hits.begin(), hits.end(), p) == hits.end())
            hits.push_back(p);
    };
    if (!l.v.is_zero()) {
        for (const Rational& x : {v.xmin, v.xmax})
            add({x, -(l.u * x + l.w) / l.v});
    }
    if (!l.u.is_zero()) {
        for (const Rational& y : {v.ymin, v.ymax})
            add({-(l.v * y + l.w) / l.u, y});
    }
    if (hits.size() < 2)
        return false;
    std::sort(hits.begin(), hits.end(), [](const Pt& p, const Pt& q) {
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    from = hits.front();
    to = hits.back();
    return true;
}

std::string fixed(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    while (s.back() == '0')
        s.pop_back();
    if (s.back() == '.')
        s.pop_back();
    return s == "-0" ? "0" : s;
}

std::string comment_safe(std::string s) {
    for (std::size_t i; (i = s.find("--")) != std::string::npos;)
        s.replace(i, 2, "- -");
    return s;
}

std::string exact(const Pt& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const Scene& scene, int width_px) {
    if (width_px < 64)
        throw std::invalid_argument("render width must be at least 64 pixels");
    if (scene.empty())
        throw EmptyScene();
    const Viewport v = make_viewport(scene, width_px);
    auto X = [&](const Rational& x) { return decimal(v.sx(x)); };
    auto Y = [&](const Rational& y) { return decimal(v.sy(y)); };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << v.width << "\" height=\""
       << v.height << "\" viewBox=\"0 0 " << v.width << " " << v.height << "\">\n";

    std::ostringstream meta;
    meta << "exact values\n";
    if (!scene.title.empty())
        meta << "figure: " << scene.title << "\n";
    meta << "viewport: x in [" << v.xmin << ", " << v.xmax << "], y in [" << v.ymin << ", " << v.ymax << "]\n";
    for (const auto& p : scene.points)
        meta << "point " << p.name << " = " << exact(p.at) << "\n";
    for (const auto& l : scene.lines)
        meta << "line " << (l.name.empty() ? "_" : l.name) << ": (" << l.line.u << ")*x + (" << l.line.v
             << ")*y + (" << l.line.w << ") = 0\n";
    for (const auto& c : scene.circles)
        meta << "circle " << (c.name.empty() ? "_" : c.name) << ": x^2 + y^2 + (" << c.circle.d << ")*x + ("
             << c.circle.e << ")*y + (" << c.circle.f << ") = 0\n";
    os << "<!-- " << comment_safe(meta.str()) << "-->\n";

    os << "<style>\n"
          ".construction { stroke: #8a8a8a; stroke-width: 1; fill: none; }\n"
          ".result { stroke: #c0392b; stroke-width: 1.5; fill: none; }\n"
          ".highlight { stroke: #1f6fb2; stroke-width: 2.5; fill: none; }\n"
          ".point { fill: #222222; stroke: none; }\n"
          ".point.result { fill: #c0392b; }\n"
          ".label { font-family: sans-serif; font-size: 13px; fill: #222222; stroke: none; }\n"
          "</style>\n";
    if (!scene.title.empty())
        os << "<title>" << xml_escape(scene.title) << "</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << v.width << "\" height=\"" << v.height
       << "\" fill=\"#ffffff\" stroke=\"none\"/>\n";

    for (const auto& c : scene.circles) {
        const Rational cx = -c.circle.d / Rational(2), cy = -c.circle.e / Rational(2);
        const Rational r2 = cx * cx + cy * cy - c.circle.f;
        const double r = std::sqrt(r2.to_double()) * v.scale.to_double();
        os << "<circle class=\"" << style_class(c.style) << "\" cx=\"" << X(cx) << "\" cy=\"" << Y(cy)
           << "\" r=\"" << fixed(r) << "\"/>\n";
    }
    for (const auto& l : scene.lines) {
        Pt from, to;
        if (clip(l.line, v, from, to))
            os << "<line class=\"" << style_class(l.style) << "\" x1=\"" << X(from.x) << "\" y1=\""
               << Y(from.y) << "\" x2=\"" << X(to.x) << "\" y2=\"" << Y(to.y) << "\"/>\n";
    }
    for (const auto& s : scene.segments)
        os << "<line class=\"" << style_class(s.style) << "\" x1=\"" << X(s.from.x) << "\" y1=\""
           << Y(s.from.y) << "\" x2=\"" << X(s.to.x) << "\" y2=\"" << Y(s.to.y) << "\"/>\n";
    for (const auto& p : scene.points) {
        const std::string cls = p.style == Style::construction ? "point" : "point result";
        os << "<ellipse class=\"" << cls << "\" cx=\"" << X(p.at.x) << "\" cy=\"" << Y(p.at.y)
           << "\" rx=\"3\" ry=\"3\"/>\n";
    }
    for (const auto& p : scene.points)
        os << "<text class=\"label\" x=\"" << decimal(v.sx(p.at.x) + Rational(5)) << "\" y=\""
           << decimal(v.sy(p.at.y) - Rational(5)) << "\">" << xml_escape(p.name) << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace bfly::render
