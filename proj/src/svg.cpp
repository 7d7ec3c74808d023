#include "pbc/svg.hpp"

#include "pbc/fitting.hpp"
#include "pbc/noneuclid.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace pbc::svg {

namespace {

using Vec2 = Eigen::Vector2d;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

// Maps configuration points to the drawing plane.
class Projection {
 public:
  Projection(Geometry g, int dim, const std::vector<Configuration>& configs) : geometry_(g) {
    if (g == Geometry::Euclidean && dim == 3) {
      u_ = Eigen::Vector3d(1, -1, 0).normalized();
      v_ = Eigen::Vector3d(-1, -1, 2).normalized();
    } else if (g == Geometry::Spherical) {
      // view from the mean direction of the first configuration
      Eigen::Vector3d axis = configs.front().points.rowwise().sum();
      axis.normalize();
      Eigen::Vector3d helper = std::abs(axis.z()) < 0.9 ? Eigen::Vector3d::UnitZ() : Eigen::Vector3d::UnitX();
      u_ = helper.cross(axis).normalized();
      v_ = axis.cross(u_);
    }
  }

  Vec2 operator()(const Vector<double>& p) const {
    switch (geometry_) {
      case Geometry::Euclidean:
        if (p.size() == 3) return {p.dot(Vector<double>(u_)), p.dot(Vector<double>(v_))};
        return {p(0), p(1)};
      case Geometry::Spherical: return {p.dot(Vector<double>(u_)), p.dot(Vector<double>(v_))};
      case Geometry::Hyperbolic: {
        const Vector<double> x = noneuclid::to_poincare(p);
        return {x(0), x(1)};
      }
    }
    return {0, 0};
  }

 private:
  Geometry geometry_;
  Eigen::Vector3d u_ = Eigen::Vector3d::UnitX();
  Eigen::Vector3d v_ = Eigen::Vector3d::UnitY();
};

class Canvas {
 public:
  Canvas(const RenderOptions& opts, Vec2 lo, Vec2 hi) : opts_(opts) {
    const double span = std::max({hi.x() - lo.x(), hi.y() - lo.y(), 1e-12});
    const double usable = std::min(opts.width, opts.height) * (1.0 - 2.0 * opts.margin);
    scale_ = usable / span;
    const Vec2 mid = (lo + hi) / 2;
    offset_ = Vec2(opts.width / 2.0 - mid.x() * scale_, opts.height / 2.0 + mid.y() * scale_);
  }

  Vec2 map(const Vec2& w) const { return {offset_.x() + w.x() * scale_, offset_.y() - w.y() * scale_}; }
  double scale() const { return scale_; }

 private:
  RenderOptions opts_;
  double scale_{1};
  Vec2 offset_{0, 0};
};

std::string geodesic_path(Geometry g, const Vector<double>& a, const Vector<double>& b,
                          const Projection& proj, const Canvas& canvas) {
  std::ostringstream d;
  if (g == Geometry::Hyperbolic) {
    const Vec2 u = proj(a), v = proj(b);
    const GeodesicArc arc = geodesic_arc(u, v);
    const Vec2 su = canvas.map(u), sv = canvas.map(v);
    d << "M " << num(su.x()) << ' ' << num(su.y());
    if (arc.straight) {
      d << " L " << num(sv.x()) << ' ' << num(sv.y());
    } else {
      const Vec2 ru = u - arc.center, rv = v - arc.center;
      const int sweep = ru.x() * rv.y() - ru.y() * rv.x() > 0 ? 1 : 0;
      d << " A " << num(arc.radius * canvas.scale()) << ' ' << num(arc.radius * canvas.scale())
        << " 0 0 " << sweep << ' ' << num(sv.x()) << ' ' << num(sv.y());
    }
    return d.str();
  }
  if (g == Geometry::Spherical) {
    // great-circle arc sampled by spherical interpolation
    const double omega = noneuclid::distance(noneuclid::Model::Spherical, a, b);
    const int segments = 32;
    for (int k = 0; k <= segments; ++k) {
      const double t = static_cast<double>(k) / segments;
      Vector<double> p = omega < 1e-12 ? a
                                        : Vector<double>((std::sin((1 - t) * omega) * a + std::sin(t * omega) * b) /
                                                         std::sin(omega));
      const Vec2 s = canvas.map(proj(p));
      d << (k == 0 ? "M " : " L ") << num(s.x()) << ' ' << num(s.y());
    }
    return d.str();
  }
  const Vec2 sa = canvas.map(proj(a)), sb = canvas.map(proj(b));
  d << "M " << num(sa.x()) << ' ' << num(sa.y()) << " L " << num(sb.x()) << ' ' << num(sb.y());
  return d.str();
}

}  // namespace

const char* generation_color(int generation) {
  const int k = ((generation - 1) % 8 + 8) % 8;
  return kPalette[static_cast<std::size_t>(k)];
}

GeodesicArc geodesic_arc(const Vec2& u, const Vec2& v) {
  GeodesicArc arc;
  const double cross = u.x() * v.y() - u.y() * v.x();
  if (std::abs(cross) <= 1e-12 * std::max(1e-300, u.norm() * v.norm())) {
    arc.straight = true;
    return arc;
  }
  // c . u = (|u|^2 + 1) / 2 and c . v = (|v|^2 + 1) / 2
  Eigen::Matrix2d m;
  m << u.x(), u.y(), v.x(), v.y();
  const Vec2 rhs((u.squaredNorm() + 1) / 2, (v.squaredNorm() + 1) / 2);
  arc.center = m.partialPivLu().solve(rhs);
  arc.radius = std::sqrt(std::max(0.0, arc.center.squaredNorm() - 1));
  return arc;
}

std::string render_svg(const std::vector<Configuration>& configs, const RenderOptions& options) {
  if (configs.empty()) throw Error(ErrorCode::ValidationError, "nothing to render");
  const Geometry g = configs.front().geometry;
  const int dim = configs.front().dim;
  for (const auto& c : configs)
    if (c.geometry != g || c.dim != dim)
      throw Error(ErrorCode::ModelMismatch, "configurations to render differ in geometry");
  if (!(dim == 2 || (dim == 3 && g == Geometry::Euclidean)))
    throw Error(ErrorCode::UnsupportedDimension,
                "rendering supports d = 2 in every geometry and d = 3 Euclidean");

  const Projection proj(g, dim, configs);

  // Perspectivity centers for generation pairs two apart.
  struct Fan {
    std::size_t from, to;
    PerspectivityResult fit;
  };
  std::vector<Fan> fans;
  if (options.perspectivity_lines) {
    for (std::size_t i = 0; i < configs.size(); ++i)
      for (std::size_t j = 0; j < configs.size(); ++j)
        if (configs[j].generation == configs[i].generation + 2) {
          try {
            fans.push_back({i, j, perspectivity(configs[i], configs[j])});
          } catch (const Error&) {
          }
        }
  }

  Vec2 lo, hi;
  if (g == Geometry::Euclidean) {
    lo = Vec2::Constant(std::numeric_limits<double>::infinity());
    hi = -lo;
    for (const auto& c : configs)
      for (Eigen::Index i = 0; i < c.size(); ++i) {
        const Vec2 p = proj(c.points.col(i));
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
      }
    const double extent = (hi - lo).maxCoeff();
    for (const auto& f : fans)
      if (f.fit.kind == CenterKind::Ordinary) {
        const Vec2 w = proj(f.fit.center);
        if ((w - (lo + hi) / 2).norm() <= 3 * extent) {
          lo = lo.cwiseMin(w);
          hi = hi.cwiseMax(w);
        }
      }
  } else {
    lo = Vec2(-1, -1);
    hi = Vec2(1, 1);
  }
  const Canvas canvas(options, lo, hi);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
      << options.height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\"" << options.height
      << "\" fill=\"white\"/>\n";

  if (g != Geometry::Euclidean) {
    const Vec2 c0 = canvas.map(Vec2(0, 0));
    out << "<circle class=\"boundary\" cx=\"" << num(c0.x()) << "\" cy=\"" << num(c0.y())
        << "\" r=\"" << num(canvas.scale()) << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
  }

  const double stroke = 0.005 * std::min(options.width, options.height);
  for (const auto& f : fans) {
    const auto& a = configs[f.from];
    const auto& b = configs[f.to];
    const bool through_center =
        f.fit.kind == CenterKind::Ordinary && (g != Geometry::Euclidean || dim == 2 || dim == 3);
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      std::string d;
      if (through_center) {
        d = geodesic_path(g, a.points.col(i), f.fit.center, proj, canvas) + ' ' +
            geodesic_path(g, b.points.col(i), f.fit.center, proj, canvas);
      } else {
        d = geodesic_path(g, a.points.col(i), b.points.col(i), proj, canvas);
      }
      out << "<path class=\"perspectivity\" d=\"" << d
          << "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"2,2\" stroke-width=\""
          << num(stroke) << "\"/>\n";
    }
    if (f.fit.kind == CenterKind::Ordinary) {
      const Vec2 w = canvas.map(proj(f.fit.center));
      out << "<circle class=\"center\" cx=\"" << num(w.x()) << "\" cy=\"" << num(w.y()) << "\" r=\""
          << num(2 * stroke) << "\" fill=\"black\"/>\n";
    }
  }

  for (const auto& c : configs) {
    const char* color = generation_color(c.generation);
    out << "<g class=\"generation\" data-generation=\"" << c.generation << "\" stroke=\"" << color
        << "\" fill=\"none\" stroke-width=\"" << num(stroke) << "\">\n";
    const Eigen::Index n = c.size();
    if (g == Geometry::Euclidean && dim == 2) {
      out << "<polygon points=\"";
      for (Eigen::Index i = 0; i < n; ++i) {
        const Vec2 s = canvas.map(proj(c.points.col(i)));
        out << (i ? " " : "") << num(s.x()) << ',' << num(s.y());
      }
      out << "\"/>\n";
    } else if (g == Geometry::Euclidean) {
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
          out << "<path d=\"" << geodesic_path(g, c.points.col(i), c.points.col(j), proj, canvas)
              << "\"/>\n";
    } else {
      for (Eigen::Index i = 0; i < n; ++i)
        out << "<path d=\"" << geodesic_path(g, c.points.col(i), c.points.col((i + 1) % n), proj, canvas)
            << "\"/>\n";
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const Vec2 s = canvas.map(proj(c.points.col(i)));
      out << "<circle class=\"vertex\" cx=\"" << num(s.x()) << "\" cy=\"" << num(s.y()) << "\" r=\""
          << num(3 * stroke) << "\" fill=\"" << color << "\" stroke=\"none\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace pbc::svg
